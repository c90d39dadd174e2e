"""
ConfigManager - Singleton pour gérer la configuration
Pattern: Singleton - Une seule instance des valeurs par défaut dans l'application
"""
import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

SECTIONS = ('generator', 'ga', 'simulation')


def load_json_document(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Charge un document JSON de configuration.

    Args:
        path: Chemin du fichier

    Returns:
        Dictionnaire du document

    Raises:
        FileNotFoundError: Si le fichier n'existe pas
        ValueError: Si le document est mal formé ou n'est pas un objet JSON
    """
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Fichier de configuration non trouvé: {file_path}")

    try:
        with open(file_path, 'r', encoding='utf-8') as file:
            document = json.load(file)
    except json.JSONDecodeError as e:
        raise ValueError(
            f"Erreur de format dans le fichier {file_path}: {e}"
        ) from e

    if not isinstance(document, dict):
        raise ValueError(f"Le fichier {file_path} doit contenir un objet JSON")
    return document


class ConfigManager:
    """
    Gestionnaire de configuration utilisant le pattern Singleton.
    Charge config.json à la racine du projet et fournit les sections par défaut.
    """
    _instance: Optional['ConfigManager'] = None
    _config: Optional[Dict] = None

    def __new__(cls):
        """Implémentation du Singleton - retourne toujours la même instance."""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        """Initialise le gestionnaire (appelé une seule fois)."""
        if self._config is None:
            self._load_config()

    def _load_config(self) -> None:
        """Charge la configuration depuis le fichier config.json."""
        self._config = load_json_document(self.get_base_path() / 'config.json')

    def get_section(self, name: str) -> Dict[str, Any]:
        """
        Retourne une section de valeurs par défaut.

        Args:
            name: Nom de la section ('generator', 'ga' ou 'simulation')

        Returns:
            Copie du dictionnaire de la section (vide si absente)
        """
        if name not in SECTIONS:
            raise ValueError(f"Section de configuration inconnue: '{name}'")
        return dict(self._config.get(name, {}))

    def get_logging_level(self) -> str:
        """Retourne le niveau de journalisation configuré."""
        return self._config.get('logging', {}).get('level', 'INFO')

    def get_base_path(self) -> Path:
        """Retourne le chemin de base du projet."""
        return Path(__file__).parent.parent.parent
