"""
ConfigFactory - Factory pour créer les objets de configuration
Pattern: Factory - Centralise la fusion des valeurs par défaut et la validation
"""
from dataclasses import asdict, fields
from typing import Any, Dict, Optional

from ..config.config_manager import ConfigManager
from ..config.settings import GeneratorConfig, SimConfig, GAConfig

_SECTION_CLASSES = {
    'generator': GeneratorConfig,
    'ga': GAConfig,
    'simulation': SimConfig,
}


class ConfigFactory:
    """
    Factory pour créer GeneratorConfig, GAConfig et SimConfig.
    Les clés absentes prennent les valeurs de config.json, puis celles des dataclasses.
    """

    @staticmethod
    def _create(section: str, overrides: Optional[Dict[str, Any]]):
        """
        Crée la configuration d'une section.

        Args:
            section: Nom de la section
            overrides: Valeurs fournies par l'utilisateur (optionnel)

        Returns:
            Instance de la dataclass de la section

        Raises:
            ValueError: Si une clé est inconnue ou si un invariant est violé
        """
        cls = _SECTION_CLASSES[section]
        allowed = {f.name for f in fields(cls)}

        values = ConfigManager().get_section(section)
        values.update(overrides or {})

        unknown = sorted(set(values) - allowed)
        if unknown:
            raise ValueError(
                f"Champs inconnus dans la section '{section}': {', '.join(unknown)}"
            )

        try:
            return cls(**values)
        except TypeError as e:
            raise ValueError(f"Section '{section}' invalide: {e}") from e

    @staticmethod
    def create_generator_config(overrides: Optional[Dict[str, Any]] = None) -> GeneratorConfig:
        """Crée un GeneratorConfig à partir d'un dictionnaire."""
        return ConfigFactory._create('generator', overrides)

    @staticmethod
    def create_ga_config(overrides: Optional[Dict[str, Any]] = None) -> GAConfig:
        """Crée un GAConfig à partir d'un dictionnaire."""
        return ConfigFactory._create('ga', overrides)

    @staticmethod
    def create_sim_config(overrides: Optional[Dict[str, Any]] = None) -> SimConfig:
        """Crée un SimConfig à partir d'un dictionnaire."""
        return ConfigFactory._create('simulation', overrides)

    @staticmethod
    def from_document(document: Dict[str, Any]):
        """
        Crée les trois configurations depuis un document à sections.

        Args:
            document: Dictionnaire avec les sections optionnelles
                'generator', 'ga' et 'simulation'

        Returns:
            Tuple (GeneratorConfig, GAConfig, SimConfig)
        """
        unknown = sorted(set(document) - set(_SECTION_CLASSES) - {'logging'})
        if unknown:
            raise ValueError(f"Sections inconnues: {', '.join(unknown)}")
        return (
            ConfigFactory.create_generator_config(document.get('generator')),
            ConfigFactory.create_ga_config(document.get('ga')),
            ConfigFactory.create_sim_config(document.get('simulation')),
        )

    @staticmethod
    def default_document() -> Dict[str, Any]:
        """Retourne le document de configuration par défaut complet."""
        return {
            section: to_document(cls())
            for section, cls in _SECTION_CLASSES.items()
        }


def to_document(config) -> Dict[str, Any]:
    """Convertit une configuration en dictionnaire sérialisable en JSON."""
    document = asdict(config)
    for key, value in document.items():
        if isinstance(value, tuple):
            document[key] = list(value)
    return document
