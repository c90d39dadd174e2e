"""
CSV Reader - Utilitaire pour lire et écrire les fichiers CSV
Principe: DRY - Centralise la logique CSV (séparateur ';', ligne d'en-tête obligatoire)
"""
import csv
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Union

DELIMITER = ';'
FIRST_DATA_LINE = 2


def read_csv(file_path: Union[str, Path], delimiter: str = DELIMITER,
             required_columns: Optional[Sequence[str]] = None) -> List[Dict[str, str]]:
    """
    Lit un fichier CSV et retourne une liste de dictionnaires.

    La ligne i de la liste correspond à la ligne i + 2 du fichier.

    Args:
        file_path: Chemin vers le fichier CSV
        delimiter: Délimiteur utilisé dans le CSV (par défaut ';')
        required_columns: Colonnes que l'en-tête doit contenir

    Returns:
        Liste de dictionnaires où chaque clé est un nom de colonne

    Raises:
        FileNotFoundError: Si le fichier n'existe pas
        ValueError: Si le fichier est vide, sans en-tête attendu ou mal formaté
    """
    path = Path(file_path)

    if not path.exists():
        raise FileNotFoundError(f"Le fichier {file_path} n'existe pas")

    try:
        with open(path, 'r', encoding='utf-8', newline='') as file:
            reader = csv.DictReader(file, delimiter=delimiter)
            header = reader.fieldnames or []
            data = list(reader)
    except (csv.Error, UnicodeDecodeError) as e:
        raise ValueError(f"Erreur lors de la lecture du fichier CSV {file_path}: {e}") from e

    if not header:
        raise ValueError(f"Le fichier {file_path} est vide")

    missing = [column for column in (required_columns or []) if column not in header]
    if missing:
        raise ValueError(
            f"En-tête manquant ou incomplet dans {file_path}: "
            f"colonnes absentes {', '.join(missing)}"
        )

    if not data:
        raise ValueError(f"Le fichier {file_path} est vide")

    return data


def write_csv(file_path: Union[str, Path], header: Sequence[str],
              rows: Iterable[Sequence], delimiter: str = DELIMITER) -> None:
    """
    Écrit un fichier CSV avec une ligne d'en-tête.

    Args:
        file_path: Chemin du fichier à écrire (dossiers parents créés)
        header: Noms des colonnes
        rows: Lignes de valeurs
        delimiter: Délimiteur (par défaut ';')
    """
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as file:
        writer = csv.writer(file, delimiter=delimiter, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)
