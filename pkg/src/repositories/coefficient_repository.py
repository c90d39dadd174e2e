"""
CoefficientRepository - Repository pour les tables de coefficients des modèles
Pattern: Repository - Abstrait le format de stockage du registre
"""
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Dict, List, Union

from ..data_structures.model_registry import ModelRegistry
from ..models.coefficients import ModelCoefficients
from ..utils.csv_reader import read_csv, write_csv, FIRST_DATA_LINE

COLUMNS = ('model_id', 'k_on1', 'k_on2', 'k_off1', 'k_off2', 'condition')
REQUIRED_COLUMNS = COLUMNS[:5]


class CoefficientRepository(ABC):
    """
    Interface abstraite pour charger et enregistrer un registre de modèles.
    """

    @abstractmethod
    def load(self, path: Union[str, Path]) -> ModelRegistry:
        """Charge un registre depuis un document."""

    @abstractmethod
    def save(self, registry: ModelRegistry, path: Union[str, Path]) -> None:
        """Enregistre un registre dans un document."""


class CSVCoefficientRepository(CoefficientRepository):
    """
    Implémentation CSV : une ligne par modèle
    (model_id;k_on1;k_on2;k_off1;k_off2;condition).
    """

    def load(self, path: Union[str, Path]) -> ModelRegistry:
        """
        Charge un registre depuis un fichier CSV.

        Raises:
            FileNotFoundError: Si le fichier n'existe pas
            ValueError: Si le document est vide, mal formé, contient un
                identifiant dupliqué ou un coefficient non positif
        """
        rows = read_csv(path, required_columns=REQUIRED_COLUMNS)
        return parse_coefficient_rows(rows)

    def save(self, registry: ModelRegistry, path: Union[str, Path]) -> None:
        """Écrit le registre avec la précision complète des flottants."""
        write_csv(path, COLUMNS, (
            (c.model_id, repr(c.k_on1), repr(c.k_on2), repr(c.k_off1),
             repr(c.k_off2), c.condition or '')
            for c in registry
        ))


def parse_coefficient_rows(rows: List[Dict[str, str]]) -> ModelRegistry:
    """
    Construit un registre à partir des lignes d'une table de coefficients.

    Args:
        rows: Lignes lues par read_csv

    Returns:
        ModelRegistry contenant exactement les modèles listés

    Raises:
        ValueError: Ligne mal formée, coefficient non positif, identifiant
            dupliqué ou registre vide
    """
    models = []
    for index, row in enumerate(rows):
        line = index + FIRST_DATA_LINE
        try:
            coeffs = ModelCoefficients(
                model_id=int(row['model_id']),
                k_on1=float(row['k_on1']),
                k_on2=float(row['k_on2']),
                k_off1=float(row['k_off1']),
                k_off2=float(row['k_off2']),
                condition=(row.get('condition') or '').strip() or None,
            )
        except (TypeError, ValueError) as e:
            raise ValueError(f"Ligne {line}: {e}") from e
        models.append(coeffs)

    return ModelRegistry(models)
