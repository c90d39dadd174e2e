"""
Classe ModelCoefficients - Value Object pour un modèle de substitution
Principe: Immutabilité - Les coefficients d'un modèle ne changent pas une fois créés
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional


class Mode(Enum):
    """Mode de fonctionnement du thermostat : chauffe (ON) ou arrêt (OFF)."""
    ON = "ON"
    OFF = "OFF"

    def toggled(self) -> 'Mode':
        """Retourne le mode opposé."""
        return Mode.OFF if self is Mode.ON else Mode.ON


@dataclass(frozen=True)
class ModelCoefficients:
    """
    Coefficients d'un modèle exponentiel de chauffe et de refroidissement.

    Attributes:
        model_id: Identifiant unique du modèle (entier positif)
        k_on1: Écart de température asymptotique en chauffe (°C)
        k_on2: Taux de décroissance en chauffe (par minute)
        k_off1: Écart de température asymptotique à l'arrêt (°C)
        k_off2: Taux de décroissance à l'arrêt (par minute)
        condition: Étiquette libre de la condition environnementale (optionnel)
    """
    model_id: int
    k_on1: float
    k_on2: float
    k_off1: float
    k_off2: float
    condition: Optional[str] = None

    def __post_init__(self):
        """Vérifie les invariants des coefficients."""
        if isinstance(self.model_id, bool) or not isinstance(self.model_id, int):
            raise ValueError(f"Identifiant de modèle invalide: {self.model_id!r}")
        if self.model_id <= 0:
            raise ValueError(
                f"L'identifiant de modèle doit être positif (reçu {self.model_id})"
            )
        for name in ('k_on1', 'k_on2', 'k_off1', 'k_off2'):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise ValueError(
                    f"Coefficient {name} non positif pour le modèle "
                    f"{self.model_id}: {value}"
                )

    def max_step_excursion(self) -> float:
        """
        Retourne la plus grande variation de température en une minute
        depuis un ancrage neuf (chauffe ou refroidissement).
        """
        heating = -self.k_on1 * math.expm1(-self.k_on2)
        cooling = -self.k_off1 * math.expm1(-self.k_off2)
        return max(heating, cooling)

    def __str__(self) -> str:
        """Retourne une représentation textuelle du modèle."""
        label = f" [{self.condition}]" if self.condition else ""
        return (
            f"Modèle {self.model_id}{label}: k_on=({self.k_on1}, {self.k_on2}) "
            f"k_off=({self.k_off1}, {self.k_off2})"
        )
