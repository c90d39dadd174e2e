"""
Classes Trace, TraceSegment et FitResult - Séries temporelles de température
"""
import math
from dataclasses import dataclass
from typing import Tuple

from .coefficients import Mode

MIN_SEGMENT_SAMPLES = 3


@dataclass(frozen=True)
class Trace:
    """
    Signal de température échantillonné chaque minute.

    Attributes:
        values: Une température (°C) par minute simulée
        step: Pas d'échantillonnage en minutes (toujours 1)
    """
    values: Tuple[float, ...]
    step: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(float(v) for v in self.values))
        if not self.values:
            raise ValueError("Une trace ne peut pas être vide")
        if self.step != 1:
            raise ValueError("Le pas de simulation est fixé à 1 minute")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, index):
        return self.values[index]


@dataclass(frozen=True)
class TraceSegment:
    """
    Portion de trace mesurée dans un seul mode, le temps rebasé à zéro.

    Attributes:
        mode: Mode du thermostat pendant le segment
        times: Minutes écoulées depuis le début du segment (strictement croissantes)
        values: Températures mesurées (°C)
    """
    mode: Mode
    times: Tuple[float, ...]
    values: Tuple[float, ...]

    def __post_init__(self):
        """Vérifie les invariants du segment."""
        object.__setattr__(self, 'times', tuple(float(t) for t in self.times))
        object.__setattr__(self, 'values', tuple(float(y) for y in self.values))
        if len(self.times) != len(self.values):
            raise ValueError("Temps et températures de longueurs différentes")
        if len(self.times) < MIN_SEGMENT_SAMPLES:
            raise ValueError(
                f"Échantillons insuffisants: {len(self.times)} "
                f"(minimum {MIN_SEGMENT_SAMPLES})"
            )
        if self.times[0] != 0.0:
            raise ValueError(f"Le segment doit commencer à t=0 (reçu {self.times[0]})")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise ValueError("Les temps du segment doivent être strictement croissants")
        if not all(math.isfinite(y) for y in self.values):
            raise ValueError("Température non finie dans le segment")

    @property
    def start_temp(self) -> float:
        """Température de départ T0 (premier échantillon)."""
        return self.values[0]

    def __len__(self) -> int:
        return len(self.times)


@dataclass(frozen=True)
class FitResult:
    """
    Résultat de l'ajustement d'un mode par moindres carrés.

    Attributes:
        k1: Coefficient d'amplitude ajusté (°C)
        k2: Taux de décroissance ajusté (par minute)
        rmse: Erreur quadratique moyenne au point optimal (°C)
        iterations: Nombre d'itérations effectuées
        converged: Vrai si le critère d'arrêt a été atteint avant la limite
    """
    k1: float
    k2: float
    rmse: float
    iterations: int
    converged: bool
