"""
Classes ScenarioState et TestCase - Chromosome d'un scénario d'utilisation
Principe: Immutabilité - Les opérateurs génétiques créent de nouveaux cas de test
"""
import math
from dataclasses import dataclass, replace
from typing import Iterator, Optional, Tuple

from .coefficients import Mode


@dataclass(frozen=True)
class ScenarioState:
    """
    Un état du scénario : le triplet (température cible, durée, modèle).

    Attributes:
        target_temp: Température attendue pendant l'état (°C)
        duration: Durée de l'état en minutes entières
        model_id: Clé du modèle de substitution dans le registre
        mode_hint: État de la chaîne de Markov qui a émis le triplet (optionnel)
    """
    target_temp: float
    duration: int
    model_id: int
    mode_hint: Optional[Mode] = None

    def __post_init__(self):
        """Vérifie les types élémentaires (les bornes relèvent de la contrainte K)."""
        if not math.isfinite(self.target_temp):
            raise ValueError(f"Température cible invalide: {self.target_temp}")
        if isinstance(self.duration, bool) or not isinstance(self.duration, int):
            raise ValueError(f"La durée doit être un entier de minutes: {self.duration!r}")
        if self.duration <= 0:
            raise ValueError(f"La durée doit être positive (reçu {self.duration})")
        if isinstance(self.model_id, bool) or not isinstance(self.model_id, int):
            raise ValueError(f"Identifiant de modèle invalide: {self.model_id!r}")

    def with_changes(self, **changes) -> 'ScenarioState':
        """Retourne une copie de l'état avec les champs modifiés."""
        return replace(self, **changes)

    def __str__(self) -> str:
        """Retourne une représentation textuelle de l'état."""
        hint = f" ({self.mode_hint.value})" if self.mode_hint else ""
        return (
            f"{self.target_temp:.1f}°C pendant {self.duration} min, "
            f"modèle {self.model_id}{hint}"
        )


@dataclass(frozen=True)
class TestCase:
    """
    Cas de test : séquence ordonnée d'états, chromosome de l'algorithme génétique.

    Attributes:
        states: États du scénario dans l'ordre chronologique
    """
    __test__ = False  # pas une classe de test pytest

    states: Tuple[ScenarioState, ...]

    def __post_init__(self):
        """Normalise la séquence en tuple et refuse un cas vide."""
        object.__setattr__(self, 'states', tuple(self.states))
        if not self.states:
            raise ValueError("Un cas de test doit contenir au moins un état")

    @property
    def total_duration(self) -> int:
        """Durée totale du scénario en minutes."""
        return sum(state.duration for state in self.states)

    def durations(self) -> Tuple[int, ...]:
        """Retourne les durées des états."""
        return tuple(state.duration for state in self.states)

    def with_durations(self, durations) -> 'TestCase':
        """Retourne un cas de test identique avec de nouvelles durées."""
        return TestCase(tuple(
            state.with_changes(duration=int(duration))
            for state, duration in zip(self.states, durations)
        ))

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[ScenarioState]:
        return iter(self.states)

    def __getitem__(self, index):
        return self.states[index]

    def __str__(self) -> str:
        """Retourne une représentation textuelle du cas de test."""
        lines = [f"Cas de test ({len(self)} états, {self.total_duration} min)"]
        lines.extend(f"  [{i}] {state}" for i, state in enumerate(self.states))
        return "\n".join(lines)
