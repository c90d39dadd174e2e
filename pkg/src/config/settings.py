"""
Settings - Paramètres du générateur, de la simulation et de l'algorithme génétique
Principe: Immutabilité - Une configuration validée ne change plus pendant une exécution
"""
import math
from dataclasses import dataclass
from typing import Optional, Tuple

SEARCH_MODES = ('full', 'models_only')


def _check_bounds(name: str, bounds: Tuple, minimum: float = None) -> None:
    """Vérifie qu'un intervalle [bas, haut] est ordonné."""
    if len(bounds) != 2:
        raise ValueError(f"{name} doit contenir exactement deux bornes")
    low, high = bounds
    if low > high:
        raise ValueError(f"{name} non ordonné: [{low}, {high}]")
    if minimum is not None and low < minimum:
        raise ValueError(f"{name}: la borne basse doit être ≥ {minimum}")


def _check_probability(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} doit être dans [0, 1] (reçu {value})")


@dataclass(frozen=True)
class GeneratorConfig:
    """
    Paramètres de la chaîne de Markov et de la contrainte K.

    Attributes:
        p_switch: Probabilité de changer d'état
        p_stay: Probabilité de rester dans le même état
        temp_bounds: Températures cibles admissibles (°C)
        duration_bounds: Durées admissibles d'un état (minutes)
        state_count_bounds: Nombre d'états admissibles par cas de test
        horizon: Durée totale d'un cas de test (minutes)
        rng_seed: Graine du générateur
    """
    p_switch: float = 0.9
    p_stay: float = 0.1
    temp_bounds: Tuple[float, float] = (16.0, 25.0)
    duration_bounds: Tuple[int, int] = (15, 360)
    state_count_bounds: Tuple[int, int] = (5, 12)
    horizon: int = 1440
    rng_seed: int = 0

    def __post_init__(self):
        """Vérifie les invariants de la configuration."""
        object.__setattr__(self, 'temp_bounds', tuple(float(b) for b in self.temp_bounds))
        object.__setattr__(self, 'duration_bounds', tuple(int(b) for b in self.duration_bounds))
        object.__setattr__(
            self, 'state_count_bounds', tuple(int(b) for b in self.state_count_bounds)
        )
        _check_probability('p_switch', self.p_switch)
        _check_probability('p_stay', self.p_stay)
        if not math.isclose(self.p_switch + self.p_stay, 1.0, abs_tol=1e-12):
            raise ValueError("p_switch + p_stay doit valoir 1")
        _check_bounds('temp_bounds', self.temp_bounds)
        _check_bounds('duration_bounds', self.duration_bounds, minimum=1)
        _check_bounds('state_count_bounds', self.state_count_bounds, minimum=1)
        if self.horizon <= 0:
            raise ValueError(f"L'horizon doit être positif (reçu {self.horizon})")


@dataclass(frozen=True)
class SimConfig:
    """
    Paramètres du simulateur de thermostat.

    Attributes:
        initial_temp: Température initiale du bâtiment (°C)
        hysteresis: Demi-largeur de la bande d'hystérésis (°C)
        step: Pas de simulation en minutes (fixé à 1)
    """
    initial_temp: float = 20.0
    hysteresis: float = 0.1
    step: int = 1

    def __post_init__(self):
        if self.hysteresis < 0:
            raise ValueError(f"L'hystérésis doit être ≥ 0 (reçu {self.hysteresis})")
        if not 0.0 <= self.initial_temp <= 40.0:
            raise ValueError(
                f"Température initiale hors de [0, 40] °C: {self.initial_temp}"
            )
        if self.step != 1:
            raise ValueError("Le pas de simulation est fixé à 1 minute")


@dataclass(frozen=True)
class GAConfig:
    """
    Paramètres de l'algorithme génétique.

    Attributes:
        generations: Nombre de générations (la population initiale compte pour la première)
        population_size: Taille de la population
        mutation_rate: Probabilité de muter chaque descendant
        crossover_rate: Probabilité de croiser chaque paire de parents
        tournament_k: Taille du tournoi
        rng_seed: Graine de l'exécution
        evaluation_budget: Nombre maximal d'évaluations (None = illimité)
        search_mode: 'full' ou 'models_only' (seul le gène modèle évolue)
        workers: Nombre de processus d'évaluation
    """
    generations: int = 90
    population_size: int = 100
    mutation_rate: float = 0.4
    crossover_rate: float = 0.9
    tournament_k: int = 2
    rng_seed: int = 0
    evaluation_budget: Optional[int] = 9000
    search_mode: str = 'full'
    workers: int = 1

    def __post_init__(self):
        _check_probability('mutation_rate', self.mutation_rate)
        _check_probability('crossover_rate', self.crossover_rate)
        if self.generations < 1:
            raise ValueError("generations doit être ≥ 1")
        if self.population_size < 2:
            raise ValueError("population_size doit être ≥ 2")
        if self.tournament_k < 2:
            raise ValueError("tournament_k doit être ≥ 2")
        if self.evaluation_budget is not None and self.evaluation_budget < 1:
            raise ValueError("evaluation_budget doit être ≥ 1")
        if self.search_mode not in SEARCH_MODES:
            raise ValueError(
                f"search_mode inconnu: {self.search_mode} "
                f"(attendu: {', '.join(SEARCH_MODES)})"
            )
        if self.workers < 1:
            raise ValueError("workers doit être ≥ 1")
