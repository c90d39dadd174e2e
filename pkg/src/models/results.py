"""
Classes de résultats de recherche - EvolutionResult et ComparisonReport
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from .scenario import TestCase


@dataclass(frozen=True)
class GenerationStats:
    """
    Statistiques d'une génération (ou d'une fenêtre de recherche aléatoire).

    Attributes:
        generation: Numéro de la génération (à partir de 1)
        best_fitness: Meilleure fitness connue à la fin de la génération
        mean_fitness: Fitness moyenne des individus de la génération
    """
    generation: int
    best_fitness: float
    mean_fitness: float


@dataclass(frozen=True)
class EvolutionResult:
    """
    Résultat d'une exécution de l'algorithme génétique ou de la recherche aléatoire.

    Attributes:
        best: Meilleur cas de test trouvé
        best_fitness: Écart RMSE du meilleur cas (°C, positif)
        history: Statistiques par génération
        evaluations_used: Nombre d'évaluations de fitness consommées
        seed: Graine de l'exécution
        config_snapshot: Configurations utilisées (sections ga, generator, simulation)
        evaluated_fitnesses: Fitness de tous les individus évalués (recherche aléatoire)
    """
    best: TestCase
    best_fitness: float
    history: Tuple[GenerationStats, ...]
    evaluations_used: int
    seed: int
    config_snapshot: Dict[str, Any] = field(default_factory=dict)
    evaluated_fitnesses: Optional[Tuple[float, ...]] = None

    @property
    def best_fitness_negated(self) -> float:
        """Fitness dans la convention minimisante (valeur négative)."""
        return -self.best_fitness


@dataclass(frozen=True)
class BoxplotSummary:
    """Résumé à cinq nombres (plus la moyenne) d'une série de fitness."""
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float
    mean: float
    count: int


@dataclass(frozen=True)
class ComparisonReport:
    """
    Comparaison algorithme génétique / recherche aléatoire sur plusieurs exécutions.

    Attributes:
        ga_bests: Meilleure fitness de chaque exécution GA
        rs_bests: Meilleure fitness de chaque exécution RS
        rs_pooled: Fitness de tous les individus aléatoires évalués
        seeds: Graines dérivées utilisées pour chaque paire d'exécutions
        summaries: Résumés par série ('GA', 'RS', 'RS_ALL')
        u_statistic: Statistique U de Mann-Whitney (GA contre RS)
        p_value: Valeur p bilatérale associée
        ga_histories: Historique de convergence de chaque exécution GA
    """
    ga_bests: Tuple[float, ...]
    rs_bests: Tuple[float, ...]
    rs_pooled: Tuple[float, ...]
    seeds: Tuple[int, ...]
    summaries: Dict[str, BoxplotSummary]
    u_statistic: float
    p_value: float
    ga_histories: Tuple[Tuple[GenerationStats, ...], ...] = ()
