"""
Comparison - Algorithme génétique contre recherche aléatoire sur plusieurs exécutions
"""
import logging
from dataclasses import replace
from typing import Sequence

import numpy as np
from scipy.stats import mannwhitneyu

from ..config.settings import GAConfig, GeneratorConfig, SimConfig
from ..data_structures.model_registry import ModelRegistry
from ..models.results import BoxplotSummary, ComparisonReport
from .genetic_algorithm import run_ga
from .random_search import run_random_search

_logger = logging.getLogger(__name__)


def summarize(values: Sequence[float]) -> BoxplotSummary:
    """Résumé min/q1/médiane/q3/max/moyenne d'une série de fitness."""
    data = np.asarray(values, dtype=float)
    q1, median, q3 = np.quantile(data, [0.25, 0.5, 0.75])
    return BoxplotSummary(
        minimum=float(data.min()), q1=float(q1), median=float(median),
        q3=float(q3), maximum=float(data.max()), mean=float(data.mean()),
        count=int(data.size),
    )


def derive_seeds(base_seed: int, runs: int):
    """Graines des exécutions, dérivées de la graine de base."""
    return tuple(int(s) for s in np.random.SeedSequence(base_seed).generate_state(runs))


def matched_budget(ga_cfg: GAConfig) -> int:
    """
    Nombre d'évaluations effectivement consommées par une exécution GA.

    generations x population_size, borné par evaluation_budget s'il existe.
    """
    ceiling = ga_cfg.generations * ga_cfg.population_size
    if ga_cfg.evaluation_budget is None:
        return ceiling
    return min(ga_cfg.evaluation_budget, ceiling)


def compare(runs: int, ga_cfg: GAConfig, gen_cfg: GeneratorConfig,
            registry: ModelRegistry, sim_cfg: SimConfig, base_seed: int) -> ComparisonReport:
    """
    Compare l'algorithme génétique et la recherche aléatoire à budget égal.

    Chaque exécution i utilise la même graine dérivée pour les deux méthodes.
    Le budget de la recherche aléatoire est celui que consomme
    l'algorithme génétique (voir matched_budget).

    Args:
        runs: Nombre d'exécutions par méthode (≥ 2)
        ga_cfg: Paramètres de l'algorithme génétique
        gen_cfg: Paramètres du générateur
        registry: Registre des modèles
        sim_cfg: Paramètres de simulation
        base_seed: Graine de base

    Returns:
        ComparisonReport avec les trois séries et le test de Mann-Whitney
    """
    if runs < 2:
        raise ValueError(f"Au moins 2 exécutions sont nécessaires (reçu {runs})")

    budget = matched_budget(ga_cfg)
    seeds = derive_seeds(base_seed, runs)
    ga_bests, rs_bests, pooled, histories = [], [], [], []

    for index, seed in enumerate(seeds):
        ga_result = run_ga(replace(ga_cfg, rng_seed=seed), gen_cfg, registry, sim_cfg)
        rs_result = run_random_search(budget, gen_cfg, registry, sim_cfg, seed,
                                      workers=ga_cfg.workers)
        ga_bests.append(ga_result.best_fitness)
        histories.append(ga_result.history)
        rs_bests.append(rs_result.best_fitness)
        pooled.extend(rs_result.evaluated_fitnesses)
        _logger.info("Exécution %d/%d: GA=%.4f RS=%.4f", index + 1, runs,
                     ga_result.best_fitness, rs_result.best_fitness)

    statistic, p_value = mannwhitneyu(ga_bests, rs_bests, alternative='two-sided')
    return ComparisonReport(
        ga_bests=tuple(ga_bests),
        rs_bests=tuple(rs_bests),
        rs_pooled=tuple(pooled),
        seeds=seeds,
        summaries={
            'GA': summarize(ga_bests),
            'RS': summarize(rs_bests),
            'RS_ALL': summarize(pooled),
        },
        u_statistic=float(statistic),
        p_value=float(p_value),
        ga_histories=tuple(histories),
    )
