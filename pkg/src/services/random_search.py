"""
Random search - Recherche aléatoire de référence sur des cas de test Markov
"""
import logging
from statistics import fmean

from ..config.settings import GeneratorConfig, SimConfig
from ..data_structures.model_registry import ModelRegistry
from ..models.results import EvolutionResult, GenerationStats
from .evaluator import FitnessEvaluator
from .genetic_algorithm import config_snapshot
from .scenario_generator import generate_population

_logger = logging.getLogger(__name__)

HISTORY_WINDOW = 100


def run_random_search(budget: int, gen_cfg: GeneratorConfig, registry: ModelRegistry,
                      sim_cfg: SimConfig, seed: int, workers: int = 1,
                      window: int = HISTORY_WINDOW) -> EvolutionResult:
    """
    Évalue budget cas de test aléatoires et retient le meilleur.

    Args:
        budget: Nombre de cas de test évalués (≥ 1)
        gen_cfg: Paramètres du générateur
        registry: Registre des modèles
        sim_cfg: Paramètres de simulation
        seed: Graine de l'exécution
        workers: Nombre de processus d'évaluation
        window: Taille des fenêtres de l'historique

    Returns:
        EvolutionResult dont l'historique donne, par fenêtre, le meilleur
        courant et la moyenne de la fenêtre ; evaluated_fitnesses contient
        toutes les fitness évaluées
    """
    if budget < 1:
        raise ValueError(f"Le budget doit être ≥ 1 (reçu {budget})")

    population = generate_population(budget, gen_cfg, registry, seed)
    with FitnessEvaluator(registry, sim_cfg, budget, workers) as evaluator:
        fitnesses = evaluator.evaluate(population)

    best_index = max(range(budget), key=lambda i: (fitnesses[i], -i))

    history = []
    running_best = float('-inf')
    for number, start in enumerate(range(0, budget, window), start=1):
        chunk = fitnesses[start:start + window]
        running_best = max(running_best, max(chunk))
        history.append(GenerationStats(number, running_best, fmean(chunk)))

    _logger.debug("Recherche aléatoire: meilleur=%.4f moyenne=%.4f",
                  fitnesses[best_index], fmean(fitnesses))
    return EvolutionResult(
        best=population[best_index],
        best_fitness=fitnesses[best_index],
        history=tuple(history),
        evaluations_used=budget,
        seed=seed,
        config_snapshot=config_snapshot(gen_cfg, sim_cfg),
        evaluated_fitnesses=tuple(fitnesses),
    )
