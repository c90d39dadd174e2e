"""
Genetic algorithm - Recherche évolutionnaire des scénarios de plus grand écart

Chromosomes de longueur variable (un gène par état), sélection par tournoi,
croisement en un point, deux opérateurs de mutation et survie élitiste
(mu + lambda) sans doublons : un scénario déjà évalué n'est pas réévalué.
Tous les tirages d'une génération sont faits sur le flux séquentiel avant
l'évaluation du lot, qui peut donc être parallélisée.
"""
import logging
from statistics import fmean
from typing import List, Optional, Sequence, Set, Tuple

import numpy as np

from ..config.settings import GAConfig, GeneratorConfig, SimConfig
from ..data_structures.model_registry import ModelRegistry
from ..factories.config_factory import to_document
from ..models.results import EvolutionResult, GenerationStats
from ..models.scenario import TestCase
from .evaluator import FitnessEvaluator
from .scenario_generator import generate_population, repair

_logger = logging.getLogger(__name__)

VARIABLES = ('temperature', 'duration', 'model')
DUPLICATE_ATTEMPTS = 100


def scenario_key(tc: TestCase) -> Tuple[Tuple[float, int, int], ...]:
    """Identité d'un scénario pour la simulation (mode_hint ignoré)."""
    return tuple((state.target_temp, state.duration, state.model_id) for state in tc)


# ── Sélection ───────────────────────────────────────────


def tournament_index(fitnesses: Sequence[float], k: int, rng: np.random.Generator) -> int:
    """
    Tire k concurrents avec remise et retourne l'indice du vainqueur.

    Égalités départagées par le plus petit indice.
    """
    if not fitnesses:
        raise ValueError("Population vide")
    if k < 1:
        raise ValueError(f"La taille du tournoi doit être ≥ 1 (reçu {k})")

    best = None
    for drawn in rng.integers(0, len(fitnesses), size=k):
        index = int(drawn)
        if best is None or fitnesses[index] > fitnesses[best] \
                or (fitnesses[index] == fitnesses[best] and index < best):
            best = index
    return best


def tournament_select(population: Sequence[TestCase], fitnesses: Sequence[float],
                      k: int, rng: np.random.Generator) -> TestCase:
    """
    Sélection par tournoi à k participants (maximisation de l'écart).

    Args:
        population: Individus candidats
        fitnesses: Fitness alignées sur la population
        k: Taille du tournoi
        rng: Générateur aléatoire

    Returns:
        Le participant de plus grande fitness

    Raises:
        ValueError: Si la population est vide
    """
    if not population:
        raise ValueError("Population vide")
    if len(population) != len(fitnesses):
        raise ValueError("Population et fitness de longueurs différentes")
    return population[tournament_index(fitnesses, k, rng)]


# ── Croisement ──────────────────────────────────────────


def crossover_one_point(a: TestCase, b: TestCase, point: Optional[int] = None,
                        rng: Optional[np.random.Generator] = None
                        ) -> Tuple[TestCase, TestCase]:
    """
    Échange les états de deux cas de test après un point de coupure.

    Les enfants ne sont pas réparés : l'appelant applique repair().

    Args:
        a: Premier parent
        b: Second parent
        point: Indice de coupure dans [1, min(|a|, |b|) - 1] ; tiré
            uniformément avec rng s'il est omis
        rng: Générateur aléatoire (requis si point est omis)

    Returns:
        (a[:point] + b[point:], b[:point] + a[point:])

    Raises:
        ValueError: Si le point est hors limites
    """
    limit = min(len(a), len(b))
    if point is None:
        if limit < 2:
            raise ValueError("Croisement impossible: un parent a moins de deux états")
        point = int(rng.integers(1, limit))
    if not 1 <= point < limit:
        raise ValueError(f"Point de croisement {point} hors de [1, {limit - 1}]")

    child1 = TestCase(a.states[:point] + b.states[point:])
    child2 = TestCase(b.states[:point] + a.states[point:])
    return child1, child2


# ── Mutations ───────────────────────────────────────────


def mutate_exchange(tc: TestCase, rng: np.random.Generator) -> Tuple[TestCase, bool]:
    """
    Échange la position de deux états tirés au hasard.

    Returns:
        (enfant, True) ou (tc inchangé, False) pour un chromosome à un seul état
    """
    if len(tc) < 2:
        _logger.debug("Échange impossible sur un chromosome à un état")
        return tc, False

    first, second = (int(i) for i in rng.choice(len(tc), size=2, replace=False))
    states = list(tc.states)
    states[first], states[second] = states[second], states[first]
    return TestCase(states), True


def mutate_change_variable(tc: TestCase, rng: np.random.Generator,
                           cfg: GeneratorConfig, registry: ModelRegistry,
                           variables: Sequence[str] = VARIABLES
                           ) -> Tuple[TestCase, bool]:
    """
    Retire une variable (température, durée ou modèle) d'un état tiré au hasard.

    Args:
        tc: Chromosome à muter
        rng: Générateur aléatoire
        cfg: Bornes de la contrainte K
        registry: Registre des modèles
        variables: Variables éligibles

    Returns:
        (enfant réparé, True), ou (tc, False) si aucun autre modèle n'existe
    """
    index = int(rng.integers(len(tc)))
    variable = variables[int(rng.integers(len(variables)))]
    state = tc[index]

    if variable == 'temperature':
        low, high = cfg.temp_bounds
        mutated = state.with_changes(target_temp=round(float(rng.uniform(low, high)), 1))
    elif variable == 'duration':
        low, high = cfg.duration_bounds
        mutated = state.with_changes(duration=int(rng.integers(low, high + 1)))
    else:
        alternatives = [m for m in registry.ids() if m != state.model_id]
        if not alternatives:
            _logger.debug("Aucun autre modèle disponible pour l'état %d", index)
            return tc, False
        mutated = state.with_changes(
            model_id=alternatives[int(rng.integers(len(alternatives)))]
        )

    states = list(tc.states)
    states[index] = mutated
    return repair(TestCase(states), cfg), True


# ── Boucle évolutionnaire ───────────────────────────────


def _mutate(tc: TestCase, rng, ga_cfg: GAConfig, gen_cfg: GeneratorConfig,
            registry: ModelRegistry) -> TestCase:
    if ga_cfg.search_mode == 'models_only':
        child, _ = mutate_change_variable(tc, rng, gen_cfg, registry, variables=('model',))
    elif rng.random() < 0.5:
        child, _ = mutate_exchange(tc, rng)
    else:
        child, _ = mutate_change_variable(tc, rng, gen_cfg, registry)
    return child


def make_offspring(population: Sequence[TestCase], fitnesses: Sequence[float], count: int,
                   ga_cfg: GAConfig, gen_cfg: GeneratorConfig, registry: ModelRegistry,
                   rng: np.random.Generator,
                   seen: Optional[Set[tuple]] = None) -> List[TestCase]:
    """
    Produit count descendants réparés (sélection, croisement, mutation).

    Avec seen, un descendant dont la clé scenario_key y figure déjà est
    écarté et remplacé ; les clés retenues sont ajoutées à seen. Après
    DUPLICATE_ATTEMPTS rejets par descendant demandé, les doublons sont
    acceptés.
    """
    offspring: List[TestCase] = []
    rejections = 0
    while len(offspring) < count:
        first = tournament_select(population, fitnesses, ga_cfg.tournament_k, rng)
        second = tournament_select(population, fitnesses, ga_cfg.tournament_k, rng)

        crossover = rng.random() < ga_cfg.crossover_rate
        if crossover and ga_cfg.search_mode == 'full' and min(len(first), len(second)) >= 2:
            children = crossover_one_point(first, second, rng=rng)
        else:
            children = (first, second)

        for child in children:
            if len(offspring) == count:
                break
            if rng.random() < ga_cfg.mutation_rate:
                child = _mutate(child, rng, ga_cfg, gen_cfg, registry)
            child = repair(child, gen_cfg)
            if seen is not None:
                key = scenario_key(child)
                if key in seen and rejections < DUPLICATE_ATTEMPTS * count:
                    rejections += 1
                    continue
                seen.add(key)
            offspring.append(child)
    if rejections:
        _logger.debug("%d doublons écartés", rejections)
    return offspring


def select_survivors(population: Sequence[TestCase], fitnesses: Sequence[float],
                     size: int) -> Tuple[List[TestCase], List[float]]:
    """
    Survie élitiste : garde les size meilleurs, égalités au plus petit indice.

    Returns:
        (population triée par fitness décroissante, fitness correspondantes)
    """
    order = sorted(range(len(population)), key=lambda i: (-fitnesses[i], i))[:size]
    return [population[i] for i in order], [fitnesses[i] for i in order]


def config_snapshot(gen_cfg: GeneratorConfig, sim_cfg: SimConfig,
                    ga_cfg: Optional[GAConfig] = None) -> dict:
    """Instantané sérialisable des configurations d'une exécution."""
    snapshot = {
        'generator': to_document(gen_cfg),
        'simulation': to_document(sim_cfg),
    }
    if ga_cfg is not None:
        snapshot['ga'] = to_document(ga_cfg)
    return snapshot


def run_ga(ga_cfg: GAConfig, gen_cfg: GeneratorConfig, registry: ModelRegistry,
           sim_cfg: SimConfig) -> EvolutionResult:
    """
    Exécute l'algorithme génétique.

    La population initiale (chaîne de Markov) compte comme première
    génération et consomme le budget ; l'exécution s'arrête après
    ga_cfg.generations générations ou à épuisement du budget.

    Args:
        ga_cfg: Paramètres de l'algorithme génétique
        gen_cfg: Paramètres du générateur et contrainte K
        registry: Registre des modèles
        sim_cfg: Paramètres de simulation

    Returns:
        EvolutionResult
    """
    population_seed, operator_seed = np.random.SeedSequence(ga_cfg.rng_seed).spawn(2)
    rng = np.random.default_rng(operator_seed)
    budget = ga_cfg.evaluation_budget
    size = ga_cfg.population_size

    with FitnessEvaluator(registry, sim_cfg, budget, ga_cfg.workers) as evaluator:
        initial_size = size if budget is None else min(size, budget)
        population = generate_population(initial_size, gen_cfg, registry, population_seed)
        seen = {scenario_key(tc) for tc in population}
        population, fitnesses = select_survivors(
            population, evaluator.evaluate(population), initial_size
        )
        history = [GenerationStats(1, fitnesses[0], fmean(fitnesses))]

        for generation in range(2, ga_cfg.generations + 1):
            remaining = evaluator.remaining()
            if remaining == 0:
                _logger.info("Budget de %d évaluations épuisé à la génération %d",
                             budget, generation - 1)
                break
            count = size if remaining is None else min(size, remaining)

            offspring = make_offspring(population, fitnesses, count,
                                       ga_cfg, gen_cfg, registry, rng, seen)
            offspring_fitnesses = evaluator.evaluate(offspring)
            population, fitnesses = select_survivors(
                population + offspring, fitnesses + offspring_fitnesses, size
            )
            history.append(GenerationStats(generation, fitnesses[0], fmean(fitnesses)))
            _logger.debug("Génération %d: meilleur=%.4f moyenne=%.4f",
                          generation, fitnesses[0], history[-1].mean_fitness)

        evaluations = evaluator.evaluations

    return EvolutionResult(
        best=population[0],
        best_fitness=fitnesses[0],
        history=tuple(history),
        evaluations_used=evaluations,
        seed=ga_cfg.rng_seed,
        config_snapshot=config_snapshot(gen_cfg, sim_cfg, ga_cfg),
    )
