"""
Tests pour l'évaluateur, la recherche aléatoire et la comparaison — style pytest
Convention: test_<nom_de_la_fonction_testée>
"""
from statistics import fmean, median

import pytest

from src.config.settings import GAConfig, GeneratorConfig, SimConfig
from src.data_structures.model_registry import ModelRegistry
from src.services.comparison import compare, derive_seeds, matched_budget, summarize
from src.services.evaluator import FitnessEvaluator
from src.services.random_search import run_random_search
from src.services.scenario_generator import generate_population
from src.services.simulator import fitness

REGISTRY = ModelRegistry.default()


# ── Fixtures ────────────────────────────────────────────


@pytest.fixture
def gen_cfg():
    """Fixture : configuration par défaut du générateur."""
    return GeneratorConfig()


@pytest.fixture
def sim_cfg():
    """Fixture : paramètres de simulation par défaut."""
    return SimConfig()


# ── Tests FitnessEvaluator ──────────────────────────────


def test_evaluator_budget(gen_cfg, sim_cfg):
    """Vérifie la comptabilité du budget et le refus d'un dépassement."""
    population = generate_population(6, gen_cfg, REGISTRY, seed=0)

    with FitnessEvaluator(REGISTRY, sim_cfg, budget=8) as evaluator:
        evaluator.evaluate(population)
        assert evaluator.remaining() == 2
        with pytest.raises(ValueError, match="Budget"):
            evaluator.evaluate(population)
        assert evaluator.evaluations == 6


def test_evaluator_sans_budget(gen_cfg, sim_cfg):
    """Vérifie qu'un budget absent est illimité."""
    with FitnessEvaluator(REGISTRY, sim_cfg) as evaluator:
        assert evaluator.remaining() is None


def test_evaluator_processus(gen_cfg, sim_cfg):
    """Vérifie que le pool de processus rend les mêmes fitness dans le même ordre."""
    population = generate_population(8, gen_cfg, REGISTRY, seed=1)

    with FitnessEvaluator(REGISTRY, sim_cfg, workers=2) as evaluator:
        parallel = evaluator.evaluate(population)

    assert parallel == [fitness(tc, REGISTRY, sim_cfg) for tc in population]


# ── Tests run_random_search ─────────────────────────────


def test_random_search_budget_un(gen_cfg, sim_cfg):
    """Vérifie qu'avec un budget de 1 le meilleur est l'unique individu."""
    result = run_random_search(1, gen_cfg, REGISTRY, sim_cfg, seed=5)
    only = generate_population(1, gen_cfg, REGISTRY, seed=5)[0]

    assert result.best == only
    assert result.best_fitness == fitness(only, REGISTRY, sim_cfg)
    assert result.evaluations_used == 1
    assert len(result.history) == 1


def test_random_search_determinisme(gen_cfg, sim_cfg):
    """Vérifie qu'une graine fixe donne le même résultat."""
    first = run_random_search(30, gen_cfg, REGISTRY, sim_cfg, seed=9)
    second = run_random_search(30, gen_cfg, REGISTRY, sim_cfg, seed=9)

    assert first == second


def test_random_search_historique(gen_cfg, sim_cfg):
    """Vérifie une ligne par fenêtre de 100 et un meilleur courant non décroissant."""
    result = run_random_search(250, gen_cfg, REGISTRY, sim_cfg, seed=2)
    bests = [stats.best_fitness for stats in result.history]

    assert len(result.history) == 3
    assert bests == sorted(bests)
    assert bests[-1] == result.best_fitness == max(result.evaluated_fitnesses)
    assert result.history[2].mean_fitness == pytest.approx(fmean(result.evaluated_fitnesses[200:]))


def test_random_search_budget_invalide(gen_cfg, sim_cfg):
    """Vérifie qu'un budget nul est refusé."""
    with pytest.raises(ValueError):
        run_random_search(0, gen_cfg, REGISTRY, sim_cfg, seed=0)


# ── Tests summarize / derive_seeds ──────────────────────


def test_summarize():
    """Vérifie le résumé à cinq nombres."""
    summary = summarize([5.0, 1.0, 3.0, 2.0, 4.0])

    assert (summary.minimum, summary.q1, summary.median) == (1.0, 2.0, 3.0)
    assert (summary.q3, summary.maximum, summary.mean, summary.count) == (4.0, 5.0, 3.0, 5)


def test_derive_seeds():
    """Vérifie des graines reproductibles et distinctes."""
    seeds = derive_seeds(0, 10)

    assert seeds == derive_seeds(0, 10)
    assert len(set(seeds)) == 10
    assert seeds != derive_seeds(1, 10)


# ── Tests compare ───────────────────────────────────────


@pytest.fixture
def tiny_ga():
    """Fixture : algorithme génétique minuscule (budget de 12 évaluations)."""
    return GAConfig(generations=3, population_size=4, evaluation_budget=12)


def test_compare_deux_executions(tiny_ga, gen_cfg, sim_cfg):
    """Vérifie les trois séries et le déterminisme avec runs=2."""
    first = compare(2, tiny_ga, gen_cfg, REGISTRY, sim_cfg, base_seed=3)
    second = compare(2, tiny_ga, gen_cfg, REGISTRY, sim_cfg, base_seed=3)

    assert first == second
    assert len(first.ga_bests) == len(first.rs_bests) == 2
    assert len(first.rs_pooled) == 2 * 12
    assert set(first.summaries) == {'GA', 'RS', 'RS_ALL'}
    assert first.summaries['RS_ALL'].count == 24
    assert 0.0 <= first.p_value <= 1.0


def test_compare_graines_appariees(tiny_ga, gen_cfg, sim_cfg):
    """Vérifie que GA et recherche aléatoire partagent la graine de chaque exécution."""
    report = compare(2, tiny_ga, gen_cfg, REGISTRY, sim_cfg, base_seed=0)
    rs = run_random_search(12, gen_cfg, REGISTRY, sim_cfg, report.seeds[1])

    assert report.seeds == derive_seeds(0, 2)
    assert report.rs_bests[1] == rs.best_fitness


def test_compare_une_execution(tiny_ga, gen_cfg, sim_cfg):
    """Vérifie qu'au moins deux exécutions sont exigées."""
    with pytest.raises(ValueError, match="2 exécutions"):
        compare(1, tiny_ga, gen_cfg, REGISTRY, sim_cfg, base_seed=0)


def test_compare_historiques_ga(tiny_ga, gen_cfg, sim_cfg):
    """Vérifie qu'un historique GA non décroissant est conservé par exécution."""
    report = compare(2, tiny_ga, gen_cfg, REGISTRY, sim_cfg, base_seed=3)

    assert len(report.ga_histories) == 2
    for history in report.ga_histories:
        bests = [row.best_fitness for row in history]
        assert len(bests) == 3
        assert all(b >= a for a, b in zip(bests, bests[1:]))


# ── Tests matched_budget ────────────────────────────────


@pytest.mark.parametrize("ga_cfg, expected", [
    (GAConfig(generations=3, population_size=10), 30),
    (GAConfig(generations=3, population_size=10, evaluation_budget=None), 30),
    (GAConfig(generations=3, population_size=10, evaluation_budget=25), 25),
    (GAConfig(), 9000),
])
def test_matched_budget(ga_cfg, expected):
    """Vérifie que le budget RS égale les évaluations réellement faites par le GA."""
    assert matched_budget(ga_cfg) == expected


def test_compare_budget_plafonne_par_generations(gen_cfg, sim_cfg):
    """Vérifie que la RS ne dépasse pas les évaluations du GA (budget > générations × taille)."""
    ga_cfg = GAConfig(generations=2, population_size=4)

    report = compare(2, ga_cfg, gen_cfg, REGISTRY, sim_cfg, base_seed=0)

    assert len(report.rs_pooled) == 2 * 8
    assert report.summaries['RS_ALL'].count == 16


@pytest.mark.slow
@pytest.mark.parametrize("base_seed", [0, 1])
def test_compare_dominance_ga(base_seed, gen_cfg, sim_cfg):
    """Vérifie que le GA domine la RS d'un facteur 1.5 en moyenne à budget 2000."""
    ga_cfg = GAConfig(generations=20, population_size=100, evaluation_budget=2000)

    report = compare(10, ga_cfg, gen_cfg, REGISTRY, sim_cfg, base_seed=base_seed)

    assert median(report.ga_bests) > median(report.rs_bests)
    assert report.summaries['GA'].mean >= 1.5 * report.summaries['RS'].mean


@pytest.mark.slow
def test_compare_protocole_complet(gen_cfg, sim_cfg):
    """Vérifie l'ordre des trois séries à budget 9000 sur 10 exécutions."""
    report = compare(10, GAConfig(), gen_cfg, REGISTRY, sim_cfg, base_seed=0)
    pooled_mean = report.summaries['RS_ALL'].mean

    assert pooled_mean == pytest.approx(0.93, abs=0.5)
    assert pooled_mean < report.summaries['RS'].mean < report.summaries['GA'].mean
    assert report.summaries['RS'].mean == pytest.approx(2.8, abs=1.5)
    assert len(report.ga_histories) == 10
    for history in report.ga_histories:
        bests = [row.best_fitness for row in history]
        assert len(bests) == 90
        assert all(b >= a for a, b in zip(bests, bests[1:]))
