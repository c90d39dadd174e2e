"""
Services package - Services métier (modèles, identification, génération, simulation, recherche)
"""
from .surrogate_models import eval_on, eval_off, synthesize_trace
from .system_identification import (
    fit_mode, fit_model, identify_model, evaluate_model, segment_raw_trace, fit_registry,
)
from .scenario_generator import (
    generate_test_case, generate_population, rescale_durations, repair, constraint_violations,
)
from .simulator import ThermostatController, expected_trace, simulate, fitness
from .evaluator import FitnessEvaluator
from .genetic_algorithm import (
    tournament_select, crossover_one_point, mutate_exchange, mutate_change_variable, run_ga,
)
from .random_search import run_random_search
from .comparison import compare, summarize

__all__ = [
    'eval_on', 'eval_off', 'synthesize_trace',
    'fit_mode', 'fit_model', 'identify_model', 'evaluate_model', 'segment_raw_trace',
    'fit_registry',
    'generate_test_case', 'generate_population', 'rescale_durations', 'repair',
    'constraint_violations',
    'ThermostatController', 'expected_trace', 'simulate', 'fitness',
    'FitnessEvaluator',
    'tournament_select', 'crossover_one_point', 'mutate_exchange', 'mutate_change_variable',
    'run_ga', 'run_random_search', 'compare', 'summarize',
]
