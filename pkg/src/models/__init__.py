"""
Models package - Contient les classes de domaine
"""
from .coefficients import Mode, ModelCoefficients
from .scenario import ScenarioState, TestCase
from .trace import Trace, TraceSegment, FitResult
from .results import GenerationStats, EvolutionResult, BoxplotSummary, ComparisonReport

__all__ = [
    'Mode', 'ModelCoefficients', 'ScenarioState', 'TestCase',
    'Trace', 'TraceSegment', 'FitResult',
    'GenerationStats', 'EvolutionResult', 'BoxplotSummary', 'ComparisonReport',
]
