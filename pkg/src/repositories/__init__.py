"""
Repositories package - Accès aux données
"""
from .coefficient_repository import (
    CoefficientRepository, CSVCoefficientRepository, parse_coefficient_rows,
)
from .scenario_repository import (
    ScenarioRepository, scenario_to_document, scenario_from_document,
)
from .trace_repository import read_raw_trace, write_raw_trace, write_trace_comparison
from .results_repository import (
    config_hash, write_history, write_comparison, write_summary,
)
from .manifest_repository import RunManifest

__all__ = [
    'CoefficientRepository', 'CSVCoefficientRepository', 'parse_coefficient_rows',
    'ScenarioRepository', 'scenario_to_document', 'scenario_from_document',
    'read_raw_trace', 'write_raw_trace', 'write_trace_comparison',
    'config_hash', 'write_history', 'write_comparison', 'write_summary',
    'RunManifest',
]
