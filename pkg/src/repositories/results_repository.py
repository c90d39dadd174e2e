"""
ResultsRepository - Export des résultats de recherche (historique, comparaison, résumé)
"""
import hashlib
import json
from pathlib import Path
from typing import Any, Dict, Sequence, Union

from ..models.results import ComparisonReport, GenerationStats
from ..utils.csv_reader import write_csv

HISTORY_COLUMNS = ('generation', 'best_fitness', 'mean_fitness')
RUN_COLUMNS = ('method', 'run_index', 'best_fitness')
POOLED_COLUMNS = ('series', 'index', 'fitness')


def config_hash(snapshot: Dict[str, Any]) -> str:
    """Empreinte SHA-256 d'un instantané de configuration (JSON canonique)."""
    canonical = json.dumps(snapshot, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


def write_history(path: Union[str, Path], history: Sequence[GenerationStats]) -> None:
    """Écrit l'historique de convergence (une ligne par génération)."""
    write_csv(path, HISTORY_COLUMNS, (
        (stats.generation, repr(stats.best_fitness), repr(stats.mean_fitness))
        for stats in history
    ))


def write_comparison(runs_path: Union[str, Path], pooled_path: Union[str, Path],
                     report: ComparisonReport) -> None:
    """
    Écrit les séries de la comparaison, prêtes pour un boxplot.

    runs_path reçoit les meilleurs par exécution (séries GA et RS) ;
    pooled_path reçoit tous les individus aléatoires (série RS_ALL).
    """
    rows = [('GA', i, repr(value)) for i, value in enumerate(report.ga_bests)]
    rows += [('RS', i, repr(value)) for i, value in enumerate(report.rs_bests)]
    write_csv(runs_path, RUN_COLUMNS, rows)
    write_csv(pooled_path, POOLED_COLUMNS, (
        ('RS_ALL', i, repr(value)) for i, value in enumerate(report.rs_pooled)
    ))


def write_summary(path: Union[str, Path], summary: Dict[str, Any]) -> None:
    """Écrit un résumé JSON déterministe (clés triées)."""
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    with open(file_path, 'w', encoding='utf-8') as file:
        json.dump(summary, file, indent=2, sort_keys=True)
        file.write('\n')
