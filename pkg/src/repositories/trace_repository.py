"""
TraceRepository - Lecture des traces mesurées et export des traces simulées
"""
from pathlib import Path
from typing import Iterable, List, Tuple, Union

from ..models.coefficients import Mode
from ..models.trace import Trace
from ..utils.csv_reader import read_csv, write_csv, FIRST_DATA_LINE

RAW_COLUMNS = ('t_minutes', 'temperature_c', 'mode')
TRACE_COLUMNS = ('minute_index', 'expected_c', 'simulated_c')

RawSample = Tuple[float, float, Mode]


def read_raw_trace(path: Union[str, Path]) -> List[RawSample]:
    """
    Lit une trace brute (t_minutes;temperature_c;mode) avec en-tête.

    Args:
        path: Chemin du fichier

    Returns:
        Échantillons (t, température, mode) dans l'ordre du fichier

    Raises:
        FileNotFoundError: Si le fichier n'existe pas
        ValueError: Fichier vide, en-tête absent ou ligne illisible (numéro
            de ligne indiqué)
    """
    rows = read_csv(path, required_columns=RAW_COLUMNS)
    samples = []
    for index, row in enumerate(rows):
        line = index + FIRST_DATA_LINE
        try:
            samples.append((
                float(row['t_minutes']),
                float(row['temperature_c']),
                Mode((row['mode'] or '').strip().upper()),
            ))
        except (TypeError, ValueError) as e:
            raise ValueError(f"Ligne {line} illisible dans {path}: {e}") from e
    return samples


def write_raw_trace(path: Union[str, Path], samples: Iterable[RawSample]) -> None:
    """Écrit une trace brute au format accepté par read_raw_trace."""
    write_csv(path, RAW_COLUMNS, (
        (repr(float(t)), repr(float(y)), mode.value) for t, y, mode in samples
    ))


def write_trace_comparison(path: Union[str, Path], expected: Trace, simulated: Trace) -> None:
    """
    Exporte les traces attendue et simulée, une ligne par minute.

    Raises:
        ValueError: Si les deux traces n'ont pas la même longueur
    """
    if len(expected) != len(simulated):
        raise ValueError("Traces attendue et simulée de longueurs différentes")
    write_csv(path, TRACE_COLUMNS, (
        (minute, repr(e), repr(s))
        for minute, (e, s) in enumerate(zip(expected, simulated))
    ))
