"""
System identification - Ajustement des coefficients par moindres carrés non linéaires

Levenberg-Marquardt avec jacobiens analytiques des deux équations. Le taux
de décroissance k2 est contraint à rester strictement positif : un pas qui
le rendrait négatif est rejeté et l'amortissement augmenté.
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..data_structures.model_registry import ModelRegistry
from ..models.coefficients import Mode, ModelCoefficients
from ..models.trace import FitResult, TraceSegment, MIN_SEGMENT_SAMPLES
from .surrogate_models import mode_curve

_logger = logging.getLogger(__name__)

MAX_ITERATIONS = 200
RELATIVE_TOLERANCE = 1e-10
INITIAL_DAMPING = 1e-3
MAX_DAMPING = 1e16


def _arrays(segment: TraceSegment) -> Tuple[np.ndarray, np.ndarray]:
    return np.asarray(segment.times, dtype=float), np.asarray(segment.values, dtype=float)


def residuals(params: Sequence[float], segment: TraceSegment) -> np.ndarray:
    """
    Résidus (modèle - mesures) pour des paramètres (k1, k2).

    T0 est la première mesure du segment ; il n'est pas ajusté.
    """
    times, values = _arrays(segment)
    k1, k2 = params
    return mode_curve(segment.mode, k1, k2, segment.start_temp, times) - values


def jacobian(params: Sequence[float], segment: TraceSegment) -> np.ndarray:
    """
    Jacobien analytique des résidus par rapport à (k1, k2).

    Returns:
        Tableau (n, 2)
    """
    times, _ = _arrays(segment)
    k1, k2 = params
    decay = np.exp(-k2 * times)
    if segment.mode is Mode.ON:
        d_k1 = -np.expm1(-k2 * times)
        d_k2 = k1 * times * decay
    else:
        d_k1 = np.expm1(-k2 * times)
        d_k2 = -k1 * times * decay
    return np.column_stack((d_k1, d_k2))


def objective(params: Sequence[float], segment: TraceSegment) -> float:
    """Somme des carrés des résidus."""
    r = residuals(params, segment)
    return float(r @ r)


def objective_gradient(params: Sequence[float], segment: TraceSegment) -> np.ndarray:
    """Gradient analytique de la somme des carrés : 2 J^T r."""
    return 2.0 * jacobian(params, segment).T @ residuals(params, segment)


def initial_guess(segment: TraceSegment) -> np.ndarray:
    """Point de départ : k1 = |y_fin - y_début| (au moins 0.1), k2 = 0.1."""
    k1 = max(abs(segment.values[-1] - segment.values[0]), 0.1)
    return np.array([k1, 0.1])


def fit_mode(segment: TraceSegment, max_iterations: int = MAX_ITERATIONS,
             tolerance: float = RELATIVE_TOLERANCE) -> FitResult:
    """
    Ajuste (k1, k2) de l'équation du mode du segment.

    Args:
        segment: Segment mesuré dans un seul mode
        max_iterations: Nombre maximal d'itérations
        tolerance: Décroissance relative minimale de l'objectif

    Returns:
        FitResult ; converged=False avec la meilleure estimation si la limite
        d'itérations est atteinte

    Raises:
        ValueError: Si le segment est dégénéré (températures constantes)
    """
    if max(segment.values) == min(segment.values):
        raise ValueError("Segment dégénéré: toutes les températures sont égales")

    params = initial_guess(segment)
    r = residuals(params, segment)
    cost = float(r @ r)
    damping = INITIAL_DAMPING
    converged = False
    iteration = 0

    while iteration < max_iterations:
        iteration += 1
        jac = jacobian(params, segment)
        gradient = jac.T @ r
        normal = jac.T @ jac
        scale = np.diag(np.maximum(np.diag(normal), 1e-12))

        accepted = False
        while damping <= MAX_DAMPING:
            try:
                step = np.linalg.solve(normal + damping * scale, -gradient)
            except np.linalg.LinAlgError:
                damping *= 10.0
                continue
            candidate = params + step
            if candidate[1] <= 0.0 or not np.all(np.isfinite(candidate)):
                damping *= 10.0
                continue
            candidate_r = residuals(candidate, segment)
            candidate_cost = float(candidate_r @ candidate_r)
            if candidate_cost < cost:
                accepted = True
                break
            damping *= 10.0

        if not accepted:
            # aucun pas ne réduit l'objectif : point stationnaire
            converged = True
            break

        decrease = (cost - candidate_cost) / cost
        params, r, cost = candidate, candidate_r, candidate_cost
        damping = max(damping / 10.0, 1e-12)
        if cost == 0.0 or decrease < tolerance:
            converged = True
            break

    rmse = math.sqrt(cost / len(segment))
    if not converged:
        _logger.warning(
            "Ajustement %s non convergé après %d itérations (rmse=%.4f)",
            segment.mode.value, iteration, rmse,
        )
    return FitResult(
        k1=float(params[0]), k2=float(params[1]), rmse=rmse,
        iterations=iteration, converged=converged,
    )


def identify_model(on_segment: TraceSegment, off_segment: TraceSegment,
                   model_id: int, condition: Optional[str] = None
                   ) -> Tuple[ModelCoefficients, FitResult, FitResult]:
    """
    Ajuste les deux modes et retourne le modèle avec les deux diagnostics.

    Raises:
        ValueError: Si les modes des segments ne correspondent pas, ou si un
            coefficient ajusté n'est pas positif
    """
    if on_segment.mode is not Mode.ON:
        raise ValueError("Le segment de chauffe doit être en mode ON")
    if off_segment.mode is not Mode.OFF:
        raise ValueError("Le segment d'arrêt doit être en mode OFF")

    on_fit = fit_mode(on_segment)
    off_fit = fit_mode(off_segment)

    for name, value in (('k_on1', on_fit.k1), ('k_on2', on_fit.k2),
                        ('k_off1', off_fit.k1), ('k_off2', off_fit.k2)):
        if value <= 0:
            raise ValueError(
                f"Coefficient ajusté {name}={value:.6g} non positif: structure "
                f"de modèle invalide pour ces données (modèle {model_id})"
            )

    coeffs = ModelCoefficients(
        model_id=model_id, k_on1=on_fit.k1, k_on2=on_fit.k2,
        k_off1=off_fit.k1, k_off2=off_fit.k2, condition=condition,
    )
    return coeffs, on_fit, off_fit


def fit_model(on_segment: TraceSegment, off_segment: TraceSegment,
              model_id: int, condition: Optional[str] = None) -> ModelCoefficients:
    """
    Combine l'ajustement des modes ON et OFF en un seul modèle.

    Args:
        on_segment: Segment mesuré après une commande "switch on"
        off_segment: Segment mesuré après une commande "switch off"
        model_id: Identifiant du modèle créé
        condition: Étiquette de condition environnementale (optionnel)

    Returns:
        ModelCoefficients
    """
    coeffs, _, _ = identify_model(on_segment, off_segment, model_id, condition)
    return coeffs


def evaluate_model(coeffs: ModelCoefficients, segment: TraceSegment) -> float:
    """
    Évalue un modèle sur un segment : rmse entre l'équation et les mesures.

    Args:
        coeffs: Modèle à évaluer
        segment: Segment de référence

    Returns:
        rmse (°C)
    """
    if segment.mode is Mode.ON:
        params = (coeffs.k_on1, coeffs.k_on2)
    else:
        params = (coeffs.k_off1, coeffs.k_off2)
    r = residuals(params, segment)
    return math.sqrt(float(r @ r) / len(segment))


def segment_raw_trace(raw: Sequence[Tuple[float, float, Mode]]
                      ) -> Tuple[List[TraceSegment], int]:
    """
    Découpe une trace brute à chaque changement de mode.

    Args:
        raw: Échantillons (t en minutes, température, mode) ordonnés

    Returns:
        Tuple (segments, nombre d'échantillons écartés) ; les segments de
        moins de 3 échantillons sont écartés

    Raises:
        ValueError: Si la trace est vide ou si le temps n'est pas strictement croissant
    """
    if not raw:
        raise ValueError("Trace brute vide")

    for index in range(1, len(raw)):
        if raw[index][0] <= raw[index - 1][0]:
            raise ValueError(
                f"Temps non croissant à l'échantillon {index}: "
                f"{raw[index - 1][0]} puis {raw[index][0]}"
            )

    runs: List[List[Tuple[float, float, Mode]]] = []
    for sample in raw:
        if runs and runs[-1][-1][2] is sample[2]:
            runs[-1].append(sample)
        else:
            runs.append([sample])

    segments = []
    dropped = 0
    for run in runs:
        if len(run) < MIN_SEGMENT_SAMPLES:
            dropped += len(run)
            continue
        start = run[0][0]
        segments.append(TraceSegment(
            mode=run[0][2],
            times=tuple(t - start for t, _, _ in run),
            values=tuple(y for _, y, _ in run),
        ))

    if dropped:
        _logger.warning("%d échantillon(s) écarté(s): segments trop courts", dropped)
    return segments, dropped


@dataclass(frozen=True)
class ModelReport:
    """Diagnostic d'un modèle identifié par fit_registry."""
    coefficients: ModelCoefficients
    on_fit: FitResult
    off_fit: FitResult

    @property
    def converged(self) -> bool:
        return self.on_fit.converged and self.off_fit.converged


def fit_registry(segments: Sequence[TraceSegment]) -> Tuple[ModelRegistry, List[ModelReport]]:
    """
    Associe les segments ON et OFF deux à deux et ajuste un modèle par paire.

    Les modèles sont numérotés 1..n dans l'ordre où les paires se complètent ;
    un segment resté sans partenaire est ignoré.

    Raises:
        ValueError: Si aucune paire ON/OFF n'est disponible
    """
    reports: List[ModelReport] = []
    pending = {Mode.ON: None, Mode.OFF: None}

    for segment in segments:
        if pending[segment.mode] is not None:
            _logger.warning("Segment %s sans partenaire ignoré", segment.mode.value)
        pending[segment.mode] = segment
        if pending[Mode.ON] is not None and pending[Mode.OFF] is not None:
            coeffs, on_fit, off_fit = identify_model(
                pending[Mode.ON], pending[Mode.OFF], model_id=len(reports) + 1
            )
            reports.append(ModelReport(coeffs, on_fit, off_fit))
            pending = {Mode.ON: None, Mode.OFF: None}

    for mode, segment in pending.items():
        if segment is not None:
            _logger.warning("Segment %s final sans partenaire ignoré", mode.value)

    if not reports:
        raise ValueError("Aucune paire de segments ON/OFF exploitable dans la trace")

    return ModelRegistry(report.coefficients for report in reports), reports
