"""
Surrogate models - Évaluation des équations exponentielles de chauffe et d'arrêt
Fonctions pures : aucune donnée partagée, utilisables par plusieurs processus.
"""
import math

import numpy as np

from ..models.coefficients import Mode, ModelCoefficients


def _check_elapsed(t: float) -> None:
    if t < 0:
        raise ValueError(f"Le temps écoulé doit être ≥ 0 (reçu {t})")


def eval_on(coeffs: ModelCoefficients, t0: float, t: float) -> float:
    """
    Température après t minutes de chauffe depuis t0.

    k_on1 * (1 - exp(-k_on2 * t)) + t0, écrit avec expm1 pour rester
    exactement égal à t0 en t = 0.

    Args:
        coeffs: Coefficients du modèle
        t0: Température d'ancrage (°C)
        t: Temps écoulé depuis l'ancrage (minutes)

    Returns:
        Température (°C)

    Raises:
        ValueError: Si t est négatif
    """
    _check_elapsed(t)
    return t0 - coeffs.k_on1 * math.expm1(-coeffs.k_on2 * t)


def eval_off(coeffs: ModelCoefficients, t0: float, t: float) -> float:
    """
    Température après t minutes d'arrêt depuis t0.

    k_off1 * exp(-k_off2 * t) + t0 - k_off1.

    Args:
        coeffs: Coefficients du modèle
        t0: Température d'ancrage (°C)
        t: Temps écoulé depuis l'ancrage (minutes)

    Returns:
        Température (°C)

    Raises:
        ValueError: Si t est négatif
    """
    _check_elapsed(t)
    return t0 + coeffs.k_off1 * math.expm1(-coeffs.k_off2 * t)


def mode_curve(mode: Mode, k1: float, k2: float, t0: float, times) -> np.ndarray:
    """
    Version vectorielle des deux équations, paramétrée par (k1, k2).

    Args:
        mode: Mode du segment
        k1: Coefficient d'amplitude
        k2: Taux de décroissance
        t0: Température d'ancrage
        times: Tableau des temps écoulés

    Returns:
        Tableau des températures
    """
    decay = np.expm1(-k2 * np.asarray(times, dtype=float))
    if mode is Mode.ON:
        return t0 - k1 * decay
    return t0 + k1 * decay


def synthesize_trace(coeffs: ModelCoefficients, mode: Mode, t0: float, minutes: int,
                     noise_sigma: float = 0.0, rng=None):
    """
    Génère une trace synthétique (temps, températures) pour un mode.

    Args:
        coeffs: Modèle générateur
        mode: Mode simulé
        t0: Température de départ
        minutes: Nombre d'échantillons (un par minute, t = 0 .. minutes-1)
        noise_sigma: Écart-type du bruit gaussien ajouté (°C)
        rng: numpy.random.Generator (requis si noise_sigma > 0)

    Returns:
        Tuple (times, values) de tableaux numpy
    """
    times = np.arange(minutes, dtype=float)
    if mode is Mode.ON:
        values = mode_curve(mode, coeffs.k_on1, coeffs.k_on2, t0, times)
    else:
        values = mode_curve(mode, coeffs.k_off1, coeffs.k_off2, t0, times)

    if noise_sigma > 0:
        if rng is None:
            raise ValueError("Un générateur aléatoire est requis pour ajouter du bruit")
        values = values + rng.normal(0.0, noise_sigma, size=values.shape)
    return times, values
