"""
Tests pour les équations de chauffe et d'arrêt — style pytest
Convention: test_<nom_de_la_fonction_testée>
"""
from decimal import Decimal, localcontext

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.data_structures.model_registry import ModelRegistry
from src.models.coefficients import Mode, ModelCoefficients
from src.services.surrogate_models import (
    eval_on, eval_off, mode_curve, synthesize_trace,
)

REGISTRY = ModelRegistry.default()

coefficients = st.builds(
    ModelCoefficients,
    model_id=st.just(1),
    k_on1=st.floats(0.5, 10.0),
    k_on2=st.floats(0.01, 0.5),
    k_off1=st.floats(0.5, 10.0),
    k_off2=st.floats(0.01, 0.5),
)
temperatures = st.floats(0.0, 40.0)
elapsed = st.floats(0.0, 30.0)


def _reference(k1, k2, t0, t, sign):
    """Évaluation en précision étendue (50 chiffres) de k1*(1-exp(-k2 t)) décalé."""
    with localcontext() as ctx:
        ctx.prec = 50
        k1, k2, t0, t = (Decimal(float(v)) for v in (k1, k2, t0, t))
        delta = k1 * (1 - (-k2 * t).exp())
        return float(t0 + delta if sign > 0 else t0 - delta)


# ── Tests eval_on ───────────────────────────────────────


def test_eval_on_origine():
    """Vérifie qu'en t=0 la température vaut t0."""
    assert eval_on(REGISTRY.get(1), 20.0, 0) == 20.0


def test_eval_on_asymptote():
    """Vérifie l'asymptote t0 + k_on1."""
    assert eval_on(REGISTRY.get(1), 20.0, 10000) == pytest.approx(26.0, abs=1e-6)


def test_eval_on_dix_minutes():
    """Vérifie la valeur après 10 minutes de chauffe (modèle 1)."""
    assert eval_on(REGISTRY.get(1), 20.0, 10) == pytest.approx(24.546, abs=1e-3)


def test_eval_on_temps_negatif():
    """Vérifie qu'un temps négatif est refusé."""
    with pytest.raises(ValueError):
        eval_on(REGISTRY.get(1), 20.0, -1)


# ── Tests eval_off ──────────────────────────────────────


def test_eval_off_origine():
    """Vérifie qu'en t=0 la température vaut t0."""
    assert eval_off(REGISTRY.get(1), 26.0, 0) == 26.0


def test_eval_off_asymptote():
    """Vérifie l'asymptote t0 - k_off1."""
    assert eval_off(REGISTRY.get(1), 26.0, 10000) == pytest.approx(21.7, abs=1e-6)


def test_eval_off_vingt_minutes():
    """Vérifie la valeur après 20 minutes d'arrêt (modèle 2)."""
    assert eval_off(REGISTRY.get(2), 24.0, 20) == pytest.approx(20.790, abs=1e-3)


def test_eval_off_temps_negatif():
    """Vérifie qu'un temps négatif est refusé."""
    with pytest.raises(ValueError):
        eval_off(REGISTRY.get(1), 20.0, -0.5)


# ── Tests de précision et propriétés ────────────────────


def test_precision_etendue():
    """Compare 1000 évaluations à une référence en précision étendue (1e-12)."""
    rng = np.random.default_rng(12)
    for _ in range(1000):
        k1, k3 = rng.uniform(0.5, 10.0, size=2)
        k2, k4 = rng.uniform(0.01, 0.5, size=2)
        t0 = float(rng.uniform(0.0, 40.0))
        t = float(rng.uniform(0.0, 1440.0))
        coeffs = ModelCoefficients(1, float(k1), float(k2), float(k3), float(k4))

        assert abs(eval_on(coeffs, t0, t) - _reference(k1, k2, t0, t, +1)) <= 1e-12
        assert abs(eval_off(coeffs, t0, t) - _reference(k3, k4, t0, t, -1)) <= 1e-12


@given(coefficients, temperatures)
def test_continuite_entree_de_mode(coeffs, t0):
    """Vérifie que les deux équations valent exactement t0 en t=0."""
    assert eval_on(coeffs, t0, 0) == t0
    assert eval_off(coeffs, t0, 0) == t0


@given(coefficients, temperatures, elapsed, st.floats(0.01, 50.0))
def test_monotonie(coeffs, t0, t1, gap):
    """Vérifie que la chauffe croît et que l'arrêt décroît strictement."""
    t2 = t1 + gap

    assert eval_on(coeffs, t0, t2) > eval_on(coeffs, t0, t1)
    assert eval_off(coeffs, t0, t2) < eval_off(coeffs, t0, t1)


@given(coefficients, temperatures, elapsed)
def test_bornes(coeffs, t0, t):
    """Vérifie t0 ≤ ON < t0 + k_on1 et t0 - k_off1 < OFF ≤ t0."""
    assert t0 <= eval_on(coeffs, t0, t) < t0 + coeffs.k_on1
    assert t0 - coeffs.k_off1 < eval_off(coeffs, t0, t) <= t0


def test_mode_curve_vectorielle():
    """Vérifie que la version vectorielle reproduit les évaluations scalaires."""
    coeffs = REGISTRY.get(2)
    times = np.arange(30)

    curve = mode_curve(Mode.OFF, coeffs.k_off1, coeffs.k_off2, 24.0, times)

    expected = [eval_off(coeffs, 24.0, t) for t in times]
    np.testing.assert_allclose(curve, expected, rtol=0, atol=1e-12)


def test_synthesize_trace_bruit():
    """Vérifie la longueur de la trace synthétique et l'amplitude du bruit."""
    coeffs = REGISTRY.get(1)

    times, clean = synthesize_trace(coeffs, Mode.ON, 18.0, 60)
    _, noisy = synthesize_trace(coeffs, Mode.ON, 18.0, 60, 0.2, np.random.default_rng(0))

    assert len(times) == 60
    assert clean[0] == 18.0
    assert 0.1 < np.std(noisy - clean) < 0.3


def test_synthesize_trace_bruit_sans_generateur():
    """Vérifie qu'un bruit sans générateur aléatoire est refusé."""
    with pytest.raises(ValueError):
        synthesize_trace(REGISTRY.get(1), Mode.ON, 18.0, 60, noise_sigma=0.2)
