"""
Tests pour le registre de modèles ModelRegistry — style pytest
Convention: test_<nom_de_la_fonction_testée>
"""
import pickle

import pytest

from src.data_structures.model_registry import ModelRegistry
from src.models.coefficients import ModelCoefficients


# ── Fixtures ────────────────────────────────────────────


@pytest.fixture
def registry():
    """Fixture : registre intégré (trois modèles)."""
    return ModelRegistry.default()


# ── Tests ModelRegistry ─────────────────────────────────


def test_default_registry(registry):
    """Vérifie les trois modèles intégrés, stockés sans arrondi."""
    assert len(registry) == 3
    assert registry.ids() == (1, 2, 3)
    assert registry.get(1).k_on2 == 0.14170703
    assert registry.get(2).k_off2 == 0.04803319
    assert registry.get(3) == ModelCoefficients(3, 7.0, 0.13425024, 3.8, 0.07661568)


def test_registry_vide():
    """Vérifie qu'un registre vide est refusé."""
    with pytest.raises(ValueError, match="vide"):
        ModelRegistry([])


def test_registry_identifiant_duplique():
    """Vérifie que l'erreur nomme l'identifiant dupliqué."""
    models = [
        ModelCoefficients(2, 6.0, 0.1, 4.0, 0.1),
        ModelCoefficients(2, 7.0, 0.1, 4.0, 0.1),
    ]

    with pytest.raises(ValueError, match="dupliqué: 2"):
        ModelRegistry(models)


def test_registry_get_inconnu(registry):
    """Vérifie qu'un modèle inconnu lève une KeyError qui le nomme."""
    with pytest.raises(KeyError, match="99"):
        registry.get(99)


def test_registry_ordre_des_identifiants():
    """Vérifie que les identifiants sont triés quel que soit l'ordre d'entrée."""
    registry = ModelRegistry([
        ModelCoefficients(5, 6.0, 0.1, 4.0, 0.1),
        ModelCoefficients(1, 6.0, 0.2, 4.0, 0.1),
    ])

    assert registry.ids() == (1, 5)
    assert [m.model_id for m in registry] == [1, 5]


def test_registry_contains(registry):
    """Vérifie l'opérateur in."""
    assert 2 in registry
    assert 4 not in registry


def test_registry_lecture_seule(registry):
    """Vérifie que la table interne ne peut pas être modifiée."""
    with pytest.raises(TypeError):
        registry._models[4] = registry.get(1)  # pylint: disable=protected-access


def test_registry_max_step_excursion(registry):
    """Vérifie que l'excursion maximale est celle du modèle le plus rapide."""
    expected = max(m.max_step_excursion() for m in registry.models())

    assert registry.max_step_excursion() == expected


def test_registry_pickle(registry):
    """Vérifie que le registre traverse la frontière des processus."""
    restored = pickle.loads(pickle.dumps(registry))

    assert restored == registry
    assert restored.get(2).k_on1 == 7.9
