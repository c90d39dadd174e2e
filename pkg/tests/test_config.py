"""
Tests pour la configuration (ConfigManager, ConfigFactory, dataclasses) — style pytest
Convention: test_<nom_de_la_fonction_testée>
"""
import json
import logging

import pytest

from src.config.config_manager import ConfigManager, load_json_document
from src.config.settings import GAConfig, GeneratorConfig, SimConfig
from src.factories.config_factory import ConfigFactory, to_document
from src.utils.logger import configure_logging


# ── Tests des dataclasses ───────────────────────────────


def test_generator_config_defauts():
    """Vérifie les valeurs par défaut du générateur."""
    cfg = GeneratorConfig()

    assert (cfg.p_switch, cfg.p_stay) == (0.9, 0.1)
    assert cfg.temp_bounds == (16.0, 25.0)
    assert cfg.duration_bounds == (15, 360)
    assert cfg.state_count_bounds == (5, 12)
    assert cfg.horizon == 1440


@pytest.mark.parametrize("overrides", [
    {'p_switch': 0.8},
    {'p_switch': 1.2, 'p_stay': -0.2},
    {'temp_bounds': (25.0, 16.0)},
    {'duration_bounds': (0, 360)},
    {'horizon': 0},
])
def test_generator_config_invalide(overrides):
    """Vérifie le refus des probabilités et bornes incohérentes."""
    with pytest.raises(ValueError):
        GeneratorConfig(**overrides)


def test_generator_config_listes_normalisees():
    """Vérifie que les bornes lues en JSON (listes) deviennent des tuples."""
    cfg = GeneratorConfig(temp_bounds=[17, 24])

    assert cfg.temp_bounds == (17.0, 24.0)


def test_sim_config_invalide():
    """Vérifie le refus d'une hystérésis négative et d'une température insensée."""
    with pytest.raises(ValueError):
        SimConfig(hysteresis=-0.1)
    with pytest.raises(ValueError):
        SimConfig(initial_temp=55.0)
    with pytest.raises(ValueError):
        SimConfig(step=2)


@pytest.mark.parametrize("overrides", [
    {'mutation_rate': 1.5},
    {'population_size': 1},
    {'generations': 0},
    {'tournament_k': 1},
    {'evaluation_budget': 0},
    {'search_mode': 'genes'},
    {'workers': 0},
])
def test_ga_config_invalide(overrides):
    """Vérifie le refus des paramètres incohérents."""
    with pytest.raises(ValueError):
        GAConfig(**overrides)


# ── Tests ConfigManager ─────────────────────────────────


def test_config_manager_singleton():
    """Vérifie qu'une seule instance existe."""
    assert ConfigManager() is ConfigManager()


def test_config_manager_sections():
    """Vérifie que config.json reprend les valeurs par défaut."""
    manager = ConfigManager()

    assert manager.get_section('ga')['generations'] == 90
    assert manager.get_section('simulation')['hysteresis'] == 0.1
    assert manager.get_logging_level() == 'INFO'


def test_config_manager_section_inconnue():
    """Vérifie qu'une section inconnue est refusée."""
    with pytest.raises(ValueError):
        ConfigManager().get_section('api')


def test_load_json_document_erreurs(tmp_path):
    """Vérifie les erreurs de fichier absent, mal formé ou non objet."""
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding='utf-8')
    array = tmp_path / "array.json"
    array.write_text("[1, 2]", encoding='utf-8')

    with pytest.raises(FileNotFoundError):
        load_json_document(tmp_path / "absent.json")
    with pytest.raises(ValueError, match="format"):
        load_json_document(broken)
    with pytest.raises(ValueError, match="objet JSON"):
        load_json_document(array)


# ── Tests ConfigFactory ─────────────────────────────────


def test_factory_surcharge():
    """Vérifie qu'une surcharge partielle garde les autres valeurs par défaut."""
    cfg = ConfigFactory.create_ga_config({'generations': 10})

    assert cfg.generations == 10
    assert cfg.population_size == 100
    assert cfg.evaluation_budget == 9000


def test_factory_champ_inconnu():
    """Vérifie qu'un champ inconnu est refusé avec son nom."""
    with pytest.raises(ValueError, match="popsize"):
        ConfigFactory.create_ga_config({'popsize': 10})


def test_factory_from_document():
    """Vérifie la création des trois configurations depuis un document."""
    gen_cfg, ga_cfg, sim_cfg = ConfigFactory.from_document({
        'generator': {'horizon': 720},
        'simulation': {'initial_temp': 18.0},
        'logging': {'level': 'DEBUG'},
    })

    assert gen_cfg.horizon == 720
    assert ga_cfg == GAConfig()
    assert sim_cfg.initial_temp == 18.0


def test_factory_section_inconnue():
    """Vérifie qu'une section inconnue est refusée."""
    with pytest.raises(ValueError, match="Sections inconnues"):
        ConfigFactory.from_document({'stations': {}})


def test_default_document_serialisable():
    """Vérifie que le document par défaut est du JSON et se relit à l'identique."""
    document = json.loads(json.dumps(ConfigFactory.default_document()))

    assert document['generator']['temp_bounds'] == [16.0, 25.0]
    assert ConfigFactory.from_document(document) == (GeneratorConfig(), GAConfig(), SimConfig())


def test_to_document_tuples_en_listes():
    """Vérifie la conversion des bornes en listes."""
    assert to_document(GeneratorConfig())['state_count_bounds'] == [5, 12]


# ── Tests configure_logging ─────────────────────────────


def test_configure_logging_idempotent():
    """Vérifie qu'un seul gestionnaire est installé et que le niveau est appliqué."""
    configure_logging('DEBUG')
    configure_logging('WARNING')

    logger = logging.getLogger('src')
    handlers = [h for h in logger.handlers if getattr(h, '_thermo_handler', False)]
    assert len(handlers) == 1
    assert logger.level == logging.WARNING
