"""
Scenario generator - Génération des cas de test par chaîne de Markov à deux états

Chaque état visité émet un triplet (température, durée, modèle) tiré
uniformément dans les bornes de la contrainte K ; les durées sont ensuite
remises à l'échelle pour couvrir exactement l'horizon.
"""
import logging
from typing import List, Sequence, Tuple, Union

import numpy as np

from ..config.settings import GeneratorConfig
from ..data_structures.model_registry import ModelRegistry
from ..models.coefficients import Mode
from ..models.scenario import ScenarioState, TestCase

_logger = logging.getLogger(__name__)

SeedLike = Union[int, np.random.SeedSequence]


def rescale_durations(durations: Sequence[int], horizon: int,
                      bounds: Tuple[int, int]) -> Tuple[int, ...]:
    """
    Remet les durées à l'échelle pour que leur somme vaille l'horizon.

    Mise à l'échelle proportionnelle, arrondi, bornage ; le reste est absorbé
    par le dernier état puis, si ses bornes l'en empêchent, par les précédents.

    Args:
        durations: Durées tirées (minutes)
        horizon: Somme visée (minutes)
        bounds: Durées minimale et maximale d'un état

    Returns:
        Durées entières bornées dont la somme vaut exactement l'horizon

    Raises:
        ValueError: Si aucun choix de durées bornées n'atteint l'horizon
    """
    low, high = bounds
    count = len(durations)
    if not count * low <= horizon <= count * high:
        raise ValueError(
            f"Impossible de couvrir {horizon} min avec {count} états de "
            f"{low} à {high} min"
        )

    total = sum(durations)
    scaled = [min(max(int(round(d * horizon / total)), low), high) for d in durations]

    remainder = horizon - sum(scaled)
    for index in reversed(range(count)):
        if remainder == 0:
            break
        if remainder > 0:
            delta = min(high - scaled[index], remainder)
        else:
            delta = -min(scaled[index] - low, -remainder)
        scaled[index] += delta
        remainder -= delta

    return tuple(scaled)


def repair(tc: TestCase, cfg: GeneratorConfig) -> TestCase:
    """
    Restaure les invariants de longueur et d'horizon d'un cas de test.

    Tronque à la longueur maximale ou duplique le dernier état jusqu'à la
    longueur minimale, puis remet les durées à l'échelle.

    Args:
        tc: Cas de test éventuellement invalide
        cfg: Bornes de la contrainte K

    Returns:
        Cas de test réparé
    """
    low, high = cfg.state_count_bounds
    states = list(tc.states[:high])
    while len(states) < low:
        states.append(states[-1])

    durations = [min(max(s.duration, cfg.duration_bounds[0]), cfg.duration_bounds[1])
                 for s in states]
    durations = rescale_durations(durations, cfg.horizon, cfg.duration_bounds)
    return TestCase(states).with_durations(durations)


def generate_test_case(cfg: GeneratorConfig, registry: ModelRegistry,
                       rng: np.random.Generator) -> TestCase:
    """
    Parcourt la chaîne de Markov et tire un cas de test.

    Args:
        cfg: Paramètres de la chaîne et bornes de la contrainte K
        registry: Registre des modèles
        rng: Générateur aléatoire numpy

    Returns:
        TestCase respectant la contrainte K
    """
    count_low, count_high = cfg.state_count_bounds
    temp_low, temp_high = cfg.temp_bounds
    duration_low, duration_high = cfg.duration_bounds
    ids = registry.ids()

    count = int(rng.integers(count_low, count_high + 1))
    mode = Mode.ON if rng.random() < 0.5 else Mode.OFF

    states = []
    for index in range(count):
        if index > 0 and rng.random() < cfg.p_switch:
            mode = mode.toggled()
        states.append(ScenarioState(
            target_temp=round(float(rng.uniform(temp_low, temp_high)), 1),
            duration=int(rng.integers(duration_low, duration_high + 1)),
            model_id=ids[int(rng.integers(len(ids)))],
            mode_hint=mode,
        ))

    tc = TestCase(states)
    return tc.with_durations(
        rescale_durations(tc.durations(), cfg.horizon, cfg.duration_bounds)
    )


def generate_population(n: int, cfg: GeneratorConfig, registry: ModelRegistry,
                        seed: SeedLike) -> List[TestCase]:
    """
    Génère n cas de test indépendants.

    Chaque cas utilise son propre flux dérivé de la graine par
    SeedSequence.spawn : le résultat ne dépend pas de l'ordre de calcul.

    Args:
        n: Nombre de cas de test (≥ 1)
        cfg: Paramètres du générateur
        registry: Registre des modèles
        seed: Graine entière ou SeedSequence

    Returns:
        Liste de n TestCase
    """
    if n < 1:
        raise ValueError(f"n doit être ≥ 1 (reçu {n})")

    sequence = seed if isinstance(seed, np.random.SeedSequence) \
        else np.random.SeedSequence(seed)
    population = [
        generate_test_case(cfg, registry, np.random.default_rng(child))
        for child in sequence.spawn(n)
    ]
    _logger.debug("%d cas de test générés", n)
    return population


def constraint_violations(tc: TestCase, cfg: GeneratorConfig,
                          registry: ModelRegistry) -> List[str]:
    """
    Liste les violations de la contrainte K par un cas de test.

    Args:
        tc: Cas de test à vérifier
        cfg: Bornes admissibles
        registry: Registre actif

    Returns:
        Messages de violation (liste vide si le cas est admissible)
    """
    violations = []
    count_low, count_high = cfg.state_count_bounds
    if not count_low <= len(tc) <= count_high:
        violations.append(
            f"{len(tc)} états hors de [{count_low}, {count_high}]"
        )

    temp_low, temp_high = cfg.temp_bounds
    duration_low, duration_high = cfg.duration_bounds
    for index, state in enumerate(tc):
        if not temp_low <= state.target_temp <= temp_high:
            violations.append(
                f"état {index}: température {state.target_temp} hors de "
                f"[{temp_low}, {temp_high}]"
            )
        if not duration_low <= state.duration <= duration_high:
            violations.append(
                f"état {index}: durée {state.duration} hors de "
                f"[{duration_low}, {duration_high}]"
            )
        if state.model_id not in registry:
            violations.append(f"état {index}: modèle {state.model_id} inconnu")

    slack = len(tc)
    if abs(tc.total_duration - cfg.horizon) > slack:
        violations.append(
            f"durée totale {tc.total_duration} min différente de l'horizon "
            f"{cfg.horizon} min"
        )
    return violations
