"""
Simulator - Exécution d'un cas de test sur les modèles de substitution

Un thermostat tout-ou-rien avec bande d'hystérésis pilote le mode actif ;
à chaque commutation et à chaque frontière d'état l'équation active est
ré-ancrée sur la température courante avec un temps local remis à zéro.
"""
import math

import numpy as np

from ..config.settings import SimConfig
from ..data_structures.model_registry import ModelRegistry
from ..models.coefficients import Mode
from ..models.scenario import TestCase
from ..models.trace import Trace


class ThermostatController:
    """
    Contrôleur tout-ou-rien avec hystérésis.

    Passe en chauffe sous target - hysteresis, s'arrête au-dessus de
    target + hysteresis et conserve sa commande entre les deux.

    Attributes:
        target: Consigne courante (°C)
        hysteresis: Demi-largeur de la bande (°C)
        mode: Commande courante
    """

    def __init__(self, hysteresis: float):
        self.hysteresis = hysteresis
        self.target = 0.0
        self.mode = Mode.OFF

    def start_state(self, target: float, temperature: float) -> Mode:
        """Nouvelle consigne : ON si la température est sous la cible, sinon OFF."""
        self.target = target
        self.mode = Mode.ON if temperature < target else Mode.OFF
        return self.mode

    def update(self, temperature: float) -> bool:
        """
        Met à jour la commande d'après la température mesurée.

        Returns:
            True si la commande a changé
        """
        if temperature < self.target - self.hysteresis:
            wanted = Mode.ON
        elif temperature > self.target + self.hysteresis:
            wanted = Mode.OFF
        else:
            return False
        if wanted is self.mode:
            return False
        self.mode = wanted
        return True


def expected_trace(tc: TestCase) -> Trace:
    """
    Comportement attendu : la consigne de chaque état, une valeur par minute.

    Args:
        tc: Cas de test

    Returns:
        Trace constante par morceaux de longueur égale à la durée totale
    """
    values = []
    for state in tc:
        values.extend([float(state.target_temp)] * state.duration)
    return Trace(tuple(values))


def _simulate_values(tc: TestCase, registry: ModelRegistry, cfg: SimConfig) -> list:
    controller = ThermostatController(cfg.hysteresis)
    expm1 = math.expm1
    temperature = cfg.initial_temp
    values = []

    for state in tc:
        coeffs = registry.get(state.model_id)
        mode = controller.start_state(state.target_temp, temperature)
        anchor = temperature
        local_time = 0

        for _ in range(state.duration):
            local_time += 1
            if mode is Mode.ON:
                temperature = anchor - coeffs.k_on1 * expm1(-coeffs.k_on2 * local_time)
            else:
                temperature = anchor + coeffs.k_off1 * expm1(-coeffs.k_off2 * local_time)
            values.append(temperature)

            if controller.update(temperature):
                mode = controller.mode
                anchor = temperature
                local_time = 0

    return values


def simulate(tc: TestCase, registry: ModelRegistry, cfg: SimConfig) -> Trace:
    """
    Simule le thermostat minute par minute.

    Args:
        tc: Cas de test
        registry: Registre partagé en lecture seule
        cfg: Paramètres de simulation

    Returns:
        Trace simulée, alignée sur expected_trace(tc)

    Raises:
        KeyError: Si un modèle du cas de test est absent du registre
    """
    return Trace(tuple(_simulate_values(tc, registry, cfg)))


def fitness(tc: TestCase, registry: ModelRegistry, cfg: SimConfig) -> float:
    """
    Écart RMSE entre comportement simulé et attendu (°C, positif).

    Args:
        tc: Cas de test
        registry: Registre des modèles
        cfg: Paramètres de simulation

    Returns:
        RMSE sur tous les échantillons d'une minute
    """
    simulated = np.fromiter(_simulate_values(tc, registry, cfg), dtype=float)
    expected = np.repeat(
        np.array([state.target_temp for state in tc], dtype=float),
        [state.duration for state in tc],
    )
    deviation = simulated - expected
    return float(np.sqrt(np.mean(deviation * deviation)))
