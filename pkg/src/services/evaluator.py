"""
FitnessEvaluator - Évaluation des cas de test avec budget et parallélisme optionnel
"""
import logging
from functools import partial
from multiprocessing import Pool
from typing import List, Optional, Sequence

from ..config.settings import SimConfig
from ..data_structures.model_registry import ModelRegistry
from ..models.scenario import TestCase
from .simulator import fitness

_logger = logging.getLogger(__name__)


class FitnessEvaluator:
    """
    Évalue des lots de cas de test et comptabilise le budget consommé.

    Les évaluations sont indépendantes : avec workers > 1 elles sont réparties
    sur un pool de processus, les résultats restent dans l'ordre du lot.

    Attributes:
        registry: Registre partagé en lecture seule
        sim_cfg: Paramètres de simulation
        budget: Nombre maximal d'évaluations (None = illimité)
        evaluations: Nombre d'évaluations effectuées
    """

    def __init__(self, registry: ModelRegistry, sim_cfg: SimConfig,
                 budget: Optional[int] = None, workers: int = 1):
        self.registry = registry
        self.sim_cfg = sim_cfg
        self.budget = budget
        self.workers = workers
        self.evaluations = 0
        self._pool = None

    def __enter__(self) -> 'FitnessEvaluator':
        if self.workers > 1:
            self._pool = Pool(self.workers)
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()

    def close(self) -> None:
        """Ferme le pool de processus s'il existe."""
        if self._pool is not None:
            self._pool.close()
            self._pool.join()
            self._pool = None

    def remaining(self) -> Optional[int]:
        """Évaluations encore autorisées (None si le budget est illimité)."""
        if self.budget is None:
            return None
        return self.budget - self.evaluations

    def evaluate(self, test_cases: Sequence[TestCase]) -> List[float]:
        """
        Évalue un lot de cas de test.

        Args:
            test_cases: Cas de test à évaluer

        Returns:
            Fitness de chaque cas, dans l'ordre du lot

        Raises:
            ValueError: Si le lot dépasse le budget restant
        """
        remaining = self.remaining()
        if remaining is not None and len(test_cases) > remaining:
            raise ValueError(
                f"Budget dépassé: {len(test_cases)} évaluations demandées, "
                f"{remaining} restantes"
            )

        score = partial(fitness, registry=self.registry, cfg=self.sim_cfg)
        if self._pool is not None:
            results = self._pool.map(score, test_cases)
        else:
            results = [score(tc) for tc in test_cases]

        self.evaluations += len(test_cases)
        return results
