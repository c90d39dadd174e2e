"""
ModelRegistry - Registre immuable des modèles de substitution
Responsabilité unique: Stocker et retrouver des coefficients par identifiant de modèle

Utilisation dans l'application: chaque gène "model" d'un cas de test
référence une entrée du registre partagé en lecture seule par le simulateur.
"""
from types import MappingProxyType
from typing import Iterable, Iterator, Tuple

from ..models.coefficients import ModelCoefficients


class ModelRegistry:
    """
    Registre des modèles indexé par model_id.

    Responsabilité unique: garantir qu'un registre n'est jamais vide, que les
    identifiants sont uniques et qu'une recherche inconnue échoue explicitement.

    Complexité:
        - get (accès): O(1)
        - ids (clés triées): O(1), calculées à la construction

    Attributes:
        _models: Vue en lecture seule {model_id: ModelCoefficients}
        _ids: Identifiants triés par ordre croissant
    """

    def __init__(self, models: Iterable[ModelCoefficients]):
        """
        Initialise le registre.

        Args:
            models: Coefficients des modèles, dans n'importe quel ordre

        Raises:
            ValueError: Si le registre est vide ou si un identifiant est dupliqué
        """
        table = {}
        for coeffs in models:
            if coeffs.model_id in table:
                raise ValueError(f"Identifiant de modèle dupliqué: {coeffs.model_id}")
            table[coeffs.model_id] = coeffs

        if not table:
            raise ValueError("Registre vide: au moins un modèle est requis")

        self._ids: Tuple[int, ...] = tuple(sorted(table))
        self._models = MappingProxyType({key: table[key] for key in self._ids})

    @classmethod
    def default(cls) -> 'ModelRegistry':
        """Retourne le registre intégré (trois modèles identifiés sur le banc d'essai)."""
        return cls([
            ModelCoefficients(1, 6.0, 0.14170703, 4.3, 0.09531917),
            ModelCoefficients(2, 7.9, 0.11180434, 5.2, 0.04803319),
            ModelCoefficients(3, 7.0, 0.13425024, 3.8, 0.07661568),
        ])

    def get(self, model_id: int) -> ModelCoefficients:
        """
        Récupère les coefficients d'un modèle.

        Args:
            model_id: Identifiant du modèle

        Returns:
            ModelCoefficients du modèle

        Raises:
            KeyError: Si le modèle n'existe pas
        """
        try:
            return self._models[model_id]
        except KeyError as err:
            raise KeyError(
                f"Modèle {model_id} inconnu (modèles disponibles: "
                f"{', '.join(str(i) for i in self._ids)})"
            ) from err

    def ids(self) -> Tuple[int, ...]:
        """Retourne les identifiants triés."""
        return self._ids

    def models(self) -> Tuple[ModelCoefficients, ...]:
        """Retourne les modèles dans l'ordre des identifiants."""
        return tuple(self._models.values())

    def max_step_excursion(self) -> float:
        """Plus grande variation en une minute parmi tous les modèles."""
        return max(coeffs.max_step_excursion() for coeffs in self._models.values())

    def __contains__(self, model_id) -> bool:
        return model_id in self._models

    def __iter__(self) -> Iterator[ModelCoefficients]:
        return iter(self._models.values())

    def __len__(self) -> int:
        return len(self._ids)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModelRegistry):
            return NotImplemented
        return self.models() == other.models()

    def __hash__(self) -> int:
        return hash(self.models())

    def __getstate__(self):
        return {'models': self.models()}

    def __setstate__(self, state):
        self.__init__(state['models'])

    def __str__(self) -> str:
        """Retourne une représentation textuelle du registre."""
        return "\n".join(str(coeffs) for coeffs in self._models.values())

    def __repr__(self) -> str:
        """Retourne une représentation pour le débogage."""
        return f"ModelRegistry(ids={list(self._ids)})"
