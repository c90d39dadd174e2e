"""
ScenarioRepository - Repository pour les documents JSON de cas de test
Format: {"tc": [{"st": {"temp": 21.3, "duration": 120, "model": 2, "mode": "ON"}}, ...]}
"""
import json
from pathlib import Path
from typing import Any, Dict, Union

from ..models.coefficients import Mode
from ..models.scenario import ScenarioState, TestCase


def scenario_to_document(tc: TestCase) -> Dict[str, Any]:
    """
    Convertit un cas de test en document (clés "tc" et "st").

    Args:
        tc: Cas de test

    Returns:
        Dictionnaire sérialisable en JSON
    """
    genes = []
    for state in tc:
        gene = {
            'temp': state.target_temp,
            'duration': state.duration,
            'model': state.model_id,
        }
        if state.mode_hint is not None:
            gene['mode'] = state.mode_hint.value
        genes.append({'st': gene})
    return {'tc': genes}


def scenario_from_document(document: Any) -> TestCase:
    """
    Reconstruit un cas de test depuis un document.

    Raises:
        ValueError: Si la structure ou une valeur du document est invalide
    """
    if not isinstance(document, dict) or not isinstance(document.get('tc'), list):
        raise ValueError("Document de cas de test invalide: clé 'tc' (liste) attendue")

    states = []
    for index, gene in enumerate(document['tc']):
        if not isinstance(gene, dict) or not isinstance(gene.get('st'), dict):
            raise ValueError(f"État {index}: objet {{'st': {{...}}}} attendu")
        st = gene['st']
        missing = [key for key in ('temp', 'duration', 'model') if key not in st]
        if missing:
            raise ValueError(f"État {index}: champs manquants {', '.join(missing)}")
        try:
            if isinstance(st['temp'], bool) or not isinstance(st['temp'], (int, float)):
                raise ValueError(f"température non numérique {st['temp']!r}")
            states.append(ScenarioState(
                target_temp=float(st['temp']),
                duration=st['duration'],
                model_id=st['model'],
                mode_hint=Mode(st['mode']) if st.get('mode') is not None else None,
            ))
        except ValueError as e:
            raise ValueError(f"État {index}: {e}") from e

    return TestCase(states)


class ScenarioRepository:
    """
    Lecture et écriture des documents de cas de test.
    """

    def load(self, path: Union[str, Path]) -> TestCase:
        """
        Charge un cas de test.

        Raises:
            FileNotFoundError: Si le fichier n'existe pas
            ValueError: Si le document est mal formé
        """
        file_path = Path(path)
        if not file_path.exists():
            raise FileNotFoundError(f"Le fichier {file_path} n'existe pas")
        try:
            with open(file_path, 'r', encoding='utf-8') as file:
                document = json.load(file)
        except json.JSONDecodeError as e:
            raise ValueError(f"Document JSON mal formé {file_path}: {e}") from e
        return scenario_from_document(document)

    def save(self, tc: TestCase, path: Union[str, Path]) -> None:
        """Écrit un cas de test (JSON indenté, précision complète)."""
        file_path = Path(path)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        with open(file_path, 'w', encoding='utf-8') as file:
            json.dump(scenario_to_document(tc), file, indent=2)
            file.write('\n')
