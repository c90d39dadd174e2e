"""
Manifest - Chargement du manifeste d'exécution et des configurations référencées
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple, Union

from ..config.config_manager import load_json_document
from ..config.settings import GAConfig, GeneratorConfig, SimConfig
from ..data_structures.model_registry import ModelRegistry
from ..factories.config_factory import ConfigFactory
from .coefficient_repository import CSVCoefficientRepository

_PATH_KEYS = ('registry', 'generator_config', 'ga_config', 'sim_config')


@dataclass(frozen=True)
class RunManifest:
    """
    Manifeste d'exécution.

    Attributes:
        registry: Table de coefficients (None = registre intégré)
        generator_config: Document contenant la section 'generator'
        ga_config: Document contenant la section 'ga'
        sim_config: Document contenant la section 'simulation'
        output_dir: Dossier de sortie
        seed: Graine de l'exécution
    """
    registry: Optional[Path]
    generator_config: Optional[Path]
    ga_config: Optional[Path]
    sim_config: Optional[Path]
    output_dir: Path
    seed: int

    @classmethod
    def load(cls, path: Union[str, Path]) -> 'RunManifest':
        """
        Charge un manifeste ; les chemins relatifs partent du dossier du manifeste.

        Raises:
            FileNotFoundError: Si le manifeste ou un chemin référencé n'existe pas
            ValueError: Si un champ est manquant ou invalide
        """
        manifest_path = Path(path)
        document = load_json_document(manifest_path)
        base = manifest_path.parent

        unknown = sorted(set(document) - set(_PATH_KEYS) - {'output_dir', 'seed'})
        if unknown:
            raise ValueError(f"Champs inconnus dans le manifeste: {', '.join(unknown)}")
        if 'output_dir' not in document:
            raise ValueError("Champ manquant dans le manifeste: output_dir")

        paths = {}
        for key in _PATH_KEYS:
            value = document.get(key)
            if value is None:
                paths[key] = None
                continue
            resolved = base / value
            if not resolved.exists():
                raise FileNotFoundError(f"Manifeste: {key} introuvable ({resolved})")
            paths[key] = resolved

        seed = document.get('seed', 0)
        if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
            raise ValueError(f"Graine invalide dans le manifeste: {seed!r}")

        return cls(output_dir=base / document['output_dir'], seed=seed, **paths)

    def load_registry(self) -> ModelRegistry:
        """Charge le registre référencé, ou le registre intégré."""
        if self.registry is None:
            return ModelRegistry.default()
        return CSVCoefficientRepository().load(self.registry)

    def load_configs(self) -> Tuple[GeneratorConfig, GAConfig, SimConfig]:
        """Charge les trois configurations ; la graine du manifeste s'applique au GA."""
        generator = _section(self.generator_config, 'generator')
        ga = _section(self.ga_config, 'ga')
        ga['rng_seed'] = self.seed
        simulation = _section(self.sim_config, 'simulation')
        return (
            ConfigFactory.create_generator_config(generator),
            ConfigFactory.create_ga_config(ga),
            ConfigFactory.create_sim_config(simulation),
        )


def _section(path: Optional[Path], name: str) -> dict:
    if path is None:
        return {}
    return dict(load_json_document(path).get(name, {}))
