"""
Config package - Gestion de la configuration
"""
from .config_manager import ConfigManager, load_json_document
from .settings import GeneratorConfig, SimConfig, GAConfig

__all__ = ['ConfigManager', 'load_json_document', 'GeneratorConfig', 'SimConfig', 'GAConfig']
