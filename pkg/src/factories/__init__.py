"""
Factories package - Factories pour créer les objets
"""
from .config_factory import ConfigFactory, to_document

__all__ = ['ConfigFactory', 'to_document']
