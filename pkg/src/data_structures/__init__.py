"""
Data Structures package - Structures de données du domaine

Ce package contient :
    - ModelRegistry : table immuable des modèles de substitution indexée par identifiant
"""
from .model_registry import ModelRegistry

__all__ = ['ModelRegistry']
