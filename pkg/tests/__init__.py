"""
Package de tests unitaires
"""
