"""
Falsification de thermostat - Package principal
"""
