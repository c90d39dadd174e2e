"""
Utils package - Utilitaires réutilisables
"""
from .csv_reader import read_csv, write_csv, FIRST_DATA_LINE
from .logger import configure_logging

__all__ = ['read_csv', 'write_csv', 'FIRST_DATA_LINE', 'configure_logging']
