"""
Logger - Configuration de la journalisation de l'application
Format à étiquettes entre crochets : "  [fit] message"
"""
import logging
import sys

_FORMAT = "  [%(tag)s] %(message)s"


class _TagFilter(logging.Filter):
    """Ajoute l'étiquette courte (dernier composant du nom du logger)."""

    def filter(self, record: logging.LogRecord) -> bool:
        record.tag = record.name.rsplit('.', 1)[-1]
        return True


def configure_logging(level: str = 'INFO') -> None:
    """
    Configure le logger racine du package (une seule fois).

    Args:
        level: Niveau de journalisation ('DEBUG', 'INFO', 'WARNING', ...)
    """
    logger = logging.getLogger('src')
    logger.setLevel(level.upper())

    if not any(getattr(h, '_thermo_handler', False) for h in logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT))
        handler.addFilter(_TagFilter())
        handler._thermo_handler = True  # pylint: disable=protected-access
        logger.addHandler(handler)
