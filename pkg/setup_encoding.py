"""
Encodage UTF-8 des sorties et journalisation. Les partitions (∅, ρ_r) et les
diagrammes utilisent des caractères hors ASCII.
"""
import logging
import sys

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def setup_utf8_encoding() -> None:
    """Passe stdout et stderr en UTF-8 quand le flux le permet."""
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, 'reconfigure'):
            stream.reconfigure(encoding='utf-8')


def setup_logging(level: str = "INFO") -> None:
    """
    Configure le logger racine (une seule fois) : format horodaté, sortie
    sur stderr pour laisser stdout aux résultats.
    """
    root = logging.getLogger()
    numeric = logging.getLevelName(level.upper()) if isinstance(level, str) else level
    if not isinstance(numeric, int):
        numeric = logging.INFO
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
    root.setLevel(numeric)
