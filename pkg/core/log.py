"""loguru sink setup. Library modules only log; entry points call configure_logging."""
import sys

from loguru import logger

LOG_FORMAT = "<level>{level: <8}</level> {name}:{function} - {message}"


def configure_logging(level: str = "WARNING") -> None:
    """Replace the sinks with one stderr sink and re-enable the core package's records."""
    logger.remove()
    logger.enable("core")
    logger.add(sys.stderr, level=(level or "WARNING").upper(), format=LOG_FORMAT)
