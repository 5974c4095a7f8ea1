"""Tests for core.log and the package's default logging state."""
import importlib

from loguru import logger

import core
from core.factorize import factorize_ev_periodic
from core.log import configure_logging


def _record_names(run):
    seen = []
    sink_id = logger.add(lambda message: seen.append(message.record["name"]), level="DEBUG")
    try:
        run()
    finally:
        logger.remove(sink_id)
    return seen


def test_core_is_silent_until_configured(iw, sigma_alt):
    importlib.reload(core)
    assert _record_names(lambda: factorize_ev_periodic(iw("ab(a)"), sigma_alt)) == []


def test_configure_logging_enables_core(iw, sigma_alt):
    configure_logging("DEBUG")
    try:
        seen = _record_names(lambda: factorize_ev_periodic(iw("ab(a)"), sigma_alt))
    finally:
        configure_logging("WARNING")
    assert "core.factorize" in seen
