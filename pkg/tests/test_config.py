"""Tests for core.config and the services.runtime singleton."""
import pytest

from core.config import Settings
from core.errors import InvalidInput
from services import runtime


def test_defaults_when_environment_is_empty():
    s = Settings.from_env({})
    assert s == Settings()
    assert s.default_cap == 64
    assert s.log_level == "WARNING"


def test_environment_overrides():
    s = Settings.from_env({"OMEGA_LYNDON_CAP": "12", "OMEGA_LYNDON_SEED": " 7 ", "OMEGA_LYNDON_LOG_LEVEL": "debug"})
    assert s.default_cap == 12
    assert s.seed == 7
    assert s.log_level == "DEBUG"
    assert s.l1_window_pad == Settings().l1_window_pad


@pytest.mark.parametrize("value", ["twelve", "-1", "1.5"])
def test_invalid_integers_rejected(value):
    with pytest.raises(InvalidInput):
        Settings.from_env({"OMEGA_LYNDON_ENUM_LIMIT": value})


def test_runtime_settings_are_cached(monkeypatch):
    runtime.reset_settings()
    monkeypatch.setenv("OMEGA_LYNDON_TAIL_SAMPLES", "3")
    try:
        first = runtime.get_settings()
        monkeypatch.setenv("OMEGA_LYNDON_TAIL_SAMPLES", "5")
        assert runtime.get_settings() is first
        assert first.tail_samples == 3
        runtime.reset_settings()
        assert runtime.get_settings().tail_samples == 5
    finally:
        runtime.reset_settings()
