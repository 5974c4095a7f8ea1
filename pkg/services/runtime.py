"""Shared runtime singletons for the CLI and the acceptance suite."""
from core.config import Settings

_settings = None


def get_settings() -> Settings:
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def reset_settings() -> None:
    global _settings
    _settings = None
