"""
Runtime settings.

Values come from ``OMEGA_LYNDON_*`` environment variables (a local ``.env`` file is
honoured) and fall back to the defaults below.
"""
import os
from dataclasses import dataclass, fields
from typing import Mapping, Optional

from dotenv import load_dotenv

from .errors import InvalidInput

ENV_PREFIX = "OMEGA_LYNDON_"

_ENV_KEYS = {
    "default_cap": "CAP",
    "l1_window_pad": "L1_PAD",
    "tail_samples": "TAIL_SAMPLES",
    "order_triples": "TRIPLES",
    "seed": "SEED",
    "enumeration_limit": "ENUM_LIMIT",
    "log_level": "LOG_LEVEL",
}


@dataclass(frozen=True)
class Settings:
    default_cap: int = 64
    l1_window_pad: int = 8
    tail_samples: int = 16
    order_triples: int = 200
    seed: int = 0
    enumeration_limit: int = 16
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """Build settings from the environment; ``environ`` overrides ``os.environ``."""
        if environ is None:
            load_dotenv()
            environ = os.environ

        values = {}
        for f in fields(cls):
            name = ENV_PREFIX + _ENV_KEYS[f.name]
            raw = str(environ.get(name, "")).strip()
            if not raw:
                continue
            if f.type in (int, "int"):
                try:
                    values[f.name] = int(raw)
                except ValueError as exc:
                    raise InvalidInput(f"{name} must be an integer, got {raw!r}") from exc
                if values[f.name] < 0:
                    raise InvalidInput(f"{name} must be >= 0, got {raw!r}")
            else:
                values[f.name] = raw.upper()
        return cls(**values)
