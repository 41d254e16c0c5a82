"""
Configuration management for the maneuver verifier
"""

import json
import math
import os
from dataclasses import asdict, dataclass, fields
from typing import Any, Optional, get_args

from dotenv import load_dotenv

load_dotenv()


class Settings:
    """Environment-driven defaults"""

    THREADS: int = int(os.getenv("MV_THREADS", "0"))
    MAX_TRACES: int = int(os.getenv("MV_MAX_TRACES", "100000"))
    ENVELOPE_DS: float = float(os.getenv("MV_ENVELOPE_DS", "0.5"))
    CONTACT_TOLERANCE: float = float(os.getenv("MV_CONTACT_TOLERANCE", "1e-9"))
    LOG_LEVEL: str = os.getenv("MV_LOG_LEVEL", "WARNING")
    LOG_FILE: Optional[str] = os.getenv("MV_LOG_FILE") or None

    @staticmethod
    def worker_count(threads: int) -> int:
        """0 means one worker per CPU"""
        if threads > 0:
            return threads
        return os.cpu_count() or 1


settings = Settings()


def _coerce(name: str, annotation: Any, value: Any) -> Any:
    """Cast a config file value to the type of its field"""
    optional = type(None) in get_args(annotation)
    if value is None:
        if optional:
            return None
        raise ValueError(f"{name} must not be null")
    target = next((a for a in get_args(annotation) if a is not type(None)), annotation)
    if target is bool or isinstance(value, bool):
        if target is bool and isinstance(value, bool):
            return value
        raise ValueError(f"{name}: expected {target.__name__}, got {value!r}")
    if target is int and isinstance(value, float) and not value.is_integer():
        raise ValueError(f"{name}: expected int, got {value!r}")
    try:
        return target(value)
    except (TypeError, ValueError) as e:
        raise ValueError(f"{name}: expected {target.__name__}, got {value!r}") from e


@dataclass
class VerifierConfig:
    """Per-run options of the verification pipeline"""

    step_override: Optional[float] = None
    congested_override: Optional[bool] = None
    ds: float = settings.ENVELOPE_DS
    max_checked: Optional[int] = None
    max_traces: int = settings.MAX_TRACES
    threads: int = settings.THREADS
    emit_envelopes: bool = True
    rules_file: Optional[str] = None

    def __post_init__(self):
        if not math.isfinite(self.ds) or self.ds <= 0:
            raise ValueError("ds must be positive and finite")
        if self.step_override is not None and not math.isfinite(self.step_override):
            raise ValueError("step_override must be finite")
        if self.max_checked is not None and self.max_checked < 0:
            raise ValueError("max_checked must be non-negative")
        if self.max_traces <= 0:
            raise ValueError("max_traces must be positive")
        if self.threads < 0:
            raise ValueError("threads must be non-negative")

    @classmethod
    def from_file(cls, config_path: str) -> "VerifierConfig":
        """Load configuration from a JSON file; unknown keys are ignored"""

        config = cls()

        if os.path.exists(config_path):
            with open(config_path, "r", encoding="utf-8") as f:
                config_data = json.load(f)
            if not isinstance(config_data, dict):
                raise ValueError(f"{config_path}: expected a JSON object")

            types = {f.name: f.type for f in fields(cls)}
            for key, value in config_data.items():
                if key in types:
                    setattr(config, key, _coerce(key, types[key], value))
            config.__post_init__()

        return config

    def save_to_file(self, config_path: str):
        """Save configuration to a JSON file"""

        with open(config_path, "w", encoding="utf-8") as f:
            json.dump(asdict(self), f, ensure_ascii=False, indent=2)
