"""
Utilities package for the maneuver verifier
"""

from .config import Settings, VerifierConfig, settings
from .logging import get_logger, setup_logging
from .monitoring import PipelineMonitor

__all__ = [
    "PipelineMonitor",
    "Settings",
    "VerifierConfig",
    "get_logger",
    "settings",
    "setup_logging",
]
