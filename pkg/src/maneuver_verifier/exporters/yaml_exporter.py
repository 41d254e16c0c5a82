"""
YAML writer for reports, partition dumps, trace listings and envelopes
"""

from typing import Any

import yaml
from pydantic import BaseModel

from maneuver_verifier.exporters.base import BaseExporter


class YamlExporter(BaseExporter):
    extension = ".yaml"

    def render(self, payload: Any) -> str:
        if isinstance(payload, BaseModel):
            payload = payload.model_dump(mode="json")
        return yaml.safe_dump(
            payload, sort_keys=False, allow_unicode=True, default_flow_style=None
        )
