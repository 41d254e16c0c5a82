"""
Base exporter interface
"""

import logging
import os
import tempfile
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

from maneuver_verifier.errors import ExportError

logger = logging.getLogger(__name__)


class BaseExporter(ABC):
    """Base class for output writers"""

    # appended to output paths given without a suffix
    extension: str = ""

    @abstractmethod
    def render(self, payload: Any) -> str:
        """Serialize the payload to text"""
        pass

    def export(self, payload: Any, output_path: str) -> str:
        """Render and write atomically (temp file in the same directory, then rename)"""

        content = self.render(payload)
        target = Path(output_path)
        if not target.suffix and self.extension:
            target = target.with_suffix(self.extension)
        target.parent.mkdir(parents=True, exist_ok=True)

        fd, temp_path = tempfile.mkstemp(
            dir=target.parent, prefix=f".{target.name}.", suffix=".tmp"
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
                f.write(content)
            os.replace(temp_path, target)
        except OSError as e:
            if os.path.exists(temp_path):
                os.unlink(temp_path)
            raise ExportError(f"cannot write {target}: {e}") from e

        logger.info(f"Wrote {target}")
        return str(target)
