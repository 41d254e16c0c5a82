"""
Output writers, one per format
"""

from .base import BaseExporter
from .dot_exporter import DotExporter
from .smv_exporter import SmvExporter
from .svg_exporter import SvgExporter
from .yaml_exporter import YamlExporter

__all__ = [
    "BaseExporter",
    "DotExporter",
    "SmvExporter",
    "SvgExporter",
    "YamlExporter",
]
