"""
Maneuver verification on semantic free space-time navigation graphs
"""

__version__ = "0.1.0"
