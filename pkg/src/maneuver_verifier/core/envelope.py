"""
Maneuver envelopes: per-step drivable bounds sampled along s
"""

import math
from typing import Dict, List, Optional, Tuple

from maneuver_verifier.models.data_classes import Cell, ManeuverEnvelope, Path


def sample_positions(s_min: float, s_max: float, ds: float) -> List[float]:
    """s_min + k*ds below s_max, then s_max itself"""
    if ds <= 0:
        raise ValueError(f"ds must be positive, got {ds}")
    count = math.floor((s_max - s_min) / ds)
    positions = [s_min + k * ds for k in range(count + 1)]
    positions = [s for s in positions if s < s_max]
    positions.append(s_max)
    return positions


def cell_envelope(cell: Cell, ds: float) -> ManeuverEnvelope:
    bounds = cell.region.bounds
    if bounds is None:
        raise ValueError(f"cell {cell} has an empty region")

    d_left = []
    d_right = []
    for s in sample_positions(bounds.s_lo, bounds.s_hi, ds):
        extent = cell.region.lateral_extent_at(s)
        if extent is None:
            continue
        right, left = extent
        d_left.append((s, left))
        d_right.append((s, right))

    return ManeuverEnvelope(
        step=cell.step,
        s_min=bounds.s_lo,
        s_max=bounds.s_hi,
        d_left=tuple(d_left),
        d_right=tuple(d_right),
    )


def envelope_of(
    path: Path,
    ds: float,
    cache: Optional[Dict[Tuple[Tuple[int, str], float], ManeuverEnvelope]] = None,
) -> List[ManeuverEnvelope]:
    """One envelope per step of the path"""
    envelopes = []
    for cell in path:
        if cache is None:
            envelopes.append(cell_envelope(cell, ds))
            continue
        key = (cell.key, ds)
        if key not in cache:
            cache[key] = cell_envelope(cell, ds)
        envelopes.append(cache[key])
    return envelopes
