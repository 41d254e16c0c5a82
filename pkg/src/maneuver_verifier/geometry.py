"""
Rectangle-union region algebra in the Frenet plane

Regions are finite unions of axis-aligned rectangles in (s, d) coordinates.
Every region is kept in a canonical form: rectangles with positive area,
pairwise disjoint interiors, grouped into maximal s-slabs that share the same
lateral cross-section. Two regions covering the same point set therefore have
identical rectangle tuples.
"""

import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np


@dataclass(frozen=True, order=True)
class FrenetRect:
    """Closed axis-aligned rectangle [s_lo, s_hi] x [d_lo, d_hi]"""

    s_lo: float
    s_hi: float
    d_lo: float
    d_hi: float

    def __post_init__(self):
        if self.s_lo > self.s_hi or self.d_lo > self.d_hi:
            raise ValueError(f"Inverted rectangle bounds: {self}")

    @property
    def area(self) -> float:
        return (self.s_hi - self.s_lo) * (self.d_hi - self.d_lo)

    def contains_point(self, s: float, d: float) -> bool:
        return self.s_lo <= s <= self.s_hi and self.d_lo <= d <= self.d_hi

    def touches(self, other: "FrenetRect", tolerance: float = 0.0) -> bool:
        """Closed rectangles share at least one point"""
        return (
            self.s_lo <= other.s_hi + tolerance
            and other.s_lo <= self.s_hi + tolerance
            and self.d_lo <= other.d_hi + tolerance
            and other.d_lo <= self.d_hi + tolerance
        )

    def overlap(self, other: "FrenetRect") -> Optional["FrenetRect"]:
        """Intersection with positive area, or None"""
        s_lo = max(self.s_lo, other.s_lo)
        s_hi = min(self.s_hi, other.s_hi)
        d_lo = max(self.d_lo, other.d_lo)
        d_hi = min(self.d_hi, other.d_hi)
        if s_lo < s_hi and d_lo < d_hi:
            return FrenetRect(s_lo, s_hi, d_lo, d_hi)
        return None

    def hull(self, other: "FrenetRect") -> "FrenetRect":
        return FrenetRect(
            min(self.s_lo, other.s_lo),
            max(self.s_hi, other.s_hi),
            min(self.d_lo, other.d_lo),
            max(self.d_hi, other.d_hi),
        )

    def s_distance(self, other: "FrenetRect") -> float:
        """Longitudinal gap between the two s-spans (0 if they touch)"""
        return max(0.0, other.s_lo - self.s_hi, self.s_lo - other.s_hi)

    def as_list(self) -> List[float]:
        return [self.s_lo, self.s_hi, self.d_lo, self.d_hi]


def _cuts(rects: Iterable[FrenetRect]) -> Tuple[np.ndarray, np.ndarray]:
    rects = list(rects)
    s_cuts = np.unique([r.s_lo for r in rects] + [r.s_hi for r in rects])
    d_cuts = np.unique([r.d_lo for r in rects] + [r.d_hi for r in rects])
    return s_cuts, d_cuts


def _cover(
    rects: Sequence[FrenetRect], s_cuts: np.ndarray, d_cuts: np.ndarray
) -> np.ndarray:
    """Boolean grid of elementary cells covered by the rectangles"""
    s_mid = (s_cuts[:-1] + s_cuts[1:]) / 2.0
    d_mid = (d_cuts[:-1] + d_cuts[1:]) / 2.0
    mask = np.zeros((len(s_mid), len(d_mid)), dtype=bool)
    for r in rects:
        in_s = (s_mid > r.s_lo) & (s_mid < r.s_hi)
        in_d = (d_mid > r.d_lo) & (d_mid < r.d_hi)
        mask |= in_s[:, None] & in_d[None, :]
    return mask


def _runs(row: np.ndarray) -> Tuple[Tuple[int, int], ...]:
    runs = []
    start = None
    for j, covered in enumerate(row):
        if covered and start is None:
            start = j
        elif not covered and start is not None:
            runs.append((start, j))
            start = None
    if start is not None:
        runs.append((start, len(row)))
    return tuple(runs)


def _rects_from_mask(
    s_cuts: np.ndarray, d_cuts: np.ndarray, mask: np.ndarray
) -> Tuple[FrenetRect, ...]:
    rects: List[FrenetRect] = []
    slab_start = 0
    slab_runs: Tuple[Tuple[int, int], ...] = ()

    def flush(i_end: int):
        for j0, j1 in slab_runs:
            rects.append(
                FrenetRect(
                    float(s_cuts[slab_start]),
                    float(s_cuts[i_end]),
                    float(d_cuts[j0]),
                    float(d_cuts[j1]),
                )
            )

    for i in range(mask.shape[0]):
        runs = _runs(mask[i])
        if i == 0:
            slab_runs = runs
            continue
        if runs != slab_runs:
            flush(i)
            slab_start, slab_runs = i, runs
    if mask.shape[0]:
        flush(mask.shape[0])
    return tuple(rects)


def _canonical(rects: Iterable[FrenetRect]) -> Tuple[FrenetRect, ...]:
    rects = [r for r in rects if r.area > 0]
    if len(rects) <= 1:
        return tuple(rects)
    s_cuts, d_cuts = _cuts(rects)
    return _rects_from_mask(s_cuts, d_cuts, _cover(rects, s_cuts, d_cuts))


@dataclass(frozen=True)
class Region:
    """Finite union of Frenet rectangles in canonical form"""

    rects: Tuple[FrenetRect, ...] = ()

    @classmethod
    def from_rects(cls, rects: Iterable[FrenetRect]) -> "Region":
        return cls(_canonical(rects))

    @classmethod
    def from_rect(cls, rect: FrenetRect) -> "Region":
        return cls.from_bounds(rect.s_lo, rect.s_hi, rect.d_lo, rect.d_hi)

    @classmethod
    def from_bounds(
        cls, s_lo: float, s_hi: float, d_lo: float, d_hi: float
    ) -> "Region":
        """Single-rectangle region; empty when the bounds enclose no area"""
        if s_lo < s_hi and d_lo < d_hi:
            return cls((FrenetRect(s_lo, s_hi, d_lo, d_hi),))
        return cls()

    @property
    def is_empty(self) -> bool:
        return not self.rects

    @property
    def area(self) -> float:
        return area(self)

    @property
    def bounds(self) -> Optional[FrenetRect]:
        if not self.rects:
            return None
        box = self.rects[0]
        for r in self.rects[1:]:
            box = box.hull(r)
        return box

    def contains_point(self, s: float, d: float) -> bool:
        """Closed-set membership"""
        return any(r.contains_point(s, d) for r in self.rects)

    def lateral_extent_at(self, s: float) -> Optional[Tuple[float, float]]:
        """(d_right, d_left) of the closed cross-section at s, or None"""
        hits = [r for r in self.rects if r.s_lo <= s <= r.s_hi]
        if not hits:
            return None
        return min(r.d_lo for r in hits), max(r.d_hi for r in hits)

    def s_distance_to(self, rect: FrenetRect) -> float:
        if not self.rects:
            return math.inf
        return min(r.s_distance(rect) for r in self.rects)

    def intersect(self, other: "Region") -> "Region":
        return intersect(self, other)

    def subtract(self, other: "Region") -> "Region":
        return subtract(self, other)

    def union(self, other: "Region") -> "Region":
        return Region.from_rects(self.rects + other.rects)

    def touches(self, other: "Region", tolerance: float = 0.0) -> bool:
        return closures_touch(self, other, tolerance)

    def __str__(self) -> str:
        if not self.rects:
            return "{}"
        return " + ".join(
            f"[{r.s_lo:g},{r.s_hi:g}]x[{r.d_lo:g},{r.d_hi:g}]" for r in self.rects
        )


def intersect(a: Region, b: Region) -> Region:
    """Canonical set intersection; boundary-only contact yields empty"""
    pieces = []
    for ra in a.rects:
        for rb in b.rects:
            piece = ra.overlap(rb)
            if piece is not None:
                pieces.append(piece)
    return Region.from_rects(pieces)


def subtract(a: Region, b: Region) -> Region:
    """Canonical open set difference a minus b"""
    if a.is_empty or b.is_empty:
        return a
    if not any(ra.overlap(rb) for ra in a.rects for rb in b.rects):
        return a
    s_cuts, d_cuts = _cuts(a.rects + b.rects)
    mask = _cover(a.rects, s_cuts, d_cuts) & ~_cover(b.rects, s_cuts, d_cuts)
    return Region(_rects_from_mask(s_cuts, d_cuts, mask))


def closures_touch(a: Region, b: Region, tolerance: float = 0.0) -> bool:
    """True iff the closures of a and b share a point (corner contact counts)"""
    box_a, box_b = a.bounds, b.bounds
    if box_a is None or box_b is None or not box_a.touches(box_b, tolerance):
        return False
    return any(ra.touches(rb, tolerance) for ra in a.rects for rb in b.rects)


def area(a: Region) -> float:
    return float(sum(r.area for r in a.rects))
