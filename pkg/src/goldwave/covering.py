"""Phase-space covering by equal-area half-open rectangles.

The upper half-plane (x, s), s > 0, is tiled by cells

    V[k, l] = [delta**2 * k / |I_l|, delta**2 * (k+1) / |I_l|) x I_l,
    I_l = [exp(delta*l), exp(delta*(l+1))),

each of area delta**2.  Scaling the golden lattice by
beta(delta) = delta / sqrt(2 + alpha) turns each cell, in lattice
coordinates, into a rectangle of area exactly 2 + alpha, so the rectangle
point-count bounds put every per-cell count of beta*Gamma in [1, 12].
``audit_cover`` verifies this cell by cell over finite index ranges; the
statement for all of Z**2 follows mathematically but is not machine-checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .goldenring import ALPHA_FLOAT
from .lattice import Rect, count_x_translates

__all__ = [
    "CoverSpec",
    "Cell",
    "CoverAudit",
    "cell",
    "cell_index",
    "beta_for_delta",
    "audit_cover",
]


@dataclass(frozen=True)
class CoverSpec:
    delta: float

    def __post_init__(self):
        if not self.delta > 0:
            raise ValueError(f"delta must be positive, got {self.delta}")


@dataclass(frozen=True)
class Cell:
    k: int
    l: int
    rect: Rect


def _scale_interval(delta: float, l: int) -> tuple[float, float]:
    return math.exp(delta * l), math.exp(delta * (l + 1))


def cell(spec: CoverSpec | float, k: int, l: int) -> Cell:
    """The covering cell with indices (k, l)."""
    delta = spec.delta if isinstance(spec, CoverSpec) else CoverSpec(spec).delta
    s_lo, s_hi = _scale_interval(delta, l)
    length = s_hi - s_lo
    w = delta * delta / length
    return Cell(k, l, Rect(k * w, (k + 1) * w, s_lo, s_hi))


def cell_index(point: tuple[float, float], spec: CoverSpec | float) -> tuple[int, int]:
    """Indices of the unique cell containing (x, s); requires s > 0."""
    delta = spec.delta if isinstance(spec, CoverSpec) else CoverSpec(spec).delta
    x, s = point
    if not s > 0:
        raise ValueError(f"point must lie in the upper half-plane, got s={s}")
    l = math.floor(math.log(s) / delta)
    s_lo, s_hi = _scale_interval(delta, l)
    # float guard at interval boundaries
    if s < s_lo:
        l -= 1
        s_lo, s_hi = _scale_interval(delta, l)
    elif s >= s_hi:
        l += 1
        s_lo, s_hi = _scale_interval(delta, l)
    k = math.floor(x * (s_hi - s_lo) / (delta * delta))
    return k, l


def beta_for_delta(delta: float) -> float:
    """Isotropic lattice scale making each cell hold between 1 and 12 points.

    Rescaling a cell of area delta**2 by 1/beta gives an axis-parallel
    rectangle of area delta**2 / beta**2; the point-count bounds pin the
    count to [1, 12] exactly when that area is 2 + alpha, i.e. for
    beta = delta / sqrt(2 + alpha).  Any smaller beta keeps every cell
    nonempty (the minimum-area bound is monotone in area).
    """
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta}")
    return delta / math.sqrt(2.0 + ALPHA_FLOAT)


@dataclass(frozen=True)
class CoverAudit:
    """Per-cell point counts of beta*Gamma over a finite cell range."""

    delta: float
    beta: float
    k_range: tuple[int, int]
    l_range: tuple[int, int]
    min_count: int
    max_count: int
    empty_cells: list[tuple[int, int]] = field(default_factory=list)
    cells_checked: int = 0
    histogram: dict[int, int] = field(default_factory=dict)


def audit_cover(
    delta: float,
    beta: float | None = None,
    k_range: tuple[int, int] = (-200, 200),
    l_range: tuple[int, int] = (-20, 20),
    max_empty_recorded: int = 1000,
) -> CoverAudit:
    """Count beta*Gamma points in every cell with k, l in the given closed
    index ranges.  beta defaults to beta_for_delta(delta).

    Cells in one l-row share their shape, so each row is counted in one
    vectorized sweep; rows at large |l| have extreme aspect ratios but cost
    the same as central rows.
    """
    spec = CoverSpec(delta)
    if beta is None:
        beta = beta_for_delta(delta)
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    k_lo, k_hi = k_range
    l_lo, l_hi = l_range
    if k_lo > k_hi or l_lo > l_hi:
        raise ValueError("empty index range")
    ks = np.arange(k_lo, k_hi + 1)
    min_count = None
    max_count = None
    empty: list[tuple[int, int]] = []
    histogram: dict[int, int] = {}
    for l in range(l_lo, l_hi + 1):
        s_lo, s_hi = _scale_interval(spec.delta, l)
        width = spec.delta**2 / (s_hi - s_lo)
        counts = count_x_translates(beta, ks * width, width, s_lo, s_hi)
        row_min = int(counts.min())
        row_max = int(counts.max())
        min_count = row_min if min_count is None else min(min_count, row_min)
        max_count = row_max if max_count is None else max(max_count, row_max)
        if row_min == 0 and len(empty) < max_empty_recorded:
            for k in ks[counts == 0]:
                if len(empty) >= max_empty_recorded:
                    break
                empty.append((int(k), l))
        values, freqs = np.unique(counts, return_counts=True)
        for v, f in zip(values, freqs):
            histogram[int(v)] = histogram.get(int(v), 0) + int(f)
    return CoverAudit(
        delta=spec.delta,
        beta=float(beta),
        k_range=(k_lo, k_hi),
        l_range=(l_lo, l_hi),
        min_count=int(min_count),
        max_count=int(max_count),
        empty_cells=empty,
        cells_checked=int(ks.size * (l_hi - l_lo + 1)),
        histogram=histogram,
    )
