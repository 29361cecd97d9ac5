"""Discrete wavelet sample sets and empirical frame-bound estimation.

A sample set is a finite family of phase-space points (x, s), s > 0, inside
a rectangular region.  Two constructions are provided: the scaled golden
lattice beta * Gamma intersected with the region, and the classical dyadic
scheme {(a**-j * l * b, a**j)}.  The frame operator of the induced wavelet
family is applied in the frequency domain, and its spectral extremes on a
band-restricted subspace (the empirical frame bounds) are estimated by
power iteration.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .covering import beta_for_delta
from .lattice import LatticeSpec, Rect, enumerate_in_rect, lattice_coords
from .wavelet import MotherWavelet, SignalModel, _atom_matrix, cwt

__all__ = [
    "SampleSet",
    "FrameEstimate",
    "RankDeficiencyError",
    "golden_sample_set",
    "dyadic_sample_set",
    "analysis",
    "frame_operator_apply",
    "guard_band",
    "estimate_bounds",
    "compare_schemes",
    "comparison_to_csv",
    "comparison_to_json",
]


class RankDeficiencyError(Exception):
    """Fewer sample points than band dimensions: the lower bound is
    structurally zero, not a numerical result."""


@dataclass(frozen=True)
class SampleSet:
    """Finite set of phase-space points with construction provenance."""

    points: np.ndarray
    provenance: dict
    region: Rect

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float).reshape(-1, 2)
        if pts.size and np.any(pts[:, 1] <= 0):
            raise ValueError("all scales must be positive")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return self.points.shape[0]

    @property
    def empty(self) -> bool:
        return self.points.shape[0] == 0


@dataclass(frozen=True)
class FrameEstimate:
    """Empirical frame bounds on a band-restricted subspace."""

    lower: float
    upper: float
    ratio: float
    iterations: int
    residuals: dict
    restricted_band: tuple[int, int]
    converged: bool
    npoints: int


def golden_sample_set(
    delta: float, region: Rect, beta: float | None = None
) -> SampleSet:
    """Points of beta * Gamma inside the region (upper half-plane only).

    beta defaults to the covering-derived scale for delta.  An empty result
    is allowed and reported through the ``empty`` flag, not raised.
    """
    if not region.c > 0:
        raise ValueError("region must lie in the upper half-plane")
    if beta is None:
        beta = beta_for_delta(delta)
    pts = enumerate_in_rect(LatticeSpec(beta=beta), region)
    if len(pts):
        idx = np.array([[p.n, p.m] for p in pts])
        # dedup on exact lattice indices
        idx = np.unique(idx, axis=0)
        x, s = lattice_coords(idx[:, 0], idx[:, 1])
        coords = np.column_stack([beta * x, beta * s])
    else:
        coords = np.zeros((0, 2))
    return SampleSet(coords, {"scheme": "golden", "delta": delta, "beta": beta}, region)


def dyadic_sample_set(a: float, b: float, region: Rect) -> SampleSet:
    """The classical scheme {(a**-j * l * b, a**j) : j, l integers} in the
    region: geometric scales, arithmetic translations refined with scale."""
    if not a > 1:
        raise ValueError(f"base a must exceed 1, got {a}")
    if not b > 0:
        raise ValueError(f"translation step b must be positive, got {b}")
    if not region.c > 0:
        raise ValueError("region must lie in the upper half-plane")
    j_lo = math.ceil(math.log(region.c) / math.log(a) - 1e-12)
    j_hi = math.ceil(math.log(region.d) / math.log(a) - 1e-12)  # scales a**j < d
    rows = []
    for j in range(j_lo, j_hi):
        s = a**j
        if not (region.c <= s < region.d):
            continue
        step = b / a**j
        l_lo = math.ceil(region.a / step - 1e-12)
        l_hi = math.ceil(region.b / step - 1e-12)
        ls = np.arange(l_lo, l_hi)
        if ls.size:
            rows.append(np.column_stack([ls * step, np.full(ls.size, s)]))
    coords = np.vstack(rows) if rows else np.zeros((0, 2))
    return SampleSet(coords, {"scheme": "dyadic", "a": a, "b": b}, region)


def analysis(f: SignalModel, sset: SampleSet, w: MotherWavelet) -> np.ndarray:
    """Wavelet coefficients of f at the sample points, in point order."""
    return cwt(f, w, sset.points)


def frame_operator_apply(
    f: SignalModel, sset: SampleSet, w: MotherWavelet, chunk: int = 2048
) -> SignalModel:
    """S f = sum over sample points of <f, atom> * atom, in the model."""
    out = np.zeros(f.coeffs.shape, dtype=complex)
    pts = sset.points
    for lo in range(0, pts.shape[0], chunk):
        atoms = _atom_matrix(w, pts[lo : lo + chunk], f)
        out += atoms.T @ (atoms.conj() @ f.coeffs)
    return SignalModel(f.length, f.duration, out)


def guard_band(
    w: MotherWavelet,
    region: Rect,
    model: SignalModel,
    guard_octaves: float = 2.0,
) -> tuple[int, int]:
    """Interior frequency band (bin indices, inclusive) with a guard margin.

    Atoms at scale s concentrate near frequency s * xi_peak; scales within
    ``guard_octaves`` of the region's s-extremes are excluded so that
    region-truncation effects do not contaminate the band.
    """
    grid = np.exp(np.linspace(math.log(1e-4), math.log(100.0), 20001))
    xi_peak = float(grid[np.argmax(np.abs(w(grid)))])
    g = 2.0**guard_octaves
    xi_lo = region.c * g * xi_peak
    xi_hi = region.d / g * xi_peak
    j_lo = max(1, math.ceil(xi_lo * model.duration))
    j_hi = min(model.length // 2 - 2, math.floor(xi_hi * model.duration))
    if j_lo > j_hi:
        raise ValueError(
            f"guard margin leaves an empty band (bins {j_lo}..{j_hi}); "
            "widen the scale range or reduce guard_octaves"
        )
    return j_lo, j_hi


def _band_matrix(
    sset: SampleSet, w: MotherWavelet, model: SignalModel, band: tuple[int, int]
) -> np.ndarray:
    j_lo, j_hi = band
    if not (1 <= j_lo <= j_hi <= model.length // 2 - 2):
        raise ValueError(f"band {band} not strictly inside the model bins")
    atoms = _atom_matrix(w, sset.points, model)
    return atoms[:, j_lo - 1 : j_hi]


def _power_iteration(matvec, dim, iters, tol, rng):
    """Largest eigenvalue of a Hermitian PSD operator by power iteration.

    Returns (rayleigh, iterations used, final relative change)."""
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    v /= np.linalg.norm(v)
    lam = 0.0
    res = math.inf
    used = 0
    for used in range(1, iters + 1):
        u = matvec(v)
        nrm = np.linalg.norm(u)
        if nrm == 0.0:
            return 0.0, used, 0.0
        new = float(np.real(np.vdot(v, u)))
        res = abs(new - lam) / max(abs(new), 1e-300)
        lam = new
        v = u / nrm
        if res < tol:
            break
    return lam, used, res


def estimate_bounds(
    sset: SampleSet,
    w: MotherWavelet,
    model: SignalModel,
    band: tuple[int, int],
    iters: int = 5000,
    seed: int = 0,
    tol: float = 1e-8,
) -> FrameEstimate:
    """Empirical frame bounds of the sample set on the band subspace.

    B is the top eigenvalue of the band-restricted frame operator by power
    iteration; A comes from a shifted power iteration on mu*I - S with
    mu = 1.01 * B.  Fewer points than band dimensions raises
    RankDeficiencyError rather than returning a structurally-zero A.
    """
    if iters < 1:
        raise ValueError(f"iters must be >= 1, got {iters}")
    m = _band_matrix(sset, w, model, band)
    npts, dim = m.shape
    if npts < dim:
        raise RankDeficiencyError(
            f"{npts} sample points cannot frame a {dim}-dimensional band; "
            "the lower bound is structurally zero"
        )
    mc = m.conj()
    rng = np.random.default_rng(seed)
    upper, it_b, res_b = _power_iteration(
        lambda v: m.T @ (mc @ v), dim, iters, tol, rng
    )
    mu = 1.01 * upper
    shifted, it_a, res_a = _power_iteration(
        lambda v: mu * v - m.T @ (mc @ v), dim, iters, tol, rng
    )
    lower = mu - shifted
    converged = res_b < tol and res_a < tol
    ratio = upper / lower if lower > 0 else math.inf
    return FrameEstimate(
        lower=float(lower),
        upper=float(upper),
        ratio=float(ratio),
        iterations=it_b + it_a,
        residuals={
            "method": "power+shifted-power",
            "upper_iters": it_b,
            "upper_rel_change": res_b,
            "lower_iters": it_a,
            "lower_rel_change": res_a,
            "shift": mu,
            "tol": tol,
        },
        restricted_band=(int(band[0]), int(band[1])),
        converged=converged,
        npoints=npts,
    )


def _match_dyadic_density(
    target: int, a: float, region: Rect, rel_tol: float = 0.02
) -> SampleSet:
    """Choose the translation step b so the dyadic count matches target."""
    if target <= 0:
        raise ValueError("cannot density-match an empty golden set")
    lo, hi = 1e-6, 1e6  # count is ~monotone decreasing in b
    best = None
    for _ in range(200):
        b = math.sqrt(lo * hi)
        cand = dyadic_sample_set(a, b, region)
        err = (len(cand) - target) / target
        if best is None or abs(err) < abs((len(best) - target) / target):
            best = cand
        if abs(err) <= rel_tol:
            return cand
        if len(cand) > target:
            lo = b
        else:
            hi = b
    return best


def compare_schemes(
    delta_list,
    w: MotherWavelet,
    model: SignalModel,
    region: Rect,
    band: tuple[int, int],
    iters: int = 5000,
    seed: int = 0,
    dyadic_base: float = 2.0 ** 0.25,
) -> list[dict]:
    """Golden vs density-matched dyadic frame bounds for each delta.

    For every delta the golden set at beta(delta) is built, then a dyadic
    set with the same region and a point count matched within 2%, and
    ``estimate_bounds`` is run on both.  Rows are plain dicts ready for CSV
    or JSON serialization.
    """
    rows = []
    for delta in delta_list:
        golden = golden_sample_set(delta, region)
        dyadic = _match_dyadic_density(len(golden), dyadic_base, region)
        for sset in (golden, dyadic):
            prov = sset.provenance
            if prov["scheme"] == "golden":
                label = f"beta={prov['beta']:.6g}"
            else:
                label = f"a={prov['a']:.6g},b={prov['b']:.6g}"
            try:
                est = estimate_bounds(sset, w, model, band, iters=iters, seed=seed)
                row = {
                    "delta": float(delta),
                    "scheme": prov["scheme"],
                    "beta_or_ab": label,
                    "points": len(sset),
                    "A": est.lower,
                    "B": est.upper,
                    "ratio": est.ratio,
                    "iters": est.iterations,
                    "converged": est.converged,
                    "diagnostics": est.residuals,
                }
            except RankDeficiencyError as exc:
                row = {
                    "delta": float(delta),
                    "scheme": prov["scheme"],
                    "beta_or_ab": label,
                    "points": len(sset),
                    "A": 0.0,
                    "B": math.nan,
                    "ratio": math.inf,
                    "iters": 0,
                    "converged": False,
                    "diagnostics": {"error": str(exc)},
                }
            rows.append(row)
    return rows


_CSV_COLUMNS = ["delta", "scheme", "beta_or_ab", "points", "A", "B", "ratio", "iters", "converged"]


def comparison_to_csv(rows: list[dict], path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=_CSV_COLUMNS, extrasaction="ignore")
        writer.writeheader()
        writer.writerows(rows)


def comparison_to_json(rows: list[dict]) -> str:
    return json.dumps(rows, sort_keys=True, indent=2)
