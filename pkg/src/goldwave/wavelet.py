"""Analytic mother wavelets and the continuous wavelet transform.

Wavelets are specified by their Fourier-domain profile G on positive
frequencies (G vanishes on xi <= 0, making the wavelet analytic).  Scale
convention: the atom at (x, s) is sqrt(s) * psi(s * (t - x)), so LARGE scale
corresponds to SMALL s and the atom concentrates near frequency s * xi_peak.
Fourier kernel convention: exp(-2*pi*i*xi*t).

Signals live in a finite periodic model: length-N (power of two) signals on
[0, T), represented by their coefficients on the orthonormal exponentials at
the strictly positive frequency bins 1 .. N/2 - 1.  Bin 0 and the Nyquist
bin are excluded so the model sits inside the analytic signal space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np
from scipy.integrate import simpson

__all__ = [
    "LogGrid",
    "MotherWavelet",
    "DecayReport",
    "SignalModel",
    "cauchy_wavelet",
    "gaussian_bump_wavelet",
    "admissibility_constant",
    "normalize_tight",
    "decay_condition_report",
    "atom_spectrum",
    "cwt",
    "cwt_regular",
    "wavelet_spec",
    "wavelet_from_spec",
    "save_signal",
    "load_signal",
]

Profile = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class LogGrid:
    """Logarithmically spaced frequency grid for quadrature and decay checks."""

    xi_min: float = 1e-5
    xi_max: float = 60.0
    n: int = 4097

    def __post_init__(self):
        if not (0 < self.xi_min < self.xi_max) or self.n < 16:
            raise ValueError(f"invalid grid {self}")

    def log_points(self) -> np.ndarray:
        return np.linspace(math.log(self.xi_min), math.log(self.xi_max), self.n)

    def points(self) -> np.ndarray:
        return np.exp(self.log_points())


@dataclass(frozen=True)
class MotherWavelet:
    """Fourier-domain wavelet profile with optional analytic derivatives."""

    profile: Profile
    profile_d1: Profile | None = None
    profile_d2: Profile | None = None
    family: str = "custom"
    params: dict = field(default_factory=dict)

    def __call__(self, xi: np.ndarray) -> np.ndarray:
        return self.profile(np.asarray(xi, dtype=float))


def _restrict_positive(f: Callable[[np.ndarray], np.ndarray]) -> Profile:
    def wrapped(xi: np.ndarray) -> np.ndarray:
        xi = np.asarray(xi, dtype=float)
        out = np.zeros(xi.shape, dtype=float)
        pos = xi > 0
        out[pos] = f(xi[pos])
        return out

    return wrapped


def cauchy_wavelet(p: float, normalize: bool = True) -> MotherWavelet:
    """Cauchy (one-sided power-exponential) wavelet: G(xi) = c * xi**p * exp(-xi).

    Orders below 6 are rejected: the smoothness/decay hypotheses behind the
    covering-based frame guarantee need the profile and its first two
    derivatives to vanish faster than the fourth power at the origin, which
    fails for p < 6 (the weighted profile xi**(p-5) * exp(-xi) no longer
    tends to zero).
    """
    if p < 6:
        raise ValueError(
            f"cauchy order must be >= 6 (got {p}): for p < 6 the weighted "
            "profile max(xi**5, xi**-5) * G(xi) does not vanish at 0, so the "
            "decay hypotheses of the sampling guarantee fail"
        )

    def base(c: float) -> MotherWavelet:
        prof = _restrict_positive(lambda xi: c * xi**p * np.exp(-xi))
        d1 = _restrict_positive(lambda xi: c * np.exp(-xi) * xi ** (p - 1) * (p - xi))
        d2 = _restrict_positive(
            lambda xi: c * np.exp(-xi) * xi ** (p - 2) * (p * (p - 1) - 2 * p * xi + xi**2)
        )
        return MotherWavelet(prof, d1, d2, family="cauchy", params={"p": p, "c": c})

    w = base(1.0)
    if not normalize:
        return w
    c = 1.0 / math.sqrt(admissibility_constant(w))
    return base(c)


def gaussian_bump_wavelet(center: float = 1.0, width: float = 0.1) -> MotherWavelet:
    """Gaussian bump in frequency, truncated to compact support.

    The profile is zeroed outside center +- 8 widths, where its value is
    below exp(-32) ~ 1e-14; without the truncation the restriction to
    positive frequencies would tend to that constant instead of to zero as
    xi -> 0+, which the polynomially weighted decay checks would (correctly)
    reject.
    """
    if center <= 0 or width <= 0:
        raise ValueError("center and width must be positive")

    def supported(f):
        def g(xi):
            out = f(xi)
            out[np.abs(xi - center) > 8 * width] = 0.0
            return out

        return g

    def g0(xi):
        return np.exp(-((xi - center) ** 2) / (2 * width**2))

    prof = _restrict_positive(supported(g0))
    d1 = _restrict_positive(supported(lambda xi: g0(xi) * (-(xi - center) / width**2)))
    d2 = _restrict_positive(
        supported(lambda xi: g0(xi) * (((xi - center) / width**2) ** 2 - 1 / width**2))
    )
    return MotherWavelet(
        prof, d1, d2, family="gaussian_bump", params={"center": center, "width": width}
    )


def admissibility_constant(w: MotherWavelet, grid: LogGrid | None = None) -> float:
    """The Calderon constant: integral of |G(xi)|**2 / xi over xi > 0.

    Evaluated by Simpson quadrature after the log substitution, where the
    1/xi weight cancels against the Jacobian.  Raises if the integrand has
    not decayed at the grid ends (truncation would then be unreliable).
    """
    grid = grid or LogGrid()
    u = grid.log_points()
    vals = np.abs(w(np.exp(u))) ** 2
    peak = vals.max()
    if peak == 0.0:
        return 0.0
    if vals[0] > 1e-10 * peak or vals[-1] > 1e-10 * peak:
        raise ValueError(
            "admissibility integrand has not decayed at the grid ends; "
            "widen the grid"
        )
    return float(simpson(vals, x=u))


def normalize_tight(w: MotherWavelet, grid: LogGrid | None = None) -> MotherWavelet:
    """Rescale the profile so the admissibility constant is 1."""
    c2 = admissibility_constant(w, grid)
    if not (c2 > 0 and math.isfinite(c2)):
        raise ValueError(f"cannot normalize: admissibility constant {c2}")
    k = 1.0 / math.sqrt(c2)

    def scaled(f: Profile | None) -> Profile | None:
        if f is None:
            return None
        return lambda xi: k * f(xi)

    params = dict(w.params)
    params["c"] = k * params.get("c", 1.0)
    return replace(
        w,
        profile=scaled(w.profile),
        profile_d1=scaled(w.profile_d1),
        profile_d2=scaled(w.profile_d2),
        params=params,
    )


# ---------------------------------------------------------------------------
# decay conditions


@dataclass(frozen=True)
class DecayCondition:
    name: str
    tail_sup_low: float
    tail_sup_high: float
    threshold: float
    passed: bool


@dataclass(frozen=True)
class DecayReport:
    """Finite-grid certification of the smoothness/decay hypotheses.

    The genuinely asymptotic statements (vanishing at 0 and infinity,
    square-integrability of the weighted profile) are checked on a truncated
    grid: each condition records the sup of the weighted quantity over the
    low and high tails of the grid.  ``all_passed`` is the conjunction.
    """

    conditions: list[DecayCondition]
    l2_weighted: float
    l2_passed: bool
    grid: LogGrid
    threshold: float

    @property
    def all_passed(self) -> bool:
        return self.l2_passed and all(c.passed for c in self.conditions)


def _derivatives_on_grid(w: MotherWavelet, xi: np.ndarray, u: np.ndarray):
    g = w(xi)
    if w.profile_d1 is not None and w.profile_d2 is not None:
        return g, w.profile_d1(xi), w.profile_d2(xi)
    # finite differences on the log grid: dG/dxi = (dG/du) / xi
    d1 = np.gradient(g, u) / xi
    d2 = np.gradient(d1, u) / xi
    # Richardson-style coarse/fine disagreement as an accuracy guard
    d1c = np.gradient(g[::2], u[::2]) / xi[::2]
    scale = np.abs(d1).max() + 1e-300
    if np.abs(d1c - d1[::2]).max() > 1e-3 * scale:
        raise ValueError("grid too coarse for finite-difference derivatives")
    return g, d1, d2


def decay_condition_report(
    w: MotherWavelet,
    grid: LogGrid | None = None,
    threshold: float = 1e-8,
    tail_fraction: float = 0.01,
) -> DecayReport:
    """Check the covering-theorem hypotheses on a truncated grid.

    Under the log-warping substitution the conditions on the warped prototype
    and its first two derivatives become conditions on

        T0 = G,    T1 = xi * G',    T2 = xi * G'' - G',

    each of which must vanish at 0 and infinity against the weight
    max(xi**3, xi**-3).  Square-integrability of max(xi**5, xi**-5) * G on
    the positive axis is checked by quadrature with tail-decay flags.
    """
    grid = grid or LogGrid(xi_min=1e-6, xi_max=80.0, n=8193)
    u = grid.log_points()
    xi = np.exp(u)
    g, d1, d2 = _derivatives_on_grid(w, xi, u)
    w3 = np.maximum(xi**3, xi**-3.0)
    quantities = {
        "c0_decay_order_0": np.abs(g),
        "c0_decay_order_1": np.abs(xi * d1),
        "c0_decay_order_2": np.abs(xi * d2 - d1),
    }
    ntail = max(int(tail_fraction * xi.size), 4)
    conditions = []
    for name, q in quantities.items():
        weighted = w3 * q
        lo = float(weighted[:ntail].max())
        hi = float(weighted[-ntail:].max())
        conditions.append(
            DecayCondition(name, lo, hi, threshold, lo < threshold and hi < threshold)
        )
    # L2 weight: integral of max(xi**5, xi**-5)**2 * |G|**2 dxi
    integrand = np.maximum(xi**10, xi**-10.0) * np.abs(g) ** 2 * xi  # * xi: Jacobian
    total = float(simpson(integrand, x=u))
    peak = integrand.max() + 1e-300
    l2_ok = bool(
        math.isfinite(total)
        and integrand[:ntail].max() < 1e-9 * peak
        and integrand[-ntail:].max() < 1e-9 * peak
    )
    return DecayReport(conditions, total, l2_ok, grid, threshold)


# ---------------------------------------------------------------------------
# finite signal model


@dataclass(frozen=True)
class SignalModel:
    """Length-N periodic signal on [0, T) with strictly positive frequencies.

    ``coeffs[j - 1]`` is the coefficient of the orthonormal exponential at
    bin j, for j = 1 .. N/2 - 1; the squared norm is the plain sum of
    squared magnitudes (Parseval).
    """

    length: int
    duration: float
    coeffs: np.ndarray

    def __post_init__(self):
        n = self.length
        if n < 4 or n & (n - 1):
            raise ValueError(f"length must be a power of two >= 4, got {n}")
        if self.duration <= 0:
            raise ValueError(f"duration must be positive, got {self.duration}")
        c = np.asarray(self.coeffs, dtype=complex)
        if c.shape != (n // 2 - 1,):
            raise ValueError(f"expected {n // 2 - 1} coefficients, got {c.shape}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zeros(cls, length: int, duration: float) -> SignalModel:
        return cls(length, duration, np.zeros(length // 2 - 1, dtype=complex))

    @classmethod
    def from_time_samples(
        cls, samples: np.ndarray, duration: float, leak_tol: float = 1e-9
    ) -> SignalModel:
        """Project time samples onto the model; rejects signals with more
        than ``leak_tol`` of their energy at bin 0, the Nyquist bin, or
        negative frequencies."""
        samples = np.asarray(samples, dtype=complex)
        n = samples.size
        spec = np.fft.fft(samples) / math.sqrt(n)
        total = float(np.sum(np.abs(spec) ** 2))
        inside = float(np.sum(np.abs(spec[1 : n // 2]) ** 2))
        if total > 0 and (total - inside) > leak_tol * total:
            raise ValueError(
                "signal has energy outside the strictly positive frequency band"
            )
        # orthonormal-exponential coefficients: unitary DFT times sqrt(T/N) scaling
        return cls(n, duration, spec[1 : n // 2] * 1.0)

    def to_time_samples(self) -> np.ndarray:
        buf = np.zeros(self.length, dtype=complex)
        buf[1 : self.length // 2] = self.coeffs
        return np.fft.ifft(buf) * math.sqrt(self.length)

    @property
    def bins(self) -> np.ndarray:
        return np.arange(1, self.length // 2)

    @property
    def freqs(self) -> np.ndarray:
        return self.bins / self.duration

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def inner(self, other: SignalModel) -> complex:
        return complex(np.vdot(other.coeffs, self.coeffs))


def atom_spectrum(
    w: MotherWavelet, x: float, s: float, model: SignalModel
) -> np.ndarray:
    """Coefficients of the atom at (x, s) on the model's frequency bins:
    (T*s)**-0.5 * G(xi_j / s) * exp(-2*pi*i*x*xi_j)."""
    if s <= 0:
        raise ValueError(f"scale must be positive, got {s}")
    xi = model.freqs
    return (
        w(xi / s)
        * np.exp(-2j * np.pi * x * xi)
        / math.sqrt(model.duration * s)
    )


def _atom_matrix(
    w: MotherWavelet, points: np.ndarray, model: SignalModel
) -> np.ndarray:
    """Stacked atom coefficient rows for many phase-space points."""
    if points.shape[0] == 0:
        return np.zeros((0, model.length // 2 - 1), dtype=complex)
    xs = points[:, 0][:, None]
    ss = points[:, 1][:, None]
    xi = model.freqs[None, :]
    return (
        w((xi / ss).ravel()).reshape(ss.shape[0], -1)
        * np.exp(-2j * np.pi * xs * xi)
        / np.sqrt(model.duration * ss)
    )


def cwt(
    f: SignalModel, w: MotherWavelet, points: np.ndarray | list, chunk: int = 2048
) -> np.ndarray:
    """Wavelet coefficients <f, atom(x, s)> at the given phase-space points."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.size == 0:
        return np.zeros(0, dtype=complex)
    if pts.shape[1] != 2:
        raise ValueError("points must be (x, s) pairs")
    if np.any(pts[:, 1] <= 0):
        raise ValueError("all scales must be positive")
    out = np.empty(pts.shape[0], dtype=complex)
    for lo in range(0, pts.shape[0], chunk):
        block = pts[lo : lo + chunk]
        atoms = _atom_matrix(w, block, f)
        out[lo : lo + block.shape[0]] = atoms.conj() @ f.coeffs
    return out


def cwt_regular(f: SignalModel, w: MotherWavelet, s: float) -> np.ndarray:
    """Wavelet coefficients at one scale on the regular grid x_r = r*T/N,
    via a single inverse FFT; identical to ``cwt`` at those points up to
    rounding."""
    if s <= 0:
        raise ValueError(f"scale must be positive, got {s}")
    buf = np.zeros(f.length, dtype=complex)
    buf[1 : f.length // 2] = (
        f.coeffs * np.conj(w(f.freqs / s)) / math.sqrt(f.duration * s)
    )
    return np.fft.ifft(buf) * f.length


# ---------------------------------------------------------------------------
# serialization


def wavelet_spec(w: MotherWavelet) -> dict:
    """Small key-value document identifying a constructible wavelet."""
    return {"family": w.family, **{k: v for k, v in w.params.items()}}


def wavelet_from_spec(doc: dict) -> MotherWavelet:
    family = doc.get("family")
    if family == "cauchy":
        w = cauchy_wavelet(float(doc["p"]), normalize=False)
        if "c" in doc:
            return _rescaled(w, float(doc["c"]))
        return normalize_tight(w)
    if family == "gaussian_bump":
        return gaussian_bump_wavelet(float(doc["center"]), float(doc["width"]))
    raise ValueError(f"unknown wavelet family {family!r}")


def _rescaled(w: MotherWavelet, c: float) -> MotherWavelet:
    def scaled(f):
        return None if f is None else (lambda xi: c * f(xi))

    params = dict(w.params)
    params["c"] = c * params.get("c", 1.0)
    return replace(
        w,
        profile=scaled(w.profile),
        profile_d1=scaled(w.profile_d1),
        profile_d2=scaled(w.profile_d2),
        params=params,
    )


def save_signal(model: SignalModel, path: str, fmt: str = "bin") -> None:
    """Write the coefficient array as (re, im) float64 pairs.

    Binary format: flat little-endian float64, no header, 2 values per
    coefficient.  CSV format: header ``re,im``, one coefficient per row.
    """
    pairs = np.column_stack([model.coeffs.real, model.coeffs.imag])
    if fmt == "bin":
        pairs.astype("<f8").tofile(path)
    elif fmt == "csv":
        np.savetxt(path, pairs, delimiter=",", header="re,im", comments="")
    else:
        raise ValueError(f"unknown format {fmt!r}")


def load_signal(path: str, length: int, duration: float, fmt: str = "bin") -> SignalModel:
    if fmt == "bin":
        flat = np.fromfile(path, dtype="<f8")
        pairs = flat.reshape(-1, 2)
    elif fmt == "csv":
        pairs = np.loadtxt(path, delimiter=",", skiprows=1).reshape(-1, 2)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return SignalModel(length, duration, pairs[:, 0] + 1j * pairs[:, 1])
