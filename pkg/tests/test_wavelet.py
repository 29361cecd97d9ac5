import math
import os
import tempfile

import numpy as np
import pytest

from goldwave.wavelet import (
    LogGrid,
    MotherWavelet,
    SignalModel,
    admissibility_constant,
    atom_spectrum,
    cauchy_wavelet,
    cwt,
    cwt_regular,
    decay_condition_report,
    gaussian_bump_wavelet,
    load_signal,
    normalize_tight,
    save_signal,
    wavelet_from_spec,
    wavelet_spec,
)


def random_signal(rng, n=512, t=64.0):
    c = rng.standard_normal(n // 2 - 1) + 1j * rng.standard_normal(n // 2 - 1)
    return SignalModel(n, t, c)


# ---------------------------------------------------------------------------
# profiles and admissibility


def test_cauchy_admissibility_closed_form():
    # integral of x**(2p-1) e**(-2x) dx = Gamma(2p) / 2**(2p)
    for p in (6.0, 7.0, 9.0):
        w = cauchy_wavelet(p, normalize=False)
        oracle = math.gamma(2 * p) / 4**p
        assert admissibility_constant(w) == pytest.approx(oracle, rel=1e-10)


def test_normalize_tight():
    w = cauchy_wavelet(6.0)
    assert admissibility_constant(w) == pytest.approx(1.0, abs=1e-9)
    wn = normalize_tight(gaussian_bump_wavelet())
    assert admissibility_constant(wn) == pytest.approx(1.0, abs=1e-9)


def test_cauchy_rejects_low_order():
    with pytest.raises(ValueError):
        cauchy_wavelet(3.0)
    with pytest.raises(ValueError):
        cauchy_wavelet(5.999)


def test_profile_vanishes_on_negative_axis():
    w = cauchy_wavelet(6.0)
    xi = np.array([-3.0, -0.5, 0.0, 0.5])
    vals = w(xi)
    assert np.all(vals[:3] == 0.0)
    assert vals[3] > 0.0


def test_derivatives_match_finite_differences():
    w = cauchy_wavelet(6.0)
    xi = np.linspace(0.5, 20.0, 200)
    h = 1e-6 * xi
    fd1 = (w(xi + h) - w(xi - h)) / (2 * h)
    assert np.allclose(w.profile_d1(xi), fd1, rtol=1e-6, atol=1e-12)
    fd2 = (w.profile_d1(xi + h) - w.profile_d1(xi - h)) / (2 * h)
    assert np.allclose(w.profile_d2(xi), fd2, rtol=1e-6, atol=1e-12)


def test_admissibility_guards_truncation():
    # a profile that has not decayed by the grid edge must be refused
    flat = MotherWavelet(profile=lambda xi: np.where(xi > 0, 1.0, 0.0))
    with pytest.raises(ValueError):
        admissibility_constant(flat)


def test_grid_validation():
    with pytest.raises(ValueError):
        LogGrid(xi_min=2.0, xi_max=1.0)
    with pytest.raises(ValueError):
        LogGrid(n=4)


# ---------------------------------------------------------------------------
# decay conditions


def test_decay_cauchy6_passes():
    rep = decay_condition_report(cauchy_wavelet(6.0))
    assert rep.all_passed
    assert all(c.passed for c in rep.conditions)
    assert rep.l2_passed


def test_decay_low_order_fails_at_origin():
    # p = 3 constructed around the guard: the origin-side tail flag must trip
    p = 3.0
    raw = MotherWavelet(
        profile=lambda xi: np.where(xi > 0, np.abs(xi) ** p * np.exp(-np.abs(xi)), 0.0)
    )
    rep = decay_condition_report(raw)
    assert not rep.all_passed
    order0 = rep.conditions[0]
    assert order0.tail_sup_low > order0.threshold


def test_decay_gaussian_bump_passes():
    rep = decay_condition_report(gaussian_bump_wavelet(1.0, 0.1))
    assert rep.all_passed


def test_decay_grid_coarse_rejected():
    raw = MotherWavelet(
        profile=lambda xi: np.where(xi > 0, np.abs(xi) ** 6 * np.exp(-np.abs(xi)), 0.0)
    )
    with pytest.raises(ValueError):
        decay_condition_report(raw, grid=LogGrid(xi_min=1e-6, xi_max=80.0, n=33))


# ---------------------------------------------------------------------------
# signal model


def test_signal_model_validation():
    with pytest.raises(ValueError):
        SignalModel(100, 1.0, np.zeros(49, dtype=complex))  # not a power of two
    with pytest.raises(ValueError):
        SignalModel(64, -1.0, np.zeros(31, dtype=complex))
    with pytest.raises(ValueError):
        SignalModel(64, 1.0, np.zeros(30, dtype=complex))  # wrong length


def test_time_roundtrip_and_norm():
    rng = np.random.default_rng(1)
    f = random_signal(rng)
    samples = f.to_time_samples()
    g = SignalModel.from_time_samples(samples, f.duration)
    assert np.allclose(g.coeffs, f.coeffs, atol=1e-12)
    # Parseval between coefficient norm and sample norm
    assert f.norm() ** 2 == pytest.approx(np.sum(np.abs(samples) ** 2), rel=1e-12)


def test_from_time_samples_rejects_leakage():
    n = 128
    t = np.arange(n)
    real_cosine = np.cos(2 * np.pi * 5 * t / n)  # negative-frequency energy
    with pytest.raises(ValueError):
        SignalModel.from_time_samples(real_cosine, 16.0)


# ---------------------------------------------------------------------------
# transform


def test_atom_self_correlation():
    w = cauchy_wavelet(6.0)
    model = SignalModel.zeros(1024, 128.0)
    x0, s0 = 40.0, 0.05
    atom = atom_spectrum(w, x0, s0, model)
    f = SignalModel(model.length, model.duration, atom)
    val = cwt(f, w, [(x0, s0)])[0]
    assert val == pytest.approx(np.vdot(atom, atom).real, rel=1e-12)


def test_disjoint_frequency_supports_give_zero():
    w = gaussian_bump_wavelet(1.0, 0.05)  # support [0.6, 1.4]
    model = SignalModel.zeros(1024, 128.0)
    coeffs = np.zeros(511, dtype=complex)
    coeffs[10] = 1.0  # bin 11, frequency 11/128 = 0.086
    f = SignalModel(1024, 128.0, coeffs)
    # at s = 1 the atom occupies [0.6, 1.4]: disjoint from the signal
    assert abs(cwt(f, w, [(3.0, 1.0)])[0]) < 1e-12


def test_cwt_linearity():
    rng = np.random.default_rng(2)
    w = cauchy_wavelet(6.0)
    f, g = random_signal(rng), random_signal(rng)
    pts = np.column_stack([rng.uniform(0, 64, 20), np.exp(rng.uniform(-3, 0, 20))])
    lhs = cwt(SignalModel(512, 64.0, 2.0 * f.coeffs - 1j * g.coeffs), w, pts)
    rhs = 2.0 * cwt(f, w, pts) - 1j * cwt(g, w, pts)
    assert np.allclose(lhs, rhs, atol=1e-12)


def test_cwt_regular_matches_direct():
    rng = np.random.default_rng(3)
    w = cauchy_wavelet(6.0)
    f = random_signal(rng)
    s = 0.37
    reg = cwt_regular(f, w, s)
    xs = np.arange(f.length) * f.duration / f.length
    direct = cwt(f, w, np.column_stack([xs, np.full(f.length, s)]))
    assert np.max(np.abs(reg - direct)) < 1e-10


def test_translation_covariance():
    rng = np.random.default_rng(4)
    w = cauchy_wavelet(6.0)
    f = random_signal(rng)
    tau_samples = 17
    tau = tau_samples * f.duration / f.length
    shifted = SignalModel(
        f.length, f.duration, f.coeffs * np.exp(-2j * np.pi * f.freqs * tau)
    )
    pts = np.column_stack([rng.uniform(5, 50, 25), np.exp(rng.uniform(-3, 0, 25))])
    moved = pts.copy()
    moved[:, 0] -= tau
    assert np.allclose(cwt(shifted, w, pts), cwt(f, w, moved), atol=1e-10)


def test_dilation_covariance():
    # doubling the scale parameter of the signal halves the atom scale match
    w = cauchy_wavelet(6.0)
    n, t = 4096, 4096.0
    xi = np.arange(1, n // 2) / t
    xi0, sig = 0.04, 0.004
    f = SignalModel(n, t, np.exp(-((xi - xi0) ** 2) / (2 * sig**2)).astype(complex))
    f2 = SignalModel(
        n, t, np.sqrt(2.0) * np.exp(-((xi - 2 * xi0) ** 2) / (2 * (2 * sig) ** 2)).astype(complex)
    )
    # dilated signal (unitary scaling by 2) analyzed at doubled s, scaled x
    pts = np.array([[512.0, 0.008], [700.0, 0.01]])
    pts2 = np.column_stack([pts[:, 0] / 2.0, pts[:, 1] * 2.0])
    v1 = cwt(f, w, pts)
    v2 = cwt(f2, w, pts2)
    assert np.allclose(v1, v2, rtol=1e-3, atol=1e-6)


def test_cwt_input_validation():
    w = cauchy_wavelet(6.0)
    f = SignalModel.zeros(64, 8.0)
    with pytest.raises(ValueError):
        cwt(f, w, [(0.0, -1.0)])
    with pytest.raises(ValueError):
        cwt(f, w, np.zeros((3, 3)))
    with pytest.raises(ValueError):
        atom_spectrum(w, 0.0, 0.0, f)
    assert cwt(f, w, []).size == 0


def test_parseval_surrogate_small():
    w = cauchy_wavelet(6.0)
    n, t = 1024, 1024.0
    xi = np.arange(1, n // 2) / t
    f = SignalModel(n, t, np.exp(-((xi - 0.06) ** 2) / (2 * 0.006**2)).astype(complex))
    u = np.linspace(math.log(1e-3), math.log(0.25), 301)
    ss = np.exp(u)
    per_scale = np.array(
        [np.sum(np.abs(cwt_regular(f, w, s)) ** 2) * (t / n) for s in ss]
    )
    from scipy.integrate import simpson

    total = simpson(per_scale * ss, x=u)
    assert total == pytest.approx(f.norm() ** 2, rel=0.02)


# ---------------------------------------------------------------------------
# serialization


def test_wavelet_spec_roundtrip():
    for w in (cauchy_wavelet(6.0), cauchy_wavelet(8.0, normalize=False),
              gaussian_bump_wavelet(2.0, 0.3)):
        w2 = wavelet_from_spec(wavelet_spec(w))
        xi = np.linspace(0.01, 40, 500)
        assert np.allclose(w2(xi), w(xi), atol=1e-14)
    with pytest.raises(ValueError):
        wavelet_from_spec({"family": "unknown"})


def test_signal_io_roundtrip():
    rng = np.random.default_rng(7)
    f = random_signal(rng)
    for fmt in ("bin", "csv"):
        path = os.path.join(tempfile.mkdtemp(), "sig." + fmt)
        save_signal(f, path, fmt)
        g = load_signal(path, f.length, f.duration, fmt)
        assert np.array_equal(g.coeffs, f.coeffs)
    with pytest.raises(ValueError):
        save_signal(f, "/tmp/x", "xml")
