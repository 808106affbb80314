"""Unit tests for the diagnostic quantities: sigma, dissipation, energy."""

import numpy as np
import pytest

from muskat.curves import PeriodicCurve, FluidParams
from muskat.diagnostics import (CSV_HEADER, curve_sobolev, rayleigh_taylor_sigma,
                                dissipation_term, dissipation_quadratic_form,
                                energy_functional, make_record, sigma_min_drift)
from muskat.errors import InsufficientData
from muskat.evolution import SimState
from muskat.spectral import SpectralScalar, grid, eval_at, derivative, hilbert
from conftest import random_curve_pair


def make_state(z, h, p, t=0.0):
    return SimState(t=t, z=z, h=h, params=p)


def std_params(**kw):
    base = dict(mu1=1.0, mu2=3.0, kappa1=1.3, kappa2=0.7, rho1=0.0, rho2=2.0, g=1.0)
    base.update(kw)
    return FluidParams(**base)


def test_sigma_flat():
    n = 64
    p = std_params()
    st = make_state(PeriodicCurve.flat(n), PeriodicCurve.flat(n, -2.0), p)
    field, m = rayleigh_taylor_sigma(st)
    expect = (p.rho2 - p.rho1) * p.g
    assert np.max(np.abs(field.samples - expect)) <= 1e-12
    assert m == pytest.approx(expect, abs=1e-12)


def test_sigma_equal_viscosity():
    n = 64
    a = grid(n)
    p = std_params(mu1=2.0, mu2=2.0)
    z = PeriodicCurve(SpectralScalar(0.1 * np.cos(a)), SpectralScalar(0.1 * np.sin(a)))
    st = make_state(z, PeriodicCurve.flat(n, -2.0), p)
    field, _ = rayleigh_taylor_sigma(st)
    tx, _ = z.tangent()
    expect = (p.rho2 - p.rho1) * p.g * tx
    assert np.max(np.abs(field.samples - expect)) <= 1e-12


def test_sigma_refined_grid_oracle(rng):
    """sigma on the coarse grid matches the same formula computed at N=2n."""
    n = 64
    a = grid(n)
    z = PeriodicCurve(SpectralScalar.zeros(n), SpectralScalar(0.05 * np.sin(a)))
    h = PeriodicCurve.flat(n, -1.5)
    p = std_params()
    st = make_state(z, h, p)
    field, _ = rayleigh_taylor_sigma(st)

    n2 = 2 * n
    a2 = grid(n2)
    z2 = PeriodicCurve(SpectralScalar.zeros(n2), SpectralScalar(0.05 * np.sin(a2)))
    h2 = PeriodicCurve.flat(n2, -1.5)
    field2, _ = rayleigh_taylor_sigma(make_state(z2, h2, p))
    assert np.max(np.abs(field.samples - field2.samples[::2])) <= 1e-7


def test_sigma_translation_invariance(rng):
    n = 64
    z, h = random_curve_pair(rng, n)
    p = std_params()
    f1, m1 = rayleigh_taylor_sigma(make_state(z, h, p))
    s = 1.1
    zt = PeriodicCurve(z.p1 + s, z.p2)
    ht = PeriodicCurve(h.p1 + s, h.p2)
    f2, m2 = rayleigh_taylor_sigma(make_state(zt, ht, p))
    assert np.max(np.abs(f1.samples - f2.samples)) <= 1e-11
    assert m1 == pytest.approx(m2, abs=1e-11)


def test_dissipation_flat_zero():
    n = 64
    st = make_state(PeriodicCurve.flat(n), PeriodicCurve.flat(n, -2.0), std_params())
    assert dissipation_term(st, 3) == pytest.approx(0.0, abs=1e-14)


def test_dissipation_single_mode_oracle():
    """Quadratic form on z2 = a cos(k alpha): integral = pi a^2 k^(2m+1)."""
    n = 128
    a = grid(n)
    amp, k, m = 0.03, 2, 3
    z = PeriodicCurve(SpectralScalar.zeros(n), SpectralScalar(amp * np.cos(k * a)))
    q = dissipation_quadratic_form(z, m)
    assert q == pytest.approx(np.pi * amp**2 * k**7, rel=1e-9)


def test_dissipation_positivity(rng):
    for _ in range(10):
        z, _ = random_curve_pair(rng, 64)
        for k in (1, 2, 3):
            q = dissipation_quadratic_form(z, k)
            dz1 = derivative(z.p1, order=k)
            dz2 = derivative(z.p2, order=k)
            scale = np.sum(dz1.samples**2 + dz2.samples**2) * 2 * np.pi / 64
            assert q >= -1e-12 * scale


def test_energy_flat():
    n = 64
    st = make_state(PeriodicCurve.flat(n), PeriodicCurve.flat(n, -2.0), std_params())
    assert energy_functional(st) == pytest.approx(1.0625, abs=1e-12)


def test_energy_composition(rng):
    from muskat.curves import arc_chord_norm, separation_norm

    z, h = random_curve_pair(rng, 64)
    st = make_state(z, h, std_params())
    expect = (arc_chord_norm(z) ** 2 + separation_norm(z, h) ** 2
              + curve_sobolev(z, 3) ** 2)
    assert energy_functional(st) == expect


def test_record_and_csv():
    n = 64
    st = make_state(PeriodicCurve.flat(n), PeriodicCurve.flat(n, -2.0), std_params())
    rec = make_record(st)
    row = rec.csv_row()
    assert len(row.split(",")) == len(CSV_HEADER.split(","))
    assert row.split(",")[-1] in ("1", "0", "True", "true")


def test_sigma_min_drift():
    n = 64
    st = make_state(PeriodicCurve.flat(n), PeriodicCurve.flat(n, -2.0), std_params())
    r0 = make_record(st)
    r1 = make_record(make_state(st.z, st.h, st.params, t=0.1))
    assert sigma_min_drift([r0, r1]) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(InsufficientData):
        sigma_min_drift([r0])
