"""Unit tests for the flat-strip multiplier operators H1, H2z, H2h, H3."""

import numpy as np
import pytest

from muskat.flat_strip import (OPERATORS, ROUND_TRIP_SIGN,
                               apply_strip_operator, round_trip_defect)
from muskat.spectral import SpectralScalar, grid, l2_norm
from conftest import random_trig


def test_zero_inputs():
    n = 64
    zero = SpectralScalar.zeros(n)
    for which in OPERATORS:
        assert l2_norm(apply_strip_operator(which, zero, zero)) == 0.0


def test_h2z_single_mode():
    n, k = 64, 3
    a = grid(n)
    f = SpectralScalar(np.cos(k * a))
    out = apply_strip_operator("H2z", f, SpectralScalar.zeros(n))
    assert np.max(np.abs(out.samples - np.tanh(k) * np.cos(k * a))) <= 1e-13


def test_h2z_dc_mode():
    n = 64
    m_minus = SpectralScalar(np.full(n, 1.7))
    out = apply_strip_operator("H2z", SpectralScalar.zeros(n), m_minus)
    assert np.allclose(out.samples, 1.7, atol=1e-14)


def test_round_trip_sign():
    assert ROUND_TRIP_SIGN == -1.0


def test_round_trip_random(rng):
    n = 128
    for _ in range(50):
        f = random_trig(rng, n, n // 4)
        m = random_trig(rng, n, n // 4)
        d1, d2 = round_trip_defect(f, m)
        assert d1 <= 1e-12
        assert d2 <= 1e-12


def test_modewise_composition_matrix():
    """(H2z,H3) then (H1,H2h) acts modewise as diag(-1, +1)."""
    n = 64
    a = grid(n)
    for k in (1, 2, 7):
        for f_amp, m_amp in ((1.0, 0.0), (0.0, 1.0), (0.6, -0.4)):
            f = SpectralScalar(f_amp * np.cos(k * a))
            m = SpectralScalar(m_amp * np.cos(k * a))
            mp = apply_strip_operator("H2z", f, m)
            w = apply_strip_operator("H3", f, m)
            back_f = apply_strip_operator("H1", mp, w)
            back_m = apply_strip_operator("H2h", mp, w)
            assert np.max(np.abs(back_f.samples + f.samples)) <= 1e-12
            assert np.max(np.abs(back_m.samples - m.samples)) <= 1e-12


def test_boundedness(rng):
    n = 128
    for _ in range(20):
        a = random_trig(rng, n, n // 3)
        b = random_trig(rng, n, n // 3)
        for which in OPERATORS:
            out = apply_strip_operator(which, a, b)
            assert l2_norm(out) <= l2_norm(a) + l2_norm(b) + 1e-12


def test_realness(rng):
    n = 64
    a = random_trig(rng, n, 10)
    b = random_trig(rng, n, 10)
    for which in OPERATORS:
        out = apply_strip_operator(which, a, b)
        assert np.isrealobj(out.samples)
