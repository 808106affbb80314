"""Fourier-multiplier operators relating harmonic boundary traces across the
flat horizontal strip, with a round-trip consistency verifier.

Frequencies are the integer grid modes; sign(0) = 0 so the DC action is pure
1/cosh(0) = 1.  Multipliers are evaluated in tanh/sech form to stay finite at
large |k|.
"""

import numpy as np

from .spectral import SpectralScalar, l2_norm

OPERATORS = ("H1", "H2z", "H2h", "H3")

# sign convention constant for the round trip: composing the trace operators
# top-down then bottom-up returns (-f, m_minus) exactly
ROUND_TRIP_SIGN = -1.0


def _sech(k):
    e = np.exp(-np.abs(k))
    return 2.0 * e / (1.0 + e * e)


def _raw(f):
    return np.fft.rfft(f.samples)


def _field(spec, n):
    return SpectralScalar(np.fft.irfft(spec, n=n))


def apply_strip_operator(which, a, b):
    """Apply one of the strip trace operators to fields (a, b).

    H1(m+, w); H2z(f, m-); H2h(m+, w); H3(f, m-).
    """
    if a.n != b.n:
        raise ValueError("fields must share one grid")
    n = a.n
    k = np.arange(n // 2 + 1).astype(float)
    sgn = np.sign(k)
    th = np.tanh(k)
    sc = _sech(k)
    ah, bh = _raw(a), _raw(b)
    if which == "H1":
        out = -bh * sc - sgn * ah * th
    elif which == "H2h":
        out = ah * sc - sgn * bh * th
    elif which == "H2z":
        out = bh * sc + sgn * ah * th
    elif which == "H3":
        out = ah * sc - sgn * bh * th
    else:
        raise ValueError(f"unknown strip operator {which!r}; expected one of {OPERATORS}")
    return _field(out, n)


def round_trip_defect(f, m_minus):
    """L2 defects of the two-way trace composition.

    Computes m+ = H2z(f, m-), w = H3(f, m-), then returns
    (||H1(m+, w) - s1*f||, ||H2h(m+, w) - m-||) with s1 = ROUND_TRIP_SIGN.
    """
    m_plus = apply_strip_operator("H2z", f, m_minus)
    w = apply_strip_operator("H3", f, m_minus)
    back_f = apply_strip_operator("H1", m_plus, w)
    back_m = apply_strip_operator("H2h", m_plus, w)
    d1 = l2_norm(SpectralScalar(back_f.samples - ROUND_TRIP_SIGN * f.samples))
    d2 = l2_norm(SpectralScalar(back_m.samples - m_minus.samples))
    return d1, d2
