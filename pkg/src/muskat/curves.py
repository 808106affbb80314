"""Periodic interface geometry.

A curve is (alpha + p1(alpha), p2(alpha)) with p1, p2 real periodic, so it
is a 2*pi-horizontally-periodic graph-like interface.  Horizontal point
differences are always reduced to the nearest periodic image, matching the
cotangent periodization used by the velocity kernels.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import CurveContact, NoConvergence, SelfIntersection
from .spectral import SpectralScalar, antiderivative, derivative, eval_at, grid, mean

CHORD_FLOOR = 1e-14
CONTACT_FLOOR = 1e-12


@dataclass(frozen=True)
class PeriodicCurve:
    """Interface z(alpha) = (alpha, 0) + (p1(alpha), p2(alpha))."""

    p1: SpectralScalar
    p2: SpectralScalar

    def __post_init__(self):
        if self.p1.n != self.p2.n:
            raise ValueError("curve components must share one grid")

    @property
    def n(self):
        return self.p1.n

    def positions(self):
        """(x, y) samples on the grid."""
        return grid(self.n) + self.p1.samples, self.p2.samples

    def as_complex(self):
        x, y = self.positions()
        return x + 1j * y

    def tangent(self):
        """(d_alpha z1, d_alpha z2) samples."""
        return 1.0 + derivative(self.p1).samples, derivative(self.p2).samples

    def tangent_complex(self):
        tx, ty = self.tangent()
        return tx + 1j * ty

    def speed_squared(self):
        tx, ty = self.tangent()
        return tx**2 + ty**2

    @classmethod
    def flat(cls, n, depth=0.0):
        return cls(SpectralScalar.zeros(n), SpectralScalar(np.full(n, float(depth))))


@dataclass(frozen=True)
class FluidParams:
    """Two-phase Darcy parameters and their derived coupling constants."""

    mu1: float
    mu2: float
    kappa1: float
    kappa2: float
    rho1: float
    rho2: float
    g: float = 1.0
    gamma1: float = field(init=False)
    gamma2: float = field(init=False)
    big_n: float = field(init=False)

    def __post_init__(self):
        if self.mu1 + self.mu2 <= 0.0:
            raise ValueError("mu1 + mu2 must be positive")
        if self.kappa1 + self.kappa2 <= 0.0:
            raise ValueError("kappa1 + kappa2 must be positive")
        g1 = (self.mu2 - self.mu1) / (self.mu1 + self.mu2)
        g2 = (self.kappa1 - self.kappa2) / (self.kappa1 + self.kappa2)
        if abs(g1) >= 1.0:
            raise ValueError(f"|gamma1| = {abs(g1)} must be < 1")
        if abs(g2) >= 1.0:
            raise ValueError(f"|gamma2| = {abs(g2)} must be < 1")
        object.__setattr__(self, "gamma1", g1)
        object.__setattr__(self, "gamma2", g2)
        object.__setattr__(
            self, "big_n", 2.0 * self.kappa1 * self.g * (self.rho2 - self.rho1) / (self.mu1 + self.mu2)
        )


def _wrap(dx):
    """Reduce a horizontal difference modulo 2*pi to (-pi, pi]."""
    return dx - 2.0 * np.pi * np.floor(dx / (2.0 * np.pi) + 0.5)


def arc_chord_norm(z):
    """sup |beta| / |z(alpha) - z(alpha - beta)| over the grid.

    The diagonal carries the beta -> 0 limit 1/|d_alpha z|.
    """
    x, y = z.positions()
    a = grid(z.n)
    beta = _wrap(a[:, None] - a[None, :])
    dx = _wrap(x[:, None] - x[None, :])
    dy = y[:, None] - y[None, :]
    chord = np.hypot(dx, dy)
    off = ~np.eye(z.n, dtype=bool)
    if np.any(chord[off] < CHORD_FLOOR):
        raise SelfIntersection("coincident curve nodes")
    ratio = np.abs(beta[off]) / chord[off]
    diag = 1.0 / np.sqrt(z.speed_squared())
    return float(max(ratio.max(), diag.max()))


def separation_norm(z, h):
    """1 / min |z(alpha) - h(beta)|^2 over the grid (periodized)."""
    zx, zy = z.positions()
    hx, hy = h.positions()
    dx = _wrap(zx[:, None] - hx[None, :])
    dy = zy[:, None] - hy[None, :]
    dmin = float(np.min(np.hypot(dx, dy)))
    if dmin < CONTACT_FLOOR:
        raise CurveContact("curves touch")
    return 1.0 / dmin**2


def parametrization_defect(z):
    """sup | |d_alpha z|^2 - mean | / mean; zero for uniform parametrizations."""
    s2 = z.speed_squared()
    m = float(np.mean(s2))
    return float(np.max(np.abs(s2 - m)) / m)


def _resample_pass(z):
    """One arclength-reparametrization sweep via spectral interpolation."""
    n = z.n
    beta = grid(n)
    speed = SpectralScalar(np.sqrt(z.speed_squared()))
    speed_mean = mean(speed)
    fluct = antiderivative(SpectralScalar(speed.samples - speed_mean))

    def arclen(a):
        return speed_mean * (a + np.pi) + eval_at(fluct, a)

    target = speed_mean * (beta + np.pi)  # total length / 2*pi = speed_mean
    g = beta.copy()
    for _ in range(50):
        res = arclen(g) - target
        g = g - res / np.maximum(eval_at(speed, g), 1e-12)
        if np.max(np.abs(res)) < 1e-14 * max(speed_mean, 1.0):
            break
    p1_new = g + eval_at(z.p1, g) - beta
    p2_new = eval_at(z.p2, g)
    return PeriodicCurve(SpectralScalar(p1_new), SpectralScalar(p2_new))


def resample_uniform(z, tol=1e-8, max_sweeps=100):
    """Reparametrize so that |d_alpha z| is uniform, preserving the image."""
    cur = z
    for _ in range(max_sweeps):
        if parametrization_defect(cur) <= tol:
            return cur
        cur = _resample_pass(cur)
    if parametrization_defect(cur) <= tol:
        return cur
    raise NoConvergence("arclength reparametrization did not settle", best_estimate=cur)


def curve_to_snapshot(z):
    """JSON-ready dict {n, p1_modes, p2_modes}, coefficients as [re, im]."""

    def pack(f):
        return [[float(c.real), float(c.imag)] for c in f.modes]

    return {"n": z.n, "p1_modes": pack(z.p1), "p2_modes": pack(z.p2)}


def curve_from_snapshot(doc):
    n = int(doc["n"])

    def unpack(pairs):
        return SpectralScalar.from_modes(np.array([complex(re, im) for re, im in pairs]), n)

    return PeriodicCurve(unpack(doc["p1_modes"]), unpack(doc["p2_modes"]))
