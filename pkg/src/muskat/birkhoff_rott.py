"""Birkhoff-Rott velocities, the coupled sheet operator and its adjoint.

Periodization: with w = dz1 + i*dz2 the planar kernel x_perp/|x|^2 is i/conj(w),
and summing over horizontal images gives (i/2)*cot(conj(w)/2).  Principal values
on the diagonal use the alternating-point trapezoidal rule (nodes of opposite
parity, weight 2*(2*pi/N)), which is spectrally accurate for periodic sheets.
"""

from dataclasses import dataclass, field

import numpy as np

from .curves import CHORD_FLOOR, PeriodicCurve
from .errors import CurveContact, NoConvergence, SelfIntersection
from .spectral import SpectralScalar, l2_norm


@dataclass(frozen=True)
class AmplitudeField:
    """Mean-zero vorticity amplitude living on one curve."""

    values: SpectralScalar = field()

    def __post_init__(self):
        v = self.values
        object.__setattr__(self, "values", SpectralScalar(v.samples - np.mean(v.samples)))

    @property
    def n(self):
        return self.values.n

    @classmethod
    def zeros(cls, n):
        return cls(SpectralScalar.zeros(n))


def _cot_half(w):
    return np.cos(w / 2.0) / np.sin(w / 2.0)


def _pairwise(target, source):
    """Complex displacement matrix target_i - source_j."""
    tc = target.as_complex()
    sc = source.as_complex()
    return tc[:, None] - sc[None, :]


def _parity_mask(n):
    idx = np.arange(n)
    return (idx[:, None] - idx[None, :]) % 2 == 1


def br_self(gamma, omega):
    """Principal-value sheet-on-itself velocity, prefactor 1/(2*pi).

    Returns the two velocity components on gamma's grid.
    """
    n = gamma.n
    if omega.n != n:
        raise ValueError("amplitude grid does not match the curve")
    w = _pairwise(gamma, gamma)
    mask = _parity_mask(n)
    half = np.where(mask, np.conj(w) / 2.0, 1.0)
    s = np.sin(half)
    if np.any(np.abs(s[mask]) < CHORD_FLOOR):
        raise SelfIntersection("degenerate chord in self-interaction kernel")
    kern = np.where(mask, np.cos(half) / s, 0.0)
    v = (1j / n) * (kern @ omega.values.samples)
    return SpectralScalar(v.real), SpectralScalar(v.imag)


def br_cross(source, omega, target):
    """One sheet's velocity evaluated on the other curve (nonsingular)."""
    if omega.n != source.n:
        raise ValueError("amplitude grid does not match the source curve")
    w = _pairwise(target, source)
    s = np.sin(np.conj(w) / 2.0)
    if np.any(np.abs(s) < CHORD_FLOOR):
        raise CurveContact("curves touch inside the cross kernel")
    kern = np.cos(np.conj(w) / 2.0) / s
    v = (1j / (2.0 * source.n)) * (kern @ omega.values.samples)
    return SpectralScalar(v.real), SpectralScalar(v.imag)


def _dot_tangent(vfield, curve):
    tx, ty = curve.tangent()
    return vfield[0].samples * tx + vfield[1].samples * ty


def apply_T(z, h, u, v):
    """Coupled sheet operator: returns (T1 u + T2 v, T3 u + T4 v)."""
    first = 2.0 * _dot_tangent(br_self(z, u), z) + 2.0 * _dot_tangent(br_cross(h, v, z), z)
    second = 2.0 * _dot_tangent(br_cross(z, u, h), h) + 2.0 * _dot_tangent(br_self(h, v), h)
    return AmplitudeField(SpectralScalar(first)), AmplitudeField(SpectralScalar(second))


def _adjoint_kernel(target, source, pv):
    """Scalar kernel Delta_perp . d_alpha source / |Delta|^2, periodized.

    Complex form: Re(-i * tangent(source_j) * (1/2) cot(Delta_ij / 2)).
    """
    w = _pairwise(target, source)
    tc = source.tangent_complex()
    if pv:
        mask = _parity_mask(target.n)
        half = np.where(mask, w / 2.0, 1.0)
        s = np.sin(half)
        if np.any(np.abs(s[mask]) < CHORD_FLOOR):
            raise SelfIntersection("degenerate chord in adjoint kernel")
        cot = np.where(mask, np.cos(half) / s, 0.0)
    else:
        s = np.sin(w / 2.0)
        if np.any(np.abs(s) < CHORD_FLOOR):
            raise CurveContact("curves touch inside the adjoint kernel")
        cot = np.cos(w / 2.0) / s
    return np.real(-1j * tc[None, :] * cot / 2.0)


def apply_T_adjoint(z, h, u, v):
    """Adjoint operator layout (T1* u + T3* v, T2* u + T4* v)."""
    n = z.n

    def pv_apply(target, source, amp):
        kern = _adjoint_kernel(target, source, pv=True)
        return -(1.0 / np.pi) * (4.0 * np.pi / n) * (kern @ amp.values.samples)

    def reg_apply(target, source, amp):
        kern = _adjoint_kernel(target, source, pv=False)
        return -(1.0 / np.pi) * (2.0 * np.pi / n) * (kern @ amp.values.samples)

    t1s = pv_apply(z, z, u)
    t3s = reg_apply(z, h, v)
    t2s = reg_apply(h, z, u)
    t4s = pv_apply(h, h, v)
    return (
        AmplitudeField(SpectralScalar(t1s + t3s)),
        AmplitudeField(SpectralScalar(t2s + t4s)),
    )


def assemble_T_matrix(z, h):
    """Dense 2N x 2N collocation matrix of apply_T (verification path)."""
    n = z.n

    def vel_matrix(target, source, pv):
        w = _pairwise(target, source)
        if pv:
            mask = _parity_mask(n)
            half = np.where(mask, np.conj(w) / 2.0, 1.0)
            kern = np.where(mask, np.cos(half) / np.sin(half), 0.0)
            return (1j / n) * kern
        half = np.conj(w) / 2.0
        return (1j / (2.0 * n)) * np.cos(half) / np.sin(half)

    def block(target, source, pv):
        m = vel_matrix(target, source, pv)
        tc = target.tangent_complex()
        return 2.0 * np.real(np.conj(m) * tc[:, None])

    top = np.hstack([block(z, z, True), block(z, h, False)])
    bot = np.hstack([block(h, z, False), block(h, h, True)])
    return np.vstack([top, bot])


def spectral_radius(z, h, params, n_probe=60, seed=0, trace_out=None):
    """Power-iteration estimate of rho(M T*) with M = diag(-gamma1, -gamma2).

    The dominant eigenvalues come in complex pairs, so the estimate pairs
    consecutive growth ratios (their geometric mean is exact for a pure pair).
    """
    if n_probe < 20:
        raise ValueError("n_probe must be >= 20")
    rng = np.random.default_rng(seed)
    n = z.n
    w1 = AmplitudeField(SpectralScalar(rng.standard_normal(n)))
    w2 = AmplitudeField(SpectralScalar(rng.standard_normal(n)))
    g1, g2 = params.gamma1, params.gamma2
    if g1 == 0.0 and g2 == 0.0:
        return 0.0
    norm = np.hypot(l2_norm(w1.values), l2_norm(w2.values))
    w1 = AmplitudeField(SpectralScalar(w1.values.samples / norm))
    w2 = AmplitudeField(SpectralScalar(w2.values.samples / norm))
    ratios = []
    est_prev = est = None
    for _ in range(n_probe):
        a1, a2 = apply_T_adjoint(z, h, w1, w2)
        y1 = -g1 * a1.values.samples
        y2 = -g2 * a2.values.samples
        growth = np.hypot(l2_norm(SpectralScalar(y1)), l2_norm(SpectralScalar(y2)))
        if growth < 1e-300:
            return 0.0
        ratios.append(growth)
        w1 = AmplitudeField(SpectralScalar(y1 / growth))
        w2 = AmplitudeField(SpectralScalar(y2 / growth))
        if len(ratios) >= 2:
            est_prev, est = est, float(np.sqrt(ratios[-1] * ratios[-2]))
            if trace_out is not None:
                trace_out.append(est)
    if est is None or (est_prev is not None and abs(est - est_prev) > 1e-6):
        raise NoConvergence("spectral-radius estimate still moving", best_estimate=est)
    return est
