"""Monitored quantities: Rayleigh-Taylor function, dissipation quadratic form,
energy functional and per-step records."""

from dataclasses import dataclass

import numpy as np

from .curves import arc_chord_norm, parametrization_defect, separation_norm
from .errors import InsufficientData
from .spectral import SpectralScalar, derivative, fractional_laplacian, sobolev_norm

CSV_HEADER = "t,h3,omega_h1,arc_chord,separation,sigma_min,dissipation,energy,accepted"


@dataclass(frozen=True)
class DiagnosticsRecord:
    t: float
    sobolev_z_k: float
    sobolev_omega: float
    arc_chord: float
    separation: float
    sigma_min: float
    dissipation: float
    energy: float
    step_accepted: bool = True

    def csv_row(self):
        vals = [
            self.t,
            self.sobolev_z_k,
            self.sobolev_omega,
            self.arc_chord,
            self.separation,
            self.sigma_min,
            self.dissipation,
            self.energy,
        ]
        return ",".join(repr(float(v)) for v in vals) + f",{int(self.step_accepted)}"


def curve_sobolev(z, k):
    """H^k size of the periodic part of a curve (both components)."""
    return float(np.hypot(sobolev_norm(z.p1, k), sobolev_norm(z.p2, k)))


def rayleigh_taylor_sigma(state):
    """Pointwise sigma and its grid minimum m(t).

    sigma = (mu2-mu1)/kappa1 * (BR velocity) . d_alpha^perp z
          + (rho2-rho1) * g * d_alpha z1.
    """
    p = state.params
    vx, vy = state.velocity_no_correction()
    tx, ty = state.z.tangent()
    normal_part = vx.samples * (-ty) + vy.samples * tx
    sig = (p.mu2 - p.mu1) / p.kappa1 * normal_part + (p.rho2 - p.rho1) * p.g * tx
    field = SpectralScalar(sig)
    return field, float(np.min(sig))


def dissipation_term(state, k):
    """-kappa1/(2*pi*(mu1+mu2)) * int sigma/A * d^k z . Lambda d^k z."""
    if k < 1:
        raise ValueError("derivative order must be >= 1")
    p = state.params
    z = state.z
    sig, _ = rayleigh_taylor_sigma(state)
    area = float(np.mean(z.speed_squared()))
    dz1 = derivative(z.p1, k)
    dz2 = derivative(z.p2, k)
    if k == 1:
        dz1 = SpectralScalar(1.0 + dz1.samples)
    lam1 = fractional_laplacian(dz1, 1.0)
    lam2 = fractional_laplacian(dz2, 1.0)
    integrand = sig.samples / area * (dz1.samples * lam1.samples + dz2.samples * lam2.samples)
    quad = 2.0 * np.pi / z.n * np.sum(integrand)
    return float(-p.kappa1 / (2.0 * np.pi * (p.mu1 + p.mu2)) * quad)


def dissipation_quadratic_form(z, k):
    """int d^k z . Lambda d^k z, nonnegative by Plancherel."""
    dz1 = derivative(z.p1, k)
    dz2 = derivative(z.p2, k)
    lam1 = fractional_laplacian(dz1, 1.0)
    lam2 = fractional_laplacian(dz2, 1.0)
    return float(
        2.0 * np.pi / z.n * np.sum(dz1.samples * lam1.samples + dz2.samples * lam2.samples)
    )


def energy_functional(state, k=3):
    """arc-chord^2 + separation^2 + H^k of the periodic part squared."""
    ac = arc_chord_norm(state.z)
    sep = separation_norm(state.z, state.h)
    hk = curve_sobolev(state.z, k)
    return float(ac**2 + sep**2 + hk**2)


def make_record(state, k=3, accepted=True):
    sig, sig_min = rayleigh_taylor_sigma(state)
    vort = state.vorticity()
    omega_h1 = float(
        np.hypot(sobolev_norm(vort.omega1.values, 1), sobolev_norm(vort.omega2.values, 1))
    )
    return DiagnosticsRecord(
        t=state.t,
        sobolev_z_k=curve_sobolev(state.z, k),
        sobolev_omega=omega_h1,
        arc_chord=arc_chord_norm(state.z),
        separation=separation_norm(state.z, state.h),
        sigma_min=sig_min,
        dissipation=dissipation_term(state, k),
        energy=energy_functional(state, k),
        step_accepted=accepted,
    )


def sigma_min_drift(records):
    """Worst per-step decrease rate of the sigma minimum across a series."""
    if len(records) < 2:
        raise InsufficientData("need at least two records")
    worst = 0.0
    for prev, cur in zip(records, records[1:]):
        dt = cur.t - prev.t
        if dt <= 0.0:
            continue
        worst = max(worst, (prev.sigma_min - cur.sigma_min) / dt)
    return worst
