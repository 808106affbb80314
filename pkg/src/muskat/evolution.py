"""Interface velocity, tangential reparametrization speed, and time stepping."""

from dataclasses import dataclass, replace
import numpy as np

from .birkhoff_rott import br_cross, br_self
from .curves import (
    PeriodicCurve,
    arc_chord_norm,
    parametrization_defect,
    resample_uniform,
    separation_norm,
)
from .errors import CurveContact, DegenerateParametrization, SelfIntersection, StepRejected
from .spectral import SpectralScalar, antiderivative, derivative, mollify
from .vorticity import solve_vorticity

RESAMPLE_THRESHOLD = 1e-6
AREA_FLOOR = 1e-14


@dataclass(frozen=True)
class SimState:
    """Interface state: moving curve z over the fixed curve h."""

    t: float
    z: PeriodicCurve
    h: PeriodicCurve
    params: object
    eps: float = 0.0
    _vort_cache: object = None

    def vorticity(self):
        if self._vort_cache is not None:
            return self._vort_cache
        smoother = None
        if self.eps > 0.0:
            # regularized mode: the amplitude right-hand sides are mollified twice
            smoother = lambda f: mollify(mollify(f, self.eps), self.eps)
        vort = solve_vorticity(self.z, self.h, self.params, smoother=smoother)
        object.__setattr__(self, "_vort_cache", vort)
        return vort

    def velocity_no_correction(self):
        """Birkhoff-Rott part of the velocity, before the tangential term."""
        vort = self.vorticity()
        sx, sy = br_self(self.z, vort.omega1)
        cx, cy = br_cross(self.h, vort.omega2, self.z)
        return SpectralScalar(sx.samples + cx.samples), SpectralScalar(sy.samples + cy.samples)


def tangential_speed(z, velocity_noc):
    """Reparametrization speed keeping |d_alpha z|^2 independent of alpha.

    Built from the spectral antiderivative of
    phi = d_alpha z . d_alpha(velocity) / A; the linear-in-alpha term and the
    running integral cancel the periodic jump exactly.
    """
    area = float(np.mean(z.speed_squared()))
    if area < AREA_FLOOR:
        raise DegenerateParametrization("|d_alpha z|^2 below the noise floor")
    tx, ty = z.tangent()
    dvx = derivative(velocity_noc[0]).samples
    dvy = derivative(velocity_noc[1]).samples
    phi = (tx * dvx + ty * dvy) / area
    fluct = SpectralScalar(phi - float(np.mean(phi)))
    return SpectralScalar(-antiderivative(fluct).samples)


def interface_velocity(state):
    """Full velocity: Birkhoff-Rott plus the tangential correction."""
    vx, vy = state.velocity_no_correction()
    c = tangential_speed(state.z, (vx, vy))
    tx, ty = state.z.tangent()
    return (
        SpectralScalar(vx.samples + c.samples * tx),
        SpectralScalar(vy.samples + c.samples * ty),
    )


@dataclass(frozen=True)
class Guards:
    sigma_min: float = 0.0
    max_arc_chord: float = np.inf
    min_separation: float = 0.0


def _advance_curve(z, vx, vy, dt):
    return PeriodicCurve(
        SpectralScalar(z.p1.samples + dt * vx.samples),
        SpectralScalar(z.p2.samples + dt * vy.samples),
    )


def rk4_step(state, dt, guards=None):
    """Classical 4-stage explicit step; each stage re-solves the amplitudes."""
    if dt <= 0.0:
        raise ValueError("dt must be positive")

    def vel(curve):
        stage = replace(state, z=curve, _vort_cache=None)
        return interface_velocity(stage)

    z0 = state.z
    k1 = vel(z0)
    k2 = vel(_advance_curve(z0, *k1, dt / 2.0))
    k3 = vel(_advance_curve(z0, *k2, dt / 2.0))
    k4 = vel(_advance_curve(z0, *k3, dt))
    vx = SpectralScalar((k1[0].samples + 2 * k2[0].samples + 2 * k3[0].samples + k4[0].samples) / 6)
    vy = SpectralScalar((k1[1].samples + 2 * k2[1].samples + 2 * k3[1].samples + k4[1].samples) / 6)
    z_new = _advance_curve(z0, vx, vy, dt)

    if not np.all(np.isfinite(z_new.p1.samples)) or not np.all(np.isfinite(z_new.p2.samples)):
        raise StepRejected("non-finite curve after step")
    if parametrization_defect(z_new) > RESAMPLE_THRESHOLD:
        z_new = resample_uniform(z_new)
    if guards is not None:
        ac = arc_chord_norm(z_new)
        if ac > guards.max_arc_chord:
            raise StepRejected(f"arc-chord {ac:.3g} beyond guard {guards.max_arc_chord:.3g}")
        sep = separation_norm(z_new, state.h)
        if guards.min_separation > 0.0 and sep > 1.0 / guards.min_separation**2:
            raise StepRejected("separation fell below guard")
    return replace(state, t=state.t + dt, z=z_new, _vort_cache=None)


def suggested_dt(state):
    """Default step guard: 0.5 * (2*pi/N) / max |velocity| at the given state."""
    vx, vy = interface_velocity(state)
    vmax = float(np.max(np.hypot(vx.samples, vy.samples)))
    if vmax == 0.0:
        return 0.1
    return 0.5 * (2.0 * np.pi / state.z.n) / vmax


def run(initial_state, t_end, dt, guards=None, sobolev_k=3, on_record=None):
    """Drive the flow until t_end or a guard trips.

    Returns (records, final_state, exit_reason) with exit_reason one of
    Completed | RTViolated | ArcChordBlowup | CurveContact | StepRejected.
    """
    from .diagnostics import make_record

    guards = guards or Guards()
    state = initial_state
    records = []
    n_steps = max(1, int(round((t_end - state.t) / dt)))
    reason = "Completed"
    for _ in range(n_steps):
        try:
            rec = make_record(state, k=sobolev_k)
        except CurveContact:
            reason = "CurveContact"
            break
        except SelfIntersection:
            reason = "ArcChordBlowup"
            break
        records.append(rec)
        if on_record is not None:
            on_record(state, rec)
        if rec.sigma_min < guards.sigma_min:
            reason = "RTViolated"
            break
        try:
            state = rk4_step(state, dt, guards=guards)
        except StepRejected:
            reason = "StepRejected"
            break
        except CurveContact:
            reason = "CurveContact"
            break
        except SelfIntersection:
            reason = "ArcChordBlowup"
            break
    else:
        try:
            rec = make_record(state, k=sobolev_k)
            records.append(rec)
            if on_record is not None:
                on_record(state, rec)
            if rec.sigma_min < guards.sigma_min:
                reason = "RTViolated"
        except CurveContact:
            reason = "CurveContact"
        except SelfIntersection:
            reason = "ArcChordBlowup"
    return records, state, reason
