"""Spectral contour-dynamics solver for a two-phase porous-media interface
evolving over a fixed permeability-jump curve."""

from .birkhoff_rott import (
    AmplitudeField,
    apply_T,
    apply_T_adjoint,
    br_cross,
    br_self,
    spectral_radius,
)
from .curves import (
    FluidParams,
    PeriodicCurve,
    arc_chord_norm,
    curve_from_snapshot,
    curve_to_snapshot,
    parametrization_defect,
    resample_uniform,
    separation_norm,
)
from .diagnostics import (
    DiagnosticsRecord,
    dissipation_term,
    make_record,
    energy_functional,
    rayleigh_taylor_sigma,
    sigma_min_drift,
)
from .errors import (
    ConfigError,
    CurveContact,
    DegenerateParametrization,
    InsufficientData,
    MuskatError,
    NoConvergence,
    SelfIntersection,
    StepRejected,
)
from .evolution import Guards, SimState, interface_velocity, rk4_step, run, tangential_speed
from .flat_strip import apply_strip_operator, round_trip_defect
from .spectral import (
    SpectralScalar,
    derivative,
    fractional_laplacian,
    grid,
    hilbert,
    mollify,
    sobolev_norm,
)
from .vorticity import VorticityPair, forcing, solve_vorticity

__version__ = "0.1.0"
