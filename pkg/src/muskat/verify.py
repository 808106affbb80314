"""Self-contained verification suites behind the `verify` subcommand."""

import numpy as np

from .birkhoff_rott import AmplitudeField, apply_T, apply_T_adjoint, spectral_radius
from .curves import PeriodicCurve
from .flat_strip import round_trip_defect
from .spectral import (
    SpectralScalar,
    derivative,
    fractional_laplacian,
    grid,
    hilbert,
    sobolev_norm,
)


def _random_trig(rng, n, kmax):
    a = grid(n)
    f = np.zeros(n)
    for k in range(1, kmax + 1):
        f += rng.normal() * np.cos(k * a) + rng.normal() * np.sin(k * a)
    return SpectralScalar(f)


def check_hilbert_identities(rng, n=128, trials=20, tol=1e-12):
    worst = 0.0
    for _ in range(trials):
        f = _random_trig(rng, n, n // 4)
        hh = hilbert(hilbert(f))
        target = -(f.samples - np.mean(f.samples))
        worst = max(worst, np.max(np.abs(hh.samples - target)))
        dh = derivative(hilbert(f)).samples
        lam = fractional_laplacian(f, 1.0).samples
        worst = max(worst, np.max(np.abs(dh - lam)))
        lh = fractional_laplacian(hilbert(f), 1.0).samples
        worst = max(worst, np.max(np.abs(lh + derivative(f).samples)))
    return worst <= tol, f"max defect {worst:.3e}"


def check_pointwise_inequality(rng, n=128, trials=100, tol=1e-10):
    worst = -np.inf
    ok = True
    for _ in range(trials):
        f = _random_trig(rng, n, n // 4)
        lam_f = fractional_laplacian(f, 1.0).samples
        lam_f2 = fractional_laplacian(SpectralScalar(f.samples**2), 1.0).samples
        expr = f.samples * lam_f - 0.5 * lam_f2
        floor = -tol * sobolev_norm(f, 1) ** 2
        worst = max(worst, float(-np.min(expr)))
        ok = ok and np.min(expr) >= floor
    return ok, f"worst negative excursion {worst:.3e}"


def check_poisson_multipliers(n=128, depth=1.0, tol=1e-9):
    z = PeriodicCurve.flat(n)
    h = PeriodicCurve.flat(n, -depth)
    a = grid(n)
    worst = 0.0
    zero = AmplitudeField(SpectralScalar.zeros(n))
    for k in range(1, n // 4 + 1):
        om = AmplitudeField(SpectralScalar(np.cos(k * a)))
        t1, _ = apply_T(z, h, zero, om)
        worst = max(worst, np.max(np.abs(t1.values.samples + np.exp(-k * depth) * np.cos(k * a))))
        _, t2 = apply_T(z, h, om, zero)
        worst = max(worst, np.max(np.abs(t2.values.samples - np.exp(-k * depth) * np.cos(k * a))))
    return worst <= tol, f"max multiplier defect {worst:.3e}"


def check_adjointness(rng, n=64, trials=10, tol=1e-8):
    a_grid_w = 2.0 * np.pi / n
    z = PeriodicCurve(
        SpectralScalar(0.1 * np.sin(grid(n))), SpectralScalar(0.15 * np.cos(grid(n)))
    )
    h = PeriodicCurve.flat(n, -1.5)
    worst = 0.0
    for _ in range(trials):
        u, v, p, q = (AmplitudeField(_random_trig(rng, n, 8)) for _ in range(4))
        tu = apply_T(z, h, u, v)
        ts = apply_T_adjoint(z, h, p, q)

        def ip(f, g):
            return a_grid_w * np.sum(f.values.samples * g.values.samples)

        lhs = ip(tu[0], p) + ip(tu[1], q)
        rhs = ip(u, ts[0]) + ip(v, ts[1])
        worst = max(worst, abs(lhs - rhs) / max(abs(lhs), 1e-30))
    return worst <= tol, f"max relative defect {worst:.3e}"


def check_flat_strip(rng, n=128, trials=50, tol=1e-12):
    worst = 0.0
    for _ in range(trials):
        f = _random_trig(rng, n, n // 4)
        m = _random_trig(rng, n, n // 4)
        d1, d2 = round_trip_defect(f, m)
        worst = max(worst, d1, d2)
    return worst <= tol, f"max round-trip defect {worst:.3e}"


def check_spectral_radius_flat(params, n=64, depth=1.0, tol=1e-3):
    z = PeriodicCurve.flat(n)
    h = PeriodicCurve.flat(n, -depth)
    rho = spectral_radius(z, h, params, n_probe=100)
    oracle = np.sqrt(abs(params.gamma1 * params.gamma2)) * np.exp(-depth)
    err = abs(rho - oracle)
    return err <= tol, f"rho {rho:.6f} vs block oracle {oracle:.6f}"


def run_all(cfg, seed=0):
    rng = np.random.default_rng(seed)
    results = [
        ("hilbert-identities", *check_hilbert_identities(rng)),
        ("pointwise-inequality", *check_pointwise_inequality(rng)),
        ("poisson-multipliers", *check_poisson_multipliers()),
        ("operator-adjointness", *check_adjointness(rng)),
        ("flat-strip-round-trip", *check_flat_strip(rng)),
    ]
    if cfg.params.gamma1 != 0.0 and cfg.params.gamma2 != 0.0:
        results.append(("spectral-radius-flat", *check_spectral_radius_flat(cfg.params)))
    return results
