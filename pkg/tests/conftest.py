"""Shared fixtures and independent numerical oracles for the test suite.

The oracles here deliberately avoid the cotangent/FFT machinery of the
package: direct image summation for Birkhoff-Rott velocities, brute-force
grid searches for geometric functionals, and dense Plancherel sums for
norms.  They are slower but independently derived, which is the point.
"""

import numpy as np
import pytest

from muskat.spectral import SpectralScalar, grid


@pytest.fixture()
def rng():
    return np.random.default_rng(12345)


def random_trig(rng, n, kmax, scale=1.0):
    """Random real band-limited field with modes 1..kmax (mean zero)."""
    a = grid(n)
    f = np.zeros(n)
    for k in range(1, kmax + 1):
        f += rng.normal(scale=scale) * np.cos(k * a)
        f += rng.normal(scale=scale) * np.sin(k * a)
    return SpectralScalar(f)


def random_curve_pair(rng, n, kmax=8, amp=0.08, depth=2.0):
    """A smooth perturbed interface over a perturbed bottom curve."""
    from muskat.curves import PeriodicCurve

    z = PeriodicCurve(random_trig(rng, n, kmax, amp / kmax),
                      random_trig(rng, n, kmax, amp / kmax))
    h = PeriodicCurve(random_trig(rng, n, kmax, amp / kmax),
                      random_trig(rng, n, kmax, amp / kmax) - depth)
    return z, h


def br_image_sum_oracle(curve_xy, omega_fn, n_fine, targets, n_images=(100, 200, 400),
                        theta=1e-5):
    """Direct image-summation oracle for the self-induced Birkhoff-Rott velocity.

    Sums the raw planar kernel x^perp/|x|^2 over +-n horizontal images on a
    fine grid.  The singular node is replaced by its symmetric two-sided
    limit (which supplies the principal-value derivative term the punctured
    trapezoid misses), and the slowly convergent image tail is removed by
    Richardson extrapolation in the image count.

    curve_xy: callable alpha-array -> (x, y) arrays.
    omega_fn: callable alpha-array -> amplitude samples.
    targets:  indices into the *fine* grid where the velocity is wanted.
    Returns array of shape (len(targets), 2).
    """
    af = grid(n_fine)
    hf = 2.0 * np.pi / n_fine
    xs, ys = curve_xy(af)
    om = omega_fn(af)

    def partial_sum(n_half):
        ns = np.arange(-n_half, n_half + 1)
        out = np.empty((len(targets), 2))
        for row, fi in enumerate(targets):
            tx, ty = xs[fi], ys[fi]
            dx = (tx - xs)[None, :] - 2.0 * np.pi * ns[:, None]
            dy = (ty - ys)[None, :]
            r2 = dx ** 2 + dy ** 2
            r2[n_half, fi] = np.inf
            sx = (-dy / r2 * om[None, :]).sum()
            sy = (dx / r2 * om[None, :]).sum()
            # symmetric average across the singularity: the odd 1/theta
            # parts cancel, leaving the smooth diagonal value.
            diag = np.zeros(2)
            for s in (theta, -theta):
                bx, by = curve_xy(np.array([af[fi] - s]))
                bo = omega_fn(np.array([af[fi] - s]))
                ex = tx - bx[0] - 2.0 * np.pi * ns
                ey = ty - by[0]
                r2s = ex ** 2 + ey ** 2
                diag += 0.5 * np.array([(-ey / r2s * bo[0]).sum(),
                                        (ex / r2s * bo[0]).sum()])
            out[row] = [(sx + diag[0]) * hf / (2.0 * np.pi),
                        (sy + diag[1]) * hf / (2.0 * np.pi)]
        return out

    s0, s1, s2 = (partial_sum(m) for m in n_images)
    r0 = 2.0 * s1 - s0          # kill the 1/M image-tail term
    r1 = 2.0 * s2 - s1
    return (4.0 * r1 - r0) / 3.0
