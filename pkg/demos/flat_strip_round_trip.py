"""Demo: the flat-strip multiplier operators and their round-trip identity.

The four operators H1, H2z, H2h, H3 map boundary traces of a harmonic field
in the strip between the two interfaces onto each other.  Composing
(H2z, H3) with (H1, H2h) reproduces the input up to the orientation sign
s1 = -1 on the first component; per mode the 2x2 composition matrix is
exactly diag(-1, +1).  This demo shows the multipliers and the machine-zero
round-trip defect.

Run:  python3 demos/flat_strip_round_trip.py
"""

import numpy as np

from muskat import apply_strip_operator, round_trip_defect
from muskat.spectral import SpectralScalar, grid


def main():
    n = 64
    a = grid(n)

    print("per-mode multipliers (input cos(k a) in one slot):")
    print(f"{'k':>3}  {'H2z f-slot':>11}  {'H2z m-slot':>11}  {'tanh(k)':>9}  {'sech(k)':>9}")
    zero = SpectralScalar.zeros(n)
    for k in (1, 2, 4, 8):
        f = SpectralScalar(np.cos(k * a))
        from_f = apply_strip_operator("H2z", f, zero).samples[0] / np.cos(k * a[0])
        from_m = apply_strip_operator("H2z", zero, f).samples[0] / np.cos(k * a[0])
        print(f"{k:3d}  {from_f:11.6f}  {from_m:11.6f}  {np.tanh(k):9.6f}  "
              f"{1.0 / np.cosh(k):9.6f}")

    print()
    print("round trip on random band-limited traces:")
    rng = np.random.default_rng(3)
    for trial in range(5):
        f = np.zeros(n)
        m = np.zeros(n)
        for k in range(1, n // 4):
            f += rng.normal() / k * np.cos(k * a) + rng.normal() / k * np.sin(k * a)
            m += rng.normal() / k * np.cos(k * a) + rng.normal() / k * np.sin(k * a)
        d1, d2 = round_trip_defect(SpectralScalar(f), SpectralScalar(m))
        print(f"  trial {trial}: defect in f = {d1:.3e}, defect in m- = {d2:.3e}")

    print()
    print("both defects at machine precision confirm the closed multiplier algebra")
    print("(with the first-component sign s1 = -1).")


if __name__ == "__main__":
    main()
