"""Real 2*pi-periodic scalar fields and their Fourier-multiplier calculus.

A field is sampled at alpha_j = -pi + 2*pi*j/N with N even.  All operators
act diagonally on the discrete Fourier coefficients, so they are exact on
band-limited data.
"""

import numpy as np

_MIN_N = 8


class SpectralScalar:
    """Real periodic scalar field on the uniform grid.

    ``samples`` is the source of truth; ``modes`` are the coefficients of
    exp(i*k*alpha) on the shifted grid, with conjugate symmetry implied.
    """

    __slots__ = ("samples",)

    def __init__(self, samples):
        samples = np.asarray(samples, dtype=float)
        if samples.ndim != 1:
            raise ValueError("samples must be one-dimensional")
        n = samples.size
        if n < _MIN_N or n % 2 != 0:
            raise ValueError(f"grid size must be even and >= {_MIN_N}, got {n}")
        self.samples = samples

    @property
    def n(self):
        return self.samples.size

    @property
    def grid(self):
        return grid(self.n)

    @property
    def modes(self):
        """Half-spectrum coefficients f_hat(k), k = 0..N/2."""
        n = self.n
        k = np.arange(n // 2 + 1)
        phase = np.where(k % 2 == 0, 1.0, -1.0)  # exp(i*k*pi)
        return np.fft.rfft(self.samples) / n * phase

    @classmethod
    def from_modes(cls, modes, n):
        k = np.arange(n // 2 + 1)
        phase = np.where(k % 2 == 0, 1.0, -1.0)
        return cls(np.fft.irfft(np.asarray(modes) * phase * n, n=n))

    @classmethod
    def zeros(cls, n):
        return cls(np.zeros(n))

    def __add__(self, other):
        return SpectralScalar(self.samples + _coerce(other))

    def __sub__(self, other):
        return SpectralScalar(self.samples - _coerce(other))

    def __mul__(self, other):
        return SpectralScalar(self.samples * _coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return SpectralScalar(-self.samples)

    def __repr__(self):
        return f"SpectralScalar(n={self.n})"


def _coerce(x):
    return x.samples if isinstance(x, SpectralScalar) else x


def grid(n):
    """Sample points alpha_j = -pi + 2*pi*j/n."""
    return -np.pi + 2.0 * np.pi * np.arange(n) / n


def mean(f):
    return float(np.mean(f.samples))


def l2_norm(f):
    """Continuum L2 norm via the (exact) grid quadrature."""
    return float(np.sqrt(2.0 * np.pi / f.n * np.sum(f.samples**2)))


def _apply_multiplier(f, mult):
    """Apply a half-spectrum multiplier (array over k = 0..N/2)."""
    return SpectralScalar(np.fft.irfft(np.fft.rfft(f.samples) * mult, n=f.n))


def derivative(f, order=1):
    """Spectral d^order/d_alpha^order; Nyquist zeroed for odd orders."""
    if not 1 <= order <= 6:
        raise ValueError(f"derivative order must be in 1..6, got {order}")
    k = np.arange(f.n // 2 + 1)
    mult = (1j * k) ** order
    if order % 2 == 1:
        mult[-1] = 0.0
    return _apply_multiplier(f, mult)


def hilbert(f):
    """Periodic Hilbert transform, multiplier -i*sign(k); mean removed."""
    k = np.arange(f.n // 2 + 1)
    mult = -1j * np.sign(k).astype(complex)
    mult[-1] = 0.0  # odd multiplier kills the Nyquist mode
    return _apply_multiplier(f, mult)


def fractional_laplacian(f, s):
    """|k|^s multiplier; s in [0, 1]."""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"fractional order must lie in [0, 1], got {s}")
    k = np.arange(f.n // 2 + 1)
    return _apply_multiplier(f, np.abs(k).astype(float) ** s)


def mollify(f, eps):
    """Spectral mollifier with multiplier exp(-(eps*k)^4)."""
    if eps <= 0.0:
        raise ValueError(f"mollifier strength must be positive, got {eps}")
    k = np.arange(f.n // 2 + 1)
    return _apply_multiplier(f, np.exp(-((eps * k) ** 4)))


def sobolev_norm(f, k):
    """H^k norm: (sum_j (1+j^2)^k |f_hat(j)|^2 * 2*pi)^(1/2)."""
    if k < 0:
        raise ValueError("Sobolev order must be nonnegative")
    n = f.n
    coeff = np.fft.rfft(f.samples) / n
    j = np.arange(n // 2 + 1)
    # both +j and -j contribute except at the DC and Nyquist bins
    dup = np.full(n // 2 + 1, 2.0)
    dup[0] = 1.0
    dup[-1] = 1.0
    return float(np.sqrt(2.0 * np.pi * np.sum(dup * (1.0 + j**2) ** k * np.abs(coeff) ** 2)))


def antiderivative(f):
    """Periodic antiderivative of the mean-free part, anchored to 0 at alpha=-pi."""
    k = np.arange(f.n // 2 + 1)
    mult = np.zeros(f.n // 2 + 1, dtype=complex)
    mult[1:] = 1.0 / (1j * k[1:])
    mult[-1] = 0.0
    p = _apply_multiplier(f, mult)
    return SpectralScalar(p.samples - p.samples[0])


def eval_at(f, alphas):
    """Trigonometric interpolation of f at arbitrary points."""
    n = f.n
    theta = np.atleast_1d(np.asarray(alphas, dtype=float)) + np.pi
    coeff = np.fft.rfft(f.samples) / n
    k = np.arange(n // 2 + 1)
    basis = np.exp(1j * np.outer(theta, k))
    # the Nyquist bin carries cos only for real fields
    basis[:, -1] = np.cos(theta * (n // 2))
    dup = np.full(n // 2 + 1, 2.0)
    dup[0] = 1.0
    dup[-1] = 1.0
    out = np.real(basis @ (dup * coeff))
    return out if np.ndim(alphas) else float(out[0])
