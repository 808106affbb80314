"""Run configuration: JSON schema, validation, curve presets."""

import json
from dataclasses import dataclass, field

import numpy as np

from .curves import FluidParams, PeriodicCurve
from .errors import ConfigError
from .evolution import Guards
from .spectral import SpectralScalar, grid


@dataclass(frozen=True)
class RunConfig:
    n: int
    t_end: float
    dt: float | None
    params: FluidParams
    z_init: dict
    h_init: dict
    sobolev_k: int = 3
    eps: float = 0.0
    out_dir: str = "out"
    snapshot_stride: int = 10
    svg_frames: bool = False
    guards: Guards = field(default_factory=Guards)

    def build_z(self):
        return curve_from_spec(self.z_init, self.n)

    def build_h(self):
        return curve_from_spec(self.h_init, self.n)


def curve_from_spec(spec, n):
    """Build a curve from a preset name or explicit mode lists.

    Accepted forms:
      {"preset": "flat", "depth": d}
      {"p1": [[k, cos_amp, sin_amp], ...], "p2": [...], "depth": d}
    """
    depth = float(spec.get("depth", 0.0))
    if spec.get("preset") == "flat":
        return PeriodicCurve.flat(n, depth)
    if "preset" in spec:
        raise ConfigError(f"unknown curve preset {spec['preset']!r}")
    a = grid(n)

    def build(entries, offset=0.0):
        samples = np.full(n, offset)
        for entry in entries:
            k, ca, sa = int(entry[0]), float(entry[1]), float(entry[2])
            if not 0 < k <= n // 2:
                raise ConfigError(f"mode number {k} outside 1..{n // 2}")
            samples = samples + ca * np.cos(k * a) + sa * np.sin(k * a)
        return SpectralScalar(samples)

    return PeriodicCurve(build(spec.get("p1", [])), build(spec.get("p2", []), offset=depth))


def _require(doc, key):
    if key not in doc:
        raise ConfigError(f"missing config key {key!r}")
    return doc[key]


def config_from_dict(doc):
    n = int(_require(doc, "n"))
    if n < 8 or n % 2:
        raise ConfigError(f"grid size must be even and >= 8, got {n}")
    t_end = float(_require(doc, "t_end"))
    dt = doc.get("dt")
    dt = None if dt is None else float(dt)
    if dt is not None and dt <= 0.0:
        raise ConfigError("dt must be positive")
    try:
        params = FluidParams(
            mu1=float(_require(doc, "mu1")),
            mu2=float(_require(doc, "mu2")),
            kappa1=float(_require(doc, "kappa1")),
            kappa2=float(_require(doc, "kappa2")),
            rho1=float(_require(doc, "rho1")),
            rho2=float(_require(doc, "rho2")),
            g=float(doc.get("g", 1.0)),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    gdoc = doc.get("guards", {})
    guards = Guards(
        sigma_min=float(gdoc.get("sigma_min", 0.0)),
        max_arc_chord=float(gdoc.get("max_arc_chord", np.inf)),
        min_separation=float(gdoc.get("min_separation", 0.0)),
    )
    return RunConfig(
        n=n,
        t_end=t_end,
        dt=dt,
        params=params,
        z_init=_require(doc, "z_init"),
        h_init=_require(doc, "h_init"),
        sobolev_k=int(doc.get("sobolev_k", 3)),
        eps=float(doc.get("eps", 0.0)),
        out_dir=str(doc.get("out_dir", "out")),
        snapshot_stride=int(doc.get("snapshot_stride", 10)),
        svg_frames=bool(doc.get("svg_frames", False)),
        guards=guards,
    )


def parse_config(path):
    """Read and validate a JSON run configuration."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON: {exc}") from exc
    return config_from_dict(doc)
