"""Deterministic signal and window generators."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .grids import Grid3D, SampledField3D

__all__ = ["SignalSpec", "BadSpecError", "generate_signal", "gaussian_l2_norm", "normalized"]

KINDS = ("gaussian", "chirped-gaussian", "boxcar", "random-octonion", "file")


class BadSpecError(ValueError):
    pass


@dataclass(frozen=True)
class SignalSpec:
    """Parameters for one generated field.

    kind 'gaussian':          amplitude * exp(-sum (t-c)^2 / (2 w^2)), real component only.
    kind 'chirped-gaussian':  gaussian envelope right-multiplied by the three axis
                              chirps exp(e1 r1 t1^2), exp(e2 r2 t2^2), exp(e4 r3 t3^2)
                              in that order.
    kind 'boxcar':            amplitude inside the box |t_i - c_i| <= w_i, else 0.
    kind 'random-octonion':   seeded standard normals in all 8 components, scaled
                              by the gaussian envelope.
    kind 'file':              loaded from path (see fieldio).
    """

    kind: str = "gaussian"
    amplitude: float = 1.0
    center: tuple[float, float, float] = (0.0, 0.0, 0.0)
    widths: tuple[float, float, float] = (1.0, 1.0, 1.0)
    chirps: tuple[float, float, float] = (0.0, 0.0, 0.0)
    seed: int | None = None
    path: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadSpecError(f"unknown signal kind {self.kind!r}; expected one of {KINDS}")
        if self.kind != "file" and any(w <= 0 for w in self.widths):
            raise BadSpecError(f"widths must be positive, got {self.widths}")
        if self.kind == "random-octonion" and self.seed is None:
            raise BadSpecError("random-octonion requires an explicit seed")
        if self.kind == "file" and not self.path:
            raise BadSpecError("file kind requires a path")

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "amplitude": self.amplitude,
            "center": list(self.center),
            "widths": list(self.widths),
            "chirps": list(self.chirps),
            "seed": self.seed,
            "path": self.path,
        }


def _envelope(spec: SignalSpec, grid: Grid3D) -> np.ndarray:
    t1, t2, t3 = grid.meshgrid()
    c, w = spec.center, spec.widths
    q = ((t1 - c[0]) ** 2 / w[0] ** 2 + (t2 - c[1]) ** 2 / w[1] ** 2
         + (t3 - c[2]) ** 2 / w[2] ** 2)
    return spec.amplitude * np.exp(-0.5 * q)


def _chirp_components(spec: SignalSpec, grid: Grid3D) -> np.ndarray:
    """Expansion of (exp(e1 a1) exp(e2 a2)) exp(e4 a3) with a_m = r_m t_m^2.

    The left-associated product of the three axis exponentials has the eight
    real coefficients (c1c2c3, s1c2c3, c1s2c3, s1s2c3, c1c2s3, s1c2s3, c1s2s3,
    s1s2s3) on the basis (1, e1, e2, e3, e4, e5, e6, e7), all signs positive.
    """
    t1, t2, t3 = grid.meshgrid()
    a1 = spec.chirps[0] * t1 * t1
    a2 = spec.chirps[1] * t2 * t2
    a3 = spec.chirps[2] * t3 * t3
    c1, s1 = np.cos(a1), np.sin(a1)
    c2, s2 = np.cos(a2), np.sin(a2)
    c3, s3 = np.cos(a3), np.sin(a3)
    return np.stack([c1 * c2 * c3, s1 * c2 * c3, c1 * s2 * c3, s1 * s2 * c3,
                     c1 * c2 * s3, s1 * c2 * s3, c1 * s2 * s3, s1 * s2 * s3], axis=-1)


def generate_signal(spec: SignalSpec, grid: Grid3D) -> SampledField3D:
    values = np.zeros(grid.shape + (8,))
    if spec.kind == "gaussian":
        values[..., 0] = _envelope(spec, grid)
    elif spec.kind == "chirped-gaussian":
        values = _envelope(spec, grid)[..., None] * _chirp_components(spec, grid)
    elif spec.kind == "boxcar":
        t1, t2, t3 = grid.meshgrid()
        c, w = spec.center, spec.widths
        inside = ((np.abs(t1 - c[0]) <= w[0]) & (np.abs(t2 - c[1]) <= w[1])
                  & (np.abs(t3 - c[2]) <= w[2]))
        values[..., 0] = spec.amplitude * inside
    elif spec.kind == "random-octonion":
        rng = np.random.default_rng(spec.seed)
        values = rng.standard_normal(grid.shape + (8,)) * _envelope(spec, grid)[..., None]
    elif spec.kind == "file":
        from .fieldio import read_field
        f = read_field(spec.path)
        if f.grid.shape != grid.shape:
            raise BadSpecError(f"field file shape {f.grid.shape} != requested {grid.shape}")
        return f
    return SampledField3D(grid, values)


def gaussian_l2_norm(spec: SignalSpec) -> float:
    """Closed-form continuum L2 norm of the gaussian kinds (envelope only)."""
    if spec.kind not in ("gaussian", "chirped-gaussian"):
        raise BadSpecError("analytic norm available for gaussian kinds only")
    # chirps are unit-modulus pointwise so they do not change the L2 norm
    w1, w2, w3 = spec.widths
    return spec.amplitude * math.pi ** 0.75 * math.sqrt(w1 * w2 * w3)


def normalized(f: SampledField3D) -> SampledField3D:
    """Scale a field to unit discrete L2 norm."""
    n = f.norm_l2()
    if n == 0.0:
        raise BadSpecError("cannot normalize the zero field")
    return SampledField3D(f.grid, f.values / n)
