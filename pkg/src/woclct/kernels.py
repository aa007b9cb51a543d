"""Per-axis canonical transform kernels.

Each axis j of the 3D transform carries a 2x2 real unimodular matrix
(a, b, c, d) and one imaginary unit (e1, e2 or e4). For b != 0 the kernel is

    kappa(t, w) = (2 pi |b|)^(-1/2) * exp(e_axis * theta(t, w))
    theta(t, w) = a t^2 / (2b) - t w / b + d w^2 / (2b) - pi/2

and the inverse kernel negates theta. The b = 0 case degenerates to a pure
rescaling with a chirp and is implemented as an analytic resampling rule
(sampling a delta on a grid is meaningless).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import oct_exp_axis
from .grids import Axis, Grid3D, SampledField3D

__all__ = [
    "LctParams",
    "UnimodularError",
    "DegenerateParamsError",
    "GridIncompatibleError",
    "kernel_phase",
    "phase_matrix",
    "kernel_amplitude",
    "kernel_eval",
    "kernel_inverse_eval",
    "degenerate_resample",
    "FOURIER_TYPE",
]


class UnimodularError(ValueError):
    """Parameter matrix determinant differs from 1."""


class DegenerateParamsError(ValueError):
    """b = 0 where a non-degenerate kernel is required, or d = 0 in the resample rule."""


class GridIncompatibleError(ValueError):
    """Degenerate resampling would need samples between grid points."""


@dataclass(frozen=True)
class LctParams:
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > 1e-12:
            raise UnimodularError(f"ad - bc = {det!r}, expected 1 within 1e-12")

    @property
    def degenerate(self) -> bool:
        return self.b == 0.0

    def inverse(self) -> "LctParams":
        return LctParams(self.d, -self.b, -self.c, self.a)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)


# The Fourier-type parameter matrix used by the transform-relation checks.
FOURIER_TYPE = LctParams(0.0, 1.0, -1.0, 0.0)


def _require_nondegenerate(p: LctParams):
    if p.degenerate:
        raise DegenerateParamsError("kernel requires b != 0; route b = 0 through degenerate_resample")


def kernel_phase(p: LctParams, t, w):
    """theta(t, w); broadcasts over array t, w."""
    _require_nondegenerate(p)
    t = np.asarray(t, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    return (p.a * t * t / (2.0 * p.b) - t * w / p.b
            + p.d * w * w / (2.0 * p.b) - math.pi / 2.0)


def phase_matrix(p: LctParams, t_pts: np.ndarray, w_pts: np.ndarray) -> np.ndarray:
    """theta on the outer product grid, shape (len(t_pts), len(w_pts))."""
    return kernel_phase(p, np.asarray(t_pts)[:, None], np.asarray(w_pts)[None, :])


def kernel_amplitude(p: LctParams) -> float:
    _require_nondegenerate(p)
    return 1.0 / math.sqrt(2.0 * math.pi * abs(p.b))


def kernel_eval(p: LctParams, axis: int, t, w) -> np.ndarray:
    """Octonion kernel value(s), shape broadcast(t, w) + (8,)."""
    return kernel_amplitude(p) * oct_exp_axis(axis, kernel_phase(p, t, w))


def kernel_inverse_eval(p: LctParams, axis: int, t, w) -> np.ndarray:
    """Inverse kernel: same amplitude, negated phase (the axis-conjugate)."""
    return kernel_amplitude(p) * oct_exp_axis(axis, -kernel_phase(p, t, w))


def degenerate_resample(p: LctParams, field: SampledField3D, axis: int,
                        out_axis: Axis, tol: float = 1e-9) -> SampledField3D:
    """Apply the b = 0 branch along one axis of a sampled field.

    out(w) = sqrt(|d|) * f(d w) * exp(e_axis * (c d / 2) w^2), where f(d w) is
    gathered from the input grid. Every d*w must land on an input grid point
    within tol*spacing.
    """
    if not p.degenerate:
        raise DegenerateParamsError("degenerate_resample requires b = 0")
    if p.d == 0.0:
        raise DegenerateParamsError("degenerate_resample requires d != 0")
    in_axis = field.grid.axes[axis]
    w = out_axis.points()
    src = p.d * w
    idx_f = (src - in_axis.origin) / in_axis.spacing
    idx = np.round(idx_f)
    miss = np.abs(idx_f - idx) > tol
    if np.any(miss) or idx.min() < 0 or idx.max() >= in_axis.count:
        raise GridIncompatibleError(
            f"d*w points {src[miss][:4] if np.any(miss) else src} on axis {axis} "
            f"miss the input grid (spacing {in_axis.spacing})")
    gathered = np.take(field.values, idx.astype(int), axis=axis)

    # unit axis index: axes 0,1,2 carry units e1,e2,e4
    unit = (1, 2, 4)[axis]
    chirp = oct_exp_axis(unit, (p.c * p.d / 2.0) * w * w)  # (count, 8)
    shape = [1, 1, 1, 8]
    shape[axis] = out_axis.count
    # right-multiply by the chirp: (x0 + sum x_i e_i)(cos + e_u sin); the chirp
    # lies in the plane span{1, e_u}, so this is two rotations of component pairs,
    # done here with the generic einsum for clarity (fields are small).
    from .algebra import oct_mul
    out_vals = math.sqrt(abs(p.d)) * oct_mul(gathered, chirp.reshape(shape))

    axes = list(field.grid.axes)
    axes[axis] = out_axis
    return SampledField3D(Grid3D(tuple(axes)), out_vals)
