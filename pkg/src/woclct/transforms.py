"""Discrete 3D transforms on sampled octonion fields.

All transforms are Riemann midpoint sums. The forward kernels act by right
multiplication in strictly left-to-right order: axis 1 (unit e1), then axis 2
(unit e2), then axis 3 (unit e4). Because a kernel value cos(theta) +
e_u sin(theta) lies in one complex plane, a whole stage reduces to two real
tensor contractions:

    f . kappa = f * cos(theta) + (f e_u) * sin(theta)

where (f e_u) is a signed permutation of components. That keeps the hot path
in BLAS and leaves the general octonion product for the windowing step only.

Inversion applies the inverse kernels in reversed axis order (axis 3 first).
Each axis stage composed with its own inverse stage is the identity on the
component pairs it rotates, but stages of different axes do not commute, so
only the reversed order telescopes back to the input; applying the inverse
kernels in forward order leaves a resolution-independent error. A regression
test pins this ordering.
"""

from __future__ import annotations

import numpy as np

from .algebra import oct_conj, oct_mul, right_mul_unit
from .grids import Grid3D, MuOffGridError, SampledField3D, WoclctResult
from .kernels import (DegenerateParamsError, LctParams, degenerate_resample,
                      kernel_amplitude, phase_matrix)

__all__ = [
    "oft_forward",
    "oclct_forward",
    "oclct_inverse",
    "woclct_forward",
    "woclct_inverse",
    "ZeroWindowError",
    "AXIS_UNIT",
]

# imaginary unit component index per spatial axis
AXIS_UNIT = (1, 2, 4)


class ZeroWindowError(ValueError):
    pass


def _axis_coords(grid_or_coords):
    """Accept a Grid3D or a 3-tuple of 1-D coordinate arrays."""
    if isinstance(grid_or_coords, Grid3D):
        return tuple(grid_or_coords.points(i) for i in range(3))
    coords = tuple(np.asarray(c, dtype=np.float64) for c in grid_or_coords)
    if len(coords) != 3 or any(c.ndim != 1 for c in coords):
        raise ValueError("expected a Grid3D or three 1-D coordinate arrays")
    return coords


def _stage(values: np.ndarray, spatial_axis: int, cos_mat: np.ndarray,
           sin_mat: np.ndarray, unit: int, weight: float, lead: int = 0) -> np.ndarray:
    """Contract one spatial axis against a kernel in the plane span{1, e_unit}.

    cos_mat/sin_mat have shape (n_in, n_out) indexed (input point, output
    point). `lead` counts batch axes before the three spatial axes.
    """
    ax = lead + spatial_axis
    rotated = right_mul_unit(values, unit)
    out = np.tensordot(values, cos_mat, axes=([ax], [0]))
    out += np.tensordot(rotated, sin_mat, axes=([ax], [0]))
    # tensordot appends the output-point axis; put it back in place
    out = np.moveaxis(out, -1, ax)
    if weight != 1.0:
        out *= weight
    return out


def _forward_values(values: np.ndarray, t_grid: Grid3D, params, out_coords,
                    kind: str, lead: int = 0, trig_swap: int | None = None) -> np.ndarray:
    """Shared forward driver for the Fourier and canonical kernels.

    kind 'oft' uses phase -2*pi*t*nu per axis with unit amplitude; kind 'lct'
    uses the canonical phase and (2 pi |b|)^(-1/2) amplitude. trig_swap names
    one spatial axis whose kernel factor is replaced by
    sin(theta) - e_unit cos(theta); the shift identity check needs that
    variant of the transform.
    """
    out = values
    for m in range(3):
        t = t_grid.points(m)
        w = out_coords[m]
        dt = t_grid.axes[m].spacing
        if kind == "oft":
            theta = -2.0 * np.pi * np.outer(t, w)
            weight = dt
        else:
            p: LctParams = params[m]
            if p.degenerate:
                raise DegenerateParamsError(
                    "degenerate axis must be routed through degenerate_resample")
            theta = phase_matrix(p, t, w)
            weight = dt * kernel_amplitude(p)
        c, s = np.cos(theta), np.sin(theta)
        if trig_swap == m:
            c, s = s, -c
        out = _stage(out, m, c, s, AXIS_UNIT[m], weight, lead)
    return out


def oft_forward(f: SampledField3D, omega) -> SampledField3D | np.ndarray:
    """3D octonion Fourier transform with per-axis kernels exp(-e_u 2 pi t w).

    `omega` may be a Grid3D (returns a SampledField3D) or three coordinate
    arrays (returns a raw values array).
    """
    coords = _axis_coords(omega)
    vals = _forward_values(f.values, f.grid, None, coords, "oft")
    if isinstance(omega, Grid3D):
        return SampledField3D(omega, vals)
    return vals


def oclct_forward(f: SampledField3D, params, omega) -> SampledField3D | np.ndarray:
    """Canonical transform: quadrature of ((f k1) k2) k3 over the signal grid.

    Degenerate axes (b = 0) are routed through the analytic resampling rule,
    which requires `omega` to be a Grid3D.
    """
    params = tuple(params)
    degenerate = [m for m in range(3) if params[m].degenerate]
    if degenerate:
        if not isinstance(omega, Grid3D):
            raise DegenerateParamsError("degenerate axes require an explicit output grid")
        field = f
        for m in degenerate:
            field = degenerate_resample(params[m], field, m, omega.axes[m])
        # remaining axes carry ordinary kernels on the partially resampled field
        coords = _axis_coords(omega)
        vals = field.values
        for m in range(3):
            if m in degenerate:
                continue
            p = params[m]
            theta = phase_matrix(p, field.grid.points(m), coords[m])
            weight = field.grid.axes[m].spacing * kernel_amplitude(p)
            vals = _stage(vals, m, np.cos(theta), np.sin(theta), AXIS_UNIT[m], weight)
        return SampledField3D(omega, vals)
    coords = _axis_coords(omega)
    vals = _forward_values(f.values, f.grid, params, coords, "lct")
    if isinstance(omega, Grid3D):
        return SampledField3D(omega, vals)
    return vals


def _inverse_values(values: np.ndarray, omega_grid: Grid3D, params, t_coords,
                    lead: int = 0) -> np.ndarray:
    """Inverse kernels in reversed axis order; contracts over the omega axes."""
    out = values
    for m in (2, 1, 0):
        p: LctParams = params[m]
        if p.degenerate:
            raise DegenerateParamsError("inversion requires non-degenerate parameters")
        w = omega_grid.points(m)
        t = t_coords[m]
        # theta indexed (omega_in, t_out); inverse kernel negates the phase
        theta = phase_matrix(p, w, t) if False else None
        theta = np.negative(phase_matrix(p, t, w)).T
        weight = omega_grid.axes[m].spacing * kernel_amplitude(p)
        out = _stage(out, m, np.cos(theta), np.sin(theta), AXIS_UNIT[m], weight, lead)
    return out


def oclct_inverse(F: SampledField3D, params, t) -> SampledField3D | np.ndarray:
    """Inverse canonical transform: quadrature of ((F k3^-) k2^-) k1^- over omega."""
    params = tuple(params)
    coords = _axis_coords(t)
    vals = _inverse_values(F.values, F.grid, params, coords)
    if isinstance(t, Grid3D):
        return SampledField3D(t, vals)
    return vals


def _integer_shift(vals: np.ndarray, ks) -> np.ndarray:
    """Sample shift with zero fill: out[i] = vals[i - k] per axis."""
    out = vals
    for ax, k in enumerate(ks):
        k = int(k)
        if k == 0:
            continue
        n = out.shape[ax]
        shifted = np.zeros_like(out)
        if abs(k) < n:
            src = [slice(None)] * out.ndim
            dst = [slice(None)] * out.ndim
            if k > 0:
                dst[ax], src[ax] = slice(k, None), slice(0, n - k)
            else:
                dst[ax], src[ax] = slice(0, n + k), slice(k, None)
            shifted[tuple(dst)] = out[tuple(src)]
        out = shifted
    return out


def _mu_offsets_from_coords(mu_coords, t_grid: Grid3D, tol: float = 1e-9):
    offsets = []
    for ax in range(3):
        dt = t_grid.axes[ax].spacing
        ratio = np.asarray(mu_coords[ax]) / dt
        k = np.round(ratio)
        if np.any(np.abs(ratio - k) > tol):
            raise MuOffGridError(
                f"translation coordinates on axis {ax} are not integer multiples of {dt}")
        offsets.append(k.astype(int))
    return offsets


def _check_window(f: SampledField3D, window: SampledField3D):
    if window.grid != f.grid:
        raise ValueError("window must be sampled on the signal grid")


def woclct_forward(f: SampledField3D, window: SampledField3D, params, omega, mu,
                   batch: int = 64, trig_swap: int | None = None) -> WoclctResult | np.ndarray:
    """Windowed transform over a translation grid.

    For each translation mu (an integer multiple of the signal spacing on each
    axis) the signal is multiplied on the right by the conjugated, shifted
    window and pushed through the forward kernel stages. Output axes are
    mu-outer, omega-inner, each axis-3 fastest.
    """
    _check_window(f, window)
    params = tuple(params)
    omega_coords = _axis_coords(omega)
    mu_coords = _axis_coords(mu)
    offsets = _mu_offsets_from_coords(mu_coords, f.grid)
    wconj = oct_conj(window.values)
    mu_shape = tuple(len(c) for c in mu_coords)
    n_mu = int(np.prod(mu_shape))
    out_shape = mu_shape + tuple(len(c) for c in omega_coords) + (8,)
    out = np.empty(out_shape)
    flat_out = out.reshape((n_mu,) + out.shape[3:])
    triples = [(i1, i2, i3)
               for i1 in range(mu_shape[0])
               for i2 in range(mu_shape[1])
               for i3 in range(mu_shape[2])]
    for start in range(0, n_mu, batch):
        chunk = triples[start:start + batch]
        stack = np.empty((len(chunk),) + f.values.shape)
        for row, (i1, i2, i3) in enumerate(chunk):
            ks = (offsets[0][i1], offsets[1][i2], offsets[2][i3])
            stack[row] = oct_mul(f.values, _integer_shift(wconj, ks))
        flat_out[start:start + len(chunk)] = _forward_values(
            stack, f.grid, params, omega_coords, "lct", lead=1, trig_swap=trig_swap)
    if isinstance(omega, Grid3D) and isinstance(mu, Grid3D):
        return WoclctResult(omega, mu, out)
    return out


def woclct_inverse(G: WoclctResult, window: SampledField3D, params,
                   t_grid: Grid3D, batch: int = 64) -> SampledField3D:
    """Reconstruct the signal from its windowed transform.

    Per translation, the inverse kernel stages (reversed axis order) undo the
    forward transform of the windowed signal; right-multiplying by the shifted
    window and averaging over translations then removes the window, since
    (x conj(w)) w = x |w|^2 holds in any alternative algebra. The translation
    average is normalized by the discrete squared window norm.
    """
    params = tuple(params)
    _check_window(SampledField3D(t_grid, np.zeros(t_grid.shape + (8,))), window)
    wnorm2 = window.norm_l2() ** 2
    if wnorm2 == 0.0:
        raise ZeroWindowError("window has zero norm")
    offsets = _mu_offsets_from_coords(_axis_coords(G.mu_grid), t_grid)
    t_coords = _axis_coords(t_grid)
    mu_shape = G.mu_grid.shape
    n_mu = int(np.prod(mu_shape))
    flat_g = G.values.reshape((n_mu,) + G.omega_grid.shape + (8,))
    triples = [(i1, i2, i3)
               for i1 in range(mu_shape[0])
               for i2 in range(mu_shape[1])
               for i3 in range(mu_shape[2])]
    acc = np.zeros(t_grid.shape + (8,))
    for start in range(0, n_mu, batch):
        chunk = triples[start:start + batch]
        recovered = _inverse_values(flat_g[start:start + len(chunk)],
                                    G.omega_grid, params, t_coords, lead=1)
        for row, (i1, i2, i3) in enumerate(chunk):
            ks = (offsets[0][i1], offsets[1][i2], offsets[2][i3])
            acc += oct_mul(recovered[row], _integer_shift(window.values, ks))
    acc *= G.mu_grid.cell_volume / wnorm2
    return SampledField3D(t_grid, acc)
