"""Octonion arithmetic via Cayley-Dickson doubling of the quaternions.

An octonion is represented as a float64 ndarray whose last axis has length 8,
holding the components on the basis (1, e1, ..., e7). A quaternion is the same
with last axis length 4 on the basis (1, e1, e2, e3). All operations broadcast
over leading axes, so a sampled field of shape (n1, n2, n3, 8) is handled by
the same functions as a single scalar of shape (8,).

The basis convention is pinned by the doubling rule: an octonion is a pair of
quaternions (gamma, delta) meaning gamma + delta*e4, multiplied by

    (g1, d1) * (g2, d2) = (g1 g2 - conj(d2) d1,  d2 g1 + d1 conj(g2))

with quaternion convention e1 e2 = e3. This fixes e5 = e1 e4, e6 = e2 e4,
e7 = e3 e4 and the whole 8x8 table, which is generated below at import time
rather than transcribed by hand.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "quat_mul",
    "quat_conj",
    "quat_norm",
    "oct_mul",
    "oct_conj",
    "oct_norm",
    "oct_exp_axis",
    "right_mul_unit",
    "left_mul_unit",
    "basis",
    "from_quaternion_pair",
    "quaternion_pair",
    "lemma_residuals",
    "MUL_SIGN",
    "MUL_INDEX",
    "STRUCTURE",
    "AXIS_UNITS",
]

# The three imaginary units that carry the transform kernels.
AXIS_UNITS = (1, 2, 4)


def quat_mul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Hamilton product on (..., 4) arrays with e1 e2 = e3."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    w1, x1, y1, z1 = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    w2, x2, y2, z2 = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    return np.stack(
        [
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        ],
        axis=-1,
    )


def quat_conj(q: np.ndarray) -> np.ndarray:
    q = np.asarray(q, dtype=np.float64)
    out = q.copy()
    out[..., 1:] *= -1.0
    return out


def quat_norm(q: np.ndarray) -> np.ndarray:
    q = np.asarray(q, dtype=np.float64)
    return np.sqrt(np.sum(q * q, axis=-1))


def _pair_mul(g1, d1, g2, d2):
    """Cayley-Dickson doubling product on quaternion pairs."""
    real = quat_mul(g1, g2) - quat_mul(quat_conj(d2), d1)
    imag = quat_mul(d2, g1) + quat_mul(d1, quat_conj(g2))
    return real, imag


def from_quaternion_pair(gamma: np.ndarray, delta: np.ndarray) -> np.ndarray:
    """Assemble gamma + delta*e4 into an (..., 8) octonion array."""
    return np.concatenate(
        [np.asarray(gamma, dtype=np.float64), np.asarray(delta, dtype=np.float64)],
        axis=-1,
    )


def quaternion_pair(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split an octonion into its (gamma, delta) quaternion halves."""
    z = np.asarray(z, dtype=np.float64)
    return z[..., :4], z[..., 4:]


def _build_table() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Generate sign/index tables and the (8,8,8) structure tensor."""
    sign = np.zeros((8, 8), dtype=np.int8)
    index = np.zeros((8, 8), dtype=np.int8)
    structure = np.zeros((8, 8, 8), dtype=np.float64)
    eye4 = np.eye(4)
    units = []
    for i in range(8):
        if i < 4:
            units.append((eye4[i], np.zeros(4)))
        else:
            units.append((np.zeros(4), eye4[i - 4]))
    for i in range(8):
        for j in range(8):
            re, im = _pair_mul(*units[i], *units[j])
            vec = np.concatenate([re, im])
            k = int(np.argmax(np.abs(vec)))
            sign[i, j] = int(round(vec[k]))
            index[i, j] = k
            structure[i, j] = vec
    return sign, index, structure


MUL_SIGN, MUL_INDEX, STRUCTURE = _build_table()

# Right multiplication by a basis unit is a signed permutation; cache the
# 8x8 matrices R_j with (x e_j)_k = sum_i x_i R_j[i, k].
_RIGHT_MUL = tuple(STRUCTURE[:, j, :].copy() for j in range(8))
_LEFT_MUL = tuple(STRUCTURE[i, :, :].copy() for i in range(8))


def basis(i: int) -> np.ndarray:
    """Basis octonion e_i (e_0 = 1)."""
    out = np.zeros(8)
    out[i] = 1.0
    return out


def oct_mul(lhs: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """General octonion product on (..., 8) arrays."""
    lhs = np.asarray(lhs, dtype=np.float64)
    rhs = np.asarray(rhs, dtype=np.float64)
    return np.einsum("...i,...j,ijk->...k", lhs, rhs, STRUCTURE, optimize=True)


def right_mul_unit(x: np.ndarray, j: int) -> np.ndarray:
    """x * e_j, the cheap signed-permutation path used by kernel stages."""
    return np.asarray(x, dtype=np.float64) @ _RIGHT_MUL[j]


def left_mul_unit(x: np.ndarray, i: int) -> np.ndarray:
    """e_i * x."""
    return np.asarray(x, dtype=np.float64) @ _LEFT_MUL[i]


def oct_conj(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=np.float64)
    out = z.copy()
    out[..., 1:] *= -1.0
    return out


def oct_norm(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=np.float64)
    return np.sqrt(np.sum(z * z, axis=-1))


def oct_exp_axis(axis: int, angle) -> np.ndarray:
    """exp(e_axis * angle) = cos(angle) + e_axis sin(angle).

    axis is the component index of one imaginary basis unit; the transform
    kernels only ever use 1, 2 and 4.
    """
    if axis not in range(1, 8):
        raise ValueError(f"axis must be an imaginary unit index 1..7, got {axis}")
    angle = np.asarray(angle, dtype=np.float64)
    out = np.zeros(angle.shape + (8,))
    out[..., 0] = np.cos(angle)
    out[..., axis] = np.sin(angle)
    return out


def lemma_residuals(gamma: np.ndarray, delta: np.ndarray) -> list:
    """Residual norms of the six doubling identities.

    For quaternions gamma, delta embedded as octonions, returns the norms of
      (i)    e4 gamma - conj(gamma) e4
      (ii)   e4 (gamma e4) + conj(gamma)
      (iii)  (gamma e4) e4 + gamma
      (iv)   gamma (delta e4) - (delta gamma) e4
      (v)    (gamma e4) delta - (gamma conj(delta)) e4
      (vi)   (gamma e4) (delta e4) + conj(delta) gamma
    which all vanish identically under the pinned convention.
    """
    zeros = np.zeros_like(np.asarray(gamma, dtype=np.float64))
    g = from_quaternion_pair(gamma, zeros)
    d = from_quaternion_pair(delta, zeros)
    e4 = basis(4)
    ge4 = oct_mul(g, e4)
    de4 = oct_mul(d, e4)
    res = [
        oct_mul(e4, g) - oct_mul(oct_conj(g), e4),
        oct_mul(e4, ge4) + oct_conj(g),
        oct_mul(ge4, e4) + g,
        oct_mul(g, de4) - oct_mul(oct_mul(d, g), e4),
        oct_mul(ge4, d) - oct_mul(oct_mul(g, oct_conj(d)), e4),
        oct_mul(ge4, de4) + oct_mul(oct_conj(d), g),
    ]
    return [float(np.max(oct_norm(r))) for r in res]
