"""Uniform sampling grids and sampled octonion fields."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import oct_norm

__all__ = [
    "Axis",
    "Grid3D",
    "SampledField3D",
    "WoclctResult",
    "AsymmetricGridError",
    "MuOffGridError",
    "mu_index_offsets",
]


class AsymmetricGridError(ValueError):
    """Raised when an operation demands a negation-symmetric grid."""


class MuOffGridError(ValueError):
    """Raised when a translation grid point is not an integer multiple of the signal spacing."""


@dataclass(frozen=True)
class Axis:
    count: int
    spacing: float
    origin: float

    def __post_init__(self):
        if self.count < 1:
            raise ValueError(f"axis count must be positive, got {self.count}")
        if not self.spacing > 0:
            raise ValueError(f"axis spacing must be positive, got {self.spacing}")

    def points(self) -> np.ndarray:
        return self.origin + self.spacing * np.arange(self.count)

    def is_symmetric(self, tol: float = 1e-9) -> bool:
        # closed under negation: first point = -(last point)
        last = self.origin + self.spacing * (self.count - 1)
        return abs(self.origin + last) <= tol * self.spacing


@dataclass(frozen=True)
class Grid3D:
    axes: tuple[Axis, Axis, Axis]

    @classmethod
    def from_lists(cls, counts, spacings, origins) -> "Grid3D":
        return cls(tuple(Axis(int(n), float(s), float(o))
                         for n, s, o in zip(counts, spacings, origins)))

    @classmethod
    def symmetric(cls, counts, spacings) -> "Grid3D":
        """Grid closed under negation: origin = -spacing*(count-1)/2 per axis."""
        origins = [-s * (n - 1) / 2.0 for n, s in zip(counts, spacings)]
        return cls.from_lists(counts, spacings, origins)

    @classmethod
    def aligned(cls, counts, spacings) -> "Grid3D":
        """Grid whose points are integer multiples of the spacing (origin = -floor(n/2)*s).

        Used for translation grids, which must land on the signal grid. Equal to
        the symmetric grid for odd counts.
        """
        origins = [-(n // 2) * s for n, s in zip(counts, spacings)]
        return cls.from_lists(counts, spacings, origins)

    @property
    def shape(self) -> tuple[int, int, int]:
        return tuple(ax.count for ax in self.axes)

    @property
    def spacings(self) -> tuple[float, float, float]:
        return tuple(ax.spacing for ax in self.axes)

    @property
    def origins(self) -> tuple[float, float, float]:
        return tuple(ax.origin for ax in self.axes)

    @property
    def total_points(self) -> int:
        n1, n2, n3 = self.shape
        return n1 * n2 * n3

    @property
    def cell_volume(self) -> float:
        s1, s2, s3 = self.spacings
        return s1 * s2 * s3

    def points(self, axis: int) -> np.ndarray:
        return self.axes[axis].points()

    def meshgrid(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return np.meshgrid(*(self.points(i) for i in range(3)), indexing="ij")

    def radial(self) -> np.ndarray:
        """Euclidean |t| at every grid point, shape = self.shape."""
        t1, t2, t3 = self.meshgrid()
        return np.sqrt(t1 * t1 + t2 * t2 + t3 * t3)

    def is_negation_symmetric(self, tol: float = 1e-9) -> bool:
        return all(ax.is_symmetric(tol) for ax in self.axes)

    def require_negation_symmetric(self):
        if not self.is_negation_symmetric():
            raise AsymmetricGridError(
                "operation requires a negation-symmetric grid; "
                f"got origins {self.origins} with spacings {self.spacings}")


def mu_index_offsets(mu_grid: Grid3D, t_grid: Grid3D, tol: float = 1e-9) -> list[np.ndarray]:
    """Integer index shifts for each translation grid point.

    Every mu coordinate must be an integer multiple of the signal spacing on
    its axis (the window is translated by whole cells). Returns, per axis, the
    integer offsets k with mu = k * spacing.
    """
    offsets = []
    for ax in range(3):
        dt = t_grid.axes[ax].spacing
        ratio = mu_grid.points(ax) / dt
        k = np.round(ratio)
        if np.any(np.abs(ratio - k) > tol):
            bad = mu_grid.points(ax)[np.abs(ratio - k) > tol]
            raise MuOffGridError(
                f"translation points {bad} on axis {ax} are not integer multiples "
                f"of the signal spacing {dt}")
        offsets.append(k.astype(int))
    return offsets


@dataclass
class SampledField3D:
    """Octonion samples on a uniform 3D grid; values shape (n1, n2, n3, 8)."""

    grid: Grid3D
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        expect = self.grid.shape + (8,)
        if self.values.shape != expect:
            raise ValueError(f"values shape {self.values.shape} != grid shape {expect}")

    def magnitudes(self) -> np.ndarray:
        return oct_norm(self.values)

    def norm_l2(self) -> float:
        return float(np.sqrt(np.sum(self.values ** 2) * self.grid.cell_volume))

    def norm_lp(self, p: float) -> float:
        """Discrete L^p norm of the pointwise octonion magnitude; p=inf gives the max."""
        mags = self.magnitudes()
        if np.isinf(p):
            return float(np.max(mags))
        return float((np.sum(mags ** p) * self.grid.cell_volume) ** (1.0 / p))

    def component(self, i: int) -> np.ndarray:
        return self.values[..., i]

    def copy(self) -> "SampledField3D":
        return SampledField3D(self.grid, self.values.copy())


@dataclass
class WoclctResult:
    """Joint transform values over (omega, mu); values shape mu-shape + omega-shape + (8,)."""

    omega_grid: Grid3D
    mu_grid: Grid3D
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        expect = self.mu_grid.shape + self.omega_grid.shape + (8,)
        if self.values.shape != expect:
            raise ValueError(f"values shape {self.values.shape} != {expect}")

    @property
    def cell_volume(self) -> float:
        return self.omega_grid.cell_volume * self.mu_grid.cell_volume

    def magnitudes(self) -> np.ndarray:
        return oct_norm(self.values)

    def norm_l2(self) -> float:
        return float(np.sqrt(np.sum(self.values ** 2) * self.cell_volume))

    def norm_lq(self, q: float) -> float:
        mags = self.magnitudes()
        if np.isinf(q):
            return float(np.max(mags))
        return float((np.sum(mags ** q) * self.cell_volume) ** (1.0 / q))
