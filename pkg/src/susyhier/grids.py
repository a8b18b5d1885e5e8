"""Uniform 1-D grids."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GridTooCoarseError, InvalidModelError

MIN_POINTS = 16


@dataclass(frozen=True)
class Grid:
    """Uniform grid with n_points samples including both endpoints."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise InvalidModelError("grid endpoints must be finite")
        if self.x_max <= self.x_min:
            raise InvalidModelError("x_max must exceed x_min")
        if self.n_points < MIN_POINTS:
            raise GridTooCoarseError(f"need at least {MIN_POINTS} points, got {self.n_points}")

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    def refined(self) -> "Grid":
        """Same interval with spacing exactly halved."""
        return Grid(self.x_min, self.x_max, 2 * self.n_points - 1)


def symmetric_grid(half_width: float, n_points: int) -> Grid:
    """Grid on [-L, L]; points come out exactly antisymmetric for odd n_points."""
    if n_points % 2 == 0:
        n_points += 1
    return Grid(-half_width, half_width, n_points)


def symmetric_points(grid: Grid) -> np.ndarray:
    """Samples of a symmetric grid, built index-wise so x[i] == -x[n-1-i] exactly."""
    n = grid.n_points
    if abs(grid.x_min + grid.x_max) > 1e-12 * abs(grid.x_max - grid.x_min):
        raise InvalidModelError("grid is not symmetric about 0")
    m = (n - 1) / 2.0
    return (np.arange(n) - m) * grid.h
