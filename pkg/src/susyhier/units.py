"""Physical constants bundle.

Defaults are hbar = 1, m = 1/2, e^2 = 1 so that 2m/hbar^2 = 1 and kinetic
terms carry unit coefficient.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidModelError


@dataclass(frozen=True)
class UnitSystem:
    hbar: float = 1.0
    mass: float = 0.5
    e_sq: float = 1.0

    def __post_init__(self):
        for name in ("hbar", "mass", "e_sq"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise InvalidModelError(f"{name} must be a finite positive real, got {v!r}")

    @property
    def beta(self) -> float:
        """beta = hbar^2 / (m e^2)."""
        return self.hbar**2 / (self.mass * self.e_sq)

    @property
    def kinetic(self) -> float:
        """Coefficient of -d^2/dx^2 in the Hamiltonian: hbar^2 / (2m)."""
        return self.hbar**2 / (2.0 * self.mass)


DEFAULT_UNITS = UnitSystem()
