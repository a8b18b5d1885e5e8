"""Factorization hierarchy: superpotentials, partner potentials, residuals.

Two modes exist side by side and are never mixed:

* literal mode reproduces each family's published ansatz and partner exactly
  as printed, and the residual of the factorization identity is a measured
  diagnostic (it is genuinely nonzero for some families);
* self-consistent mode determines the two-term exponential superpotential by
  coefficient matching, which satisfies the identity by construction.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

from .errors import DegenerateQuadraticError, InvalidModelError, UnsupportedFamilyError
from .expressions import (DerivativeScale, ExpTerm, RationalPartner, RationalTerm,
                          SuperpotentialExpr, exp_sum, scale_value)
from .grids import Grid
from .potentials import (MORSE_FAMILIES, MorseGeneral, MorseNonPT, MorsePT1, MorsePT2,
                         PoschlTeller, PoschlTellerPT, PotentialModel, lambda_for,
                         morse_exponential_coefficients)
from .spectra import energy_record
from .units import UnitSystem, DEFAULT_UNITS


class Mode(Enum):
    PAPER_LITERAL = "paper_literal"
    SELF_CONSISTENT = "self_consistent"


# ---------------------------------------------------------------------------
# literal ansatz
# ---------------------------------------------------------------------------

def _pt_constant(l: int, units: UnitSystem) -> float:
    """sqrt(m/2) (e^2/hbar) [1/(l+1) - (l+1) beta/2]."""
    bracket = 1.0 / (l + 1) - (l + 1) * units.beta / 2.0
    return math.sqrt(units.mass / 2.0) * units.e_sq / units.hbar * bracket


def _pt_kernel(model: Union[PoschlTeller, PoschlTellerPT]) -> SuperpotentialExpr:
    """Unit-strength rational factor of the family's superpotential."""
    if isinstance(model, PoschlTellerPT):
        term = RationalTerm(model.q, model.q**2, power=4)
        return SuperpotentialExpr(1j * model.alpha, (), (term,))
    if model.v0.real == 0.0 and model.q.real == 0.0 and model.q.imag != 0.0:
        qi = model.q.imag
        term = RationalTerm(qi, qi * qi, power=4)
        return SuperpotentialExpr(complex(model.alpha), (), (term,))
    return SuperpotentialExpr(complex(model.alpha), (), (RationalTerm(1.0, model.q, power=2),))


def superpotential(model: PotentialModel, l: int, units: UnitSystem = DEFAULT_UNITS
                   ) -> SuperpotentialExpr:
    """The published ansatz W for hierarchy depth l."""
    if l < 0:
        raise InvalidModelError("l must be nonnegative")
    if isinstance(model, MorseGeneral):
        lam = lambda_for(model, units)
        if model.v1 == 0:
            raise InvalidModelError("v1 must be nonzero for the two-term exponential ansatz")
        q = model.v2 / model.v1
        return exp_sum(complex(model.alpha), (-lam, 1), (lam * q - (2 * l + 1) / 2.0, 0))
    if isinstance(model, MorseNonPT):
        lam = lambda_for(model, units)
        return exp_sum(1.0 + 0j, (-1j * lam, 1), (lam - (2 * l + 1) / 2.0, 0))
    if isinstance(model, MorsePT1):
        lam = lambda_for(model, units)
        return exp_sum(1j, (-lam, 1), (lam - (2 * l + 1) / 2.0, 0))
    if isinstance(model, MorsePT2):
        c = 2 * l + 1 + model.d / (2.0 * model.omega)
        return exp_sum(1j * model.alpha, (-1.0, 1), (c, 0))
    if isinstance(model, (PoschlTeller, PoschlTellerPT)):
        kernel = _pt_kernel(model)
        strength = -units.hbar / math.sqrt(2.0 * units.mass) * (l + 1)
        term = kernel.rational_terms[0]
        scaled = RationalTerm(strength * term.coeff, term.q, term.power)
        const = ExpTerm(_pt_constant(l, units), 0)
        return SuperpotentialExpr(kernel.rate, (const,), (scaled,))
    raise UnsupportedFamilyError(f"no superpotential ansatz for {type(model).__name__}")


def partner_potential(model: PotentialModel, l: int, units: UnitSystem = DEFAULT_UNITS
                      ) -> Union[SuperpotentialExpr, RationalPartner]:
    """The published partner potential at hierarchy depth l, taken verbatim."""
    if l < 0:
        raise InvalidModelError("l must be nonnegative")
    if isinstance(model, MorseGeneral):
        lam = lambda_for(model, units)
        q = model.v2 / model.v1 if model.v1 != 0 else None
        if q is None:
            raise InvalidModelError("v1 must be nonzero for the two-term exponential ansatz")
        return exp_sum(complex(model.alpha),
                       (lam * lam, 2), (-lam * lam * q + 2 * l * lam, 1))
    if isinstance(model, MorseNonPT):
        lam = lambda_for(model, units)
        return exp_sum(1.0 + 0j,
                       (-lam * lam, 2), (-2j * lam * lam + 2j * l * lam, 1))
    if isinstance(model, MorsePT1):
        lam = lambda_for(model, units)
        return exp_sum(1j, (lam * lam, 2), (-lam * lam + 2 * l * lam, 1))
    if isinstance(model, MorsePT2):
        c = 2 * l + 1 + model.d / (2.0 * model.omega) + 0.5j * model.alpha
        return exp_sum(1j * model.alpha, (1.0, 2), (-2.0 * c, 1))
    if isinstance(model, (PoschlTeller, PoschlTellerPT)):
        kernel = _pt_kernel(model)
        ll1 = l * (l + 1)
        sq = units.kinetic * ll1
        lin = -units.e_sq * (1.0 - ll1 * units.beta / 2.0)
        return RationalPartner(kernel=kernel, lin=lin, sq=sq)
    raise UnsupportedFamilyError(f"no partner potential for {type(model).__name__}")


# ---------------------------------------------------------------------------
# self-consistent solution
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SelfConsistentSolution:
    """Superpotential -b e^{-r x} + a matched to c2 e^{-2 r x} + c1 e^{-r x}."""

    b: complex
    a: complex
    rate: complex

    @property
    def e0(self) -> complex:
        return -self.a * self.a

    def a_level(self, l: int) -> complex:
        """Level shift a_l = a - l * rate."""
        return self.a - l * self.rate

    def e0_level(self, l: int) -> complex:
        a_l = self.a_level(l)
        return -a_l * a_l

    def superpotential_level(self, l: int) -> SuperpotentialExpr:
        return exp_sum(self.rate, (-self.b, 1), (self.a_level(l), 0))

    def partner_level(self, l: int) -> SuperpotentialExpr:
        """W_l^2 - W_l' + E0_l expanded in closed form (constants cancel)."""
        a_l = self.a_level(l)
        return exp_sum(self.rate,
                       (self.b * self.b, 2), (-self.b * (2.0 * a_l + self.rate), 1))


def solve_selfconsistent_morse(c2: complex, c1: complex,
                               rate: complex = 1.0) -> SelfConsistentSolution:
    """Match -b e^{-r x} + a to the well c2 e^{-2 r x} + c1 e^{-r x}.

    From W^2 - W' = V - E0: b = sqrt(c2) (principal branch),
    a = -c1/(2b) - r/2, E0 = -a^2.
    """
    c2 = complex(c2)
    c1 = complex(c1)
    rate = complex(rate)
    if rate == 0:
        raise InvalidModelError("rate must be nonzero")
    if c2 == 0:
        raise DegenerateQuadraticError("leading coefficient c2 vanishes; no exponential ansatz")
    b = cmath.sqrt(c2)
    a = -c1 / (2.0 * b) - rate / 2.0
    return SelfConsistentSolution(b=b, a=a, rate=rate)


def selfconsistent_for_model(model: PotentialModel) -> SelfConsistentSolution:
    c2, c1, rate = morse_exponential_coefficients(model)
    return solve_selfconsistent_morse(c2, c1, rate)


# ---------------------------------------------------------------------------
# residual diagnostic and hierarchy assembly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RiccatiResidualReport:
    mode: Mode
    derivative_scale: DerivativeScale
    l: int
    e0: complex
    max_abs_residual: float
    argmax_x: float


def riccati_residual(model: PotentialModel, l: int, grid: Grid,
                     mode: Mode = Mode.SELF_CONSISTENT,
                     scale: DerivativeScale = DerivativeScale.UNIT,
                     e0: Optional[complex] = None,
                     units: UnitSystem = DEFAULT_UNITS) -> RiccatiResidualReport:
    """max over the grid of |W^2 - s W' - (V_partner - E0)|, all analytic.

    e0 defaults to the mode's own ground energy at depth l.
    """
    if mode is Mode.SELF_CONSISTENT:
        sol = selfconsistent_for_model(model)
        w = sol.superpotential_level(l)
        v = sol.partner_level(l)
        if e0 is None:
            e0 = sol.e0_level(l)
    else:
        w = superpotential(model, l, units)
        v = partner_potential(model, l, units)
        if e0 is None:
            e0 = energy_record(model, 0, l, units).energy
    s = scale_value(scale, w.rate)
    x = grid.points()
    wx = w.evaluate(x)
    resid = wx * wx - s * w.derivative(x) - (v.evaluate(x) - e0)
    mags = np.abs(resid)
    i = int(np.argmax(mags))
    return RiccatiResidualReport(mode=mode, derivative_scale=scale, l=l, e0=complex(e0),
                                 max_abs_residual=float(mags[i]), argmax_x=float(x[i]))


@dataclass(frozen=True)
class HierarchyLevel:
    l: int
    partner: Union[SuperpotentialExpr, RationalPartner]
    e0: complex


def hierarchy(model: PotentialModel, l_max: int, mode: Mode = Mode.SELF_CONSISTENT,
              units: UnitSystem = DEFAULT_UNITS) -> list[HierarchyLevel]:
    """Partner potentials and ground energies for l = 0..l_max, in order."""
    if l_max < 0:
        raise InvalidModelError("l_max must be nonnegative")
    if mode is Mode.SELF_CONSISTENT:
        if not isinstance(model, MORSE_FAMILIES):
            raise UnsupportedFamilyError(
                "self-consistent matching needs a two-term exponential well")
        sol = selfconsistent_for_model(model)
        return [HierarchyLevel(l, sol.partner_level(l), sol.e0_level(l))
                for l in range(l_max + 1)]
    return [HierarchyLevel(l, partner_potential(model, l, units),
                           complex(energy_record(model, 0, l, units).energy))
            for l in range(l_max + 1)]
