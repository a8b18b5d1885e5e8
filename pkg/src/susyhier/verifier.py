"""Finite-difference cross-check of the closed-form spectra.

Three-point Laplacian on a uniform grid with Dirichlet walls.  Real-valued
wells go through the symmetric tridiagonal solver; complex-valued wells are
promoted to dense storage and solved with the general eigensolver.
Convergence is certified by comparing spacings h and h/2 and reporting the
Richardson-extrapolated eigenvalues.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Sequence

import numpy as np
from scipy.linalg import eig, eigh_tridiagonal

from .errors import PoleOnDomainError, InvalidModelError
from .grids import Grid
from .potentials import (PoschlTeller, PotentialModel, ensure_no_pole, eval_potential,
                         reality_condition)
from .spectra import EnergyRecord
from .units import UnitSystem, DEFAULT_UNITS

# an interior eigenvector component at the wall must be this small, relative
# to the peak, for the state to count as bound
EDGE_DECAY_RTOL = 1e-6


@dataclass(frozen=True)
class DiscretizedHamiltonian:
    """Tridiagonal operator over the interior points of a grid (Dirichlet walls)."""

    grid: Grid
    diagonal: np.ndarray
    off_diagonal: float

    @property
    def dimension(self) -> int:
        return len(self.diagonal)

    @property
    def is_real(self) -> bool:
        return bool(np.all(self.diagonal.imag == 0.0))

    def dense(self) -> np.ndarray:
        n = self.dimension
        m = np.zeros((n, n), dtype=complex)
        np.fill_diagonal(m, self.diagonal)
        off = np.full(n - 1, self.off_diagonal)
        m += np.diag(off, 1) + np.diag(off, -1)
        return m


def build_hamiltonian(model: PotentialModel, grid: Grid,
                      units: UnitSystem = DEFAULT_UNITS) -> DiscretizedHamiltonian:
    """H = -(hbar^2/2m) d^2/dx^2 + V with the 3-point stencil."""
    ensure_no_pole(model, grid.x_min, grid.x_max)
    x = grid.points()[1:-1]
    t = units.kinetic / grid.h**2
    v = np.asarray(eval_potential(model, x, units), dtype=complex)
    return DiscretizedHamiltonian(grid=grid, diagonal=2.0 * t + v, off_diagonal=-t)


@dataclass(frozen=True)
class NumericSpectrum:
    """Eigenvalues sorted by (Re, Im); eigenvector columns align with them."""

    eigenvalues: np.ndarray
    eigenvectors: Optional[np.ndarray]
    grid: Grid
    converged: bool
    richardson_delta: float


def _sorted_eig(ham: DiscretizedHamiltonian, k: int):
    k = min(k, ham.dimension)
    if ham.is_real:
        vals, vecs = eigh_tridiagonal(ham.diagonal.real,
                                      np.full(ham.dimension - 1, ham.off_diagonal),
                                      select="i", select_range=(0, k - 1))
        return vals.astype(complex), vecs.astype(complex)
    vals, vecs = eig(ham.dense(), right=True)
    order = np.lexsort((vals.imag, vals.real))[:k]
    return vals[order], vecs[:, order]


def eigen_spectrum(ham: DiscretizedHamiltonian, k: int) -> NumericSpectrum:
    """k lowest-by-real-part eigenpairs of a single discretization."""
    if k < 1:
        raise InvalidModelError("k must be positive")
    vals, vecs = _sorted_eig(ham, k)
    return NumericSpectrum(eigenvalues=vals, eigenvectors=vecs, grid=ham.grid,
                           converged=False, richardson_delta=float("nan"))


def converged_spectrum(model: PotentialModel, grid: Grid, k: int,
                       units: UnitSystem = DEFAULT_UNITS,
                       tol_abs: float = 1e-3) -> NumericSpectrum:
    """Solve at h and h/2, certify |E(h) - E(h/2)| < tol_abs/2, extrapolate.

    The returned eigenvalues are the O(h^4) Richardson combination
    (4 E_{h/2} - E_h)/3; eigenvectors come from the fine grid.
    """
    coarse = eigen_spectrum(build_hamiltonian(model, grid, units), k)
    fine_grid = grid.refined()
    fine = eigen_spectrum(build_hamiltonian(model, fine_grid, units), k)
    n = min(len(coarse.eigenvalues), len(fine.eigenvalues))
    deltas = np.abs(coarse.eigenvalues[:n] - fine.eigenvalues[:n])
    delta = float(deltas.max()) if n else float("nan")
    extrapolated = (4.0 * fine.eigenvalues[:n] - coarse.eigenvalues[:n]) / 3.0
    return NumericSpectrum(eigenvalues=extrapolated,
                           eigenvectors=None if fine.eigenvectors is None
                           else fine.eigenvectors[:, :n],
                           grid=fine_grid, converged=bool(delta < tol_abs / 2.0),
                           richardson_delta=delta)


def bound_states(spectrum: NumericSpectrum, threshold: float = 0.0,
                 edge_rtol: float = EDGE_DECAY_RTOL) -> NumericSpectrum:
    """Keep eigenpairs with Re E below the continuum threshold and decaying tails.

    The threshold is the x -> +infinity limit of the well, which is 0 for
    every family here.
    """
    if spectrum.eigenvectors is None:
        raise InvalidModelError("bound-state filtering needs eigenvectors")
    keep = []
    for j, e in enumerate(spectrum.eigenvalues):
        if e.real >= threshold:
            continue
        v = spectrum.eigenvectors[:, j]
        peak = np.abs(v).max()
        if max(abs(v[0]), abs(v[-1])) < edge_rtol * peak:
            keep.append(j)
    idx = np.array(keep, dtype=int)
    return replace(spectrum,
                   eigenvalues=spectrum.eigenvalues[idx],
                   eigenvectors=spectrum.eigenvectors[:, idx])


def conjugate_pairing_ok(eigenvalues: Sequence[complex], tol: Optional[float] = None) -> bool:
    """Every eigenvalue with nonzero imaginary part must have a conjugate partner."""
    vals = np.asarray(eigenvalues, dtype=complex)
    if len(vals) == 0:
        return True
    if tol is None:
        tol = 1e-8 * max(1.0, float(np.abs(vals).max()))
    for e in vals:
        if abs(e.imag) <= tol:
            continue
        if np.abs(vals - np.conjugate(e)).min() > tol:
            return False
    return True


# ---------------------------------------------------------------------------
# comparison against closed forms
# ---------------------------------------------------------------------------

class Verdict(Enum):
    MATCH = "match"
    PARTIAL_MATCH = "partial_match"
    MISMATCH = "mismatch"


@dataclass(frozen=True)
class MatchedPair:
    record: EnergyRecord
    numeric: complex
    abs_err: float
    rel_err: float


@dataclass(frozen=True)
class ComparisonReport:
    pairs: tuple[MatchedPair, ...]
    unmatched_analytic: tuple[EnergyRecord, ...]
    unmatched_numeric: tuple[complex, ...]
    verdict: Verdict
    converged: bool
    richardson_delta: float
    tol_abs: float


def _greedy_pairs(records: Sequence[EnergyRecord], numeric: np.ndarray):
    """Globally greedy nearest-neighbor assignment; independent of input order."""
    candidates = []
    for i, r in enumerate(records):
        for j, e in enumerate(numeric):
            d = abs(r.energy - e)
            candidates.append((d, r.energy.real, r.energy.imag, r.nq.l, r.nq.n,
                               e.real, e.imag, i, j))
    candidates.sort()
    taken_r, taken_n = set(), set()
    assignment = {}
    for cand in candidates:
        i, j = cand[7], cand[8]
        if i in taken_r or j in taken_n:
            continue
        taken_r.add(i)
        taken_n.add(j)
        assignment[i] = j
    return assignment


def verify(model: PotentialModel, analytic: Sequence[EnergyRecord], grid: Grid,
           tol_abs: float = 1e-3, units: UnitSystem = DEFAULT_UNITS,
           k_extra: int = 5) -> ComparisonReport:
    """Match admissible closed-form levels against the certified FD spectrum."""
    admissible = [r for r in analytic if r.admissible]
    if not admissible:
        raise InvalidModelError("no admissible analytic levels to verify")
    admissible.sort(key=lambda r: (r.nq.l, r.nq.n))
    k = len(admissible) + k_extra
    num = converged_spectrum(model, grid, k, units, tol_abs)
    assignment = _greedy_pairs(admissible, num.eigenvalues)
    pairs = []
    matched_n = set()
    unmatched_a = []
    for i, r in enumerate(admissible):
        if i in assignment:
            e = complex(num.eigenvalues[assignment[i]])
            err = abs(r.energy - e)
            pairs.append(MatchedPair(record=r, numeric=e, abs_err=err,
                                     rel_err=err / max(abs(r.energy), 1e-300)))
            matched_n.add(assignment[i])
        else:
            unmatched_a.append(r)
    unmatched_n = tuple(complex(e) for j, e in enumerate(num.eigenvalues)
                        if j not in matched_n)
    ok = sum(1 for p in pairs if p.abs_err <= tol_abs)
    if ok == len(admissible):
        verdict = Verdict.MATCH
    elif ok == 0:
        verdict = Verdict.MISMATCH
    else:
        verdict = Verdict.PARTIAL_MATCH
    return ComparisonReport(pairs=tuple(pairs), unmatched_analytic=tuple(unmatched_a),
                            unmatched_numeric=unmatched_n, verdict=verdict,
                            converged=num.converged,
                            richardson_delta=num.richardson_delta, tol_abs=tol_abs)


# ---------------------------------------------------------------------------
# parameter-plane reality scan
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanAxis:
    """One swept component of a complex parameter of the rational well."""

    param: str        # "v0" | "q"
    component: str    # "re" | "im"
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.param not in ("v0", "q"):
            raise InvalidModelError(f"scan parameter must be v0 or q, got {self.param!r}")
        if self.component not in ("re", "im"):
            raise InvalidModelError(f"scan component must be re or im, got {self.component!r}")
        if self.count < 1:
            raise InvalidModelError("scan count must be >= 1")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class ScanRecord:
    param1: float
    param2: float
    max_im_e: float
    n_retained: int
    is_real: bool
    condition_holds: bool
    status: str


def _with_component(model: PoschlTeller, axis: ScanAxis, value: float) -> PoschlTeller:
    current = getattr(model, axis.param)
    new = (complex(value, current.imag) if axis.component == "re"
           else complex(current.real, value))
    kwargs = {"v0": model.v0, "q": model.q, "alpha": model.alpha}
    kwargs[axis.param] = new
    return PoschlTeller(**kwargs)


def reality_scan(model: PoschlTeller, axis1: ScanAxis, axis2: ScanAxis, grid: Grid,
                 tol_imag: float = 1e-6, units: UnitSystem = DEFAULT_UNITS,
                 workers: int = 1) -> list[ScanRecord]:
    """Lattice scan of the rational well's spectrum-reality diagnostic.

    At each lattice point the bound part of the FD spectrum is extracted and
    max |Im E| is compared against tol_imag; the parameter condition
    Im(V0) Re(q) = Re(V0) Im(q) is recorded alongside.  Per-point failures
    (e.g. a pole crossing the domain) land in the status column rather than
    aborting the scan.  Results come back in lattice order (axis1 outer).
    """
    if not isinstance(model, PoschlTeller):
        raise InvalidModelError("reality scan is defined for the rational well")
    points = [(p1, p2) for p1 in axis1.values() for p2 in axis2.values()]

    def one(point):
        p1, p2 = point
        m = _with_component(_with_component(model, axis1, p1), axis2, p2)
        holds = reality_condition(m.v0, m.q)
        try:
            ham = build_hamiltonian(m, grid, units)
            spec = eigen_spectrum(ham, ham.dimension)
            bound = bound_states(spec)
            n_ret = len(bound.eigenvalues)
            max_im = float(np.abs(bound.eigenvalues.imag).max()) if n_ret else 0.0
            return ScanRecord(param1=float(p1), param2=float(p2), max_im_e=max_im,
                              n_retained=n_ret, is_real=bool(max_im < tol_imag),
                              condition_holds=holds, status="ok")
        except PoleOnDomainError:
            return ScanRecord(param1=float(p1), param2=float(p2), max_im_e=float("nan"),
                              n_retained=0, is_real=False, condition_holds=holds,
                              status="pole_on_domain")

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, points))
    return [one(p) for p in points]
