"""Closed-form spectra for exponential and rational wells via superpotential
hierarchies, plus a finite-difference verifier and a small CLI."""

from .errors import (ConfigError, ConvergenceFailureError, DegenerateQuadraticError,
                     GridTooCoarseError, InvalidModelError, NotNormalizableError,
                     PoleOnDomainError, SusyhierError, UnsupportedFamilyError,
                     ZeroOmegaError)
from .units import DEFAULT_UNITS, UnitSystem
from .grids import Grid, symmetric_grid
from .potentials import (MorseGeneral, MorseNonPT, MorsePT1, MorsePT2, PoschlTeller,
                         PoschlTellerPT, PotentialModel, SymmetryClass,
                         classify_symmetry, ensure_no_pole, eval_potential,
                         is_structurally_hermitian, lambda_for,
                         poschl_teller_imag_form, reality_condition)
from .expressions import (DerivativeScale, ExpTerm, RationalPartner, RationalTerm,
                          SuperpotentialExpr, exp_sum, riccati_apply)
from .hierarchy import (HierarchyLevel, Mode, RiccatiResidualReport,
                        SelfConsistentSolution, hierarchy, partner_potential,
                        riccati_residual, selfconsistent_for_model,
                        solve_selfconsistent_morse, superpotential)
from .spectra import (EnergyRecord, QuantumNumbers, SpectrumFormula,
                      WavefunctionSample, bound_state_admissible, energy_record,
                      energy_morse_complex, energy_morse_general,
                      energy_morse_shifted, energy_poschl_teller, formula_for,
                      groundstate_wavefunction, selfconsistent_record,
                      spectrum_records)
from .verifier import (ComparisonReport, DiscretizedHamiltonian, MatchedPair,
                       NumericSpectrum, ScanAxis, ScanRecord, Verdict,
                       bound_states, build_hamiltonian, conjugate_pairing_ok,
                       converged_spectrum, eigen_spectrum, reality_scan, verify)
from .config import (RunConfig, default_grid, load_config, parse_config,
                     parse_complex_literal)

__version__ = "0.1.0"

__all__ = [
    "SusyhierError", "InvalidModelError", "PoleOnDomainError", "ZeroOmegaError",
    "UnsupportedFamilyError", "DegenerateQuadraticError", "NotNormalizableError",
    "GridTooCoarseError", "ConvergenceFailureError", "ConfigError",
    "UnitSystem", "DEFAULT_UNITS", "Grid", "symmetric_grid",
    "MorseGeneral", "MorseNonPT", "MorsePT1", "MorsePT2", "PoschlTeller",
    "PoschlTellerPT", "PotentialModel", "SymmetryClass", "classify_symmetry",
    "ensure_no_pole", "eval_potential", "is_structurally_hermitian", "lambda_for",
    "poschl_teller_imag_form", "reality_condition",
    "ExpTerm", "RationalTerm", "RationalPartner", "SuperpotentialExpr", "exp_sum",
    "DerivativeScale", "riccati_apply",
    "Mode", "HierarchyLevel", "SelfConsistentSolution", "RiccatiResidualReport",
    "hierarchy", "partner_potential", "riccati_residual", "selfconsistent_for_model",
    "solve_selfconsistent_morse", "superpotential",
    "SpectrumFormula", "QuantumNumbers", "EnergyRecord", "WavefunctionSample",
    "bound_state_admissible", "energy_record", "energy_morse_complex",
    "energy_morse_general", "energy_morse_shifted", "energy_poschl_teller",
    "formula_for",
    "groundstate_wavefunction", "selfconsistent_record", "spectrum_records",
    "DiscretizedHamiltonian", "NumericSpectrum", "ComparisonReport", "MatchedPair",
    "Verdict", "ScanAxis", "ScanRecord", "bound_states", "build_hamiltonian",
    "conjugate_pairing_ok", "converged_spectrum", "eigen_spectrum", "reality_scan",
    "verify",
    "RunConfig", "default_grid", "load_config", "parse_config",
    "parse_complex_literal",
]
