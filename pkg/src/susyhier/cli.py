"""Command-line front end.

    susyhier <spectrum|verify|scan|wavefunction> --config <path>
             [--out <path>] [--mode paper-literal|self-consistent]

Exit codes: 0 success, 1 invalid config or model precondition, 2 numerical
non-convergence, 3 verification mismatch (Hermitian families only).

All data rows are serialized with shortest round-trip decimals so repeated
runs on the same config are byte-identical; warnings go to stderr.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from typing import Callable, Optional

from .config import RunConfig, load_config
from .errors import (ConfigError, ConvergenceFailureError, GridTooCoarseError,
                     InvalidModelError, NotNormalizableError, PoleOnDomainError,
                     SusyhierError, UnsupportedFamilyError, ZeroOmegaError)
from .hierarchy import Mode
from .potentials import is_structurally_hermitian
from .spectra import groundstate_wavefunction, spectrum_records
from .verifier import Verdict, reality_scan, verify

_MODE_TOKENS = {"paper-literal": Mode.PAPER_LITERAL,
                "self-consistent": Mode.SELF_CONSISTENT}

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NOT_CONVERGED = 2
EXIT_MISMATCH = 3


def _fmt(x: float) -> str:
    # cast defensively: str() on a numpy scalar is not round-trip-stable;
    # adding 0.0 folds negative zero into plain 0.0
    return str(float(x) + 0.0)


def _fmt_complex(z: complex) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return f"{_fmt(z.real)}{sign}{_fmt(abs(z.imag))}i"


def _family_token(model) -> str:
    return {
        "MorseGeneral": "morse_general",
        "MorseNonPT": "morse_nonpt",
        "MorsePT1": "morse_pt1",
        "MorsePT2": "morse_pt2",
        "PoschlTeller": "poschl_teller",
        "PoschlTellerPT": "poschl_teller_pt",
    }[type(model).__name__]


def cmd_spectrum(cfg: RunConfig) -> tuple[str, list[str], int]:
    records = spectrum_records(cfg.model, cfg.n_max, cfg.l_max, cfg.units,
                               self_consistent=(cfg.mode is Mode.SELF_CONSISTENT))
    lines = ["n,l,E_re,E_im,formula,admissible"]
    warnings = []
    if any(r.admissible for r in records):
        for r in records:
            lines.append(",".join([str(r.nq.n), str(r.nq.l),
                                   _fmt(r.energy.real), _fmt(r.energy.imag),
                                   r.formula.value,
                                   "true" if r.admissible else "false"]))
    else:
        warnings.append("warning: no admissible bound levels for this model; "
                        "emitting header only")
    return "\n".join(lines) + "\n", warnings, EXIT_OK


def cmd_verify(cfg: RunConfig) -> tuple[str, list[str], int]:
    records = spectrum_records(cfg.model, cfg.n_max, cfg.l_max, cfg.units,
                               self_consistent=(cfg.mode is Mode.SELF_CONSISTENT))
    report = verify(cfg.model, records, cfg.grid, cfg.tol_abs, cfg.units)
    gating = is_structurally_hermitian(cfg.model)
    lines = [
        "# verify report",
        f"family = {_family_token(cfg.model)}",
        f"mode = {cfg.mode.value}",
        f"role = {'gating' if gating else 'diagnostic'}",
        f"verdict = {report.verdict.value}",
        f"converged = {'true' if report.converged else 'false'}",
        f"richardson_delta = {_fmt(report.richardson_delta)}",
        f"tol_abs = {_fmt(report.tol_abs)}",
        "n,l,E_re,E_im,numeric_re,numeric_im,abs_err,rel_err",
    ]
    for p in report.pairs:
        lines.append(",".join([str(p.record.nq.n), str(p.record.nq.l),
                               _fmt(p.record.energy.real), _fmt(p.record.energy.imag),
                               _fmt(p.numeric.real), _fmt(p.numeric.imag),
                               _fmt(p.abs_err), _fmt(p.rel_err)]))
    for r in report.unmatched_analytic:
        lines.append(f"# unmatched analytic level n={r.nq.n} l={r.nq.l} "
                     f"E={_fmt_complex(r.energy)}")
    for e in report.unmatched_numeric:
        lines.append(f"# unmatched numeric eigenvalue {_fmt_complex(e)}")
    text = "\n".join(lines) + "\n"
    if gating:
        if not report.converged:
            return text, [], EXIT_NOT_CONVERGED
        if report.verdict is not Verdict.MATCH:
            return text, [], EXIT_MISMATCH
        return text, [], EXIT_OK
    # non-Hermitian families: the box truncation is a diagnostic, not a gate
    warnings = []
    if not report.converged or report.verdict is not Verdict.MATCH:
        warnings.append("warning: diagnostic-only family; verdict "
                        f"{report.verdict.value} (converged="
                        f"{'true' if report.converged else 'false'}) "
                        "does not gate the exit code")
    return text, warnings, EXIT_OK


def cmd_scan(cfg: RunConfig) -> tuple[str, list[str], int]:
    if cfg.scan1 is None or cfg.scan2 is None:
        raise ConfigError("[run]: scan command needs scan1_* and scan2_* axes")
    records = reality_scan(cfg.model, cfg.scan1, cfg.scan2, cfg.grid,
                           tol_imag=cfg.tol_imag, units=cfg.units,
                           workers=cfg.workers)
    lines = ["param1,param2,max_im_E,is_real,condition_holds,status"]
    for r in records:
        lines.append(",".join([_fmt(r.param1), _fmt(r.param2), _fmt(r.max_im_e),
                               "true" if r.is_real else "false",
                               "true" if r.condition_holds else "false",
                               r.status]))
    ok = [r for r in records if r.status == "ok"]
    agree = sum(1 for r in ok if r.is_real == r.condition_holds)
    lines.append(f"# agreement: {agree}/{len(ok)} ok points have "
                 "is_real == condition_holds")
    warnings = []
    if not cfg.grid_given:
        warnings.append("warning: scanning on the default 4000-point grid; "
                        "set [grid] n_points for faster sweeps")
    return "\n".join(lines) + "\n", warnings, EXIT_OK


def cmd_wavefunction(cfg: RunConfig) -> tuple[str, list[str], int]:
    sample = groundstate_wavefunction(cfg.model, cfg.l, cfg.grid, cfg.units)
    lines = []
    if not sample.normalized:
        lines.append("# unnormalized")
    lines.append("x,psi_re,psi_im")
    x = sample.grid.points()
    for xi, psi in zip(x, sample.values):
        lines.append(",".join([_fmt(xi), _fmt(psi.real), _fmt(psi.imag)]))
    return "\n".join(lines) + "\n", [], EXIT_OK


_COMMANDS: dict[str, Callable[[RunConfig], tuple[str, list[str], int]]] = {
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "wavefunction": cmd_wavefunction,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="susyhier",
        description="Closed-form hierarchy spectra with a finite-difference cross-check")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("spectrum", "emit the closed-form energy levels as CSV"),
        ("verify", "compare closed forms against the finite-difference solver"),
        ("scan", "sweep two parameter components and map spectral reality"),
        ("wavefunction", "sample the ground-state wavefunction on the grid"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--config", required=True, help="path to the run config")
        p.add_argument("--out", default=None, help="write output here instead of stdout")
        p.add_argument("--mode", choices=sorted(_MODE_TOKENS), default=None,
                       help="override the [run] mode")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.mode is not None:
            cfg = replace(cfg, mode=_MODE_TOKENS[args.mode])
        text, warnings, code = _COMMANDS[args.command](cfg)
    except (ConfigError, InvalidModelError, ZeroOmegaError, PoleOnDomainError,
            NotNormalizableError, UnsupportedFamilyError, GridTooCoarseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ConvergenceFailureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    except SusyhierError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.out is None:
        try:
            sys.stdout.write(text)
        except BrokenPipeError:  # downstream (e.g. head) closed the pipe
            return EXIT_OK
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    for w in warnings:
        print(w, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
