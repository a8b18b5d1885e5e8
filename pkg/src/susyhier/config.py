"""Strict line-oriented run configuration.

Grammar: `[section]` headers followed by `key = value` lines; `#` starts a
comment; blank lines are ignored.  Sections are `[model]`, `[grid]`,
`[units]`, `[run]`.  Complex values are written `a+bi` / `a-bi` (also plain
`a` or `bi`).  Unknown sections, unknown keys, duplicate keys, and malformed
values are all hard errors -- nothing is computed from a config that does not
parse cleanly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import ConfigError
from .grids import Grid
from .hierarchy import Mode
from .potentials import (MorseGeneral, MorseNonPT, MorsePT1, MorsePT2, PoschlTeller,
                         PoschlTellerPT, PotentialModel)
from .units import UnitSystem
from .verifier import ScanAxis

_FAMILIES = {
    "morse_general": MorseGeneral,
    "morse_nonpt": MorseNonPT,
    "morse_pt1": MorsePT1,
    "morse_pt2": MorsePT2,
    "poschl_teller": PoschlTeller,
    "poschl_teller_pt": PoschlTellerPT,
}

# key -> value kind, per family; "alpha" is optional everywhere it appears
_MODEL_KEYS = {
    "morse_general": {"v1": "complex", "v2": "complex", "alpha": "real"},
    "morse_nonpt": {"d": "real", "p": "real"},
    "morse_pt1": {"v1": "complex", "v2": "complex"},
    "morse_pt2": {"omega": "real", "d": "real", "alpha": "real"},
    "poschl_teller": {"v0": "complex", "q": "complex", "alpha": "real"},
    "poschl_teller_pt": {"v0": "real", "q": "real", "alpha": "real"},
}
_OPTIONAL_MODEL_KEYS = {"alpha"}

_GRID_KEYS = {"x_min": "real", "x_max": "real", "n_points": "int"}
_UNITS_KEYS = {"hbar": "real", "mass": "real", "e_sq": "real"}
_RUN_KEYS = {
    "mode": "str", "l": "int", "l_max": "int", "n_max": "int",
    "tol_abs": "real", "tol_imag": "real", "workers": "int",
    "scan1_param": "str", "scan1_component": "str",
    "scan1_start": "real", "scan1_stop": "real", "scan1_count": "int",
    "scan2_param": "str", "scan2_component": "str",
    "scan2_start": "real", "scan2_stop": "real", "scan2_count": "int",
}
_SCAN_FIELDS = ("param", "component", "start", "stop", "count")

_MODES = {"paper_literal": Mode.PAPER_LITERAL, "self_consistent": Mode.SELF_CONSISTENT}


def parse_complex_literal(text: str, where: str = "value") -> complex:
    """Parse `a+bi` / `a-bi` / `a` / `bi` into a finite complex number."""
    s = "".join(text.split())
    if not s:
        raise ConfigError(f"{where}: empty value")
    if "j" in s or "J" in s:
        raise ConfigError(f"{where}: imaginary unit is written 'i', got {text!r}")
    if s.endswith("i"):
        s = s[:-1] + "j"
    try:
        z = complex(s)
    except ValueError:
        raise ConfigError(f"{where}: cannot parse {text!r} as a number") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ConfigError(f"{where}: value must be finite, got {text!r}")
    return z


def _parse_real(text: str, where: str) -> float:
    z = parse_complex_literal(text, where)
    if z.imag != 0.0:
        raise ConfigError(f"{where}: expected a real number, got {text!r}")
    return float(z.real)


def _parse_int(text: str, where: str) -> int:
    try:
        return int(text.strip(), 10)
    except ValueError:
        raise ConfigError(f"{where}: expected an integer, got {text!r}") from None


@dataclass(frozen=True)
class RunConfig:
    model: PotentialModel
    grid: Grid
    units: UnitSystem
    mode: Mode
    l: int
    l_max: int
    n_max: int
    tol_abs: float
    tol_imag: float
    workers: int
    scan1: Optional[ScanAxis]
    scan2: Optional[ScanAxis]
    grid_given: bool


def default_grid(model: PotentialModel) -> Grid:
    """Family-appropriate evaluation window when the config has no [grid]."""
    n = 4000
    if isinstance(model, MorseGeneral):
        a = model.alpha
        return Grid(-3.0 / a, 30.0 / a, n)
    if isinstance(model, MorseNonPT):
        return Grid(-3.0, 30.0, n)
    if isinstance(model, MorsePT1):
        return Grid(-20.0, 20.0, n)
    if isinstance(model, MorsePT2):
        a = model.alpha
        return Grid(-20.0 / a, 20.0 / a, n)
    a = model.alpha  # rational families
    return Grid(-10.0 / a, 10.0 / a, n)


def _raw_sections(text: str) -> dict[str, dict[str, str]]:
    sections: dict[str, dict[str, str]] = {}
    current: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name not in ("model", "grid", "units", "run"):
                raise ConfigError(f"line {lineno}: unknown section [{name}]")
            if name in sections:
                raise ConfigError(f"line {lineno}: duplicate section [{name}]")
            sections[name] = {}
            current = name
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        if current is None:
            raise ConfigError(f"line {lineno}: key outside any [section]")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key:
            raise ConfigError(f"line {lineno}: missing key")
        if key in sections[current]:
            raise ConfigError(f"line {lineno}: duplicate key {key!r} in [{current}]")
        sections[current][key] = value
    return sections


def _build_model(items: dict[str, str]) -> PotentialModel:
    if "family" not in items:
        raise ConfigError("[model]: missing required key 'family'")
    family = items["family"]
    if family not in _FAMILIES:
        raise ConfigError(f"[model]: unknown family {family!r} "
                          f"(choose from {', '.join(sorted(_FAMILIES))})")
    allowed = _MODEL_KEYS[family]
    kwargs = {}
    for key, value in items.items():
        if key == "family":
            continue
        if key not in allowed:
            raise ConfigError(f"[model]: key {key!r} is not valid for family {family!r}")
        where = f"[model] {key}"
        kwargs[key] = (parse_complex_literal(value, where) if allowed[key] == "complex"
                       else _parse_real(value, where))
    missing = set(allowed) - _OPTIONAL_MODEL_KEYS - set(kwargs)
    if missing:
        raise ConfigError(f"[model]: family {family!r} requires "
                          f"{', '.join(sorted(missing))}")
    return _FAMILIES[family](**kwargs)


def _check_keys(section: str, items: dict[str, str], allowed: dict[str, str]):
    for key in items:
        if key not in allowed:
            raise ConfigError(f"[{section}]: unknown key {key!r}")


def _scan_axis(items: dict[str, str], prefix: str) -> Optional[ScanAxis]:
    present = [f for f in _SCAN_FIELDS if f"{prefix}_{f}" in items]
    if not present:
        return None
    missing = [f"{prefix}_{f}" for f in _SCAN_FIELDS if f"{prefix}_{f}" not in items]
    if missing:
        raise ConfigError(f"[run]: incomplete scan axis, missing {', '.join(missing)}")
    return ScanAxis(param=items[f"{prefix}_param"],
                    component=items[f"{prefix}_component"],
                    start=_parse_real(items[f"{prefix}_start"], f"[run] {prefix}_start"),
                    stop=_parse_real(items[f"{prefix}_stop"], f"[run] {prefix}_stop"),
                    count=_parse_int(items[f"{prefix}_count"], f"[run] {prefix}_count"))


def parse_config(text: str) -> RunConfig:
    sections = _raw_sections(text)
    if "model" not in sections:
        raise ConfigError("config must contain a [model] section")
    model = _build_model(sections["model"])

    grid_items = sections.get("grid", {})
    _check_keys("grid", grid_items, _GRID_KEYS)
    base = default_grid(model)
    grid = Grid(
        x_min=_parse_real(grid_items["x_min"], "[grid] x_min") if "x_min" in grid_items
        else base.x_min,
        x_max=_parse_real(grid_items["x_max"], "[grid] x_max") if "x_max" in grid_items
        else base.x_max,
        n_points=_parse_int(grid_items["n_points"], "[grid] n_points")
        if "n_points" in grid_items else base.n_points,
    )

    units_items = sections.get("units", {})
    _check_keys("units", units_items, _UNITS_KEYS)
    units = UnitSystem(
        hbar=_parse_real(units_items["hbar"], "[units] hbar")
        if "hbar" in units_items else 1.0,
        mass=_parse_real(units_items["mass"], "[units] mass")
        if "mass" in units_items else 0.5,
        e_sq=_parse_real(units_items["e_sq"], "[units] e_sq")
        if "e_sq" in units_items else 1.0,
    )

    run_items = sections.get("run", {})
    _check_keys("run", run_items, _RUN_KEYS)
    mode_token = run_items.get("mode", "paper_literal").replace("-", "_")
    if mode_token not in _MODES:
        raise ConfigError(f"[run]: mode must be paper_literal or self_consistent, "
                          f"got {run_items.get('mode')!r}")

    def run_int(key, default):
        return _parse_int(run_items[key], f"[run] {key}") if key in run_items else default

    def run_real(key, default):
        return _parse_real(run_items[key], f"[run] {key}") if key in run_items else default

    l = run_int("l", 0)
    l_max = run_int("l_max", 0)
    n_max = run_int("n_max", 8)
    workers = run_int("workers", 1)
    if l < 0 or l_max < 0 or n_max < 0:
        raise ConfigError("[run]: l, l_max and n_max must be non-negative")
    if workers < 1:
        raise ConfigError("[run]: workers must be >= 1")
    tol_abs = run_real("tol_abs", 1e-3)
    tol_imag = run_real("tol_imag", 1e-6)
    if tol_abs <= 0 or tol_imag <= 0:
        raise ConfigError("[run]: tolerances must be positive")

    try:
        scan1 = _scan_axis(run_items, "scan1")
        scan2 = _scan_axis(run_items, "scan2")
    except ConfigError:
        raise
    except ValueError as exc:  # ScanAxis invariant violations
        raise ConfigError(f"[run]: {exc}") from None

    return RunConfig(model=model, grid=grid, units=units, mode=_MODES[mode_token],
                     l=l, l_max=l_max, n_max=n_max, tol_abs=tol_abs,
                     tol_imag=tol_imag, workers=workers, scan1=scan1, scan2=scan2,
                     grid_given=bool(grid_items))


def load_config(path: str) -> RunConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from None
    return parse_config(text)
