"""Command-line front end: ``iskp energy | table | thermo | validate | calibrate``.

Every option can also come from a JSON file given with ``--config``; keys are
the long option names with dashes replaced by underscores. Flags given on the
command line win over the file.

Exit codes: 0 success, 1 validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from pathlib import Path

import numpy as np

from . import __version__
from .calibration import Calibration, CalibrationError, load_profile, run_calibration
from .potential import PotentialParams
from .spectrum import (
    ComplexOmegaError,
    DegenerateScreeningError,
    FieldConfig,
    OmegaForm,
    Spectrum,
    UnknownConventionError,
    kratzer_limit_energy,
)
from .tables import (
    COLUMN_LABELS,
    ENERGY_TABLES,
    FIELD_COLUMNS,
    KRATZER_DE,
    KRATZER_RE,
    TABLE_11,
    TABLE_12,
    TABLE_12_COLUMNS,
)
from .thermo import (
    EulerMaclaurinFallbackWarning,
    ThermoModel,
    ThermoSettings,
    ZMethod,
    default_beta_grid,
    partition_direct,
    partition_euler_maclaurin,
    recast,
    sweep,
)
from .units import UnitSystem, UnknownMoleculeError, default_database
from .validation import Case, verify_closed_form

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# Kratzer comparison: 2 mu / hbar^2 = 1/4 and energies measured from the well bottom
KRATZER_K = 0.25


class UsageError(Exception):
    pass


# -- configuration ---------------------------------------------------------------


def _parse_int_list(text) -> list[int]:
    """'0..3' -> [0, 1, 2, 3]; '0,2,-1' -> [0, 2, -1]; ints and lists pass through."""
    if isinstance(text, int):
        return [text]
    if isinstance(text, list):
        return [int(x) for x in text]
    out: list[int] = []
    for part in str(text).split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            a, b = int(lo), int(hi)
            step = 1 if b >= a else -1
            out.extend(range(a, b + step, step))
        elif part:
            out.append(int(part))
    return out


def _parse_grid(text, log: bool) -> np.ndarray:
    """'lo:hi:n' (n points, log-spaced for beta) or a comma list of values."""
    if isinstance(text, list):
        return np.asarray([float(x) for x in text])
    text = str(text).strip()
    if not text:
        return np.asarray([], dtype=float)
    if ":" in text:
        lo, hi, n = text.split(":")
        n = int(n)
        if n == 0:
            return np.asarray([], dtype=float)
        return np.geomspace(float(lo), float(hi), n) if log else np.linspace(float(lo), float(hi), n)
    return np.asarray([float(x) for x in text.split(",")])


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    if not isinstance(raw, dict):
        raise UsageError(f"{path}: top level must be an object")
    return {k.replace("-", "_"): v for k, v in raw.items()}


def _merge(args: argparse.Namespace, defaults: dict) -> argparse.Namespace:
    cfg = _load_config(getattr(args, "config", None))
    known = set(vars(args)) | set(defaults)
    unknown = set(cfg) - known
    if unknown:
        raise UsageError(f"unknown config field(s): {', '.join(sorted(unknown))}")
    merged = dict(defaults)
    merged.update(cfg)
    merged.update({k: v for k, v in vars(args).items() if v is not None})
    return argparse.Namespace(**merged)


def _calibration(cfg) -> Calibration:
    if cfg.no_calibration:
        cal = Calibration(delta_mode="zero", omega_form="physical")
    else:
        try:
            cal = load_profile(cfg.calibration)
        except (OSError, ValueError, TypeError) as exc:
            raise UsageError(f"cannot load calibration {cfg.calibration!r}: {exc}") from None
    changes = {}
    if cfg.delta_mode is not None:
        changes["delta_mode"] = cfg.delta_mode
    if cfg.omega_form is not None:
        changes["omega_form"] = cfg.omega_form
    if cfg.eta_over_hbar is not None:
        changes["eta_over_hbar"] = float(cfg.eta_over_hbar)
    if cfg.field_convention is not None:
        changes["field_convention"] = cfg.field_convention
    if changes:
        cal = Calibration(**{**cal.__dict__, **changes})
    try:
        OmegaForm(cal.omega_form)
    except ValueError:
        raise UsageError(f"unknown omega form {cal.omega_form!r}") from None
    return cal


def _molecule(name: str):
    try:
        return default_database()[name]
    except UnknownMoleculeError as exc:
        raise UsageError(exc.args[0]) from None


def _field(cfg, cal: Calibration, mol) -> FieldConfig:
    dimensionless = cfg.w is not None or cfg.xi is not None
    raw = cfg.B is not None or cfg.Phi is not None
    if dimensionless and raw:
        raise UsageError("give the field either as --w/--xi or as --B/--Phi, not both")
    if raw:
        B = float(cfg.B or 0.0)
        Phi = float(cfg.Phi or 0.0)
        if B != 0 and cal.eta_over_hbar is None:
            raise UsageError("B != 0 needs a calibrated field constant (run 'iskp calibrate' or pass --eta-over-hbar)")
        try:
            return cal.field(mol, B, Phi)
        except (UnknownConventionError, DegenerateScreeningError) as exc:
            raise UsageError(str(exc)) from None
    return FieldConfig(w=float(cfg.w or 0.0), xi=float(cfg.xi or 0.0))


def _cbar(value) -> int:
    c = int(value)
    if c not in (-1, 0, 1):
        raise UsageError(f"cbar must be -1, 0 or 1, got {value!r}")
    return c


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _num(x) -> str:
    """Shortest round-tripping representation (empty for missing values)."""
    if x is None or (isinstance(x, float) and not math.isfinite(x)):
        return ""
    return repr(float(x))


# -- energy ----------------------------------------------------------------------


def cmd_energy(cfg) -> int:
    cal = _calibration(cfg)
    mol = _molecule(cfg.molecule)
    cbar = _cbar(cfg.cbar)
    f = _field(cfg, cal, mol)
    s = cal.spectrum(mol, cbar, f)
    rows = []
    for m in _parse_int_list(cfg.m):
        for n in _parse_int_list(cfg.n):
            if n < 0:
                raise UsageError("n must be non-negative")
            try:
                lvl = s.energy(n, m)
            except ComplexOmegaError as exc:
                raise UsageError(f"m={m}: {exc}") from None
            rows.append([mol.name, cbar, m, n, f"{lvl.omega:.6f}", f"{lvl.E:.6f}", int(lvl.bound)])
    if cfg.format == "text":
        out = [f"# {mol.name} cbar={cbar} w={f.w:g} xi={f.xi:g} delta={cal.delta_for(mol):g}"]
        out.append(f"{'m':>3}{'n':>3}{'Omega':>14}{'E/eV':>14}  bound")
        out += [f"{r[2]:>3}{r[3]:>3}{r[4]:>14}{r[5]:>14}  {'yes' if r[6] else 'no'}" for r in rows]
        _emit("\n".join(out) + "\n", cfg.output)
    else:
        _emit(_csv(rows, ["molecule", "cbar", "m", "n", "omega", "E_eV", "bound"]), cfg.output)
    return EXIT_OK


# -- tables ----------------------------------------------------------------------


def _energy_table(cfg, number: int, cal: Calibration):
    tab = ENERGY_TABLES[number]
    mol = _molecule(tab.molecule)
    header = ["m", "n"] + list(COLUMN_LABELS)
    if cfg.diff:
        header += [f"ref {c}" for c in COLUMN_LABELS]
    rows, worst = [], {}
    for row in tab.rows:
        m, n, refs = row[0], row[1], row[2:]
        out = [m, n]
        vals = []
        for i, (B, Phi) in enumerate(FIELD_COLUMNS):
            if B != 0 and cal.eta_over_hbar is None:
                raise CalibrationError("field constant not calibrated; B = 2 columns need it")
            s = cal.spectrum(mol, tab.cbar, cal.field(mol, B, Phi))
            e = s.energy(n, m).E
            vals.append(e)
            worst[i] = max(worst.get(i, 0.0), abs(e - refs[i]))
        out += [f"{v:.6f}" for v in vals]
        if cfg.diff:
            out += [f"{v:.6f}" for v in refs]
        rows.append(out)
    return header, rows, [(COLUMN_LABELS[i], worst[i]) for i in sorted(worst)]


def _table_11(cfg):
    units = UnitSystem.reduced(KRATZER_K)
    header = ["n", "E", "abs_E_from_well_bottom"]
    if cfg.diff:
        header += ["ref_present", "ref_literature"]
    rows, worst = [], 0.0
    for n, (present, lit) in enumerate(TABLE_11):
        e = kratzer_limit_energy(KRATZER_DE, KRATZER_RE, units, n, 0).E
        mag = abs(e + KRATZER_DE)
        worst = max(worst, abs(mag / present - 1.0))
        row = [n, f"{e:.8f}", f"{mag:.5f}"]
        if cfg.diff:
            row += [f"{present:.5f}", f"{lit:.8f}"]
        rows.append(row)
    return header, rows, [("relative", worst)]


def _table_12(cfg, cal: Calibration):
    # exploratory: the parameters behind the reference column are not stated
    mol = _molecule("H2")
    s = cal.spectrum(mol, -1)
    header = ["n", "E", "E_minus_E0"] + list(TABLE_12_COLUMNS)
    e0 = s.energy(0, 0).E
    rows = []
    for n, refs in enumerate(TABLE_12):
        e = s.energy(n, 0).E
        rows.append([n, f"{e:.9f}", f"{e - e0:.9f}"] + ["" if r is None else repr(r) for r in refs])
    return header, rows, []


def cmd_table(cfg) -> int:
    number = int(cfg.table_id)
    if number not in range(2, 13):
        raise UsageError(f"table id must be 2..12, got {number}")
    cal = _calibration(cfg)
    if number in ENERGY_TABLES:
        header, rows, diffs = _energy_table(cfg, number, cal)
    elif number == 11:
        header, rows, diffs = _table_11(cfg)
    else:
        header, rows, diffs = _table_12(cfg, cal)
    _emit(_csv(rows, header), cfg.output)
    if cfg.diff:
        for label, d in diffs:
            print(f"max |diff| {label}: {d:.3e}", file=sys.stderr)
    return EXIT_OK


# -- thermo ----------------------------------------------------------------------

THERMO_HEADER = ["x", "molecule", "cbar", "Z", "F", "U", "S", "C", "M", "chi"]


def cmd_thermo(cfg) -> int:
    cal = _calibration(cfg)
    var = cfg.sweep
    if var not in ("beta", "B", "Phi"):
        raise UsageError("--sweep must be beta, B or Phi")
    grid = _parse_grid(cfg.grid if cfg.grid is not None else ("0.1:5:30" if var == "beta" else "0:2:21"), var == "beta")
    cbar = _cbar(cfg.cbar)
    m = int(cfg.m if not isinstance(cfg.m, str) else _parse_int_list(cfg.m)[0])
    mols = [_molecule(x) for x in (cfg.molecule if isinstance(cfg.molecule, list) else str(cfg.molecule).split(","))]
    method = ZMethod(cfg.method)
    settings = ThermoSettings(magnetic=not cfg.no_magnetic)
    rows, notes = [], []
    for mol in mols:
        def point_at(x, mol=mol):
            B = float(cfg.B or 0.0)
            Phi = float(cfg.Phi or 0.0)
            beta = float(cfg.beta)
            if var == "beta":
                beta = x
            elif var == "B":
                B = x
            else:
                Phi = x
            if B != 0 and cal.eta_over_hbar is None:
                raise CalibrationError("field constant not calibrated")
            s = cal.spectrum(mol, cbar, cal.field(mol, B, Phi))
            return ThermoModel(s, m, method, upper_terms=cfg.upper_terms), beta

        with warnings.catch_warnings():
            warnings.simplefilter("ignore", EulerMaclaurinFallbackWarning)
            results = sweep(grid, point_at, settings)
        for r in results:
            p = r.point
            if p is None:
                rows.append([_num(r.x), mol.name, cbar] + [""] * 7)
                notes.append(f"{mol.name} x={r.x!r}: {r.error}")
            else:
                rows.append([_num(r.x), mol.name, cbar] + [_num(v) for v in (p.Z, p.F, p.U, p.S, p.C, p.M, p.chi)])
    _emit(_csv(rows, THERMO_HEADER), cfg.output)
    for note in notes:
        print(f"warning: {note}", file=sys.stderr)
    return EXIT_OK


# -- validate / calibrate --------------------------------------------------------


def validation_cases(cal: Calibration, molecules=("H2", "HCl", "LiH"), cbars=(-1, 0, 1), ms=(0, 1, -1)):
    for name in molecules:
        mol = _molecule(name)
        for c in cbars:
            for m in ms:
                yield Case(mol.name, c, m, cal.spectrum(mol, c))


def cmd_validate(cfg) -> int:
    cal = _calibration(cfg)
    rtol = float(cfg.rtol)
    print(f"calibration: delta={cal.delta_mode!r} omega-form={cal.omega_form} "
          f"field={cal.field_convention} eta/hbar={cal.eta_over_hbar!r} w*={cal.w_star!r}")
    cases = [] if cfg.scope == "none" else list(validation_cases(cal))
    report = verify_closed_form(cases, rtol=rtol, omega_shift=float(cfg.inject_omega_shift))
    if not cfg.strict:
        report.rows = [r for r in report.rows if r.bound]
    print(report.to_text(), end="")
    if cfg.report:
        Path(cfg.report).write_text(report.to_csv(), encoding="utf-8")
    ok = report.ok

    # Euler-Maclaurin vs direct sum, m = 0, beta in [0.5, 5]
    em_rtol = float(cfg.em_rtol)
    worst = 0.0
    if cfg.scope != "none":
        for name in ("H2", "HCl", "LiH"):
            mol = _molecule(name)
            for c in (-1, 0, 1):
                rec = recast(cal.spectrum(mol, c), 0)
                for beta in np.linspace(0.5, 5.0, 30):
                    zd = partition_direct(rec, beta)
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore", EulerMaclaurinFallbackWarning)
                        em = partition_euler_maclaurin(rec, beta, upper_terms=not cfg.strict)
                    worst = max(worst, abs(em.Z / zd - 1.0))
    em_ok = worst <= em_rtol
    print(f"Euler-Maclaurin vs direct sum: max rel dev {worst:.3e} (tol {em_rtol:g}) {'ok' if em_ok else 'FAIL'}")
    return EXIT_OK if ok and em_ok else EXIT_FAIL


def cmd_calibrate(cfg) -> int:
    candidates = tuple(cfg.candidates.split(","))
    cal = run_calibration(candidates, cfg.omega_form or "physical", cfg.field_convention or "flux-quantum")
    text = cal.to_json()
    _emit(text, cfg.output)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON file with option values (flags override it)")
    p.add_argument("--calibration", help="profile name (default, reproduction) or calibration JSON path")
    p.add_argument("--no-calibration", action="store_const", const=True,
                   help="ignore calibration files; delta = 0 unless --delta-mode is given")
    p.add_argument("--delta-mode", help="zero, alpha, re, or a number in 1/angstrom")
    p.add_argument("--omega-form", choices=[f.value for f in OmegaForm])
    p.add_argument("--field-convention", choices=["flux-quantum", "table-coupling", "dimensionless"])
    p.add_argument("--eta-over-hbar", type=float, help="field constant (1/angstrom per field unit)")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")


def _field_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--w", type=float, help="dimensionless cyclotron parameter")
    p.add_argument("--xi", type=float, help="AB flux in flux quanta")
    p.add_argument("--B", type=float, help="raw magnetic field (converted via calibration)")
    p.add_argument("--Phi", type=float, help="raw AB flux")


COMMON_DEFAULTS = dict(config=None, calibration="default", no_calibration=False, delta_mode=None, omega_form=None,
                       field_convention=None, eta_over_hbar=None, output=None, w=None, xi=None, B=None, Phi=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="iskp", description="Screened Kratzer spectra and thermodynamics in magnetic and AB fields")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("energy", help="bound-state energies E_nm")
    _common(p)
    _field_flags(p)
    p.add_argument("--molecule")
    p.add_argument("--cbar", type=int)
    p.add_argument("--n", help="levels, e.g. 0..3 or 0,2")
    p.add_argument("--m", help="magnetic quantum numbers, e.g. 0 or -1..1")
    p.add_argument("--format", choices=["csv", "text"])
    p.set_defaults(func=cmd_energy, defaults=dict(COMMON_DEFAULTS, molecule="H2", cbar=-1, n="0..3", m="0", format="csv"))

    p = sub.add_parser("table", help="regenerate one of the reference tables (2..12) as CSV")
    _common(p)
    p.add_argument("table_id", type=int)
    p.add_argument("--diff", action="store_const", const=True, help="add fixture columns and report max deviation")
    p.set_defaults(func=cmd_table, defaults=dict(COMMON_DEFAULTS, diff=False))

    p = sub.add_parser("thermo", help="thermodynamic sweep over beta, B or Phi")
    _common(p)
    p.add_argument("--sweep", help="beta, B or Phi")
    p.add_argument("--grid", help="lo:hi:n (log-spaced for beta) or comma list")
    p.add_argument("--molecule", help="comma list of molecules")
    p.add_argument("--cbar", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--beta", type=float, help="fixed beta (1/eV) for field sweeps")
    p.add_argument("--B", type=float, help="fixed raw field for beta/Phi sweeps")
    p.add_argument("--Phi", type=float, help="fixed raw flux for beta/B sweeps")
    p.add_argument("--method", choices=[z.value for z in ZMethod])
    p.add_argument("--upper-terms", action="store_const", const=True,
                   help="include the top-of-spectrum Euler-Maclaurin corrections")
    p.add_argument("--no-magnetic", action="store_const", const=True, help="skip M and chi")
    p.set_defaults(func=cmd_thermo, defaults=dict(COMMON_DEFAULTS, sweep="beta", grid=None, molecule="H2,HCl,LiH",
                                                   cbar=-1, m=0, beta=1.0, method="direct", upper_terms=False,
                                                   no_magnetic=False))

    p = sub.add_parser("validate", help="closed form vs finite-difference oracle, Euler-Maclaurin vs direct sum")
    _common(p)
    p.add_argument("--rtol", type=float, help="relative tolerance for closed form vs oracle")
    p.add_argument("--em-rtol", type=float, help="relative tolerance for Euler-Maclaurin vs direct sum")
    p.add_argument("--scope", choices=["zero-field", "none"])
    p.add_argument("--strict", action="store_const", const=True,
                   help="also compare unbound levels and use the lower-endpoint-only Euler-Maclaurin sum")
    p.add_argument("--report", help="write the comparison as CSV to this path")
    p.add_argument("--inject-omega-shift", type=float, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_validate, defaults=dict(COMMON_DEFAULTS, rtol=1e-4, em_rtol=0.02, scope="zero-field",
                                                     strict=False, report=None, inject_omega_shift=0.0))

    p = sub.add_parser("calibrate", help="rerun the delta / field calibration and print the JSON")
    _common(p)
    p.add_argument("--candidates", help="comma list of delta modes to choose from")
    p.set_defaults(func=cmd_calibrate, defaults=dict(COMMON_DEFAULTS, candidates="zero,alpha"))
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    func = args.func
    defaults = args.defaults
    ns = argparse.Namespace(**{k: v for k, v in vars(args).items() if k not in ("func", "defaults", "command")})
    try:
        cfg = _merge(ns, defaults)
        return func(cfg)
    except UsageError as exc:
        print(f"iskp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CalibrationError as exc:
        print(f"iskp: calibration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, TypeError) as exc:
        print(f"iskp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
