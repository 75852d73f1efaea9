"""One-off calibration of the conventions the energy tables leave implicit.

Two constants are not fixed by the model itself:

* the screening convention delta (only alpha is tabulated), and
* the cyclotron constant that turns a raw field magnitude B into the
  dimensionless w = (eta/hbar) B / (alpha + delta).

Both are fitted once against single reference energies and frozen in a JSON
file. The packaged ``calibration.json`` is the result of the default
procedure (delta chosen from {0, alpha}); ``calibration_reproduction.json``
is an alternative profile (delta = re with the table Omega-form) under which
the reference zero-field columns are reproduced closely.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import asdict, dataclass
from importlib import resources
from pathlib import Path

import numpy as np
from scipy.optimize import brentq

from .potential import PotentialParams
from .spectrum import (
    ComplexOmegaError,
    FieldConfig,
    OmegaForm,
    Spectrum,
    field_from_raw,
    resolve_delta,
)
from .units import PHYSICAL, Molecule, UnitSystem, lookup_molecule

# reference entries: H2, cbar = -1, n = 0, m = 0
DELTA_REFERENCE = -0.013053  # eV, zero fields
FIELD_REFERENCE = -0.013854  # eV, B = 2, Phi = 0
FIELD_REFERENCE_B = 2.0

PROFILES = {"default": "calibration.json", "reproduction": "calibration_reproduction.json"}


class CalibrationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Calibration:
    delta_mode: str | float = "zero"
    omega_form: str = "physical"
    field_convention: str = "flux-quantum"
    eta_over_hbar: float | None = None  # 1/angstrom per raw field unit
    w_star: float | None = None  # w of the reference molecule at B = 2
    note: str = ""

    def delta_for(self, mol: Molecule) -> float:
        return resolve_delta(self.delta_mode, mol)

    def params(self, mol: Molecule, cbar: int) -> PotentialParams:
        return PotentialParams.from_molecule(mol, cbar, self.delta_for(mol))

    def spectrum(self, mol: Molecule, cbar: int, field: FieldConfig | None = None,
                 units: UnitSystem = PHYSICAL) -> Spectrum:
        return Spectrum(mol, self.params(mol, cbar), field or FieldConfig(), units, OmegaForm(self.omega_form))

    def field(self, mol: Molecule, B_raw: float, Phi_raw: float) -> FieldConfig:
        return field_from_raw(B_raw, Phi_raw, mol.alpha + self.delta_for(mol), self.field_convention, self.eta_over_hbar)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Calibration":
        raw = json.loads(text)
        known = {k: raw[k] for k in ("delta_mode", "omega_form", "field_convention", "eta_over_hbar", "w_star", "note") if k in raw}
        cal = cls(**known)
        OmegaForm(cal.omega_form)  # validate
        return cal

    @classmethod
    def load(cls, path: str | os.PathLike) -> "Calibration":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))

    def save(self, path: str | os.PathLike) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")


def load_profile(name_or_path: str = "default") -> Calibration:
    """A packaged profile by name, or a calibration file by path."""
    if name_or_path in PROFILES:
        text = resources.files("iskp").joinpath("data/" + PROFILES[name_or_path]).read_text("utf-8")
        return Calibration.from_json(text)
    return Calibration.load(name_or_path)


def calibrate_delta(
    candidates=("zero", "alpha"),
    target: float = DELTA_REFERENCE,
    mol: Molecule | None = None,
    omega_form: str = "physical",
) -> tuple[str, dict]:
    """Pick the delta convention whose H2 (cbar = -1) ground level is closest to ``target``.

    Returns the winning mode and the residual for every candidate.
    """
    mol = mol or lookup_molecule("H2")
    residuals = {}
    for mode in candidates:
        s = Spectrum(mol, PotentialParams.from_molecule(mol, -1, resolve_delta(mode, mol)),
                     omega_form=OmegaForm(omega_form))
        residuals[mode] = s.energy(0, 0).E - target
    best = min(residuals, key=lambda k: abs(residuals[k]))
    return best, residuals


def solve_w(spectrum: Spectrum, target: float, n: int = 0, m: int = 0, w_max: float = 1e4) -> list[float]:
    """All roots w of E_nm(w) = target on [-w_max, w_max] (sign-change scan + Brent)."""

    def g(w: float) -> float:
        try:
            return spectrum.with_field(FieldConfig(w=w, xi=spectrum.field.xi)).energy(n, m).E - target
        except ComplexOmegaError:
            return math.nan

    # log-spaced magnitudes on both sides resolve roots from 1e-3 up to w_max
    mags = np.geomspace(1e-3, w_max, 4000)
    grid = np.concatenate([-mags[::-1], [0.0], mags])
    vals = np.array([g(w) for w in grid])
    roots = []
    for i in range(len(grid) - 1):
        a, b = vals[i], vals[i + 1]
        if not (np.isfinite(a) and np.isfinite(b)):
            continue
        if a == 0:
            roots.append(float(grid[i]))
        elif a * b < 0:
            roots.append(brentq(g, grid[i], grid[i + 1], xtol=1e-14, rtol=1e-14))
    return roots


def calibrate_field(
    delta_mode: str | float,
    omega_form: str = "physical",
    target: float = FIELD_REFERENCE,
    B_raw: float = FIELD_REFERENCE_B,
    mol: Molecule | None = None,
    prefer=None,
) -> tuple[float, float, list[float]]:
    """Fit w* at (H2, cbar=-1, n=0, m=0, B_raw, Phi=0) and the matching eta/hbar.

    The m = 0 entry is even in w, so roots come in +/- pairs. ``prefer`` is a
    callable scoring a candidate w (lower is better) used to break that tie;
    without it the negative root of smallest magnitude is returned.
    """
    mol = mol or lookup_molecule("H2")
    p = PotentialParams.from_molecule(mol, -1, resolve_delta(delta_mode, mol))
    s = Spectrum(mol, p, omega_form=OmegaForm(omega_form))
    roots = solve_w(s, target)
    if not roots:
        raise CalibrationError(f"no w reproduces {target} eV for delta mode {delta_mode!r}")
    if prefer is not None:
        w = min(roots, key=prefer)
    else:
        w = min(roots, key=lambda r: (r > 0, abs(r)))
    return w, w * p.screening / B_raw, roots


def run_calibration(
    delta_candidates=("zero", "alpha"),
    omega_form: str = "physical",
    field_convention: str = "flux-quantum",
) -> Calibration:
    """Fit delta, then w*, and bundle the result (the field fit may fail)."""
    mode, residuals = calibrate_delta(delta_candidates, omega_form=omega_form)
    note = "delta residuals (eV): " + ", ".join(f"{k}={v:+.6f}" for k, v in residuals.items())
    try:
        w, eta, _ = calibrate_field(mode, omega_form)
    except CalibrationError as exc:
        return Calibration(mode, omega_form, field_convention, note=note + "; field: " + str(exc))
    return Calibration(mode, omega_form, field_convention, eta_over_hbar=eta, w_star=w, note=note)
