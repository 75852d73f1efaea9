"""Bound-state spectrum of the ISKP in a uniform magnetic field plus AB flux.

All field dependence enters through two dimensionless numbers:

* ``w``  - signed cyclotron parameter eta*B/(hbar*(alpha+delta)),
* ``xi`` - AB flux in units of the flux quantum.

With eta = -e/c and phi0 = hc/e the field couplings of the radial equation
reduce to z1 = 2 m w, z2 = w^2 and z3 = -2 xi w.

The closed-form energy is

    E(n, m) = Q - phi * ((R - (n + Omega)^2) / (n + Omega))^2

and a level is a genuine bound state only when n + Omega < sqrt(R); beyond
that the NUFA exponent lambda turns negative and the state is not
normalizable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from dataclasses import field as dc_field
from enum import Enum

import numpy as np

from . import nufa
from .potential import PotentialParams, derive_strengths
from .special import gauss_2f1_terminating
from .units import PHYSICAL, Molecule, UnitMode, UnitSystem, two_mu_over_hbar2


class ComplexOmegaError(ArithmeticError):
    pass


class DegenerateScreeningError(ValueError):
    pass


class UnknownConventionError(ValueError):
    pass


class OmegaForm(str, Enum):
    # (m + xi - w)^2 + D2 + D4 under the root, as the radial equation demands
    PHYSICAL = "physical"
    # (m + xi) - 2 m w + w^2 - 2 xi w + D2 + D4: the form behind the
    # reference energy tables (m + xi enters unsquared)
    TABLES = "tables"


DELTA_MODES = ("zero", "alpha", "equal-alpha", "re")


def resolve_delta(mode: str | float, mol: Molecule) -> float:
    """Screening parameter delta for a named convention or an explicit value."""
    if isinstance(mode, (int, float)) and not isinstance(mode, bool):
        return float(mode)
    if mode == "zero":
        return 0.0
    if mode in ("alpha", "equal-alpha"):
        return mol.alpha
    if mode == "re":
        return mol.re
    try:
        return float(mode)
    except (TypeError, ValueError):
        raise ValueError(f"unknown delta mode {mode!r}; use one of {DELTA_MODES} or a number") from None


@dataclass(frozen=True)
class FieldConfig:
    w: float = 0.0
    xi: float = 0.0
    B_raw: float | None = None
    Phi_raw: float | None = None
    convention: str | None = None
    # Explicit B-Phi cross coupling; None means the flux-quantum identity -2 xi w
    z3: float | None = None

    def __post_init__(self):
        if not (math.isfinite(self.w) and math.isfinite(self.xi)):
            raise ValueError("field parameters must be finite")
        if self.z3 is not None and not math.isfinite(self.z3):
            raise ValueError("z3 must be finite")

    @property
    def cross_coupling(self) -> float:
        return -2.0 * self.xi * self.w if self.z3 is None else self.z3

    @property
    def label(self) -> str:
        if self.convention is None:
            return "dimensionless"
        return self.convention


ZERO_FIELD = FieldConfig()

FIELD_CONVENTIONS = ("flux-quantum", "table-coupling", "dimensionless")


def field_from_raw(
    B_raw: float,
    Phi_raw: float,
    screening: float,
    convention: str = "flux-quantum",
    eta_over_hbar: float | None = None,
) -> FieldConfig:
    """Map raw field magnitudes onto (w, xi).

    ``flux-quantum``: Phi_raw is the flux in units of hc/e, so xi = Phi_raw,
    and B_raw enters as w = eta_over_hbar * B_raw / (alpha + delta). The
    constant eta_over_hbar (1/angstrom per field unit) is not fixed by the
    model; it comes from a calibration.

    ``table-coupling``: as ``flux-quantum`` for w and xi, but the B-Phi cross
    term is taken literally as (eta/hbar)^2 B Phi / ((alpha+delta) pi) with
    Phi in raw units instead of -2 xi w. This is the coupling behind the
    reference combined-field columns.

    ``dimensionless``: the raw numbers already are (w, xi).
    """
    if convention == "dimensionless":
        return FieldConfig(w=float(B_raw), xi=float(Phi_raw), B_raw=B_raw, Phi_raw=Phi_raw, convention=convention)
    if convention not in ("flux-quantum", "table-coupling"):
        raise UnknownConventionError(f"unknown field convention {convention!r}; use one of {FIELD_CONVENTIONS}")
    if B_raw != 0 and eta_over_hbar is None:
        raise ValueError("a nonzero B_raw needs the calibrated eta_over_hbar constant")
    if screening <= 0 and B_raw != 0:
        raise DegenerateScreeningError("w is undefined without screening")
    w = 0.0 if B_raw == 0 else eta_over_hbar * B_raw / screening
    z3 = None
    if convention == "table-coupling":
        z3 = 0.0 if B_raw == 0 else eta_over_hbar**2 * B_raw * Phi_raw / (screening * math.pi)
    return FieldConfig(w=w, xi=float(Phi_raw), B_raw=B_raw, Phi_raw=Phi_raw, convention=convention, z3=z3)


@dataclass(frozen=True)
class DimensionlessParams:
    d1: float
    d2: float
    d3: float
    d4: float
    z1: float
    z2: float
    z3: float
    gamma: float
    m: int
    xi: float
    w: float
    eps: float | None = None

    def with_energy(self, eps: float) -> "DimensionlessParams":
        return replace(self, eps=eps)

    def nufa_problem(self, eps: float | None = None) -> nufa.NufaProblem:
        if eps is None:
            eps = self.eps
        if eps is None:
            raise ValueError("the NUFA coefficients need an energy")
        return nufa.NufaProblem(
            xi1=eps + self.d3 + self.z2,
            xi2=2 * eps - self.d1 + self.d3 - self.d4 + self.z1 - self.z3,
            xi3=eps - self.d1 + self.d2 + self.gamma,
        )


def dimensionless_params(
    mol: Molecule | None,
    units: UnitSystem,
    p: PotentialParams,
    f: FieldConfig,
    m: int,
) -> DimensionlessParams:
    y = p.screening
    if y <= 0:
        raise DegenerateScreeningError("alpha + delta must be positive; use kratzer_limit_energy")
    k = _k(mol, units)
    P = derive_strengths(p)
    return DimensionlessParams(
        d1=k * P.P1 / y,
        d2=k * P.P2,
        d3=k * P.P3 / y,
        d4=k * P.P4,
        z1=2.0 * m * f.w,
        z2=f.w * f.w,
        z3=f.cross_coupling,
        gamma=(m + f.xi) ** 2 - 0.25,
        m=m,
        xi=f.xi,
        w=f.w,
    )


def _k(mol: Molecule | None, units: UnitSystem) -> float:
    if units.mode is UnitMode.REDUCED:
        return units.k_reduced
    if mol is None:
        raise ValueError("physical units need a molecule (reduced mass)")
    return two_mu_over_hbar2(mol, units)


def omega_radicand(d: DimensionlessParams, form: OmegaForm = OmegaForm.PHYSICAL) -> float:
    if OmegaForm(form) is OmegaForm.TABLES:
        angular = d.m + d.xi
    else:
        angular = 0.25 + d.gamma
    return angular - d.z1 + d.z2 + d.z3 + d.d4 + d.d2


def omega(d: DimensionlessParams, form: OmegaForm = OmegaForm.PHYSICAL) -> float:
    rad = omega_radicand(d, form)
    if rad < 0:
        raise ComplexOmegaError(f"Omega radicand {rad!r} < 0")
    return 0.5 + math.sqrt(rad)


def omega_completed_square(d: DimensionlessParams) -> float:
    """Omega from (m + xi - w)^2 + D2 + D4; equals ``omega`` when z3 = -2 xi w."""
    rad = (d.m + d.xi - d.w) ** 2 + d.d2 + d.d4
    if rad < 0:
        raise ComplexOmegaError(f"Omega radicand {rad!r} < 0")
    return 0.5 + math.sqrt(rad)


@dataclass(frozen=True)
class Recast:
    """E(n) = Q - phi ((R - rho^2)/rho)^2 with rho = n + omega."""

    Q: float  # eV
    R: float
    phi: float  # eV
    omega: float

    def energy(self, n):
        rho = np.asarray(n, dtype=float) + self.omega
        e = self.Q - self.phi * ((self.R - rho * rho) / rho) ** 2
        return e if e.ndim else float(e)

    @property
    def has_bound_states(self) -> bool:
        return self.R > 0 and math.sqrt(self.R) > self.omega

    @property
    def n_max(self) -> int:
        return n_max(self.R, self.omega)


def n_max(R: float, omega: float) -> int:
    """Largest n with n + omega <= sqrt(R): the turning point of E(n).

    Returns 0 when there is no bound state at all (check
    ``Recast.has_bound_states``).
    """
    if R <= 0:
        return 0
    top = math.sqrt(R) - omega
    if top <= 0:
        return 0
    return int(math.floor(top + 1e-12))


@dataclass(frozen=True)
class EnergyLevel:
    n: int
    m: int
    E: float  # eV
    omega: float
    lam: float  # NUFA exponent from the closed form; negative when unbound
    n_max: int

    @property
    def bound(self) -> bool:
        return self.lam > 0

    @property
    def physical(self) -> bool:
        return self.bound and self.n <= self.n_max


@dataclass(frozen=True)
class Spectrum:
    """A molecule in a given potential and field, ready to produce levels."""

    mol: Molecule | None
    params: PotentialParams
    field: FieldConfig = ZERO_FIELD
    units: UnitSystem = PHYSICAL
    omega_form: OmegaForm = OmegaForm.PHYSICAL
    _cache: dict = dc_field(default_factory=dict, init=False, repr=False, compare=False)

    @property
    def k(self) -> float:
        return _k(self.mol, self.units)

    def dimensionless(self, m: int) -> DimensionlessParams:
        return dimensionless_params(self.mol, self.units, self.params, self.field, m)

    def omega(self, m: int) -> float:
        return omega(self.dimensionless(m), self.omega_form)

    def recast(self, m: int) -> Recast:
        key = ("recast", m)
        if key not in self._cache:
            self._cache[key] = recast(self, m)
        return self._cache[key]

    def energy(self, n: int, m: int) -> EnergyLevel:
        return energy(self, n, m)

    def energies(self, ns, m: int) -> np.ndarray:
        return np.asarray(self.recast(m).energy(np.asarray(ns)), dtype=float)

    def with_field(self, f: FieldConfig) -> "Spectrum":
        return replace(self, field=f)

    def with_params(self, **changes) -> "Spectrum":
        return replace(self, params=self.params.with_(**changes))


def recast(s: Spectrum, m: int) -> Recast:
    d = s.dimensionless(m)
    y = s.params.screening
    k = s.k
    P = derive_strengths(s.params)
    Q = y * y / k * d.gamma - y * P.P1 + P.P2 * y * y
    R = d.d1 - d.d2 + d.d3 - d.gamma + d.z2
    phi = y * y / (4.0 * k)
    return Recast(Q=Q, R=R, phi=phi, omega=omega(d, s.omega_form))


def energy(s: Spectrum, n: int, m: int) -> EnergyLevel:
    if n < 0:
        raise ValueError("n must be non-negative")
    rc = s.recast(m)
    rho = n + rc.omega
    lam = (rc.R - rho * rho) / (2.0 * rho)
    return EnergyLevel(n=n, m=m, E=rc.energy(n), omega=rc.omega, lam=lam, n_max=rc.n_max)


def reduced_energy(s: Spectrum, E: float) -> float:
    """The dimensionless energy eps = -2 mu E / (hbar^2 (alpha+delta)^2)."""
    y = s.params.screening
    return -s.k * E / (y * y)


def kratzer_limit_energy(
    De: float,
    re: float,
    units: UnitSystem,
    n: int,
    m: int,
    f: FieldConfig = ZERO_FIELD,
    mol: Molecule | None = None,
    cbar: int = -1,
) -> EnergyLevel:
    """alpha + delta -> 0 limit of the closed-form energy.

    Only the Coulomb-like piece survives: E = -k (P1 + P3)^2 / (4 (n + Omega)^2).
    The cyclotron parameter w diverges in this limit, so only B = 0 is allowed.
    """
    if f.w != 0:
        raise ValueError("the unscreened limit is only defined at zero magnetic field")
    k = _k(mol, units)
    P = derive_strengths(PotentialParams(De=De, a=re, b=re * re, alpha=0.0, delta=0.0, cbar=cbar))
    rad = (m + f.xi) ** 2 + k * P.P2 + k * P.P4
    if rad < 0:
        raise ComplexOmegaError(f"Omega radicand {rad!r} < 0")
    om = 0.5 + math.sqrt(rad)
    rho = n + om
    E = -k * (P.P1 + P.P3) ** 2 / (4.0 * rho * rho)
    lam = k * (P.P1 + P.P3) / (2.0 * rho) if k * (P.P1 + P.P3) > 0 else 0.0
    return EnergyLevel(n=n, m=m, E=E, omega=om, lam=lam, n_max=np.iinfo(np.int64).max)


def nufa_solution(s: Spectrum, level: EnergyLevel) -> nufa.NufaSolution:
    d = s.dimensionless(level.m)
    return nufa.solve(d.nufa_problem(reduced_energy(s, level.E)))


def wavefunction(s: Spectrum, level: EnergyLevel, r) -> np.ndarray:
    """Unnormalized R_nm(r) = s^lam (1-s)^nu 2F1(a, b; c; s), s = exp(-(alpha+delta) r)."""
    if not level.bound:
        raise ValueError(f"level n={level.n}, m={level.m} is not a bound state")
    sol = nufa_solution(s, level)
    r = np.asarray(r, dtype=float)
    x = np.exp(-s.params.screening * r)
    poly = gauss_2f1_terminating(sol.hyp_a, sol.hyp_b, sol.hyp_c, x, tol=1e-6)
    # log form keeps s^lam (1-s)^nu representable for large exponents
    with np.errstate(divide="ignore"):
        log_env = sol.lam * np.log(x) + sol.nu * np.log1p(-x)
    return np.exp(log_env) * poly


def normalize_numerically(r, values) -> np.ndarray:
    """Scale sampled values so that the trapezoid integral of |R|^2 dr is 1 (extension)."""
    norm = np.sqrt(np.trapezoid(np.abs(values) ** 2, r))
    return values / norm
