"""Partition function and thermodynamic / magnetic observables.

The vibrational partition function is the finite Boltzmann sum over the
bound levels n = 0..n_max, measured from the ground level:

    Z(beta) = sum_n exp(-beta (E_n - E_0)).

That direct sum is authoritative. The Euler-Maclaurin form replaces it by
1/2 f(0) + int_0^n_max f dx - f'(0)/12 + f'''(0)/720 with
f(x) = exp(-beta (E(x) - E_0)); for E(rho) = Q - phi (R/rho - rho)^2 the
integral has the closed form

    int exp(c (rho^2 + R^2/rho^2)) drho
        = sqrt(pi)/(4 sqrt(c)) [exp(2cR) erfi(sqrt(c) u) + exp(-2cR) erfi(sqrt(c) v)]

with c = beta phi, u = rho - R/rho and v = rho + R/rho, evaluated through
Dawson's function so that large arguments do not overflow.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Iterable

import numpy as np
from scipy.special import dawsn

from .numdiff import DerivativeSettings, StepCollapseError, ridders
from .special import B2, B4, erf_complex
from .spectrum import FieldConfig, Recast, Spectrum


class RecastInconsistencyError(ArithmeticError):
    pass


class EulerMaclaurinFallbackWarning(UserWarning):
    pass


class EMForm(str, Enum):
    DERIVED = "derived"  # closed form of the integral above
    LITERAL = "literal"  # the complex-square-root expression, evaluated as written


@dataclass(frozen=True)
class SpectrumRecast:
    Q: float  # eV
    R: float
    phi: float  # eV
    omega: float
    n_max: int
    bound: bool  # False when no level satisfies n + omega < sqrt(R)

    def energy(self, n):
        return Recast(self.Q, self.R, self.phi, self.omega).energy(n)

    def levels(self) -> np.ndarray:
        return np.asarray(self.energy(np.arange(self.n_max + 1)), dtype=float).reshape(-1)

    @property
    def E0(self) -> float:
        return float(self.energy(0))


def recast(s: Spectrum, m: int = 0, check_levels: int = 64) -> SpectrumRecast:
    """Q, R, phi, Omega and n_max, checked against the level energies."""
    rc = s.recast(m)
    out = SpectrumRecast(rc.Q, rc.R, rc.phi, rc.omega, rc.n_max, rc.has_bound_states)
    for n in range(min(out.n_max, check_levels) + 1):
        direct = s.energy(n, m).E
        again = out.energy(n)
        if abs(direct - again) > 1e-10 * max(1.0, abs(direct)):
            raise RecastInconsistencyError(f"n={n}: {again!r} vs {direct!r}")
    return out


def partition_direct(rec: SpectrumRecast, beta: float, allow_nonpositive: bool = False) -> float:
    if beta <= 0 and not allow_nonpositive:
        raise ValueError("beta must be positive")
    e = rec.levels()
    return float(np.sum(np.exp(-beta * (e - e[0]))))


def ln_partition_direct(rec: SpectrumRecast, beta: float, allow_nonpositive: bool = False) -> float:
    """ln Z as log1p of the excited-level sum, exact even when Z - 1 is tiny."""
    if beta <= 0 and not allow_nonpositive:
        raise ValueError("beta must be positive")
    e = rec.levels()
    return math.log1p(float(np.sum(np.exp(-beta * (e[1:] - e[0])))))


def boltzmann_moments(rec: SpectrumRecast, beta: float) -> tuple[float, float, float]:
    """Z, <E - E0> and Var(E) straight from the level list."""
    e = rec.levels()
    x = e - e[0]
    wts = np.exp(-beta * x)
    Z = float(wts.sum())
    mean = float((wts * x).sum() / Z)
    var = float((wts * (x - mean) ** 2).sum() / Z)
    return Z, mean, var


def _log_f_derivatives(rec: SpectrumRecast, beta: float, n: float) -> tuple[float, float, float]:
    # g = ln f = -beta (E - E0); E = Q - phi h^2, h = R/rho - rho
    rho = n + rec.omega
    R, phi = rec.R, rec.phi
    h = R / rho - rho
    h1 = -R / rho**2 - 1.0
    h2 = 2.0 * R / rho**3
    h3 = -6.0 * R / rho**4
    E1 = -2.0 * phi * h * h1
    E2 = -2.0 * phi * (h1 * h1 + h * h2)
    E3 = -2.0 * phi * (3.0 * h1 * h2 + h * h3)
    return -beta * E1, -beta * E2, -beta * E3


def f_derivatives(rec: SpectrumRecast, beta: float, n: float = 0.0) -> tuple[float, float]:
    """f'(n) and f'''(n) for f(x) = exp(-beta (E(x) - E0))."""
    g1, g2, g3 = _log_f_derivatives(rec, beta, n)
    f = math.exp(-beta * (float(rec.energy(n)) - rec.E0))
    return g1 * f, (g3 + 3.0 * g1 * g2 + g1**3) * f


def integral_derived(rec: SpectrumRecast, beta: float) -> complex:
    """int_0^n_max f(x) dx in closed form; complex, imaginary part ~ 0.

    erfi(a) = 2/sqrt(pi) D(a) exp(a^2) with Dawson's D keeps every factor in
    range: the exp(a^2) growth cancels against the Boltzmann prefactors.
    """
    c = beta * rec.phi
    if c <= 0:
        raise ValueError("need beta * phi > 0")
    sc = math.sqrt(c)
    R = rec.R
    r0, r1 = rec.omega, rec.omega + rec.n_max
    u0, u1 = r0 - R / r0, r1 - R / r1
    v0, v1 = r0 + R / r0, r1 + R / r1
    # f(n_max) = exp(c (u1^2 - u0^2)); both branches share it since v^2 = u^2 + 4R
    top = math.exp(c * (u1 * u1 - u0 * u0))
    t1 = dawsn(sc * u1) * top - dawsn(sc * u0)
    t2 = dawsn(sc * v1) * top - dawsn(sc * v0)
    return complex((t1 + t2) / (2.0 * sc))


def integral_literal(rec: SpectrumRecast, beta: float) -> complex:
    """The integral as the literal complex-square-root expression (unshifted).

    Kept for comparison only: its branch choices and missing ground-level
    shift make it disagree with the direct sum.
    """
    Q, R, phi, om, nm = rec.Q, rec.R, rec.phi, rec.omega, rec.n_max
    s = np.sqrt(complex(-beta * phi))
    t = np.sqrt(complex(-R * R * beta * phi))
    inner = np.sqrt(complex(-R * R * beta * phi + beta * (-Q - 2.0 * R * phi)))
    e4 = np.exp(4.0 * s * t)
    top = om + nm
    bracket = (
        -erf_complex(t / om - s * om)
        + e4 * erf_complex(t / om + s * om)
        - erf_complex(s * om + s * nm - t / top)
        - e4 * erf_complex(s * om + s * nm + t / top)
    )
    return complex(-np.exp(-2.0 * s * inner) * math.sqrt(math.pi) / (4.0 * s) * bracket)


@dataclass(frozen=True)
class EMResult:
    Z: float
    imag: float  # imaginary residue of the assembled complex expression
    fallback: bool = False


def partition_euler_maclaurin(
    rec: SpectrumRecast,
    beta: float,
    form: EMForm | str = EMForm.DERIVED,
    upper_terms: bool = False,
) -> EMResult:
    """Euler-Maclaurin estimate of the ground-shifted partition function.

    ``upper_terms`` adds the n_max endpoint corrections of the finite-range
    formula; without them the expression assumes f and its derivatives vanish
    at the top of the spectrum.
    """
    if beta <= 0:
        raise ValueError("beta must be positive")
    if rec.n_max == 0:
        warnings.warn("n_max = 0: Euler-Maclaurin range is empty, using the direct sum",
                      EulerMaclaurinFallbackWarning, stacklevel=2)
        return EMResult(partition_direct(rec, beta), 0.0, fallback=True)
    form = EMForm(form)
    if form is EMForm.DERIVED:
        integral = integral_derived(rec, beta)
    else:
        integral = np.exp(beta * rec.E0) * integral_literal(rec, beta)
    d1, d3 = f_derivatives(rec, beta, 0.0)
    c1 = float(B2) / math.factorial(2)
    c3 = float(B4) / math.factorial(4)
    z = 0.5 + integral - c1 * d1 - c3 * d3
    if upper_terms:
        top = rec.n_max
        fN = math.exp(-beta * (float(rec.energy(top)) - rec.E0))
        e1, e3 = f_derivatives(rec, beta, float(top))
        z += 0.5 * fN + c1 * e1 + c3 * e3
    return EMResult(float(z.real), float(z.imag))


# -- observables ---------------------------------------------------------------


class ZMethod(str, Enum):
    DIRECT = "direct"
    EULER_MACLAURIN = "euler-maclaurin"


@dataclass(frozen=True)
class ThermoModel:
    """A spectrum column (fixed m) and the recipe for its partition function."""

    spectrum: Spectrum
    m: int = 0
    method: ZMethod = ZMethod.DIRECT
    em_form: EMForm = EMForm.DERIVED
    upper_terms: bool = False

    def with_w(self, w: float) -> "ThermoModel":
        return replace(self, spectrum=self.spectrum.with_field(scale_field(self.spectrum.field, w)))

    def recast(self) -> SpectrumRecast:
        return recast(self.spectrum, self.m)

    def partition(self, beta: float) -> float:
        rec = self.recast()
        if ZMethod(self.method) is ZMethod.DIRECT:
            return partition_direct(rec, beta, allow_nonpositive=True)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", EulerMaclaurinFallbackWarning)
            return partition_euler_maclaurin(rec, beta, self.em_form, self.upper_terms).Z

    def ln_z(self, beta: float) -> float:
        if ZMethod(self.method) is ZMethod.DIRECT:
            return ln_partition_direct(self.recast(), beta, allow_nonpositive=True)
        return math.log(self.partition(beta))


def scale_field(f: FieldConfig, w: float) -> FieldConfig:
    """The same field configuration with the cyclotron parameter moved to ``w``.

    An explicit cross coupling z3 is proportional to w and is rescaled with it.
    """
    z3 = f.z3
    if z3 is not None:
        z3 = z3 * (w / f.w) if f.w != 0 else 0.0
    return replace(f, w=w, z3=z3)


@dataclass(frozen=True)
class ThermoPoint:
    beta: float
    field: FieldConfig
    Z: float
    F: float
    U: float
    S: float
    C: float
    M: float | None  # per unit w
    chi: float | None  # per unit w^2
    dlnz_error: float = 0.0


@dataclass(frozen=True)
class ThermoSettings:
    # beta steps are taken relative to the level spread, where ln Z varies
    beta_step: float = 0.2
    field_step: float = 1e-3
    levels: int = 6
    magnetic: bool = True

    def beta_settings(self, rec: SpectrumRecast, beta: float, positive: bool) -> tuple[DerivativeSettings, float]:
        spread = float(np.ptp(rec.levels())) if rec.n_max > 0 else 0.0
        h = self.beta_step / spread if spread > 0 else self.beta_step
        if positive:
            # the closed-form integral needs beta > 0 at every stencil point
            h = min(h, 0.5 * beta)
        return DerivativeSettings(levels=self.levels), h

    def field_settings(self, w: float) -> tuple[DerivativeSettings, float]:
        return DerivativeSettings(levels=self.levels), self.field_step * max(1.0, abs(w))


def observables(model: ThermoModel, beta: float, settings: ThermoSettings = ThermoSettings()) -> ThermoPoint:
    if beta <= 0:
        raise ValueError("beta must be positive")
    rec = model.recast()
    Z = model.partition(beta)
    lnz = math.log(Z)
    if rec.n_max == 0 and ZMethod(model.method) is ZMethod.DIRECT:
        d1 = d2 = 0.0
        err = 0.0
    else:
        # the direct sum is analytic in beta, so its stencil may cross zero
        ds, h = settings.beta_settings(rec, beta, positive=ZMethod(model.method) is not ZMethod.DIRECT)
        first = ridders(model.ln_z, beta, 1, ds, h)
        second = ridders(model.ln_z, beta, 2, ds, h)
        d1, d2, err = first.value, second.value, max(first.error, second.error)
    U = -d1
    F = -lnz / beta
    S = lnz - beta * d1
    C = beta * beta * d2
    M = chi = None
    if settings.magnetic:
        w = model.spectrum.field.w
        ds, h = settings.field_settings(w)

        def lnz_w(x: float) -> float:
            return model.with_w(x).ln_z(beta)

        try:
            M = ridders(lnz_w, w, 1, ds, h).value / beta
            chi = ridders(lnz_w, w, 2, ds, h).value / beta
        except (ArithmeticError, ValueError):
            M = chi = None
    return ThermoPoint(beta, model.spectrum.field, Z, F, U, S, C, M, chi, err)


def heat_capacity_fluctuation(rec: SpectrumRecast, beta: float) -> float:
    """C = beta^2 Var(E), the fluctuation-formula oracle for the direct sum."""
    _, _, var = boltzmann_moments(rec, beta)
    return beta * beta * var


@dataclass(frozen=True)
class SweepRow:
    x: float
    point: ThermoPoint | None
    error: str | None = None


def sweep(
    grid: Iterable[float],
    point_at: Callable[[float], tuple[ThermoModel, float]],
    settings: ThermoSettings = ThermoSettings(),
) -> list[SweepRow]:
    """Evaluate observables along a monotone grid; failures are recorded per point."""
    xs = [float(x) for x in grid]
    if len(xs) > 1:
        d = np.diff(xs)
        if not (np.all(d > 0) or np.all(d < 0)):
            raise ValueError("sweep grid must be strictly monotone")
    rows = []
    for x in xs:
        try:
            model, beta = point_at(x)
            rows.append(SweepRow(x, observables(model, beta, settings)))
        except (ArithmeticError, ValueError, OverflowError, StepCollapseError) as exc:
            rows.append(SweepRow(x, None, f"{type(exc).__name__}: {exc}"))
    return rows


def default_beta_grid(n: int = 30, lo: float = 0.1, hi: float = 5.0) -> np.ndarray:
    return np.geomspace(lo, hi, n)
