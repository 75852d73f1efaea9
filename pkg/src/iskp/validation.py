"""Brute-force oracles for the closed-form spectrum.

The radial equation R'' + k (E - V_eff(r)) R = 0 (k = 2 mu / hbar^2) is
discretized with the three-point stencil on a uniform grid with Dirichlet
walls at r_min and r_max. The resulting symmetric tridiagonal matrix is
diagonalized by Sturm-sequence bisection for the lowest few eigenvalues only,
and two grid doublings are Richardson-extrapolated (the stencil error is
O(h^2)).

``V_eff`` is assembled from the coefficients of the approximated equation
(every 1/r replaced by y/(1 - s), every 1/r^2 by y^2/(1 - s)^2 with
s = exp(-y r), y = alpha + delta); the oracle never touches the closed-form
energy. An ``exact`` mode keeps the true 1/r and 1/r^2 instead, which
measures the error of that approximation rather than the algebra.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .potential import PotentialParams, derive_strengths
from .spectrum import FieldConfig, Recast, Spectrum
from .units import UnitSystem, two_mu_over_hbar2


class UnresolvedGridError(RuntimeError):
    """Eigenvalues still drift between grid doublings."""


class FDMode(str, Enum):
    APPROXIMATED = "approximated"
    EXACT = "exact"


@dataclass(frozen=True)
class RadialGrid:
    r_min: float
    r_max: float
    N: int  # interior points

    def __post_init__(self):
        if not 0 < self.r_min < self.r_max:
            raise ValueError("need 0 < r_min < r_max")
        if self.N < 3:
            raise ValueError("need at least three interior points")

    @property
    def spacing(self) -> float:
        return (self.r_max - self.r_min) / (self.N + 1)

    def points(self) -> np.ndarray:
        return self.r_min + self.spacing * np.arange(1, self.N + 1)

    def refined(self, factor: int = 2) -> "RadialGrid":
        # keeps the walls and puts factor - 1 new points inside every cell
        return RadialGrid(self.r_min, self.r_max, factor * (self.N + 1) - 1)

    @classmethod
    def for_screening(cls, y: float, N: int = 4000, r_min: float = 1e-4, extent: float = 30.0) -> "RadialGrid":
        return cls(r_min, extent / y, N)


def effective_potential(s: Spectrum, m: int, mode: FDMode = FDMode.APPROXIMATED) -> Callable[[np.ndarray], np.ndarray]:
    """V_eff(r) in eV, built from the potential strengths and field couplings."""
    p = s.params
    y = p.screening
    if y <= 0:
        raise ValueError("use kratzer_effective_potential for the unscreened case")
    k = s.k
    P = derive_strengths(p)
    f = s.field
    gamma = (m + f.xi) ** 2 - 0.25
    z1 = 2.0 * m * f.w
    z2 = f.w * f.w
    z3 = f.cross_coupling
    mode = FDMode(mode)

    def veff(r: np.ndarray) -> np.ndarray:
        x = np.exp(-y * r)
        one_minus = -np.expm1(-y * r)
        if mode is FDMode.APPROXIMATED:
            inv_r = y / one_minus
            inv_r2 = inv_r * inv_r
        else:
            inv_r = 1.0 / r
            inv_r2 = inv_r * inv_r
        pot = -P.P1 * inv_r + P.P2 * inv_r2 - P.P3 * x * inv_r + P.P4 * x * inv_r2
        # field terms: the z1 and z3 couplings carry one power of 1/r times y s/(1-s)
        ys = y * x / one_minus
        angular = gamma * inv_r2 + (-z1 + z3) * ys * inv_r + z2 * ys * ys
        return pot + angular / k

    return veff


def kratzer_effective_potential(De: float, re: float, k: float, m: int, xi: float = 0.0, cbar: int = -1):
    """Unscreened V_eff = -(P1+P3)/r + (P2+P4 + ((m+xi)^2 - 1/4)/k)/r^2."""
    P = derive_strengths(PotentialParams(De=De, a=re, b=re * re, alpha=0.0, delta=0.0, cbar=cbar))
    gamma = (m + xi) ** 2 - 0.25

    def veff(r):
        return -(P.P1 + P.P3) / r + (P.P2 + P.P4 + gamma / k) / (r * r)

    return veff


def fd_eigenvalues(veff: Callable[[np.ndarray], np.ndarray], k: float, grid: RadialGrid, count: int) -> np.ndarray:
    """Lowest ``count`` eigenvalues E (same units as V_eff) on one grid."""
    r = grid.points()
    h = grid.spacing
    diag = 2.0 / (h * h) + k * veff(r)
    off = np.full(grid.N - 1, -1.0 / (h * h))
    lam = eigh_tridiagonal(diag, off, eigvals_only=True, select="i", select_range=(0, count - 1),
                           lapack_driver="stebz")
    return np.sort(lam) / k


@dataclass(frozen=True)
class FDResult:
    energies: np.ndarray  # Richardson-extrapolated, eV
    drift: np.ndarray  # |change| between the two extrapolations, eV
    grid: RadialGrid


def fd_solve(veff, k: float, grid: RadialGrid, count: int, tol: float | None = None) -> FDResult:
    g1, g2, g3 = grid, grid.refined(), grid.refined().refined()
    e1, e2, e3 = (fd_eigenvalues(veff, k, g, count) for g in (g1, g2, g3))
    ext_a = (4.0 * e2 - e1) / 3.0
    ext_b = (4.0 * e3 - e2) / 3.0
    drift = np.abs(ext_b - ext_a)
    if tol is not None and np.any(drift > tol):
        raise UnresolvedGridError(f"eigenvalue drift {drift.max():.3e} eV exceeds {tol:.1e}")
    return FDResult(ext_b, drift, g3)


def fd_eigensolve(
    s: Spectrum,
    m: int,
    count: int,
    grid: RadialGrid | None = None,
    mode: FDMode = FDMode.APPROXIMATED,
    tol: float | None = None,
) -> FDResult:
    grid = grid or RadialGrid.for_screening(s.params.screening)
    return fd_solve(effective_potential(s, m, mode), s.k, grid, count, tol)


def fd_kratzer(De: float, re: float, units: UnitSystem, m: int, count: int, grid: RadialGrid,
               xi: float = 0.0, cbar: int = -1, mu: float = 1.0, tol: float | None = None) -> FDResult:
    k = two_mu_over_hbar2(mu, units)
    return fd_solve(kratzer_effective_potential(De, re, k, m, xi, cbar), k, grid, count, tol)


def node_count(values: np.ndarray, rel_floor: float = 1e-8) -> int:
    """Interior sign changes, ignoring samples that are numerically zero."""
    v = np.asarray(values, dtype=float)
    v = v[np.abs(v) > rel_floor * np.max(np.abs(v))]
    return int(np.sum(np.signbit(v[1:]) != np.signbit(v[:-1])))


def fd_eigenvector(veff, k: float, grid: RadialGrid, index: int) -> tuple[np.ndarray, np.ndarray]:
    r = grid.points()
    h = grid.spacing
    diag = 2.0 / (h * h) + k * veff(r)
    off = np.full(grid.N - 1, -1.0 / (h * h))
    _, vec = eigh_tridiagonal(diag, off, select="i", select_range=(index, index))
    return r, vec[:, 0]


def count_below(veff, k: float, grid: RadialGrid, threshold: float, limit: int = 200) -> int:
    """Number of FD eigenvalues below ``threshold`` (Sturm count via bisection)."""
    r = grid.points()
    h = grid.spacing
    diag = 2.0 / (h * h) + k * veff(r)
    off = np.full(grid.N - 1, -1.0 / (h * h))
    lam = eigh_tridiagonal(diag, off, eigvals_only=True, select="v",
                           select_range=(-np.inf, k * threshold), lapack_driver="stebz")
    return min(len(lam), limit)


# -- closed form vs oracle -------------------------------------------------------


@dataclass(frozen=True)
class Case:
    label: str  # molecule name or any tag
    cbar: int
    m: int
    spectrum: Spectrum
    field_label: str = "B=0,Phi=0"


@dataclass(frozen=True)
class ReportRow:
    label: str
    cbar: int
    m: int
    n: int
    field: str
    closed: float
    fd: float
    drift: float
    bound: bool

    @property
    def abs_diff(self) -> float:
        return abs(self.closed - self.fd)

    @property
    def rel_diff(self) -> float:
        return self.abs_diff / max(abs(self.fd), 1e-300)


@dataclass
class Report:
    rows: list[ReportRow] = field(default_factory=list)
    rtol: float = 1e-4

    def failures(self) -> list[ReportRow]:
        return [r for r in self.rows if not r.rel_diff <= self.rtol]

    @property
    def ok(self) -> bool:
        return not self.failures()

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["label", "cbar", "m", "n", "field", "E_closed", "E_fd", "abs_diff", "rel_diff", "fd_drift", "bound", "pass"])
        for r in self.rows:
            w.writerow([r.label, r.cbar, r.m, r.n, r.field, repr(r.closed), repr(r.fd), f"{r.abs_diff:.3e}",
                        f"{r.rel_diff:.3e}", f"{r.drift:.3e}", int(r.bound), int(r.rel_diff <= self.rtol)])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{'case':<8}{'cbar':>5}{'m':>4}{'n':>3}  {'field':<12}{'E_closed':>14}{'E_fd':>14}{'rel':>11}  status"]
        for r in self.rows:
            status = "ok" if r.rel_diff <= self.rtol else "FAIL"
            if not r.bound:
                status += " (unbound)"
            lines.append(f"{r.label:<8}{r.cbar:>5}{r.m:>4}{r.n:>3}  {r.field:<12}{r.closed:>14.6f}{r.fd:>14.6f}"
                         f"{r.rel_diff:>11.2e}  {status}")
        bad = len(self.failures())
        lines.append(f"{len(self.rows)} comparisons, {bad} outside rtol={self.rtol:g}")
        return "\n".join(lines) + "\n"


def closed_form_energies(s: Spectrum, m: int, ns: Sequence[int], omega_shift: float = 0.0) -> np.ndarray:
    rc = s.recast(m)
    if omega_shift:
        rc = Recast(rc.Q, rc.R, rc.phi, rc.omega + omega_shift)
    return np.asarray([rc.energy(n) for n in ns], dtype=float)


def verify_closed_form(
    cases: Iterable[Case],
    n_levels: int = 4,
    rtol: float = 1e-4,
    grid_points: int = 4000,
    omega_shift: float = 0.0,
) -> Report:
    """Compare the closed form with the FD oracle for each case, n < n_levels."""
    report = Report(rtol=rtol)
    ns = list(range(n_levels))
    for c in cases:
        s = c.spectrum
        grid = RadialGrid.for_screening(s.params.screening, N=grid_points)
        fd = fd_eigensolve(s, c.m, n_levels, grid)
        closed = closed_form_energies(s, c.m, ns, omega_shift)
        for n in ns:
            lvl = s.energy(n, c.m)
            report.rows.append(ReportRow(c.label, c.cbar, c.m, n, c.field_label, float(closed[n]),
                                         float(fd.energies[n]), float(fd.drift[n]), lvl.bound))
    return report


def mp_partition(levels: Sequence[float], beta: float, dps: int = 50) -> float:
    """Ground-shifted Boltzmann sum in arbitrary precision (independent re-summation)."""
    import mpmath

    with mpmath.workdps(dps):
        e = [mpmath.mpf(x) for x in levels]
        e0 = e[0]
        b = mpmath.mpf(beta)
        return float(mpmath.fsum(mpmath.exp(-b * (x - e0)) for x in e))
