"""Improved screened Kratzer potential (ISKP) and its special cases.

The potential is

    V(r) = -4 De (a/r - b/(2 r^2)) (exp(-x) cosh(x) + cbar/2),   x = (alpha+delta) r / 2

with a = re and b = re^2. Expanding exp(-x) cosh(x) = (1 + exp(-2x))/2 gives
four strength constants, V = -P1/r + P2/r^2 - P3 s/r + P4 s/r^2 with
s = exp(-(alpha+delta) r).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .units import Molecule


class SpecialCase(str, Enum):
    ISKP = "ISKP"
    SCREENED_COSH_KRATZER = "ScreenedCoshKratzer"
    SCREENED_KRATZER = "ScreenedKratzer"
    KRATZER = "Kratzer"


@dataclass(frozen=True)
class PotentialParams:
    De: float  # eV
    a: float  # angstrom
    b: float  # angstrom^2
    alpha: float  # 1/angstrom
    delta: float  # 1/angstrom
    cbar: int

    def __post_init__(self):
        if self.cbar not in (-1, 0, 1):
            raise ValueError(f"cbar must be -1, 0 or 1, got {self.cbar!r}")
        if self.alpha < 0 or self.delta < 0:
            raise ValueError("screening parameters must be non-negative")
        if self.a <= 0 or self.b <= 0:
            raise ValueError("a and b must be positive")
        object.__setattr__(self, "cbar", int(self.cbar))

    @classmethod
    def from_molecule(cls, mol: Molecule, cbar: int, delta: float = 0.0) -> "PotentialParams":
        return cls(De=mol.De, a=mol.re, b=mol.re**2, alpha=mol.alpha, delta=delta, cbar=cbar)

    @property
    def screening(self) -> float:
        """alpha + delta, the only screening combination the spectrum sees."""
        return self.alpha + self.delta

    def with_(self, **changes) -> "PotentialParams":
        return replace(self, **changes)


@dataclass(frozen=True)
class StrengthConstants:
    P1: float  # eV A
    P2: float  # eV A^2
    P3: float  # eV A
    P4: float  # eV A^2


def derive_strengths(p: PotentialParams) -> StrengthConstants:
    return StrengthConstants(
        P1=2.0 * p.De * p.a * (1 + p.cbar),
        P2=p.De * p.b * (1 + p.cbar),
        P3=2.0 * p.De * p.a,
        P4=p.De * p.b,
    )


def _screening_factor(y: float, r):
    # exp(-x) cosh(x) with x = y r / 2, written so that large y r cannot overflow
    return 0.5 * (1.0 + np.exp(-y * r))


def evaluate_potential(p: PotentialParams, r):
    """V(r) in eV for r in angstrom (scalar or array)."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("potential is defined for r > 0 only")
    kratzer = p.a / r - p.b / (2.0 * r * r)
    v = -4.0 * p.De * kratzer * (_screening_factor(p.screening, r) + 0.5 * p.cbar)
    return v if v.ndim else float(v)


def evaluate_expanded(p: PotentialParams, r):
    """Same potential assembled from P1..P4; used to cross-check the expansion."""
    r = np.asarray(r, dtype=float)
    P = derive_strengths(p)
    s = np.exp(-p.screening * r)
    v = -P.P1 / r + P.P2 / r**2 - P.P3 * s / r + P.P4 * s / r**2
    return v if v.ndim else float(v)


def reduce_special_case(p: PotentialParams) -> SpecialCase:
    if p.cbar == -1 and p.alpha == 0 and p.delta == 0:
        return SpecialCase.KRATZER
    if p.cbar == -1 and p.delta == 0 and p.alpha > 0:
        return SpecialCase.SCREENED_KRATZER
    if p.cbar == 0 and p.alpha == p.delta:
        return SpecialCase.SCREENED_COSH_KRATZER
    return SpecialCase.ISKP


def special_case_potential(p: PotentialParams, r):
    """Closed form of the classified special case (raises for the generic ISKP)."""
    r = np.asarray(r, dtype=float)
    kratzer = p.a / r - p.b / (2.0 * r * r)
    case = reduce_special_case(p)
    if case is SpecialCase.KRATZER:
        v = -2.0 * p.De * kratzer
    elif case is SpecialCase.SCREENED_KRATZER:
        v = -2.0 * p.De * kratzer * np.exp(-p.alpha * r)
    elif case is SpecialCase.SCREENED_COSH_KRATZER:
        v = -4.0 * p.De * kratzer * np.exp(-p.alpha * r) * np.cosh(p.alpha * r)
    else:
        raise ValueError("generic ISKP has no simpler closed form")
    return v if v.ndim else float(v)
