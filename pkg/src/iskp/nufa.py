"""Nikiforov-Uvarov functional analysis (NUFA) for the parametric equation

    psi'' + (a1 - a2 s)/(s (1 - a3 s)) psi'
          + (-xi1 s^2 + xi2 s - xi3)/(s^2 (1 - a3 s)^2) psi = 0.

With psi = s^lam (1 - s)^nu f(s), f is a Gauss hypergeometric function and
the bound-state condition is a quadratic relation between lam, nu and n.
The positive square-root branch is used for both exponents, which is what
makes the solution vanish at both singular points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable


class NegativeDiscriminantError(ArithmeticError):
    """A square root in the NUFA recipe has a negative argument."""


@dataclass(frozen=True)
class NufaProblem:
    xi1: float
    xi2: float
    xi3: float
    a1: float = 1.0
    a2: float = 1.0
    a3: float = 1.0
    # Exponent of a3 under the inner root of the a, b parameters. The
    # quantization condition uses xi1/a3**2; 1 reproduces the alternative
    # printing. Irrelevant when a3 == 1.
    abc_a3_power: int = 2

    def __post_init__(self):
        if self.a3 == 0:
            raise ValueError("a3 must be nonzero")


@dataclass(frozen=True)
class NufaSolution:
    lam: float
    nu: float
    hyp_a: float
    hyp_b: float
    hyp_c: float


def _sqrt(x: float, what: str) -> float:
    if x < 0:
        raise NegativeDiscriminantError(f"{what}: discriminant {x!r} < 0")
    return math.sqrt(x)


def solve_lambda(p: NufaProblem) -> float:
    d = (1.0 - p.a1) ** 2 + 4.0 * p.xi3
    return 0.5 * (1.0 - p.a1) + 0.5 * _sqrt(d, "lambda")


def solve_nu(p: NufaProblem) -> float:
    lin = p.a3 + p.a1 * p.a3 - p.a2
    d = lin * lin + 4.0 * (p.xi1 / p.a3 + p.a3 * p.xi3 - p.xi2)
    return 0.5 * (lin + _sqrt(d, "nu"))


def _shift(p: NufaProblem, nu: float, n: int) -> float:
    return nu + p.a2 / p.a3 - 1.0 + n / math.sqrt(p.a3)


def quantization_residual(p: NufaProblem, lam: float, nu: float, n: int) -> float:
    """Left-hand side of the NUFA energy equation; zero at a bound state."""
    if n < 0:
        raise ValueError("n must be non-negative")
    t = _shift(p, nu, n)
    return lam * lam + 2.0 * lam * t + t * t - (p.a2 / p.a3 - 1.0) ** 2 - p.xi1 / p.a3**2


def hypergeometric_abc(p: NufaProblem, lam: float, nu: float) -> tuple[float, float, float]:
    ratio = p.a2 / p.a3 - 1.0
    root = _sqrt(ratio * ratio + p.xi1 / p.a3**p.abc_a3_power, "hypergeometric a, b")
    base = lam + nu + ratio
    scale = math.sqrt(p.a3)
    return scale * (base + root), scale * (base - root), p.a1 + 2.0 * lam


def solve(p: NufaProblem) -> NufaSolution:
    lam = solve_lambda(p)
    nu = solve_nu(p)
    a, b, c = hypergeometric_abc(p, lam, nu)
    return NufaSolution(lam, nu, a, b, c)


def find_energy(
    problem_at: Callable[[float], NufaProblem],
    n: int,
    lo: float,
    hi: float,
    xtol: float = 1e-13,
    maxiter: int = 400,
) -> float:
    """Bisect the energy variable for the n-th bound state.

    ``problem_at(eps)`` builds the coefficients for a trial energy. Used when
    no closed form for the root exists; the residual must change sign on
    [lo, hi].
    """

    def g(eps: float) -> float:
        p = problem_at(eps)
        return quantization_residual(p, solve_lambda(p), solve_nu(p), n)

    glo, ghi = g(lo), g(hi)
    if glo == 0:
        return lo
    if ghi == 0:
        return hi
    if (glo > 0) == (ghi > 0):
        raise ValueError("energy root is not bracketed")
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm == 0 or hi - lo < xtol * max(1.0, abs(mid)):
            return mid
        if (gm > 0) == (glo > 0):
            lo, glo = mid, gm
        else:
            hi = mid
    return 0.5 * (lo + hi)
