"""Central differences refined by Richardson extrapolation (Ridders' tableau).

The step is shrunk by ``con`` at each level; each new central difference is
combined with the previous column to cancel successive even powers of h.
The entry with the smallest error estimate is returned, and the tableau is
abandoned once the error grows by more than ``safe`` (rounding has taken
over).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable


class StepCollapseError(ArithmeticError):
    """Richardson extrapolation did not reach the requested accuracy."""


@dataclass(frozen=True)
class DerivativeSettings:
    h0: float = 1e-3  # initial step, scaled by max(1, |x|)
    levels: int = 3  # tableau depth
    con: float = 1.4  # step reduction factor per level
    safe: float = 2.0
    rtol: float | None = None  # raise StepCollapseError beyond this relative error

    def step(self, x: float) -> float:
        return self.h0 * max(1.0, abs(x))


@dataclass(frozen=True)
class Derivative:
    value: float
    error: float
    h: float


def _central(f: Callable[[float], float], x: float, h: float, order: int, f0: float | None) -> float:
    if order == 1:
        return (f(x + h) - f(x - h)) / (2.0 * h)
    if order == 2:
        if f0 is None:
            f0 = f(x)
        return (f(x + h) - 2.0 * f0 + f(x - h)) / (h * h)
    raise ValueError("only first and second derivatives are supported")


def ridders(
    f: Callable[[float], float],
    x: float,
    order: int = 1,
    settings: DerivativeSettings = DerivativeSettings(),
    h: float | None = None,
) -> Derivative:
    h = settings.step(x) if h is None else h
    if h <= 0:
        raise ValueError("step must be positive")
    f0 = f(x) if order == 2 else None
    con2 = settings.con**2
    prev = [_central(f, x, h, order, f0)]
    best, err, best_h = prev[0], math.inf, h
    for i in range(1, settings.levels):
        h /= settings.con
        row = [_central(f, x, h, order, f0)]
        fac = con2
        for j in range(1, i + 1):
            row.append((row[j - 1] * fac - prev[j - 1]) / (fac - 1.0))
            fac *= con2
            e = max(abs(row[j] - row[j - 1]), abs(row[j] - prev[j - 1]))
            if e <= err:
                err, best, best_h = e, row[j], h
        if abs(row[i] - prev[i - 1]) >= settings.safe * err:
            break
        prev = row
    if settings.rtol is not None and err > settings.rtol * max(abs(best), 1e-300):
        raise StepCollapseError(f"derivative at x={x!r} converged only to {err:.3e}")
    return Derivative(best, err, best_h)


def derivative(f, x, order=1, settings: DerivativeSettings = DerivativeSettings(), h=None) -> float:
    return ridders(f, x, order, settings, h).value
