"""Special functions used by the spectrum and partition-function code."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from scipy import special as _sp

B2 = Fraction(1, 6)
B4 = Fraction(-1, 30)
BERNOULLI = {2: B2, 4: B4}

# |Im z| beyond which erf(z) ~ exp(y^2) overflows a double
ERF_IM_LIMIT = 26.5


class NonterminatingSeriesError(ValueError):
    pass


def erf_complex(z):
    """Error function of a complex (or real) argument.

    Backed by the Faddeeva-function implementation in SciPy, which keeps
    relative accuracy near 1e-13 across the complex plane. Raises
    ``OverflowError`` when |Im z| is large enough for the result to leave
    the double range.
    """
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z.imag) > ERF_IM_LIMIT):
        raise OverflowError(f"erf argument outside |Im z| <= {ERF_IM_LIMIT}")
    out = _sp.erf(z)
    if not np.all(np.isfinite(out)):
        raise OverflowError("erf overflowed")
    return out if out.ndim else complex(out)


def erfi(x):
    """Imaginary error function erfi(x) = -i erf(i x), real for real x."""
    z = 1j * np.asarray(x, dtype=float)
    out = (-1j * erf_complex(z)).real
    return out if np.ndim(out) else float(out)


def _termination_degree(x: float, tol: float) -> int | None:
    k = round(-x)
    if k >= 0 and abs(x + k) <= tol:
        return k
    return None


def gauss_2f1_terminating(a: float, b: float, c: float, s, tol: float = 1e-6):
    """Polynomial 2F1(a, b; c; s) when a (or b) equals -n, n = 0, 1, 2, ...

    The series is summed with the term ratio (a+k)(b+k)/((c+k)(k+1)) s and
    stops after n + 1 terms. Since 2F1 is symmetric in a and b, whichever of
    the two is the non-positive integer terminates the series.
    """
    n = _termination_degree(a, tol)
    if n is None:
        n = _termination_degree(b, tol)
        if n is None:
            raise NonterminatingSeriesError(f"neither a={a!r} nor b={b!r} is a non-positive integer")
        a, b = b, a
    a = -float(n)
    kc = _termination_degree(c, 1e-12)
    if kc is not None:
        raise ValueError(f"c={c!r} is a non-positive integer (pole)")

    s = np.asarray(s, dtype=float)
    term = np.ones_like(s)
    total = np.ones_like(s)
    for k in range(n):
        term = term * ((a + k) * (b + k) / ((c + k) * (k + 1))) * s
        total = total + term
    return total if total.ndim else float(total)

