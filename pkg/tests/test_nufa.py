import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iskp import nufa
from iskp.calibration import load_profile
from iskp.spectrum import FieldConfig, reduced_energy
from iskp.units import lookup_molecule


def test_lambda_nu_closed_forms():
    p = nufa.NufaProblem(xi1=30.0, xi2=12.0, xi3=4.0)
    assert nufa.solve_lambda(p) == pytest.approx(2.0)
    # a1 = a2 = a3 = 1: nu = 1/2 + sqrt(1/4 + xi1 + xi3 - xi2)
    assert nufa.solve_nu(p) == pytest.approx(0.5 + math.sqrt(0.25 + 30 + 4 - 12))


def test_negative_discriminant():
    with pytest.raises(nufa.NegativeDiscriminantError):
        nufa.solve_lambda(nufa.NufaProblem(1.0, 0.0, -1.0))
    with pytest.raises(nufa.NegativeDiscriminantError):
        nufa.solve_nu(nufa.NufaProblem(0.0, 10.0, 0.0))
    with pytest.raises(ValueError):
        nufa.NufaProblem(1, 1, 1, a3=0)


def test_residual_rejects_negative_n():
    with pytest.raises(ValueError):
        nufa.quantization_residual(nufa.NufaProblem(1, 1, 1), 1.0, 1.0, -1)


@settings(max_examples=100, deadline=None)
@given(lam=st.floats(0.01, 20), nu=st.floats(0.5, 20), n=st.integers(0, 8))
def test_constructed_bound_state_terminates(lam, nu, n):
    # choose xi's so that (lam, nu, n) is an exact solution with a1 = a2 = a3 = 1
    xi3 = lam * lam
    xi1 = (lam + nu + n) ** 2
    xi2 = xi1 + xi3 - nu * (nu - 1)
    p = nufa.NufaProblem(xi1, xi2, xi3)
    sol = nufa.solve(p)
    assert sol.lam == pytest.approx(lam, rel=1e-9)
    assert sol.nu == pytest.approx(nu, rel=1e-9)
    assert nufa.quantization_residual(p, sol.lam, sol.nu, n) == pytest.approx(0.0, abs=1e-8 * xi1)
    assert sol.hyp_b == pytest.approx(-n, abs=1e-6)
    assert sol.hyp_c == pytest.approx(1 + 2 * lam)


def test_abc_power_only_matters_off_unit_a3():
    base = dict(xi1=5.0, xi2=2.0, xi3=1.0)
    a = nufa.hypergeometric_abc(nufa.NufaProblem(**base), 1.0, 2.0)
    b = nufa.hypergeometric_abc(nufa.NufaProblem(**base, abc_a3_power=1), 1.0, 2.0)
    assert a == b
    c = nufa.hypergeometric_abc(nufa.NufaProblem(**base, a3=2.0, abc_a3_power=1), 1.0, 2.0)
    d = nufa.hypergeometric_abc(nufa.NufaProblem(**base, a3=2.0), 1.0, 2.0)
    assert c != d


def bound_spectrum():
    cal = load_profile("default")
    return cal.spectrum(lookup_molecule("H2"), -1, FieldConfig(w=0.5, xi=0.3))


@pytest.mark.parametrize("m", [0, 1, -2])
def test_closed_form_energies_zero_the_residual(m):
    s = bound_spectrum()
    checked = 0
    for n in range(8):
        lvl = s.energy(n, m)
        if not lvl.bound:
            continue
        p = s.dimensionless(m).nufa_problem(reduced_energy(s, lvl.E))
        sol = nufa.solve(p)
        assert abs(nufa.quantization_residual(p, sol.lam, sol.nu, n)) <= 1e-9
        assert sol.hyp_b == pytest.approx(-n, abs=1e-9)
        checked += 1
    assert checked >= 3


def test_bisection_recovers_closed_form():
    s = bound_spectrum()
    d = s.dimensionless(0)
    for n in range(3):
        eps = nufa.find_energy(d.nufa_problem, n, lo=d.d1 - d.d2 - d.gamma + 1e-9, hi=1e4)
        assert eps == pytest.approx(reduced_energy(s, s.energy(n, 0).E), rel=1e-10)


def test_bisection_needs_bracket():
    with pytest.raises(ValueError):
        nufa.find_energy(lambda e: nufa.NufaProblem(e + 10, 0.0, e + 1), 0, 0.0, 1.0)
