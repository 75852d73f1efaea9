import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iskp.potential import (
    PotentialParams,
    SpecialCase,
    derive_strengths,
    evaluate_expanded,
    evaluate_potential,
    reduce_special_case,
    special_case_potential,
)
from iskp.units import lookup_molecule


def h2(cbar=-1, delta=0.0):
    return PotentialParams.from_molecule(lookup_molecule("H2"), cbar, delta)


def test_strengths_cbar_minus_one():
    P = derive_strengths(h2(-1))
    assert P.P1 == 0 and P.P2 == 0


def test_h2_p4():
    assert derive_strengths(h2(0)).P4 == pytest.approx(4.7446 * 0.7416**2, rel=1e-15)
    assert derive_strengths(h2(1)).P4 == pytest.approx(2.609390, abs=1e-6)


def test_kratzer_minimum_is_minus_de():
    # unscreened cbar = -1 member: V(re) = -De, V'(re) = 0
    p = PotentialParams(De=4.7446, a=0.7416, b=0.7416**2, alpha=0.0, delta=0.0, cbar=-1)
    assert evaluate_potential(p, 0.7416) == pytest.approx(-4.7446, rel=1e-14)
    r = np.linspace(0.3, 3.0, 20001)
    assert r[np.argmin(evaluate_potential(p, r))] == pytest.approx(0.7416, abs=2e-4)


@settings(max_examples=200, deadline=None)
@given(
    De=st.floats(0.1, 10), re=st.floats(0.3, 3), alpha=st.floats(0.0, 3), delta=st.floats(0.0, 3),
    cbar=st.sampled_from([-1, 0, 1]), r=st.floats(0.05, 20),
)
def test_expansion_matches_direct_form(De, re, alpha, delta, cbar, r):
    p = PotentialParams(De, re, re * re, alpha, delta, cbar)
    assert evaluate_expanded(p, r) == pytest.approx(evaluate_potential(p, r), rel=1e-10, abs=1e-12)


def test_special_cases():
    assert reduce_special_case(PotentialParams(1, 1, 1, 0, 0, -1)) is SpecialCase.KRATZER
    assert reduce_special_case(PotentialParams(1, 1, 1, 0.5, 0, -1)) is SpecialCase.SCREENED_KRATZER
    assert reduce_special_case(PotentialParams(1, 1, 1, 0.5, 0.5, 0)) is SpecialCase.SCREENED_COSH_KRATZER
    assert reduce_special_case(PotentialParams(1, 1, 1, 0.5, 0.2, 1)) is SpecialCase.ISKP
    r = np.linspace(0.2, 8, 50)
    for p in (PotentialParams(2, 1, 1, 0, 0, -1), PotentialParams(2, 1, 1, 0.7, 0, -1), PotentialParams(2, 1, 1, 0.7, 0.7, 0)):
        np.testing.assert_allclose(special_case_potential(p, r), evaluate_potential(p, r), rtol=1e-12)
    with pytest.raises(ValueError):
        special_case_potential(PotentialParams(1, 1, 1, 0.5, 0.2, 1), 1.0)


def test_domain_and_validation():
    with pytest.raises(ValueError):
        evaluate_potential(h2(), 0.0)
    with pytest.raises(ValueError):
        PotentialParams(1, 1, 1, 1, 1, 2)
    with pytest.raises(ValueError):
        PotentialParams(1, 1, 1, -1, 0, 0)
    # no overflow far out with strong screening
    assert evaluate_potential(PotentialParams(1, 1, 1, 500, 500, 0), 50.0) == pytest.approx(-4 * (1 / 50 - 1 / 5000) * 0.5, rel=1e-12)


def test_only_screening_sum_matters():
    a = PotentialParams(3, 1, 1, 1.0, 0.5, 1)
    b = PotentialParams(3, 1, 1, 0.5, 1.0, 1)
    r = np.linspace(0.1, 10, 30)
    np.testing.assert_array_equal(evaluate_potential(a, r), evaluate_potential(b, r))
