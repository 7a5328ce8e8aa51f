from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlin import ccr
from hyperlin.ccr import ComplexRational as CR
from hyperlin.errors import GridAlignmentError, NotInDomainError
from hyperlin.functions import GridSpec

fractions = st.fractions(min_value=-10, max_value=10, max_denominator=8)
complex_rationals = st.builds(CR, fractions, fractions)


def brute_force_commutator(x: ccr.FiniteSupportVector, upto: int):
    """[Q, P] from the explicit truncated matrices; exact when supp(x) fits in the window."""
    pair = ccr.CounterexamplePair(upto)
    Q, P = pair.q_matrix(), pair.p_matrix()
    xs = x.dense(upto)

    def apply(M, v):
        return [sum((M[m][n] * v[n] for n in range(upto)), ccr.ZERO) for m in range(upto)]

    return [a - b for a, b in zip(apply(Q, apply(P, xs)), apply(P, apply(Q, xs)))]


def test_adjacent_difference_components():
    x = ccr.FiniteSupportVector({1: 1, 2: -1})
    assert ccr.commutator_apply(x, 4) == [ccr.I, -ccr.I, ccr.ZERO, ccr.ZERO]
    assert ccr.commutator_check(x, 4)


def test_adjacent_difference_sweep():
    assert ccr.adjacent_difference_sweep(49, 100)


def test_outside_domain_reports_constant_residual():
    with pytest.raises(NotInDomainError) as info:
        ccr.commutator_check(ccr.FiniteSupportVector.basis(1), 6)
    assert info.value.residual == [CR(0, -1)] * 6


def test_residual_scales_with_the_sum():
    x = ccr.FiniteSupportVector({2: 3, 5: CR(1, 2)})
    total = x.total()
    with pytest.raises(NotInDomainError) as info:
        ccr.commutator_check(x, 8)
    assert all(r == CR(0, -1) * total for r in info.value.residual)


def test_support_beyond_window_rejected():
    with pytest.raises(ValueError):
        ccr.commutator_check(ccr.FiniteSupportVector({3: 1, 12: -1}), 10)


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.integers(1, 12), complex_rationals, min_size=1, max_size=5))
def test_commutator_matches_matrix_oracle(entries):
    x = ccr.FiniteSupportVector(entries)
    assert ccr.commutator_apply(x, 12) == brute_force_commutator(x, 12)


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.integers(1, 15), complex_rationals, min_size=1, max_size=6))
def test_relation_holds_exactly_after_projecting_to_sum_zero(entries):
    x = ccr.FiniteSupportVector(entries)
    x = x + ccr.FiniteSupportVector({16: -x.total()})
    assert x.in_domain()
    assert ccr.commutator_check(x, 20)


def test_random_domain_vectors():
    rng = np.random.default_rng(0)
    for _ in range(50):
        x = ccr.random_domain_vector(rng, max_index=40)
        assert x.in_domain()
        assert ccr.commutator_check(x, 60)


def test_p_matrix_entries_and_symmetry():
    pair = ccr.CounterexamplePair(5)
    assert pair.p_entry(1, 2) == CR(0, 1)
    assert pair.p_entry(3, 1) == CR(0, Fraction(-1, 2))
    P = pair.p_matrix()
    for m in range(5):
        for n in range(5):
            assert P[n][m] == P[m][n].conjugate()


def test_q_spectrum_is_pure_point():
    assert ccr.CounterexamplePair(6).q_spectrum() == [1, 2, 3, 4, 5, 6]


def test_complex_rational_arithmetic():
    a, b = CR(1, 2), CR(Fraction(1, 2), -1)
    assert a * b == CR(Fraction(5, 2), 0)
    assert a - b == CR(Fraction(1, 2), 3)
    assert complex(a) == 1 + 2j


# Weyl relation


@pytest.mark.parametrize("steps", [0, 1, 37, 400])
@pytest.mark.parametrize("s", [0.0, 0.3, 1.0, 2.5])
def test_weyl_relation(steps, s):
    spec = GridSpec(20.0, 8001)
    assert ccr.weyl_relation_check(steps * spec.spacing, s, spec) <= 1e-12


def test_weyl_relation_wrong_sign_fails():
    # exp(-its) instead of exp(its) leaves a visible residual
    spec = GridSpec(20.0, 8001)
    t, s = 200 * spec.spacing, 1.0
    q = spec.x
    psi = np.exp(-(q**2) / 2).astype(complex)
    lhs = ccr.translation(ccr.phase(psi, s, q), 200)
    wrong = np.exp(-1j * t * s) * ccr.phase(ccr.translation(psi, 200), s, q)
    assert np.max(np.abs(lhs - wrong)) > 0.1


def test_weyl_alignment():
    spec = GridSpec(20.0, 8001)
    with pytest.raises(GridAlignmentError):
        ccr.weyl_relation_check(0.3 * spec.spacing, 1.0, spec)
