import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import expm

from hyperlin import linalg as la
from hyperlin.algebra import HyperbolicNumber as H
from hyperlin.errors import DimensionMismatchError, LightConeError, NotSelfAdjointError
from hyperlin.suites import _zero_sets_agree, grid_scan_zeros

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
hyper = st.builds(H, fractions, fractions)
small = st.floats(min_value=-5, max_value=5, allow_nan=False)


def real_form(A: la.GMatrix) -> np.ndarray:
    """G acts on R^2 as [[x, y], [y, x]]; a G-matrix becomes a 2n x 2n real block matrix."""
    ar, ah = A.re.astype(float), A.hy.astype(float)
    return np.block([[ar, ah], [ah, ar]])


def test_inner_product_example():
    x = la.GVector([H(1, 1), H(0, 1)])
    y = la.GVector([H(1, 0), H(1, 0)])
    # conj(1+j)*1 + conj(j)*1 = (1-j) + (-j)
    assert la.inner_product(x, y) == H(1, -2)


@given(st.lists(hyper, min_size=1, max_size=6))
def test_self_inner_product_has_no_hyperbolic_part(entries):
    v = la.GVector(entries)
    ip = la.inner_product(v, v)
    assert ip.y == 0
    assert ip.x == sum(z.x * z.x - z.y * z.y for z in entries)


@given(st.lists(st.tuples(hyper, hyper), min_size=1, max_size=5), hyper)
def test_inner_product_sesquilinear(pairs, a):
    x = la.GVector([p[0] for p in pairs])
    y = la.GVector([p[1] for p in pairs])
    assert la.inner_product(x, y.scale(a)) == a * la.inner_product(x, y)
    assert la.inner_product(x.scale(a), y) == a.conjugate() * la.inner_product(x, y)
    assert la.inner_product(y, x) == la.inner_product(x, y).conjugate()


def test_bound_tight_and_annihilating():
    one_j, one_mj = H(1, 1), H(1, -1)
    assert la.scalar_bound_check(one_j, la.GVector([one_j])) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert la.inner_bound_check(la.GVector([one_j]), la.GVector([one_mj])) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert la.scalar_bound_check(one_j, la.GVector([one_mj])) == 0


@settings(max_examples=300)
@given(st.tuples(small, small), st.lists(st.tuples(small, small), min_size=1, max_size=8))
def test_scalar_bound_property(alpha, entries):
    x = la.GVector([H(*e) for e in entries])
    if la.gvec_norm(x) == 0 or alpha == (0, 0):
        return
    assert la.scalar_bound_check(H(*alpha), x) <= math.sqrt(2) + 1e-12


def test_batch_ratios_agree_with_scalar_versions():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(50, 2))
    x = rng.normal(size=(50, 2, 4))
    y = rng.normal(size=(50, 2, 4))
    batch_s = la.scalar_bound_ratios(a[:, 0], a[:, 1], x[:, 0], x[:, 1])
    batch_i = la.inner_bound_ratios(x[:, 0], x[:, 1], y[:, 0], y[:, 1])
    for k in range(50):
        xv = la.GVector.from_parts(x[k, 0], x[k, 1])
        yv = la.GVector.from_parts(y[k, 0], y[k, 1])
        assert batch_s[k] == pytest.approx(la.scalar_bound_check(H(*a[k]), xv), rel=1e-12)
        assert batch_i[k] == pytest.approx(la.inner_bound_check(xv, yv), rel=1e-12)


def test_matmul_matches_real_block_form():
    rng = np.random.default_rng(4)
    A = la.GMatrix.from_parts(rng.normal(size=(3, 3)), rng.normal(size=(3, 3)))
    B = la.GMatrix.from_parts(rng.normal(size=(3, 3)), rng.normal(size=(3, 3)))
    np.testing.assert_allclose(real_form(A @ B), real_form(A) @ real_form(B), atol=1e-12)


@given(st.lists(hyper, min_size=4, max_size=4), st.lists(hyper, min_size=4, max_size=4))
def test_adjoint_reverses_products(a, b):
    A = la.GMatrix([a[:2], a[2:]])
    B = la.GMatrix([b[:2], b[2:]])
    assert la.adjoint(A @ B) == la.adjoint(B) @ la.adjoint(A)
    assert la.adjoint(la.adjoint(A)) == A


def test_self_adjoint_examples():
    assert la.is_self_adjoint(la.GMatrix([[2, H(1, 1)], [H(1, -1), 0]]))
    assert not la.is_self_adjoint(la.GMatrix([[2, H(1, 1)], [H(1, 1), 0]]))
    assert not la.is_self_adjoint(la.GMatrix([[H(1, 1), 0], [0, 0]]))


def test_t_map_roundtrip():
    A = la.GMatrix([[1, H(2, 3)], [H(-1, 4), H(0, -2)]])
    C = la.t_map(A)
    assert C[0, 1] == 2 + 3j
    assert la.t_map_inverse(C) == A.astype_float()


# eigenvalues


def test_eigen_positive_discriminant_exact():
    A = la.GMatrix([[2, H(1, 1)], [H(1, -1), 0]])
    res = la.eigen_sa2(A)
    assert res.classification == la.Spectrum.TWO_REAL_PLUS_TWO_HYPERBOLIC
    assert res.discriminant == 4
    assert res.eigenvalues == [H(2, 0), H(0, 0), H(1, 1), H(1, -1)]
    assert all(la.characteristic_residual(A, lam) == 0 for lam in res.eigenvalues)


def test_eigen_zero_and_negative_discriminant():
    assert la.eigen_sa2(la.GMatrix([[0, H(1, 1)], [H(1, -1), 0]])).eigenvalues == [H(0, 0)]
    A = la.GMatrix([[0, H(0, 1)], [H(0, -1), 0]])
    res = la.eigen_sa2(A)
    assert res.classification == la.Spectrum.NO_EIGENVALUES and res.eigenvalues == []
    np.testing.assert_allclose(np.linalg.eigvalsh(la.t_map(A)), [-1, 1], atol=1e-12)


def test_eigen_rejects_bad_input():
    with pytest.raises(DimensionMismatchError):
        la.eigen_sa2(la.GMatrix.identity(3))
    with pytest.raises(NotSelfAdjointError):
        la.eigen_sa2(la.GMatrix([[0, 1], [2, 0]]))


@settings(max_examples=200)
@given(fractions, fractions, fractions, fractions)
def test_eigen_exact_classification(x11, x22, x12, y12):
    A = la.GMatrix([[x11, H(x12, y12)], [H(x12, -y12), x22]])
    res = la.eigen_sa2(A)
    delta = (x11 - x22) ** 2 + 4 * x12**2 - 4 * y12**2
    expected = (
        la.Spectrum.ONE_REAL if delta == 0
        else la.Spectrum.TWO_REAL_PLUS_TWO_HYPERBOLIC if delta > 0
        else la.Spectrum.NO_EIGENVALUES
    )
    assert res.classification == expected
    scale = 1 + A.frobenius_norm() ** 2
    for lam in res.eigenvalues:
        assert la.characteristic_residual(A, lam) <= 1e-10 * scale


def test_grid_scan_oracle_finds_the_four_roots():
    A = la.GMatrix([[2.0, H(1.0, 1.0)], [H(1.0, -1.0), 0.0]])
    pts, step = grid_scan_zeros(A)
    assert _zero_sets_agree(pts, la.eigen_sa2(A).eigenvalues, step)
    # the oracle is not a rubber stamp: a wrong candidate set disagrees
    assert not _zero_sets_agree(pts, [H(2, 0), H(0, 0), H(1, 0.5), H(1, -1)], step)
    assert not _zero_sets_agree(pts, [H(2, 0), H(0, 0)], step)


def test_grid_scan_oracle_empty_for_negative_discriminant():
    A = la.GMatrix([[0.0, H(0.0, 1.0)], [H(0.0, -1.0), 0.0]])
    pts, step = grid_scan_zeros(A)
    assert len(pts) == 0


# exponential, evolution, expectation


def test_exp_series_scalar():
    E = la.exp_series(la.GMatrix([[1.0]]), 1.0)
    assert E[0, 0].x == pytest.approx(math.cosh(1), abs=1e-14)
    assert E[0, 0].y == pytest.approx(math.sinh(1), abs=1e-14)


def test_exp_series_matches_scipy_expm_on_real_form():
    rng = np.random.default_rng(5)
    A = la.GMatrix.from_parts(rng.normal(size=(3, 3)), rng.normal(size=(3, 3)))
    E = la.exp_series(A, 0.7)
    # j acts on the real form as the swap [[0, I], [I, 0]]
    n = 3
    Jr = np.block([[np.zeros((n, n)), np.eye(n)], [np.eye(n), np.zeros((n, n))]])
    np.testing.assert_allclose(real_form(E), expm(0.7 * Jr @ real_form(A)), atol=1e-12)


def test_expected_value_exact():
    O = la.GMatrix.diag([2, 3])
    assert la.expected_value(O, la.GVector([1, 1])) == H(Fraction(5, 2), 0)
    with pytest.raises(LightConeError):
        la.expected_value(O, la.GVector([H(1, 1), 0]))


def test_evolution_solves_the_equation():
    rng = np.random.default_rng(6)
    Hm = la.random_sa2(rng)
    psi0 = la.GVector.from_parts(rng.normal(size=2), rng.normal(size=2))
    assert la.evolution_residual(Hm, psi0, 0.4) <= 1e-6
    assert la.evolve(Hm, psi0, 0.0) == psi0.astype_float()


def test_evolution_is_unitary_for_self_adjoint_generator():
    rng = np.random.default_rng(7)
    Hm = la.random_sa2(rng)
    U = la.exp_series(Hm, 0.9)
    assert la.is_unitary(U, tol=1e-10)


def test_rational_boost_is_exactly_unitary():
    t = Fraction(1, 3)
    a, b = (1 + t * t) / (1 - t * t), 2 * t / (1 - t * t)
    assert la.is_unitary(la.GMatrix.diag([H(a, b), 1]))


def test_operator_norm_estimate_is_lower_bound():
    rng = np.random.default_rng(8)
    A = la.GMatrix.from_parts(rng.normal(size=(2, 2)), rng.normal(size=(2, 2)))
    est = la.operator_norm_estimate(A, rng=rng)
    exact = np.linalg.norm(real_form(A), 2)
    assert 0.95 * exact <= est <= exact * (1 + 1e-12)
