import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from hyperlin import algebra as alg
from hyperlin.algebra import HyperbolicNumber as H
from hyperlin.errors import LightConeError, SpecMismatchError

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)
hyper_exact = st.builds(H, fractions, fractions)
finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)
hyper_float = st.builds(H, finite, finite)


def test_multiplication_examples():
    assert alg.hy_mul(H(1, 2), H(3, 4)) == H(11, 10)
    assert alg.hy_mul(H(0, 1), H(0, 1)) == H(1, 0)
    assert alg.hy_mul(H(1, 1), H(1, -1)) == H(0, 0)


def test_conjugate_and_norm():
    assert alg.hy_conj(H(3, -4)) == H(3, 4)
    assert alg.hy_norm(H(3, 4)) == 5.0
    assert alg.hy_norm(H(0, 0)) == 0.0


def test_inverse_example_exact():
    inv = alg.hy_inverse(H(2, 1))
    assert inv == H(Fraction(2, 3), Fraction(-1, 3))
    assert alg.hy_mul(H(2, 1), inv) == H(1, 0)


@pytest.mark.parametrize("z", [H(0, 0), H(1, 1), H(3, -3), H(-2.5, 2.5)])
def test_inverse_on_light_cone_raises(z):
    with pytest.raises(LightConeError):
        alg.hy_inverse(z)
    with pytest.raises(ZeroDivisionError):
        H(1, 0) / z


def test_light_cone_membership():
    assert alg.light_cone_contains(H(0, 0), H(2, 2))
    assert alg.light_cone_contains(H(0, 0), H(2, -2))
    assert not alg.light_cone_contains(H(0, 0), H(1, 0))
    assert alg.light_cone_contains(H(1, 1), H(3, -1))


@given(hyper_exact, hyper_exact, hyper_exact)
def test_ring_laws_exact(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(hyper_exact)
def test_inverse_exact_off_cone(z):
    assume(z.x * z.x != z.y * z.y)
    assert z * alg.hy_inverse(z) == H(1, 0)


@given(hyper_float)
def test_inverse_float_within_conditioning(z):
    x, y = z.x, z.y
    assume(abs(x * x - y * y) > 1e-6 * (x * x + y * y) and x * x + y * y > 1e-6)
    prod = z * alg.hy_inverse(z)
    cond = (x * x + y * y) / abs((x - y) * (x + y))
    assert abs(prod.x - 1) <= 8 * np.spacing(1.0) * cond
    assert abs(prod.y) <= 8 * np.spacing(1.0) * cond


@given(hyper_exact)
def test_z_times_conjugate_is_real(z):
    zz = z * z.conjugate()
    assert zz == H(z.x * z.x - z.y * z.y, 0)


@given(fractions.filter(bool), fractions.filter(bool), st.sampled_from([1, -1]), st.sampled_from([1, -1]))
def test_zero_divisors_on_the_null_lines(s, t, sign_a, sign_b):
    # products along one null line stay on it; across the two lines they vanish
    a, b = H(s, sign_a * s), H(t, sign_b * t)
    prod = a * b
    if sign_a == sign_b:
        assert alg.light_cone_contains(H(0, 0), prod) and prod != H(0, 0)
    else:
        assert prod == H(0, 0)


@given(hyper_float, hyper_float)
def test_norm_is_subadditive_but_not_multiplicative(a, b):
    assert alg.hy_norm(a + b) <= alg.hy_norm(a) + alg.hy_norm(b) + 1e-9
    assert alg.hy_norm(a * b) <= math.sqrt(2) * alg.hy_norm(a) * alg.hy_norm(b) * (1 + 1e-12) + 1e-300


def test_float_light_cone_tolerance():
    z = H(1.0, 1.0 + 1e-14)
    with pytest.raises(LightConeError):
        alg.hy_inverse(z)
    assert alg.hy_inverse(H(1.0, 0.999)) is not None


# structure-constant algebras


@pytest.fixture(scope="module")
def specs():
    return {name: build() for name, build in alg.BUILTIN_SPECS.items()}


@pytest.mark.parametrize("name", ["R", "C", "H", "O"])
def test_builtin_norms_multiplicative(specs, name):
    spec = specs[name]
    rng = np.random.default_rng(1)
    a, b = rng.normal(size=(2, 2000, spec.dim))
    na, nb = np.linalg.norm(a, axis=1), np.linalg.norm(b, axis=1)
    nab = np.linalg.norm(spec.multiply(a, b), axis=1)
    assert np.max(np.abs(nab - na * nb) / (na * nb)) <= 1e-12


def test_hyperbolic_spec_zero_divisor_defect(specs):
    G = specs["G"]
    assert alg.multiplicativity_defect(G.element([1, 1]), G.element([1, -1])) == pytest.approx(2.0, abs=1e-12)


def test_hyperbolic_spec_matches_hy_mul(specs):
    G = specs["G"]
    for a, b in [((1, 2), (3, 4)), ((0, 1), (0, 1)), ((-1.5, 0.25), (2, -7))]:
        prod = (G.element(a) * G.element(b)).r
        ref = alg.hy_mul(H(*a), H(*b))
        assert prod.tolist() == [ref.x, ref.y]


def test_hyperbolic_is_complex_with_flipped_unit_square(specs):
    diff = specs["G"].f - specs["C"].f
    assert diff[1, 1, 0] == 2 and np.count_nonzero(diff) == 1


def test_quaternion_table(specs):
    Hq = specs["H"]
    e = [Hq.basis(i) for i in range(4)]
    assert e[1] * e[2] == e[3]
    assert e[2] * e[3] == e[1]
    assert e[3] * e[1] == e[2]
    assert e[2] * e[1] == -1 * e[3]
    for i in (1, 2, 3):
        assert e[i] * e[i] == -1 * e[0]


def test_octonion_every_imaginary_unit_squares_to_minus_one(specs):
    O = specs["O"]
    for i in range(1, 8):
        assert O.basis(i) * O.basis(i) == -1 * O.basis(0)
        for k in range(1, 8):
            if k != i:
                assert O.basis(i) * O.basis(k) == -1 * (O.basis(k) * O.basis(i))


def test_octonions_not_associative(specs):
    O = specs["O"]
    e = [O.basis(i) for i in range(8)]
    assert (e[1] * e[2]) * e[4] != e[1] * (e[2] * e[4])


def test_octonions_alternative(specs):
    # alternativity (x x) y = x (x y) holds even though associativity fails
    O = specs["O"]
    rng = np.random.default_rng(2)
    x, y = rng.normal(size=(2, 500, 8))
    lhs = O.multiply(O.multiply(x, x), y)
    rhs = O.multiply(x, O.multiply(x, y))
    assert np.max(np.abs(lhs - rhs)) <= 1e-10


def test_spec_mismatch(specs):
    with pytest.raises(SpecMismatchError):
        specs["C"].basis(1) * specs["G"].basis(1)


def test_spec_json_roundtrip(specs):
    for spec in specs.values():
        back = alg.AlgebraSpec.from_json(spec.to_json())
        assert back == spec
        assert json.loads(spec.to_json())["dim"] == spec.dim


def test_spec_rejects_bad_unit_row():
    f = np.zeros((2, 2, 2))
    f[0, 0, 0] = 1
    f[1, 1, 0] = -1
    with pytest.raises(ValueError):
        alg.AlgebraSpec(f)


def test_spec_from_dict_triples():
    data = {"name": "C", "dim": 2, "triples": [[1, 1, 0, -1]]}
    assert alg.AlgebraSpec.from_dict(data) == alg.complex_spec()
