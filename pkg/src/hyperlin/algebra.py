"""Hyperbolic numbers and finite-dimensional algebras from structure constants.

``HyperbolicNumber`` is backend-agnostic: its components may be ``float`` or
``fractions.Fraction`` (ints are accepted and behave as exact rationals).
Everything built from rationals stays exact; floats use the tolerance
``LIGHT_CONE_EPS`` wherever membership of the light cone has to be decided.
"""
from __future__ import annotations

import json
import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import LightConeError, SpecMismatchError

LIGHT_CONE_EPS = 1e-12


def is_exact(value) -> bool:
    return isinstance(value, numbers.Rational)


@dataclass(frozen=True)
class HyperbolicNumber:
    """The number ``x + j*y`` with ``j*j == +1``."""

    x: numbers.Real = 0
    y: numbers.Real = 0

    @classmethod
    def coerce(cls, value) -> "HyperbolicNumber":
        if isinstance(value, HyperbolicNumber):
            return value
        if isinstance(value, numbers.Real):
            return cls(value, 0)
        if isinstance(value, (tuple, list)) and len(value) == 2:
            return cls(value[0], value[1])
        raise TypeError(f"cannot interpret {value!r} as a hyperbolic number")

    @property
    def exact(self) -> bool:
        return is_exact(self.x) and is_exact(self.y)

    def __add__(self, other):
        try:
            other = HyperbolicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return HyperbolicNumber(self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __neg__(self):
        return HyperbolicNumber(-self.x, -self.y)

    def __sub__(self, other):
        try:
            other = HyperbolicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return HyperbolicNumber(self.x - other.x, self.y - other.y)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            other = HyperbolicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return hy_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = HyperbolicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return hy_mul(self, hy_inverse(other))

    def __rtruediv__(self, other):
        return hy_mul(HyperbolicNumber.coerce(other), hy_inverse(self))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = HyperbolicNumber(1, 0), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "HyperbolicNumber":
        return hy_conj(self)

    def __abs__(self) -> float:
        return hy_norm(self)

    def to_pair(self) -> list:
        return [self.x, self.y]

    def __repr__(self) -> str:
        sign = "-" if self.y < 0 else "+"
        return f"({self.x}{sign}{abs(self.y)}j)"


def hy_mul(a: HyperbolicNumber, b: HyperbolicNumber) -> HyperbolicNumber:
    return HyperbolicNumber(a.x * b.x + a.y * b.y, a.x * b.y + a.y * b.x)


def hy_conj(z: HyperbolicNumber) -> HyperbolicNumber:
    return HyperbolicNumber(z.x, -z.y)


def hy_norm(z: HyperbolicNumber) -> float:
    """Euclidean norm ``sqrt(x**2 + y**2)``; not multiplicative on the ring."""
    return math.hypot(float(z.x), float(z.y))


def _on_null_lines(dx, dy) -> bool:
    if is_exact(dx) and is_exact(dy):
        return dx * dx == dy * dy
    dx, dy = float(dx), float(dy)
    return abs(dx * dx - dy * dy) <= LIGHT_CONE_EPS * (dx * dx + dy * dy)


def light_cone_contains(center: HyperbolicNumber, z: HyperbolicNumber) -> bool:
    """True iff ``z`` lies on one of the two slope +-1 lines through ``center``."""
    return _on_null_lines(z.x - center.x, z.y - center.y)


def hy_inverse(z: HyperbolicNumber) -> HyperbolicNumber:
    if _on_null_lines(z.x, z.y):
        raise LightConeError(f"{z!r} lies on the light cone of 0 and has no inverse")
    # (x - y)(x + y) avoids the cancellation in x**2 - y**2 for floats
    d = (z.x - z.y) * (z.x + z.y)
    if z.exact:
        d = Fraction(d)
    return HyperbolicNumber(z.x / d, -z.y / d)


# ---------------------------------------------------------------------------
# Structure-constant algebras


class AlgebraSpec:
    """Real algebra of dimension ``dim`` with ``e_i e_j = sum_k f[i, j, k] e_k``.

    Index 0 is the unit; the constructor validates ``f[0, i, j] == f[i, 0, j] == delta_ij``.
    """

    MAX_DIM = 8

    def __init__(self, f, name: str = "custom"):
        f = np.array(f, dtype=float)
        if f.ndim != 3 or len(set(f.shape)) != 1:
            raise ValueError(f"structure constants must be a cube, got shape {f.shape}")
        dim = f.shape[0]
        if not 1 <= dim <= self.MAX_DIM:
            raise ValueError(f"dimension {dim} outside 1..{self.MAX_DIM}")
        eye = np.eye(dim)
        if not (np.array_equal(f[0], eye) and np.array_equal(f[:, 0, :], eye)):
            raise ValueError("e_0 must act as the identity: f[0,i,j] = f[i,0,j] = delta_ij")
        f.setflags(write=False)
        self.f = f
        self.name = name

    @property
    def dim(self) -> int:
        return self.f.shape[0]

    def __eq__(self, other):
        if not isinstance(other, AlgebraSpec):
            return NotImplemented
        return np.array_equal(self.f, other.f)

    def __hash__(self):
        return hash(self.f.tobytes())

    def __repr__(self):
        return f"AlgebraSpec(name={self.name!r}, dim={self.dim})"

    def multiply(self, a, b) -> np.ndarray:
        """Bilinear product on raw coefficient arrays; broadcasts over leading axes."""
        return np.einsum("...i,...j,ijk->...k", a, b, self.f)

    def basis(self, i: int) -> "AlgebraElement":
        r = np.zeros(self.dim)
        r[i] = 1.0
        return AlgebraElement(self, r)

    def element(self, coeffs: Sequence[float]) -> "AlgebraElement":
        return AlgebraElement(self, coeffs)

    # -- JSON table {dim, triples: [[i, j, k, value], ...]} -----------------

    def to_dict(self) -> dict:
        triples = []
        for i, j, k in zip(*np.nonzero(self.f)):
            if i == 0 or j == 0:
                continue
            triples.append([int(i), int(j), int(k), float(self.f[i, j, k])])
        return {"name": self.name, "dim": self.dim, "triples": triples}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "AlgebraSpec":
        dim = int(data["dim"])
        if not 1 <= dim <= cls.MAX_DIM:
            raise ValueError(f"dimension {dim} outside 1..{cls.MAX_DIM}")
        f = np.zeros((dim, dim, dim))
        for i in range(dim):
            f[0, i, i] = f[i, 0, i] = 1.0
        for entry in data.get("triples", []):
            i, j, k, value = entry
            i, j, k = int(i), int(j), int(k)
            if not all(0 <= n < dim for n in (i, j, k)):
                raise ValueError(f"triple index out of range: {entry}")
            if i == 0 or j == 0:
                if float(value) != (1.0 if (j if i == 0 else i) == k else 0.0):
                    raise ValueError(f"triple {entry} contradicts the unit constraint")
                continue
            f[i, j, k] = float(value)
        return cls(f, name=data.get("name", "custom"))

    @classmethod
    def from_json(cls, text: str) -> "AlgebraSpec":
        return cls.from_dict(json.loads(text))


def _unit_cube(dim: int) -> np.ndarray:
    f = np.zeros((dim, dim, dim))
    for i in range(dim):
        f[0, i, i] = f[i, 0, i] = 1.0
    return f


def from_oriented_triples(dim: int, triples: Iterable[tuple[int, int, int]], name: str) -> AlgebraSpec:
    """Build ``e_i e_j = -delta_ij e_0 + sum_k g_ijk e_k`` with ``g`` totally antisymmetric.

    Each oriented triple ``(a, b, c)`` sets ``g_abc = 1``; the remaining
    components follow by antisymmetry and vanish otherwise.
    """
    f = _unit_cube(dim)
    for i in range(1, dim):
        f[i, i, 0] = -1.0
    for a, b, c in triples:
        for (i, j, k), sign in (
            ((a, b, c), 1), ((b, c, a), 1), ((c, a, b), 1),
            ((b, a, c), -1), ((a, c, b), -1), ((c, b, a), -1),
        ):
            if f[i, j, k] not in (0.0, sign):
                raise ValueError(f"inconsistent orientation for triple {(a, b, c)}")
            f[i, j, k] = sign
    return AlgebraSpec(f, name=name)


QUATERNION_TRIPLES = ((1, 2, 3),)
OCTONION_TRIPLES = ((1, 2, 3), (2, 4, 6), (4, 3, 5), (3, 6, 7), (6, 5, 1), (5, 7, 2), (7, 1, 4))


def real_spec() -> AlgebraSpec:
    return AlgebraSpec(_unit_cube(1), name="R")


def complex_spec() -> AlgebraSpec:
    f = _unit_cube(2)
    f[1, 1, 0] = -1.0
    return AlgebraSpec(f, name="C")


def quaternion_spec() -> AlgebraSpec:
    return from_oriented_triples(4, QUATERNION_TRIPLES, name="H")


def octonion_spec() -> AlgebraSpec:
    return from_oriented_triples(8, OCTONION_TRIPLES, name="O")


def hyperbolic_spec() -> AlgebraSpec:
    """The two-dimensional algebra with ``e_1 e_1 = +e_0``, obtained from C by flipping f_110."""
    f = np.array(complex_spec().f)
    f[1, 1, 0] = -f[1, 1, 0]
    return AlgebraSpec(f, name="G")


BUILTIN_SPECS = {
    "R": real_spec,
    "C": complex_spec,
    "H": quaternion_spec,
    "O": octonion_spec,
    "G": hyperbolic_spec,
}


class AlgebraElement:
    """Coefficient vector ``r`` in the basis ``e_0 .. e_n`` of ``spec``."""

    __slots__ = ("spec", "r")

    def __init__(self, spec: AlgebraSpec, r):
        r = np.array(r, dtype=float)
        if r.shape != (spec.dim,):
            raise ValueError(f"expected {spec.dim} coefficients, got shape {r.shape}")
        r.setflags(write=False)
        self.spec = spec
        self.r = r

    def _check(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if self.spec != other.spec:
            raise SpecMismatchError(f"cannot combine {self.spec!r} with {other.spec!r}")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.spec, self.r + other.r)

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.spec, self.r - other.r)

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            return AlgebraElement(self.spec, self.r * other)
        return algebra_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return AlgebraElement(self.spec, self.r * other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self.r, other.r)

    def __repr__(self):
        return f"AlgebraElement({self.spec.name}, {self.r.tolist()})"


def algebra_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    return AlgebraElement(a.spec, a.spec.multiply(a.r, b.r))


def modulus(a: AlgebraElement) -> float:
    return float(np.linalg.norm(a.r))


def multiplicativity_defect(a: AlgebraElement, b: AlgebraElement) -> float:
    """``|N(ab) - N(a) N(b)|`` for the Euclidean modulus ``N``."""
    return abs(modulus(algebra_mul(a, b)) - modulus(a) * modulus(b))


def to_algebra_element(z: HyperbolicNumber, spec: AlgebraSpec | None = None) -> AlgebraElement:
    return AlgebraElement(spec or hyperbolic_spec(), [float(z.x), float(z.y)])
