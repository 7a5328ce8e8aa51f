"""Exact check of the l2 counterexample to the naive uniqueness statement, plus the Weyl relation.

On ``l2`` (indices starting at 1) take ``Q = diag(1, 2, 3, ...)`` and
``P[m, n] = -i / (m - n)`` off the diagonal.  For finitely supported ``x``

    ([Q, P] x)_m = -i * sum_{n != m} x_n = i x_m - i * sum_n x_n

so the canonical commutation relation holds exactly on the dense subspace of
finitely supported sequences summing to zero, even though ``Q`` has pure point
spectrum.  All arithmetic here is over Gaussian rationals.
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import GridAlignmentError, NotInDomainError
from .functions import GridSpec

ALIGNMENT_TOL = 1e-9


@dataclass(frozen=True)
class ComplexRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value) -> "ComplexRational":
        if isinstance(value, ComplexRational):
            return value
        if isinstance(value, numbers.Rational):
            return cls(value, 0)
        if isinstance(value, tuple) and len(value) == 2:
            return cls(*value)
        raise TypeError(f"cannot interpret {value!r} as an exact complex rational")

    def __add__(self, other):
        other = ComplexRational.coerce(other)
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-ComplexRational.coerce(other))

    def __rsub__(self, other):
        return ComplexRational.coerce(other) - self

    def __mul__(self, other):
        other = ComplexRational.coerce(other)
        return ComplexRational(
            self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re
        )

    __rmul__ = __mul__

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


ZERO = ComplexRational(0, 0)
I = ComplexRational(0, 1)


class FiniteSupportVector:
    """Finitely supported sequence indexed from 1, with exact complex-rational entries."""

    __slots__ = ("entries",)

    def __init__(self, entries=None):
        clean = {}
        for n, v in dict(entries or {}).items():
            n = int(n)
            if n < 1:
                raise ValueError(f"indices start at 1, got {n}")
            v = ComplexRational.coerce(v)
            if v:
                clean[n] = v
        self.entries = dict(sorted(clean.items()))

    @classmethod
    def basis(cls, k: int) -> "FiniteSupportVector":
        return cls({k: 1})

    @classmethod
    def from_dense(cls, values) -> "FiniteSupportVector":
        return cls({m: v for m, v in enumerate(values, start=1)})

    @property
    def support(self) -> list[int]:
        return list(self.entries)

    def __getitem__(self, n: int) -> ComplexRational:
        return self.entries.get(n, ZERO)

    def total(self) -> ComplexRational:
        return sum(self.entries.values(), ZERO)

    def in_domain(self) -> bool:
        """Membership of the dense subspace: entries sum to zero (support is finite by construction)."""
        return not self.total()

    def dense(self, upto: int) -> list[ComplexRational]:
        return [self[m] for m in range(1, upto + 1)]

    def __add__(self, other):
        keys = set(self.entries) | set(other.entries)
        return FiniteSupportVector({k: self[k] + other[k] for k in keys})

    def __sub__(self, other):
        keys = set(self.entries) | set(other.entries)
        return FiniteSupportVector({k: self[k] - other[k] for k in keys})

    def scale(self, c) -> "FiniteSupportVector":
        c = ComplexRational.coerce(c)
        return FiniteSupportVector({k: c * v for k, v in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, FiniteSupportVector):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"FiniteSupportVector({self.entries})"


@dataclass(frozen=True)
class CounterexamplePair:
    """The matrices ``Q = diag(1, 2, ...)`` and ``P[m, n] = -i/(m - n)``, materialised up to ``truncation``."""

    truncation: int = 10

    @staticmethod
    def q_entry(m: int, n: int) -> ComplexRational:
        return ComplexRational(m, 0) if m == n else ZERO

    @staticmethod
    def p_entry(m: int, n: int) -> ComplexRational:
        return ZERO if m == n else ComplexRational(0, Fraction(-1, m - n))

    def q_matrix(self) -> list[list[ComplexRational]]:
        r = range(1, self.truncation + 1)
        return [[self.q_entry(m, n) for n in r] for m in r]

    def p_matrix(self) -> list[list[ComplexRational]]:
        r = range(1, self.truncation + 1)
        return [[self.p_entry(m, n) for n in r] for m in r]

    def q_spectrum(self) -> list[int]:
        """Diagonal of Q: eigenvalues 1..truncation, a pure point spectrum."""
        return list(range(1, self.truncation + 1))


def apply_Q(x: FiniteSupportVector) -> FiniteSupportVector:
    return FiniteSupportVector({n: v * n for n, v in x.entries.items()})


def apply_P(x: FiniteSupportVector, upto: int) -> list[ComplexRational]:
    """``(P x)_m`` for ``m = 1..upto`` (list index ``m - 1``), exact."""
    out = []
    for m in range(1, upto + 1):
        # -i * sum x_n / (m - n)
        re = Fraction(0)
        im = Fraction(0)
        for n, v in x.entries.items():
            if n != m:
                re += v.re / (m - n)
                im += v.im / (m - n)
        out.append(ComplexRational(im, -re))
    return out


def commutator_apply(x: FiniteSupportVector, upto: int) -> list[ComplexRational]:
    """``((QP - PQ) x)_m`` for ``m = 1..upto``."""
    px = apply_P(x, upto)
    pqx = apply_P(apply_Q(x), upto)
    return [px[m - 1] * m - pqx[m - 1] for m in range(1, upto + 1)]


def commutator_check(x: FiniteSupportVector, upto: int) -> bool:
    """Exactly test ``[Q, P] x == i x`` on components ``1..upto``.

    Raises :class:`NotInDomainError` (carrying the exact residual
    ``[Q, P] x - i x``, which is ``-i * sum(x)`` in every component) when the
    entries of ``x`` do not sum to zero.
    """
    if x.support and max(x.support) > upto:
        raise ValueError(f"support of x extends beyond upto={upto}")
    comm = commutator_apply(x, upto)
    residual = [c - I * x[m] for m, c in enumerate(comm, start=1)]
    if not x.in_domain():
        raise NotInDomainError(
            f"entries sum to {x.total()!r}, not 0; the relation fails by -i*sum(x) per component",
            residual=residual,
        )
    return not any(residual)


def pairing(u, v) -> ComplexRational:
    """``sum conj(u_m) v_m`` over two equal-length exact sequences."""
    return sum((a.conjugate() * b for a, b in zip(u, v)), ZERO)


def random_domain_vector(rng: np.random.Generator, max_index: int = 60, max_support: int = 8,
                         max_denominator: int = 9) -> FiniteSupportVector:
    """Random element of the sum-zero subspace with support inside ``[1, max_index]``."""
    size = int(rng.integers(2, max_support + 1))
    idx = sorted(int(i) for i in rng.choice(np.arange(1, max_index + 1), size=size, replace=False))

    def frac():
        return Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, max_denominator + 1)))

    entries = {n: ComplexRational(frac(), frac()) for n in idx[:-1]}
    entries[idx[-1]] = ZERO - sum(entries.values(), ZERO)
    return FiniteSupportVector(entries)


# ---------------------------------------------------------------------------
# Weyl relation for the complex Schroedinger representation


def translation(psi: np.ndarray, shift: int) -> np.ndarray:
    """``exp(i t P) psi (q) = psi(q + t)`` for ``t = shift * h`` on a periodic grid."""
    return np.roll(psi, -shift)


def phase(psi: np.ndarray, s: float, q: np.ndarray) -> np.ndarray:
    """``exp(i s Q) psi (q) = exp(i s q) psi(q)``."""
    return np.exp(1j * s * q) * psi


def weyl_relation_check(t: float, s: float, spec: GridSpec, psi=None) -> float:
    """Max-norm of ``(V1(t) V2(s) - exp(i t s) V2(s) V1(t)) psi``.

    ``V1(t) = exp(i t P)`` is the translation ``psi(q) -> psi(q + t)`` and
    ``V2(s) = exp(i s Q)`` the multiplication by ``exp(i s q)``.  ``t`` must be
    a whole number of grid steps.  ``psi`` defaults to ``exp(-q**2 / 2)``.
    """
    h = spec.spacing
    steps = t / h
    shift = round(steps)
    if abs(steps - shift) > ALIGNMENT_TOL:
        raise GridAlignmentError(f"t={t} is not an integer multiple of h={h}")
    q = spec.x
    if psi is None:
        psi = np.exp(-(q**2) / 2).astype(complex)
    lhs = translation(phase(psi, s, q), shift)
    rhs = np.exp(1j * t * s) * phase(translation(psi, shift), s, q)
    return float(np.max(np.abs(lhs - rhs)))


def adjacent_difference_sweep(count: int, upto: int) -> bool:
    """True iff every ``e_k - e_{k+1}``, ``k = 1..count``, satisfies the relation exactly."""
    return all(
        commutator_check(FiniteSupportVector({k: 1, k + 1: -1}), upto) for k in range(1, count + 1)
    )
