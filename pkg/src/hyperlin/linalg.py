"""Vectors and matrices over the hyperbolic ring.

Both containers keep two parallel numpy arrays, ``re`` and ``hy`` (the
coefficients of 1 and j).  With float input they are float64 arrays; with
purely rational input (ints / Fractions) they are object arrays of Fractions
and every operation stays exact.
"""
from __future__ import annotations

import enum
import math
import numbers
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import HyperbolicNumber, hy_inverse, hy_norm
from .errors import ConvergenceError, DimensionMismatchError, NotSelfAdjointError

SQRT2 = math.sqrt(2.0)
SELF_ADJOINT_TOL = 1e-12
DISCRIMINANT_TOL = 1e-10
EXP_TERM_TOL = 1e-15
EXP_MAX_TERMS = 200

J = HyperbolicNumber(0, 1)


def _parts(values):
    """Split nested entries (HyperbolicNumber or real) into ``(re, hy)`` arrays."""
    arr = np.asarray(values, dtype=object)
    flat = [HyperbolicNumber.coerce(v) for v in arr.ravel()]
    exact = all(z.exact for z in flat)
    if exact:
        re = np.array([Fraction(z.x) for z in flat], dtype=object)
        hy = np.array([Fraction(z.y) for z in flat], dtype=object)
    else:
        re = np.array([float(z.x) for z in flat], dtype=float)
        hy = np.array([float(z.y) for z in flat], dtype=float)
    return re.reshape(arr.shape), hy.reshape(arr.shape)


def _scalar(v):
    # numpy float64 -> float; Fraction stays Fraction
    return float(v) if isinstance(v, np.floating) else v


def _is_exact_array(a: np.ndarray) -> bool:
    return a.dtype == object


def _harmonise(*arrays):
    if any(not _is_exact_array(a) for a in arrays):
        return tuple(np.asarray(a, dtype=float) for a in arrays)
    return arrays


class _GArray:
    __slots__ = ("re", "hy")

    def __init__(self, entries=None, *, re=None, hy=None):
        if entries is not None:
            re, hy = _parts(entries)
        else:
            re, hy = _harmonise(np.asarray(re), np.asarray(hy))
            if re.shape != hy.shape:
                raise DimensionMismatchError(f"part shapes differ: {re.shape} vs {hy.shape}")
        self.re = re
        self.hy = hy

    @classmethod
    def from_parts(cls, re, hy):
        return cls(re=re, hy=hy)

    @classmethod
    def from_pairs(cls, pairs):
        """Build from nested ``[x, y]`` pairs, the JSON wire format."""
        arr = np.asarray(pairs, dtype=object)
        if arr.shape[-1] != 2:
            raise ValueError("innermost entries must be [x, y] pairs")
        return cls.from_parts(_parts(arr[..., 0])[0], _parts(arr[..., 1])[0])

    def to_pairs(self):
        return np.stack([self.re, self.hy], axis=-1).tolist()

    @property
    def exact(self) -> bool:
        return _is_exact_array(self.re)

    @property
    def shape(self):
        return self.re.shape

    def astype_float(self):
        return type(self).from_parts(self.re.astype(float), self.hy.astype(float))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes differ: {self.shape} vs {other.shape}")
        return type(self).from_parts(self.re + other.re, self.hy + other.hy)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes differ: {self.shape} vs {other.shape}")
        return type(self).from_parts(self.re - other.re, self.hy - other.hy)

    def __neg__(self):
        return type(self).from_parts(-self.re, -self.hy)

    def scale(self, alpha) -> "_GArray":
        alpha = HyperbolicNumber.coerce(alpha)
        a, b = alpha.x, alpha.y
        if not self.exact or not alpha.exact:
            a, b = float(a), float(b)
            re, hy = self.re.astype(float), self.hy.astype(float)
        else:
            re, hy = self.re, self.hy
        return type(self).from_parts(a * re + b * hy, a * hy + b * re)

    def __rmul__(self, other):
        if isinstance(other, (HyperbolicNumber, numbers.Real)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (
            self.shape == other.shape
            and bool(np.all(self.re == other.re))
            and bool(np.all(self.hy == other.hy))
        )

    __hash__ = None

    def max_abs(self) -> float:
        if self.re.size == 0:
            return 0.0
        return float(max(np.max(np.abs(self.re.astype(float))), np.max(np.abs(self.hy.astype(float)))))


class GVector(_GArray):
    """Element of G^n."""

    __slots__ = ()

    def __init__(self, entries=None, *, re=None, hy=None):
        super().__init__(entries, re=re, hy=hy)
        if self.re.ndim != 1:
            raise DimensionMismatchError(f"GVector needs a 1-D array, got shape {self.re.shape}")

    def __len__(self):
        return self.re.shape[0]

    def __getitem__(self, i) -> HyperbolicNumber:
        return HyperbolicNumber(_scalar(self.re[i]), _scalar(self.hy[i]))

    @property
    def entries(self) -> list[HyperbolicNumber]:
        return [self[i] for i in range(len(self))]

    def __repr__(self):
        return f"GVector({self.entries})"


class GMatrix(_GArray):
    """Dense matrix over G."""

    __slots__ = ()

    def __init__(self, entries=None, *, re=None, hy=None):
        super().__init__(entries, re=re, hy=hy)
        if self.re.ndim != 2:
            raise DimensionMismatchError(f"GMatrix needs a 2-D array, got shape {self.re.shape}")

    @classmethod
    def identity(cls, n: int, exact: bool = False) -> "GMatrix":
        if exact:
            return cls([[1 if i == k else 0 for k in range(n)] for i in range(n)])
        return cls.from_parts(np.eye(n), np.zeros((n, n)))

    @classmethod
    def diag(cls, values) -> "GMatrix":
        values = [HyperbolicNumber.coerce(v) for v in values]
        zero = 0 if all(v.exact for v in values) else 0.0
        n = len(values)
        return cls([[values[i] if i == k else zero for k in range(n)] for i in range(n)])

    def __getitem__(self, idx) -> HyperbolicNumber:
        i, k = idx
        return HyperbolicNumber(_scalar(self.re[i, k]), _scalar(self.hy[i, k]))

    @property
    def entries(self) -> list[list[HyperbolicNumber]]:
        n, m = self.shape
        return [[self[i, k] for k in range(m)] for i in range(n)]

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def __matmul__(self, other):
        if isinstance(other, GMatrix):
            if self.shape[1] != other.shape[0]:
                raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
            ar, ah, br, bh = _harmonise(self.re, self.hy, other.re, other.hy)
            return GMatrix.from_parts(ar @ br + ah @ bh, ar @ bh + ah @ br)
        if isinstance(other, GVector):
            if self.shape[1] != len(other):
                raise DimensionMismatchError(f"cannot apply {self.shape} matrix to length {len(other)}")
            ar, ah, br, bh = _harmonise(self.re, self.hy, other.re, other.hy)
            return GVector.from_parts(ar.dot(br) + ah.dot(bh), ar.dot(bh) + ah.dot(br))
        return NotImplemented

    def frobenius_norm(self) -> float:
        return math.sqrt(float(np.sum(self.re.astype(float) ** 2 + self.hy.astype(float) ** 2)))

    def __repr__(self):
        return f"GMatrix({self.entries})"


# ---------------------------------------------------------------------------
# Vector operations


def inner_product(u: GVector, v: GVector) -> HyperbolicNumber:
    """``sum(conj(u_i) * v_i)``: conjugate-linear in ``u``, linear in ``v``."""
    if len(u) != len(v):
        raise DimensionMismatchError(f"lengths differ: {len(u)} vs {len(v)}")
    a, b, c, d = _harmonise(u.re, u.hy, v.re, v.hy)
    return HyperbolicNumber(_scalar(np.sum(a * c - b * d)), _scalar(np.sum(a * d - b * c)))


def gvec_norm(v: GVector) -> float:
    return math.sqrt(float(np.sum(v.re.astype(float) ** 2 + v.hy.astype(float) ** 2)))


def scalar_bound_check(alpha: HyperbolicNumber, x: GVector) -> float:
    """Ratio ``||alpha x|| / (||alpha|| ||x||)``; never exceeds sqrt(2)."""
    return gvec_norm(x.scale(alpha)) / (hy_norm(alpha) * gvec_norm(x))


def inner_bound_check(x: GVector, y: GVector) -> float:
    """Ratio ``||(x, y)|| / (||x|| ||y||)``; never exceeds sqrt(2)."""
    return hy_norm(inner_product(x, y)) / (gvec_norm(x) * gvec_norm(y))


def scalar_bound_ratios(alpha_re, alpha_hy, x_re, x_hy) -> np.ndarray:
    """Vectorised :func:`scalar_bound_check` over a batch.

    ``alpha_*`` have shape ``(S,)``; ``x_*`` have shape ``(S, n)``.
    """
    a = np.asarray(alpha_re, dtype=float)[:, None]
    b = np.asarray(alpha_hy, dtype=float)[:, None]
    xr, xh = np.asarray(x_re, dtype=float), np.asarray(x_hy, dtype=float)
    prod = np.sqrt(np.sum((a * xr + b * xh) ** 2 + (a * xh + b * xr) ** 2, axis=1))
    return prod / (np.hypot(a[:, 0], b[:, 0]) * np.sqrt(np.sum(xr**2 + xh**2, axis=1)))


def inner_bound_ratios(x_re, x_hy, y_re, y_hy) -> np.ndarray:
    """Vectorised :func:`inner_bound_check`; all inputs have shape ``(S, n)``."""
    a, b, c, d = (np.asarray(v, dtype=float) for v in (x_re, x_hy, y_re, y_hy))
    ip = np.hypot(np.sum(a * c - b * d, axis=1), np.sum(a * d - b * c, axis=1))
    return ip / (np.sqrt(np.sum(a**2 + b**2, axis=1)) * np.sqrt(np.sum(c**2 + d**2, axis=1)))


# ---------------------------------------------------------------------------
# Matrix operations


def adjoint(A: GMatrix) -> GMatrix:
    return GMatrix.from_parts(A.re.T.copy(), -A.hy.T)


def _require_square(A: GMatrix):
    if not A.is_square:
        raise DimensionMismatchError(f"square matrix required, got shape {A.shape}")


def is_self_adjoint(A: GMatrix, tol: float = SELF_ADJOINT_TOL) -> bool:
    _require_square(A)
    diff = A - adjoint(A)
    if A.exact:
        return bool(np.all(diff.re == 0) and np.all(diff.hy == 0))
    return diff.max_abs() <= tol


def is_unitary(U: GMatrix, tol: float = SELF_ADJOINT_TOL) -> bool:
    """``(Ux, Uy) == (x, y)`` for all x, y, i.e. ``U^dagger U == I``.

    Checking the canonical basis suffices by sesquilinearity.
    """
    _require_square(U)
    gram = adjoint(U) @ U
    eye = GMatrix.identity(U.shape[0], exact=U.exact)
    diff = gram - eye
    if U.exact:
        return bool(np.all(diff.re == 0) and np.all(diff.hy == 0))
    return diff.max_abs() <= tol


def t_map(A: GMatrix) -> np.ndarray:
    """Relabel ``j -> i`` entrywise. A bijection, not a ring homomorphism."""
    return A.re.astype(float) + 1j * A.hy.astype(float)


def t_map_inverse(C) -> GMatrix:
    C = np.asarray(C, dtype=complex)
    return GMatrix.from_parts(C.real.copy(), C.imag.copy())


def det2(A: GMatrix) -> HyperbolicNumber:
    if A.shape != (2, 2):
        raise DimensionMismatchError(f"det2 needs a 2x2 matrix, got shape {A.shape}")
    return A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]


class Spectrum(str, enum.Enum):
    TWO_REAL_PLUS_TWO_HYPERBOLIC = "TwoRealPlusTwoHyperbolic"
    ONE_REAL = "OneReal"
    NO_EIGENVALUES = "NoEigenvalues"


@dataclass(frozen=True)
class EigenResult:
    classification: Spectrum
    eigenvalues: list = field(default_factory=list)
    discriminant: float = 0.0


def _sqrt(value):
    """Exact square root of a non-negative Fraction when it is a perfect square."""
    if isinstance(value, Fraction):
        n, d = value.numerator, value.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
    return math.sqrt(float(value))


def discriminant_sa2(A: GMatrix):
    x11, x22 = _scalar(A.re[0, 0]), _scalar(A.re[1, 1])
    x12, y12 = _scalar(A.re[0, 1]), _scalar(A.hy[0, 1])
    return (x11 - x22) ** 2 + 4 * x12 * x12 - 4 * y12 * y12


def eigen_sa2(A: GMatrix) -> EigenResult:
    """Solve ``det(A - lambda I) = 0`` over G for a self-adjoint 2x2 matrix.

    Writing ``lambda = u + j v`` the imaginary part of the characteristic
    equation forces ``v = 0`` or ``u = trace/2``, which yields up to four roots
    governed by the sign of ``(x11 - x22)**2 + 4 x12**2 - 4 y12**2``.
    """
    if A.shape != (2, 2):
        raise DimensionMismatchError(f"eigen_sa2 needs a 2x2 matrix, got shape {A.shape}")
    if not is_self_adjoint(A):
        raise NotSelfAdjointError("matrix is not self-adjoint")
    delta = discriminant_sa2(A)
    trace = _scalar(A.re[0, 0]) + _scalar(A.re[1, 1])
    if A.exact:
        half = Fraction(1, 2)
        is_zero = delta == 0
    else:
        half = 0.5
        is_zero = abs(delta) <= DISCRIMINANT_TOL * (1.0 + A.frobenius_norm() ** 2)
    if is_zero:
        return EigenResult(Spectrum.ONE_REAL, [HyperbolicNumber(trace * half, 0 * half)], delta)
    if delta < 0:
        return EigenResult(Spectrum.NO_EIGENVALUES, [], delta)
    root = _sqrt(delta)
    if not isinstance(root, Fraction):
        trace, half = float(trace), 0.5
    zero = 0 * half
    eigenvalues = [
        HyperbolicNumber((trace + root) * half, zero),
        HyperbolicNumber((trace - root) * half, zero),
        HyperbolicNumber(trace * half, root * half),
        HyperbolicNumber(trace * half, -root * half),
    ]
    return EigenResult(Spectrum.TWO_REAL_PLUS_TWO_HYPERBOLIC, eigenvalues, delta)


def characteristic_residual(A: GMatrix, lam: HyperbolicNumber) -> float:
    """``||det2(A - lambda I)||``."""
    n = A.shape[0]
    shifted = A - GMatrix.identity(n, exact=A.exact and lam.exact).scale(lam)
    return hy_norm(det2(shifted))


def random_sa2(rng: np.random.Generator, scale: float = 1.0) -> GMatrix:
    x11, x22, x12, y12 = rng.normal(scale=scale, size=4)
    return GMatrix.from_parts(
        np.array([[x11, x12], [x12, x22]]), np.array([[0.0, y12], [-y12, 0.0]])
    )


def exp_series(A: GMatrix, t: float, scale=J) -> GMatrix:
    """``sum_n (scale * t)**n A**n / n!`` in float arithmetic.

    Stops once a term's max-norm drops below ``EXP_TERM_TOL``.
    """
    _require_square(A)
    n = A.shape[0]
    B = A.astype_float().scale(HyperbolicNumber.coerce(scale) * float(t))
    total = GMatrix.identity(n)
    term = GMatrix.identity(n)
    for k in range(1, EXP_MAX_TERMS + 1):
        term = (term @ B).scale(1.0 / k)
        total = total + term
        if term.max_abs() < EXP_TERM_TOL:
            return total
    raise ConvergenceError(f"exp series did not converge within {EXP_MAX_TERMS} terms")


def expected_value(O: GMatrix, psi: GVector) -> HyperbolicNumber:
    """``(psi, O psi) / (psi, psi)``; raises LightConeError for null states."""
    return inner_product(psi, O @ psi) * hy_inverse(inner_product(psi, psi))


def evolve(H: GMatrix, psi0: GVector, t: float) -> GVector:
    """Solve ``j dpsi/dt = H psi`` as ``psi(t) = exp(j t H) psi(0)`` (``j`` is its own inverse)."""
    _require_square(H)
    if H.shape[0] != len(psi0):
        raise DimensionMismatchError(f"H is {H.shape}, state has length {len(psi0)}")
    return exp_series(H, t, J) @ psi0.astype_float()


def evolution_residual(H: GMatrix, psi0: GVector, t: float, dt: float = 1e-5) -> float:
    """Max-norm of ``j psi'(t) - H psi(t)`` with a central-difference derivative."""
    dpsi = (evolve(H, psi0, t + dt) - evolve(H, psi0, t - dt)).scale(1.0 / (2 * dt))
    resid = dpsi.scale(J) - H.astype_float() @ evolve(H, psi0, t)
    return resid.max_abs()


def operator_norm_estimate(A: GMatrix, samples: int = 10_000, rng=None) -> float:
    """Sampled lower bound for ``sup_{||v|| = 1} ||A v||``.

    The unit sphere is the Euclidean sphere in the 2n real coordinates, so it
    is sampled with normalised Gaussians plus the 2n coordinate directions.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    n = A.shape[1]
    ar, ah = A.re.astype(float), A.hy.astype(float)
    pts = rng.normal(size=(samples, 2 * n))
    pts = np.vstack([pts, np.eye(2 * n)])
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    vr, vh = pts[:, :n], pts[:, n:]
    out_r = vr @ ar.T + vh @ ah.T
    out_h = vh @ ar.T + vr @ ah.T
    return float(np.max(np.sqrt(np.sum(out_r**2 + out_h**2, axis=1))))
