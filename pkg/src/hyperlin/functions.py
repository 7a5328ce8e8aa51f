"""Grid-sampled hyperbolic-valued functions on the real line.

A :class:`GridFunction` stores the 1- and j-components of ``f(x)`` on the
uniform grid ``x_k = -L + k h``.  Integrals use composite quadrature on that
grid (trapezoid by default; Simpson on request), derivatives use fourth-order
finite differences.
"""
from __future__ import annotations

import csv
import io
import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .algebra import HyperbolicNumber
from .errors import GridMismatchError, UnsupportedOrderError

MAX_DERIVATIVE_ORDER = 4
ACCURACY = 4
BOUNDARY_FRACTION = 0.1
DEFAULT_HALF_WIDTH = 20.0
DEFAULT_POINTS = 8001


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid on ``[-half_width, half_width]`` with an odd number of points."""

    half_width: float = DEFAULT_HALF_WIDTH
    points: int = DEFAULT_POINTS

    def __post_init__(self):
        if not self.half_width > 0:
            raise ValueError(f"half_width must be positive, got {self.half_width}")
        if self.points < 3 or self.points % 2 == 0:
            raise ValueError(f"points must be an odd integer >= 3, got {self.points}")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.points - 1)

    h = spacing

    @property
    def x(self) -> np.ndarray:
        # symmetric construction so that x[mid] == 0.0 exactly
        k = np.arange(self.points) - (self.points - 1) // 2
        return k * self.spacing

    def refined(self) -> "GridSpec":
        """Same domain with the spacing halved."""
        return GridSpec(self.half_width, 2 * self.points - 1)


class GridFunction:
    __slots__ = ("spec", "re", "hy")

    def __init__(self, spec: GridSpec, re, hy=None):
        re = np.asarray(re, dtype=float)
        hy = np.zeros_like(re) if hy is None else np.asarray(hy, dtype=float)
        if re.shape != (spec.points,) or hy.shape != (spec.points,):
            raise ValueError(f"expected {spec.points} samples, got {re.shape} / {hy.shape}")
        self.spec = spec
        self.re = re
        self.hy = hy

    @classmethod
    def from_callable(cls, spec: GridSpec, fn) -> "GridFunction":
        """Sample ``fn(x) -> (re, hy)`` or ``fn(x) -> re`` on the grid."""
        out = fn(spec.x)
        if isinstance(out, tuple):
            return cls(spec, *out)
        return cls(spec, out)

    @property
    def x(self) -> np.ndarray:
        return self.spec.x

    @property
    def values(self) -> list[HyperbolicNumber]:
        return [HyperbolicNumber(float(a), float(b)) for a, b in zip(self.re, self.hy)]

    def pointwise_norm(self) -> np.ndarray:
        return np.hypot(self.re, self.hy)

    def _check(self, other: "GridFunction"):
        if self.spec != other.spec:
            raise GridMismatchError(f"grids differ: {self.spec} vs {other.spec}")

    def __add__(self, other):
        self._check(other)
        return GridFunction(self.spec, self.re + other.re, self.hy + other.hy)

    def __sub__(self, other):
        self._check(other)
        return GridFunction(self.spec, self.re - other.re, self.hy - other.hy)

    def scale(self, alpha) -> "GridFunction":
        alpha = HyperbolicNumber.coerce(alpha)
        a, b = float(alpha.x), float(alpha.y)
        return GridFunction(self.spec, a * self.re + b * self.hy, a * self.hy + b * self.re)

    def __rmul__(self, alpha):
        return self.scale(alpha)

    def multiply_by_coordinate(self, power: int = 1) -> "GridFunction":
        w = self.x**power
        return GridFunction(self.spec, w * self.re, w * self.hy)

    # -- serialisation -----------------------------------------------------

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["x", "value_x", "value_y"])
        for row in zip(self.x, self.re, self.hy):
            writer.writerow([repr(float(v)) for v in row])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "GridFunction":
        rows = list(csv.DictReader(io.StringIO(text)))
        xs = np.array([float(r["x"]) for r in rows])
        spec = GridSpec(float(xs[-1]), len(xs))
        if not np.allclose(xs, spec.x, rtol=0, atol=1e-9 * spec.half_width):
            raise GridMismatchError("CSV abscissae are not a symmetric uniform grid")
        return cls(spec, [float(r["value_x"]) for r in rows], [float(r["value_y"]) for r in rows])

    def to_dict(self) -> dict:
        return {
            "half_width": self.spec.half_width,
            "points": self.spec.points,
            "values": np.stack([self.re, self.hy], axis=1).tolist(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "GridFunction":
        spec = GridSpec(float(data["half_width"]), int(data["points"]))
        vals = np.asarray(data["values"], dtype=float).reshape(-1, 2)
        return cls(spec, vals[:, 0], vals[:, 1])

    @classmethod
    def from_json(cls, text: str) -> "GridFunction":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"GridFunction({self.spec})"


# ---------------------------------------------------------------------------
# Built-in test functions


def gaussian(x):
    return np.exp(-(x**2))


def normalized_gaussian(x):
    """Unit L2 norm: ``pi**-0.25 * exp(-x**2 / 2)``."""
    return np.exp(-(x**2) / 2) / math.pi**0.25


def standard_normal(x):
    """Unit integral: ``exp(-x**2 / 2) / sqrt(2 pi)``; its transform is ``exp(p**2 / 2)``."""
    return np.exp(-(x**2) / 2) / math.sqrt(2 * math.pi)


def indicator(x, a: float = 1.0):
    """Indicator of ``[-a, a]`` with the midpoint value 1/2 at the jumps."""
    tol = 1e-12 * max(1.0, a)
    out = (np.abs(x) < a - tol).astype(float)
    out[np.abs(np.abs(x) - a) <= tol] = 0.5
    return out


def bump(x):
    """``exp(-1 / (1 - x**2))`` on ``(-1, 1)``, zero outside; smooth with compact support."""
    out = np.zeros_like(x, dtype=float)
    inside = np.abs(x) < 1
    out[inside] = np.exp(-1.0 / (1.0 - x[inside] ** 2))
    return out


def plane_wave(k: float):
    """``exp(j k x) = cosh(k x) + j sinh(k x)``."""

    def fn(x):
        return np.cosh(k * x), np.sinh(k * x)

    return fn


GENERATORS = {
    "gaussian": gaussian,
    "normalized-gaussian": normalized_gaussian,
    "standard-normal": standard_normal,
    "indicator": indicator,
    "bump": bump,
}

_PLANE_WAVE = re.compile(r"^plane-wave\(\s*([-+0-9.eE]+)\s*\)$")


def make_function(name: str, spec: GridSpec) -> GridFunction:
    """Sample a built-in generator selected by name, e.g. ``"plane-wave(1.5)"``."""
    m = _PLANE_WAVE.match(name.strip())
    if m:
        return GridFunction.from_callable(spec, plane_wave(float(m.group(1))))
    try:
        fn = GENERATORS[name]
    except KeyError:
        known = ", ".join([*GENERATORS, "plane-wave(k)"])
        raise ValueError(f"unknown generator {name!r}; known: {known}") from None
    return GridFunction.from_callable(spec, fn)


# ---------------------------------------------------------------------------
# Quadrature


def quadrature_weights(n: int, h: float, rule: str = "trapezoid") -> np.ndarray:
    w = np.full(n, h)
    if rule == "trapezoid":
        w[0] = w[-1] = h / 2
    elif rule == "simpson":
        if n % 2 == 0:
            raise ValueError("Simpson's rule needs an odd number of points")
        w[1:-1:2] = 4 * h / 3
        w[2:-1:2] = 2 * h / 3
        w[0] = w[-1] = h / 3
    else:
        raise ValueError(f"unknown quadrature rule {rule!r}")
    return w


def integrate(values, h: float, rule: str = "trapezoid"):
    values = np.asarray(values)
    return values @ quadrature_weights(values.shape[-1], h, rule)


def l2_inner(f: GridFunction, g: GridFunction, rule: str = "trapezoid") -> HyperbolicNumber:
    """``integral conj(f) g dx``."""
    f._check(g)
    h = f.spec.spacing
    re = integrate(f.re * g.re - f.hy * g.hy, h, rule)
    hy = integrate(f.re * g.hy - f.hy * g.re, h, rule)
    return HyperbolicNumber(float(re), float(hy))


def l2_norm(f: GridFunction, rule: str = "trapezoid") -> float:
    return math.sqrt(float(integrate(f.re**2 + f.hy**2, f.spec.spacing, rule)))


# ---------------------------------------------------------------------------
# Finite differences


def fd_weights(offsets, order: int) -> list[Fraction]:
    """Exact weights for the ``order``-th derivative at 0 from integer ``offsets`` (Fornberg)."""
    nodes = [Fraction(o) for o in offsets]
    n = len(nodes)
    c = [[Fraction(0)] * (order + 1) for _ in range(n)]
    c[0][0] = Fraction(1)
    c1, c4 = Fraction(1), nodes[0]
    for i in range(1, n):
        mn = min(i, order)
        c2, c5, c4 = Fraction(1), c4, nodes[i]
        for j in range(i):
            c3 = nodes[i] - nodes[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2
            for k in range(mn, 0, -1):
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3
            c[j][0] = c4 * c[j][0] / c3
        c1 = c2
    return [row[order] for row in c]


@lru_cache(maxsize=None)
def _stencils(order: int, n: int):
    """Central stencil for the interior plus shifted one-sided stencils near each edge."""
    half = (order + 1) // 2 - 1 + ACCURACY // 2
    central = tuple(range(-half, half + 1))
    width = order + ACCURACY
    if n < max(width, len(central)):
        raise ValueError(f"grid of {n} points too small for derivative order {order}")
    left = []
    for i in range(half):
        offs = tuple(range(-i, width - i))
        left.append((offs, tuple(float(w) for w in fd_weights(offs, order))))
    return central, tuple(float(w) for w in fd_weights(central, order)), tuple(left)


def derivative(values, h: float, order: int = 1) -> np.ndarray:
    """Fourth-order finite-difference derivative of a real sample array."""
    if order == 0:
        return np.array(values, dtype=float)
    if not 1 <= order <= MAX_DERIVATIVE_ORDER:
        raise UnsupportedOrderError(f"derivative order {order} not in 0..{MAX_DERIVATIVE_ORDER}")
    v = np.asarray(values, dtype=float)
    n = v.shape[0]
    central, cw, left = _stencils(order, n)
    half = len(central) // 2
    out = np.zeros(n)
    for off, w in zip(central, cw):
        out[half : n - half] += w * v[half + off : n - half + off]
    sign = -1.0 if order % 2 else 1.0
    for i, (offs, w) in enumerate(left):
        out[i] = np.dot(w, v[[i + o for o in offs]])
        # mirrored stencil at the right edge
        out[n - 1 - i] = sign * np.dot(w, v[[n - 1 - i - o for o in offs]])
    return out / h**order


def grid_derivative(f: GridFunction, order: int = 1) -> GridFunction:
    h = f.spec.spacing
    return GridFunction(f.spec, derivative(f.re, h, order), derivative(f.hy, h, order))


def schwartz_seminorm(f: GridFunction, n: int, m: int) -> float:
    """Estimate ``sup_x ||x**n f^(m)(x)||`` on the grid."""
    if m > MAX_DERIVATIVE_ORDER:
        raise UnsupportedOrderError(f"derivative order {m} not supported (max {MAX_DERIVATIVE_ORDER})")
    if n < 0 or m < 0:
        raise ValueError("seminorm indices must be non-negative")
    d = grid_derivative(f, m) if m else f
    return float(np.max(np.abs(f.x) ** n * d.pointwise_norm()))


# ---------------------------------------------------------------------------
# Hyperbolic canonical pair


def position_op_q(f: GridFunction) -> GridFunction:
    """``(q psi)(q) = q psi(q)``."""
    return f.multiply_by_coordinate()


def momentum_op_q(f: GridFunction) -> GridFunction:
    """``(p psi)(q) = -j psi'(q)``."""
    return grid_derivative(f).scale(HyperbolicNumber(0.0, -1.0))


def position_op_p(f: GridFunction) -> GridFunction:
    """Momentum-space position operator ``+j d/dp``."""
    return grid_derivative(f).scale(HyperbolicNumber(0.0, 1.0))


def momentum_op_p(f: GridFunction) -> GridFunction:
    """Momentum-space momentum operator: multiplication by ``p``."""
    return f.multiply_by_coordinate()


REPRESENTATIONS = {
    "position": (position_op_q, momentum_op_q),
    "momentum": (position_op_p, momentum_op_p),
}


def interior_mask(spec: GridSpec, fraction: float = BOUNDARY_FRACTION) -> np.ndarray:
    k = int(math.ceil(fraction * spec.points))
    mask = np.zeros(spec.points, dtype=bool)
    mask[k : spec.points - k] = True
    return mask


def commutator(f: GridFunction, rep: str = "position") -> GridFunction:
    q, p = REPRESENTATIONS[rep]
    return q(p(f)) - p(q(f))


def ccr_commutator_residual(f: GridFunction, rep: str = "position") -> float:
    """Max interior norm of ``[q, p] f - j f``; the outer 10% on each side is excluded."""
    if rep not in REPRESENTATIONS:
        raise ValueError(f"rep must be one of {sorted(REPRESENTATIONS)}, got {rep!r}")
    resid = commutator(f, rep) - f.scale(HyperbolicNumber(0.0, 1.0))
    return float(np.max(resid.pointwise_norm()[interior_mask(f.spec)]))


def ccr_convergence_order(fn, spec: GridSpec, rep: str = "position") -> tuple[float, float, float]:
    """Residuals on ``spec`` and on its refinement, and the observed order ``log2(r_coarse / r_fine)``."""
    coarse = ccr_commutator_residual(GridFunction.from_callable(spec, fn), rep)
    fine = ccr_commutator_residual(GridFunction.from_callable(spec.refined(), fn), rep)
    return coarse, fine, math.log2(coarse / fine)


# ---------------------------------------------------------------------------
# Hyperbolic Fourier transform


TRUNCATION_LEVELS = (0.25, 0.5, 1.0)


@dataclass
class FourierResult:
    """Transform values at the requested momenta.

    ``truncation_trace[i]`` lists ``(half_width, ||value||)`` for each nested
    truncation of the x-domain at momentum ``momenta[i]``.
    """

    momenta: np.ndarray
    re: np.ndarray
    hy: np.ndarray
    converged: np.ndarray
    truncation_trace: list = field(default_factory=list)

    @property
    def values(self) -> list[HyperbolicNumber]:
        return [HyperbolicNumber(float(a), float(b)) for a, b in zip(self.re, self.hy)]

    def norms(self) -> np.ndarray:
        return np.hypot(self.re, self.hy)

    def to_grid_function(self) -> GridFunction:
        """Repackage as a GridFunction when the momenta form a symmetric odd uniform grid."""
        p = np.asarray(self.momenta, dtype=float)
        spec = GridSpec(float(p[-1]), len(p))
        if not np.allclose(p, spec.x, rtol=0, atol=1e-12 * spec.half_width):
            raise GridMismatchError("momenta do not form a symmetric uniform grid")
        return GridFunction(spec, self.re, self.hy)


def _transform_window(f: GridFunction, momenta: np.ndarray, half_width: float, rule: str):
    x = f.x
    sel = np.abs(x) <= half_width * (1 + 1e-12)
    xs, a, b = x[sel], f.re[sel], f.hy[sel]
    w = quadrature_weights(xs.size, f.spec.spacing, rule)
    px = np.outer(momenta, xs)
    with np.errstate(over="ignore", invalid="ignore"):
        ch, sh = np.cosh(px), np.sinh(px)
        # (cosh - j sinh)(a + j b) = (a cosh - b sinh) + j (b cosh - a sinh)
        re = (ch * a - sh * b) @ w
        hy = (ch * b - sh * a) @ w
    return re, hy


def fourier_kernel(p, x) -> HyperbolicNumber:
    """``exp(-j p x) = cosh(p x) - j sinh(p x)``."""
    return HyperbolicNumber(math.cosh(p * x), -math.sinh(p * x))


def hyperbolic_fourier(
    f: GridFunction, momenta, tolerance: float = 1e-6, rule: str = "trapezoid"
) -> FourierResult:
    """``F[f](p) = integral exp(-j p x) f(x) dx`` with divergence detection.

    Each momentum is integrated over ``[-L/4, L/4]``, ``[-L/2, L/2]`` and
    ``[-L, L]``; it is flagged converged when the last two agree within
    ``tolerance * (1 + ||value||)``.  Divergence is reported, never raised.
    """
    p = np.atleast_1d(np.asarray(momenta, dtype=float))
    L = f.spec.half_width
    levels = [(lvl * L, *_transform_window(f, p, lvl * L, rule)) for lvl in TRUNCATION_LEVELS]
    re, hy = levels[-1][1], levels[-1][2]
    prev_re, prev_hy = levels[-2][1], levels[-2][2]
    with np.errstate(invalid="ignore"):
        norm = np.hypot(re, hy)
        gap = np.hypot(re - prev_re, hy - prev_hy)
        converged = np.isfinite(norm) & (gap <= tolerance * (1 + norm))
    trace = [
        [(float(width), float(np.hypot(r[i], h[i]))) for width, r, h in levels]
        for i in range(p.size)
    ]
    return FourierResult(p, re, hy, converged, trace)


def plancherel_defect(f: GridFunction, P: float, momentum_points: int = 601) -> float:
    """L2 norm of ``F[f]`` restricted to ``[-P, P]``.

    An isometry would keep this below ``||f||`` for every window; for a
    Gaussian it grows without bound in ``P``.
    """
    if P <= 0:
        return 0.0
    p = np.linspace(-P, P, momentum_points)
    res = hyperbolic_fourier(f, p)
    return math.sqrt(float(integrate(res.re**2 + res.hy**2, p[1] - p[0])))


# ---------------------------------------------------------------------------
# Delta limit-representation and embedding


def delta_kernel(alpha: float, x) -> np.ndarray:
    """``f_alpha(x) = 2 sinh(alpha x) / x`` with the removable value ``2 alpha`` at 0."""
    x = np.asarray(x, dtype=float)
    out = np.full(x.shape, 2.0 * alpha)
    nz = x != 0
    with np.errstate(over="ignore"):
        out[nz] = 2.0 * np.sinh(alpha * x[nz]) / x[nz]
    return out


def delta_limit_integral(alpha: float, phi: GridFunction, rule: str = "trapezoid") -> HyperbolicNumber:
    """``integral f_alpha(x) phi(x) dx``; for ``phi = exp(-x**2)`` it grows without bound in alpha."""
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    k = delta_kernel(alpha, phi.x)
    h = phi.spec.spacing
    return HyperbolicNumber(float(integrate(k * phi.re, h, rule)), float(integrate(k * phi.hy, h, rule)))


def _restrict(f: GridFunction, half_width: float) -> GridFunction:
    sel = np.abs(f.x) <= half_width * (1 + 1e-12)
    n = int(sel.sum())
    return GridFunction(GridSpec(f.spec.spacing * (n - 1) / 2, n), f.re[sel], f.hy[sel])


def embedding_check(f: GridFunction, orders, tolerance: float = 1e-6) -> bool:
    """Finite seminorms and finite L2 norm, judged by stability under domain growth.

    Every quantity is evaluated on ``[-L/2, L/2]`` and ``[-L, L]``; it counts
    as finite when the two agree within ``tolerance`` relative.
    """
    half = _restrict(f, f.spec.half_width / 2)

    def stable(a, b):
        return math.isfinite(b) and abs(b - a) <= tolerance * max(1.0, abs(b))

    for n, m in orders:
        if not stable(schwartz_seminorm(half, n, m), schwartz_seminorm(f, n, m)):
            return False
    return stable(l2_norm(half), l2_norm(f))
