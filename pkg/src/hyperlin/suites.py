"""Named verification suites and their structured reports."""
from __future__ import annotations

import json
import math
import os
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

import numpy as np
from scipy import integrate as sp_integrate

from . import algebra as alg
from . import ccr
from . import functions as fs
from . import linalg as la
from .algebra import HyperbolicNumber as H
from .errors import ConfigError, LightConeError, NotInDomainError, UnknownSuiteError

SCHEMA_VERSION = 1
BACKENDS = ("rational", "float")
DEFAULT_BACKEND = "rational"
BACKEND_ENV = "HYPERLIN_BACKEND"
SQRT2 = math.sqrt(2.0)


def backend_from_env() -> str:
    value = os.environ.get(BACKEND_ENV, DEFAULT_BACKEND).strip().lower()
    if value not in BACKENDS:
        raise ConfigError(f"{BACKEND_ENV} must be one of {BACKENDS}, got {value!r}")
    return value


@dataclass
class SuiteConfig:
    suite: str = "all"
    half_width: Optional[float] = None
    points: Optional[int] = None
    tolerance: float = 1e-6
    seed: int = 0
    output: Optional[str] = None
    format: str = "text"
    algebra_file: Optional[str] = None
    matrix_file: Optional[str] = None
    upto: Optional[int] = None
    samples: Optional[int] = None
    backend: str = DEFAULT_BACKEND

    def validate(self):
        if self.suite not in SUITES:
            raise UnknownSuiteError(self.suite)
        if not (self.tolerance > 0 and math.isfinite(self.tolerance)):
            raise ConfigError(f"tolerance must be positive, got {self.tolerance}")
        if self.half_width is not None and not self.half_width > 0:
            raise ConfigError(f"grid half-width must be positive, got {self.half_width}")
        if self.points is not None and (self.points < 3 or self.points % 2 == 0):
            raise ConfigError(f"grid points must be an odd integer >= 3, got {self.points}")
        if self.upto is not None and self.upto < 2:
            raise ConfigError(f"upto must be >= 2, got {self.upto}")
        if self.samples is not None and self.samples < 1:
            raise ConfigError(f"samples must be positive, got {self.samples}")
        if self.format not in ("json", "text"):
            raise ConfigError(f"format must be json or text, got {self.format!r}")
        if self.backend not in BACKENDS:
            raise ConfigError(f"backend must be one of {BACKENDS}, got {self.backend!r}")
        return self

    def grid(self, half_width: float, points: int) -> fs.GridSpec:
        """The suite's default grid with any CLI overrides applied."""
        try:
            return fs.GridSpec(self.half_width or half_width, self.points or points)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def n(self, default: int) -> int:
        return self.samples if self.samples is not None else default


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, H):
        return [_jsonable(value.x), _jsonable(value.y)]
    if isinstance(value, ccr.ComplexRational):
        return [_jsonable(value.re), _jsonable(value.im)]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (complex, np.complexfloating)):
        return [_jsonable(value.real), _jsonable(value.imag)]
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        v = float(value)
        return v if math.isfinite(v) else repr(v)
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclass
class Check:
    id: str
    description: str
    anchor: str
    measured: dict
    expected: object
    passed: bool


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)
    environment: dict = field(default_factory=dict)
    elapsed: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, id, description, anchor, measured, expected, passed):
        self.checks.append(Check(id, description, anchor, measured, expected, bool(passed)))

    def to_dict(self, stable: bool = False) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "pass": self.passed,
            "environment": self.environment,
            "checks": [
                {
                    "id": c.id,
                    "description": c.description,
                    "anchor": c.anchor,
                    "measured": c.measured,
                    "expected": c.expected,
                    "pass": c.passed,
                }
                for c in self.checks
            ],
        }
        if not stable:
            out["run"] = {
                "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
                "elapsed_seconds": self.elapsed,
            }
        return _jsonable(out)

    def to_json(self, stable: bool = False) -> str:
        return json.dumps(self.to_dict(stable), indent=2, sort_keys=False) + "\n"

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}   overall: {'PASS' if self.passed else 'FAIL'}"]
        env = ", ".join(f"{k}={v}" for k, v in _jsonable(self.environment).items())
        lines.append(f"environment: {env}")
        width = max((len(c.id) for c in self.checks), default=10)
        for c in self.checks:
            measured = json.dumps(_jsonable(c.measured), separators=(",", ":"))
            if len(measured) > 100:
                measured = measured[:97] + "..."
            lines.append(f"  {'PASS' if c.passed else 'FAIL'}  {c.id:<{width}}  {c.description}  {measured}")
        n_pass = sum(c.passed for c in self.checks)
        lines.append(f"{n_pass}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# helpers


def _rng(config: SuiteConfig, suite: str) -> np.random.Generator:
    return np.random.default_rng([config.seed, list(SUITES).index(suite)])


def _rand_fraction(rng, lo=-30, hi=30, max_den=12) -> Fraction:
    return Fraction(int(rng.integers(lo, hi + 1)), int(rng.integers(1, max_den + 1)))


def _rand_hyper(rng, exact: bool) -> H:
    if exact:
        return H(_rand_fraction(rng), _rand_fraction(rng))
    return H(float(rng.uniform(-10, 10)), float(rng.uniform(-10, 10)))


def _relative_defects(spec: alg.AlgebraSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    na, nb = np.linalg.norm(a, axis=1), np.linalg.norm(b, axis=1)
    nab = np.linalg.norm(spec.multiply(a, b), axis=1)
    return np.abs(nab - na * nb) / (na * nb)


def _first_failure(triples, predicate):
    for t in triples:
        if predicate(*t):
            return list(t)
    return None


# ---------------------------------------------------------------------------
# algebra


def suite_algebra(config: SuiteConfig, report: VerificationReport):
    rng = _rng(config, "algebra")
    n = config.n(10_000)
    anchor_albert = "multiplicative norms on R, C, H, O"
    specs = {name: build() for name, build in alg.BUILTIN_SPECS.items()}

    for name in ("R", "C", "H", "O"):
        spec = specs[name]
        a = rng.normal(size=(n, spec.dim))
        b = rng.normal(size=(n, spec.dim))
        worst = float(np.max(_relative_defects(spec, a, b)))
        report.add(
            f"multiplicative_norm_{name}",
            f"relative |N(ab) - N(a)N(b)| over {n} random pairs in {name}",
            anchor_albert, {"max_relative_defect": worst, "pairs": n},
            {"max_relative_defect_at_most": 1e-10}, worst <= 1e-10,
        )

    G = specs["G"]
    witness = alg.multiplicativity_defect(G.element([1, 1]), G.element([1, -1]))
    report.add(
        "hyperbolic_norm_not_multiplicative",
        "N(ab) - N(a)N(b) for the zero-divisor pair a = 1+j, b = 1-j",
        "the modulus on G is a norm but not multiplicative",
        {"defect": witness}, {"defect": 2, "tolerance": 1e-12}, abs(witness - 2.0) <= 1e-12,
    )

    a = rng.normal(size=(n, 2))
    b = rng.normal(size=(n, 2))
    worst = float(np.max(_relative_defects(G, a, b)))
    report.add(
        "hyperbolic_norm_defect_random",
        "largest relative multiplicativity defect on random G pairs (nonzero expected)",
        "the modulus on G is a norm but not multiplicative",
        {"max_relative_defect": worst}, "strictly positive", worst > 1e-3,
    )

    Hq = specs["H"]
    e = [Hq.basis(i) for i in range(4)]
    e1e2, e2e1 = e[1] * e[2], e[2] * e[1]
    report.add(
        "quaternion_basis_products",
        "e1 e2 = e3 and e2 e1 = -e3 in H",
        "quaternion table from the Levi-Civita tensor",
        {"e1e2": e1e2.r, "e2e1": e2e1.r},
        {"e1e2": [0, 0, 0, 1], "e2e1": [0, 0, 0, -1]},
        e1e2 == e[3] and e2e1 == (-1) * e[3],
    )
    a, b, c = (rng.normal(size=(n, 4)) for _ in range(3))
    assoc = float(np.max(np.abs(Hq.multiply(Hq.multiply(a, b), c) - Hq.multiply(a, Hq.multiply(b, c)))))
    report.add(
        "quaternion_associative",
        f"max |(ab)c - a(bc)| over {n} random H triples",
        "H is associative but not commutative", {"max_abs_defect": assoc},
        {"at_most": 1e-10}, assoc <= 1e-10,
    )

    O = specs["O"]
    basis_triples = [(i, j, k) for i in range(1, 8) for j in range(1, 8) for k in range(1, 8)]
    nonassoc = _first_failure(
        basis_triples,
        lambda i, j, k: (O.basis(i) * O.basis(j)) * O.basis(k) != O.basis(i) * (O.basis(j) * O.basis(k)),
    )
    e2e4 = O.basis(2) * O.basis(4)
    report.add(
        "octonion_nonassociative",
        "a basis triple (e_i e_j) e_k != e_i (e_j e_k) in O, and e2 e4 = e6",
        "octonion table from seven oriented triples",
        {"triple": nonassoc, "e2e4": e2e4.r},
        "a failing triple exists; e2e4 = e6",
        nonassoc is not None and e2e4 == O.basis(6),
    )

    rat = config.backend == "rational"
    zs = [_rand_hyper(rng, rat) for _ in range(min(n, 2000))]
    comm = all(alg.hy_mul(z, w) == alg.hy_mul(w, z) for z, w in zip(zs, zs[1:]))
    assoc_ok = all(
        alg.hy_mul(alg.hy_mul(z, w), u) == alg.hy_mul(z, alg.hy_mul(w, u))
        for z, w, u in zip(zs, zs[1:], zs[2:])
    ) if rat else True
    report.add(
        "hyperbolic_ring_laws",
        "G multiplication commutative (and associative, exactly, on rationals)",
        "G is a commutative ring", {"commutative": comm, "associative": assoc_ok, "backend": config.backend},
        {"commutative": True, "associative": True}, comm and assoc_ok,
    )

    a = rng.normal(size=(n, 2))
    b = rng.normal(size=(n, 2))
    via_spec = G.multiply(a, b)
    direct = np.stack([a[:, 0] * b[:, 0] + a[:, 1] * b[:, 1], a[:, 0] * b[:, 1] + a[:, 1] * b[:, 0]], axis=1)
    gap = float(np.max(np.abs(via_spec - direct) / (1 + np.abs(direct))))
    report.add(
        "ansatz_reproduces_hy_mul",
        "structure constants of C with f_110 flipped reproduce hy_mul",
        "Cl(0,1) -> Cl(1,0) structure-constant ansatz",
        {"max_relative_gap": gap, "f_110": float(G.f[1, 1, 0])},
        {"max_relative_gap_at_most": 1e-14, "f_110": 1.0},
        gap <= 1e-14 and G.f[1, 1, 0] == 1.0,
    )

    # inverse and light cone
    m = config.n(1000)
    off, worst_ulps = [], 0.0
    exact_ok = True
    while len(off) < m:
        z = _rand_hyper(rng, rat)
        if not alg.light_cone_contains(H(0, 0), z):
            off.append(z)
    for z in off:
        prod = alg.hy_mul(z, alg.hy_inverse(z))
        if rat:
            exact_ok &= prod == H(1, 0)
        else:
            x, y = float(z.x), float(z.y)
            cond = (x * x + y * y) / abs((x - y) * (x + y))
            err = max(abs(prod.x - 1.0), abs(prod.y)) / (np.spacing(1.0) * cond)
            worst_ulps = max(worst_ulps, err)
    if not rat:
        exact_ok = worst_ulps <= 4.0
    report.add(
        "inverse_off_cone",
        f"z * inverse(z) == 1 for {m} random z off the light cone",
        "inverse formula x/(x^2-y^2) - j y/(x^2-y^2)",
        {"count": m, "backend": config.backend, "worst_ulps_per_condition": worst_ulps},
        "exact equality (rational) / <= 4 ulp scaled by conditioning (float)", exact_ok,
    )

    raised = 0
    for _ in range(m):
        t = _rand_fraction(rng) if rat else float(rng.uniform(-10, 10))
        if t == 0:
            t = 1 if rat else 1.0
        sign = 1 if rng.integers(0, 2) else -1
        try:
            alg.hy_inverse(H(t, sign * t))
        except LightConeError:
            raised += 1
    report.add(
        "inverse_on_cone_raises",
        f"LightConeError for {m} random nonzero z on the light cone",
        "G is not a field", {"raised": raised, "count": m}, {"raised": m}, raised == m,
    )

    zs = [H(_rand_fraction(rng), _rand_fraction(rng)) for _ in range(200)]
    ok = all(
        z * z.conjugate() == H(z.x * z.x - z.y * z.y, 0)
        and (z.y == 0 or z.x * z.x + z.y * z.y != (z * z.conjugate()).x)
        for z in zs
    )
    z = H(1, 2)
    report.add(
        "norm_squared_differs_from_z_zbar",
        "z zbar = x^2 - y^2 (exact) differs from ||z||^2 off the real axis",
        "||z||^2 != z zbar", {"example_z": z, "norm_squared": 5, "z_zbar": z * z.conjugate()},
        {"z_zbar": [-3, 0]}, ok and z * z.conjugate() == H(-3, 0),
    )

    cone = [
        alg.light_cone_contains(H(0, 0), H(2, 2)),
        alg.light_cone_contains(H(0, 0), H(1, 0)),
        alg.light_cone_contains(H(1, 1), H(3, -1)),
    ]
    report.add(
        "light_cone_examples",
        "2+2j on V_0; 1 off V_0; 3-j on V_(1+j)",
        "light cone V_z", {"memberships": cone}, [True, False, True], cone == [True, False, True],
    )

    if config.algebra_file:
        try:
            custom = alg.AlgebraSpec.from_json(Path(config.algebra_file).read_text())
        except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot load algebra file: {exc}") from exc
        a = rng.normal(size=(n, custom.dim))
        b = rng.normal(size=(n, custom.dim))
        worst = float(np.max(_relative_defects(custom, a, b)))
        report.add(
            "custom_algebra_multiplicativity",
            f"relative multiplicativity defect of the Euclidean modulus on {custom.name}",
            "multiplicative norms on R, C, H, O",
            {"dim": custom.dim, "max_relative_defect": worst, "multiplicative": worst <= 1e-10},
            "informational", True,
        )


# ---------------------------------------------------------------------------
# bounds


def suite_bounds(config: SuiteConfig, report: VerificationReport):
    rng = _rng(config, "bounds")
    total = config.n(100_000)
    limit = SQRT2 + 1e-12
    dims = np.arange(1, 9)
    per = [total // 8 + (1 if i < total % 8 else 0) for i in range(8)]
    worst_s = worst_i = 0.0
    for dim, count in zip(dims, per):
        if count == 0:
            continue
        al = rng.normal(size=(count, 2))
        x = rng.normal(size=(count, 2, dim))
        y = rng.normal(size=(count, 2, dim))
        worst_s = max(worst_s, float(np.max(la.scalar_bound_ratios(al[:, 0], al[:, 1], x[:, 0], x[:, 1]))))
        worst_i = max(worst_i, float(np.max(la.inner_bound_ratios(x[:, 0], x[:, 1], y[:, 0], y[:, 1]))))
    report.add(
        "scalar_bound", f"max ||a x|| / (||a|| ||x||) over {total} samples in G^n, n <= 8",
        "||a x|| <= sqrt(2) ||a|| ||x|| in G^n", {"max_ratio": worst_s},
        {"at_most": limit}, worst_s <= limit,
    )
    report.add(
        "inner_bound", f"max ||(x, y)|| / (||x|| ||y||) over {total} samples in G^n, n <= 8",
        "||(x, y)|| <= sqrt(2) ||x|| ||y|| in G^n", {"max_ratio": worst_i},
        {"at_most": limit}, worst_i <= limit,
    )

    one_j, one_mj = H(1, 1), H(1, -1)
    tight_s = la.scalar_bound_check(one_j, la.GVector([one_j]))
    tight_i = la.inner_bound_check(la.GVector([one_j]), la.GVector([one_mj]))
    report.add(
        "bounds_tight", "alpha = x = 1+j and (1+j, 1-j) attain sqrt(2)",
        "sqrt(2) constant is sharp", {"scalar": tight_s, "inner": tight_i},
        {"both": SQRT2, "tolerance": 1e-12},
        abs(tight_s - SQRT2) <= 1e-12 and abs(tight_i - SQRT2) <= 1e-12,
    )
    zero_s = la.scalar_bound_check(one_j, la.GVector([one_mj]))
    zero_i = la.inner_bound_check(la.GVector([one_j]), la.GVector([one_j]))
    report.add(
        "bounds_annihilating", "(1+j)(1-j) = 0 and ((1+j), (1+j)) = 0 give ratio 0",
        "zero divisors in G^n", {"scalar": zero_s, "inner": zero_i}, {"both": 0},
        zero_s == 0 and zero_i == 0,
    )

    spec = config.grid(20.0, 8001)
    psi = fs.make_function("normalized-gaussian", spec)
    phi = fs.GridFunction.from_callable(spec, lambda x: (np.exp(-((x - 1) ** 2)), np.sin(x) * np.exp(-(x**2))))
    worst = 0.0
    for _ in range(50):
        z = H(*rng.normal(size=2))
        worst = max(worst, fs.l2_norm(psi.scale(z)) / (alg.hy_norm(z) * fs.l2_norm(psi)))
    ratio_ip = alg.hy_norm(fs.l2_inner(psi, phi)) / (fs.l2_norm(psi) * fs.l2_norm(phi))
    report.add(
        "l2_bounds", "sqrt(2) bounds in L2(R, G) for random scalars and a pair of grid functions",
        "L2(R, G) is a hyperbolic Hilbert space",
        {"max_scalar_ratio": worst, "inner_ratio": ratio_ip}, {"at_most": limit},
        worst <= limit and ratio_ip <= limit,
    )

    # rational boost: a = (1+t^2)/(1-t^2), b = 2t/(1-t^2) satisfies a^2 - b^2 = 1
    boosts = []
    for _ in range(5):
        t = Fraction(int(rng.integers(-9, 10)), 10)
        boosts.append(H((1 + t * t) / (1 - t * t), 2 * t / (1 - t * t)))
    U = la.GMatrix.diag(boosts)
    xs = [la.GVector([_rand_hyper(rng, True) for _ in range(5)]) for _ in range(20)]
    preserved = all(
        la.inner_product(U @ u, U @ v) == la.inner_product(u, v) for u, v in zip(xs, xs[1:])
    )
    report.add(
        "boost_unitary", "diag(cosh + j sinh) with rational entries preserves (x, y) exactly",
        "unitary operators on G^n", {"unitary": la.is_unitary(U), "random_pairs_preserved": preserved},
        True, la.is_unitary(U) and preserved,
    )

    A = la.GMatrix.from_parts(rng.normal(size=(3, 3)), rng.normal(size=(3, 3)))
    est = la.operator_norm_estimate(A, rng=rng)
    ar, ah = A.re, A.hy
    real_form = np.block([[ar, ah], [ah, ar]])
    exact = float(np.linalg.norm(real_form, 2))
    report.add(
        "operator_norm_estimate", "sampled operator norm is a lower bound close to the real 2n x 2n spectral norm",
        "bounded operators", {"estimate": est, "spectral_norm_of_real_form": exact},
        "estimate <= exact and within 5%", est <= exact * (1 + 1e-12) and est >= 0.95 * exact,
    )


# ---------------------------------------------------------------------------
# eigen


def _hyper_array_mul(a_re, a_hy, b_re, b_hy):
    return a_re * b_re + a_hy * b_hy, a_re * b_hy + a_hy * b_re


def _det_grid(A: la.GMatrix, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """||det(A - lambda I)|| on a grid of lambda = u + j v, by direct entrywise expansion."""
    a11 = (A.re[0, 0] - u, A.hy[0, 0] - v)
    a22 = (A.re[1, 1] - u, A.hy[1, 1] - v)
    d1 = _hyper_array_mul(*a11, *a22)
    d2 = _hyper_array_mul(A.re[0, 1], A.hy[0, 1], A.re[1, 0], A.hy[1, 0])
    return np.hypot(d1[0] - d2[0], d1[1] - d2[1])


def grid_scan_zeros(A: la.GMatrix, resolution: int = 801) -> tuple[np.ndarray, float]:
    """Brute-force zero set of ``||det(A - lambda I)||``: local minima below a slope-based threshold."""
    A = A.astype_float()
    centre = 0.5 * (A.re[0, 0] + A.re[1, 1])
    radius = 1.0 + A.frobenius_norm() * 1.5
    axis = np.linspace(-radius, radius, resolution)
    step = axis[1] - axis[0]
    u, v = np.meshgrid(centre + axis, axis, indexing="ij")
    d = _det_grid(A, u, v)
    inner = d[1:-1, 1:-1]
    neighbours = np.stack(
        [d[1 + di : d.shape[0] - 1 + di, 1 + dj : d.shape[1] - 1 + dj]
         for di in (-1, 0, 1) for dj in (-1, 0, 1) if (di, dj) != (0, 0)]
    )
    is_min = np.all(inner <= neighbours, axis=0)
    threshold = 4.0 * step * (2 * radius + abs(centre) + A.frobenius_norm())
    sel = is_min & (inner <= threshold)
    pts = np.stack([u[1:-1, 1:-1][sel], v[1:-1, 1:-1][sel]], axis=1)
    return pts, step


def _zero_sets_agree(pts: np.ndarray, eigenvalues, step: float) -> bool:
    ev = np.array([[float(z.x), float(z.y)] for z in eigenvalues]).reshape(-1, 2)
    if len(ev) == 0:
        return len(pts) == 0
    if len(pts) == 0:
        return False
    dist = np.linalg.norm(pts[:, None, :] - ev[None, :, :], axis=2)
    tol = 2.0 * step
    return bool(np.all(dist.min(axis=1) <= tol) and np.all(dist.min(axis=0) <= tol))


def suite_eigen(config: SuiteConfig, report: VerificationReport):
    rng = _rng(config, "eigen")
    n = config.n(10_000)
    anchor = "SA2(G) eigenvalue trichotomy"
    mismatches = 0
    worst_resid = 0.0
    counts = {s.value: 0 for s in la.Spectrum}
    for k in range(n):
        A = la.random_sa2(rng)
        if k % 10 == 0:
            # force the boundary case delta = 0
            x11, x22, x12 = A.re[0, 0], A.re[1, 1], A.re[0, 1]
            y12 = math.sqrt((x11 - x22) ** 2 + 4 * x12 * x12) / 2
            A = la.GMatrix.from_parts(A.re, np.array([[0.0, y12], [-y12, 0.0]]))
        res = la.eigen_sa2(A)
        counts[res.classification.value] += 1
        delta = (A.re[0, 0] - A.re[1, 1]) ** 2 + 4 * A.re[0, 1] ** 2 - 4 * A.hy[0, 1] ** 2
        scale = 1 + A.frobenius_norm() ** 2
        if abs(delta) <= la.DISCRIMINANT_TOL * scale:
            expected = la.Spectrum.ONE_REAL
        else:
            expected = la.Spectrum.TWO_REAL_PLUS_TWO_HYPERBOLIC if delta > 0 else la.Spectrum.NO_EIGENVALUES
        expected_len = {la.Spectrum.ONE_REAL: 1, la.Spectrum.NO_EIGENVALUES: 0}.get(expected, 4)
        if res.classification != expected or len(res.eigenvalues) != expected_len:
            mismatches += 1
        for lam in res.eigenvalues:
            worst_resid = max(worst_resid, la.characteristic_residual(A, lam) / scale)
    report.add(
        "classification_matches_discriminant",
        f"classification agrees with sign(delta) on {n} random SA2(G) matrices",
        anchor, {"mismatches": mismatches, "counts": counts}, {"mismatches": 0}, mismatches == 0,
    )
    report.add(
        "eigenvalue_residuals",
        "every eigenvalue satisfies ||det(A - lambda I)|| <= 1e-10 (1 + ||A||^2)",
        anchor, {"max_scaled_residual": worst_resid}, {"at_most": 1e-10}, worst_resid <= 1e-10,
    )

    oracle_n = min(100, n)
    agree = 0
    made = 0
    while made < oracle_n:
        A = la.random_sa2(rng)
        res = la.eigen_sa2(A)
        if res.classification != la.Spectrum.TWO_REAL_PLUS_TWO_HYPERBOLIC:
            continue
        made += 1
        pts, step = grid_scan_zeros(A)
        agree += _zero_sets_agree(pts, res.eigenvalues, step)
    degenerate = la.GMatrix([[0, H(1, 1)], [H(1, -1), 0]])
    pts, step = grid_scan_zeros(degenerate)
    deg_ok = _zero_sets_agree(pts, la.eigen_sa2(degenerate).eigenvalues, step)
    report.add(
        "grid_scan_oracle",
        f"brute-force zero set of ||det(A - lambda I)|| matches returned eigenvalues ({oracle_n} delta>0 cases + one delta=0)",
        anchor, {"agreeing": agree, "instances": oracle_n, "delta_zero_case": deg_ok},
        {"agreeing": oracle_n, "delta_zero_case": True}, agree == oracle_n and deg_ok,
    )

    rat = config.backend == "rational"

    def mat(entries):
        A = la.GMatrix(entries)
        return A if rat else A.astype_float()

    examples = [
        ("delta_positive", mat([[2, H(1, 1)], [H(1, -1), 0]]), la.Spectrum.TWO_REAL_PLUS_TWO_HYPERBOLIC,
         [H(2, 0), H(0, 0), H(1, 1), H(1, -1)]),
        ("delta_zero", mat([[0, H(1, 1)], [H(1, -1), 0]]), la.Spectrum.ONE_REAL, [H(0, 0)]),
        ("delta_negative", mat([[0, H(0, 1)], [H(0, -1), 0]]), la.Spectrum.NO_EIGENVALUES, []),
    ]
    for name, A, cls, expected in examples:
        res = la.eigen_sa2(A)
        measured = {
            "classification": res.classification,
            "discriminant": res.discriminant,
            "eigenvalues": res.eigenvalues,
        }
        if cls == la.Spectrum.NO_EIGENVALUES:
            herm = np.linalg.eigvalsh(la.t_map(A))
            measured["t_map_eigenvalues"] = herm
            ok = res.classification == cls and np.allclose(herm, [-1, 1], atol=1e-12)
            desc = "NoEigenvalues vs t_map eigenvalues +-1"
        else:
            ok = res.classification == cls and res.eigenvalues == expected
            desc = f"{cls.value} with the closed-form roots"
        report.add(f"example_{name}", desc, anchor, measured,
                   {"classification": cls, "eigenvalues": expected}, ok)

    differ = coincide = total = 0
    for _ in range(min(n, 2000)):
        A = la.random_sa2(rng)
        res = la.eigen_sa2(A)
        if res.classification != la.Spectrum.TWO_REAL_PLUS_TWO_HYPERBOLIC:
            continue
        total += 1
        herm = np.sort(np.linalg.eigvalsh(la.t_map(A)))
        real = np.sort([float(res.eigenvalues[0].x), float(res.eigenvalues[1].x)])
        differ += not np.allclose(herm, real, rtol=0, atol=1e-9)
        B = la.GMatrix.from_parts(A.re, np.zeros((2, 2)))
        rb = la.eigen_sa2(B)
        herm_b = np.sort(np.linalg.eigvalsh(la.t_map(B)))
        real_b = np.sort([float(rb.eigenvalues[0].x), float(rb.eigenvalues[1].x)])
        coincide += np.allclose(herm_b, real_b, rtol=0, atol=1e-12)
    report.add(
        "t_map_spectra",
        "Hermitian eigenvalues of T(A) differ from the real eigenvalues of A unless y12 = 0",
        "comparison of A with T(A)", {"delta_positive_samples": total, "differ": differ, "coincide_when_y12_zero": coincide},
        {"differ": total, "coincide_when_y12_zero": total}, differ == total and coincide == total,
    )

    Jm = la.GMatrix([[H(0, 1)]])
    prod_then_map = la.t_map(Jm @ Jm)
    map_then_prod = la.t_map(Jm) @ la.t_map(Jm)
    report.add(
        "t_map_not_homomorphism", "T([[j]] [[j]]) = [[1]] but T([[j]])^2 = [[-1]]",
        "T is a bijection, not an algebra map",
        {"T(AB)": prod_then_map, "T(A)T(B)": map_then_prod}, {"T(AB)": [[1]], "T(A)T(B)": [[-1]]},
        prod_then_map[0, 0] == 1 and map_then_prod[0, 0] == -1,
    )

    adj_ok = True
    for _ in range(100):
        A = la.GMatrix([[_rand_hyper(rng, True) for _ in range(3)] for _ in range(3)])
        B = la.GMatrix([[_rand_hyper(rng, True) for _ in range(3)] for _ in range(3)])
        adj_ok &= la.adjoint(la.adjoint(A)) == A and la.adjoint(A @ B) == la.adjoint(B) @ la.adjoint(A)
    report.add(
        "adjoint_laws", "(A^dag)^dag = A and (AB)^dag = B^dag A^dag exactly on random rational matrices",
        "A^dag = conj(A)^t", {"holds": adj_ok}, True, adj_ok,
    )

    if config.matrix_file:
        try:
            data = json.loads(Path(config.matrix_file).read_text())
            A = la.GMatrix.from_pairs(data["matrix"] if isinstance(data, dict) else data)
        except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot load matrix file: {exc}") from exc
        if not rat:
            A = A.astype_float()
        measured = {"shape": list(A.shape), "self_adjoint": A.is_square and la.is_self_adjoint(A)}
        ok = True
        if A.shape == (2, 2) and measured["self_adjoint"]:
            res = la.eigen_sa2(A)
            resid = max((la.characteristic_residual(A, lam) for lam in res.eigenvalues), default=0.0)
            measured.update(
                classification=res.classification, discriminant=res.discriminant,
                eigenvalues=res.eigenvalues, t_map_eigenvalues=np.linalg.eigvalsh(la.t_map(A)),
                max_residual=resid,
            )
            ok = resid <= 1e-10 * (1 + A.frobenius_norm() ** 2)
        report.add("matrix_file", "classification of the supplied matrix", anchor, measured,
                   "residual <= 1e-10 (1 + ||A||^2) when self-adjoint 2x2", ok)


# ---------------------------------------------------------------------------
# fourier


def _oracle_exp_p2(P: float) -> float:
    return math.sqrt(sp_integrate.quad(lambda p: math.exp(p * p), -P, P)[0])


def suite_fourier(config: SuiteConfig, report: VerificationReport):
    rng = _rng(config, "fourier")
    spec = config.grid(20.0, 8001)
    f = fs.make_function("standard-normal", spec)
    anchor = "hyperbolic Fourier transform of a Gaussian is exp(p^2/2)"
    momenta = [0.0, 0.5, 1.0, 1.5, 2.0]
    res = fs.hyperbolic_fourier(f, momenta, config.tolerance)
    ratios = res.re / np.exp(np.array(momenta) ** 2 / 2)
    ok = bool(np.all(np.abs(ratios - 1) <= 0.01) and np.all(np.abs(res.hy) <= 1e-12 * np.abs(res.re)))
    report.add(
        "gaussian_transform", "F[Gaussian](p) / exp(p^2/2) for p in {0, 0.5, 1, 1.5, 2}",
        anchor, {"ratios": ratios, "converged": res.converged}, {"ratio_within": 0.01}, ok,
    )

    windows = [0.5, 1.0, 2.0, 3.0]
    defects = [fs.plancherel_defect(f, P) for P in windows]
    oracle = [_oracle_exp_p2(P) for P in windows]
    rel = [abs(d / o - 1) for d, o in zip(defects, oracle)]
    increasing = all(b > a for a, b in zip(defects, defects[1:]))
    report.add(
        "no_plancherel", "windowed ||F[f]|| on [-P, P] for P in {0.5, 1, 2, 3}: increasing, >= 5.5 at P = 2",
        "no hyperbolic Plancherel theorem",
        {"defects": defects, "oracle": oracle, "relative_gap": rel, "input_l2_norm": fs.l2_norm(f)},
        {"increasing": True, "at_P2_at_least": 5.5, "oracle_within": 0.01},
        increasing and defects[2] >= 5.5 and max(rel) <= 0.01,
    )

    div = fs.hyperbolic_fourier(f, [8.0], 1e-6)
    trace = [t[1] for t in div.truncation_trace[0]]
    report.add(
        "kernel_divergence", "p = 8: truncation trace strictly increasing and not converged at 1e-6",
        "kernel exp(-jpx) grows like exp(|p x|)", {"trace": div.truncation_trace[0], "converged": div.converged[0]},
        {"increasing": True, "converged": False},
        all(b > a for a, b in zip(trace, trace[1:])) and not div.converged[0],
    )

    ind = fs.make_function("indicator", spec)
    ps = [0.5, 1.0, 2.0]
    r = fs.hyperbolic_fourier(ind, ps, config.tolerance)
    exact = [2 * math.sinh(p) / p for p in ps]
    gap = max(abs(a / b - 1) for a, b in zip(r.re, exact))
    report.add(
        "indicator_transform", "F[1_[-1,1]](p) = 2 sinh(p)/p",
        anchor, {"values": r.re, "exact": exact, "max_relative_gap": gap}, {"within": 1e-4},
        gap <= 1e-4 and float(np.max(np.abs(r.hy))) <= 1e-12,
    )

    worst = 0.0
    for _ in range(20):
        p, x = rng.uniform(-3, 3, size=2)
        k = fs.fourier_kernel(p, x)
        s = la.exp_series(la.GMatrix([[float(x)]]), float(p), H(0.0, -1.0))[0, 0]
        worst = max(worst, alg.hy_norm(k - s) / alg.hy_norm(k))
    report.add(
        "kernel_identity", "exp(-jpx) = cosh(px) - j sinh(px) against the power series at 20 random points",
        "exp(-jpx) power series", {"max_relative_gap": worst}, {"at_most": 1e-12}, worst <= 1e-12,
    )

    g = fs.GridFunction.from_callable(spec, lambda x: (x * np.exp(-(x**2)), np.exp(-((x - 0.5) ** 2))))
    a, b = H(*rng.normal(size=2)), H(*rng.normal(size=2))
    ps = [-1.5, -0.5, 0.0, 0.7, 1.2]
    lhs = fs.hyperbolic_fourier(f.scale(a) + g.scale(b), ps, config.tolerance)
    rf = fs.hyperbolic_fourier(f, ps, config.tolerance)
    rg = fs.hyperbolic_fourier(g, ps, config.tolerance)
    worst = 0.0
    for i in range(len(ps)):
        if not (lhs.converged[i] and rf.converged[i] and rg.converged[i]):
            continue
        rhs = a * rf.values[i] + b * rg.values[i]
        worst = max(worst, alg.hy_norm(lhs.values[i] - rhs) / (1 + alg.hy_norm(rhs)))
    report.add(
        "linearity", "F[a f + b g] = a F[f] + b F[g] at converged momenta",
        "hyperbolic Fourier transform", {"max_gap": worst, "converged": lhs.converged},
        {"at_most": 1e-8}, worst <= 1e-8 and bool(np.all(lhs.converged)),
    )


# ---------------------------------------------------------------------------
# delta


def _oracle_delta(alpha: float) -> float:
    return math.sqrt(math.pi) * sp_integrate.quad(lambda p: math.exp(p * p / 4), -alpha, alpha)[0]


def suite_delta(config: SuiteConfig, report: VerificationReport):
    spec = config.grid(20.0, 8001)
    phi = fs.make_function("gaussian", spec)
    anchor = "2 sinh(alpha x)/x is not a limit-representation of delta"
    alphas = [0.5, 1.0, 2.0, 3.0, 4.0]
    vals = [fs.delta_limit_integral(a, phi) for a in alphas]
    re = [v.x for v in vals]
    oracle = [_oracle_delta(a) for a in alphas]
    rel = [abs(v / o - 1) for v, o in zip(re, oracle)]
    ok = (
        all(b > a for a, b in zip(re, re[1:]))
        and re[-1] > 10
        and max(rel) <= 0.01
        and all(v.y == 0 for v in vals)
    )
    report.add(
        "delta_limit_diverges",
        "integral of f_alpha(x) exp(-x^2): increasing in alpha, > 10 at alpha = 4, matches sqrt(pi) int e^(p^2/4)",
        anchor, {"values": re, "oracle": oracle, "relative_gap": rel, "phi(0)": 1.0},
        {"increasing": True, "alpha4_above": 10, "oracle_within": 0.01}, ok,
    )
    small = fs.delta_limit_integral(1e-8, phi).x
    report.add(
        "delta_limit_small_alpha", "alpha -> 0+ sends the integral to 0",
        anchor, {"alpha": 1e-8, "value": small}, {"at_most": 1e-6}, abs(small) <= 1e-6,
    )

    s00 = fs.schwartz_seminorm(phi, 0, 0)
    s10 = fs.schwartz_seminorm(phi, 1, 0)
    exact10 = (2 * math.e) ** -0.5
    one = fs.GridFunction(spec, np.ones(spec.points))
    grow = [fs.schwartz_seminorm(fs.GridFunction(fs.GridSpec(L, 801), np.ones(801)), 1, 0) for L in (5, 10, 20)]
    report.add(
        "schwartz_seminorms", "seminorms of exp(-x^2): ||.||_00 = 1, ||.||_10 = (2e)^-1/2; constant grows with L",
        "Schwartz seminorms", {"n0m0": s00, "n1m0": s10, "constant_n1m0_by_L": grow},
        {"n0m0": 1, "n1m0": exact10, "tolerance": 1e-4},
        abs(s00 - 1) <= 1e-12 and abs(s10 - exact10) <= 1e-4 and grow == [5.0, 10.0, 20.0],
    )
    orders = [(0, 0), (1, 0), (2, 1), (3, 2)]
    xg = fs.GridFunction.from_callable(spec, lambda x: x * np.exp(-(x**2)))
    emb = {
        "gaussian": fs.embedding_check(phi, orders),
        "x_gaussian": fs.embedding_check(xg, orders),
        "constant": fs.embedding_check(one, [(1, 0)]),
    }
    report.add(
        "embedding", "finite seminorms and L2 norm (stable under domain growth)",
        "S subset L2 subset S'", emb, {"gaussian": True, "x_gaussian": True, "constant": False},
        emb == {"gaussian": True, "x_gaussian": True, "constant": False},
    )


# ---------------------------------------------------------------------------
# ccr


def suite_ccr(config: SuiteConfig, report: VerificationReport):
    rng = _rng(config, "ccr")
    anchor = "CCR on the sum-zero subspace of l2 with Q = diag(N)"
    upto = config.upto or 100
    count = min(49, upto - 1)
    sweep = ccr.adjacent_difference_sweep(count, upto)
    x = ccr.FiniteSupportVector({1: 1, 2: -1})
    comps = ccr.commutator_apply(x, 3)[:2]
    report.add(
        "adjacent_differences", f"[Q, P] x = i x exactly for x = e_k - e_(k+1), k <= {count}, upto = {upto}",
        anchor, {"all_exact": sweep, "e1-e2 components": comps},
        {"all_exact": True, "e1-e2 components": [[0, 1], [0, -1]]},
        sweep and comps == [ccr.I, ccr.ZERO - ccr.I],
    )

    n = config.n(200)
    upto_r = config.upto or 120
    max_index = min(60, upto_r)
    results = [ccr.commutator_check(ccr.random_domain_vector(rng, max_index=max_index), upto_r) for _ in range(n)]
    report.add(
        "random_domain_vectors", f"[Q, P] x = i x exactly for {n} random sum-zero vectors, upto = {upto_r}",
        anchor, {"exact_passes": sum(results), "count": n}, {"exact_passes": n}, all(results),
    )

    try:
        ccr.commutator_check(ccr.FiniteSupportVector.basis(1), 10)
        residual, raised = None, False
    except NotInDomainError as exc:
        residual, raised = exc.residual, True
    constant = raised and all(r == ccr.ComplexRational(0, -1) for r in residual)
    report.add(
        "outside_domain", "x = e_1 (sum 1) raises NotInDomainError with residual -i in every component",
        anchor, {"raised": raised, "residual_first_components": (residual or [])[:3]},
        {"raised": True, "residual": [0, -1]}, constant,
    )

    sym_ok = True
    for _ in range(20):
        u = ccr.random_domain_vector(rng, max_index=30)
        v = ccr.random_domain_vector(rng, max_index=30)
        w = max(u.support + v.support)
        lhs = ccr.pairing(ccr.apply_P(u, w), v.dense(w))
        rhs = ccr.pairing(u.dense(w), ccr.apply_P(v, w))
        sym_ok &= lhs == rhs
    report.add(
        "p_formally_symmetric", "<P u, v> = <u, P v> exactly for finitely supported u, v",
        anchor, {"holds": sym_ok}, True, sym_ok,
    )

    pair = ccr.CounterexamplePair(8)
    report.add(
        "q_spectrum_pure_point", "Q is diagonal with eigenvalues 1, 2, 3, ...: pure point, unlike multiplication by q",
        "inequivalence witness (not a proof)", {"first_eigenvalues": pair.q_spectrum()},
        "positive integers", pair.q_spectrum() == list(range(1, 9)),
    )

    spec = config.grid(10.0, 4001)
    coarse = fs.GridSpec(spec.half_width, (spec.points + 1) // 2)
    for rep in ("position", "momentum"):
        f = fs.make_function("gaussian", spec)
        resid = fs.ccr_commutator_residual(f, rep)
        r_coarse, r_fine, order = fs.ccr_convergence_order(fs.gaussian, coarse, rep)
        report.add(
            f"hyperbolic_ccr_{rep}",
            f"[q, p] f = j f on the grid ({rep} representation), N = {spec.points}, and convergence order",
            "hyperbolic canonical commutation relation [q, p] = j I",
            {"residual": resid, "residual_coarse": r_coarse, "residual_fine": r_fine, "order": order},
            {"residual_at_most": 1e-6, "order_at_least": 3.5},
            resid <= 1e-6 and order >= 3.5,
        )


# ---------------------------------------------------------------------------
# weyl


def suite_weyl(config: SuiteConfig, report: VerificationReport):
    spec = config.grid(20.0, 8001)
    h = spec.spacing
    ts = [0.0, h, 100 * h, 250 * h, 1000 * h]
    ss = [0.0, 0.5, 1.0, 2 * math.pi / (2 * spec.half_width), 2.0]
    worst = max(ccr.weyl_relation_check(t, s, spec) for t in ts for s in ss)
    report.add(
        "weyl_relation", "max ||(V1(t) V2(s) - exp(its) V2(s) V1(t)) psi|| over a 5 x 5 aligned (t, s) grid",
        "Weyl relation V1(t) V2(s) = exp(its) V2(s) V1(t)", {"max_residual": worst, "t": ts, "s": ss},
        {"at_most": 1e-12}, worst <= 1e-12,
    )
    try:
        ccr.weyl_relation_check(0.5 * h, 1.0, spec)
        raised = False
    except ccr.GridAlignmentError:
        raised = True
    report.add(
        "weyl_alignment", "a translation that is not a whole number of grid steps is rejected",
        "Weyl relation V1(t) V2(s) = exp(its) V2(s) V1(t)", {"raised": raised}, True, raised,
    )


# ---------------------------------------------------------------------------
# axioms


def suite_axioms(config: SuiteConfig, report: VerificationReport):
    rng = _rng(config, "axioms")
    rat = config.backend == "rational"
    anchor = "expected value (psi, O psi) / (psi, psi)"

    def num(v):
        return v if rat else float(v)

    O = la.GMatrix.diag([num(2), num(3)])
    e1, e2 = la.GVector([num(1), num(0)]), la.GVector([num(0), num(1)])
    both = la.GVector([num(1), num(1)])
    measured = {
        "E_e1": la.expected_value(O, e1),
        "E_e2": la.expected_value(O, e2),
        "E_(1,1)": la.expected_value(O, both),
    }
    ok = measured["E_e1"] == H(2, 0) and measured["E_e2"] == H(3, 0) and measured["E_(1,1)"] == H(Fraction(5, 2), 0)

    A = la.GMatrix([[2, H(1, 1)], [H(1, -1), 0]])
    if not rat:
        A = A.astype_float()
    # (A - 2I) v = 0 with a second component on the light cone, and (v, v) = 4
    v = la.GVector([num(2), H(num(1), num(-1))])
    eig_check = A @ v == v.scale(H(num(2), num(0)))
    measured["E_eigvec_lambda2"] = la.expected_value(A, v)
    ok &= eig_check and measured["E_eigvec_lambda2"] == H(2, 0)
    report.add(
        "expected_value_on_eigenvectors", "E_psi(O) equals the eigenvalue on eigenvectors, exactly",
        anchor, measured, {"E_e1": [2, 0], "E_e2": [3, 0], "E_(1,1)": ["5/2", 0], "E_eigvec_lambda2": [2, 0]}, ok,
    )

    raised = 0
    trials = 50
    for _ in range(trials):
        a, b = _rand_fraction(rng) or 1, _rand_fraction(rng) or 1
        psi = la.GVector([H(a, a), H(b, -b)])
        try:
            la.expected_value(O, psi)
        except LightConeError:
            raised += 1
    report.add(
        "null_states_rejected", "states with (psi, psi) = 0 raise LightConeError",
        anchor, {"raised": raised, "trials": trials}, {"raised": trials}, raised == trials,
    )

    worst = 0.0
    for _ in range(20):
        Hm = la.random_sa2(rng)
        psi0 = la.GVector.from_parts(rng.normal(size=2), rng.normal(size=2))
        worst = max(worst, la.evolution_residual(Hm, psi0, float(rng.uniform(0, 1))))
    scalar = la.evolve(la.GMatrix([[1.0]]), la.GVector([1.0]), 1.0)[0]
    scalar_gap = alg.hy_norm(scalar - H(math.cosh(1), math.sinh(1)))
    report.add(
        "schroedinger_residual", "psi(t) = exp(jtH) psi0 satisfies j psi' = H psi; scalar case gives cosh 1 + j sinh 1",
        "hyperbolic Schroedinger equation j dpsi/dt = H psi",
        {"max_residual": worst, "scalar_gap": scalar_gap}, {"residual_at_most": 1e-6, "scalar_gap_at_most": 1e-12},
        worst <= 1e-6 and scalar_gap <= 1e-12,
    )

    worst_group = worst_unit = 0.0
    for _ in range(10):
        Hm = la.random_sa2(rng)
        s, t = rng.uniform(-1, 1, size=2)
        lhs = la.exp_series(Hm, s + t)
        rhs = la.exp_series(Hm, s) @ la.exp_series(Hm, t)
        worst_group = max(worst_group, (lhs - rhs).max_abs())
        U = la.exp_series(Hm, t)
        worst_unit = max(worst_unit, (la.adjoint(U) @ U - la.GMatrix.identity(2)).max_abs())
    report.add(
        "one_parameter_group", "exp(j(s+t)H) = exp(jsH) exp(jtH); exp(jtH) is G-unitary for self-adjoint H",
        "exp(jtA) by power series", {"max_group_gap": worst_group, "max_unitarity_gap": worst_unit},
        {"at_most": 1e-10}, worst_group <= 1e-10 and worst_unit <= 1e-10,
    )

    obs = la.GMatrix([[0, H(0, 1)], [H(0, -1), 0]])
    res = la.eigen_sa2(obs)
    report.add(
        "observable_notions", "self-adjointness and real spectrum reported independently for [[0, j], [-j, 0]]",
        "observables: real spectrum vs self-adjoint",
        {"self_adjoint": la.is_self_adjoint(obs), "classification": res.classification},
        "informational", True,
    )


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class SuiteInfo:
    name: str
    description: str
    topics: tuple
    runner: Optional[Callable] = None


SUITES = {
    "algebra": SuiteInfo(
        "algebra", "G ring laws, inverse and light cone; structure-constant algebras R, C, H, O, G",
        ("multiplicative norms", "hyperbolic ring", "structure-constant ansatz"), suite_algebra),
    "bounds": SuiteInfo(
        "bounds", "sqrt(2) bounds in G^n and L2(R, G); unitarity; operator norm estimate",
        ("hyperbolic Hilbert spaces",), suite_bounds),
    "eigen": SuiteInfo(
        "eigen", "SA2(G) eigenvalue trichotomy, grid-scan oracle, T-map comparison",
        ("self-adjoint operators on G^2",), suite_eigen),
    "fourier": SuiteInfo(
        "fourier", "hyperbolic Fourier transform, kernel divergence, absence of Plancherel",
        ("hyperbolic Fourier transform", "position/momentum inequivalence"), suite_fourier),
    "delta": SuiteInfo(
        "delta", "failure of 2 sinh(alpha x)/x as a delta limit; Schwartz seminorms; embedding",
        ("rapid decrease", "tempered distributions"), suite_delta),
    "ccr": SuiteInfo(
        "ccr", "exact l2 counterexample to naive uniqueness; hyperbolic [q, p] = j on a grid",
        ("canonical commutation relation", "hyperbolic position and momentum representations"), suite_ccr),
    "weyl": SuiteInfo(
        "weyl", "Weyl relation for the complex Schroedinger representation on a periodic grid",
        ("Weyl relation",), suite_weyl),
    "axioms": SuiteInfo(
        "axioms", "expected values, null states, hyperbolic Schroedinger evolution",
        ("hyperbolic quantum mechanics axioms", "exp(jtA)"), suite_axioms),
    "all": SuiteInfo("all", "every suite above, in catalog order", ("everything",), None),
}


def list_suites() -> list[dict]:
    return [{"name": s.name, "description": s.description, "topics": list(s.topics)} for s in SUITES.values()]


def run_suite(config: SuiteConfig) -> VerificationReport:
    config.validate()
    report = VerificationReport(
        suite=config.suite,
        environment={
            "grid": {"half_width": config.half_width, "points": config.points},
            "tolerance": config.tolerance,
            "seed": config.seed,
            "backend": config.backend,
            "samples": config.samples,
            "upto": config.upto,
        },
    )
    names = [n for n in SUITES if n != "all"] if config.suite == "all" else [config.suite]
    for name in names:
        start = len(report.checks)
        t0 = time.perf_counter()
        SUITES[name].runner(config, report)
        report.elapsed[name] = round(time.perf_counter() - t0, 3)
        if config.suite == "all":
            for c in report.checks[start:]:
                c.id = f"{name}.{c.id}"
    return report
