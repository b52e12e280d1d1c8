"""Generators for extremal and control configurations.

Progression grids realize exactly n^3 zeros of the additive polynomial
x + y + s + t (and of its multiplicative twin x*y*s*t - 1): the first three
sets index an arithmetic (resp. geometric) progression and the fourth
absorbs every triple sum (resp. product).

The space-curve construction uses the smooth cubic y^2 = x^3 + a*x + b with
one real component, whose real points form a circle group.  Mapping a point
to its normalized arc parameter

    theta(P) = (1/Omega) * integral_x(P)^inf dt / sqrt(t^3 + a*t + b)

(reflected to 1 - theta for y < 0) identifies the group with R/Z, so the
n-element subgroup sits at theta = k/n.  Embedding (x, y) -> (x, y, x^2)
lands on the intersection of the quadrics w = x^2 and y^2 = x*w + a*x + b, a
space curve of degree four on which four affine points are coplanar exactly
when their group sum is the identity: planes pull back to the function space
spanned by {1, x, y, x^2}, whose members have divisor sum zero.  The
subgroup therefore spans coplanar quadruples indexed by 4-subsets of
{1..n-1} with index sum divisible by n, which `coplanar_index_oracle`
counts exactly.

Torsion coordinates are floats with stated tolerances: exact rational
torsion on these curves is bounded by a small constant, so large subgroups
are necessarily numeric.

The moment curve (t, t^2, t^3) is the degree-3 control: a plane meets it in
at most three points, so it spans no coplanar quadruples at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .geometry import PointSet3
from .polynomials import Polynomial, parse_poly
from .zerocount import GridSets

__all__ = [
    "TORSION_COPLANAR_TOL",
    "ApGrid",
    "ap_grid",
    "EllipticConfig",
    "make_curve",
    "CurvePoint",
    "IDENTITY",
    "on_curve",
    "group_add",
    "group_neg",
    "angle",
    "point_at_angle",
    "torsion_points",
    "embed_quartic",
    "coplanar_index_oracle",
    "moment_curve_points",
]

_VARS = ("x", "y", "s", "t")

# Float-mode coplanarity tolerance validated against the index oracle for
# torsion sets up to n = 32: truly coplanar quadruples stay below 2e-15 of
# the distance-product scale, the nearest non-coplanar ones above 1e-10.
TORSION_COPLANAR_TOL = 1e-12


@dataclass(frozen=True)
class ApGrid:
    """A grid construction with its matched polynomial and exact zero count."""

    kind: str
    sets: GridSets
    poly: Polynomial
    expected: int


def _grid_index_count(n: int) -> int:
    """Zeros of the progression grid by index arithmetic: triples (i, j, k)
    in [1, n]^3 whose sum lands in the absorbing index range [3, 3n]."""
    pair_sums: dict[int, int] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            pair_sums[i + j] = pair_sums.get(i + j, 0) + 1
    count = 0
    for k in range(1, n + 1):
        for m, mult in pair_sums.items():
            if 3 <= m + k <= 3 * n:
                count += mult
    return count


def ap_grid(kind: str, n: int) -> ApGrid:
    """Progression grids realizing exactly n^3 zeros.

    additive:        A = B = C = {1..n}, D = {-3n..-3}, F = x + y + s + t;
    multiplicative:  A = B = C = {2^1..2^n}, D = {2^-3n..2^-3},
                     F = x*y*s*t - 1.

    The expected count is computed from index sums, not asserted.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "additive":
        poly = parse_poly("x + y + s + t", _VARS)
        abc = [Fraction(i) for i in range(1, n + 1)]
        d = [Fraction(-m) for m in range(3 * n, 2, -1)]
    elif kind == "multiplicative":
        poly = parse_poly("x*y*s*t - 1", _VARS)
        abc = [Fraction(2) ** i for i in range(1, n + 1)]
        d = [Fraction(2) ** (-m) for m in range(3 * n, 2, -1)]
    else:
        raise ValueError(f"unknown grid kind {kind!r}")
    sets = GridSets.from_values(abc, abc, abc, d)
    return ApGrid(kind, sets, poly, _grid_index_count(n))


# -- elliptic construction ----------------------------------------------------


@dataclass(frozen=True)
class EllipticConfig:
    """Curve y^2 = x^3 + a*x + b with one real component.

    `period` is twice the arc integral from the real root of the cubic to
    infinity; `root` is that real root; `angle_tol` bounds the accepted
    error when inverting the angle map.
    """

    a: Fraction
    b: Fraction
    period: float
    root: float
    angle_tol: float = 1e-9


@dataclass(frozen=True)
class CurvePoint:
    x: float = 0.0
    y: float = 0.0
    infinity: bool = False

    def __repr__(self) -> str:
        return "O" if self.infinity else f"({self.x!r}, {self.y!r})"


IDENTITY = CurvePoint(infinity=True)


def _cubic(cfg: EllipticConfig, x: float) -> float:
    return x * x * x + float(cfg.a) * x + float(cfg.b)


def make_curve(a=Fraction(1), b=Fraction(1), angle_tol: float = 1e-9) -> EllipticConfig:
    """Validate the curve and compute its real period by quadrature."""
    a, b = Fraction(a), Fraction(b)
    disc = 4 * a ** 3 + 27 * b ** 2
    if disc == 0:
        raise ValueError("singular curve: 4a^3 + 27b^2 = 0")
    if disc < 0:
        raise ValueError("curve has two real components; a single component is required")
    roots = np.roots([1.0, 0.0, float(a), float(b)])
    real = [r.real for r in roots if abs(r.imag) < 1e-9 * (1 + abs(r))]
    e0 = float(min(real))
    af = float(a)
    for _ in range(60):  # Newton polish of the root
        f = e0 ** 3 + af * e0 + float(b)
        df = 3 * e0 ** 2 + af
        if df == 0:
            break
        step = f / df
        e0 -= step
        if abs(step) < 1e-16 * (1 + abs(e0)):
            break
    period = 2.0 * _arc_integral(af, e0, e0)
    return EllipticConfig(a, b, period, e0, angle_tol)


def _arc_integral(a: float, e0: float, x0: float) -> float:
    """integral_x0^inf dt / sqrt(t^3 + a*t + b) for a one-root cubic.

    Substituting t = e0 + u^2 removes the inverse-square-root singularity at
    the root: the integrand becomes 2 / sqrt(q(e0 + u^2)) with
    q(w) = w^2 + e0*w + (e0^2 + a) positive on the real line.
    """
    c = e0 * e0 + a

    def integrand(u: float) -> float:
        w = e0 + u * u
        return 2.0 / math.sqrt(w * w + e0 * w + c)

    u0 = math.sqrt(max(x0 - e0, 0.0))
    value, err = quad(integrand, u0, np.inf, epsabs=1e-13, epsrel=1e-11, limit=300)
    if not math.isfinite(value) or err > 1e-8 * (1.0 + abs(value)):
        raise RuntimeError(f"arc quadrature did not converge (err={err:g})")
    return value


def on_curve(cfg: EllipticConfig, p: CurvePoint, tol: float = 1e-9) -> bool:
    if p.infinity:
        return True
    return abs(p.y * p.y - _cubic(cfg, p.x)) <= tol * (1.0 + abs(p.x) ** 3)


def group_neg(p: CurvePoint) -> CurvePoint:
    return p if p.infinity else CurvePoint(p.x, -p.y)


def _project_to_curve(cfg: EllipticConfig, x: float, y: float) -> CurvePoint:
    # Newton steps on the constraint y^2 - cubic(x) = 0 along its gradient;
    # keeps rounding error from accumulating over repeated additions.
    a = float(cfg.a)
    for _ in range(3):
        r = y * y - _cubic(cfg, x)
        gx = -(3.0 * x * x + a)
        gy = 2.0 * y
        norm2 = gx * gx + gy * gy
        if norm2 == 0.0 or abs(r) < 1e-15 * (1.0 + abs(x) ** 3):
            break
        x -= r * gx / norm2
        y -= r * gy / norm2
    return CurvePoint(x, y)


def group_add(cfg: EllipticConfig, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """Chord-tangent addition with the point at infinity as identity."""
    for pt in (p, q):
        if not on_curve(cfg, pt):
            raise ValueError(f"point {pt!r} is not on the curve within tolerance")
    if p.infinity:
        return q
    if q.infinity:
        return p
    scale = 1.0 + max(abs(p.x), abs(q.x), abs(p.y), abs(q.y))
    eps = 1e-9 * scale
    if abs(p.x - q.x) <= eps:
        if abs(p.y + q.y) <= abs(p.y - q.y):
            return IDENTITY  # q is (numerically) the inverse of p
        slope = (3.0 * p.x * p.x + float(cfg.a)) / (2.0 * p.y)
    else:
        slope = (q.y - p.y) / (q.x - p.x)
    x3 = slope * slope - p.x - q.x
    y3 = slope * (p.x - x3) - p.y
    return _project_to_curve(cfg, x3, y3)


def angle(cfg: EllipticConfig, p: CurvePoint) -> float:
    """Normalized arc parameter in [0, 1); additive under the group law."""
    if p.infinity:
        return 0.0
    if not on_curve(cfg, p):
        raise ValueError(f"point {p!r} is not on the curve within tolerance")
    theta = _arc_integral(float(cfg.a), cfg.root, max(p.x, cfg.root)) / cfg.period
    theta = min(max(theta, 0.0), 0.5)
    if p.y < 0:
        theta = 1.0 - theta
    return theta % 1.0


def point_at_angle(cfg: EllipticConfig, theta: float) -> CurvePoint:
    """Invert the angle map; theta = 0 gives the identity."""
    theta = theta % 1.0
    if theta < 1e-15 or 1.0 - theta < 1e-15:
        return IDENTITY
    if theta > 0.5:
        return group_neg(point_at_angle(cfg, 1.0 - theta))
    target = theta * cfg.period
    a = float(cfg.a)
    lo = cfg.root
    if _arc_integral(a, cfg.root, lo) <= target:
        return CurvePoint(cfg.root, 0.0)

    def f(x: float) -> float:
        return _arc_integral(a, cfg.root, x) - target

    hi = cfg.root + 1.0
    for _ in range(200):
        if f(hi) < 0:
            break
        hi = cfg.root + 2.0 * (hi - cfg.root)
    else:
        raise RuntimeError("angle inversion failed to bracket the target")
    x = float(brentq(f, lo, hi, xtol=1e-13, maxiter=200))
    y = math.sqrt(max(_cubic(cfg, x), 0.0))
    pt = CurvePoint(x, y)
    if abs(angle(cfg, pt) - theta) > cfg.angle_tol:
        raise RuntimeError("angle inversion missed the requested tolerance")
    return pt


def torsion_points(cfg: EllipticConfig, n: int) -> list[CurvePoint]:
    """The n points at angles k/n, k = 0..n-1; index 0 is the identity."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return [IDENTITY] + [point_at_angle(cfg, k / n) for k in range(1, n)]


def embed_quartic(cfg: EllipticConfig, points: Sequence[CurvePoint]) -> PointSet3:
    """Map affine curve points into space via (x, y) -> (x, y, x^2).

    The image lies on the quadrics w = x^2 and y^2 = x*w + a*x + b; four of
    its points are coplanar exactly when their group sum is the identity.
    The identity itself has no affine image and must be stripped first.
    """
    rows = []
    for p in points:
        if p.infinity:
            raise ValueError("strip the identity before embedding")
        if not on_curve(cfg, p):
            raise ValueError(f"point {p!r} is not on the curve within tolerance")
        rows.append((p.x, p.y, p.x * p.x))
    return PointSet3.from_rows(rows)


def coplanar_index_oracle(n: int) -> int:
    """4-subsets of {1..n-1} with pairwise-distinct entries summing to 0 mod n.

    Ground truth for the coplanar count of the embedded torsion construction.
    O(n^3): the largest element is determined by the other three.
    """
    if n < 5:
        raise ValueError("n must be >= 5")
    count = 0
    for i in range(1, n - 2):
        for j in range(i + 1, n - 1):
            ij = i + j
            for k in range(j + 1, n):
                l = (-(ij + k)) % n
                if l > k:
                    count += 1
    return count


def _coplanar_index_brute(n: int) -> int:
    # O(n^4) cross-check for the oracle
    return sum(
        1 for quad in combinations(range(1, n), 4) if sum(quad) % n == 0
    )


def moment_curve_points(n: int, spacing: Fraction | int = 1) -> PointSet3:
    """Exact points (t, t^2, t^3) for t = spacing, 2*spacing, ..., n*spacing."""
    if n < 1:
        raise ValueError("n must be >= 1")
    spacing = Fraction(spacing)
    rows = []
    for i in range(1, n + 1):
        t = i * spacing
        rows.append((t, t * t, t * t * t))
    return PointSet3.from_rows(rows)
