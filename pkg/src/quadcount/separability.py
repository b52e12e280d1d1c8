"""Heuristic detection of additively separable structure in a quadrivariate
polynomial.

A polynomial F(x, y, s, t) is *special* when, away from a bad set, the
relation F = 0 is locally equivalent to f1(x) + f2(y) + f3(s) + f4(t) = 0
for invertible analytic fi.  Such polynomials admit product sets with a
cubic number of zeros; all others provably cannot.

The detector samples the real surface F = 0 and runs three independence
tests on ratios of partial derivatives.  Writing the surface locally as
y = y(x, s, t), separability forces each of

    F_s/F_t   (as a function of s, t),
    F_s/F_x   (as a function of s, x),
    F_t/F_x   (as a function of t, x),

restricted to the surface, to be independent of the remaining free
coordinate.  A fourth test evaluates the 2x2 determinant

    G = F_s(x,y,s,t) * F_t(x',y',s,t) - F_s(x',y',s,t) * F_t(x,y,s,t)

on pairs of surface points sharing the same (s, t) slice; systematic
vanishing is the pairwise form of the first ratio test.  Finally, exact
rational GCDs of parameter slices F(x, y, c, d) expose plane-curve
components shared by many slices ("popular" components), another symptom of
degenerate structure.

This is a sampler with explicit tolerances, not a certificate: separability
is a local-analytic property and cannot be decided by finitely many float
evaluations.  The thresholds below are fixed for reproducibility and can be
overridden per call (or via CLI flags).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from statistics import median
from typing import Sequence

import numpy as np

from .polynomials import Polynomial, bivariate_gcd, try_divide

__all__ = [
    "SAMPLING_BOX",
    "RESIDUAL_TOL",
    "GRADIENT_FLOOR",
    "RATIO_PASS",
    "RATIO_FAIL",
    "G_VANISH",
    "DegenerateSurfaceError",
    "SurfaceSample",
    "FormVerdict",
    "PopularScan",
    "sample_surface",
    "ratio_test",
    "g_sample",
    "popular_components",
    "classify",
]

# Fixed detector constants (documented contract; override per call if needed).
SAMPLING_BOX = 2.0        # coordinates are drawn from [-box, box]
RESIDUAL_TOL = 1e-12      # |F| at an accepted surface point
GRADIENT_FLOOR = 1e-8     # minimum |partial derivative| at a regular sample
RATIO_PASS = 1e-6         # ratio spread below this passes the independence test
RATIO_FAIL = 1e-2         # ratio spread above this is a decisive failure
G_VANISH = 1e-8           # normalized |G| below this across all trials
_POSITIONS = 5            # points per fiber walk in the ratio test


class DegenerateSurfaceError(RuntimeError):
    """The sampler could not produce enough regular surface points."""


@dataclass(frozen=True)
class SurfaceSample:
    """A regular point of the surface F = 0 with its residual and gradient."""

    point: tuple[float, float, float, float]
    residual: float
    gradient: tuple[float, float, float, float]


@dataclass
class PopularScan:
    """Shared slice components with the number of slices each divides."""

    components: list[tuple[Polynomial, int]]
    popular: list[tuple[Polynomial, int]]
    degenerate_params: list[tuple[Fraction, Fraction]]
    threshold: int

    def to_json(self) -> dict:
        return {
            "components": [[str(p), m] for p, m in self.components],
            "popular": [[str(p), m] for p, m in self.popular],
            "degenerate_params": [[str(c), str(d)] for c, d in self.degenerate_params],
            "threshold": self.threshold,
        }


@dataclass
class FormVerdict:
    """Combined detector output: special | non-special | inconclusive."""

    classification: str
    ratio_spreads: dict[str, float]
    g_max: float
    popular: list[tuple[Polynomial, int]]
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "classification": self.classification,
            "ratio_spreads": self.ratio_spreads,
            "g_max": self.g_max,
            "popular_components": [[str(p), m] for p, m in self.popular],
            "notes": self.notes,
        }


class _FloatForm:
    """Vectorized float64 view of an exact polynomial."""

    __slots__ = ("coeffs", "exps")

    def __init__(self, poly: Polynomial):
        n = len(poly.vars)
        items = sorted(poly.terms.items())
        self.coeffs = np.array([float(c) for _, c in items], dtype=float)
        self.exps = np.array([e for e, _ in items], dtype=np.int64).reshape(len(items), n)

    def __call__(self, point: np.ndarray) -> float:
        if self.coeffs.size == 0:
            return 0.0
        return float(np.dot(self.coeffs, np.prod(point ** self.exps, axis=1)))


class _Surface:
    """Float-side solver for y on the surface F(x, y, s, t) = 0.

    The second declared variable is the solved one; the univariate slice in
    it is rebuilt from a coefficient profile precomputed over the other
    three variables.
    """

    def __init__(self, poly: Polynomial, box: float, grad_floor: float, residual_tol: float):
        if len(poly.vars) != 4:
            raise ValueError("detector requires a polynomial in 4 variables")
        if poly.is_zero:
            raise ValueError("detector requires a nonzero polynomial")
        self.poly = poly
        self.box = box
        self.grad_floor = grad_floor
        self.residual_tol = residual_tol
        self.f = _FloatForm(poly)
        self.grads = tuple(_FloatForm(poly.partial(v)) for v in poly.vars)
        ydeg = max((e[1] for e in poly.terms), default=0)
        if ydeg == 0:
            raise DegenerateSurfaceError(
                f"F does not involve {poly.vars[1]!r}: no solvable fiber"
            )
        profile: list[dict] = [dict() for _ in range(ydeg + 1)]
        for exp, coeff in poly.terms.items():
            reduced = (exp[0], exp[2], exp[3])
            bucket = profile[exp[1]]
            bucket[reduced] = bucket.get(reduced, Fraction(0)) + coeff
        self.profile = [
            _FloatForm(Polynomial((poly.vars[0], poly.vars[2], poly.vars[3]), bucket))
            for bucket in profile
        ]

    def slice_coeffs(self, x: float, s: float, t: float) -> np.ndarray:
        pt = np.array([x, s, t], dtype=float)
        return np.array([form(pt) for form in self.profile], dtype=float)

    def _point(self, x: float, y: float, s: float, t: float) -> np.ndarray:
        return np.array([x, y, s, t], dtype=float)

    def newton_y(self, x: float, s: float, t: float, y0: float) -> float | None:
        coeffs = self.slice_coeffs(x, s, t)
        dcoeffs = np.array([j * c for j, c in enumerate(coeffs)][1:], dtype=float)
        y = y0
        for _ in range(80):
            g = float(np.polyval(coeffs[::-1], y))
            if abs(g) < self.residual_tol:
                return y
            dg = float(np.polyval(dcoeffs[::-1], y)) if dcoeffs.size else 0.0
            if dg == 0.0 or not math.isfinite(dg):
                return None
            step = g / dg
            y -= step
            if not math.isfinite(y):
                return None
        return y if abs(float(np.polyval(coeffs[::-1], y))) < self.residual_tol else None

    def solve_y(self, x: float, s: float, t: float) -> list[float]:
        """All real solutions of the univariate slice, polished by Newton."""
        coeffs = self.slice_coeffs(x, s, t)
        scale = float(np.max(np.abs(coeffs))) if coeffs.size else 0.0
        if scale == 0.0:
            return []
        trimmed = list(coeffs)
        while trimmed and abs(trimmed[-1]) < 1e-13 * scale:
            trimmed.pop()
        if len(trimmed) < 2:
            return []
        roots = np.roots(trimmed[::-1])
        out: list[float] = []
        for r in roots:
            if abs(r.imag) > 1e-8 * (1.0 + abs(r)):
                continue
            y = self.newton_y(x, s, t, float(r.real))
            if y is None:
                continue
            if all(abs(y - prev) > 1e-9 * (1.0 + abs(y)) for prev in out):
                out.append(y)
        out.sort()
        return out

    def gradient(self, point: np.ndarray) -> np.ndarray:
        return np.array([g(point) for g in self.grads], dtype=float)

    def regular(self, grad: np.ndarray) -> bool:
        return bool(np.all(np.abs(grad) >= self.grad_floor))


def sample_surface(
    poly: Polynomial,
    count: int,
    seed: int,
    box: float = SAMPLING_BOX,
    grad_floor: float = GRADIENT_FLOOR,
    residual_tol: float = RESIDUAL_TOL,
) -> list[SurfaceSample]:
    """Draw regular surface points: (x, s, t) uniform in the box, y solved.

    Points whose residual exceeds the tolerance or whose gradient has a
    component below the floor are discarded and redrawn; running out of
    retries signals a degenerate polynomial.
    """
    surf = _Surface(poly, box, grad_floor, residual_tol)
    rng = np.random.default_rng(seed)
    samples: list[SurfaceSample] = []
    budget = 200 * max(count, 1)
    while len(samples) < count and budget > 0:
        budget -= 1
        x, s, t = rng.uniform(-box, box, size=3)
        ys = surf.solve_y(x, s, t)
        regular = []
        for y in ys:
            pt = surf._point(x, y, s, t)
            grad = surf.gradient(pt)
            res = abs(surf.f(pt))
            if res < residual_tol and surf.regular(grad):
                regular.append((pt, res, grad))
        if not regular:
            continue
        pt, res, grad = regular[int(rng.integers(len(regular)))]
        samples.append(SurfaceSample(tuple(pt), res, tuple(grad)))
    if len(samples) < count:
        raise DegenerateSurfaceError(
            f"found only {len(samples)}/{count} regular surface points"
        )
    return samples


def _assemble(vars4: tuple[str, ...], values: dict[str, float]) -> np.ndarray:
    return np.array([values[v] for v in vars4], dtype=float)


def ratio_test(
    poly: Polynomial,
    pair: tuple[str, str],
    frozen: tuple[str, str] | None = None,
    trials: int = 50,
    seed: int = 0,
    box: float = SAMPLING_BOX,
    grad_floor: float = GRADIENT_FLOOR,
    residual_tol: float = RESIDUAL_TOL,
    positions: int = _POSITIONS,
) -> float:
    """Max relative spread of F_num/F_den along fibers of the surface.

    The two `pair` variables are held fixed per trial, the remaining free
    variable walks along the fiber (the solved variable is re-solved by
    Newton continuation at each step), and the ratio of the two partial
    derivatives is recorded at every position.  For a separable polynomial
    the ratio is a function of the frozen pair only, so its spread along the
    fiber vanishes up to solver noise.
    """
    surf = _Surface(poly, box, grad_floor, residual_tol)
    names = poly.vars
    solved = names[1]
    num_var, den_var = pair
    if frozen is None:
        frozen = pair
    if solved in pair or solved in frozen:
        raise ValueError(f"{solved!r} is the solved variable; it cannot appear in the test pair")
    free_candidates = [v for v in names if v != solved and v not in frozen]
    if len(free_candidates) != 1:
        raise ValueError(f"frozen pair {frozen} does not leave exactly one free variable")
    free = free_candidates[0]
    num_idx = names.index(num_var)
    den_idx = names.index(den_var)

    rng = np.random.default_rng(seed)
    step = box / (2.0 * (positions - 1))
    max_spread = 0.0
    successes = 0
    budget = 40 * trials
    while successes < trials and budget > 0:
        budget -= 1
        frozen_vals = {v: float(rng.uniform(-box, box)) for v in frozen}
        base = float(rng.uniform(-box, box - step * (positions - 1)))

        def slice_args(free_val: float) -> tuple[float, float, float]:
            c = dict(frozen_vals)
            c[free] = free_val
            return (c[names[0]], c[names[2]], c[names[3]])

        roots = surf.solve_y(*slice_args(base))
        if not roots:
            continue
        y = roots[int(rng.integers(len(roots)))]
        ratios: list[float] = []
        ok = True
        for k in range(positions):
            free_val = base + k * step
            if k > 0:
                y_next = surf.newton_y(*slice_args(free_val), y)
                if y_next is None:
                    # halve the continuation step once before giving up
                    y_mid = surf.newton_y(*slice_args(free_val - 0.5 * step), y)
                    y_next = surf.newton_y(*slice_args(free_val), y_mid) if y_mid is not None else None
                if y_next is None:
                    ok = False
                    break
                y = y_next
            coords = dict(frozen_vals)
            coords[free] = free_val
            coords[solved] = y
            pt = _assemble(names, coords)
            grad = surf.gradient(pt)
            if abs(surf.f(pt)) >= residual_tol or not surf.regular(grad):
                ok = False
                break
            if abs(grad[den_idx]) < grad_floor:
                ok = False
                break
            ratios.append(grad[num_idx] / grad[den_idx])
        if not ok or len(ratios) < positions:
            continue
        spread = (max(ratios) - min(ratios)) / (abs(median(ratios)) + 1e-12)
        max_spread = max(max_spread, spread)
        successes += 1
    if successes < trials:
        raise DegenerateSurfaceError(
            f"ratio test completed only {successes}/{trials} fiber walks"
        )
    return max_spread


def g_sample(
    poly: Polynomial,
    trials: int = 50,
    seed: int = 0,
    box: float = SAMPLING_BOX,
    grad_floor: float = GRADIENT_FLOOR,
    residual_tol: float = RESIDUAL_TOL,
) -> float:
    """Max normalized |G| over pairs of surface points sharing an (s, t) slice.

    G is the 2x2 determinant of the (F_s, F_t) gradients at the two points,
    normalized by the product of the full gradient norms.  Vanishing across
    all trials is evidence of separable structure.
    """
    surf = _Surface(poly, box, grad_floor, residual_tol)
    names = poly.vars
    rng = np.random.default_rng(seed)
    g_max = 0.0
    successes = 0
    budget = 60 * trials
    thin_slices = 0
    while successes < trials and budget > 0:
        budget -= 1
        s, t = rng.uniform(-box, box, size=2)
        x1 = float(rng.uniform(-box, box))
        x2 = float(rng.uniform(-box, box))
        if abs(x1 - x2) < 0.05 * box:
            continue
        roots1 = surf.solve_y(x1, s, t)
        roots2 = surf.solve_y(x2, s, t)
        if not roots1 or not roots2:
            thin_slices += 1
            if thin_slices > 30 * trials:
                raise DegenerateSurfaceError("slices rarely admit two solvable fibers in the box")
            continue
        y1 = roots1[int(rng.integers(len(roots1)))]
        y2 = roots2[int(rng.integers(len(roots2)))]
        p1 = np.array([x1, y1, s, t])
        p2 = np.array([x2, y2, s, t])
        g1 = surf.gradient(p1)
        g2 = surf.gradient(p2)
        if not (surf.regular(g1) and surf.regular(g2)):
            continue
        det = g1[2] * g2[3] - g2[2] * g1[3]
        norm = float(np.linalg.norm(g1) * np.linalg.norm(g2))
        g_max = max(g_max, abs(det) / norm)
        successes += 1
    if successes < trials:
        raise DegenerateSurfaceError(f"G sampler completed only {successes}/{trials} pairs")
    return g_max


def popular_components(
    poly: Polynomial,
    params: Sequence[tuple[Fraction | int, Fraction | int]],
) -> PopularScan:
    """Exact scan for plane-curve components shared by parameter slices.

    Each (c, d) fixes the last two variables, giving a bivariate slice in the
    first two.  Pairwise GCDs of the slices propose candidate components;
    each candidate is then charged with the number of slices it divides.  A
    component dividing more than deg(F)^2 slices is flagged popular.
    Parameters whose slice vanishes identically are set aside.
    """
    if len(poly.vars) != 4:
        raise ValueError("expected a polynomial in 4 variables")
    vc, vd = poly.vars[2], poly.vars[3]
    slices: list[Polynomial] = []
    degenerate: list[tuple[Fraction, Fraction]] = []
    for c, d in params:
        c, d = Fraction(c), Fraction(d)
        sl = poly.specialize({vc: c, vd: d})
        if sl.is_zero:
            degenerate.append((c, d))
        else:
            slices.append(sl)
    if len(slices) < 2:
        raise ValueError(f"need at least 2 non-degenerate slices, got {len(slices)}")
    candidates: dict[Polynomial, None] = {}
    for i in range(len(slices)):
        for j in range(i + 1, len(slices)):
            g = bivariate_gcd(slices[i], slices[j])
            if g.total_degree > 0:
                candidates.setdefault(g)
    components: list[tuple[Polynomial, int]] = []
    for cand in candidates:
        mult = sum(1 for sl in slices if try_divide(sl, cand) is not None)
        components.append((cand, mult))
    components.sort(key=lambda pm: (-pm[1], str(pm[0])))
    threshold = poly.total_degree ** 2
    popular = [(p, m) for p, m in components if m > threshold]
    return PopularScan(components, popular, degenerate, threshold)


def _ratio_pairs(names: tuple[str, ...]) -> dict[str, tuple[str, str]]:
    # the three independence tests over the coordinate splits that keep the
    # solved variable in place
    return {
        "h1": (names[2], names[3]),
        "h2": (names[2], names[0]),
        "h3": (names[3], names[0]),
    }


def _random_params(
    poly: Polynomial, rng: np.random.Generator, count: int
) -> list[tuple[Fraction, Fraction]]:
    vc, vd = poly.vars[2], poly.vars[3]
    out: list[tuple[Fraction, Fraction]] = []
    seen: set[tuple[Fraction, Fraction]] = set()
    budget = 50 * count
    while len(out) < count and budget > 0:
        budget -= 1
        c = Fraction(int(rng.integers(-16, 17)), 8)
        d = Fraction(int(rng.integers(-16, 17)), 8)
        if (c, d) in seen:
            continue
        seen.add((c, d))
        if poly.specialize({vc: c, vd: d}).is_zero:
            continue
        out.append((c, d))
    return out


def classify(
    poly: Polynomial,
    seed: int = 0,
    trials: int = 50,
    box: float = SAMPLING_BOX,
    grad_floor: float = GRADIENT_FLOOR,
    residual_tol: float = RESIDUAL_TOL,
    ratio_pass: float = RATIO_PASS,
    ratio_fail: float = RATIO_FAIL,
    g_vanish: float = G_VANISH,
    param_count: int = 8,
) -> FormVerdict:
    """Run all detector criteria and combine them into a verdict.

    special       -- all three ratio spreads below `ratio_pass` and the
                     normalized G determinant below `g_vanish`;
    non-special   -- at least one ratio spread above `ratio_fail`;
    inconclusive  -- anything in between, or sampler failure.
    """
    names = poly.vars
    seeds = [int(s.generate_state(1)[0]) for s in np.random.SeedSequence(seed).spawn(5)]
    notes: list[str] = []
    spreads: dict[str, float] = {}
    g_max = math.nan
    failed = False
    try:
        for (label, pair), sd in zip(_ratio_pairs(names).items(), seeds[:3]):
            spreads[label] = ratio_test(
                poly, pair, trials=trials, seed=sd, box=box,
                grad_floor=grad_floor, residual_tol=residual_tol,
            )
        g_max = g_sample(
            poly, trials=trials, seed=seeds[3], box=box,
            grad_floor=grad_floor, residual_tol=residual_tol,
        )
    except DegenerateSurfaceError as exc:
        notes.append(f"sampler failure: {exc}")
        failed = True

    popular: list[tuple[Polynomial, int]] = []
    try:
        params = _random_params(poly, np.random.default_rng(seeds[4]), param_count)
        scan = popular_components(poly, params)
        popular = scan.popular
        if scan.degenerate_params:
            notes.append(f"{len(scan.degenerate_params)} parameter pairs gave vanishing slices")
    except ValueError as exc:
        notes.append(f"popular-component scan skipped: {exc}")

    if failed:
        classification = "inconclusive"
    elif any(v > ratio_fail for v in spreads.values()):
        classification = "non-special"
    elif all(v < ratio_pass for v in spreads.values()) and g_max < g_vanish:
        classification = "special"
    else:
        classification = "inconclusive"
    return FormVerdict(classification, spreads, g_max, popular, notes)
