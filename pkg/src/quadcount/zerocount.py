"""Counting zeros of a quadrivariate polynomial on a product of four sets.

Two routes to the same number: `count_naive` tests every quadruple of the
Cartesian product, `count_fiber` fixes three coordinates and solves the
remaining univariate slice against a hashed candidate set.  The two must
agree exactly; the naive route is the ground truth.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polynomials import Polynomial

__all__ = ["GridSets", "ZeroCountReport", "count_naive", "count_fiber"]


@dataclass(frozen=True)
class GridSets:
    """Four finite sets of exact rationals, bound to a polynomial's variables
    in declared order.  Sizes may differ; values within a set are distinct."""

    sets: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.sets) != 4:
            raise ValueError(f"expected 4 sets, got {len(self.sets)}")
        for i, values in enumerate(self.sets):
            if len(set(values)) != len(values):
                raise ValueError(f"set #{i} contains repeated values")

    @classmethod
    def from_values(cls, a: Sequence, b: Sequence, c: Sequence, d: Sequence) -> GridSets:
        return cls(tuple(tuple(Fraction(v) for v in vs) for vs in (a, b, c, d)))

    @property
    def sizes(self) -> tuple[int, int, int, int]:
        return tuple(len(s) for s in self.sets)  # type: ignore[return-value]

    def product_size(self) -> int:
        n = 1
        for s in self.sets:
            n *= len(s)
        return n


@dataclass
class ZeroCountReport:
    count: int
    method: str
    degenerate_fibers: int
    elapsed: float
    sizes: tuple[int, int, int, int]

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "method": self.method,
            "degenerate_fibers": self.degenerate_fibers,
            "elapsed_s": self.elapsed,
            "sizes": list(self.sizes),
        }


def _check_inputs(poly: Polynomial, sets: GridSets) -> None:
    if len(poly.vars) != 4:
        raise ValueError(f"expected a polynomial in 4 variables, got {len(poly.vars)}")


def _count_roots_int(coeffs: list[int], values: list[int]) -> int:
    # Horner per candidate; empty coefficient list is the zero polynomial,
    # which vanishes at every candidate.
    count = 0
    for v in values:
        acc = 0
        for c in reversed(coeffs):
            acc = acc * v + c
        if acc == 0:
            count += 1
    return count


def count_naive(poly: Polynomial, sets: GridSets) -> ZeroCountReport:
    """Exact |{(a,b,c,d) in A x B x C x D : poly(a,b,c,d) = 0}| by testing
    every quadruple.  Theta(|A||B||C||D|) point tests."""
    _check_inputs(poly, sets)
    start = time.perf_counter()
    va, vb, vc, _ = poly.vars
    a_vals, b_vals, c_vals, d_vals = sets.sets
    d_ints = [int(v) for v in d_vals] if all(v.denominator == 1 for v in d_vals) else None
    count = 0
    for a in a_vals:
        pa = poly.specialize({va: a})
        for b in b_vals:
            pab = pa.specialize({vb: b})
            for c in c_vals:
                g = pab.specialize({vc: c}).to_unipoly()
                if d_ints is not None and all(co.denominator == 1 for co in g.coeffs):
                    count += _count_roots_int([int(co) for co in g.coeffs], d_ints)
                else:
                    count += sum(1 for d in d_vals if g.evaluate(d) == 0)
    return ZeroCountReport(count, "naive", 0, time.perf_counter() - start, sets.sizes)


def _fiber_partial(
    poly: Polynomial,
    loop_vars: tuple[str, str, str],
    loop_sets: tuple[tuple[Fraction, ...], ...],
    candidates: frozenset[Fraction],
    solve_values: tuple[Fraction, ...],
) -> tuple[int, int]:
    v1, v2, v3 = loop_vars
    s1, s2, s3 = loop_sets
    count = 0
    degenerate = 0
    for a in s1:
        p1 = poly.specialize({v1: a})
        for b in s2:
            p2 = p1.specialize({v2: b})
            for c in s3:
                g = p2.specialize({v3: c}).to_unipoly()
                if g.is_zero:
                    # the fiber is a full line through the candidate set
                    count += len(candidates)
                    degenerate += 1
                elif g.degree == 0:
                    continue
                elif g.degree == 1:
                    if -g.coeffs[0] / g.coeffs[1] in candidates:
                        count += 1
                else:
                    count += sum(1 for v in solve_values if g.evaluate(v) == 0)
    return count, degenerate


def count_fiber(
    poly: Polynomial,
    sets: GridSets,
    solve_var: str | None = None,
    workers: int = 1,
) -> ZeroCountReport:
    """Same count as `count_naive`, solving the last coordinate per fiber.

    For each assignment of three variables the remaining slice is univariate;
    degree-1 slices are solved and looked up in a hash of the candidate set,
    higher-degree slices fall back to scanning the candidates.  Identically
    vanishing slices contribute the whole candidate set.
    """
    _check_inputs(poly, sets)
    if solve_var is None:
        solve_var = poly.vars[-1]
    if solve_var not in poly.vars:
        raise ValueError(f"undeclared variable {solve_var!r}")
    start = time.perf_counter()
    solve_idx = poly.vars.index(solve_var)
    loop_idx = [i for i in range(4) if i != solve_idx]
    loop_vars = tuple(poly.vars[i] for i in loop_idx)
    loop_sets = tuple(sets.sets[i] for i in loop_idx)
    solve_values = sets.sets[solve_idx]
    candidates = frozenset(solve_values)

    if workers <= 1 or len(loop_sets[0]) < 2:
        count, degenerate = _fiber_partial(
            poly, loop_vars, loop_sets, candidates, solve_values
        )
    else:
        # partition the outermost loop; partial counts combine by addition,
        # so the result does not depend on the partitioning
        chunks = [loop_sets[0][i::workers] for i in range(workers)]
        chunks = [c for c in chunks if c]
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(
                pool.map(
                    lambda chunk: _fiber_partial(
                        poly, loop_vars, (chunk,) + loop_sets[1:],
                        candidates, solve_values,
                    ),
                    chunks,
                )
            )
        count = sum(p[0] for p in parts)
        degenerate = sum(p[1] for p in parts)
    return ZeroCountReport(count, "fiber", degenerate, time.perf_counter() - start, sets.sizes)
