"""Newton polytopes of Laurent polynomials as exact lattice vertex sets.

Extreme points are found by LP filtering: a support point is a vertex
exactly when it is not a convex combination of the remaining points, which
is an exact-rational feasibility problem.  A cheap sweep over small integer
directions marks most vertices first so the LP only runs on the doubtful
points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .exactgeom import exact_rank, solve_nonneg
from .laurent import ExponentVector, LaurentPolynomial

_PREFILTER_DIM_LIMIT = 4


def _sweep_directions(dim: int) -> list[tuple[int, ...]]:
    if dim <= _PREFILTER_DIM_LIMIT:
        return [d for d in itertools.product((-1, 0, 1), repeat=dim) if any(d)]
    dirs = []
    for i in range(dim):
        for s in (1, -1):
            dirs.append(tuple(s if j == i else 0 for j in range(dim)))
    dirs.append((1,) * dim)
    dirs.append((-1,) * dim)
    return dirs


def _in_convex_hull(point: ExponentVector, others: list[ExponentVector]) -> bool:
    dim = len(point)
    rows: list[list[int]] = [[1] * len(others)]
    for i in range(dim):
        rows.append([q[i] for q in others])
    rhs = [1] + list(point)
    return solve_nonneg(rows, rhs) is not None


def extreme_points(points: Iterable[ExponentVector], dim: int) -> frozenset[ExponentVector]:
    """The vertices of the convex hull of a finite lattice point set."""
    pts = sorted({tuple(int(x) for x in p) for p in points})
    for p in pts:
        if len(p) != dim:
            raise ValueError(f"point {p} has length {len(p)}, expected {dim}")
    if len(pts) <= 2:
        return frozenset(pts)
    vertices: set[ExponentVector] = set()
    for direction in _sweep_directions(dim):
        best = None
        best_point = None
        unique = False
        for p in pts:
            value = sum(d * x for d, x in zip(direction, p))
            if best is None or value > best:
                best, best_point, unique = value, p, True
            elif value == best:
                unique = False
        if unique:
            vertices.add(best_point)
    for p in pts:
        if p in vertices:
            continue
        others = [q for q in pts if q != p]
        if not _in_convex_hull(p, others):
            vertices.add(p)
    return frozenset(vertices)


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of lattice points, stored as its vertex set.

    The empty polytope is a distinct tagged value (no vertices), not a
    degenerate point: downstream the dual of the zero polynomial must stay
    distinguishable from the dual of a monomial.
    """

    dim: int
    vertices: frozenset[ExponentVector]
    is_empty: bool

    @classmethod
    def empty(cls, dim: int) -> "LatticePolytope":
        return cls(dim, frozenset(), True)

    @classmethod
    def from_points(cls, dim: int, points: Iterable[ExponentVector]) -> "LatticePolytope":
        pts = list(points)
        if not pts:
            return cls.empty(dim)
        return cls(dim, extreme_points(pts, dim), False)

    def dimension(self) -> int | None:
        """Affine dimension; None for the empty polytope."""
        if self.is_empty:
            return None
        verts = sorted(self.vertices)
        base = verts[0]
        diffs = [tuple(v - b for v, b in zip(p, base)) for p in verts[1:]]
        return exact_rank(diffs) if diffs else 0

    def translate(self, offset: ExponentVector) -> "LatticePolytope":
        if self.is_empty:
            return self
        return LatticePolytope(
            self.dim,
            frozenset(tuple(v + o for v, o in zip(p, offset)) for p in self.vertices),
            False,
        )

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "empty": self.is_empty,
            "vertices": sorted(list(v) for v in self.vertices),
        }


def newton_polytope(f: LaurentPolynomial) -> LatticePolytope:
    """Convex hull of the exponent vectors of f; empty exactly for f = 0."""
    dim = len(f.variables)
    if f.is_zero():
        return LatticePolytope.empty(dim)
    return LatticePolytope.from_points(dim, f.support())


def minkowski_sum(p: LatticePolytope, q: LatticePolytope) -> LatticePolytope:
    """Vertices of {a + b : a in P, b in Q}; empty if either factor is."""
    if p.dim != q.dim:
        raise ValueError(f"ambient dimensions differ: {p.dim} vs {q.dim}")
    if p.is_empty or q.is_empty:
        return LatticePolytope.empty(p.dim)
    sums = {tuple(a + b for a, b in zip(u, v)) for u in p.vertices for v in q.vertices}
    return LatticePolytope.from_points(p.dim, sums)


def dimension(p: LatticePolytope) -> int | None:
    return p.dimension()
