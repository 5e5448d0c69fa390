"""Spherical duals of Newton polytopes as complexes of rational cones.

A complex is a finite set of nonzero polyhedral cones (stored as integer
inequality systems and read as their intersections with the unit sphere),
plus a flag for the full sphere, which is the limit set of the zero
polynomial.  Membership has two routes: the direct support test (the maximum
of ``xi . alpha`` over the defining support is attained at least twice),
used whenever a defining support is known, and exact cell membership
otherwise.  Cells are built lazily from supports because the support test
alone answers most queries.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

import numpy as np

from .exactgeom import (
    LinearSystem,
    cone_contains,
    cone_dimension,
    interior_point,
)
from .exactgeom import intersect as intersect_systems
from .laurent import ExponentVector, LaurentPolynomial

RationalDirection = tuple[int, ...]

THREADS_ENV_VAR = "LOGLIMSET_THREADS"

# dot products are evaluated in int64 when safely below this bound
_INT64_SAFE = 2**62


def pair_cone(
    support: Iterable[ExponentVector],
    alpha0: ExponentVector,
    alpha1: ExponentVector,
) -> LinearSystem:
    """Directions where the support maximum is attained at both alpha0, alpha1.

    The system collects ``(alpha0 - alpha) . xi >= 0`` and
    ``(alpha1 - alpha) . xi >= 0`` over the whole support; together these
    force ``(alpha0 - alpha1) . xi = 0``, stored as an equality row.
    """
    pts = sorted({tuple(p) for p in support})
    a0 = tuple(alpha0)
    a1 = tuple(alpha1)
    if a0 == a1:
        raise ValueError("pair_cone needs two distinct support points")
    if a0 not in pts or a1 not in pts:
        raise ValueError("both points must belong to the support")
    dim = len(a0)
    ineqs = []
    for a in pts:
        ineqs.append(tuple(x - y for x, y in zip(a0, a)))
        ineqs.append(tuple(x - y for x, y in zip(a1, a)))
    equality = tuple(x - y for x, y in zip(a0, a1))
    return LinearSystem.make(dim, [equality], ineqs)


def _thread_count() -> int:
    raw = os.environ.get(THREADS_ENV_VAR, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _nonzero_filter(systems: Sequence[LinearSystem]) -> list[LinearSystem]:
    threads = _thread_count()
    if threads > 1 and len(systems) > 8:
        try:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                dims = list(pool.map(cone_dimension, systems, chunksize=8))
            return [s for s, d in zip(systems, dims) if d > 0]
        except OSError:
            pass
    return [s for s in systems if cone_dimension(s) > 0]


def reduce_to_maximal(cells: Iterable[LinearSystem]) -> tuple[LinearSystem, ...]:
    """Drop cells contained in another cell; ties keep the lex-least system.

    Containment is checked exactly: a quick interior-point rejection first,
    then one LP per row of the candidate superset.
    """
    ordered = sorted(set(cells))
    alive = [True] * len(ordered)
    for i, a in enumerate(ordered):
        if not alive[i]:
            continue
        for j, b in enumerate(ordered):
            if i == j or not alive[j]:
                continue
            if cone_contains(a, b):
                if j > i and cone_contains(b, a):
                    continue  # equal cones: the earlier (lex-least) one stays
                alive[i] = False
                break
    return tuple(c for c, keep in zip(ordered, alive) if keep)


def _support_cells(support: frozenset[ExponentVector]) -> tuple[LinearSystem, ...]:
    pts = sorted(support)
    if len(pts) < 2:
        return ()
    systems = {pair_cone(pts, a0, a1) for a0, a1 in itertools.combinations(pts, 2)}
    nonzero = _nonzero_filter(sorted(systems))
    return reduce_to_maximal(nonzero)


class SphericalComplex:
    """Finite union of nonzero rational cones on the sphere S^(dim-1)."""

    __slots__ = ("dim", "full_sphere", "note", "_cells", "_supports")

    def __init__(
        self,
        dim: int,
        cells: Iterable[LinearSystem] | None = None,
        supports: Iterable[frozenset[ExponentVector]] | None = None,
        full_sphere: bool = False,
        note: str | None = None,
    ):
        if dim < 1:
            raise ValueError("ambient dimension must be positive")
        self.dim = dim
        self.full_sphere = full_sphere
        self.note = note
        self._supports = tuple(frozenset(s) for s in supports) if supports is not None else None
        if full_sphere:
            self._cells: tuple[LinearSystem, ...] | None = ()
            self._supports = None
        elif cells is not None:
            self._cells = tuple(sorted(set(cells)))
            for cell in self._cells:
                if cell.dim != dim:
                    raise ValueError(f"cell dimension {cell.dim} does not match {dim}")
                if cone_dimension(cell) == 0:
                    raise ValueError("the zero cone cannot be a cell")
        else:
            if self._supports is None:
                raise ValueError("need cells, supports or the full-sphere flag")
            self._cells = None  # built lazily from the supports

    # ------------------------------------------------------------------

    @classmethod
    def full(cls, dim: int) -> "SphericalComplex":
        return cls(dim, full_sphere=True)

    @classmethod
    def empty(cls, dim: int) -> "SphericalComplex":
        return cls(dim, cells=())

    @property
    def cells(self) -> tuple[LinearSystem, ...]:
        if self._cells is None:
            collected: list[LinearSystem] = []
            for support in self._supports or ():
                collected.extend(_support_cells(support))
            self._cells = reduce_to_maximal(collected)
        return self._cells

    @property
    def supports(self) -> tuple[frozenset[ExponentVector], ...] | None:
        return self._supports

    def is_empty(self) -> bool:
        if self.full_sphere:
            return False
        if self._supports is not None:
            return all(len(s) < 2 for s in self._supports)
        return not self.cells

    def materialized(self) -> "SphericalComplex":
        """Copy whose membership test goes through the cells only."""
        if self.full_sphere:
            return SphericalComplex.full(self.dim)
        return SphericalComplex(self.dim, cells=self.cells, note=self.note)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SphericalComplex):
            return NotImplemented
        if self.dim != other.dim or self.full_sphere != other.full_sphere:
            return False
        if self.full_sphere:
            return True
        return self.cells == other.cells

    def __repr__(self) -> str:
        if self.full_sphere:
            return f"SphericalComplex(dim={self.dim}, full sphere)"
        if self._cells is None:
            sizes = ",".join(str(len(s)) for s in self._supports or ())
            return f"SphericalComplex(dim={self.dim}, lazy supports [{sizes}])"
        return f"SphericalComplex(dim={self.dim}, {len(self._cells)} cells)"

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "full_sphere": self.full_sphere,
            "cells": [c.to_json_dict() for c in self.cells],
        }


def spherical_dual(f: LaurentPolynomial) -> SphericalComplex:
    """Spherical dual of the Newton polytope of f.

    The dual of the zero polynomial is the whole sphere; the dual of a single
    monomial is empty; otherwise it is the union of the nonzero pair cones of
    the support, reduced to maximal cells.
    """
    dim = len(f.variables)
    if f.is_zero():
        return SphericalComplex.full(dim)
    return SphericalComplex(dim, supports=[f.support()])


def _support_contains(support: frozenset[ExponentVector], xi: Sequence[int]) -> bool:
    if len(support) < 2:
        return False
    best = None
    count = 0
    for alpha in support:
        value = sum(a * x for a, x in zip(alpha, xi))
        if best is None or value > best:
            best, count = value, 1
        elif value == best:
            count += 1
    return count >= 2


def contains(complex_: SphericalComplex, xi: Sequence[int]) -> bool:
    """Is the direction xi (nonzero integer vector) in the complex?

    Uses the direct support test when a defining support is known, otherwise
    exact row checks against the cells.
    """
    vec = tuple(int(x) for x in xi)
    if len(vec) != complex_.dim:
        raise ValueError(f"direction has length {len(vec)}, expected {complex_.dim}")
    if not any(vec):
        raise ValueError("the zero vector is not a direction")
    if complex_.full_sphere:
        return True
    if complex_.supports is not None:
        return any(_support_contains(s, vec) for s in complex_.supports)
    return any(cell.satisfied_by(vec) for cell in complex_.cells)


def union(c1: SphericalComplex, c2: SphericalComplex) -> SphericalComplex:
    """Set union of two complexes over the same sphere."""
    if c1.dim != c2.dim:
        raise ValueError("ambient dimensions differ")
    if c1.full_sphere or c2.full_sphere:
        return SphericalComplex.full(c1.dim)
    if c1.supports is not None and c2.supports is not None:
        return SphericalComplex(c1.dim, supports=c1.supports + c2.supports)
    return SphericalComplex(c1.dim, cells=reduce_to_maximal(c1.cells + c2.cells))


def intersect(c1: SphericalComplex, c2: SphericalComplex) -> SphericalComplex:
    """Set intersection, formed cell by cell with zero cones pruned."""
    if c1.dim != c2.dim:
        raise ValueError("ambient dimensions differ")
    if c1.full_sphere:
        return c2
    if c2.full_sphere:
        return c1
    pieces = {intersect_systems(a, b) for a in c1.cells for b in c2.cells}
    nonzero = _nonzero_filter(sorted(pieces))
    return SphericalComplex(c1.dim, cells=reduce_to_maximal(nonzero))


# ----------------------------------------------------------------------
# rational directions


def primitive_directions(dim: int, height: int) -> np.ndarray:
    """All primitive integer vectors with max-norm <= height, in lex order."""
    if height < 1:
        raise ValueError("height must be positive")
    axis = np.arange(-height, height + 1, dtype=np.int64)
    grid = np.meshgrid(*([axis] * dim), indexing="ij")
    vectors = np.stack([g.ravel() for g in grid], axis=1)
    nonzero = vectors[np.any(vectors != 0, axis=1)]
    g = np.gcd.reduce(np.abs(nonzero), axis=1)
    return nonzero[g == 1]


_BLOCK_LIMIT = 2_000_000  # grid vectors handled in one allocation


def _direction_blocks(dim: int, height: int):
    """Primitive directions in lex order, sliced to bound peak memory."""
    if dim == 1 or (2 * height + 1) ** dim <= _BLOCK_LIMIT:
        block = primitive_directions(dim, height)
        if len(block):
            yield block
        return
    axis = np.arange(-height, height + 1, dtype=np.int64)
    grid = np.meshgrid(*([axis] * (dim - 1)), indexing="ij")
    tail = np.stack([g.ravel() for g in grid], axis=1)
    for first in axis:
        block = np.concatenate(
            [np.full((len(tail), 1), first, dtype=np.int64), tail], axis=1
        )
        nonzero = block[np.any(block != 0, axis=1)]
        if not len(nonzero):
            continue
        g = np.gcd.reduce(np.abs(nonzero), axis=1)
        primitive = nonzero[g == 1]
        if len(primitive):
            yield primitive


def _support_mask(support: frozenset[ExponentVector], dirs: np.ndarray, height: int) -> np.ndarray:
    pts = sorted(support)
    if len(pts) < 2:
        return np.zeros(len(dirs), dtype=bool)
    maxabs = max(abs(x) for p in pts for x in p)
    if maxabs * height * len(pts[0]) < _INT64_SAFE:
        products = np.array(pts, dtype=np.int64) @ dirs.T
    else:
        products = np.array(pts, dtype=object) @ dirs.T.astype(object)
    top = products.max(axis=0)
    return (products == top).sum(axis=0) >= 2


def _cell_mask(cell: LinearSystem, dirs: np.ndarray, height: int) -> np.ndarray:
    rows = list(cell.equalities) + list(cell.inequalities)
    maxabs = max((abs(x) for row in rows for x in row), default=0)
    use_int64 = maxabs * height * cell.dim < _INT64_SAFE
    mask = np.ones(len(dirs), dtype=bool)
    if cell.equalities:
        eq = np.array(cell.equalities, dtype=np.int64 if use_int64 else object)
        target = eq @ (dirs.T if use_int64 else dirs.T.astype(object))
        mask &= (target == 0).all(axis=0)
    if cell.inequalities:
        iq = np.array(cell.inequalities, dtype=np.int64 if use_int64 else object)
        values = iq @ (dirs.T if use_int64 else dirs.T.astype(object))
        mask &= (values >= 0).all(axis=0)
    return mask


def rational_points(complex_: SphericalComplex, height: int) -> tuple[RationalDirection, ...]:
    """Every primitive direction of max-norm <= height lying in the complex."""
    if height < 1:
        raise ValueError("height must be positive")
    out: list[RationalDirection] = []
    for dirs in _direction_blocks(complex_.dim, height):
        if complex_.full_sphere:
            mask = np.ones(len(dirs), dtype=bool)
        elif complex_.supports is not None:
            mask = np.zeros(len(dirs), dtype=bool)
            for support in complex_.supports:
                mask |= _support_mask(support, dirs, height)
        else:
            mask = np.zeros(len(dirs), dtype=bool)
            for cell in complex_.cells:
                mask |= _cell_mask(cell, dirs, height)
        out.extend(tuple(int(x) for x in row) for row in dirs[mask])
    return tuple(out)


def cell_dimensions(complex_: SphericalComplex) -> tuple[int, ...]:
    """Spherical dimension (cone dimension minus one) of each cell."""
    return tuple(cone_dimension(cell) - 1 for cell in complex_.cells)


def max_cell_dimension(complex_: SphericalComplex) -> int | None:
    """Largest spherical cell dimension; None for the empty complex."""
    if complex_.full_sphere:
        return complex_.dim - 1
    dims = cell_dimensions(complex_)
    return max(dims) if dims else None


def ray_directions(complex_: SphericalComplex) -> tuple[RationalDirection, ...]:
    """Primitive generators of all one-dimensional cells (rays and lines)."""
    out: set[RationalDirection] = set()
    for cell in complex_.cells:
        if cone_dimension(cell) != 1:
            continue
        v = interior_point(cell)
        if v is None:
            continue
        out.add(v)
        neg = tuple(-x for x in v)
        if cell.satisfied_by(neg):
            out.add(neg)
    return tuple(sorted(out))
