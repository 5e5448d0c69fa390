"""Boundary-curve coordinates from limit sets of eigenvalue varieties.

Variables are ordered (m_1, l_1, ..., m_h, l_h), one meridian/longitude
eigenvalue pair per boundary torus.  A rational direction of the limit set
is converted to a projectivised boundary-curve class by the blockwise
quarter turn (a, b) -> (b, -a) followed by canonicalisation in
RP^(2h-1) / Z_2^(h-1): divide by the gcd and flip each pair so its first
nonzero entry is positive.  For a single torus the class [p, q] is read as
the slope p/q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .sphdual import RationalDirection, SphericalComplex, rational_points


def default_boundary_variables(h: int) -> tuple[str, ...]:
    """Canonical eigenvalue variable names: (m, l) or (m1, l1, m2, l2, ...)."""
    if h < 1:
        raise ValueError("need at least one boundary torus")
    if h == 1:
        return ("m", "l")
    names: list[str] = []
    for i in range(1, h + 1):
        names.extend((f"m{i}", f"l{i}"))
    return tuple(names)


@dataclass(frozen=True)
class CuspConvention:
    """Number of boundary tori and the per-torus variable order."""

    h: int
    variables: tuple[str, ...]

    @classmethod
    def standard(cls, h: int) -> "CuspConvention":
        return cls(h, default_boundary_variables(h))

    def __post_init__(self):
        if self.h < 1:
            raise ValueError("need at least one boundary torus")
        if len(self.variables) != 2 * self.h:
            raise ValueError(
                f"expected {2 * self.h} variables for h={self.h}, got {len(self.variables)}"
            )


def apply_T(xi: Sequence[int], h: int) -> RationalDirection:
    """Blockwise quarter turn: each pair (a, b) maps to (b, -a)."""
    vec = tuple(int(x) for x in xi)
    if len(vec) != 2 * h:
        raise ValueError(f"direction has length {len(vec)}, expected {2 * h}")
    out: list[int] = []
    for i in range(h):
        a, b = vec[2 * i], vec[2 * i + 1]
        out.extend((b, -a))
    return tuple(out)


@dataclass(frozen=True)
class BoundaryCurveCoordinate:
    """Canonical class representative in RP^(2h-1) modulo per-pair sign flips.

    Entries are (n_1 p_1, n_1 q_1, ..., n_h p_h, n_h q_h) with overall gcd
    one and each pair flipped so its first nonzero entry is positive.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or len(self.entries) % 2:
            raise ValueError("entries must come in (p, q) pairs")
        if not any(self.entries):
            raise ValueError("the zero vector is not a boundary coordinate")

    @property
    def h(self) -> int:
        return len(self.entries) // 2

    def slope(self) -> Fraction | None:
        """Slope p/q for the single-torus case; None means the meridian (1/0)."""
        if self.h != 1:
            raise ValueError("slopes are defined for a single boundary torus")
        p, q = self.entries
        if q == 0:
            return None
        return Fraction(p, q)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self) -> str:
        return f"[{', '.join(str(x) for x in self.entries)}]"


def canonicalize(vector: Sequence[int]) -> BoundaryCurveCoordinate:
    """Canonical representative of an integer vector in the quotient sphere."""
    vec = [int(x) for x in vector]
    if not vec or len(vec) % 2:
        raise ValueError("vector length must be a positive even number")
    if not any(vec):
        raise ValueError("cannot canonicalise the zero vector")
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    vec = [x // g for x in vec]
    out: list[int] = []
    for i in range(0, len(vec), 2):
        a, b = vec[i], vec[i + 1]
        lead = a if a != 0 else b
        if lead < 0:
            a, b = -a, -b
        out.extend((a, b))
    return BoundaryCurveCoordinate(tuple(out))


def detect_boundary_coordinates(
    complex_: SphericalComplex, height: int
) -> set[BoundaryCurveCoordinate]:
    """Boundary classes of all rational directions of the limit set.

    The complex must live over the 2h eigenvalue coordinates in cusp order;
    every primitive direction up to the height bound is pushed through the
    quarter turn and canonicalised.
    """
    if complex_.dim % 2:
        raise ValueError("eigenvalue varieties live in an even number of variables")
    h = complex_.dim // 2
    return {canonicalize(apply_T(xi, h)) for xi in rational_points(complex_, height)}


def slope_of(coordinate: BoundaryCurveCoordinate) -> Fraction | None:
    """Slope of a single-torus class; None encodes the infinite (meridian) slope."""
    return coordinate.slope()


def format_slope(slope: Fraction | None) -> str:
    return "inf" if slope is None else str(slope)


def sort_slopes(slopes: Iterable[Fraction | None]) -> list[Fraction | None]:
    """Finite slopes ascending, the infinite slope last."""
    items = list(slopes)
    finite = sorted(s for s in items if s is not None)
    if any(s is None for s in items):
        finite.append(None)
    return finite
