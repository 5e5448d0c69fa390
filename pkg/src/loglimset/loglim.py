"""Logarithmic limit sets: exact assembly and numerical sampling.

For a principal ideal the limit set equals the spherical dual of the single
generator, computed exactly.  For a finitely generated ideal the
intersection of the generators' duals is only an OUTER approximation: it
contains the true limit set and can be strictly larger, since membership of
the true set quantifies over every element of the ideal.

``sample_loglim`` checks the combinatorics against the analytic definition
for curves in two variables: points of the variety are sampled along
log-spaced magnitude grids, their coordinate-log vectors are normalised, and
the resulting directions accumulate on the limit set as the radius grows.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from mpmath import mp

from .laurent import LaurentPolynomial
from .sphdual import SphericalComplex, intersect, ray_directions, spherical_dual

DEFAULT_ACCUMULATION_RADIUS = math.exp(10.0)


def loglim_principal(f: LaurentPolynomial) -> SphericalComplex:
    """Exact logarithmic limit set of the hypersurface cut out by f."""
    return spherical_dual(f)


def loglim_outer(generators: Sequence[LaurentPolynomial]) -> SphericalComplex:
    """Intersection of the generators' spherical duals.

    This is an outer approximation of the limit set of the generated ideal;
    it is exact for principal ideals.  Zero generators contribute nothing and
    are dropped; if every generator is zero the result is the full sphere,
    flagged through ``note``.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    variables = gens[0].variables
    for g in gens[1:]:
        if g.variables != variables:
            raise ValueError("generators must share one variable list")
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        return SphericalComplex(len(variables), full_sphere=True, note="all generators zero")
    result = spherical_dual(nonzero[0])
    for g in nonzero[1:]:
        result = intersect(result, spherical_dual(g))
    return result


# ----------------------------------------------------------------------
# numerical sampling (two variables)


@dataclass(frozen=True)
class SampleParams:
    """Grid parameters for sampling a plane curve near infinity.

    Magnitudes are log-spaced between ``rho_min`` and ``rho_max`` (strings
    are accepted so magnitudes far beyond double range, e.g. "1e10000", can
    be requested).
    """

    rho_min: str | float = "1e-8"
    rho_max: str | float = "1e8"
    grid: int = 64
    phases: int = 4
    seed: int = 0

    def __post_init__(self):
        if self.grid < 2:
            raise ValueError("grid must have at least two magnitudes")
        if self.phases < 1:
            raise ValueError("need at least one phase per magnitude")


@dataclass(frozen=True)
class SamplePoint:
    """One normalised log-vector of a sampled variety point.

    ``direction`` is the exact unit vector of the log-coordinates and
    ``radius`` the unnormalised length ``sqrt(1 + sum(log|x_i|)^2)``, so the
    ball-model image is recoverable as ``direction * sqrt(r^2-1)/r``.
    """

    direction: tuple[float, float]
    radius: float
    sweep: int
    grid_index: int
    phase_index: int
    root_index: int


@dataclass
class SampleResult:
    points: list[SamplePoint] = field(default_factory=list)
    skipped: list[tuple[int, int, int, str]] = field(default_factory=list)


def _quadratic_roots(a, b, c) -> list:
    # stable complex quadratic: avoid the cancellation in -b +- sqrt(disc)
    disc = mp.sqrt(b * b - 4 * a * c)
    if abs(b + disc) >= abs(b - disc):
        q = -(b + disc) / 2
    else:
        q = -(b - disc) / 2
    if q == 0:
        return [mp.mpc(0), mp.mpc(0)]
    return [q / a, c / q]


def _binomial_roots(lead, const, n: int) -> list:
    target = -const / lead
    radius = abs(target) ** (mp.mpf(1) / n)
    phase = mp.arg(target) / n
    return [radius * mp.exp(1j * (phase + 2 * mp.pi * k / n)) for k in range(n)]


def _closed_or_polyroots(coeffs: list) -> list:
    degree = len(coeffs) - 1
    if degree == 1:
        return [-coeffs[1] / coeffs[0]]
    if degree == 2:
        return _quadratic_roots(*coeffs)
    if all(c == 0 for c in coeffs[1:-1]):
        return _binomial_roots(coeffs[0], coeffs[-1], degree)
    return list(mp.polyroots(coeffs, maxsteps=500, extraprec=400))


def _upper_hull(points: list[tuple[int, float]]) -> list[tuple[int, float]]:
    hull: list[tuple[int, float]] = []
    for px, py in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append((px, py))
    return hull


_CLUSTER_SPREAD = 60.0  # natural-log coefficient range where direct solving is safe
_CLUSTER_WINDOW = 120.0  # coefficients this far (in nats) below a cluster are dropped


def _mp_roots(coeffs: list) -> list:
    """Roots of a dense polynomial (descending coefficients), deterministic.

    Small degrees use closed forms.  When the coefficient magnitudes span an
    extreme range (log-coordinates near e^10 put variety points at
    magnitudes like e^23000, far beyond any iterative solver's basin from
    unit-circle starting points), the roots split into magnitude clusters
    read off the upper Newton polygon of (k, log|a_k|); each cluster is
    rescaled to unit size, solved with the far-away coefficients windowed
    out, and scaled back.  The windowing perturbs each cluster only by a
    relative e^-20 or less, far below the sampling tolerances.
    """
    n = len(coeffs) - 1
    asc = coeffs[::-1]
    logs = [(k, float(mp.log(abs(a)))) for k, a in enumerate(asc) if a != 0]
    spread = max(v for _, v in logs) - min(v for _, v in logs)
    if spread <= _CLUSTER_SPREAD or len(logs) < 2:
        return _closed_or_polyroots(coeffs)
    roots: list = []
    hull = _upper_hull(logs)
    for (k1, v1), (k2, v2) in zip(hull, hull[1:]):
        cluster_scale = mp.exp(mp.mpf(v1 - v2) / (k2 - k1))
        count = k2 - k1
        scaled = [asc[k] * cluster_scale**k for k in range(n + 1)]
        top = max(abs(x) for x in scaled)
        cutoff = top * mp.exp(mp.mpf(-_CLUSTER_WINDOW))
        scaled = [x / top if abs(x) > cutoff else mp.mpc(0) for x in scaled]
        lo = 0
        while scaled[lo] == 0:
            lo += 1
        hi = n
        while scaled[hi] == 0:
            hi -= 1
        w_roots = _closed_or_polyroots(scaled[lo : hi + 1][::-1])
        w_roots = [w for w in w_roots if w != 0]
        nearest = sorted(w_roots, key=lambda w: abs(mp.log(abs(w))))[:count]
        roots.extend(cluster_scale * w for w in nearest)
    return roots


def sample_loglim(f: LaurentPolynomial, params: SampleParams) -> SampleResult:
    """Sample the plane curve f = 0 and return normalised log-vectors.

    For each magnitude rho on the grid and each random phase theta, one
    coordinate is fixed to ``rho * exp(i theta)`` and the polynomial is
    solved for the nonzero roots of the other; the sweep is then repeated
    with the coordinate roles exchanged.  Grid points where the remaining
    polynomial is constant, or where the root solver fails, are skipped and
    recorded.  Output order is fixed by (sweep, grid index, phase, root).
    """
    if len(f.variables) != 2:
        raise ValueError("sampling is implemented for two variables only")
    if f.is_zero():
        raise ValueError("cannot sample the zero polynomial")
    degree_spread = [
        max(e[i] for e in f.support()) - min(e[i] for e in f.support()) for i in (0, 1)
    ]
    if degree_spread[0] == 0 and degree_spread[1] == 0:
        raise ValueError("polynomial is constant in both variables; nothing to sample")

    rng = random.Random(params.seed)
    result = SampleResult()
    with mp.workdps(40):
        log_lo = mp.log(mp.mpf(params.rho_min))
        log_hi = mp.log(mp.mpf(params.rho_max))
        if not log_lo < log_hi:
            raise ValueError("rho_min must be smaller than rho_max")
        step = (log_hi - log_lo) / (params.grid - 1)
        for sweep in (0, 1):
            fixed, free = sweep, 1 - sweep
            # exponent of the free variable -> list of (fixed exponent, coeff)
            groups: dict[int, list[tuple[int, object]]] = {}
            for exps, coeff in f.items():
                groups.setdefault(exps[free], []).append((exps[fixed], coeff))
            emax, emin = max(groups), min(groups)
            if emax == emin:
                # keep the phase stream aligned so the other sweep draws the
                # same angles whether or not this one was degenerate
                for gi in range(params.grid):
                    for pi in range(params.phases):
                        rng.uniform(0.0, 2.0 * math.pi)
                        result.skipped.append((sweep, gi, pi, "constant in the free variable"))
                continue
            for gi in range(params.grid):
                t = log_lo + step * gi
                rho = mp.e**t
                for pi in range(params.phases):
                    theta = mp.mpf(rng.uniform(0.0, 2.0 * math.pi))
                    x = rho * (mp.cos(theta) + 1j * mp.sin(theta))
                    dense = []
                    scales = []
                    for e_free in range(emax, emin - 1, -1):
                        acc = mp.mpc(0)
                        scale = mp.mpf(0)
                        for e_fixed, coeff in groups.get(e_free, ()):
                            value = mp.mpf(coeff.numerator) / coeff.denominator * x**e_fixed
                            acc += value
                            scale += abs(value)
                        dense.append(acc)
                        scales.append(scale)
                    # strip coefficients that vanished by cancellation
                    zero_like = [
                        abs(c) <= scale * mp.mpf(2) ** (-mp.prec + 10)
                        for c, scale in zip(dense, scales)
                    ]
                    lo = 0
                    hi = len(dense)
                    while lo < hi and zero_like[lo]:
                        lo += 1
                    while hi > lo and zero_like[hi - 1]:
                        hi -= 1
                    coeffs = dense[lo:hi]
                    if len(coeffs) <= 1:
                        result.skipped.append((sweep, gi, pi, "no roots at this grid point"))
                        continue
                    top = max(abs(c) for c in coeffs)
                    coeffs = [c / top for c in coeffs]
                    try:
                        roots = _mp_roots(coeffs)
                    except mp.NoConvergence:
                        result.skipped.append((sweep, gi, pi, "root solver did not converge"))
                        continue
                    for ri, root in enumerate(roots):
                        if root == 0:
                            continue
                        u = mp.log(abs(root))
                        logvec = [mp.mpf(0), mp.mpf(0)]
                        logvec[fixed] = t
                        logvec[free] = u
                        norm = mp.sqrt(logvec[0] ** 2 + logvec[1] ** 2)
                        if norm == 0:
                            continue
                        radius = float(mp.sqrt(1 + norm**2))
                        direction = (float(logvec[0] / norm), float(logvec[1] / norm))
                        result.points.append(
                            SamplePoint(direction, radius, sweep, gi, pi, ri)
                        )
    return result


def csv_lines(points: Iterable[SamplePoint]) -> list[str]:
    """Rows of ``radius,d1,d2,...`` with full float precision."""
    return [
        ",".join([repr(p.radius)] + [repr(c) for c in p.direction]) for p in points
    ]


def spherical_distance(u: Sequence[float], v: Sequence[float]) -> float:
    dot = sum(a * b for a, b in zip(u, v))
    return math.acos(max(-1.0, min(1.0, dot)))


def unit_direction(vec: Sequence[int]) -> tuple[float, ...]:
    norm = math.sqrt(sum(x * x for x in vec))
    return tuple(x / norm for x in vec)


def min_angle_to_complex(direction: Sequence[float], complex_: SphericalComplex) -> float:
    """Angular distance from a unit vector to the nearest ray of the complex.

    Valid when every cell of the complex is one-dimensional (rays or lines),
    which covers all two-variable duals.
    """
    if complex_.full_sphere:
        return 0.0
    rays = ray_directions(complex_)
    if not rays:
        return math.pi
    return min(spherical_distance(direction, unit_direction(r)) for r in rays)


def cluster_directions(
    points: Sequence[SamplePoint],
    top_fraction: float = 0.1,
    tolerance: float = 0.02,
) -> list[tuple[tuple[float, float], int]]:
    """Greedy clusters of the largest-radius sample directions.

    Takes the top ``top_fraction`` of samples by radius and groups directions
    within ``tolerance`` spherical distance of a cluster representative (the
    first member encountered, in deterministic sample order).
    """
    if not points:
        return []
    ordered = sorted(points, key=lambda p: (-p.radius, p.sweep, p.grid_index, p.phase_index, p.root_index))
    keep = max(1, int(len(ordered) * top_fraction))
    chosen = ordered[:keep]
    reps: list[tuple[float, float]] = []
    counts: list[int] = []
    for p in chosen:
        for i, rep in enumerate(reps):
            if spherical_distance(p.direction, rep) <= tolerance:
                counts[i] += 1
                break
        else:
            reps.append(p.direction)
            counts.append(1)
    return list(zip(reps, counts))
