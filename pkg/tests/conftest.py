"""Shared helpers: seeded random polynomials and independent oracles.

The oracles here deliberately re-implement their checks from scratch (plain
loops, no library internals) so the tests compare two independent routes.
"""

from __future__ import annotations

import itertools
import random
from math import gcd

from loglimset.laurent import LaurentPolynomial


def random_laurent(
    rng: random.Random,
    variables,
    max_terms: int = 6,
    exp_lo: int = -4,
    exp_hi: int = 4,
    coeff_lo: int = -9,
    coeff_hi: int = 9,
    min_terms: int = 1,
) -> LaurentPolynomial:
    """A random nonzero Laurent polynomial with small integer data."""
    m = len(variables)
    while True:
        n_terms = rng.randint(min_terms, max_terms)
        terms: dict = {}
        for _ in range(n_terms):
            exps = tuple(rng.randint(exp_lo, exp_hi) for _ in range(m))
            coeff = 0
            while coeff == 0:
                coeff = rng.randint(coeff_lo, coeff_hi)
            terms[exps] = terms.get(exps, 0) + coeff
        poly = LaurentPolynomial(variables, terms)
        if not poly.is_zero():
            return poly


def support_max_twice(support, xi) -> bool:
    """Direct limit-set membership: max of xi.alpha attained at least twice."""
    values = [sum(a * x for a, x in zip(alpha, xi)) for alpha in support]
    if len(values) < 2:
        return False
    top = max(values)
    return values.count(top) >= 2


def primitive_vectors_py(dim: int, height: int) -> list[tuple[int, ...]]:
    """Pure-python enumeration of primitive vectors with max-norm <= height."""
    out = []
    for vec in itertools.product(range(-height, height + 1), repeat=dim):
        if not any(vec):
            continue
        g = 0
        for x in vec:
            g = gcd(g, abs(x))
        if g == 1:
            out.append(vec)
    return out
