from fractions import Fraction
from math import gcd

import pytest

from conftest import primitive_vectors_py
from loglimset.knots import (
    TorusKnotParams,
    a_bar_polynomial,
    a_polynomial,
    detected_slopes,
    verify_psl2_relation,
)
from loglimset.laurent import parse
from loglimset.slopes import detect_boundary_coordinates
from loglimset.sphdual import contains, spherical_dual, union

COPRIME_PAIRS = [(p, q) for p in range(2, 8) for q in range(p + 1, 8) if gcd(p, q) == 1]


class TestParams:
    def test_normalised_to_positive(self):
        k = TorusKnotParams(-2, 3)
        assert (k.p, k.q) == (2, 3)
        assert k.pq == 6

    def test_rejects_trivial_and_non_coprime(self):
        with pytest.raises(ValueError):
            TorusKnotParams(1, 5)
        with pytest.raises(ValueError):
            TorusKnotParams(2, 4)
        with pytest.raises(ValueError):
            TorusKnotParams(0, 3)


class TestAPolynomial:
    def test_2_3(self):
        fl = a_polynomial(TorusKnotParams(2, 3))
        assert fl.expand() == parse("(l-1)*(l*m^6+1)", ("m", "l"))
        assert len(fl) == 2

    def test_3_4_has_third_factor(self):
        fl = a_polynomial(TorusKnotParams(3, 4))
        assert len(fl) == 3
        assert fl.expand() == parse("(l-1)*(l*m^12+1)*(l*m^12-1)", ("m", "l"))

    def test_2_5(self):
        fl = a_polynomial(TorusKnotParams(2, 5))
        assert fl.expand() == parse("(l-1)*(l*m^10+1)", ("m", "l"))


class TestABarPolynomial:
    @pytest.mark.parametrize("p,q", [(2, 3), (3, 5), (3, 4)])
    def test_examples(self, p, q):
        fl = a_bar_polynomial(TorusKnotParams(p, q))
        assert fl.expand() == parse(f"(L-1)*(L*M^{p*q}-1)", ("M", "L"))


class TestPsl2Relation:
    @pytest.mark.parametrize("p,q", [(2, 3), (3, 4), (2, 7)])
    def test_examples(self, p, q):
        assert verify_psl2_relation(TorusKnotParams(p, q))

    @pytest.mark.parametrize("p,q", [(2, 3), (3, 4), (2, 7), (4, 5)])
    def test_exact_polynomial_identity(self, p, q):
        # independent route: the fully expanded product A(l,m) A(-l,m) with
        # squares substituted equals the (L, M) form times the repeated
        # factor, up to the sign (-1)^(number of paired factors)
        knot = TorusKnotParams(p, q)
        a = a_polynomial(knot).expand()
        product = (a * a.negate_variable("l")).substitute_square(("M", "L"))
        bar = a_bar_polynomial(knot).expand()
        if min(p, q) == 2:
            assert product == bar
        else:
            extra = parse(f"L*M^{p*q}-1", ("M", "L"))
            assert product == -1 * (bar * extra)


class TestDetectedSlopes:
    @pytest.mark.parametrize(
        "p,q,expected", [(2, 3, {0, 6}), (3, 4, {0, 12}), (2, 5, {0, 10})]
    )
    def test_examples(self, p, q, expected):
        assert detected_slopes(TorusKnotParams(p, q)) == {Fraction(s) for s in expected}

    def test_explicit_height_below_pq_misses_the_slope(self):
        # documents why the default enumeration bound is pq
        assert detected_slopes(TorusKnotParams(3, 4), height=4) == {Fraction(0)}

    def test_longitude_factor_contribution(self):
        # the reducible-representation factor contributes exactly the class [0, 1]
        dual = spherical_dual(parse("l-1", ("m", "l")))
        assert {c.entries for c in detect_boundary_coordinates(dual, 8)} == {(0, 1)}

    def test_product_dual_is_union_of_factor_duals(self):
        knot = TorusKnotParams(3, 4)
        product_dual = spherical_dual(a_polynomial(knot).expand())
        factor_union = None
        for poly, _ in a_polynomial(knot):
            dual = spherical_dual(poly)
            factor_union = dual if factor_union is None else union(factor_union, dual)
        for xi in primitive_vectors_py(2, 8):
            assert contains(product_dual, xi) == contains(factor_union, xi)
