"""Polynomial arithmetic, monomial orders, and their contracts."""

import random
from fractions import Fraction

import pytest

from cmtype import DEGREVLEX, LEX, InputError, Polynomial, compare_monomials
from cmtype.poly import MonomialOrder, VariableSet, monomials_of_degree

from oracles import random_homogeneous_polynomial


def P(nvars, *terms):
    return Polynomial(nvars, list(terms))


x2 = (2, 0, 0)
xy = (1, 1, 0)
y2 = (0, 2, 0)
xz = (1, 0, 1)
yz = (0, 1, 1)
z2 = (0, 0, 2)


class TestMonomialOrders:
    def test_degrevlex_first_variable_dominates_in_degree_one(self):
        assert compare_monomials(DEGREVLEX, (1, 0), (0, 1)) == 1

    def test_degrevlex_degree_two_chain(self):
        chain = [x2, xy, y2, xz, yz, z2]
        for a, b in zip(chain, chain[1:]):
            assert compare_monomials(DEGREVLEX, a, b) == 1

    def test_degrevlex_y3_beats_xz2(self):
        assert compare_monomials(DEGREVLEX, (0, 3, 0), (1, 0, 2)) == 1

    def test_lex_ignores_degree(self):
        assert compare_monomials(LEX, (1, 0), (0, 2)) == 1

    def test_length_mismatch_rejected(self):
        with pytest.raises(InputError):
            compare_monomials(DEGREVLEX, (1, 0), (1, 0, 0))

    @pytest.mark.parametrize("order", [DEGREVLEX, LEX])
    def test_total_order_on_random_triples(self, order):
        rng = random.Random(7)
        monos = [tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(60)]
        for _ in range(200):
            a, b, c = rng.choice(monos), rng.choice(monos), rng.choice(monos)
            ab, ba = order.compare(a, b), order.compare(b, a)
            assert ab == -ba  # antisymmetry
            if ab == 0:
                assert a == b  # trichotomy: ties only on equality
            if ab >= 0 and order.compare(b, c) >= 0:
                assert order.compare(a, c) >= 0  # transitivity
            # term order: multiplication preserves comparisons
            m = rng.choice(monos)
            assert order.compare(
                tuple(u + w for u, w in zip(a, m)), tuple(v + w for v, w in zip(b, m))
            ) == ab

    def test_unit_monomial_is_minimal(self):
        for order in (DEGREVLEX, LEX):
            assert order.compare((0, 0), (1, 0)) == -1
            assert order.compare((0, 0), (0, 1)) == -1


class TestArithmetic:
    def test_difference_of_squares(self):
        x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
        assert (x + y) * (x - y) == x**2 - y**2

    def test_multiplicative_identity(self):
        p = P(2, ((1, 2), Fraction(3, 4)), ((0, 0), -2))
        assert p * Polynomial.one(2) == p

    def test_monomial_product(self):
        xy_p = P(3, (xy, 1))
        yz_p = P(3, (yz, 1))
        assert xy_p * yz_p == P(3, ((1, 2, 1), 1))

    def test_ring_axioms_randomized(self):
        rng = random.Random(2024)
        for _ in range(200):
            nvars = rng.randint(1, 3)
            p = random_homogeneous_polynomial(rng, nvars, rng.randint(0, 4))
            q = random_homogeneous_polynomial(rng, nvars, rng.randint(0, 4))
            r = random_homogeneous_polynomial(rng, nvars, rng.randint(0, 4))
            assert (p * q) * r == p * (q * r)
            assert p * q == q * p
            assert p * (q + r) == p * q + p * r
            assert (p + q) + r == p + (q + r)
            for poly in (p * q, p + q, p - q):
                assert all(isinstance(c, Fraction) for c in poly.terms.values())
                assert all(c != 0 for c in poly.terms.values())

    def test_canonical_equality(self):
        a = P(2, ((1, 0), 1), ((0, 1), 1))
        b = P(2, ((0, 1), Fraction(1)), ((1, 0), Fraction(2)), ((1, 0), -1))
        assert a == b and a.terms == b.terms

    def test_pow(self):
        x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
        assert (x + y) ** 2 == x**2 + 2 * x * y + y**2
        assert (x + y) ** 0 == Polynomial.one(2)


class TestStructuralOps:
    def test_substitute(self):
        x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
        p = x**2 + x * y
        assert p.substitute(0, -y) == y**2 - y**2  # (-y)^2 + (-y)*y == 0
        assert p.substitute(0, -y).is_zero

    def test_drop_variable(self):
        p = P(3, ((1, 0, 2), 1))
        dropped = p.drop_variable(1)
        assert dropped == P(2, ((1, 2), 1))
        with pytest.raises(InputError):
            P(3, ((0, 1, 0), 1)).drop_variable(1)

    def test_permute_variables(self):
        p = P(3, ((2, 1, 0), 5))
        assert p.permute_variables((2, 0, 1)) == P(3, ((1, 0, 2), 5))

    def test_derivative(self):
        x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
        p = x**3 * y - x * y**3
        assert p.derivative(0) == 3 * x**2 * y - y**3

    def test_evaluate(self):
        x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
        p = x**2 + 2 * y
        assert p.evaluate([Fraction(3), Fraction(1, 2)]) == 10

    def test_homogeneity(self):
        x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
        assert (x * y + y**2).is_homogeneous()
        assert not (x + y**2).is_homogeneous()
        assert Polynomial.zero(2).is_homogeneous()


class TestVariableSet:
    def test_validation(self):
        with pytest.raises(InputError):
            VariableSet(("x", "x"))
        with pytest.raises(InputError):
            VariableSet(("1bad",))
        vs = VariableSet(("x", "y_1"))
        assert vs.index("y_1") == 1
        with pytest.raises(InputError):
            vs.index("z")


def test_monomials_of_degree_counts():
    import math

    for n in range(1, 4):
        for d in range(5):
            assert len(monomials_of_degree(n, d)) == math.comb(n - 1 + d, d)
