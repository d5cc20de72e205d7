"""Buchberger engine, normal forms, initial ideals, minimal presentations."""

import random

import pytest

from cmtype import (
    BudgetError,
    Budgets,
    Polynomial,
    buchberger,
    initial_ideal,
    make_presentation,
    minimalize_presentation,
    normal_form,
    parse_presentation,
    spoly,
)
from cmtype.groebner import _minimal_homogeneous_generators
from cmtype.invariants import hilbert_numerator, hilbert_series_from_gb
from cmtype.presentation import IdealPresentation

from oracles import hilbert_function_oracle, random_homogeneous_ideal


def gb_of(text):
    return buchberger(parse_presentation(text).ideal)


class TestNormalForm:
    def test_member_of_monomial_ideal_reduces_to_zero(self):
        gb = gb_of("ring: x,y,z ; ideal: x*y, y*z, z^2")
        p = parse_presentation("ring: x,y,z ; ideal: x*y + y*z").generators[0]
        assert normal_form(p, gb).is_zero

    def test_no_divisible_term_is_fixed(self):
        gb = gb_of("ring: x,y,z ; ideal: x*y, y*z, z^2")
        p = Polynomial.variable(3, 0) ** 2
        assert normal_form(p, gb) == p

    def test_y_squared_reduces_to_xz_for_cyclic_minors(self):
        gb = gb_of("ring: x,y,z ; ideal: x*z - y^2, x^2 - y*z, x*y - z^2")
        x, y, z = (Polynomial.variable(3, i) for i in range(3))
        reduced = normal_form(y**2, gb)
        assert reduced == x * z
        # membership of the difference confirms the reduction
        assert normal_form(y**2 - x * z, gb).is_zero

    def test_idempotent(self):
        gb = gb_of("ring: x,y ; ideal: x^2 - y^2")
        rng = random.Random(5)
        for _ in range(20):
            p = Polynomial(
                2, [((rng.randint(0, 3), rng.randint(0, 3)), rng.randint(-2, 2)) for _ in range(4)]
            )
            once = normal_form(p, gb)
            assert normal_form(once, gb) == once
            assert normal_form(p - once, gb).is_zero


class TestBuchberger:
    def test_monomial_ideal_is_its_own_basis(self):
        gb = gb_of("ring: x,y,z ; ideal: x*y, y*z, z^2")
        rendered = {tuple(sorted(g.terms)) for g in gb.elements}
        assert rendered == {(((1, 1, 0)),), (((0, 1, 1)),), (((0, 0, 2)),)}

    def test_principal_ideal_made_monic(self):
        gb = gb_of("ring: x,y ; ideal: 3*x^2 - 3*y^2")
        assert len(gb.elements) == 1
        g = gb.elements[0]
        assert g.leading_term()[1] == 1

    def test_cyclic_minors_already_a_basis(self):
        pres = parse_presentation("ring: x,y,z ; ideal: x*z - y^2, x^2 - y*z, x*y - z^2")
        gb = buchberger(pres.ideal)
        # monic forms of the three generators, verified by hand S-polynomial oracle
        monic = {g.monic() for g in pres.generators}
        assert set(gb.elements) == monic
        for i in range(len(gb.elements)):
            for j in range(i + 1, len(gb.elements)):
                assert normal_form(spoly(gb.elements[i], gb.elements[j]), gb).is_zero

    def test_budget_errors_are_loud(self):
        pres = parse_presentation("ring: x,y,z ; ideal: x*z - y^2, x^2 - y*z, x*y - z^2")
        with pytest.raises(BudgetError):
            buchberger(pres.ideal, budgets=Budgets(pairs=0))
        with pytest.raises(BudgetError):
            buchberger(pres.ideal, budgets=Budgets(degree=1))


class TestInitialIdeal:
    def test_monomial_ideal_fixed(self):
        gb = gb_of("ring: x,y,z ; ideal: x*y, y*z, z^2")
        init = initial_ideal(gb)
        assert {next(iter(g.terms)) for g in init.generators} == {(1, 1, 0), (0, 1, 1), (0, 0, 2)}

    def test_leading_term_of_binomial(self):
        gb = gb_of("ring: x,y ; ideal: x^2 + y^2")
        init = initial_ideal(gb)
        assert {next(iter(g.terms)) for g in init.generators} == {(2, 0)}

    def test_cyclic_minors_initial_ideal(self):
        # degrevlex leading monomials: the degree-2 chain puts y^2 above xz,
        # so the initial ideal is (x^2, x*y, y^2); confirmed against the
        # dense Hilbert-function oracle below.
        gb = gb_of("ring: x,y,z ; ideal: x*z - y^2, x^2 - y*z, x*y - z^2")
        init = initial_ideal(gb)
        assert {next(iter(g.terms)) for g in init.generators} == {(2, 0, 0), (1, 1, 0), (0, 2, 0)}
        gens = parse_presentation(
            "ring: x,y,z ; ideal: x*z - y^2, x^2 - y*z, x*y - z^2"
        ).generators
        series = hilbert_series_from_gb(gb)
        for d in range(7):
            assert series.hilbert_function(d) == hilbert_function_oracle(gens, 3, d)


class TestMinimalize:
    def test_linear_generator_substituted_out(self):
        pres = parse_presentation("ring: x,y,z ; ideal: x + y, y^2")
        minimal = minimalize_presentation(pres)
        assert tuple(minimal.variables) == ("y", "z")
        assert len(minimal.generators) == 1
        assert minimal.generators[0] == Polynomial.variable(2, 0) ** 2

    def test_already_minimal_unchanged(self):
        pres = parse_presentation("ring: x,y ; ideal: x*y")
        minimal = minimalize_presentation(pres)
        assert minimal.generators == pres.generators
        assert tuple(minimal.variables) == ("x", "y")

    def test_redundant_generator_dropped(self):
        pres = parse_presentation("ring: x,y ; ideal: x*y, x^2*y")
        minimal = minimalize_presentation(pres)
        assert len(minimal.generators) == 1
        assert minimal.generators[0].degree() == 2

    def test_idempotent_and_preserves_hilbert_function(self):
        rng = random.Random(99)
        for _ in range(40):
            nvars, gens = random_homogeneous_ideal(rng)
            pres = make_presentation([f"x{i}" for i in range(nvars)], gens)
            m1 = minimalize_presentation(pres)
            m2 = minimalize_presentation(m1)
            assert m1.ideal == m2.ideal
            # Hilbert functions agree degree by degree (dense oracle on both sides)
            for d in range(5):
                hf_original = hilbert_function_oracle(gens, nvars, d)
                hf_minimal = hilbert_function_oracle(
                    list(m1.generators), m1.nvars, d
                )
                # eliminating a variable shifts the ambient ring; compare quotients
                # through their Hilbert series instead when variables dropped
                if m1.nvars == nvars:
                    assert hf_original == hf_minimal
        # explicit variable-elimination case
        pres = parse_presentation("ring: x,y,z ; ideal: x + y, y^2")
        before = hilbert_series_from_gb(buchberger(pres.ideal))
        after = hilbert_series_from_gb(buchberger(minimalize_presentation(pres).ideal))
        for d in range(7):
            assert before.hilbert_function(d) == after.hilbert_function(d)

    def test_minimal_generator_count_via_linear_algebra(self):
        gens = parse_presentation(
            "ring: x,y ; ideal: x^2, x*y, x^2 + x*y"
        ).generators
        assert len(_minimal_homogeneous_generators(list(gens), 2)) == 2


class TestRandomSuite:
    def test_two_hundred_random_ideals(self):
        rng = random.Random(20240809)
        seen_reduced = 0
        for trial in range(200):
            nvars, gens = random_homogeneous_ideal(rng)
            pres = make_presentation([f"x{i}" for i in range(nvars)], gens)
            gb = buchberger(pres.ideal)

            # every S-polynomial of the output reduces to zero
            for i in range(len(gb.elements)):
                for j in range(i + 1, len(gb.elements)):
                    assert normal_form(spoly(gb.elements[i], gb.elements[j]), gb).is_zero

            # random polynomial combinations of the inputs reduce to zero
            for _ in range(2):
                combo = Polynomial.zero(nvars)
                for g in gens:
                    factor = Polynomial(
                        nvars,
                        [
                            (m, rng.randint(-2, 2))
                            for m in [(0,) * nvars, tuple(1 if k == rng.randrange(nvars) else 0 for k in range(nvars))]
                        ],
                    )
                    combo = combo + factor * g
                assert normal_form(combo, gb).is_zero

            # determinism across repeated runs and generator permutations
            again = buchberger(pres.ideal)
            assert again.elements == gb.elements
            shuffled = list(gens)
            rng.shuffle(shuffled)
            permuted = buchberger(
                IdealPresentation(pres.variables, tuple(shuffled))
            )
            assert permuted.elements == gb.elements

            # quotient dimensions per degree match the dense oracle
            if not gb.elements or all(g.degree() > 0 for g in gb.elements):
                series = hilbert_series_from_gb(gb)
                for d in range(7):
                    assert series.hilbert_function(d) == hilbert_function_oracle(
                        gens, nvars, d
                    ), (trial, nvars, gens, d)
            if gb.reduced:
                seen_reduced += 1
        assert seen_reduced == 200
