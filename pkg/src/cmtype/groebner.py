"""Buchberger's algorithm, normal forms, initial ideals, minimal presentations.

The engine is deliberately deterministic: the normal selection strategy
(minimal lcm degree first, ties broken by the lexicographic pair index) and a
canonical output ordering make the reduced basis identical across runs and
across permutations of the input generators.  Pair pruning uses the
Gebauer-Moeller refinement of the Buchberger product and chain criteria.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import BudgetError, Budgets, DEFAULT_BUDGETS, InhomogeneousError, InputError
from .poly import (
    DEGREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    VariableSet,
    monomial_degree,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomials_of_degree,
    unit_monomial,
)
from .presentation import IdealPresentation, RingPresentation


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic elements in canonical (descending) order."""

    variables: VariableSet
    order: MonomialOrder
    elements: tuple[Polynomial, ...]
    reduced: bool = True

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading_monomial(self.order) for g in self.elements)


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """S-polynomial of f and g."""
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = monomial_lcm(mf, mg)
    return f.mul_term(monomial_div(lcm, mf), 1 / cf) - g.mul_term(monomial_div(lcm, mg), 1 / cg)


def normal_form(p: Polynomial, basis, order: MonomialOrder | None = None) -> Polynomial:
    """Full remainder of p under division by the basis (no term divisible by a
    leading term survives).  Against a Groebner basis the result is the unique
    normal form; in particular it is zero exactly for ideal members."""
    if isinstance(basis, GroebnerBasis):
        elements = basis.elements
        order = order or basis.order
    else:
        elements = tuple(basis)
        order = order or DEGREVLEX
    elements = tuple(g for g in elements if not g.is_zero)
    if not elements:
        return p
    leads = [g.leading_term(order) for g in elements]
    remainder: dict[Monomial, Fraction] = {}
    work = p
    while work:
        m, c = work.leading_term(order)
        for g, (lm, lc) in zip(elements, leads):
            q = monomial_div(m, lm)
            if q is not None:
                work = work - g.mul_term(q, c / lc)
                break
        else:
            remainder[m] = c
            work = work - Polynomial(p.nvars, [(m, c)])
    return Polynomial(p.nvars, remainder)


def _generators_of(source) -> tuple[VariableSet, tuple[Polynomial, ...]]:
    if isinstance(source, RingPresentation):
        return source.variables, source.generators
    if isinstance(source, IdealPresentation):
        return source.variables, source.generators
    raise InputError("expected an ideal or ring presentation")


def buchberger(
    source,
    order: MonomialOrder = DEGREVLEX,
    *,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal, unique for (ideal, order)."""
    variables, gens = _generators_of(source)
    gens = [g.monic(order) for g in gens if not g.is_zero]

    basis: list[Polynomial] = []
    leads: list[Monomial] = []
    pairs: set[tuple[int, int]] = set()

    def update(f: Polynomial):
        # Gebauer-Moeller pair pruning (product + chain criteria).
        mf = f.leading_monomial(order)
        t = len(basis)
        kept = {
            (i, j)
            for (i, j) in pairs
            if not monomial_divides(mf, monomial_lcm(leads[i], leads[j]))
            or monomial_lcm(leads[i], leads[j]) == monomial_lcm(leads[i], mf)
            or monomial_lcm(leads[i], leads[j]) == monomial_lcm(leads[j], mf)
        }
        by_lcm: dict[Monomial, list[int]] = {}
        for i in range(t):
            by_lcm.setdefault(monomial_lcm(leads[i], mf), []).append(i)
        minimal: list[Monomial] = []
        for lcm in sorted(by_lcm, key=order.key):
            if not any(monomial_divides(seen, lcm) for seen in minimal):
                minimal.append(lcm)
        for lcm in minimal:
            members = by_lcm[lcm]
            if not any(monomial_lcm(leads[i], mf) == monomial_mul(leads[i], mf) for i in members):
                kept.add((min(members), t))
        basis.append(f)
        leads.append(mf)
        pairs.clear()
        pairs.update(kept)

    for f in gens:
        update(f)

    processed = 0
    while pairs:
        i, j = min(pairs, key=lambda ij: (monomial_degree(monomial_lcm(leads[ij[0]], leads[ij[1]])), ij))
        lcm_degree = monomial_degree(monomial_lcm(leads[i], leads[j]))
        if lcm_degree > budgets.degree:
            raise BudgetError(
                f"S-pair degree {lcm_degree} exceeds the degree budget {budgets.degree}"
            )
        processed += 1
        if processed > budgets.pairs:
            raise BudgetError(f"pair budget {budgets.pairs} exceeded")
        pairs.remove((i, j))
        h = normal_form(spoly(basis[i], basis[j], order), basis, order)
        if h:
            update(h.monic(order))

    return GroebnerBasis(variables, order, _interreduce(basis, order))


def _interreduce(elements: Sequence[Polynomial], order: MonomialOrder) -> tuple[Polynomial, ...]:
    """Minimalize (drop divisible leading terms) and tail-reduce; canonical sort."""
    minimal: list[Polynomial] = []
    for g in sorted(elements, key=lambda g: order.key(g.leading_monomial(order))):
        lm = g.leading_monomial(order)
        if not any(monomial_divides(h.leading_monomial(order), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(normal_form(g, others, order).monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return tuple(reduced)


def initial_ideal(gb: GroebnerBasis) -> IdealPresentation:
    """The monomial ideal of leading terms; its quotient shares the Hilbert
    function of the original quotient."""
    if not gb.reduced:
        raise InputError("initial_ideal expects a reduced basis")
    n = gb.nvars
    gens = tuple(Polynomial(n, [(m, 1)]) for m in gb.leading_monomials())
    return IdealPresentation(gb.variables, gens)


# ---------------------------------------------------------------------------
# minimal presentations


def _coefficient_vector(p: Polynomial, basis: Sequence[Monomial]) -> list[Fraction]:
    return [p.coefficient(m) for m in basis]


def _minimal_homogeneous_generators(
    gens: Sequence[Polynomial], nvars: int
) -> list[Polynomial]:
    """Prune to a minimal homogeneous generating set.

    Degree by degree: a generator of degree d is redundant exactly when its
    degree-d coefficient vector lies in the span of the degree-d monomial
    multiples of the generators kept so far (lower degrees cannot be helped
    by higher ones in the homogeneous setting).
    """
    kept: list[Polynomial] = []
    for g in sorted(gens, key=lambda g: g.sort_key()):
        d = g.degree()
        basis = monomials_of_degree(nvars, d)
        rows = []
        for h in kept:
            shift = d - h.degree()
            for m in monomials_of_degree(nvars, shift):
                rows.append(_coefficient_vector(h.mul_term(m, 1), basis))
        if rows and linalg.in_row_space(rows, _coefficient_vector(g, basis)):
            continue
        kept.append(g)
    return kept


def minimalize_presentation(pres: RingPresentation) -> RingPresentation:
    """Minimal presentation of the same graded ring.

    Every generator with a nonzero linear part (for a homogeneous ideal, a
    linear form) is eliminated by substituting out its leading variable; the
    remaining generators are pruned to a minimal homogeneous generating set.
    The variable count of the result is the embedding dimension.
    """
    if not pres.ideal.homogeneous:
        raise InhomogeneousError("minimalize_presentation requires a homogeneous ideal")
    variables = pres.variables
    gens = [g for g in pres.generators if not g.is_zero]

    while True:
        gens = [g for g in gens if not g.is_zero]
        linear = next((g for g in gens if g.degree() == 1), None)
        if linear is None:
            break
        lm, lc = linear.leading_term(DEGREVLEX)
        i = lm.index(1)
        # x_i = x_i - linear/lc has no x_i left; substitute it everywhere.
        replacement = Polynomial.variable(len(variables), i) - linear * (1 / lc)
        gens = [g.substitute(i, replacement) for g in gens if g is not linear]
        gens = [g.drop_variable(i) for g in gens]
        variables = variables.drop(i)

    seen: set[Polynomial] = set()
    unique = []
    for g in gens:
        if g not in seen:
            seen.add(g)
            unique.append(g)
    minimal = _minimal_homogeneous_generators(unique, len(variables))
    return RingPresentation(
        IdealPresentation(variables, tuple(minimal)),
        minimalized=True,
        warnings=pres.warnings,
    )
