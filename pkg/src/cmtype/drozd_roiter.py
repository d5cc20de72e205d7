"""Drozd-Roiter length conditions for the two combinatorially explicit classes.

Finite Cohen-Macaulay type of a one-dimensional reduced ring with finite
normalization is decided by two bounds: multiplicity at most 3, and
lambda(integral closure of m^2 / x*m) at most 1 for a minimal reduction x.
This module evaluates both lengths exactly for

* numerical semigroup rings, where the normalization is a univariate
  polynomial ring and everything reduces to semigroup membership, and
* reduced line arrangements in two variables, where the normalization is a
  product of branches and the lengths fall out of evaluation vectors.

All other rings are out of scope here; the classifier reports them as
undecided rather than guessing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import InputError
from .poly import Polynomial, monomials_of_degree


# ---------------------------------------------------------------------------
# numerical semigroups


@dataclass(frozen=True)
class NumericalSemigroup:
    """Additively closed subset of the naturals with finite complement.

    The membership table covers 0 .. 2*(frobenius + max generator) + 1;
    beyond the Frobenius number every integer is a member, so the table
    window never cuts off information.
    """

    generators: tuple[int, ...]
    membership: tuple[bool, ...]
    frobenius: int
    multiplicity: int

    def contains(self, s: int) -> bool:
        if s < 0:
            return False
        if s < len(self.membership):
            return self.membership[s]
        return s > self.frobenius


def semigroup_closure(gens: Sequence[int]) -> NumericalSemigroup:
    """Close the generators under addition; sieve membership and Frobenius."""
    cleaned = sorted({int(g) for g in gens if int(g) > 0})
    if not cleaned:
        raise InputError("at least one positive generator is required")
    g = 0
    for a in cleaned:
        g = math.gcd(g, a)
    if g != 1:
        raise InputError(f"generators have gcd {g}; the semigroup ring is not of the supported form")

    a1, amax = cleaned[0], cleaned[-1]
    rough_bound = a1 * amax + 1

    def sieve(limit: int) -> list[bool]:
        table = [False] * (limit + 1)
        table[0] = True
        for s in range(1, limit + 1):
            for a in cleaned:
                if s >= a and table[s - a]:
                    table[s] = True
                    break
        return table

    rough = sieve(rough_bound)
    non_members = [s for s, ok in enumerate(rough) if not ok]
    frobenius = max(non_members) if non_members else -1
    limit = max(2 * (frobenius + amax) + 1, 1)
    table = sieve(limit) if limit != rough_bound else rough
    return NumericalSemigroup(
        generators=tuple(cleaned),
        membership=tuple(table),
        frobenius=frobenius,
        multiplicity=a1,
    )


@dataclass(frozen=True)
class DrozdRoiterReport:
    """e(R), lambda(closure of m^2 / x m), and the two bounds they must obey."""

    e: int
    lam: int
    dr1: bool  # e <= 3
    dr2: bool  # lam <= 1
    finite_type: bool
    witnesses: tuple[int, ...] = ()


def _make_report(e: int, lam: int, witnesses: tuple[int, ...] = ()) -> DrozdRoiterReport:
    dr1 = e <= 3
    dr2 = lam <= 1
    return DrozdRoiterReport(e=e, lam=lam, dr1=dr1, dr2=dr2, finite_type=dr1 and dr2, witnesses=witnesses)


def semigroup_dr(sg: NumericalSemigroup) -> DrozdRoiterReport:
    """Lengths for the semigroup ring k[[t^a : a in S]] with reduction t^a1.

    lambda counts members s >= 2*a1 with s - a1 not a nonzero member.  The
    search window stops at frobenius + a1: beyond it s - a1 exceeds the
    Frobenius number and is automatically a member.
    """
    a1 = sg.multiplicity
    witnesses = tuple(
        s
        for s in range(2 * a1, sg.frobenius + a1 + 1)
        if sg.contains(s) and not sg.contains(s - a1)
    )
    return _make_report(e=a1, lam=len(witnesses), witnesses=witnesses)


# ---------------------------------------------------------------------------
# line arrangements in two variables


@dataclass(frozen=True)
class LineArrangement:
    """Pairwise non-proportional linear forms plus a verified minimal reduction.

    Each line a*x + b*y is parametrized by t -> (b*t, -a*t); the arrangement
    ring embeds into the product of the branch coordinate rings, and the
    reduction must be nonvanishing on every branch.
    """

    lines: tuple[Polynomial, ...]
    reduction: Polynomial
    branch_points: tuple[tuple[Fraction, Fraction], ...]
    reduction_values: tuple[Fraction, ...]


def _check_linear_form(p: Polynomial, label: str) -> None:
    if p.nvars != 2:
        raise InputError(f"{label} must be a linear form in exactly two variables")
    if p.is_zero or not p.is_homogeneous() or p.degree() != 1:
        raise InputError(f"{label} must be a nonzero homogeneous linear form")


def line_arrangement(lines: Sequence[Polynomial], reduction: Polynomial) -> LineArrangement:
    """Validate and package an arrangement; rejects repeated lines and
    reductions vanishing on a branch."""
    lines = tuple(lines)
    if not lines:
        raise InputError("an arrangement needs at least one line")
    for k, line in enumerate(lines, 1):
        _check_linear_form(line, f"line {k}")
    coeffs = [(l.coefficient((1, 0)), l.coefficient((0, 1))) for l in lines]
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            (a1, b1), (a2, b2) = coeffs[i], coeffs[j]
            if a1 * b2 - a2 * b1 == 0:
                raise InputError(
                    f"lines {i + 1} and {j + 1} are proportional; the product is not squarefree"
                )
    _check_linear_form(reduction, "reduction")
    points = tuple((b, -a) for a, b in coeffs)
    values = tuple(reduction.evaluate(pt) for pt in points)
    for k, v in enumerate(values, 1):
        if v == 0:
            raise InputError(f"reduction vanishes on line {k}; it is not a minimal reduction")
    return LineArrangement(lines, reduction, points, values)


def arrangement_dr(arr: LineArrangement) -> DrozdRoiterReport:
    """Lengths via exact linear algebra on branch evaluation vectors.

    In degree j the image of the ring in the normalization is spanned by the
    evaluation vectors of the degree-j monomials at the branch points, and
    multiplying by the reduction rescales those vectors entrywise.  The
    degree contributions are summed until two consecutive degrees contribute
    zero (checked at runtime, beyond degree r+1), which certifies that the
    images have stabilized.
    """
    r = len(arr.lines)

    def image_rank(degree: int) -> int:
        rows = [
            [Fraction(bx) ** m[0] * Fraction(by) ** m[1] for (bx, by) in arr.branch_points]
            for m in monomials_of_degree(2, degree)
        ]
        return linalg.rank(rows)

    def scaled_rank(degree: int) -> int:
        rows = [
            [
                v * Fraction(bx) ** m[0] * Fraction(by) ** m[1]
                for v, (bx, by) in zip(arr.reduction_values, arr.branch_points)
            ]
            for m in monomials_of_degree(2, degree)
        ]
        return linalg.rank(rows)

    lam = 0
    zero_run = 0
    j = 2
    while True:
        contribution = image_rank(j) - scaled_rank(j - 1)
        if contribution < 0:
            raise InputError("branch-valuation bookkeeping failed; input is degenerate")
        lam += contribution
        zero_run = zero_run + 1 if contribution == 0 else 0
        if j >= r + 1 and zero_run >= 2:
            break
        j += 1
    return _make_report(e=r, lam=lam)
