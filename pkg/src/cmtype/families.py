"""Generators and recognizers for the catalog of named ring families.

The catalog covers polynomial rings, quadrics (tagged by rank), binary-form
hypersurfaces (tagged by root-multiplicity profile), rational normal scrolls,
Veronese cones, and the two special h-vector (1,2) rings.  Recognition of the
determinantal families is exact up to variable permutation; quadrics and
binary forms are instead tagged by rank and profile, which are full
linear-equivalence invariants in characteristic zero, so no permutation
certificate applies to them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from . import linalg
from .errors import Budgets, DEFAULT_BUDGETS, InputError
from .groebner import buchberger, minimalize_presentation, normal_form
from .parsing import parse_presentation
from .poly import Polynomial, VariableSet, monomials_of_degree
from .presentation import IdealPresentation, RingPresentation, make_presentation


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class ScrollType:
    """Nondecreasing block sizes a_0 <= ... <= a_k with at least one positive."""

    a: tuple[int, ...]

    def __post_init__(self):
        if not self.a or any(x < 0 for x in self.a):
            raise InputError("scroll type must be a nonempty tuple of naturals")
        if list(self.a) != sorted(self.a):
            raise InputError("scroll type must be sorted ascending")
        if not any(self.a):
            raise InputError("scroll type needs at least one positive entry")

    @property
    def nvars(self) -> int:
        return sum(self.a) + len(self.a)

    @property
    def dim(self) -> int:
        return len(self.a) + 1  # k + 2


def scroll_ideal(scroll: ScrollType | Sequence[int]) -> RingPresentation:
    """2x2 minors of the concatenated Hankel blocks of the scroll."""
    if not isinstance(scroll, ScrollType):
        scroll = ScrollType(tuple(scroll))
    blocks = scroll.a
    k = len(blocks) - 1
    names: list[str] = []
    columns: list[tuple[int, int]] = []
    offset = 0
    for i, a in enumerate(blocks):
        for j in range(a + 1):
            names.append(f"x{j}" if k == 0 else f"x{j}_{i}")
        for j in range(a):
            columns.append((offset + j, offset + j + 1))
        offset += a + 1
    nvars = len(names)

    def var(i: int) -> Polynomial:
        return Polynomial.variable(nvars, i)

    gens: list[Polynomial] = []
    seen = set()
    for p in range(len(columns)):
        for q in range(p + 1, len(columns)):
            top_p, bot_p = columns[p]
            top_q, bot_q = columns[q]
            minor = var(top_p) * var(bot_q) - var(bot_p) * var(top_q)
            if minor and minor not in seen:
                seen.add(minor)
                gens.append(minor)
    return make_presentation(names, gens)


def veronese_cone_ideal(n: int) -> RingPresentation:
    """2x2 minors of the generic symmetric 3x3 matrix plus n-5 cone variables.

    n = 5 is the cone over the quadratic Veronese surface (6 variables);
    each further n adds one free variable.
    """
    if n < 5:
        raise InputError("veronese_cone requires n >= 5")
    nvars = n + 1
    names = [f"x{i}" for i in range(nvars)]

    def var(i: int) -> Polynomial:
        return Polynomial.variable(nvars, i)

    matrix = [
        [var(0), var(1), var(2)],
        [var(1), var(3), var(4)],
        [var(2), var(4), var(5)],
    ]
    gens: list[Polynomial] = []
    seen = set()
    for r1 in range(3):
        for r2 in range(r1 + 1, 3):
            for c1 in range(3):
                for c2 in range(c1 + 1, 3):
                    minor = matrix[r1][c1] * matrix[r2][c2] - matrix[r1][c2] * matrix[r2][c1]
                    if minor and minor not in seen:
                        seen.add(minor)
                        gens.append(minor)
    return make_presentation(names, gens)


def gw12_ideal() -> RingPresentation:
    return parse_presentation("ring: x, y, z\nideal: x*y, y*z, z^2\n")


def graded12_ideal() -> RingPresentation:
    """2x2 minors of the cyclic matrix [[x, y, z], [y, z, x]]."""
    return parse_presentation(
        "ring: x, y, z\nideal: x*z - y^2, x^2 - y*z, x*y - z^2\n"
    )


def polynomial_ring(n: int) -> RingPresentation:
    if n < 1:
        raise InputError("a polynomial ring needs at least one variable")
    return make_presentation([f"x{i}" for i in range(n)], [])


def sum_of_squares(rank: int, nvars: int) -> RingPresentation:
    if not 1 <= rank <= nvars:
        raise InputError("quadric rank must be between 1 and the variable count")
    names = [f"x{i}" for i in range(nvars)]
    form = Polynomial.zero(nvars)
    for i in range(rank):
        form = form + Polynomial.variable(nvars, i) ** 2
    return make_presentation(names, [form])


def binary_form_presentation(profile: Sequence[int]) -> RingPresentation:
    """Canonical product of lines x, y, x+y, x+2y, ... with given multiplicities."""
    mults = sorted((int(m) for m in profile), reverse=True)
    if not mults or any(m < 1 for m in mults):
        raise InputError("profile entries must be positive integers")
    names = ["x", "y"]
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    lines = [x, y] + [x + i * y for i in range(1, max(0, len(mults) - 2) + 1)]
    form = Polynomial.one(2)
    for line, m in zip(lines, mults):
        form = form * line**m
    return make_presentation(names, [form])


# ---------------------------------------------------------------------------
# invariant-based tags: quadric rank and binary-form profile


def quadric_rank(f: Polynomial) -> int:
    """Rank of the symmetric matrix of a quadratic form, by exact elimination."""
    if f.is_zero or not f.is_homogeneous() or f.degree() != 2:
        raise InputError("quadric_rank requires a nonzero homogeneous quadratic form")
    n = f.nvars
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for m, c in f.terms.items():
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            matrix[i][i] = c
        else:
            i, j = support
            matrix[i][j] = c / 2
            matrix[j][i] = c / 2
    return linalg.rank(matrix)


# univariate helpers over Fraction (coefficient lists, index = degree)


def _udeg(u: list[Fraction]) -> int:
    return len(u) - 1


def _utrim(u: list[Fraction]) -> list[Fraction]:
    while len(u) > 1 and u[-1] == 0:
        u.pop()
    return u


def _uderiv(u: list[Fraction]) -> list[Fraction]:
    if len(u) <= 1:
        return [Fraction(0)]
    return _utrim([u[i] * i for i in range(1, len(u))])


def _udivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while _udeg(_utrim(list(a))) >= _udeg(b) and any(a):
        a = _utrim(a)
        if _udeg(a) < _udeg(b):
            break
        shift = _udeg(a) - _udeg(b)
        factor = a[-1] * inv
        q[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
    return _utrim(q), _utrim(a)


def _ugcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _utrim(list(a)), _utrim(list(b))
    while any(b):
        _, r = _udivmod(a, b)
        a, b = b, r
    if any(a) and a[-1] != 1:
        a = [c / a[-1] for c in a]
    return a


def _yun_multiplicities(u: list[Fraction]) -> list[tuple[int, int]]:
    """Squarefree decomposition via Yun's algorithm: list of (multiplicity, degree)."""
    result: list[tuple[int, int]] = []
    du = _uderiv(u)
    g = _ugcd(u, du)
    c, _ = _udivmod(u, g)
    d = [x - y for x, y in _pad(_udivmod(du, g)[0], _uderiv(c))]
    i = 1
    while _udeg(c) > 0:
        gi = _ugcd(c, d)
        if _udeg(gi) > 0:
            result.append((i, _udeg(gi)))
        c, _ = _udivmod(c, gi)
        d = [x - y for x, y in _pad(_udivmod(d, gi)[0], _uderiv(c))]
        i += 1
    return result


def _pad(a: list[Fraction], b: list[Fraction]):
    size = max(len(a), len(b))
    a = a + [Fraction(0)] * (size - len(a))
    b = b + [Fraction(0)] * (size - len(b))
    return zip(a, b)


def binary_form_profile(f: Polynomial) -> tuple[int, ...]:
    """Root-multiplicity profile over the algebraic closure, without factoring.

    Computed from the squarefree decomposition of the dehomogenization plus
    the multiplicity of the root at infinity; returned sorted descending.
    Valid in characteristic zero.
    """
    if f.is_zero:
        raise InputError("binary_form_profile requires a nonzero form")
    if f.nvars != 2 or not f.is_homogeneous() or f.degree() < 1:
        raise InputError("binary_form_profile requires a binary form of degree >= 1")
    d = f.degree()
    u = [Fraction(0)] * (d + 1)
    for m, c in f.terms.items():
        u[m[0]] = c
    u = _utrim(u)
    profile: list[int] = []
    infinity_mult = d - _udeg(u)
    if infinity_mult > 0:
        profile.append(infinity_mult)
    if _udeg(u) > 0:
        for mult, degree in _yun_multiplicities(u):
            profile.extend([mult] * degree)
    return tuple(sorted(profile, reverse=True))


# ---------------------------------------------------------------------------
# recognition

# The catalog's permutation-matched families are all quadric-generated, so the
# search is pruned with a permutation-equivariant signature of the degree-2
# piece: the union of monomial supports over the whole row space assigns each
# variable the pair (does its square occur, how many cross terms occur), and a
# relabeling can only map variables with equal signatures onto each other.


def _degree2_rref(gens: Sequence[Polynomial], nvars: int):
    basis = monomials_of_degree(nvars, 2)
    rows = [[g.coefficient(m) for m in basis] for g in gens]
    mat, pivots = linalg.rref(rows)
    mat = mat[: len(pivots)]
    return mat, pivots, basis


def _support_signatures(mat, basis, nvars: int) -> list[tuple[int, int]]:
    support = set()
    for row in mat:
        for c, value in enumerate(row):
            if value:
                support.add(basis[c])
    squares = [0] * nvars
    crosses = [0] * nvars
    for m in support:
        live = [i for i, e in enumerate(m) if e]
        if len(live) == 1:
            squares[live[0]] += 1
        else:
            crosses[live[0]] += 1
            crosses[live[1]] += 1
    return list(zip(squares, crosses))


def _constrained_permutations(family_sigs, input_sigs, n: int):
    """Permutations sigma (old -> new) respecting the variable signatures."""
    from collections import defaultdict
    from itertools import product

    pools: dict = defaultdict(list)
    for idx, sig in enumerate(input_sigs):
        pools[sig].append(idx)
    groups: dict = defaultdict(list)
    for idx, sig in enumerate(family_sigs):
        groups[sig].append(idx)
    if {s: len(v) for s, v in pools.items()} != {s: len(v) for s, v in groups.items()}:
        return
    signatures = sorted(groups)
    for assignment in product(*[permutations(pools[s]) for s in signatures]):
        sigma = [0] * n
        for sig, perm in zip(signatures, assignment):
            for fam_idx, inp_idx in zip(groups[sig], perm):
                sigma[fam_idx] = inp_idx
        yield tuple(sigma)


@dataclass(frozen=True)
class FamilyTag:
    """Result of catalog matching.

    For permutation-matched kinds the certificate is the variable relabeling
    (old index -> new index) under which the canonical family presentation
    has exactly the input's reduced Groebner basis.  Rank- and profile-based
    kinds carry no certificate.  `attempted` is False when the permutation
    search was skipped because the ring has more than 9 variables.
    """

    kind: str  # polynomial_ring|quadric|binary_form|scroll|veronese_cone|gw12|graded12|none
    param: tuple | int | None = None
    certificate: tuple[int, ...] | None = None
    attempted: bool = True


def _scroll_types_with_nvars(n: int) -> list[ScrollType]:
    """All scroll types on exactly n variables whose ideal is nonzero."""
    found: list[ScrollType] = []

    def extend(prefix: list[int], remaining: int):
        # remaining = variables still to allocate; each block uses a_i + 1
        if remaining == 0:
            if any(prefix) and sum(prefix) >= 2:
                found.append(ScrollType(tuple(prefix)))
            return
        lo = prefix[-1] if prefix else 0
        for a in range(lo, remaining):
            extend(prefix + [a], remaining - (a + 1))

    extend([], n)
    found.sort(key=lambda t: (len(t.a), t.a))
    return found


def _permutation_candidates(n: int) -> list[tuple[FamilyTag, RingPresentation]]:
    candidates: list[tuple[FamilyTag, RingPresentation]] = []
    for scroll in _scroll_types_with_nvars(n):
        candidates.append(
            (FamilyTag("scroll", param=scroll.a), scroll_ideal(scroll))
        )
    if n >= 6:
        p = n - 1
        candidates.append((FamilyTag("veronese_cone", param=p), veronese_cone_ideal(p)))
    if n == 3:
        candidates.append((FamilyTag("gw12"), gw12_ideal()))
        candidates.append((FamilyTag("graded12"), graded12_ideal()))
    return candidates


def match_named_family(
    pres: RingPresentation, *, budgets: Budgets = DEFAULT_BUDGETS
) -> FamilyTag:
    """Match a minimal presentation against the family catalog.

    Quadrics and binary forms are tagged by their invariants; all other
    families are searched over variable permutations in lexicographic order
    (first match wins), with degree statistics used for pruning.  A match is
    only reported after the permuted family reproduces the input's reduced
    Groebner basis bit for bit.
    """
    minimal = pres if pres.minimalized else minimalize_presentation(pres)
    gens = minimal.generators
    n = minimal.nvars

    if not gens:
        return FamilyTag("polynomial_ring", param=n, certificate=tuple(range(n)))
    if len(gens) == 1:
        f = gens[0]
        if f.degree() == 2:
            return FamilyTag("quadric", param=(quadric_rank(f), n))
        if n == 2:
            return FamilyTag("binary_form", param=binary_form_profile(f))
        return FamilyTag("none")

    if n > 9:
        return FamilyTag("none", attempted=False)

    input_gb = buchberger(minimal.ideal, budgets=budgets)
    input_degrees = sorted(g.degree() for g in gens)
    all_quadrics = input_degrees == [2] * len(gens)
    if all_quadrics:
        input_mat, input_pivots, basis2 = _degree2_rref(gens, n)
        input_sigs = _support_signatures(input_mat, basis2, n)

    def verify(tag: FamilyTag, permuted, sigma) -> FamilyTag | None:
        candidate_gb = buchberger(
            IdealPresentation(minimal.variables, tuple(permuted)), budgets=budgets
        )
        if candidate_gb.elements == input_gb.elements:
            return FamilyTag(tag.kind, param=tag.param, certificate=tuple(sigma))
        return None

    for tag, family in _permutation_candidates(n):
        family_min = minimalize_presentation(family)
        family_gens = family_min.generators
        if sorted(g.degree() for g in family_gens) != input_degrees:
            continue
        if all_quadrics:
            fam_mat, fam_pivots, _ = _degree2_rref(family_gens, n)
            if len(fam_pivots) != len(input_pivots):
                continue
            fam_sigs = _support_signatures(fam_mat, basis2, n)
            for sigma in _constrained_permutations(fam_sigs, input_sigs, n):
                permuted = [g.permute_variables(sigma) for g in family_gens]
                vectors = [[pg.coefficient(m) for m in basis2] for pg in permuted]
                if any(
                    any(linalg.reduce_against(vec, input_mat, input_pivots))
                    for vec in vectors
                ):
                    continue
                found = verify(tag, permuted, sigma)
                if found:
                    return found
        else:
            for sigma in permutations(range(n)):
                permuted = [g.permute_variables(sigma) for g in family_gens]
                if any(normal_form(pg, input_gb) for pg in permuted):
                    continue
                found = verify(tag, permuted, sigma)
                if found:
                    return found
    return FamilyTag("none")


# ---------------------------------------------------------------------------
# catalog access for the `generate` front end


def catalog_presentation(family: str, args: Sequence[str]) -> RingPresentation:
    """Canonical presentation for a named family; used by `generate`."""

    def int_args(count: int) -> list[int]:
        flat: list[str] = []
        for a in args:
            flat.extend(part for part in str(a).split(",") if part)
        if len(flat) != count:
            raise InputError(f"{family} expects {count} integer argument(s)")
        try:
            return [int(a) for a in flat]
        except ValueError:
            raise InputError(f"{family} expects integer arguments") from None

    def int_list() -> list[int]:
        flat: list[str] = []
        for a in args:
            flat.extend(part for part in str(a).split(",") if part)
        if not flat:
            raise InputError(f"{family} expects at least one integer argument")
        try:
            return [int(a) for a in flat]
        except ValueError:
            raise InputError(f"{family} expects integer arguments") from None

    if family == "polynomial_ring":
        return polynomial_ring(int_args(1)[0])
    if family == "quadric":
        rank, nvars = int_args(2)
        return sum_of_squares(rank, nvars)
    if family == "binary_form":
        return binary_form_presentation(int_list())
    if family == "scroll":
        return scroll_ideal(ScrollType(tuple(sorted(int_list()))))
    if family == "veronese_cone":
        return veronese_cone_ideal(int_args(1)[0])
    if family == "sym3x3":
        if args:
            raise InputError("sym3x3 takes no arguments")
        return veronese_cone_ideal(5)
    if family == "gw12":
        if args:
            raise InputError("gw12 takes no arguments")
        return gw12_ideal()
    if family == "graded12":
        if args:
            raise InputError("graded12 takes no arguments")
        return graded12_ideal()
    raise InputError(
        f"unknown family {family!r}; available: polynomial_ring, quadric, binary_form, "
        "scroll, veronese_cone, sym3x3, gw12, graded12"
    )
