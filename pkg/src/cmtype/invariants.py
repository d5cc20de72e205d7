"""Hilbert series, dimension, h-vector, multiplicity, and Cohen-Macaulay data.

The pipeline is: reduced Groebner basis -> initial ideal -> Hilbert numerator
(pivot-variable recursion on the monomial generators) -> exact deflation by
(1-t) to read off dimension and h-vector.  Cohen-Macaulayness is decided by
comparing the length of a verified artinian reduction with the multiplicity,
and the Cohen-Macaulay type is the socle dimension of that reduction.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Sequence

from . import linalg
from .errors import (
    Budgets,
    DEFAULT_BUDGETS,
    InhomogeneousError,
    InputError,
    LsopSearchError,
)
from .groebner import GroebnerBasis, buchberger, initial_ideal, minimalize_presentation, normal_form
from .poly import (
    DEGREVLEX,
    Monomial,
    Polynomial,
    monomial_degree,
    monomial_divides,
    monomials_of_degree,
)
from .presentation import IdealPresentation, RingPresentation, render_polynomial


# ---------------------------------------------------------------------------
# Hilbert numerators for monomial ideals


def _strip(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs or [0]


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _minimal_monomials(gens: Sequence[Monomial]) -> tuple[Monomial, ...]:
    minimal: list[Monomial] = []
    for m in sorted(set(gens), key=lambda m: (monomial_degree(m), m)):
        if not any(monomial_divides(g, m) for g in minimal):
            minimal.append(m)
    return tuple(minimal)


def _numerator(gens: tuple[Monomial, ...], nvars: int) -> list[int]:
    gens = _minimal_monomials(gens)
    if not gens:
        return [1]
    if any(monomial_degree(m) == 0 for m in gens):
        return [0]
    # pairwise coprime generators form a regular sequence
    counts = [0] * nvars
    for m in gens:
        for i, e in enumerate(m):
            if e:
                counts[i] += 1
    if all(c <= 1 for c in counts):
        result = [1]
        for m in gens:
            factor = [0] * (monomial_degree(m) + 1)
            factor[0] = 1
            factor[-1] = -1
            result = _poly_mul(result, factor)
        return result
    pivot = counts.index(max(counts))
    plus = tuple(m for m in gens if m[pivot] == 0)
    pivot_mono = tuple(1 if i == pivot else 0 for i in range(nvars))
    colon = tuple(
        tuple(e - 1 if i == pivot and e > 0 else e for i, e in enumerate(m)) for m in gens
    )
    n_plus = _numerator(plus + (pivot_mono,), nvars)
    n_colon = _numerator(colon, nvars)
    return _poly_add(n_plus, [0] + n_colon)


def hilbert_numerator(monomial_ideal: IdealPresentation) -> list[int]:
    """N(t) with Hilbert series of the quotient equal to N(t)/(1-t)^nvars."""
    exps = []
    for g in monomial_ideal.generators:
        if len(g.terms) != 1:
            raise InputError("hilbert_numerator requires monomial generators")
        exps.append(next(iter(g.terms)))
    return _strip(_numerator(tuple(exps), monomial_ideal.nvars))


# ---------------------------------------------------------------------------
# Hilbert series and deflation


@dataclass(frozen=True)
class HilbertSeries:
    """N(t)/(1-t)^nvars together with its exact deflation data."""

    numerator: tuple[int, ...]
    nvars: int
    dim: int
    hvector: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return sum(self.hvector)

    def hilbert_function(self, d: int) -> int:
        """dim_k of the degree-d piece of the quotient."""
        if d < 0:
            return 0
        n = self.nvars
        total = 0
        for k, c in enumerate(self.numerator):
            if k > d:
                break
            if c:
                total += c * math.comb(n - 1 + d - k, d - k) if n > 0 else (c if k == d else 0)
        return total


def _deflate(numerator: list[int]) -> tuple[int, list[int]]:
    """Divide by (1-t) as often as it divides exactly; return (count, quotient)."""
    coeffs = _strip(list(numerator))
    count = 0
    while sum(coeffs) == 0 and any(coeffs):
        coeffs = _strip(list(accumulate(coeffs))[:-1])
        count += 1
    return count, coeffs


def hilbert_series_from_gb(gb: GroebnerBasis) -> HilbertSeries:
    numerator = hilbert_numerator(initial_ideal(gb))
    if all(c == 0 for c in numerator):
        raise InputError("the ideal is the unit ideal; not a graded ring presentation")
    deflations, hvec = _deflate(numerator)
    return HilbertSeries(
        numerator=tuple(numerator),
        nvars=gb.nvars,
        dim=gb.nvars - deflations,
        hvector=tuple(hvec),
    )


def hilbert_series(pres: RingPresentation, *, budgets: Budgets = DEFAULT_BUDGETS) -> HilbertSeries:
    _require_homogeneous(pres)
    _require_proper(pres)
    return hilbert_series_from_gb(buchberger(pres.ideal, budgets=budgets))


def _require_homogeneous(pres: RingPresentation):
    if not pres.ideal.homogeneous:
        raise InhomogeneousError("invariant computations require a homogeneous ideal")


def _require_proper(pres: RingPresentation):
    if any(g.degree() == 0 for g in pres.generators):
        raise InputError("a degree-0 generator makes the ideal the unit ideal")


# ---------------------------------------------------------------------------
# standard monomials of a zero-dimensional quotient


def standard_monomials(leads: Sequence[Monomial], nvars: int, degree: int) -> list[Monomial]:
    return [
        m
        for m in monomials_of_degree(nvars, degree)
        if not any(monomial_divides(lead, m) for lead in leads)
    ]


# ---------------------------------------------------------------------------
# artinian reductions


@dataclass(frozen=True)
class ArtinianReduction:
    """A verified linear system of parameters and the resulting quotient data."""

    lsop: tuple[Polynomial, ...]
    standard_monomial_counts: tuple[int, ...]
    length: int
    seed: int


def artinian_reduction(
    pres: RingPresentation,
    seed: int = 1,
    *,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> ArtinianReduction:
    """Quotient by `dim` verified generic linear forms.

    Candidate forms draw integer coefficients from a deterministic generator;
    attempt k uses the range [-(1+k), 1+k] (the documented widening schedule).
    A candidate is accepted only if it drops the dimension by exactly one; a
    degenerate input exhausts the 20 attempts and raises LsopSearchError.
    """
    if not pres.minimalized:
        pres = minimalize_presentation(pres)
    _require_proper(pres)
    nvars = pres.nvars
    series = hilbert_series_from_gb(buchberger(pres.ideal, budgets=budgets))
    rng = random.Random(seed)
    names = tuple(pres.variables)

    current = list(pres.generators)
    current_dim = series.dim
    chosen: list[Polynomial] = []
    attempted: list[str] = []
    for _ in range(series.dim):
        for attempt in range(20):
            bound = 1 + attempt
            coeffs = [rng.randint(-bound, bound) for _ in range(nvars)]
            if not any(coeffs):
                continue
            form = Polynomial(nvars, [(m, c) for m, c in zip(_unit_vectors(nvars), coeffs) if c])
            attempted.append(render_polynomial(form, names))
            trial = current + [form]
            trial_series = hilbert_series_from_gb(
                buchberger(IdealPresentation(pres.variables, tuple(trial)), budgets=budgets)
            )
            if trial_series.dim == current_dim - 1:
                current = trial
                current_dim -= 1
                chosen.append(form)
                break
        else:
            raise LsopSearchError(
                f"no linear parameter found after 20 attempts (dim {current_dim})",
                tuple(attempted),
            )

    final_gb = buchberger(IdealPresentation(pres.variables, tuple(current)), budgets=budgets)
    numerator = hilbert_numerator(initial_ideal(final_gb))
    deflations, counts = _deflate(numerator)
    if deflations != nvars:
        raise InputError("artinian reduction failed to reach dimension zero")
    return ArtinianReduction(
        lsop=tuple(chosen),
        standard_monomial_counts=tuple(counts),
        length=sum(counts),
        seed=seed,
    )


def _unit_vectors(nvars: int) -> list[Monomial]:
    return [tuple(1 if j == i else 0 for j in range(nvars)) for i in range(nvars)]


# ---------------------------------------------------------------------------
# socle and Cohen-Macaulay type


def _socle_dimension(artinian_gb: GroebnerBasis) -> int:
    """dim_k (0 : m) of the artinian quotient, by exact kernel computations."""
    nvars = artinian_gb.nvars
    leads = artinian_gb.leading_monomials()
    bases: list[list[Monomial]] = []
    d = 0
    while True:
        basis = standard_monomials(leads, nvars, d)
        if not basis:
            break
        bases.append(basis)
        d += 1
    total = 0
    for d, basis in enumerate(bases):
        upstairs = bases[d + 1] if d + 1 < len(bases) else []
        if not upstairs:
            total += len(basis)
            continue
        index = {m: i for i, m in enumerate(upstairs)}
        rows = []
        for v in range(nvars):
            images = []
            for b in basis:
                shifted = tuple(e + (1 if i == v else 0) for i, e in enumerate(b))
                image = normal_form(Polynomial(nvars, [(shifted, 1)]), artinian_gb)
                images.append(image)
            for target in upstairs:
                rows.append([img.coefficient(target) for img in images])
        total += len(basis) - linalg.rank(rows)
    return total


@dataclass(frozen=True)
class CmTypeResult:
    is_cm: bool
    cm_type: int | None
    is_gorenstein: bool | None


# ---------------------------------------------------------------------------
# the assembled invariants


@dataclass(frozen=True)
class RingInvariants:
    dim: int
    embdim: int
    hvector: tuple[int, ...]
    multiplicity: int
    is_cm: bool
    cm_type: int | None
    is_gorenstein: bool | None
    is_min_mult: bool
    is_hypersurface: bool
    is_regular: bool


@dataclass(frozen=True)
class Analysis:
    """Shared bundle so downstream consumers do not recompute the pipeline."""

    presentation: RingPresentation  # minimalized
    gb: GroebnerBasis
    series: HilbertSeries
    reduction: ArtinianReduction
    artinian_gb: GroebnerBasis
    invariants: RingInvariants


def analyze(
    pres: RingPresentation,
    seed: int = 1,
    *,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> Analysis:
    _require_homogeneous(pres)
    _require_proper(pres)
    minimal = pres if pres.minimalized else minimalize_presentation(pres)
    _require_proper(minimal)
    gb = buchberger(minimal.ideal, budgets=budgets)
    series = hilbert_series_from_gb(gb)
    reduction = artinian_reduction(minimal, seed=seed, budgets=budgets)
    artinian_gb = buchberger(
        IdealPresentation(minimal.variables, minimal.generators + reduction.lsop),
        budgets=budgets,
    )
    e = series.multiplicity
    is_cm = reduction.length == e
    cm_type = _socle_dimension(artinian_gb) if is_cm else None
    is_gorenstein = (cm_type == 1) if is_cm else None
    embdim = minimal.nvars
    invariants = RingInvariants(
        dim=series.dim,
        embdim=embdim,
        hvector=series.hvector,
        multiplicity=e,
        is_cm=is_cm,
        cm_type=cm_type,
        is_gorenstein=is_gorenstein,
        is_min_mult=len(series.hvector) <= 2,
        is_hypersurface=len(minimal.generators) <= 1,
        is_regular=len(minimal.generators) == 0,
    )
    return Analysis(minimal, gb, series, reduction, artinian_gb, invariants)


def ring_invariants(
    pres: RingPresentation, seed: int = 1, *, budgets: Budgets = DEFAULT_BUDGETS
) -> RingInvariants:
    return analyze(pres, seed=seed, budgets=budgets).invariants


def cm_and_type(
    pres: RingPresentation, seed: int = 1, *, budgets: Budgets = DEFAULT_BUDGETS
) -> CmTypeResult:
    inv = ring_invariants(pres, seed=seed, budgets=budgets)
    return CmTypeResult(inv.is_cm, inv.cm_type, inv.is_gorenstein)


def is_hypersurface(pres: RingPresentation, *, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """True when the minimal presentation has at most one generator.

    Regular rings (zero ideal after minimalization) count as hypersurfaces;
    the `is_regular` flag on :class:`RingInvariants` distinguishes them.
    """
    _require_homogeneous(pres)
    minimal = pres if pres.minimalized else minimalize_presentation(pres)
    return len(minimal.generators) <= 1
