"""Exact multivariate polynomial arithmetic and monomial orders.

Coefficients are ``fractions.Fraction`` throughout; nothing in the library
ever rounds.  A monomial is a plain exponent tuple, one entry per variable,
and the position of a variable in its :class:`VariableSet` fixes its
significance for the monomial orders (earlier = more significant).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .errors import InputError

Monomial = tuple  # exponent tuple, one entry per variable

_IDENT_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


# ---------------------------------------------------------------------------
# monomial helpers


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def unit_monomial(nvars: int) -> Monomial:
    return (0,) * nvars


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """All exponent tuples of the given total degree, in a fixed order."""
    if degree < 0:
        return []
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return out


class MonomialOrder(Enum):
    """Term orders on exponent tuples.

    DEGREVLEX refines total degree and is the default everywhere; LEX is
    exposed for debugging only.  Both are term orders: 1 is minimal and
    multiplication preserves comparisons.
    """

    DEGREVLEX = "degrevlex"
    LEX = "lex"

    def key(self, m: Monomial):
        """Sort key; larger key = larger monomial."""
        if self is MonomialOrder.DEGREVLEX:
            return (sum(m), tuple(-e for e in reversed(m)))
        return tuple(m)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or 1 as a <, =, > b in this order."""
        if len(a) != len(b):
            raise InputError(
                f"cannot compare monomials over {len(a)} and {len(b)} variables"
            )
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


DEGREVLEX = MonomialOrder.DEGREVLEX
LEX = MonomialOrder.LEX


# ---------------------------------------------------------------------------
# variables


@dataclass(frozen=True)
class VariableSet:
    """Ordered, distinct variable names.

    Declaration order is significant: it fixes monomial-order significance
    and the rendering order.  Presentations always have at least one
    variable; the empty set only arises internally when minimalization
    eliminates every variable (the residue field).
    """

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise InputError("variable names must be distinct")
        for name in self.names:
            if not _IDENT_RE.match(name):
                raise InputError(f"invalid variable name {name!r}")

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}") from None

    def drop(self, i: int) -> "VariableSet":
        return VariableSet(self.names[:i] + self.names[i + 1 :])


# ---------------------------------------------------------------------------
# polynomials


def _coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise InputError(f"coefficients must be exact rationals, got {type(value).__name__}")


class Polynomial:
    """Immutable sparse polynomial over the rationals.

    Stored as a map from exponent tuple to nonzero Fraction; two equal
    polynomials therefore have identical term maps.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | Iterable[tuple] = ()):
        data: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for m, c in items:
            m = tuple(m)
            if len(m) != nvars or any(e < 0 for e in m):
                raise InputError(f"bad exponent tuple {m} for {nvars} variables")
            c = _coeff(c) + data.get(m, Fraction(0))
            if c:
                data[m] = c
            else:
                data.pop(m, None)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", data)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls(nvars, [(unit_monomial(nvars), 1)])

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, [(unit_monomial(nvars), c)])

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, [(tuple(exps), 1)])

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {monomial_degree(m) for m in self.terms}
        return len(degrees) <= 1

    def homogeneous_degree(self) -> int:
        if not self.is_homogeneous():
            raise InputError("polynomial is not homogeneous")
        return self.degree()

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def leading_term(self, order: MonomialOrder = DEGREVLEX) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise InputError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        return self.leading_term(order)[0]

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic ---------------------------------------------------------

    def _check_compatible(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise InputError("polynomials are over different variable sets")

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        data = dict(self.terms)
        for m, c in other.terms.items():
            s = data.get(m, Fraction(0)) + c
            if s:
                data[m] = s
            else:
                data.pop(m, None)
        return _raw(self.nvars, data)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return _raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if not c:
                return Polynomial.zero(self.nvars)
            return _raw(self.nvars, {m: v * c for m, v in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        data: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = data.get(m, Fraction(0)) + c1 * c2
                if s:
                    data[m] = s
                else:
                    data.pop(m, None)
        return _raw(self.nvars, data)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise InputError("polynomial exponents must be nonnegative integers")
        result = Polynomial.one(self.nvars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def mul_term(self, m: Monomial, c) -> "Polynomial":
        """Multiply by the single term c * x^m."""
        c = _coeff(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return _raw(self.nvars, {monomial_mul(t, m): v * c for t, v in self.terms.items()})

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        return self * (1 / lc)

    # -- structural operations ----------------------------------------------

    def substitute(self, i: int, replacement: "Polynomial") -> "Polynomial":
        """Substitute the i-th variable by a polynomial over the same variables."""
        self._check_compatible(replacement)
        powers: dict[int, Polynomial] = {0: Polynomial.one(self.nvars)}
        result = Polynomial.zero(self.nvars)
        for m, c in sorted(self.terms.items()):
            e = m[i]
            if e not in powers:
                powers[e] = replacement**e
            rest = list(m)
            rest[i] = 0
            result = result + powers[e].mul_term(tuple(rest), c)
        return result

    def drop_variable(self, i: int) -> "Polynomial":
        """Remove an unused variable (every exponent at position i must be 0)."""
        data = {}
        for m, c in self.terms.items():
            if m[i] != 0:
                raise InputError(f"variable {i} still occurs; cannot drop it")
            data[m[:i] + m[i + 1 :]] = c
        return _raw(self.nvars - 1, data)

    def extend(self, extra: int) -> "Polynomial":
        """Append `extra` fresh variables (exponent 0 everywhere)."""
        pad = (0,) * extra
        return _raw(self.nvars + extra, {m + pad: c for m, c in self.terms.items()})

    def permute_variables(self, sigma: Sequence[int]) -> "Polynomial":
        """Relabel variables: old variable i becomes new variable sigma[i]."""
        if sorted(sigma) != list(range(self.nvars)):
            raise InputError("sigma must be a permutation of the variable indices")
        data = {}
        for m, c in self.terms.items():
            exps = [0] * self.nvars
            for i, e in enumerate(m):
                exps[sigma[i]] = e
            data[tuple(exps)] = c
        return _raw(self.nvars, data)

    def derivative(self, i: int) -> "Polynomial":
        data: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                continue
            exps = list(m)
            exps[i] -= 1
            data[tuple(exps)] = c * m[i]
        return _raw(self.nvars, data)

    def evaluate(self, values: Sequence[Fraction]) -> Fraction:
        if len(values) != self.nvars:
            raise InputError("wrong number of values")
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    term *= Fraction(v) ** e
            total += term
        return total

    # -- identity ------------------------------------------------------------

    def sort_key(self) -> tuple:
        """A deterministic total key on polynomials (for canonical orderings)."""
        return (self.degree(), tuple(sorted(self.terms.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        if not self.terms:
            return "Polynomial(0)"
        parts = [f"{c}*x^{m}" for m, c in self.sorted_terms()]
        return "Polynomial(" + " + ".join(parts) + ")"


def _raw(nvars: int, data: dict) -> Polynomial:
    """Internal constructor for already-clean term maps."""
    p = object.__new__(Polynomial)
    object.__setattr__(p, "nvars", nvars)
    object.__setattr__(p, "terms", data)
    return p


def compare_monomials(order: MonomialOrder, m1: Monomial, m2: Monomial) -> int:
    """-1, 0 or 1 as m1 <, =, > m2 under the given order."""
    return order.compare(tuple(m1), tuple(m2))
