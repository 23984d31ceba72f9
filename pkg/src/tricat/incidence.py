"""Exact incidence algebra on a bounded fragment of a triangular category.

A fragment collects every morphism whose objects lie below a fixed bound;
an incidence function assigns a rational to each of them.  Convolution
sums over all two-step factorizations, delta is its unit, and inverting
zeta yields the moebius function of the fragment.  The classical moebius
function of a finite poset is provided alongside for comparison; no
identity between the two is asserted anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .category import TriangularCategory
from .order import Poset


class BoundMismatch(ValueError):
    """Convolution operands live on different fragments."""


class NotInvertible(ValueError):
    """An identity morphism carries value zero."""

    def __init__(self, identity_morphism):
        super().__init__(f"value at identity {identity_morphism!r} is zero")
        self.identity_morphism = identity_morphism


class FactorizationList(NamedTuple):
    """All (outer, inner) pairs with outer o inner == morphism."""

    morphism: object
    pairs: tuple


def factorizations(cat: TriangularCategory, alpha) -> FactorizationList:
    """Enumerate every two-step factorization of alpha, trivial ones included.

    Intermediate objects range over alpha.dom .. alpha.cod only, so the
    list is finite and complete.
    """
    pairs = []
    for j in range(alpha.dom, alpha.cod + 1):
        for outer in cat.hom(j, alpha.cod):
            for inner in cat.hom(alpha.dom, j):
                if cat.compose(outer, inner) == alpha:
                    pairs.append((outer, inner))
    return FactorizationList(alpha, tuple(pairs))


class IncidenceFunction:
    """Total assignment of exact rationals to a fragment's morphisms.

    Values outside the fragment are undefined: lookups raise instead of
    returning zero.
    """

    def __init__(self, category: TriangularCategory, bound: int, values):
        self.category = category
        self.bound = bound
        table = {}
        for m in category.fragment(bound):
            if m not in values:
                raise ValueError(f"missing value for fragment morphism {m!r}")
            table[m] = Fraction(values[m])
        if len(values) != len(table):
            raise ValueError("values given for morphisms outside the fragment")
        self._table = table

    def __call__(self, alpha) -> Fraction:
        try:
            return self._table[alpha]
        except KeyError:
            raise KeyError(
                f"{alpha!r} lies outside the fragment (bound {self.bound})") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, IncidenceFunction):
            return NotImplemented
        return (self.category.name == other.category.name
                and self.bound == other.bound
                and self._table == other._table)

    def __repr__(self) -> str:
        return (f"IncidenceFunction(category={self.category.name!r}, "
                f"bound={self.bound}, morphisms={len(self._table)})")

    def items(self):
        """(morphism, value) pairs in fragment order."""
        return self._table.items()


def delta_function(cat: TriangularCategory, bound: int) -> IncidenceFunction:
    """Unit of convolution: one on identities, zero elsewhere."""
    values = {m: Fraction(int(m.dom == m.cod)) for m in cat.fragment(bound)}
    return IncidenceFunction(cat, bound, values)


def zeta_function(cat: TriangularCategory, bound: int) -> IncidenceFunction:
    """The all-ones function on the fragment."""
    values = {m: Fraction(1) for m in cat.fragment(bound)}
    return IncidenceFunction(cat, bound, values)


def _require_same_fragment(f: IncidenceFunction, g: IncidenceFunction) -> None:
    if f.category.name != g.category.name or f.bound != g.bound:
        raise BoundMismatch(
            f"operands on ({f.category.name}, bound {f.bound}) "
            f"vs ({g.category.name}, bound {g.bound})")


def convolve(f: IncidenceFunction, g: IncidenceFunction) -> IncidenceFunction:
    """(f * g)(alpha) = sum of f(outer) * g(inner) over all factorizations."""
    _require_same_fragment(f, g)
    cat = f.category
    out = {}
    for alpha in cat.fragment(f.bound):
        total = Fraction(0)
        for outer, inner in factorizations(cat, alpha).pairs:
            total += f(outer) * g(inner)
        out[alpha] = total
    return IncidenceFunction(cat, f.bound, out)


def invert(f: IncidenceFunction) -> IncidenceFunction:
    """Two-sided convolution inverse of f.

    Solves delta == f * g by recursion on cod - dom: each non-identity
    alpha contributes one linear equation whose only new unknown is
    g(alpha), scaled by f at the codomain identity.  Raises NotInvertible
    exactly when some identity value is zero.
    """
    cat, bound = f.category, f.bound
    for n in range(bound + 1):
        if f(cat.identity(n)) == 0:
            raise NotInvertible(cat.identity(n))
    g: dict = {}
    for alpha in sorted(cat.fragment(bound), key=lambda m: m.cod - m.dom):
        lead = f(cat.identity(alpha.cod))
        if alpha.dom == alpha.cod:
            g[alpha] = 1 / lead
            continue
        acc = Fraction(0)
        for outer, inner in factorizations(cat, alpha).pairs:
            if inner == alpha:
                continue  # the unknown g(alpha) term, solved for below
            acc += f(outer) * g[inner]
        g[alpha] = -acc / lead
    return IncidenceFunction(cat, bound, g)


def moebius_function(cat: TriangularCategory, bound: int) -> IncidenceFunction:
    """Convolution inverse of zeta on the fragment."""
    return invert(zeta_function(cat, bound))


def poset_moebius(p: Poset) -> dict[tuple[int, int], int]:
    """Classical moebius function of a finite poset, keyed by index pairs.

    Only comparable pairs appear: mu[a, a] == 1 and, for a < b,
    mu[a, b] == -sum of mu[a, c] over a <= c < b.
    """
    m = len(p)
    rel = p.relation
    # down-set size orders any linear extension; ties are incomparable
    by_downset = sorted(range(m), key=lambda b: sum(rel[c][b] for c in range(m)))
    mu: dict[tuple[int, int], int] = {}
    for a in range(m):
        mu[a, a] = 1
        for b in by_downset:
            if b == a or not rel[a][b]:
                continue
            mu[a, b] = -sum(mu[a, c] for c in range(m)
                            if rel[a][c] and rel[c][b] and c != b)
    return mu
