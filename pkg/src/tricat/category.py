"""Two triangular categories and the exhaustive machinery they share.

Objects are the natural numbers; hom(m, n) is finite and enumerable,
hom(n, n) holds exactly the identity, and hom(m, n) is empty for m > n.
Those facts make every quantifier below ("for all morphisms into n",
"for every commuting span") a finite, exact search.

The two instances: bipartite graphs composed by edge transfer, and
strictly increasing maps composed as functions.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional

from .bigraph import BipartiteGraph, graphs_with_basis
from .order import Poset, leq


class CompositionMismatch(ValueError):
    """Inner codomain and outer domain disagree."""


class NotComparable(ValueError):
    """Requested a factor for a pair that is not ordered."""


class NotMonomorphic(ValueError):
    """A subobject construction met a non-mono morphism."""


def identity_graph(n: int) -> BipartiteGraph:
    """The edge-free graph with full basis: the identity at n."""
    return BipartiteGraph(n, n, ())


def compose_graphs(outer: BipartiteGraph, inner: BipartiteGraph) -> BipartiteGraph:
    """Composite of inner: m -> k with outer: k -> n.

    Keeps all of inner's edges plus those edges of outer whose basis
    endpoint lies inside the composite basis {1..m}; outer edges rooted
    beyond m are dropped.
    """
    if inner.n != outer.k:
        raise CompositionMismatch(
            f"inner codomain {inner.n} does not match outer domain {outer.k}")
    m = inner.k
    merged = sorted(set(inner.edges) | {e for e in outer.edges if e[0] <= m})
    return BipartiteGraph(outer.n, m, tuple(merged))


@dataclass(frozen=True)
class DeltaMap:
    """Injective, order-preserving map {1..dom} -> {1..cod}, stored by image."""

    dom: int
    cod: int
    image: tuple[int, ...] = ()


def make_delta_map(dom: int, cod: int, image) -> DeltaMap:
    """Validate an image sequence: strictly increasing values in 1..cod."""
    image = tuple(image)
    if not 0 <= dom <= cod:
        raise ValueError(f"need 0 <= dom <= cod, got dom={dom}, cod={cod}")
    if len(image) != dom:
        raise ValueError(f"image must list exactly dom={dom} values, got {len(image)}")
    for t, value in enumerate(image):
        if not isinstance(value, int) or not 1 <= value <= cod:
            raise ValueError(f"image value {value!r} outside 1..{cod}")
        if t > 0 and value <= image[t - 1]:
            raise ValueError(f"image must be strictly increasing, got {image}")
    return DeltaMap(dom, cod, image)


def delta_identity(n: int) -> DeltaMap:
    return DeltaMap(n, n, tuple(range(1, n + 1)))


def delta_hom(k: int, n: int) -> list[DeltaMap]:
    """All strictly increasing k-sequences in 1..n, lexicographically."""
    if k < 0 or n < 0:
        raise ValueError("objects must be nonnegative")
    return [DeltaMap(k, n, c) for c in combinations(range(1, n + 1), k)]


def delta_compose(outer: DeltaMap, inner: DeltaMap) -> DeltaMap:
    """Function composition, outer after inner."""
    if inner.cod != outer.dom:
        raise CompositionMismatch(
            f"inner codomain {inner.cod} does not match outer domain {outer.dom}")
    return DeltaMap(inner.dom, outer.cod, tuple(outer.image[i - 1] for i in inner.image))


def delta_map_to_json_dict(f: DeltaMap) -> dict:
    """Wire form {"dom": ..., "cod": ..., "image": [...]}."""
    return {"dom": f.dom, "cod": f.cod, "image": list(f.image)}


def delta_map_from_json_dict(data: object) -> DeltaMap:
    if not isinstance(data, dict):
        raise ValueError(f"map JSON must be an object, got {type(data).__name__}")
    try:
        dom, cod, image = data["dom"], data["cod"], data["image"]
    except KeyError as exc:
        raise ValueError(f"map JSON missing field {exc.args[0]!r}") from None
    if not isinstance(image, list):
        raise ValueError("map JSON field 'image' must be an array")
    return make_delta_map(dom, cod, image)


class TriangularCategory(ABC):
    """Finite-hom category over natural-number objects.

    Concrete classes provide hom enumeration, composition and identities;
    the base class adds caching and fragment iteration.  Morphisms must
    be hashable values exposing ``dom`` and ``cod``.
    """

    name: str = "?"

    def __init__(self) -> None:
        self._hom_cache: dict[tuple[int, int], tuple] = {}

    @abstractmethod
    def _enumerate_hom(self, dom: int, cod: int) -> list: ...

    @abstractmethod
    def compose(self, outer, inner): ...

    @abstractmethod
    def identity(self, obj: int): ...

    def hom(self, dom: int, cod: int) -> tuple:
        """Cached tuple of all morphisms dom -> cod, in enumeration order."""
        key = (dom, cod)
        got = self._hom_cache.get(key)
        if got is None:
            got = self._hom_cache[key] = tuple(self._enumerate_hom(dom, cod))
        return got

    def morphisms_into(self, cod: int) -> list:
        """Everything with the given codomain, domains ascending."""
        return [f for dom in range(cod + 1) for f in self.hom(dom, cod)]

    def fragment(self, bound: int) -> list:
        """All morphisms with both objects <= bound, codomain-major order."""
        return [f for cod in range(bound + 1) for f in self.morphisms_into(cod)]


class BipartiteCategory(TriangularCategory):
    """Bipartite graphs as morphisms basis-size -> vertex-count."""

    name = "b"

    def _enumerate_hom(self, dom, cod):
        return graphs_with_basis(dom, cod)

    def compose(self, outer, inner):
        return compose_graphs(outer, inner)

    def identity(self, obj):
        return identity_graph(obj)


class DeltaCategory(TriangularCategory):
    """Strictly increasing maps between initial segments of the naturals."""

    name = "delta"

    def _enumerate_hom(self, dom, cod):
        return delta_hom(dom, cod)

    def compose(self, outer, inner):
        return delta_compose(outer, inner)

    def identity(self, obj):
        return delta_identity(obj)


BIPARTITE = BipartiteCategory()
DELTA = DeltaCategory()


def is_mono(cat: TriangularCategory, f) -> bool:
    """Exact left-cancellation test; precomposers have domains <= f.dom."""
    for m in range(f.dom + 1):
        seen: dict = {}
        for u in cat.hom(m, f.dom):
            fu = cat.compose(f, u)
            if fu in seen:
                return False
            seen[fu] = u
    return True


@dataclass(frozen=True)
class EpiSearch:
    """Outcome of a bounded right-cancellation search.

    ``counterexample`` is None when no two distinct postcomposers agreed
    on f up to max_cod; that is evidence, not a proof, since codomains
    are unbounded.
    """

    max_cod: int
    counterexample: Optional[tuple] = None

    @property
    def epi_up_to_bound(self) -> bool:
        return self.counterexample is None


def is_epi_bounded(cat: TriangularCategory, f, max_cod: int) -> EpiSearch:
    """Search for distinct v, v' with v o f == v' o f, codomains <= max_cod."""
    if max_cod < f.cod:
        raise ValueError(f"max_cod={max_cod} must be at least cod={f.cod}")
    for p in range(f.cod, max_cod + 1):
        seen: dict = {}
        for v in cat.hom(f.cod, p):
            vf = cat.compose(v, f)
            if vf in seen:
                return EpiSearch(max_cod, (seen[vf], v))
            seen[vf] = v
    return EpiSearch(max_cod, None)


def subobject_leq(cat: TriangularCategory, alpha, beta):
    """First morphism g with beta o g == alpha, or None.

    This is the factor-through order on morphisms sharing a codomain;
    the witness is unique whenever beta is mono.
    """
    if alpha.cod != beta.cod:
        raise ValueError("subobjects must share a codomain")
    for g in cat.hom(alpha.dom, beta.dom):
        if cat.compose(beta, g) == alpha:
            return g
    return None


def leq_factor(u: BipartiteGraph, v: BipartiteGraph) -> BipartiteGraph:
    """The graph morphism w with v o w == u, built directly from u's edges.

    Defined exactly when u <= v in the graph order; w keeps the edges of
    u that stay within v's basis and lives in hom(u.k, v.k).
    """
    if not leq(u, v):
        raise NotComparable(f"{u} is not below {v}")
    kept = tuple(e for e in u.edges if e[1] <= v.k)
    return BipartiteGraph(v.k, u.k, kept)


def subobject_poset(cat: TriangularCategory, n: int) -> Poset:
    """Poset of all morphisms into n under the factor-through order."""
    els = cat.morphisms_into(n)
    for f in els:
        if not is_mono(cat, f):
            raise NotMonomorphic(f"{f!r} is not a monomorphism")
    rel = [[subobject_leq(cat, a, b) is not None for b in els] for a in els]
    return Poset(els, rel)


def check_boolean_iso(n: int) -> bool:
    """Increasing-map subobjects of n versus subsets of {1..n}.

    True iff taking images is a bijection onto the powerset and the
    subobject order coincides with subset inclusion.
    """
    p = subobject_poset(DELTA, n)
    images = [frozenset(f.image) for f in p.elements]
    if len(set(images)) != len(images) or len(images) != 2 ** n:
        return False
    for a in range(len(images)):
        for b in range(len(images)):
            if p.relation[a][b] != (images[a] <= images[b]):
                return False
    return True


class Pullback(NamedTuple):
    apex: int
    to_left: object
    to_right: object


def pullback_search(cat: TriangularCategory, f, g,
                    apex_limit: Optional[int] = None) -> Optional[Pullback]:
    """Exact pullback search for the cospan f: k -> n <- l :g.

    Every cone over the cospan has apex at most min(k, l), because larger
    hom-sets into k and l are empty; restricting both the candidates and
    the universal-property check to that bound therefore loses nothing.
    ``apex_limit`` can widen the range; the answer must not change, which
    the tests assert.
    """
    if f.cod != g.cod:
        raise ValueError("pullback requires a cospan: codomains must agree")
    limit = min(f.dom, g.dom) if apex_limit is None else apex_limit
    spans = []  # (apex, to_left, to_right) with f o to_left == g o to_right
    for q in range(limit + 1):
        for c in cat.hom(q, f.dom):
            fc = cat.compose(f, c)
            for d in cat.hom(q, g.dom):
                if cat.compose(g, d) == fc:
                    spans.append((q, c, d))
    for p, a, b in spans:
        if all(
            sum(1 for u in cat.hom(q, p)
                if cat.compose(a, u) == c and cat.compose(b, u) == d) == 1
            for q, c, d in spans
        ):
            return Pullback(p, a, b)
    return None


class Pushout(NamedTuple):
    obj: int
    from_left: object
    from_right: object


@dataclass(frozen=True)
class PushoutSearch:
    """Bound-qualified pushout search outcome.

    A hit is a pushout among cocones with codomain <= max_cod only, and a
    miss says nothing about larger codomains.
    """

    max_cod: int
    pushout: Optional[Pushout] = None

    @property
    def found(self) -> bool:
        return self.pushout is not None


def pushout_search_bounded(cat: TriangularCategory, f, g, max_cod: int) -> PushoutSearch:
    """Search cocones under the span f: n -> k, g: n -> l up to max_cod."""
    if f.dom != g.dom:
        raise ValueError("pushout requires a span: domains must agree")
    lo = max(f.cod, g.cod)
    if max_cod < lo:
        raise ValueError(f"max_cod={max_cod} is below the span legs ({f.cod}, {g.cod})")
    cocones = []  # (obj, from_left, from_right) with c o f == d o g
    for q in range(lo, max_cod + 1):
        for c in cat.hom(f.cod, q):
            cf = cat.compose(c, f)
            for d in cat.hom(g.cod, q):
                if cat.compose(d, g) == cf:
                    cocones.append((q, c, d))
    for p, a, b in cocones:
        if all(
            sum(1 for u in cat.hom(p, q)
                if cat.compose(u, a) == c and cat.compose(u, b) == d) == 1
            for q, c, d in cocones
        ):
            return PushoutSearch(max_cod, Pushout(p, a, b))
    return PushoutSearch(max_cod, None)


def check_moebius_axioms(cat: TriangularCategory, max_n: int) -> bool:
    """Both decomposition axioms, exhaustively over objects <= max_n.

    (1) identities only factor as identity o identity;
    (2) outer o inner == inner forces outer to be an identity.
    """
    for n in range(max_n + 1):
        ident = cat.identity(n)
        for j in range(n + 1):
            for m in range(j + 1):
                for outer in cat.hom(j, n):
                    for inner in cat.hom(m, j):
                        comp = cat.compose(outer, inner)
                        if comp == ident and not (outer == ident and inner == ident):
                            return False
                        if comp == inner and outer != cat.identity(j):
                            return False
    return True
