"""The basis-respecting partial order on bipartite graphs, plus finite posets.

``leq`` compares two graphs on the same vertex set; ``build_poset``
materializes the whole order for one n.  ``Poset`` itself is generic over
any hashable ground set so that subobject orders built elsewhere can
reuse the same lattice diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Optional, Sequence

from .bigraph import BipartiteGraph, all_graphs, count_all

DEFAULT_GUARD = 100_000


class MismatchedVertexCount(ValueError):
    """Graphs on different vertex sets are never comparable; refuse early."""


class TooLarge(ValueError):
    """An enumeration guard tripped."""


def leq(u: BipartiteGraph, v: BipartiteGraph) -> bool:
    """Order test u <= v for graphs on the same vertex set.

    Holds iff u.k <= v.k and u's edges reaching past v's basis coincide
    with v's edges rooted inside u's basis:

        {(i, j) in E(u) : j > v.k}  ==  {(i, j) in E(v) : i <= u.k}
    """
    if u.n != v.n:
        raise MismatchedVertexCount(
            f"cannot compare graphs on {u.n} and {v.n} vertices")
    if u.k > v.k:
        return False
    left = {e for e in u.edges if e[1] > v.k}
    right = {e for e in v.edges if e[0] <= u.k}
    return left == right


class Poset:
    """Immutable finite poset: ordered ground set plus a relation matrix.

    ``relation[a][b]`` is True iff ``elements[a] <= elements[b]``.  The
    constructor verifies reflexivity, antisymmetry and transitivity
    unless ``check=False``.
    """

    def __init__(self, elements: Sequence[Hashable], relation, *, check: bool = True):
        self.elements = tuple(elements)
        self.relation = tuple(tuple(bool(x) for x in row) for row in relation)
        m = len(self.elements)
        if len(self.relation) != m or any(len(row) != m for row in self.relation):
            raise ValueError("relation must be a square matrix over the elements")
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != m:
            raise ValueError("poset elements must be pairwise distinct")
        self._up = [frozenset(b for b in range(m) if self.relation[a][b])
                    for a in range(m)]
        self._down = [frozenset(a for a in range(m) if self.relation[a][b])
                      for b in range(m)]
        if check:
            self.check_axioms()

    @classmethod
    def from_leq(cls, elements: Sequence[Hashable], leq_fn: Callable,
                 *, check: bool = True) -> "Poset":
        """Materialize the relation matrix of ``leq_fn`` over ``elements``."""
        els = tuple(elements)
        rel = [[leq_fn(a, b) for b in els] for a in els]
        return cls(els, rel, check=check)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, element) -> int:
        return self._index[element]

    def le(self, a, b) -> bool:
        """Order test by element."""
        return self.relation[self._index[a]][self._index[b]]

    def check_axioms(self) -> None:
        """Raise ValueError naming the first violated partial-order axiom."""
        m = len(self.elements)
        for a in range(m):
            if a not in self._up[a]:
                raise ValueError(f"relation is not reflexive at index {a}")
        for a in range(m):
            for b in self._up[a]:
                if b != a and a in self._up[b]:
                    raise ValueError(f"relation is not antisymmetric on ({a}, {b})")
        for a in range(m):
            up_a = self._up[a]
            for b in up_a:
                if not self._up[b] <= up_a:
                    c = min(self._up[b] - up_a)
                    raise ValueError(
                        f"relation is not transitive: {a} <= {b} <= {c} but not {a} <= {c}")

    def bottom(self):
        """The unique global minimum, or None when absent."""
        m = len(self.elements)
        for a in range(m):
            if len(self._up[a]) == m:
                return self.elements[a]
        return None

    def top(self):
        """The unique global maximum, or None when absent."""
        m = len(self.elements)
        for b in range(m):
            if len(self._down[b]) == m:
                return self.elements[b]
        return None

    def _meet_index(self, a: int, b: int) -> Optional[int]:
        lower = self._down[a] & self._down[b]
        # at most one c dominates all lower bounds, by antisymmetry
        best = [c for c in lower if lower <= self._down[c]]
        return best[0] if best else None

    def _join_index(self, a: int, b: int) -> Optional[int]:
        upper = self._up[a] & self._up[b]
        best = [c for c in upper if upper <= self._up[c]]
        return best[0] if best else None

    def meet(self, a, b):
        """Greatest lower bound of two elements, or None when absent."""
        c = self._meet_index(self._index[a], self._index[b])
        return None if c is None else self.elements[c]

    def join(self, a, b):
        """Least upper bound of two elements, or None when absent."""
        c = self._join_index(self._index[a], self._index[b])
        return None if c is None else self.elements[c]

    def is_lattice(self):
        """(True, None) if every pair has a meet and a join, else (False, pair).

        The witness is the first offending pair in ground-set order.
        """
        m = len(self.elements)
        for a in range(m):
            for b in range(a + 1, m):
                if self._meet_index(a, b) is None or self._join_index(a, b) is None:
                    return False, (self.elements[a], self.elements[b])
        return True, None

    def hasse(self) -> "HasseDiagram":
        """Transitive reduction: the cover pairs of the strict order."""
        m = len(self.elements)
        strict_up = [self._up[a] - {a} for a in range(m)]
        covers = []
        for a in range(m):
            for b in sorted(strict_up[a]):
                if not any(b in strict_up[c] for c in strict_up[a] if c != b):
                    covers.append((a, b))
        covers.sort()
        return HasseDiagram(self.elements, tuple(covers))


@dataclass(frozen=True)
class HasseDiagram:
    """Cover pairs (a, b) by ground-set index: b covers a."""

    elements: tuple
    covers: tuple[tuple[int, int], ...]

    def closure(self) -> tuple[tuple[bool, ...], ...]:
        """Reflexive-transitive closure of the covers, as a relation matrix."""
        m = len(self.elements)
        succ: list[list[int]] = [[] for _ in range(m)]
        for a, b in self.covers:
            succ[a].append(b)
        rows = []
        for s in range(m):
            seen = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in succ[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            rows.append(tuple(t in seen for t in range(m)))
        return tuple(rows)


def build_poset(n: int, *, guard: int = DEFAULT_GUARD) -> Poset:
    """Materialize the order on all graphs with n vertices.

    Refuses with TooLarge when the ground set would exceed ``guard``
    elements; the relation matrix is quadratic in that count.
    """
    size = count_all(n)
    if size > guard:
        raise TooLarge(f"{size} graphs on {n} vertices exceed the guard of {guard}")
    return Poset.from_leq(all_graphs(n), leq)
