"""Indexed bipartite graphs with a contiguous basis.

Vertices are the indices 1..n.  The basis is the initial segment {1..k};
every edge (i, j) must cross the boundary, so 1 <= i <= k < j <= n.
Graphs are labeled: no isomorphism quotient is taken anywhere, and two
graphs are equal exactly when (n, k, edges) coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

Edge = tuple[int, int]


class GraphError(ValueError):
    """A graph description violates the basis/edge invariants."""


class BasisOutOfRange(GraphError):
    """Basis size k is not within 0..n."""


class EdgeViolatesBipartition(GraphError):
    """An edge does not run from the basis into the co-basis."""


class DuplicateEdge(GraphError):
    """The same edge was given more than once."""


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph on vertices 1..n with basis {1..k}.

    ``edges`` is kept sorted lexicographically; equality and hashing are
    structural.  Instances double as morphisms k -> n of the bipartite
    triangular category, hence the ``dom``/``cod`` aliases.

    Construct through :func:`make_graph` to get validation; the raw
    constructor trusts its input.
    """

    n: int
    k: int
    edges: tuple[Edge, ...] = ()

    @property
    def dom(self) -> int:
        return self.k

    @property
    def cod(self) -> int:
        return self.n


def make_graph(n: int, k: int, edges: Iterable[Edge]) -> BipartiteGraph:
    """Validate and canonicalize a graph description.

    Raises BasisOutOfRange, EdgeViolatesBipartition or DuplicateEdge;
    on success the edge set is stored in sorted canonical order.
    """
    if not isinstance(n, int) or not isinstance(k, int):
        raise BasisOutOfRange(f"n and k must be integers, got n={n!r}, k={k!r}")
    if not 0 <= k <= n:
        raise BasisOutOfRange(f"basis size must satisfy 0 <= k <= n, got k={k}, n={n}")
    seen: set[Edge] = set()
    for pair in edges:
        try:
            i, j = pair
        except (TypeError, ValueError):
            raise EdgeViolatesBipartition(f"edges must be pairs, got {pair!r}") from None
        if not (isinstance(i, int) and isinstance(j, int)):
            raise EdgeViolatesBipartition(f"edge endpoints must be integers, got {pair!r}")
        if not 1 <= i <= k < j <= n:
            raise EdgeViolatesBipartition(
                f"edge ({i}, {j}) must satisfy 1 <= i <= {k} < j <= {n}")
        if (i, j) in seen:
            raise DuplicateEdge(f"edge ({i}, {j}) given twice")
        seen.add((i, j))
    return BipartiteGraph(n, k, tuple(sorted(seen)))


def admissible_edges(k: int, n: int) -> list[Edge]:
    """The k*(n-k) boundary-crossing edges, in lexicographic order."""
    return [(i, j) for i in range(1, k + 1) for j in range(k + 1, n + 1)]


def graphs_with_basis(k: int, n: int) -> list[BipartiteGraph]:
    """All graphs on n vertices with basis {1..k}; empty when k > n.

    Order contract: edge subsets are listed in binary-counter order over
    the lexicographic edge grid, low bit = first grid edge, so the graph
    at position p contains exactly the grid edges whose bit is set in p.
    """
    if n < 0 or k < 0:
        raise ValueError("vertex and basis counts must be nonnegative")
    if k > n:
        return []
    grid = admissible_edges(k, n)
    m = len(grid)
    out = []
    for mask in range(1 << m):
        edges = tuple(grid[t] for t in range(m) if mask >> t & 1)
        out.append(BipartiteGraph(n, k, edges))
    return out


def all_graphs(n: int) -> list[BipartiteGraph]:
    """Every graph on n vertices, grouped by basis size k = 0..n."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return [g for k in range(n + 1) for g in graphs_with_basis(k, n)]


def count_with_basis(k: int, n: int) -> int:
    """Exact count 2^(k(n-k)) of graphs with basis k, or 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("vertex and basis counts must be nonnegative")
    if k > n:
        return 0
    return 1 << (k * (n - k))


def count_all(n: int) -> int:
    """Exact count of all graphs on n vertices: sum over k of 2^(k(n-k))."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return sum(count_with_basis(k, n) for k in range(n + 1))


def graph_to_json_dict(g: BipartiteGraph) -> dict:
    """Wire form {"n": ..., "k": ..., "edges": [[i, j], ...]}, edges sorted."""
    return {"n": g.n, "k": g.k, "edges": [[i, j] for i, j in g.edges]}


def graph_from_json_dict(data: object) -> BipartiteGraph:
    """Parse and validate the wire form produced by graph_to_json_dict."""
    if not isinstance(data, dict):
        raise GraphError(f"graph JSON must be an object, got {type(data).__name__}")
    try:
        n, k, edges = data["n"], data["k"], data["edges"]
    except KeyError as exc:
        raise GraphError(f"graph JSON missing field {exc.args[0]!r}") from None
    if not isinstance(edges, list):
        raise GraphError("graph JSON field 'edges' must be an array")
    pairs = []
    for item in edges:
        if not (isinstance(item, list) and len(item) == 2):
            raise GraphError(f"each edge must be a 2-element array, got {item!r}")
        pairs.append((item[0], item[1]))
    return make_graph(n, k, pairs)
