"""Command-line surface: enumeration, counting, order queries, Hasse
diagrams as DOT or JSON, moebius tables, and the verification suites.

Exit codes: 0 success, 1 check failure, 2 usage or IO error.  Output is
deterministic: identical invocations produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import groupby
from math import comb

from . import bigraph, category, checks, incidence, order


def _compact_json(data) -> str:
    return json.dumps(data, separators=(",", ":"))


def format_edges(edges) -> str:
    """Render an edge tuple as [(i,j),...] with no whitespace."""
    return "[" + ",".join(f"({i},{j})" for i, j in edges) + "]"


def _load_graph(path: str) -> bigraph.BipartiteGraph:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return bigraph.graph_from_json_dict(data)


def _pick_category(label: str) -> category.TriangularCategory:
    return category.BIPARTITE if label == "b" else category.DELTA


def cmd_enumerate(args) -> int:
    if args.k is not None:
        total = bigraph.count_with_basis(args.k, args.n)
    else:
        total = bigraph.count_all(args.n)
    if total > args.guard:
        print(f"error: refusing to enumerate {total} graphs (guard {args.guard}); "
              f"raise --guard to override", file=sys.stderr)
        return 2
    if args.k is not None:
        graphs = bigraph.graphs_with_basis(args.k, args.n)
    else:
        graphs = bigraph.all_graphs(args.n)
    for g in graphs:
        if args.format == "json":
            print(_compact_json(bigraph.graph_to_json_dict(g)))
        else:
            print(f"n={g.n} k={g.k} E={format_edges(g.edges)}")
    return 0


def cmd_count(args) -> int:
    cat = _pick_category(args.category)
    if args.hom is not None:
        k, n = args.hom
        if k < 0 or n < 0:
            raise ValueError("object counts must be nonnegative")
        if args.category == "b":
            value = bigraph.count_with_basis(k, n)
        else:
            value = comb(n, k) if 0 <= k <= n else 0
        recount = (lambda: len(cat.hom(k, n)))
    else:
        n = args.n
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if args.category == "b":
            value = bigraph.count_all(n)
        else:
            value = 2 ** n
        recount = (lambda: len(cat.morphisms_into(n)))
    print(value)
    if value <= args.guard:
        if recount() != value:
            print("error: enumeration disagrees with the closed formula", file=sys.stderr)
            return 1
        print("enumeration-verified")
    return 0


def _render_dot(poset: order.Poset, diagram: order.HasseDiagram) -> str:
    lines = ["digraph hasse {", "  rankdir=BT;"]
    indices = range(len(poset.elements))
    for _, members in groupby(indices, key=lambda i: poset.elements[i].k):
        lines.append("  { rank=same;")
        for i in members:
            g = poset.elements[i]
            lines.append(f'    g{i} [label="k={g.k} E={format_edges(g.edges)}"];')
        lines.append("  }")
    for a, b in diagram.covers:
        lines.append(f"  g{a} -> g{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _render_hasse_json(n: int, poset: order.Poset, diagram: order.HasseDiagram) -> str:
    payload = {
        "n": n,
        "nodes": [{"id": f"g{i}", "k": g.k, "edges": [[a, b] for a, b in g.edges]}
                  for i, g in enumerate(poset.elements)],
        "covers": [[a, b] for a, b in diagram.covers],
    }
    return _compact_json(payload) + "\n"


def cmd_hasse(args) -> int:
    poset = order.build_poset(args.n, guard=args.guard)
    diagram = poset.hasse()
    if args.format == "dot":
        text = _render_dot(poset, diagram)
    else:
        text = _render_hasse_json(args.n, poset, diagram)
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def cmd_compare(args) -> int:
    u = _load_graph(args.left)
    v = _load_graph(args.right)
    forward = order.leq(u, v)
    backward = order.leq(v, u)
    if forward and backward:
        print("U=V")
    elif forward:
        print("U<V")
    elif backward:
        print("U>V")
    else:
        print("incomparable")
    return 0


def cmd_compose(args) -> int:
    outer = _load_graph(args.outer)
    inner = _load_graph(args.inner)
    composite = category.compose_graphs(outer, inner)
    print(_compact_json(bigraph.graph_to_json_dict(composite)))
    return 0


def cmd_witness(args) -> int:
    u = _load_graph(args.left)
    v = _load_graph(args.right)
    try:
        w = category.leq_factor(u, v)
    except category.NotComparable:
        print("incomparable")
        return 0
    print(_compact_json(bigraph.graph_to_json_dict(w)))
    return 0


def cmd_check(args) -> int:
    results = checks.run_suite(args.suite, args.max_n, max_cod=args.max_cod,
                               seed=args.seed)
    failed = 0
    for result in results:
        if result.passed:
            print(f"{result.name}: PASS")
        else:
            failed += 1
            print(f"{result.name}: FAIL")
            print(f"  {result.detail}", file=sys.stderr)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def _render_morphism(m) -> str:
    if isinstance(m, bigraph.BipartiteGraph):
        return format_edges(m.edges)
    return "[" + ",".join(str(i) for i in m.image) + "]"


def cmd_moebius(args) -> int:
    cat = _pick_category(args.category)
    if args.n < 0:
        raise ValueError("fragment bound must be nonnegative")
    if args.category == "b":
        size = sum(bigraph.count_all(n) for n in range(args.n + 1))
    else:
        size = sum(2 ** n for n in range(args.n + 1))
    if size > args.guard:
        print(f"error: fragment holds {size} morphisms (guard {args.guard}); "
              f"raise --guard to override", file=sys.stderr)
        return 2
    label = "bipartite-graph" if args.category == "b" else "increasing-map"
    mu = incidence.moebius_function(cat, args.n)
    print(f"# moebius function of the {label} category fragment, objects <= {args.n}")
    print("dom\tcod\tmorphism\tvalue")
    for m, value in mu.items():
        print(f"{m.dom}\t{m.cod}\t{_render_morphism(m)}\t"
              f"{value.numerator}/{value.denominator}")
    poset = category.subobject_poset(cat, args.n)
    poset_mu = incidence.poset_moebius(poset)
    print(f"# classical moebius function of the subobject poset at n={args.n} "
          f"(indices into enumeration order)")
    print("a\tb\tvalue")
    for (a, b), value in sorted(poset_mu.items()):
        print(f"{a}\t{b}\t{value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricat",
        description="Exact combinatorics of basis-indexed bipartite graphs: "
                    "enumeration, partial order, triangular categories and "
                    "moebius inversion.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list graphs as JSON lines or text")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--k", type=int, default=None, help="restrict to one basis size")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--guard", type=int, default=order.DEFAULT_GUARD)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="exact counts, with enumeration cross-check")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="count everything on n vertices")
    group.add_argument("--hom", type=int, nargs=2, metavar=("K", "N"),
                       help="count morphisms K -> N")
    p.add_argument("--category", choices=("b", "delta"), default="b")
    p.add_argument("--guard", type=int, default=order.DEFAULT_GUARD)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("hasse", help="emit the cover diagram of the graph order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out", default=None, help="write to a file instead of stdout")
    p.add_argument("--guard", type=int, default=order.DEFAULT_GUARD)
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("compare", help="order two graph JSON files")
    p.add_argument("left", help="graph JSON file (U)")
    p.add_argument("right", help="graph JSON file (V)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("compose", help="compose two graph JSON files (outer inner)")
    p.add_argument("outer", help="graph JSON file applied second")
    p.add_argument("inner", help="graph JSON file applied first")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("witness", help="factor U through V when U <= V")
    p.add_argument("left", help="graph JSON file (U)")
    p.add_argument("right", help="graph JSON file (V)")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("check", help="run the verification suites")
    p.add_argument("--suite", choices=("all",) + checks.SUITES, default="all")
    p.add_argument("--max-n", type=int, default=4, dest="max_n")
    p.add_argument("--max-cod", type=int, default=None, dest="max_cod")
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("moebius", help="print category and poset moebius tables")
    p.add_argument("--n", type=int, required=True, help="fragment bound")
    p.add_argument("--category", choices=("b", "delta"), default="b")
    p.add_argument("--guard", type=int, default=order.DEFAULT_GUARD)
    p.set_defaults(func=cmd_moebius)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (bigraph.GraphError, order.MismatchedVertexCount, order.TooLarge,
            category.CompositionMismatch, json.JSONDecodeError, OSError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
