"""Named verification suites behind the command-line ``check`` command.

Each check re-proves one structural claim by exhaustive computation at
small sizes.  A check fails by raising; the runner converts that into a
FAIL result and a nonzero exit for the caller.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import bigraph, category, incidence, order

DEFAULT_SEED = 1729
SUITES = ("order", "category", "lattice", "moebius")


class CheckFailure(AssertionError):
    pass


def _fail(message: str):
    raise CheckFailure(message)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


# ---------------------------------------------------------------- order

def _relation_matrix(n):
    els = bigraph.all_graphs(n)
    return els, [[order.leq(a, b) for b in els] for a in els]


def check_order_axioms(max_n):
    for n in range(max_n + 1):
        els, rel = _relation_matrix(n)
        m = len(els)
        for a in range(m):
            if not rel[a][a]:
                _fail(f"not reflexive at {els[a]}")
        for a in range(m):
            for b in range(a + 1, m):
                if rel[a][b] and rel[b][a]:
                    _fail(f"antisymmetry fails on {els[a]}, {els[b]}")
        ups = [frozenset(b for b in range(m) if rel[a][b]) for a in range(m)]
        for a in range(m):
            for b in ups[a]:
                if not ups[b] <= ups[a]:
                    _fail(f"transitivity fails through {els[a]} <= {els[b]}")


def check_equal_basis_incomparable(max_n):
    for n in range(max_n + 1):
        for k in range(n + 1):
            level = bigraph.graphs_with_basis(k, n)
            for x, u in enumerate(level):
                for v in level[x + 1:]:
                    if order.leq(u, v) or order.leq(v, u):
                        _fail(f"equal-basis pair compares: {u}, {v}")


def check_strict_growth(max_n):
    for n in range(max_n + 1):
        els = bigraph.all_graphs(n)
        for u in els:
            for v in els:
                if u != v and order.leq(u, v) and u.k >= v.k:
                    _fail(f"strict comparison without basis growth: {u} < {v}")


def check_cover_closure(max_n):
    for n in range(max_n + 1):
        p = order.build_poset(n)
        if p.hasse().closure() != p.relation:
            _fail(f"cover closure differs from the relation at n={n}")


def check_extremes(max_n):
    for n in range(max_n + 1):
        p = order.build_poset(n)
        if p.bottom() != bigraph.BipartiteGraph(n, 0, ()):
            _fail(f"bottom of n={n} is not the basis-free graph")
        if p.top() != bigraph.BipartiteGraph(n, n, ()):
            _fail(f"top of n={n} is not the full-basis graph")


# ------------------------------------------------------------- category

def _check_laws(cat, max_n):
    for n in range(max_n + 1):
        for m in range(n + 1):
            for f in cat.hom(m, n):
                if cat.compose(cat.identity(n), f) != f:
                    _fail(f"left identity fails on {f}")
                if cat.compose(f, cat.identity(m)) != f:
                    _fail(f"right identity fails on {f}")
    for c in range(max_n + 1):
        for b in range(c + 1):
            for mid in cat.hom(b, c):
                for a in range(b + 1):
                    for f in cat.hom(a, b):
                        mf = cat.compose(mid, f)
                        for d in range(c, max_n + 1):
                            for h in cat.hom(c, d):
                                if cat.compose(h, mf) != cat.compose(cat.compose(h, mid), f):
                                    _fail(f"associativity fails on {h}, {mid}, {f}")


def check_laws_bipartite(max_n):
    _check_laws(category.BIPARTITE, max_n)


def check_laws_delta(max_n):
    _check_laws(category.DELTA, max_n)


def check_hom_counts(max_n):
    from math import comb
    for n in range(max_n + 1):
        for k in range(n + 2):
            got = len(category.BIPARTITE.hom(k, n))
            if got != bigraph.count_with_basis(k, n):
                _fail(f"bipartite hom({k}, {n}) has {got} members")
            want = comb(n, k) if k <= n else 0
            if len(category.DELTA.hom(k, n)) != want:
                _fail(f"increasing-map hom({k}, {n}) is not C({n}, {k})")
    # Pascal recurrence as an independent route to the same counts
    row = [1]
    for n in range(1, max_n + 1):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
        for k, want in enumerate(row):
            if len(category.DELTA.hom(k, n)) != want:
                _fail(f"Pascal recurrence disagrees at C({n}, {k})")


def check_all_mono(max_n):
    for cat in (category.BIPARTITE, category.DELTA):
        for n in range(max_n + 1):
            for f in cat.morphisms_into(n):
                if not category.is_mono(cat, f):
                    _fail(f"{f} is not mono in category {cat.name}")


def check_non_epi_exists(max_cod):
    f = bigraph.BipartiteGraph(1, 0, ())
    found = category.is_epi_bounded(category.BIPARTITE, f, max_cod)
    if found.epi_up_to_bound:
        _fail("no failure of right cancellation found for the 0 -> 1 graph")
    g = category.DeltaMap(1, 2, (1,))
    if category.is_epi_bounded(category.DELTA, g, max_cod + 1).epi_up_to_bound:
        _fail("no failure of right cancellation found for the increasing map [1]")


def check_subobject_agreement(max_n):
    for n in range(max_n + 1):
        els = bigraph.all_graphs(n)
        for u in els:
            for v in els:
                witness = category.subobject_leq(category.BIPARTITE, u, v)
                if (witness is not None) != order.leq(u, v):
                    _fail(f"subobject order disagrees with leq on {u}, {v}")
                if witness is not None:
                    w = category.leq_factor(u, v)
                    if w != witness:
                        _fail(f"search witness differs from the edge-filter factor on {u}, {v}")
                    if category.compose_graphs(v, w) != u:
                        _fail(f"factor does not recompose to {u} through {v}")


def check_equal_domain_incomparable(max_n):
    for cat in (category.BIPARTITE, category.DELTA):
        for n in range(max_n + 1):
            for k in range(n + 1):
                level = cat.hom(k, n)
                for x, a in enumerate(level):
                    for b in level[x + 1:]:
                        if (category.subobject_leq(cat, a, b) is not None
                                or category.subobject_leq(cat, b, a) is not None):
                            _fail(f"equal-domain subobjects compare: {a}, {b}")


def check_moebius_category_axioms(max_n):
    for cat in (category.BIPARTITE, category.DELTA):
        if not category.check_moebius_axioms(cat, max_n):
            _fail(f"decomposition axioms fail in category {cat.name}")


# -------------------------------------------------------------- lattice

def check_graph_order_not_lattice():
    p = order.build_poset(3)
    ok, witness = p.is_lattice()
    if ok:
        _fail("the order on 3-vertex graphs is a lattice")
    u, v = witness
    if p.meet(u, v) is not None and p.join(u, v) is not None:
        _fail("lattice witness pair has both bounds")


def check_delta_subobjects_are_lattices(max_n):
    for n in range(max_n + 1):
        ok, witness = category.subobject_poset(category.DELTA, n).is_lattice()
        if not ok:
            _fail(f"increasing-map subobjects of {n} miss a bound at {witness}")


def check_boolean_algebra(max_n):
    for n in range(max_n + 1):
        if not category.check_boolean_iso(n):
            _fail(f"subobject order at {n} is not the subset algebra")


def check_delta_pullbacks(max_n):
    cat = category.DELTA
    for n in range(max_n + 1):
        monos = cat.morphisms_into(n)
        for f in monos:
            for g in monos:
                if category.pullback_search(cat, f, g) is None:
                    _fail(f"no pullback for the cospan {f}, {g}")


def check_bipartite_pullback_gap():
    cat = category.BIPARTITE
    monos = cat.morphisms_into(3)
    for f in monos:
        for g in monos:
            if category.pullback_search(cat, f, g) is None:
                return
    _fail("every cospan over 3 vertices had a pullback")


def check_no_pushout_up_to(bound):
    f = category.delta_hom(0, 1)[0]  # the unique 0 -> 1 map, used twice
    result = category.pushout_search_bounded(category.DELTA, f, f, bound)
    if result.found:
        _fail(f"unexpected pushout {result.pushout} for the doubled point span")


# -------------------------------------------------------------- moebius

def _random_function(cat, bound, rng, nonzero_identities=False):
    values = {}
    for m in cat.fragment(bound):
        value = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if nonzero_identities and m.dom == m.cod and value == 0:
            value = Fraction(1)
        values[m] = value
    return incidence.IncidenceFunction(cat, bound, values)


def check_convolution_unit(bound, seed):
    rng = random.Random(seed)
    for cat in (category.BIPARTITE, category.DELTA):
        delta = incidence.delta_function(cat, bound)
        for f in (incidence.zeta_function(cat, bound),
                  _random_function(cat, bound, rng)):
            if incidence.convolve(delta, f) != f or incidence.convolve(f, delta) != f:
                _fail(f"delta is not a unit on category {cat.name}")


def check_zeta_inverse(bound):
    for cat in (category.BIPARTITE, category.DELTA):
        zeta = incidence.zeta_function(cat, bound)
        mu = incidence.invert(zeta)
        delta = incidence.delta_function(cat, bound)
        if incidence.convolve(zeta, mu) != delta or incidence.convolve(mu, zeta) != delta:
            _fail(f"zeta inverse is one-sided on category {cat.name}")
        for m, value in mu.items():
            if value.denominator != 1:
                _fail(f"moebius value at {m} is not an integer: {value}")


def check_invertibility_boundary(seed):
    rng = random.Random(seed)
    cat = category.BIPARTITE
    f = _random_function(cat, 2, rng, nonzero_identities=True)
    delta = incidence.delta_function(cat, 2)
    g = incidence.invert(f)
    if incidence.convolve(f, g) != delta or incidence.convolve(g, f) != delta:
        _fail("inverse of a nonzero-identity function is not two-sided")
    broken = {m: v for m, v in f.items()}
    broken[cat.identity(1)] = Fraction(0)
    try:
        incidence.invert(incidence.IncidenceFunction(cat, 2, broken))
    except incidence.NotInvertible:
        return
    _fail("inversion accepted a zero identity value")


def check_poset_moebius_sums(max_n):
    for n in range(max_n + 1):
        p = order.build_poset(n)
        mu = incidence.poset_moebius(p)
        m = len(p)
        for a in range(m):
            for b in range(m):
                if not p.relation[a][b]:
                    continue
                total = sum(mu[a, c] for c in range(m)
                            if p.relation[a][c] and p.relation[c][b])
                if total != int(a == b):
                    _fail(f"interval sum from {a} to {b} is {total}")


def check_convolution_associative(bound, seed, trials=3):
    rng = random.Random(seed)
    for cat in (category.BIPARTITE, category.DELTA):
        for _ in range(trials):
            f = _random_function(cat, bound, rng)
            g = _random_function(cat, bound, rng)
            h = _random_function(cat, bound, rng)
            left = incidence.convolve(incidence.convolve(f, g), h)
            right = incidence.convolve(f, incidence.convolve(g, h))
            if left != right:
                _fail(f"associativity fails on category {cat.name}")


# --------------------------------------------------------------- runner

def _suite_checks(suite, max_n, max_cod, seed):
    epi_bound = max_cod if max_cod is not None else 2
    pushout_bound = max_cod if max_cod is not None else 4
    frag = min(max_n, 4)
    assoc = min(max_n, 3)
    out = []
    if suite in ("order", "all"):
        out += [
            (f"graph order is reflexive, antisymmetric and transitive (n <= {max_n})",
             lambda: check_order_axioms(max_n)),
            (f"distinct graphs with equal basis are incomparable (n <= {max_n})",
             lambda: check_equal_basis_incomparable(max_n)),
            (f"strict comparison grows the basis (n <= {max_n})",
             lambda: check_strict_growth(max_n)),
            (f"cover closure reproduces the order relation (n <= {max_n})",
             lambda: check_cover_closure(max_n)),
            (f"bottom and top are the edge-free extremes (n <= {max_n})",
             lambda: check_extremes(max_n)),
        ]
    if suite in ("category", "all"):
        out += [
            (f"bipartite composition satisfies the category laws (objects <= {max_n})",
             lambda: check_laws_bipartite(max_n)),
            (f"increasing-map composition satisfies the category laws (objects <= {max_n})",
             lambda: check_laws_delta(max_n)),
            (f"hom counts match enumeration and recurrences (n <= {max_n})",
             lambda: check_hom_counts(max_n)),
            (f"every morphism is a monomorphism (objects <= {max_n})",
             lambda: check_all_mono(max_n)),
            (f"a non-epimorphic morphism exists (codomains <= {epi_bound})",
             lambda: check_non_epi_exists(epi_bound)),
            (f"subobject order and factor agree with the graph order (n <= {max_n})",
             lambda: check_subobject_agreement(max_n)),
            (f"distinct equal-domain subobjects are incomparable (n <= {max_n})",
             lambda: check_equal_domain_incomparable(max_n)),
            (f"identities are indecomposable and absorption forces identities (objects <= {max_n})",
             lambda: check_moebius_category_axioms(max_n)),
        ]
    if suite in ("lattice", "all"):
        out += [
            ("the graph order on 3 vertices is NOT a lattice",
             check_graph_order_not_lattice),
            (f"increasing-map subobject orders are lattices (n <= {max_n})",
             lambda: check_delta_subobjects_are_lattices(max_n)),
            (f"increasing-map subobjects form the subset Boolean algebra (n <= {max_n})",
             lambda: check_boolean_algebra(max_n)),
            (f"every increasing-map cospan has a pullback (n <= {max_n})",
             lambda: check_delta_pullbacks(max_n)),
            ("some graph cospan over 3 vertices has no pullback",
             check_bipartite_pullback_gap),
            (f"the doubled-point span has no pushout (codomains <= {pushout_bound})",
             lambda: check_no_pushout_up_to(pushout_bound)),
        ]
    if suite in ("moebius", "all"):
        out += [
            (f"delta is a two-sided convolution unit (objects <= {frag})",
             lambda: check_convolution_unit(frag, seed)),
            (f"zeta has a two-sided integer-valued inverse (objects <= {frag})",
             lambda: check_zeta_inverse(frag)),
            ("inversion succeeds exactly when identity values are nonzero",
             lambda: check_invertibility_boundary(seed)),
            (f"poset moebius interval sums vanish off the diagonal (n <= {frag})",
             lambda: check_poset_moebius_sums(frag)),
            (f"convolution is associative on seeded random functions (objects <= {assoc})",
             lambda: check_convolution_associative(assoc, seed)),
        ]
    return out


def run_suite(suite: str, max_n: int, max_cod=None, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Run one named suite (or ``all``) and collect per-check results."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {('all',) + SUITES}")
    results = []
    for name, fn in _suite_checks(suite, max_n, max_cod, seed):
        try:
            fn()
        except Exception as exc:
            results.append(CheckResult(name, False, str(exc)))
        else:
            results.append(CheckResult(name, True))
    return results
