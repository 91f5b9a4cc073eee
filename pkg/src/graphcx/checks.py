"""Verification suites shared by the command line and the test suite.

Every check returns a plain dict record with a count of tested items and a
count of failures, so results can be tabulated and compared across runs.
"""

import random
from itertools import combinations_with_replacement

from . import graphs as gr
from .complexes import (
    COM, DGC, DGC_TRUNC, LIE, UGC, GraphComplex, bigrade_check, cube_homology, degree_window,
    homology, lie_sizes, sample_choices,
)

DEFAULT_SAMPLE = 4


def _add(x, y, s=1):
    out = dict(x)
    for k, c in y.items():
        v = out.get(k, 0) + s * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def graphs_by_genus(cx, max_edges):
    """Connected graphs of the complex with at most max_edges edges, by genus."""
    lo = 2 if cx.kind in (UGC, DGC_TRUNC) else 1
    out = {}
    for genus in range(lo, max_edges + 1):
        gs = cx.graphs(genus, max_edges=max_edges)
        if gs:
            out[genus] = gs
    return out


def sampled_vectors(cx, G, limit=DEFAULT_SAMPLE):
    """Chain vectors of a seeded sample of basis decorations of G."""
    choices = sample_choices(lie_sizes(G, cx.operad), limit, seed=G.num_flags)
    return [v for v in cx.decoration_vectors(G, choices) if v]


def d_squared(kind, operad, m, max_edges=6, limit=DEFAULT_SAMPLE, factory=GraphComplex):
    cx = factory(kind, operad, m)
    checked = failures = 0
    for gs in graphs_by_genus(cx, max_edges).values():
        for G in gs:
            if kind == DGC and all(G.is_loop(f) for f in range(G.num_flags)):
                # a one-vertex graph of loops has no contractible edge
                checked += 1
                continue
            for v in sampled_vectors(cx, G, limit):
                checked += 1
                if cx.d(cx.d(v)):
                    failures += 1
    return {"suite": "d-squared", "kind": kind, "operad": operad, "m": m,
            "max_edges": max_edges, "checked": checked, "failures": failures}


def _tensor_d(cx, x2, side):
    """(d x 1) or (1 x d) on a tensor, with the Koszul sign on the right."""
    out = {}
    for (a, b), c in x2.items():
        if side == 0:
            for k, c2 in cx.d({a: 1}).items():
                out = _add(out, {(k, b): c * c2})
        else:
            s = -1 if cx.degree_of(a) % 2 else 1
            for k, c2 in cx.d({b: 1}).items():
                out = _add(out, {(a, k): s * c * c2})
    return out


def coalgebra_vectors(cx, max_edges=5, per_graph=2, pairs=12, seed=0):
    """Test chains: basis classes and word monomials, and their disjoint unions."""
    rng = random.Random(seed)
    conn = []
    for gs in graphs_by_genus(cx, max_edges).values():
        for G in gs:
            conn.extend(sampled_vectors(cx, G, per_graph))
            if cx.operad == LIE:
                # bare cyclic words: the identities hold on the whole ribbon complex
                for _ in range(per_graph):
                    words = []
                    for flags in G.flags_by_vertex():
                        fl = list(flags)
                        rng.shuffle(fl)
                        words.append(tuple(fl))
                    v = cx.monomial_vector(G, tuple(words))
                    if v:
                        conn.append(v)
    tests = list(conn)
    for v, w in combinations_with_replacement(conn[:pairs], 2):
        u = {}
        for k1, c1 in v.items():
            for k2, c2 in w.items():
                G, ws = cx.disjoint_union([cx.representative(k1), cx.representative(k2)])
                if G.num_edges > max_edges:
                    continue
                r = cx.canonicalize(G, ws)
                if r:
                    u = _add(u, {r[0]: c1 * c2 * r[1]})
        if u:
            tests.append(u)
    return tests


def coalgebra(kind, operad, m, max_edges=5, factory=GraphComplex):
    """Coassociativity, cocommutativity, counit and co-Leibniz on test chains."""
    cx = factory(kind, operad, m)
    fails = {"coassociative": 0, "cocommutative": 0, "counit": 0, "co_leibniz": 0}
    tests = coalgebra_vectors(cx, max_edges)
    e = cx.empty_key()
    for x in tests:
        D = cx.coproduct(x)
        left, right = {}, {}
        for (a, b), c in D.items():
            for (a1, a2), c2 in cx.coproduct({a: 1}).items():
                left = _add(left, {(a1, a2, b): c * c2})
            for (b1, b2), c2 in cx.coproduct({b: 1}).items():
                right = _add(right, {(a, b1, b2): c * c2})
        if left != right:
            fails["coassociative"] += 1
        swapped = {}
        for (a, b), c in D.items():
            s = -1 if (cx.degree_of(a) * cx.degree_of(b)) % 2 else 1
            swapped = _add(swapped, {(b, a): s * c})
        if swapped != D:
            fails["cocommutative"] += 1
        if {b: c for (a, b), c in D.items() if a == e} != x:
            fails["counit"] += 1
        lhs = cx.coproduct(cx.d(x))
        rhs = _add(_tensor_d(cx, D, 0), _tensor_d(cx, D, 1))
        if lhs != rhs:
            fails["co_leibniz"] += 1
    rec = {"suite": "coalgebra", "kind": kind, "operad": operad, "m": m,
           "max_edges": max_edges, "checked": len(tests)}
    rec.update(fails)
    rec["failures"] = sum(fails.values())
    return rec


def directed_vs_undirected(operad, m, genus, lo=None, hi=None, factory=GraphComplex):
    """Degreewise homology of the truncated directed and the undirected complex."""
    wlo, whi = degree_window(genus, m)
    lo = wlo if lo is None else lo
    hi = whi if hi is None else hi
    a = homology(DGC_TRUNC, operad, m, genus, lo, hi, complex_=factory(DGC_TRUNC, operad, m))
    b = homology(UGC, operad, m, genus, lo, hi, complex_=factory(UGC, operad, m))
    table = [{"degree": x["degree"], "dgc_trunc": x["dim_H"], "ugc": y["dim_H"]}
             for x, y in zip(a, b)]
    return {"suite": "directed-vs-undirected", "operad": operad, "m": m, "genus": genus,
            "degrees": [lo, hi], "checked": len(table),
            "failures": sum(1 for t in table if t["dgc_trunc"] != t["ugc"]), "table": table}


def cube(operad, m, max_genus=3):
    checked = failures = 0
    for genus in range(2, max_genus + 1):
        for G in gr.enumerate_undirected(genus):
            h = cube_homology(G, m, operad)
            checked += 1
            if any(h[l] for l in h if l > 0):
                failures += 1
    return {"suite": "cube", "operad": operad, "m": m, "max_genus": max_genus,
            "checked": checked, "failures": failures}


def bigrade(operad, m, max_edges=5, factory=GraphComplex):
    cx = factory(DGC_TRUNC, operad, m)
    checked = failures = 0
    for gs in graphs_by_genus(cx, max_edges).values():
        for G in gs:
            vs = sampled_vectors(cx, G)
            checked += len(vs)
            if not bigrade_check(cx, vs):
                failures += 1
    return {"suite": "bigrade", "operad": operad, "m": m, "max_edges": max_edges,
            "checked": checked, "failures": failures}


__all__ = ["d_squared", "coalgebra", "directed_vs_undirected", "cube", "bigrade",
           "graphs_by_genus", "sampled_vectors", "coalgebra_vectors", "COM", "LIE"]
