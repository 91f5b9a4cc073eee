import random

import pytest

from graphcx import complexes as cx
from graphcx import graphs as gr
from graphcx.linalg import rank

OPERADS = ("lie", "com")


def first_monomial(G, operad):
    if operad == "com":
        return None
    exps = cx.vertex_expansions(G, operad)
    c, ws = cx.expand_tuple(exps, [0] * G.nv)[0]
    return ws


def random_iso(G, rng):
    fm = list(range(G.num_flags))
    vm = list(range(G.nv))
    rng.shuffle(fm)
    rng.shuffle(vm)
    return fm, vm


def scaled(vec, s):
    return {k: s * c for k, c in vec.items()}


def sample_graphs(kind, m, genus):
    C = cx.GraphComplex(kind, "lie", m)
    if kind == cx.UGC:
        return C.graphs(genus)
    return C.graphs(genus, max_degree=(m + 2) * (genus - 1) + 2)


def test_koszul_sign():
    assert cx.koszul_sign([1, 1], [1, 0]) == -1
    assert cx.koszul_sign([1, 2], [1, 0]) == 1
    assert cx.koszul_sign([1, 1, 1], [2, 0, 1]) == 1


def test_relabel_sign_of_edge_flip():
    theta = gr.UndirectedGraph([0, 0, 0, 1, 1, 1], [3, 4, 5, 0, 1, 2])
    flip = [3, 1, 2, 0, 4, 5]
    swap = [0, 1, 2, 3, 4, 5]
    # m even: an edge flip is odd; m odd: it is even
    assert cx.relabel_sign(theta, flip, [0, 1], 0) == -1
    assert cx.relabel_sign(theta, flip, [0, 1], 1) == 1
    # swapping the two vertices alone is odd exactly when m is even
    assert cx.relabel_sign(theta, swap, [1, 0], 0) == -1
    assert cx.relabel_sign(theta, swap, [1, 0], 1) == 1


def test_theta_class_sign_pattern():
    # the theta graph with Lie decorations survives only for m even
    theta = gr.UndirectedGraph([0, 0, 0, 1, 1, 1], [3, 4, 5, 0, 1, 2])
    for m, expected in [(0, 1), (1, 0), (2, 1), (3, 0)]:
        C = cx.GraphComplex(cx.UGC, "lie", m)
        assert len(C.graph_basis(theta)) == expected


@pytest.mark.parametrize("kind", [cx.UGC, cx.DGC_TRUNC])
@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_class_sign_is_relabeling_sign(kind, m):
    rng = random.Random(100 + m)
    for op in OPERADS:
        C = cx.GraphComplex(kind, op, m)
        for G in sample_graphs(kind, m, 2):
            ws = first_monomial(G, op)
            r = C.canonicalize(G, ws)
            for _ in range(4):
                fm, vm = random_iso(G, rng)
                H = G.relabel(fm, vm)
                r2 = C.canonicalize(H, cx.relabel_words(ws, fm, vm))
                if r is None:
                    assert r2 is None
                    continue
                assert r2[0] == r[0]
                assert r2[1] == cx.relabel_sign(G, fm, vm, m) * r[1]


@pytest.mark.parametrize("kind", [cx.UGC, cx.DGC_TRUNC])
@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_differential_is_isomorphism_invariant(kind, m):
    rng = random.Random(200 + m)
    for op in OPERADS:
        C = cx.GraphComplex(kind, op, m)
        for G in sample_graphs(kind, m, 3)[:12]:
            ws = first_monomial(G, op)
            d0 = C.d_monomial(G, ws)
            for _ in range(2):
                fm, vm = random_iso(G, rng)
                s = cx.relabel_sign(G, fm, vm, m)
                d1 = C.d_monomial(G.relabel(fm, vm), cx.relabel_words(ws, fm, vm))
                assert d1 == scaled(d0, s)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_coproduct_is_isomorphism_invariant(m):
    rng = random.Random(300 + m)
    C = cx.GraphComplex(cx.UGC, "lie", m)
    theta = gr.UndirectedGraph([0, 0, 0, 1, 1, 1], [3, 4, 5, 0, 1, 2])
    rose = gr.UndirectedGraph([0, 0, 0, 0], [1, 0, 3, 2])
    U, ws = C.disjoint_union([(theta, first_monomial(theta, "lie")),
                              (rose, first_monomial(rose, "lie"))])
    base = C.coproduct_monomial(U, ws)
    for _ in range(5):
        fm, vm = random_iso(U, rng)
        s = cx.relabel_sign(U, fm, vm, m)
        assert C.coproduct_monomial(U.relabel(fm, vm), cx.relabel_words(ws, fm, vm)) == scaled(base, s)


@pytest.mark.parametrize("op", OPERADS)
@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_d_squared_undirected(op, m):
    C = cx.GraphComplex(cx.UGC, op, m)
    for g in (2, 3):
        for G in C.graphs(g):
            for v in C.graph_basis(G):
                assert not C.d(C.d(v))


@pytest.mark.parametrize("op", OPERADS)
@pytest.mark.parametrize("m", [0, 1])
def test_d_squared_truncated(op, m):
    C = cx.GraphComplex(cx.DGC_TRUNC, op, m)
    for G in C.graphs(2, max_degree=(m + 2) + 4):
        for v in C.graph_basis(G):
            assert not C.d(C.d(v))


@pytest.mark.parametrize("op", OPERADS)
def test_d_squared_directed_small(op):
    C = cx.GraphComplex(cx.DGC, op, 1)
    for g in (1, 2):
        for G in C.graphs(g, max_edges=4):
            if all(G.is_loop(f) for f in range(G.num_flags)):
                continue
            for v in C.decoration_vectors(G):
                assert not C.d(C.d(v))


def test_d1_d2_bigrading():
    for m in (0, 1):
        C = cx.GraphComplex(cx.DGC_TRUNC, "lie", m)
        vecs = [v for G in C.graphs(2, max_degree=m + 6) for v in C.graph_basis(G)]
        assert cx.bigrade_check(C, vecs)
    with pytest.raises(ValueError):
        cx.bigrade_check(cx.GraphComplex(cx.UGC, "lie", 0), [])


@pytest.mark.parametrize("op", OPERADS)
@pytest.mark.parametrize("m", [0, 1, 2])
def test_degree_window(op, m):
    C = cx.GraphComplex(cx.UGC, op, m)
    for g in (2, 3):
        lo, hi = cx.degree_window(g, m)
        for G in C.graphs(g):
            if C.graph_basis(G):
                assert lo <= G.degree(m) <= hi


def test_projector_matches_associative_embedding():
    for kind in (cx.UGC, cx.DGC_TRUNC):
        for op in OPERADS:
            for m in (0, 1):
                C = cx.GraphComplex(kind, op, m)
                for G in sample_graphs(kind, m, 2):
                    space = cx.decoration_space(G, m, op)
                    assert len(cx.coinvariant_basis(G, space)) == len(C.graph_basis(G))


def test_decoration_space_rejects_low_valence():
    with pytest.raises(ValueError):
        cx.decoration_space(gr.UndirectedGraph([0, 1], [1, 0]), 0, "lie")


def test_genus_two_values():
    rec = cx.homology(cx.UGC, "lie", 0, 2, 1, 2)
    assert [(r["degree"], r["dim_H"]) for r in rec] == [(1, 0), (2, 1)]
    rec = cx.homology(cx.UGC, "lie", 1, 2, 1, 5)
    assert all(r["dim_H"] == 0 for r in rec)


def test_record_keys():
    rec = cx.homology(cx.UGC, "com", 0, 2, 1, 2)
    assert list(rec[0]) == ["kind", "operad", "m", "genus", "degree", "dim_chains",
                            "rank_d_out", "rank_d_in", "dim_H"]


def test_rank_methods_agree_on_blocks():
    block = cx.ComplexBlock(cx.GraphComplex(cx.UGC, "lie", 0), 3, 1, 4)
    assert block.ranks("exact") == block.ranks("modular") == block.ranks("bareiss")


def test_basis_order_independence():
    rng = random.Random(17)
    block = cx.ComplexBlock(cx.GraphComplex(cx.UGC, "lie", 0), 3, 1, 4)
    ref = block.ranks()
    for p, M in block.matrices.items():
        rp = list(range(M.nrows))
        cp = list(range(M.ncols))
        rng.shuffle(rp)
        rng.shuffle(cp)
        assert rank(M.permuted(rp, cp)) == ref[p]


def test_parity_regrading():
    a = cx.homology(cx.UGC, "lie", 0, 2, *cx.degree_window(2, 0))
    b = cx.homology(cx.UGC, "lie", 2, 2, *cx.degree_window(2, 2))
    da = {r["degree"]: r["dim_H"] for r in a}
    db = {r["degree"]: r["dim_H"] for r in b}
    shift = 2 * (2 - 1)
    for p in set(da) | {q - shift for q in db}:
        assert da.get(p, 0) == db.get(p + shift, 0)


def test_euler_characteristic():
    rec = cx.homology(cx.UGC, "lie", 0, 3, *cx.degree_window(3, 0))
    xc, xh = cx.euler_characteristic(rec)
    assert xc == xh


def test_compare_rejects_other_operads():
    with pytest.raises(ValueError):
        cx.compare_directed_undirected("ass", 0, 2, 1, 2)


def test_directed_vs_undirected_genus_two():
    for op in OPERADS:
        for m in (0, 1):
            ok, table = cx.compare_directed_undirected(op, m, 2, *cx.degree_window(2, m))
            assert ok, table


def test_cube_on_genus_two():
    for G in gr.enumerate_undirected(2):
        for m in (0, 1):
            for op in OPERADS:
                assert cx.cube_check(G, m, op)


def test_cube_c_property():
    theta = gr.UndirectedGraph([0, 0, 0, 1, 1, 1], [3, 4, 5, 0, 1, 2])
    for m in (0, 1, 2, 3):
        cube = cx.DirectionCube(theta, m, "lie")
        for o in cube.dirs:
            for i, x in enumerate(o):
                if x != gr.ZERO:
                    continue
                for vec in cube.basis(o):
                    for (oo, w), c in vec.items():
                        s1, o1, w1 = cube.partial(oo, w, i, 1)
                        s2, o2, w2 = cube.partial(oo, w, i, -1)
                        sc, oc, wc = cube.c_map(o1, w1, i)
                        assert (oc, wc) == (o2, w2)
                        assert s2 == (-1) ** m * sc * s1


def test_cube_differential_squares_to_zero():
    theta = gr.UndirectedGraph([0, 0, 0, 1, 1, 1], [3, 4, 5, 0, 1, 2])
    for m in (0, 1):
        cube = cx.DirectionCube(theta, m, "lie")
        for o in cube.dirs:
            for v in cube.basis(o):
                assert not cube.d(cube.d(v))


def test_sample_choices():
    assert cx.sample_choices([2, 2], 10) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    s = cx.sample_choices([5, 5], 4, seed=3)
    assert len(s) == 4 and len(set(s)) == 4
    assert s == cx.sample_choices([5, 5], 4, seed=3)


def test_bad_kind():
    with pytest.raises(ValueError):
        cx.GraphComplex("hairy", "lie", 0)
    with pytest.raises(ValueError):
        cx.GraphComplex(cx.UGC, "ass", 0)


try:
    from hypothesis import given, settings, strategies as st
except ImportError:  # pragma: no cover
    given = None

if given is not None:
    GENUS3 = gr.enumerate_undirected(3)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, len(GENUS3) - 1), st.integers(0, 3), st.randoms(use_true_random=False))
    def test_property_relabeling_commutes_with_d(index, m, rng):
        G = GENUS3[index]
        C = cx.GraphComplex(cx.UGC, "lie", m)
        exps = cx.vertex_expansions(G, "lie")
        choice = [rng.randrange(len(e)) for e in exps]
        c, ws = cx.expand_tuple(exps, choice)[0]
        fm, vm = random_iso(G, rng)
        s = cx.relabel_sign(G, fm, vm, m)
        H, hw = G.relabel(fm, vm), cx.relabel_words(ws, fm, vm)
        assert C.d_monomial(H, hw) == scaled(C.d_monomial(G, ws), s)
        assert C.monomial_vector(H, hw) == scaled(C.monomial_vector(G, ws), s)
        assert not C.d(C.d(C.monomial_vector(G, ws)))
