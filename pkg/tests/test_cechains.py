import random
from itertools import combinations
from math import factorial

import pytest

from graphcx import cechains as ce
from graphcx import graphs as gr
from graphcx.complexes import GraphComplex, expand_tuple, relabel_sign, relabel_words, vertex_expansions

DEGREE_PAIRS = [(4, 10), (3, 7), (3, 8), (1, 3), (2, 3), (2, 5)]


def add(x, y, s=1):
    out = dict(x)
    for k, c in y.items():
        ce._add_into(out, k, s * c)
    return out


def random_generator(space, rng, k):
    word = tuple(rng.randrange(2 * space.g) for _ in range(k))
    r = space.canonical_generator(word)
    return {r[0]: r[1]} if r else {}


def random_lie_element(space, rng, k):
    letters = tuple(rng.randrange(2 * space.g) for _ in range(k))
    gens = space.lie_generators(letters)
    return gens[rng.randrange(len(gens))] if gens else {}


def positive_generators(space, max_sdeg):
    out = []
    for b, a in space.positive_shapes(max_sdeg):
        for vs in combinations(range(space.g), b) if b <= space.g else []:
            for ws in combinations(range(space.g, 2 * space.g), a) if a <= space.g else []:
                out.extend(k for v in space.lie_generators(vs + ws) for k in v if v)
    return sorted(set(out))


def degree(space, x):
    return space.element_degree(next(iter(x)))


def test_pairing_is_graded_antisymmetric_and_nondegenerate():
    for n, m in DEGREE_PAIRS:
        sp = ce.SymplecticSpace(3, n, m)
        for x in range(6):
            for y in range(6):
                s = (-1) ** (sp.degree(x) * sp.degree(y))
                assert sp.pairing(x, y) == -s * sp.pairing(y, x)
                if sp.pairing(x, y):
                    assert sp.degree(x) + sp.degree(y) == m
            assert sum(1 for y in range(6) if sp.pairing(x, y)) == 1


def test_constructor():
    with pytest.raises(ValueError):
        ce.SymplecticSpace(2, 3, 6)
    sp = ce.SymplecticSpace.from_kl(2, 5, 7)
    assert (sp.n, sp.m) == (4, 10)


def test_rotation_sign():
    sp = ce.SymplecticSpace(2, 1, 3)
    # e_i has odd degree 1 and e*_i even degree 2
    assert sp.canonical_generator((0, 0)) is None
    assert sp.canonical_generator((1, 0)) == ((0, 1), -1)
    assert sp.canonical_generator((2, 0)) == ((0, 2), 1)


@pytest.mark.parametrize("n,m", DEGREE_PAIRS)
def test_bracket_antisymmetry_and_jacobi(n, m):
    rng = random.Random(n * 100 + m)
    sp = ce.SymplecticSpace(2, n, m)
    checked = 0
    for _ in range(150):
        x, y, z = (random_generator(sp, rng, rng.randint(2, 3)) for _ in range(3))
        if not (x and y and z):
            continue
        dx, dy, dz = degree(sp, x), degree(sp, y), degree(sp, z)
        assert add(sp.bracket(x, y), sp.bracket(y, x), (-1) ** (dx * dy)) == {}
        J = {}
        for p, q, r, dp, dr in [(x, y, z, dx, dz), (y, z, x, dy, dx), (z, x, y, dz, dy)]:
            J = add(J, sp.bracket(p, sp.bracket(q, r)), (-1) ** (dp * dr))
        assert J == {}
        checked += 1
    assert checked > 50


def test_bracket_is_closed_on_lie_part():
    rng = random.Random(5)
    sp = ce.SymplecticSpace(2, 4, 10)
    for _ in range(30):
        x = random_lie_element(sp, rng, 3)
        y = random_lie_element(sp, rng, 3)
        if not (x and y):
            continue
        b = sp.bracket(x, y)
        for word in b:
            letters = tuple(sorted(word))
            span = [v for v in sp.lie_generators(letters)]
            # the bracket of Lie elements is again a combination of Lie generators
            from graphcx.linalg import IntegerEchelon
            ech = IntegerEchelon()
            idx = {}
            for v in span:
                ech.add(ce._indexed(v, idx))
            part = {k: c for k, c in b.items() if tuple(sorted(k)) == letters}
            assert ech.contains(ce._indexed(part, idx))


def test_bracket_needs_complementary_letters():
    sp = ce.SymplecticSpace(2, 4, 10)
    x = {sp.canonical_generator((0, 1, 1))[0]: 1}
    y = {sp.canonical_generator((0, 0, 1))[0]: 1}
    assert sp.bracket(x, y) == {}


def test_truncation_shapes():
    # with 2n < m < 3n arity two survives only as (W, W); all arities >= 3 survive
    sp = ce.SymplecticSpace(2, 4, 10)
    shapes = sp.positive_shapes(40)
    assert [s for s in shapes if sum(s) == 2] == [(0, 2)]
    for b in range(4):
        assert (b, 3 - b) in shapes
    assert all(sp._sd_of_shape(s) >= 2 for s in shapes)


def chains(sp, rng, count, max_len):
    gens = positive_generators(sp, 12)
    out = []
    for _ in range(count):
        r = rng.randint(1, max_len)
        vecs = [{g: 1} for g in rng.sample(gens, r)]
        w = sp.wedge(vecs)
        if w:
            out.append(w)
    return out


@pytest.mark.parametrize("n,m", [(4, 10), (3, 7), (1, 3)])
def test_ce_differential_squares_to_zero(n, m):
    rng = random.Random(m)
    sp = ce.SymplecticSpace(2, n, m)
    for c in chains(sp, rng, 40, 3):
        assert sp.ce_differential(sp.ce_differential(c)) == {}


def test_ce_differential_of_length_one():
    sp = ce.SymplecticSpace(2, 4, 10)
    rng = random.Random(1)
    for c in chains(sp, rng, 10, 1):
        assert sp.ce_differential(c) == {}


def test_ce_coproduct():
    sp = ce.SymplecticSpace(2, 4, 10)
    rng = random.Random(2)
    for c in chains(sp, rng, 10, 1):
        (mono,) = c
        assert sp.ce_coproduct(c) == {((), mono): c[mono], (mono, ()): c[mono]}
    for c in chains(sp, rng, 20, 3):
        D = sp.ce_coproduct(c)
        left, right = {}, {}
        for (a, b), x in D.items():
            for (a1, a2), y in sp.ce_coproduct({a: 1}).items():
                ce._add_into(left, (a1, a2, b), x * y)
            for (b1, b2), y in sp.ce_coproduct({b: 1}).items():
                ce._add_into(right, (a, b1, b2), x * y)
        assert left == right


def test_gl_action_laws():
    sp = ce.SymplecticSpace(3, 4, 10)
    rng = random.Random(3)
    cs = chains(sp, rng, 15, 2)
    g = sp.g
    for c in cs:
        for i in range(g):
            for j in range(g):
                for k in range(g):
                    for l in range(g):
                        lhs = add(sp.gl_action(i, j, sp.gl_action(k, l, c)),
                                  sp.gl_action(k, l, sp.gl_action(i, j, c)), -1)
                        rhs = {}
                        if j == k:
                            rhs = add(rhs, sp.gl_action(i, l, c))
                        if l == i:
                            rhs = add(rhs, sp.gl_action(k, j, c), -1)
                        assert lhs == rhs
                assert sp.ce_differential(sp.gl_action(i, j, c)) == \
                    sp.gl_action(i, j, sp.ce_differential(c))


def test_diagonal_action_is_weight():
    sp = ce.SymplecticSpace(3, 4, 10)
    rng = random.Random(4)
    for c in chains(sp, rng, 15, 2):
        for mono, x in c.items():
            letters = [y for gen in mono for y in gen]
            for i in range(3):
                w = sp.weight(letters)[i]
                assert sp.gl_action(i, i, {mono: x}) == ({mono: w * x} if w else {})


def test_symplectic_element_is_invariant():
    sp = ce.SymplecticSpace(3, 4, 10)
    omega = {}
    for i in range(3):
        w, s = sp.canonical_generator((i, 3 + i))
        ce._add_into(omega, (w,), s)
    for i in range(3):
        for j in range(3):
            assert sp.gl_action(i, j, omega) == {}


@pytest.mark.parametrize("g,k", [(g, k) for g in (2, 3, 4) for k in (1, 2, 3) if k <= g])
def test_tensor_coinvariants_have_dimension_k_factorial(g, k):
    assert ce.tensor_coinvariant_dim(g, k) == factorial(k)


def test_coinvariants_in_degree_zero():
    assert ce.SymplecticSpace(2, 4, 10).coinv_dim(0) == 1


def test_phi_of_empty_graph_is_unit():
    sp = ce.SymplecticSpace(2, 4, 10)
    E = gr.DirectedGraph([], [], [], 0)
    assert ce.phi_map(sp, E, ()) == {(): 1}


def test_phi_of_a_single_vertex():
    sp = ce.SymplecticSpace(2, 4, 10)
    # one vertex with two loops in the cyclic order s1 t1 s2 t2
    D = gr.DirectedGraph([0, 0, 0, 0], [1, 0, 3, 2], [1, 0, 1, 0])
    out = ce.phi_map(sp, D, ((0, 1, 2, 3),))
    assert len(out) == 1
    ((gen,),) = out
    assert sorted(gen) == [0, 1, 2, 3]


def test_phi_flag_budget():
    sp = ce.SymplecticSpace(1, 4, 10)
    D = gr.DirectedGraph([0, 0, 0, 0], [1, 0, 3, 2], [1, 0, 1, 0])
    with pytest.raises(ValueError):
        ce.phi_map(sp, D, ((0, 1, 2, 3),))


def test_phi_is_well_defined_modulo_gl_span():
    rng = random.Random(2)
    sp = ce.SymplecticSpace(6, 4, 10)
    m, p = 10, 11
    cx = GraphComplex("dgc-trunc", "lie", m)
    ech, index = sp.gl_span(p)
    tested = 0
    for parts in ce.bounded_truncated_graphs(6, p, m):
        G, _ = cx.disjoint_union([(P, None) for P in parts])
        exps = vertex_expansions(G, "lie")
        for c, ws in expand_tuple(exps, [0] * G.nv)[:4]:
            for _ in range(3):
                fm = list(range(G.num_flags))
                vm = list(range(G.nv))
                rng.shuffle(fm)
                rng.shuffle(vm)
                s = relabel_sign(G, fm, vm, m)
                a = ce.phi_map(sp, G, ws)
                b = ce.phi_map(sp, G.relabel(fm, vm), relabel_words(ws, fm, vm))
                diff = add(a, b, -s)
                assert not diff or ech.contains(ce._indexed(diff, index))
                tested += 1
    assert tested > 0


@pytest.mark.parametrize("p", [0, 1, 2, 3, 4])
def test_identification_genus_two(p):
    r = ce.verify_identification(2, 4, 10, p)
    assert r["equal"] and r["intertwine_ok"]
    assert list(r) == ["g", "n", "m", "p", "dim_ce_coinv", "dim_dgc_trunc_bounded",
                       "equal", "intertwine_ok"]


def test_identification_nontrivial_degree():
    r = ce.verify_identification(6, 4, 10, 11)
    assert r["dim_ce_coinv"] == r["dim_dgc_trunc_bounded"] == 2
    assert r["intertwine_ok"]


def test_identification_parameter_checks():
    with pytest.raises(ValueError):
        ce.verify_identification(2, 4, 7, 1)
    with pytest.raises(ValueError):
        ce.verify_identification(1, 4, 10, 3)
