import random
from itertools import permutations

import pytest

from graphcx.operad import (
    COM, LIE, CyclicOp, act, all_bracket_expansions, basis, bracket_words, compose,
    cyclic_normal, identity2, is_lie, lie_basis_words, lie_coordinates, lie_cyclic_basis,
    lie_dimension,
)
from graphcx.linalg import rank


def as_vector(x, words):
    return [x.coeffs.get(w, 0) for w in words]


def random_lie(rng, labels):
    out = CyclicOp(LIE, labels)
    for b in lie_cyclic_basis(len(labels), labels):
        out = out + rng.randint(-2, 2) * b
    return out


@pytest.mark.parametrize("k,dim", [(2, 1), (3, 1), (4, 2), (5, 6), (6, 24)])
def test_lie_dimensions(k, dim):
    assert lie_dimension(k) == dim
    assert len(lie_cyclic_basis(k)) == dim


@pytest.mark.parametrize("k", [3, 4, 5])
def test_lie_basis_is_independent(k):
    labels = tuple(range(1, k + 1))
    words = sorted({w for b in lie_cyclic_basis(k) for w in b.coeffs})
    assert rank([as_vector(b, words) for b in lie_cyclic_basis(k)]) == lie_dimension(k)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_all_bracketings_span_the_basis(k):
    labels = tuple(range(1, k + 1))
    exps = all_bracket_expansions(labels)
    words = sorted({w for e in exps for w in e})
    vecs = [[e.get(w, 0) for w in words] for e in exps]
    assert rank(vecs) == lie_dimension(k)
    for e in exps:
        assert is_lie(CyclicOp(LIE, labels, e))


def test_lazy_basis_matches_full_basis():
    for k in range(2, 7):
        labels = tuple(range(10, 10 + k))
        full = lie_cyclic_basis(k, labels)
        for i, b in enumerate(full):
            assert CyclicOp(LIE, labels, lie_basis_words(labels, i)) == b
        with pytest.raises(IndexError):
            lie_basis_words(labels, len(full))


def test_cyclic_words_are_normalized():
    assert cyclic_normal((3, 1, 2)) == (1, 2, 3)
    x = CyclicOp(LIE, (1, 2, 3), {(2, 3, 1): 1})
    assert x.coeffs == {(1, 2, 3): 1}


def test_arity_two_and_three():
    assert is_lie(identity2(LIE))
    b = lie_cyclic_basis(3)[0]
    assert b.coeffs == {(1, 2, 3): 1, (1, 3, 2): -1}


def test_not_lie():
    assert not is_lie(CyclicOp(LIE, (1, 2, 3), {(1, 2, 3): 1}))


def test_coordinates_round_trip():
    rng = random.Random(4)
    for k in (3, 4, 5):
        labels = tuple(range(1, k + 1))
        basis_k = lie_cyclic_basis(k, labels)
        coeffs = [rng.randint(-3, 3) for _ in basis_k]
        x = CyclicOp(LIE, labels)
        for c, b in zip(coeffs, basis_k):
            x = x + c * b
        assert lie_coordinates(x) == coeffs


def test_action_is_a_group_action():
    rng = random.Random(5)
    labels = (1, 2, 3, 4, 5)
    for _ in range(20):
        x = random_lie(rng, labels)
        p = dict(zip(labels, rng.sample(labels, 5)))
        q = dict(zip(labels, rng.sample(labels, 5)))
        pq = {l: p[q[l]] for l in labels}
        assert act(p, act(q, x)) == act(pq, x)
        assert is_lie(act(p, x))
    ident = {l: l for l in labels}
    assert act(ident, x) == x


def test_rotation_acts_trivially_on_cyclic_words():
    # the cyclic rotation fixes every cyclic word, so its action on cyc Lie is trivial
    labels = (1, 2, 3, 4)
    rot = {1: 2, 2: 3, 3: 4, 4: 1}
    x = CyclicOp(LIE, labels, {(1, 2, 3, 4): 1})
    assert act(rot, x) == x


def test_transposition_acts_by_minus_one_in_arity_three():
    b = lie_cyclic_basis(3)[0]
    assert act({1: 2, 2: 1, 3: 3}, b) == -b


def test_com_composition():
    x = CyclicOp(COM, (1, 2, 3), {(): 2})
    y = CyclicOp(COM, (4, 5, 6), {(): 3})
    z = compose(x, 3, y, 4)
    assert z.coeffs == {(): 6}
    assert set(z.labels) == {1, 2, 5, 6}


def test_composition_with_identity_is_relabeling():
    rng = random.Random(6)
    labels = (1, 2, 3, 4)
    for _ in range(10):
        x = random_lie(rng, labels)
        y = compose(x, 4, identity2(LIE, (9, 7)), 9)
        assert y == act({1: 1, 2: 2, 3: 3, 4: 7}, x)


def test_composition_is_equivariant_and_lands_in_lie():
    rng = random.Random(7)
    for _ in range(15):
        x = random_lie(rng, (1, 2, 3, 4))
        y = random_lie(rng, (5, 6, 7))
        z = compose(x, 2, y, 6)
        assert is_lie(z)
        p = {1: 11, 2: 12, 3: 13, 4: 14}
        q = {5: 15, 6: 16, 7: 17}
        pq = {1: 11, 3: 13, 4: 14, 5: 15, 7: 17}
        assert compose(act(p, x), 12, act(q, y), 16) == act(pq, z)


def test_composition_is_associative():
    rng = random.Random(8)
    for _ in range(10):
        x = random_lie(rng, (1, 2, 3))
        y = random_lie(rng, (4, 5, 6))
        z = random_lie(rng, (7, 8, 9))
        left = compose(compose(x, 3, y, 4), 6, z, 7)
        right = compose(x, 3, compose(y, 6, z, 7), 4)
        assert left == right


def test_composition_is_symmetric_in_its_arguments():
    rng = random.Random(9)
    x = random_lie(rng, (1, 2, 3))
    y = random_lie(rng, (4, 5, 6))
    assert compose(x, 3, y, 4) == compose(y, 4, x, 3)


def test_composition_errors():
    x = lie_cyclic_basis(3)[0]
    with pytest.raises(ValueError):
        compose(x, 9, x, 1)
    with pytest.raises(ValueError):
        compose(x, 1, x, 1)
    with pytest.raises(ValueError):
        compose(x, 1, CyclicOp(COM, (4, 5, 6), {(): 1}), 4)
    with pytest.raises(ValueError):
        CyclicOp(LIE, (1,))
    with pytest.raises(ValueError):
        CyclicOp(LIE, (1, 2, 3), {(1, 2): 1})


def test_basis_dispatch():
    assert basis(COM, (1, 2, 3))[0].coeffs == {(): 1}
    assert len(basis(LIE, (1, 2, 3, 4))) == 2


def test_bracket_words_count():
    assert len(bracket_words((1, 2, 3, 4))) == 8
