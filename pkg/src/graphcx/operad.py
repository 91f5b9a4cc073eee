"""The cyclic Lie and cyclic commutative operads.

An element of cyc Lie(S) is stored inside the cyclic associative operad: a
linear combination of cyclic words visiting every label of S exactly once.
The extended symmetric group action is then plain relabeling of letters and
partial composition is grafting of cyclic words, so both are label based.
Cyclic words are normalized to start at their smallest label.
"""

from fractions import Fraction
from itertools import permutations
from math import factorial

LIE = "lie"
COM = "com"
OPERADS = (LIE, COM)

_COM_KEY = ()


def cyclic_normal(word):
    """Rotate a cyclic word so that its smallest letter comes first."""
    word = tuple(word)
    if not word:
        return word
    i = word.index(min(word))
    return word[i:] + word[:i]


def rotate_to(word, letter):
    i = word.index(letter)
    return word[i:] + word[:i]


def bracket_words(letters):
    """Signed words of the left-normed bracket [[..[x1, x2], ..], xn]."""
    terms = [(1, (letters[0],))]
    for y in letters[1:]:
        nxt = []
        for c, w in terms:
            nxt.append((c, w + (y,)))
            nxt.append((-c, (y,) + w))
        terms = nxt
    return terms


class CyclicOp:
    """An exact element of cyc C(S) for C = Lie or Com."""

    __slots__ = ("operad", "labels", "coeffs")

    def __init__(self, operad, labels, coeffs=None):
        if operad not in OPERADS:
            raise ValueError("unknown operad %r" % (operad,))
        labels = tuple(labels)
        if len(labels) < 2:
            raise ValueError("arity set needs at least two elements")
        if len(set(labels)) != len(labels):
            raise ValueError("repeated labels")
        self.operad = operad
        self.labels = labels
        clean = {}
        if coeffs:
            ls = set(labels)
            for w, c in coeffs.items():
                if operad == COM:
                    if w != _COM_KEY:
                        raise ValueError("Com has a single basis element")
                else:
                    w = cyclic_normal(w)
                    if len(w) != len(labels) or set(w) != ls:
                        raise ValueError("word %r is not a cyclic order of the labels" % (w,))
                c = Fraction(c)
                if c:
                    clean[w] = clean.get(w, 0) + c
            clean = {w: c for w, c in clean.items() if c}
        self.coeffs = clean

    @property
    def arity(self):
        return len(self.labels)

    def __repr__(self):
        if self.operad == COM:
            return "CyclicOp(com, %r, %s)" % (self.labels, self.coeffs.get(_COM_KEY, 0))
        terms = " + ".join("%s*%s" % (c, w) for w, c in sorted(self.coeffs.items()))
        return "CyclicOp(lie, %r, %s)" % (self.labels, terms or "0")

    def _check_compatible(self, other):
        if self.operad != other.operad or set(self.labels) != set(other.labels):
            raise ValueError("elements live in different spaces")

    def __eq__(self, other):
        if not isinstance(other, CyclicOp):
            return NotImplemented
        return (self.operad == other.operad and set(self.labels) == set(other.labels)
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.operad, frozenset(self.labels), frozenset(self.coeffs.items())))

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return CyclicOp(self.operad, self.labels, out)

    def __neg__(self):
        return CyclicOp(self.operad, self.labels, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return CyclicOp(self.operad, self.labels, {w: scalar * c for w, c in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs


def _lie_basis_data(labels):
    labels = tuple(sorted(labels))
    root, first = labels[0], labels[1]
    out = []
    for rest in permutations(labels[2:]):
        coeffs = {}
        for c, w in bracket_words((first,) + rest):
            key = (root,) + w
            coeffs[key] = coeffs.get(key, 0) + c
        out.append((rest, coeffs))
    return out


def _unrank_permutation(items, index):
    """The permutation of items at position index in lexicographic order."""
    items = list(items)
    out = []
    for k in range(len(items), 0, -1):
        f = factorial(k - 1)
        q, index = divmod(index, f)
        out.append(items.pop(q))
    return tuple(out)


def lie_basis_words(labels, index):
    """Signed words of the basis element number index of cyc Lie(labels)."""
    labels = tuple(sorted(labels))
    if not 0 <= index < lie_dimension(len(labels)):
        raise IndexError("basis index out of range")
    root, first = labels[0], labels[1]
    rest = _unrank_permutation(labels[2:], index)
    coeffs = {}
    for c, w in bracket_words((first,) + rest):
        key = (root,) + w
        coeffs[key] = coeffs.get(key, 0) + c
    return coeffs


def lie_cyclic_basis(k, labels=None):
    """The (k-2)! left-normed bracket basis of cyc Lie(k), in cyclic words.

    The smallest label plays the output, the second smallest opens every
    bracket, and the remaining letters are listed lexicographically.
    """
    if k < 2:
        raise ValueError("cyc Lie(k) needs k >= 2")
    if labels is None:
        labels = tuple(range(1, k + 1))
    labels = tuple(labels)
    if len(labels) != k:
        raise ValueError("expected %d labels" % k)
    return [CyclicOp(LIE, labels, coeffs) for _, coeffs in _lie_basis_data(labels)]


def lie_dimension(k):
    return factorial(k - 2) if k >= 2 else 0


def lie_coordinates(x):
    """Coordinates of a Lie element in lie_cyclic_basis(labels).

    The basis element indexed by the letter sequence u is the only one whose
    expansion contains the cyclic word (root, first, u...).
    """
    if x.operad != LIE:
        raise ValueError("not a Lie element")
    labels = tuple(sorted(x.labels))
    root, first = labels[0], labels[1]
    return [x.coeffs.get((root, first) + rest, Fraction(0)) for rest in permutations(labels[2:])]


def is_lie(x):
    if x.operad != LIE:
        raise ValueError("is_lie expects a Lie-tagged element")
    if x.is_zero():
        return True
    coords = lie_coordinates(x)
    rebuilt = {}
    for (_, coeffs), c in zip(_lie_basis_data(x.labels), coords):
        if c:
            for w, a in coeffs.items():
                rebuilt[w] = rebuilt.get(w, 0) + c * a
    rebuilt = {w: c for w, c in rebuilt.items() if c}
    return rebuilt == x.coeffs


def act(perm, x, target_labels=None):
    """Relabel x along the bijection perm (a dict label -> new label)."""
    if set(perm) != set(x.labels):
        raise ValueError("permutation domain differs from the arity set")
    image = [perm[l] for l in x.labels]
    if len(set(image)) != len(image):
        raise ValueError("relabeling is not injective")
    if target_labels is None:
        target_labels = x.labels if set(image) == set(x.labels) else tuple(sorted(image))
    elif set(target_labels) != set(image):
        raise ValueError("target labels do not match the image")
    if x.operad == COM:
        return CyclicOp(COM, target_labels, dict(x.coeffs))
    out = {}
    for w, c in x.coeffs.items():
        key = cyclic_normal(perm[l] for l in w)
        out[key] = out.get(key, 0) + c
    return CyclicOp(LIE, target_labels, out)


def graft_words(w1, s, w2, t):
    """Glue the cyclic word w1 at letter s to w2 at letter t."""
    a = rotate_to(w1, s)[1:]
    b = rotate_to(w2, t)[1:]
    return cyclic_normal(a + b)


def composed_labels(S, s, T, t):
    """The arity set of a composition, ordered S<s, T>t, T<t, S>s."""
    S = tuple(S)
    T = tuple(T)
    i = S.index(s)
    j = T.index(t)
    return S[:i] + T[j + 1:] + T[:j] + S[i + 1:]


def compose(p, s, q, t):
    """Partial composition of cyclic operations along the slots s and t."""
    if p.operad != q.operad:
        raise ValueError("cannot compose elements of different operads")
    if s not in p.labels:
        raise ValueError("slot %r not in the first arity set" % (s,))
    if t not in q.labels:
        raise ValueError("slot %r not in the second arity set" % (t,))
    rest_p = set(p.labels) - {s}
    rest_q = set(q.labels) - {t}
    if rest_p & rest_q:
        raise ValueError("arity sets must be disjoint outside the glued slots; relabel first")
    labels = composed_labels(p.labels, s, q.labels, t)
    out = {}
    if p.operad == COM:
        c = p.coeffs.get(_COM_KEY, 0) * q.coeffs.get(_COM_KEY, 0)
        return CyclicOp(COM, labels, {_COM_KEY: c} if c else {})
    for w1, c1 in p.coeffs.items():
        for w2, c2 in q.coeffs.items():
            key = graft_words(w1, s, w2, t)
            out[key] = out.get(key, 0) + c1 * c2
    return CyclicOp(LIE, labels, out)


def identity2(operad=LIE, labels=(1, 2)):
    """The generator of cyc C(2)."""
    labels = tuple(labels)
    if len(labels) != 2:
        raise ValueError("identity lives in arity two")
    if operad == COM:
        return CyclicOp(COM, labels, {_COM_KEY: 1})
    return CyclicOp(LIE, labels, {cyclic_normal(labels): 1})


def com_generator(labels):
    return CyclicOp(COM, labels, {_COM_KEY: 1})


def basis(operad, labels):
    """Canonical basis of cyc C(labels)."""
    labels = tuple(labels)
    if operad == COM:
        return [com_generator(labels)]
    return lie_cyclic_basis(len(labels), labels)


def all_bracket_expansions(labels):
    """Expansions of every left-normed bracketing of the non-root letters."""
    labels = tuple(sorted(labels))
    root = labels[0]
    out = []
    for order in permutations(labels[1:]):
        coeffs = {}
        for c, w in bracket_words(order):
            key = (root,) + w
            coeffs[key] = coeffs.get(key, 0) + c
        out.append(coeffs)
    return out


def cyclic_words(labels):
    """All cyclic orders of the labels, normalized, in lexicographic order."""
    labels = tuple(sorted(labels))
    return [(labels[0],) + rest for rest in permutations(labels[1:])]
