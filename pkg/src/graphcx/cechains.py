"""Chevalley-Eilenberg chains of the Lie algebra of cyclic words on a symplectic space.

H = V + W with V spanned by e_0..e_{g-1} in degree n and W = s^m V* spanned
by the dual vectors e*_0..e*_{g-1} in degree m - n.  Letters are integers:
i < g stands for e_i and g + i for e*_i.

An element of the Schur functor of s^-m cyc Ass on H is a combination of
cyclic words in letters, identified under rotation with the Koszul sign;
the cyclic Lie part is the span of Lie decorations.  Chevalley-Eilenberg
chains are graded symmetric words s x_1 ... s x_r in such generators.
"""

from itertools import combinations, combinations_with_replacement, permutations, product

from . import graphs as gr
from .complexes import DGC_TRUNC, GraphComplex, koszul_sign
from .linalg import IntegerEchelon
from .operad import LIE, lie_cyclic_basis


def _add_into(acc, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class SymplecticSpace:
    """The graded symplectic space H = V + s^m V* with its pairing of degree -m."""

    def __init__(self, g, n, m):
        if n == m - n:
            raise ValueError("degrees n and m - n must differ")
        if g < 0:
            raise ValueError("negative dimension")
        self.g = g
        self.n = n
        self.m = m

    @classmethod
    def from_kl(cls, g, k, l):
        """H in degrees n = k - 1 and m - n with m = k + l - 2."""
        return cls(g, k - 1, k + l - 2)

    @property
    def dim(self):
        return 2 * self.g

    def degree(self, x):
        return self.n if x < self.g else self.m - self.n

    def is_dual(self, x):
        return x >= self.g

    def index(self, x):
        return x if x < self.g else x - self.g

    def letter_name(self, x):
        return "e%d" % x if x < self.g else "e*%d" % (x - self.g)

    def pairing(self, x, y):
        """<x, y>: <e*_j, e_i> = delta and <e_i, e*_j> = -(-1)^(n(m-n)) delta."""
        g = self.g
        if x >= g and y < g:
            return 1 if x - g == y else 0
        if x < g and y >= g:
            if x != y - g:
                return 0
            return 1 if (self.n * (self.m - self.n)) % 2 else -1
        return 0

    def words_degree(self, word):
        return sum(self.degree(x) for x in word)

    def weight(self, letters):
        w = [0] * self.g
        for x in letters:
            if x < self.g:
                w[x] += 1
            else:
                w[x - self.g] -= 1
        return tuple(w)

    # Lie algebra generators ----------------------------------------------

    def canonical_generator(self, word):
        """(canonical cyclic word, sign) or None when rotation kills the class."""
        word = tuple(word)
        k = len(word)
        degs = [self.degree(x) for x in word]
        best = None
        sign = 0
        for r in range(k):
            rot = word[r:] + word[:r]
            s = -1 if (sum(degs[:r]) * sum(degs[r:])) % 2 else 1
            if best is None or rot < best:
                best, sign = rot, s
            elif rot == best and s != sign:
                return None
        return best, sign

    def element_degree(self, gen):
        return -self.m + self.words_degree(gen)

    def decorated(self, words, letters):
        """The class [xi (x) h] for xi = sum c * word over slots 0..k-1."""
        out = {}
        degs = [self.degree(x) for x in letters]
        for w, c in words:
            target = [0] * len(w)
            for i, slot in enumerate(w):
                target[slot] = i
            sgn = koszul_sign(degs, target)
            r = self.canonical_generator(tuple(letters[slot] for slot in w))
            if r is not None:
                _add_into(out, r[0], c * sgn * r[1])
        return out

    def lie_generators(self, letters):
        """Spanning vectors of the cyclic Lie part with the given letters in this order."""
        k = len(letters)
        out = []
        for x in lie_cyclic_basis(k, tuple(range(k))):
            v = self.decorated(list(x.coeffs.items()), letters)
            if v:
                out.append(v)
        return out

    def bracket_generators(self, v, w):
        """[v, w] for cyclic words v, w, as a vector of canonical words."""
        m = self.m
        out = {}
        dv = [self.degree(x) for x in v]
        dw = [self.degree(x) for x in w]
        total_w = sum(dw)
        for i in range(len(v)):
            for j in range(len(w)):
                p = self.pairing(w[j], v[i])
                if not p:
                    continue
                c = ((sum(dv[i:]) - m) * (total_w - m) + sum(dw[:j + 1]) * sum(dw[j + 1:]) + 1)
                word = v[:i] + w[j + 1:] + w[:j] + v[i + 1:]
                r = self.canonical_generator(word)
                if r is not None:
                    _add_into(out, r[0], p * r[1] * (-1 if c % 2 else 1))
        return out

    def bracket(self, x, y):
        out = {}
        for v, a in x.items():
            for w, b in y.items():
                for k, c in self.bracket_generators(v, w).items():
                    _add_into(out, k, a * b * c)
        return out

    # Chevalley-Eilenberg chains --------------------------------------------

    def sdeg(self, gen):
        return self.element_degree(gen) + 1

    def canonical_wedge(self, gens):
        """(sorted tuple, sign) for s gen_1 ... s gen_r, or None if zero."""
        gens = list(gens)
        order = sorted(range(len(gens)), key=lambda i: gens[i])
        target = [0] * len(gens)
        for pos, i in enumerate(order):
            target[i] = pos
        srt = tuple(gens[i] for i in order)
        for a, b in zip(srt, srt[1:]):
            if a == b and self.sdeg(a) % 2:
                return None
        return srt, koszul_sign([self.sdeg(x) for x in gens], target)

    def wedge(self, vectors):
        """s x_1 ... s x_r for Lie algebra vectors x_i."""
        out = {}
        for combo in product(*[list(v.items()) for v in vectors]):
            c = 1
            for _, a in combo:
                c *= a
            r = self.canonical_wedge([g for g, _ in combo])
            if r is not None:
                _add_into(out, r[0], c * r[1])
        return out

    def ce_degree(self, mono):
        return sum(self.sdeg(x) for x in mono)

    def ce_differential(self, chain):
        out = {}
        for mono, c in chain.items():
            degs = [self.sdeg(x) for x in mono]
            for i, j in combinations(range(len(mono)), 2):
                b = degs[i] * (1 + degs[j]) + degs[i] * sum(degs[:i]) + degs[j] * sum(degs[:j])
                sgn = -1 if b % 2 else 1
                br = self.bracket_generators(mono[i], mono[j])
                rest = [mono[k] for k in range(len(mono)) if k != i and k != j]
                for gen, a in br.items():
                    if self.element_degree(gen) < 1:
                        continue
                    r = self.canonical_wedge([gen] + rest)
                    if r is not None:
                        _add_into(out, r[0], c * sgn * a * r[1])
        return out

    def ce_coproduct(self, chain):
        out = {}
        for mono, c in chain.items():
            degs = [self.sdeg(x) for x in mono]
            k = len(mono)
            for size in range(k + 1):
                for A in combinations(range(k), size):
                    B = [i for i in range(k) if i not in A]
                    target = [0] * k
                    for pos, i in enumerate(list(A) + B):
                        target[i] = pos
                    sgn = koszul_sign(degs, target)
                    left = self.canonical_wedge([mono[i] for i in A])
                    right = self.canonical_wedge([mono[i] for i in B])
                    key = (left[0], right[0])
                    _add_into(out, key, c * sgn * left[1] * right[1])
        return out

    def gl_action(self, i, j, chain):
        """The elementary matrix E_ij acting as a derivation (degree 0, no signs)."""
        g = self.g
        out = {}
        for mono, c in chain.items():
            for p, gen in enumerate(mono):
                for q, x in enumerate(gen):
                    if x == j:
                        y, a = i, 1
                    elif x == g + i:
                        y, a = g + j, -1
                    else:
                        continue
                    r = self.canonical_generator(gen[:q] + (y,) + gen[q + 1:])
                    if r is None:
                        continue
                    w = self.canonical_wedge(list(mono[:p]) + [r[0]] + list(mono[p + 1:]))
                    if w is not None:
                        _add_into(out, w[0], c * a * r[1] * w[1])
        return out

    # graded pieces -------------------------------------------------------

    def positive_shapes(self, max_sdeg):
        """Shapes (#V letters, #W letters) of generators kept by the positive
        truncation, with suspended degree at most max_sdeg."""
        return self._shape_list(max_sdeg)

    def _shape_list(self, max_sdeg):
        out = []
        n, m = self.n, self.m
        kmax = max_sdeg + 2 * m + 2
        for b in range(kmax + 1):
            for a in range(kmax + 1 - b):
                if a + b < 2:
                    continue
                d = -m + n * b + (m - n) * a
                if 1 <= d and d + 1 <= max_sdeg:
                    out.append((b, a))
        return out

    def shape_multisets(self, p):
        """Multisets of generator shapes whose suspended degrees add to p."""
        shapes = sorted(self._shape_list(p), key=lambda s: (s, self._sd_of_shape(s)))
        out = []

        def rec(start, remaining, cur):
            if remaining == 0:
                out.append(tuple(cur))
                return
            for i in range(start, len(shapes)):
                sd = self._sd_of_shape(shapes[i])
                if sd <= remaining:
                    cur.append(shapes[i])
                    rec(i, remaining - sd, cur)
                    cur.pop()

        if p == 0:
            return [()]
        rec(0, p, [])
        return out

    def _sd_of_shape(self, s):
        b, a = s
        return -self.m + self.n * b + (self.m - self.n) * a + 1

    def ass_generators(self, letters):
        """All cyclic words with the given letters, as single-term vectors."""
        out = {}
        for perm in set(permutations(letters)):
            r = self.canonical_generator(perm)
            if r is not None:
                out[r[0]] = {r[0]: 1}
        return [out[k] for k in sorted(out)]

    def weight_piece(self, p, weight, operad=LIE):
        """Spanning vectors of CE_p of the positive part in a fixed weight.

        operad is LIE for the cyclic Lie part or "ass" for all cyclic words.
        """
        g = self.g
        weight = tuple(weight)
        seen = set()
        out = []
        for shapes in self.shape_multisets(p):
            B = sum(b for b, _ in shapes)
            A = sum(a for _, a in shapes)
            if sum(weight) != B - A:
                continue
            for vm in combinations_with_replacement(range(g), B):
                cnt = [0] * g
                for x in vm:
                    cnt[x] += 1
                wcnt = [cnt[i] - weight[i] for i in range(g)]
                if any(c < 0 for c in wcnt) or sum(wcnt) != A:
                    continue
                wm = [g + i for i in range(g) for _ in range(wcnt[i])]
                for assign in _distribute(list(vm), list(wm), shapes):
                    key = tuple(sorted(assign))
                    if key in seen:
                        continue
                    seen.add(key)
                    if operad == LIE:
                        gens = [self.lie_generators(letters) for letters in key]
                    else:
                        gens = [self.ass_generators(letters) for letters in key]
                    if any(not gl for gl in gens):
                        continue
                    for choice in product(*gens):
                        v = self.wedge(list(choice))
                        if v:
                            out.append(v)
        return out

    def coinv_dim(self, p):
        """Dimension of the gl-coinvariants of CE_p (positive truncation, Lie part)."""
        g = self.g
        zero = (0,) * g
        base = self.weight_piece(p, zero)
        ech = IntegerEchelon()
        index = {}
        dim = sum(1 for v in base if ech.add(_indexed(v, index)))
        images = IntegerEchelon()
        for i in range(g):
            for j in range(g):
                if i == j:
                    continue
                w = [0] * g
                w[j] += 1
                w[i] -= 1
                for v in self.weight_piece(p, w):
                    images.add(_indexed(self.gl_action(i, j, v), index))
        return dim - len(images)

    def gl_span(self, p, operad="ass"):
        """Echelon form of the weight-zero part of the gl-image in CE_p.

        The default uses all cyclic words, which is where images of
        word-decorated graphs live.
        """
        g = self.g
        ech = IntegerEchelon()
        index = {}
        for i in range(g):
            for j in range(g):
                if i == j:
                    continue
                w = [0] * g
                w[j] += 1
                w[i] -= 1
                for v in self.weight_piece(p, w, operad):
                    ech.add(_indexed(self.gl_action(i, j, v), index))
        return ech, index


def _indexed(vec, index):
    out = {}
    for k, c in vec.items():
        if k not in index:
            index[k] = len(index)
        out[index[k]] = c
    return out


def _distribute(vletters, wletters, shapes):
    """Ways to split the letter multisets among generators of the given shapes."""
    results = []

    def split(letters, sizes):
        if not sizes:
            if not letters:
                yield []
            return
        first = sizes[0]
        seen = set()
        for idx in combinations(range(len(letters)), first):
            chosen = tuple(letters[i] for i in idx)
            if chosen in seen:
                continue
            seen.add(chosen)
            rest = [letters[i] for i in range(len(letters)) if i not in idx]
            for tail in split(rest, sizes[1:]):
                yield [chosen] + tail

    for vs in split(vletters, [b for b, _ in shapes]):
        for ws in split(wletters, [a for _, a in shapes]):
            results.append([tuple(sorted(x + y)) for x, y in zip(vs, ws)])
    return results


# ---------------------------------------------------------------------------
# coinvariants of mixed tensors


def tensor_coinvariant_dim(g, k):
    """dim of the gl_g-coinvariants of V^(x)k (x) V*^(x)k, computed by rank."""
    def piece(weight):
        out = []
        for vi in product(range(g), repeat=k):
            cnt = [0] * g
            for x in vi:
                cnt[x] += 1
            wc = [cnt[i] - weight[i] for i in range(g)]
            if any(c < 0 for c in wc) or sum(wc) != k:
                continue
            pool = [i for i in range(g) for _ in range(wc[i])]
            for wi in set(permutations(pool)):
                out.append((vi, wi))
        return out

    zero = (0,) * g
    base = piece(zero)
    index = {t: i for i, t in enumerate(base)}
    ech = IntegerEchelon()
    for i in range(g):
        for j in range(g):
            if i == j:
                continue
            w = [0] * g
            w[j] += 1
            w[i] -= 1
            for vi, wi in piece(w):
                img = {}
                for q, x in enumerate(vi):
                    if x == j:
                        t = (vi[:q] + (i,) + vi[q + 1:], wi)
                        img[index[t]] = img.get(index[t], 0) + 1
                for q, x in enumerate(wi):
                    if x == i:
                        t = (vi, wi[:q] + (j,) + wi[q + 1:])
                        img[index[t]] = img.get(index[t], 0) - 1
                ech.add({a: b for a, b in img.items() if b})
    return len(base) - len(ech)


# ---------------------------------------------------------------------------
# the map from directed graphs to Chevalley-Eilenberg chains


def phi_map(space, G, words):
    """Image of a word-decorated truncated directed graph in CE chains."""
    if G.legs():
        raise ValueError("graphs with external legs are not supported")
    S = G.sources()
    if len(S) > space.g:
        raise ValueError("flag budget exceeded: %d edges for dim V = %d" % (len(S), space.g))
    n, m = space.n, space.m
    pos = {s: i for i, s in enumerate(S)}
    h = [0] * G.num_flags
    for f in range(G.num_flags):
        if G.src[f]:
            h[f] = pos[f]
        else:
            h[f] = space.g + pos[G.mu[f]]
    N = G.nv
    vf = G.flags_by_vertex()
    # symbols: s1 per vertex, xi per vertex, then h_s h_mu(s) per source
    degs = [1] * N + [-m] * N
    targets = [None] * (2 * N)
    place = {}
    p = 0
    for v in range(N):
        targets[v] = p
        targets[N + v] = p + 1
        p += 2
        for f in vf[v]:
            place[f] = p
            p += 1
    for s in S:
        for f in (s, G.mu[s]):
            degs.append(space.degree(h[f]))
            targets.append(place[f])
    sign = koszul_sign(degs, targets)
    gamma = (m * N * (N + 1) // 2 + n * N) % 2
    if gamma:
        sign = -sign
    gens = []
    for v in range(N):
        slot = {f: i for i, f in enumerate(vf[v])}
        letters = tuple(h[f] for f in vf[v])
        w = tuple(slot[f] for f in words[v])
        gens.append(space.decorated([(w, 1)], letters))
    out = space.wedge(gens)
    return {k: sign * c for k, c in out.items()}


def phi_vector(space, cx, vec):
    out = {}
    for key, c in vec.items():
        H, hw = cx.representative(key)
        for k, a in phi_map(space, H, hw).items():
            _add_into(out, k, c * a)
    return out


def connected_truncated(genus, max_edges):
    """Connected truncated directed graphs of a genus with at most max_edges edges."""
    out = []
    for nv in range(1, max_edges - genus + 2):
        if genus - 1 + nv > max_edges:
            break
        out.extend(D for D in gr.enumerate_directed(genus, nv) if D.is_truncated())
    return out


def bounded_truncated_graphs(max_edges, degree, m):
    """Unions of connected truncated directed graphs with <= max_edges edges in a degree."""
    comps = []
    for genus in range(2, max_edges + 1):
        comps.extend(connected_truncated(genus, max_edges))
    out = []

    def rec(start, edges, cur):
        deg = sum(G.degree(m) for G in cur)
        if deg == degree:
            out.append(list(cur))
        for i in range(start, len(comps)):
            G = comps[i]
            if edges + G.num_edges <= max_edges:
                cur.append(G)
                rec(i, edges + G.num_edges, cur)
                cur.pop()

    rec(0, 0, [])
    return out


def dgc_bounded_basis(cx, max_edges, degree):
    """Basis vectors of the edge-bounded truncated directed complex in a degree."""
    out = []
    for parts in bounded_truncated_graphs(max_edges, degree, cx.m):
        U, _ = cx.disjoint_union([(G, None) for G in parts])
        out.extend(cx.graph_basis(U))
    return out


def verify_identification(g, n, m, p, check_intertwining=True, complex_=None):
    """Compare the coinvariant CE dimension with the bounded graph dimension in degree p."""
    if not 2 * n < m < 3 * n:
        raise ValueError("need 2n < m < 3n")
    alpha_num, alpha_den = (2, 3) if m == 3 * n - 1 else (1, 1)
    if p * alpha_den > alpha_num * 2 * g:
        raise ValueError("degree %d outside the stable range for g = %d" % (p, g))
    space = SymplecticSpace(g, n, m)
    cx = complex_ or GraphComplex(DGC_TRUNC, LIE, m)
    graph_basis = dgc_bounded_basis(cx, g, p)
    ce_dim = space.coinv_dim(p)
    ok = True
    if check_intertwining and p > 0:
        ech, index = space.gl_span(p - 1)
        for vec in graph_basis:
            lhs = phi_vector(space, cx, cx.d(vec))
            rhs = space.ce_differential(phi_vector(space, cx, vec))
            diff = dict(lhs)
            for k, c in rhs.items():
                _add_into(diff, k, -c)
            if diff and not ech.contains(_indexed(diff, index)):
                ok = False
                break
    return {"g": g, "n": n, "m": m, "p": p, "dim_ce_coinv": ce_dim,
            "dim_dgc_trunc_bounded": len(graph_basis), "equal": ce_dim == len(graph_basis),
            "intertwine_ok": ok}
