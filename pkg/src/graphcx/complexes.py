"""Decorated graph complexes: chains, differentials, coproducts and homology.

Chains are computed inside the associative model: a Lie decoration at a
vertex is a combination of cyclic words in the flags of that vertex, so a
decorated graph expands into monomials (graph, one cyclic word per vertex)
which are ribbon graphs.  Isomorphism classes of monomials are found by a
ribbon traversal, and a class is zero when an automorphism acts on it by -1.
The Lie chain space is the span of the expanded Lie decorations, which
embeds into the associative chains compatibly with the differential.

Three complexes are supported: "dgc" (directed graphs, valence >= 2),
"dgc-trunc" (truncated directed graphs) and "ugc" (undirected graphs,
valence >= 3).
"""

import random
from fractions import Fraction
from itertools import product
from math import prod

from . import graphs as gr
from .linalg import IntegerEchelon, SparseMatrix, rank as matrix_rank
from .operad import COM, LIE, cyclic_normal, graft_words, lie_basis_words, lie_dimension

DGC = "dgc"
DGC_TRUNC = "dgc-trunc"
UGC = "ugc"
KINDS = (DGC, DGC_TRUNC, UGC)


def _parity(seq):
    """Parity of the permutation sorting a sequence of distinct values."""
    order = sorted(range(len(seq)), key=seq.__getitem__)
    seen = [False] * len(order)
    par = 0
    for i in range(len(order)):
        if not seen[i]:
            j = i
            while not seen[j]:
                seen[j] = True
                j = order[j]
                par += 1
            par -= 1
    return par & 1


def relabel_sign(G, flag_map, vertex_map, m):
    """Sign of the isomorphism given by (flag_map, vertex_map) on decorations.

    Vertices carry degree 1 - m.  Directed graphs carry one degree-m symbol
    per source; undirected graphs one degree-m symbol per edge together with
    m + 1 copies of its orientation line, so flipping an edge costs (-1)^(m+1).
    """
    e = (1 + m) * _parity(list(vertex_map))
    if G.directed:
        e += m * _parity([flag_map[s] for s in G.sources()])
    else:
        mins = []
        flips = 0
        for f, g in G.edges():
            x, y = flag_map[f], flag_map[g]
            if x > y:
                flips += 1
                mins.append(y)
            else:
                mins.append(x)
        e += m * _parity(mins) + (m + 1) * flips
    return -1 if e % 2 else 1


def relabel_words(words, flag_map, vertex_map):
    if words is None:
        return None
    out = [None] * len(words)
    for v, w in enumerate(words):
        out[vertex_map[v]] = cyclic_normal(flag_map[x] for x in w)
    return tuple(out)


def koszul_sign(degrees, target):
    """Sign of moving graded symbols to the positions target[i]."""
    odd = [i for i, d in enumerate(degrees) if d % 2]
    inv = 0
    for a in range(len(odd)):
        ta = target[odd[a]]
        for b in range(a + 1, len(odd)):
            if ta > target[odd[b]]:
                inv += 1
    return -1 if inv % 2 else 1


# ---------------------------------------------------------------------------
# canonical forms of decorated monomials


def _traverse(x0, sig, mu, src, n, best):
    """Ribbon traversal from x0; returns (code, labels) or None if > best."""
    lab = {x0: 0}
    order = [x0]
    code = [n]
    tied = best is not None
    i = 0
    while i < len(order):
        x = order[i]
        y = sig[x]
        if y not in lab:
            lab[y] = len(order)
            order.append(y)
        z = mu[x]
        if z is None:
            lz = n
        else:
            if z not in lab:
                lab[z] = len(order)
                order.append(z)
            lz = lab[z]
        entry = (lab[y] * (n + 1) + lz) * 2 + src[x]
        code.append(entry)
        if tied:
            b = best[i + 1]
            if entry > b:
                return None
            if entry < b:
                tied = False
        i += 1
    return tuple(code), lab


def _vertex_map_from_flags(G, fm):
    mins = {}
    for f, v in enumerate(G.a):
        x = fm[f]
        if v not in mins or x < mins[v]:
            mins[v] = x
    order = sorted(range(G.nv), key=lambda v: mins.get(v, len(G.a) + v))
    return gr._invert(order)


def ribbon_canonical(G, words, m):
    """Canonical class of a word-decorated graph.

    Returns (key, sign, H, H_words) with x = sign * [H, H_words], or None if
    some automorphism of the monomial acts by -1.
    """
    n_f = G.num_flags
    sig = [0] * n_f
    for w in words:
        k = len(w)
        for i, x in enumerate(w):
            sig[x] = w[(i + 1) % k]
    mu = G.mu
    src = [1 if s else 0 for s in G.src] if G.directed else [0] * n_f
    comps = gr.connected_components(G)
    vf = G.flags_by_vertex()
    results = []
    for comp in comps:
        flags = [f for v in comp for f in vf[v]]
        n = len(flags)
        best = None
        labs = []
        for x0 in flags:
            r = _traverse(x0, sig, mu, src, n, best)
            if r is None:
                continue
            code, lab = r
            if best is None or code < best:
                best = code
                labs = [lab]
            else:
                labs.append(lab)
        nsrc = sum(1 for f in flags if src[f]) if G.directed else n // 2
        results.append((best, labs, len(comp), nsrc))
    results.sort(key=lambda r: r[0])
    # identical neighbouring components: swapping them must act by +1
    for r1, r2 in zip(results, results[1:]):
        if r1[0] == r2[0] and ((1 + m) * r1[2] + m * r1[3]) % 2:
            return None
    offsets = []
    off = 0
    for r in results:
        offsets.append(off)
        off += r[0][0]
    fm = [0] * n_f

    def fill(ci, lab):
        o = offsets[ci]
        for x, l in lab.items():
            fm[x] = o + l

    for ci, r in enumerate(results):
        fill(ci, r[1][0])
    vm = _vertex_map_from_flags(G, fm)
    sign = relabel_sign(G, fm, vm, m)
    for ci, r in enumerate(results):
        for lab in r[1][1:]:
            fill(ci, lab)
            alt = relabel_sign(G, fm, _vertex_map_from_flags(G, fm), m)
            if alt != sign:
                return None
        fill(ci, r[1][0])
    key = tuple(r[0] for r in results)
    H = G.relabel(fm, vm)
    return key, sign, H, relabel_words(words, fm, vm)


_COM_KILL = {}


def com_canonical(G, m):
    """Canonical class of a Com-decorated graph, as in ribbon_canonical."""
    H, iso = gr.canonical_form(G)
    key = gr.canonical_key(H)
    kk = (key, m % 2)
    if kk not in _COM_KILL:
        _COM_KILL[kk] = any(relabel_sign(H, g.flags, g.vertices, m) == -1
                            for g in gr.automorphism_generators(H))
    if _COM_KILL[kk]:
        return None
    return key, relabel_sign(G, iso.flags, iso.vertices, m), H, None


# ---------------------------------------------------------------------------
# differentials on monomials


def directed_term(G, words, s, m):
    """The contraction term of the source flag s: (sign, K, K_words, flag map, vertex map).

    The flag and vertex maps send G to K through the normalization and the
    contraction (removed flags map to None).  Returns None for loops.
    """
    t = G.mu[s]
    if G.a[s] == G.a[t]:
        return None
    N, fm1, vm1 = gr.normalize_for_directed_contraction(G, s)
    sign = relabel_sign(G, fm1, vm1, m)
    s1 = fm1[s]
    if m % 2 and (N.outdeg(0) - 1) % 2:
        sign = -sign
    K, fm2, vm2 = gr.contract_directed(N, s1)
    fm = [fm2[fm1[f]] for f in range(G.num_flags)]
    vm = [vm2[vm1[v]] for v in range(G.nv)]
    if words is None:
        return sign, K, None, fm, vm
    nw = relabel_words(words, fm1, vm1)
    merged = graft_words(nw[0], s1, nw[1], fm1[t])
    out = [None] * K.nv
    out[0] = cyclic_normal(fm2[x] for x in merged)
    for v in range(2, N.nv):
        out[vm2[v]] = cyclic_normal(fm2[x] for x in nw[v])
    return sign, K, tuple(out), fm, vm


def undirected_term(G, words, f, m):
    """The contraction term of the edge through flag f, as directed_term."""
    f, g = sorted((f, G.mu[f]))
    if G.a[f] == G.a[g]:
        return None
    N, fm1, vm1 = gr.normalize_for_undirected_contraction(G, f)
    sign = relabel_sign(G, fm1, vm1, m)
    K, fm2 = gr.contract_undirected(N, 0)
    vm2 = [0] + list(range(N.nv - 1))
    fm = [fm2[fm1[x]] for x in range(G.num_flags)]
    vm = [vm2[vm1[v]] for v in range(G.nv)]
    if words is None:
        return sign, K, None, fm, vm
    nw = relabel_words(words, fm1, vm1)
    merged = graft_words(nw[0], 0, nw[1], fm1[g])
    out = [None] * K.nv
    out[0] = cyclic_normal(fm2[x] for x in merged)
    for v in range(2, N.nv):
        out[vm2[v]] = cyclic_normal(fm2[x] for x in nw[v])
    return sign, K, tuple(out), fm, vm


def contraction_terms(G, words, m):
    """All non-loop contraction terms (flag, sign, K, K_words) of a monomial."""
    out = []
    if G.directed:
        for s, t in G.edges():
            r = directed_term(G, words, s, m)
            if r is not None:
                out.append((s, r[0], r[1], r[2]))
    else:
        for f, g in G.edges():
            r = undirected_term(G, words, f, m)
            if r is not None:
                out.append((f, r[0], r[1], r[2]))
    return out


# ---------------------------------------------------------------------------
# decorations


class _LazyBasis:
    """Indexable basis of cyc Lie on a set of flags, built on demand."""

    def __init__(self, flags):
        self.flags = tuple(flags)
        self.size = lie_dimension(len(flags))
        self._cache = {}

    def __len__(self):
        return self.size

    def __getitem__(self, i):
        if i not in self._cache:
            words = lie_basis_words(self.flags, i)
            self._cache[i] = sorted((c, w) for w, c in words.items())
        return self._cache[i]


def vertex_expansions(G, operad):
    """Per vertex, the basis of cyc C on its flags as lists of (coef, word)."""
    out = []
    for flags in G.flags_by_vertex():
        if operad == COM:
            out.append([[(1, None)]])
            continue
        if len(flags) < 2:
            raise ValueError("vertex of valence %d cannot be decorated" % len(flags))
        out.append(_LazyBasis(flags))
    return out


def expand_tuple(expansions, choice):
    """Monomials (coef, words) of the decoration tuple picking choice[v] at v."""
    terms = [(1, ())]
    for v, i in enumerate(choice):
        nxt = []
        for c, ws in terms:
            for c2, w in expansions[v][i]:
                nxt.append((c * c2, ws + (w,)))
        terms = nxt
    return terms


class DecorationSpace:
    """Decorations of a fixed labeled graph by cyc C, basis = index tuples."""

    def __init__(self, G, m, operad):
        min_val = 2 if G.directed else 3
        if any(k < min_val for k in G.valences()):
            raise ValueError("valence below the minimum for this complex")
        self.graph = G
        self.m = m
        self.operad = operad
        if operad == COM:
            sizes = [1] * G.nv
        else:
            sizes = [lie_dimension(k) for k in G.valences()]
        self.sizes = sizes
        self.basis = list(product(*[range(k) for k in sizes]))
        self.degree = G.degree(m)

    @property
    def dimension(self):
        return len(self.basis)


def decoration_space(G, m, operad):
    return DecorationSpace(G, m, operad)


def _act_on_tuple(space, iso, choice):
    """The action of a graph automorphism on a basis decoration, Lie coordinates."""
    from .operad import act, lie_coordinates, lie_cyclic_basis
    G = space.graph
    vf = G.flags_by_vertex()
    sign = relabel_sign(G, iso.flags, iso.vertices, space.m)
    if space.operad == COM:
        return {tuple(choice): sign}
    per_vertex = [None] * G.nv
    for v, i in enumerate(choice):
        x = lie_cyclic_basis(len(vf[v]), vf[v])[i]
        w = iso.vertices[v]
        y = act({f: iso.flags[f] for f in vf[v]}, x, tuple(vf[w]))
        per_vertex[w] = lie_coordinates(y)
    out = {}
    for combo in product(*[[(j, c) for j, c in enumerate(cs) if c] for cs in per_vertex]):
        c = sign
        for _, a in combo:
            c *= a
        key = tuple(j for j, _ in combo)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def coinvariant_basis(G, space):
    """Basis of the image of the averaging projector over Aut(G).

    Returns a list of vectors {basis tuple: Fraction}.
    """
    auts = gr.automorphisms(G)
    index = {b: i for i, b in enumerate(space.basis)}
    cols = []
    for b in space.basis:
        acc = {}
        for iso in auts:
            for k, c in _act_on_tuple(space, iso, b).items():
                acc[k] = acc.get(k, 0) + Fraction(c, len(auts))
        cols.append({index[k]: v for k, v in acc.items() if v})
    ech = IntegerEchelon()
    out = []
    for col in cols:
        if ech.add(col):
            out.append({space.basis[i]: v for i, v in col.items()})
    return out


# ---------------------------------------------------------------------------
# complexes


class GraphComplex:
    """One of the decorated graph complexes for a fixed operad and twist m."""

    def __init__(self, kind, operad, m):
        if kind not in KINDS:
            raise ValueError("unknown complex kind %r" % (kind,))
        if operad not in (LIE, COM):
            raise ValueError("unknown operad %r" % (operad,))
        self.kind = kind
        self.operad = operad
        self.m = m
        self.directed = kind != UGC
        self._canon = {}
        self._reps = {}
        self._d = {}
        self.sign_hook = None
        # optional replacement for the enumeration step, same signature as graphs()
        self.enumerator = None

    # classes -------------------------------------------------------------

    def canonicalize(self, G, words=None):
        """(key, sign) with the monomial equal to sign * [key]; None if zero."""
        ck = (G, words)
        if ck in self._canon:
            return self._canon[ck]
        if self.operad == COM:
            r = com_canonical(G, self.m)
        else:
            r = ribbon_canonical(G, words, self.m)
        if r is None:
            out = None
        else:
            key, sign, H, hw = r
            if key not in self._reps:
                self._reps[key] = (H, hw)
            out = (key, sign)
        self._canon[ck] = out
        return out

    def representative(self, key):
        return self._reps[key]

    def degree_of(self, key):
        return self._reps[key][0].degree(self.m)

    def monomial_vector(self, G, words=None, coef=1):
        r = self.canonicalize(G, words)
        if r is None:
            return {}
        return {r[0]: coef * r[1]}

    def decoration_vectors(self, G, choices=None):
        """Chain vectors of the basis decorations of G (all, or the listed ones)."""
        exps = vertex_expansions(G, self.operad)
        if choices is None:
            choices = product(*[range(len(e)) for e in exps])
        out = []
        for choice in choices:
            vec = {}
            for c, ws in expand_tuple(exps, choice):
                r = self.canonicalize(G, None if self.operad == COM else ws)
                if r is not None:
                    k, s = r
                    vec[k] = vec.get(k, 0) + c * s
            out.append({k: v for k, v in vec.items() if v})
        return out

    def graph_basis(self, G):
        """Independent chain vectors spanning the decorated class of G."""
        ech = IntegerEchelon()
        return [v for v in self.decoration_vectors(G) if v and ech.add(v)]

    # differential ----------------------------------------------------------

    def _term_sign(self, sign, G, flag):
        if self.sign_hook is not None:
            return self.sign_hook(sign, G, flag)
        return sign

    def d_monomial(self, G, words=None, part=None):
        """d of a monomial as a chain vector.  part selects 'd1' or 'd2' terms."""
        out = {}
        for flag, sign, K, kw in contraction_terms(G, words, self.m):
            if part is not None:
                bivalent = G.directed and G.valence(G.a[G.mu[flag]]) == 2
                if (part == "d2") != bivalent:
                    continue
            sign = self._term_sign(sign, G, flag)
            r = self.canonicalize(K, kw)
            if r is not None:
                k, s = r
                out[k] = out.get(k, 0) + sign * s
        return {k: v for k, v in out.items() if v}

    def d_key(self, key, part=None):
        ck = (key, part)
        if ck not in self._d:
            H, hw = self._reps[key]
            self._d[ck] = self.d_monomial(H, hw, part)
        return self._d[ck]

    def d(self, vec, part=None):
        out = {}
        for k, c in vec.items():
            for k2, c2 in self.d_key(k, part).items():
                out[k2] = out.get(k2, 0) + c * c2
        return {k: v for k, v in out.items() if v}

    # coproduct -----------------------------------------------------------

    def _symbol_degrees(self, G, part_of):
        """Graded symbols of a monomial with their part (0 or 1) labels."""
        m = self.m
        syms = []
        for v in range(G.nv):
            syms.append((1, part_of[v]))
        for v in range(G.nv):
            syms.append((-m, part_of[v]))
        for f, g in G.edges():
            syms.append((m, part_of[G.a[f]]))
        return syms

    def coproduct_monomial(self, G, words=None):
        """Delta of a monomial: {(key1, key2): coef}."""
        m = self.m
        out = {}
        allv = set(range(G.nv))
        for sub in gr.neighbor_closed_subsets(G):
            rest = tuple(sorted(allv - set(sub)))
            part_of = [0 if v in sub else 1 for v in range(G.nv)]
            syms = self._symbol_degrees(G, part_of)
            # target order: part 0 symbols (vertices, decorations, edges) then part 1
            nv = G.nv
            ranks = []
            for i, (deg, p) in enumerate(syms):
                kind = 0 if i < nv else (1 if i < 2 * nv else 2)
                ranks.append((p, kind, i))
            tgt = [0] * len(syms)
            for pos, (_, _, i) in enumerate(sorted(ranks)):
                tgt[i] = pos
            sign = koszul_sign([d for d, _ in syms], tgt)
            if (m * len(sub) * len(rest)) % 2:
                sign = -sign
            pieces = []
            for vs in (sub, rest):
                H, fm, vm = gr.induced_subgraph(G, vs)
                if words is None:
                    hw = None
                else:
                    hw = tuple(cyclic_normal(fm[x] for x in words[v]) for v in vs)
                pieces.append(self.canonicalize(H, hw))
            if pieces[0] is None or pieces[1] is None:
                continue
            k = (pieces[0][0], pieces[1][0])
            out[k] = out.get(k, 0) + sign * pieces[0][1] * pieces[1][1]
        return {k: v for k, v in out.items() if v}

    def coproduct(self, vec):
        out = {}
        for k, c in vec.items():
            H, hw = self._reps[k]
            for k2, c2 in self.coproduct_monomial(H, hw).items():
                out[k2] = out.get(k2, 0) + c * c2
        return {k: v for k, v in out.items() if v}

    def empty_key(self):
        G = gr.DirectedGraph([], [], [], 0) if self.directed else gr.UndirectedGraph([], [], 0)
        return self.canonicalize(G, None if self.operad == COM else ())[0]

    def counit(self, vec):
        return vec.get(self.empty_key(), 0)

    def disjoint_union(self, parts):
        """Monomial (G, words) of the disjoint union of monomials, in order."""
        a, mu, src, words = [], [], [], []
        fo = 0
        vo = 0
        for G, w in parts:
            a.extend(x + vo for x in G.a)
            mu.extend(None if y is None else y + fo for y in G.mu)
            if G.directed:
                src.extend(G.src)
            if w is not None:
                words.extend(tuple(x + fo for x in ww) for ww in w)
            fo += G.num_flags
            vo += G.nv
        if self.directed:
            U = gr.DirectedGraph(a, mu, src, vo)
        else:
            U = gr.UndirectedGraph(a, mu, vo)
        return U, (None if self.operad == COM else tuple(words))

    # graphs ----------------------------------------------------------------

    def graphs(self, genus, max_degree=None, max_edges=None):
        """Graph class representatives of the given genus."""
        if self.enumerator is not None:
            out = self.enumerator(self.kind, genus, self.m, max_degree, max_edges)
        else:
            out = self.enumerate(genus, max_degree, max_edges)
        if max_degree is not None:
            out = [G for G in out if G.degree(self.m) <= max_degree]
        if max_edges is not None:
            out = [G for G in out if G.num_edges <= max_edges]
        return out

    def enumerate(self, genus, max_degree=None, max_edges=None):
        """Uncached enumeration behind graphs()."""
        if self.kind == UGC:
            nv = None if max_edges is None else max_edges - genus + 1
            return gr.enumerate_undirected(genus, max_vertices=nv)
        if self.kind == DGC_TRUNC and max_degree is not None:
            return gr.enumerate_directed_truncated(genus, max_degree, self.m)
        if max_edges is None:
            raise ValueError("directed graphs need an edge bound")
        out = []
        for nv in range(1, max_edges - genus + 2):
            out.extend(gr.enumerate_directed(genus, nv))
        if self.kind == DGC_TRUNC:
            out = [G for G in out if G.is_truncated()]
        return out


# ---------------------------------------------------------------------------
# blocks and homology


def degree_window(genus, m):
    """Degrees where undirected chains of the given genus can be nonzero."""
    if genus <= 1:
        return (1, 0)
    return (m * (genus - 1) + 1, (m + 2) * (genus - 1))


class ComplexBlock:
    """Chains of one genus in a degree range, with differential matrices.

    basis[p] lists chain vectors; matrices[p] is the matrix of d_p with one
    row per basis vector of degree p, in the key coordinates of degree p - 1.
    """

    def __init__(self, complex_, genus, lo, hi, progress=None):
        self.complex = complex_
        self.genus = genus
        self.lo = lo
        self.hi = hi
        cx = complex_
        graphs = cx.graphs(genus, max_degree=hi + 1)
        self.basis = {}
        for p in range(lo - 1, hi + 2):
            self.basis[p] = []
        for G in graphs:
            p = G.degree(cx.m)
            if lo - 1 <= p <= hi + 1:
                self.basis[p].extend(cx.graph_basis(G))
        self.matrices = {}
        for p in range(lo, hi + 2):
            if progress:
                progress("block genus=%d degree=%d basis=%d" % (genus, p, len(self.basis[p])))
            rows = [cx.d(v) for v in self.basis[p]]
            cols = {}
            for r in rows:
                for k in r:
                    cols.setdefault(k, None)
            index = {k: i for i, k in enumerate(sorted(cols))}
            self.matrices[p] = SparseMatrix(
                len(rows), len(index),
                [(i, index[k], c) for i, r in enumerate(rows) for k, c in r.items()])

    def dim(self, p):
        return len(self.basis.get(p, []))

    def ranks(self, method="exact"):
        return {p: matrix_rank(M, method) for p, M in self.matrices.items()}

    def records(self, method="exact"):
        cx = self.complex
        rk = self.ranks(method)
        out = []
        for p in range(self.lo, self.hi + 1):
            rout = rk.get(p, 0)
            rin = rk.get(p + 1, 0)
            dimc = self.dim(p)
            out.append({"kind": cx.kind, "operad": cx.operad, "m": cx.m, "genus": self.genus,
                        "degree": p, "dim_chains": dimc, "rank_d_out": rout,
                        "rank_d_in": rin, "dim_H": dimc - rout - rin})
        return out


def homology(kind, operad, m, genus, lo, hi, method="exact", progress=None, complex_=None):
    """Homology records for degrees lo..hi."""
    cx = complex_ or GraphComplex(kind, operad, m)
    if hi < lo:
        return []
    return ComplexBlock(cx, genus, lo, hi, progress).records(method)


def full_range(kind, m, genus):
    """A degree range containing every nonzero chain of the given genus."""
    lo, hi = degree_window(genus, m)
    if kind == DGC_TRUNC and genus >= 2:
        ne = 3 * (genus - 1)
        hi = max(hi, (m + 2) * (genus - 1) + ne)
    return lo, hi


def compare_directed_undirected(operad, m, genus, lo, hi, progress=None):
    """Compare homology of truncated directed and undirected complexes degreewise."""
    if operad not in (LIE, COM):
        raise ValueError("operad must satisfy cyc C(2) = span{id}")
    if hi < lo:
        return True, []
    a = homology(DGC_TRUNC, operad, m, genus, lo, hi, progress=progress)
    b = homology(UGC, operad, m, genus, lo, hi, progress=progress)
    table = [{"degree": x["degree"], "dgc_trunc": x["dim_H"], "ugc": y["dim_H"]}
             for x, y in zip(a, b)]
    return all(t["dgc_trunc"] == t["ugc"] for t in table), table


def euler_characteristic(records):
    """(chi from chains, chi from homology) for a list of homology records."""
    xc = sum((-1) ** r["degree"] * r["dim_chains"] for r in records)
    xh = sum((-1) ** r["degree"] * r["dim_H"] for r in records)
    return xc, xh


# ---------------------------------------------------------------------------
# bigrading of the truncated complex


def bivalent_count(G):
    return sum(1 for k in G.valences() if k == 2)


def bigrade_check(cx, vectors):
    """Check d = d1 + d2, d1 d1 = d2 d2 = d1 d2 + d2 d1 = 0 on the given vectors."""
    if cx.kind != DGC_TRUNC:
        raise ValueError("bigrading is defined on the truncated directed complex")
    for v in vectors:
        d1 = cx.d(v, "d1")
        d2 = cx.d(v, "d2")
        total = cx.d(v)
        sum12 = dict(d1)
        for k, c in d2.items():
            sum12[k] = sum12.get(k, 0) + c
        if {k: c for k, c in sum12.items() if c} != total:
            return False
        mixed = _add(cx.d(d1, "d2"), cx.d(d2, "d1"))
        if mixed or cx.d(d1, "d1") or cx.d(d2, "d2"):
            return False
    return True


def _add(x, y):
    out = dict(x)
    for k, c in y.items():
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


# ---------------------------------------------------------------------------
# the cube of directions over a fixed undirected graph


class DirectionCube:
    """Decorations of Direct(G, o) for all directions o, with d = sum of d+ and d-."""

    def __init__(self, G, m, operad):
        self.G = G
        self.m = m
        self.operad = operad
        self.edges = G.edges()
        self.dirs = gr.directions(G)
        self._direct = {}

    def directed(self, o):
        if o not in self._direct:
            D, fn, vn = gr.direct(self.G, o, names=True)
            self._direct[o] = (D, fn, vn, {n: i for i, n in enumerate(fn)},
                               {n: i for i, n in enumerate(vn)})
        return self._direct[o]

    def basis(self, o):
        """Chain vectors {(o, words): coef} of the basis decorations."""
        D = self.directed(o)[0]
        exps = vertex_expansions(D, self.operad)
        out = []
        for choice in product(*[range(len(e)) for e in exps]):
            vec = {}
            for c, ws in expand_tuple(exps, choice):
                k = (o, None if self.operad == COM else ws)
                vec[k] = vec.get(k, 0) + c
            out.append(vec)
        return out

    def partial(self, o, words, i, which):
        """d+ (which=1) or d- (which=-1) at the zero edge i: (sign, o', words')."""
        D, fn, vn, _, _ = self.directed(o)
        f, g = self.edges[i]
        s = fn.index(("s+", i) if which == 1 else ("s-", i))
        r = directed_term(D, words, s, self.m)
        sign, K, kw, fm, vm = r
        kn = [None] * K.num_flags
        for x, y in enumerate(fm):
            if y is not None:
                kn[y] = fn[x]
        if which == 1:
            ren = {("s-", i): ("f", f), ("t-", i): ("f", g)}
            merged = ("v", self.G.a[g])
        else:
            ren = {("s+", i): ("f", g), ("t+", i): ("f", f)}
            merged = ("v", self.G.a[f])
        kn = [ren.get(x, x) for x in kn]
        kvn = [None] * K.nv
        for v, y in enumerate(vm):
            if kvn[y] is None or vn[v][0] == "v":
                kvn[y] = vn[v]
        kvn[0] = merged
        o2 = o[:i] + (which,) + o[i + 1:]
        D2, _, _, fidx, vidx = self.directed(o2)
        tfm = [fidx[x] for x in kn]
        tvm = [vidx[x] for x in kvn]
        sign *= relabel_sign(K, tfm, tvm, self.m)
        if kw is not None:
            kw = relabel_words(kw, tfm, tvm)
        return sign, o2, kw

    def d(self, vec):
        out = {}
        for (o, words), c in vec.items():
            for i, x in enumerate(o):
                if x != gr.ZERO:
                    continue
                for which in (1, -1):
                    sign, o2, w2 = self.partial(o, words, i, which)
                    k = (o2, w2)
                    out[k] = out.get(k, 0) + c * sign
        return {k: v for k, v in out.items() if v}

    def c_map(self, o_plus, words, i):
        """c_{G,e}: Dec(Direct(G, o with e = +)) -> Dec(Direct(G, o with e = -))."""
        f, g = self.edges[i]
        Dp, fnp, _, _, _ = self.directed(o_plus)
        o_minus = o_plus[:i] + (gr.MINUS,) + o_plus[i + 1:]
        Dm, fnm, _, fidx, _ = self.directed(o_minus)
        fm = [fidx[x] for x in fnp]
        vm = list(range(Dp.nv))
        sm = Dm.sources()
        pos = {x: j for j, x in enumerate(sm)}
        seq = []
        for s in Dp.sources():
            x = fnp[s]
            if x == ("f", f):
                x = ("f", g)
            seq.append(pos[fidx[x]])
        sign = -1 if (self.m * _parity(seq)) % 2 else 1
        w2 = None if words is None else relabel_words(words, fm, vm)
        return sign, o_minus, w2

    def levels(self):
        out = {}
        for o in self.dirs:
            out.setdefault(sum(1 for x in o if x == gr.ZERO), []).append(o)
        return out


def _rows(vectors):
    keys = {}
    for v in vectors:
        for k in v:
            keys.setdefault(k, len(keys))
    return [{keys[k]: c for k, c in v.items()} for v in vectors]


def cube_check(G, m, operad):
    """True iff the direction cube over G has no homology in positive degree."""
    cube = DirectionCube(G, m, operad)
    lv = cube.levels()
    dims = {}
    ranks = {}
    for l, os in lv.items():
        vs = [v for o in os for v in cube.basis(o)]
        dims[l] = matrix_rank(_rows(vs))
        images = [cube.d(v) for v in vs]
        ranks[l] = matrix_rank(_rows(images)) if images else 0
    return all(dims[l] - ranks[l] - ranks.get(l + 1, 0) == 0 for l in lv if l > 0)


def cube_homology(G, m, operad):
    cube = DirectionCube(G, m, operad)
    lv = cube.levels()
    out = {}
    ranks = {}
    dims = {}
    for l, os in lv.items():
        vs = [v for o in os for v in cube.basis(o)]
        dims[l] = matrix_rank(_rows(vs))
        ranks[l] = matrix_rank(_rows([cube.d(v) for v in vs])) if vs else 0
    for l in sorted(lv):
        out[l] = dims[l] - ranks[l] - ranks.get(l + 1, 0)
    return out


def sample_choices(sizes, limit, seed=0):
    """All index tuples if there are at most limit, else a seeded random sample."""
    total = prod(sizes)
    if total <= limit:
        return list(product(*[range(k) for k in sizes]))
    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < limit:
        t = tuple(rng.randrange(k) for k in sizes)
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def lie_sizes(G, operad):
    if operad == COM:
        return [1] * G.nv
    return [lie_dimension(k) for k in G.valences()]


__all__ = [
    "DGC", "DGC_TRUNC", "UGC", "GraphComplex", "ComplexBlock", "DecorationSpace",
    "DirectionCube", "decoration_space", "coinvariant_basis", "homology",
    "compare_directed_undirected", "euler_characteristic", "cube_check",
    "cube_homology", "bigrade_check", "relabel_sign", "degree_window",
    "full_range",
]
