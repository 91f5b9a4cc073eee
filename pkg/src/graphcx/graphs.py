"""Graphs with linearly ordered flags and vertices.

Flags and vertices are the integers 0..k-1 in their linear order.  An
undirected graph is (a, mu): a[f] is the vertex of flag f and mu the
fixed-point-free involution pairing flags into edges.  A directed graph
additionally marks each flag as a source or a target; mu then pairs each
source with its target.  A flag whose partner is None is an external leg.
"""

from collections import namedtuple
from itertools import permutations, product

GraphIso = namedtuple("GraphIso", ["flags", "vertices"])

PLUS, ZERO, MINUS = 1, 0, -1


def _invert(order):
    inv = [0] * len(order)
    for i, x in enumerate(order):
        inv[x] = i
    return inv


class _Base:
    __slots__ = ()

    @property
    def num_flags(self):
        return len(self.a)

    @property
    def num_vertices(self):
        return self.nv

    @property
    def num_edges(self):
        return len(self.edges())

    def vertex_flags(self, v):
        return [f for f, x in enumerate(self.a) if x == v]

    def flags_by_vertex(self):
        out = [[] for _ in range(self.nv)]
        for f, x in enumerate(self.a):
            out[x].append(f)
        return out

    def valence(self, v):
        return sum(1 for x in self.a if x == v)

    def valences(self):
        out = [0] * self.nv
        for x in self.a:
            out[x] += 1
        return out

    def genus(self):
        return 1 + self.num_edges - self.nv

    def is_loop(self, f):
        g = self.mu[f]
        return g is not None and self.a[f] == self.a[g]

    def is_empty(self):
        return self.nv == 0

    def __eq__(self, other):
        return type(self) is type(other) and self._data() == other._data()

    def __hash__(self):
        return hash(self._data())

    def __repr__(self):
        return self.to_text()

    def order_preserving(self):
        return all(self.a[i] <= self.a[i + 1] for i in range(len(self.a) - 1))


class UndirectedGraph(_Base):
    __slots__ = ("a", "mu", "nv")
    directed = False

    def __init__(self, a, mu, nv=None):
        a = tuple(a)
        mu = tuple(mu)
        if nv is None:
            nv = max(a) + 1 if a else 0
        if len(mu) != len(a):
            raise ValueError("a and mu must have one entry per flag")
        for f, g in enumerate(mu):
            if not 0 <= g < len(a) or g == f or mu[g] != f:
                raise ValueError("mu is not a fixed-point-free involution")
        if any(not 0 <= x < nv for x in a):
            raise ValueError("vertex index out of range")
        self.a = a
        self.mu = mu
        self.nv = nv

    def _data(self):
        return ("U", self.a, self.mu, self.nv)

    def edges(self):
        """Edges (f, f') with f < f', ordered by their smaller flag."""
        return [(f, g) for f, g in enumerate(self.mu) if f < g]

    def degree(self, m):
        return self.nv * (1 - m) + m * self.num_edges

    def relabel(self, flag_map, vertex_map):
        """The graph obtained by renaming flag f to flag_map[f] and so on."""
        n = len(self.a)
        a = [0] * n
        mu = [0] * n
        for f in range(n):
            a[flag_map[f]] = vertex_map[self.a[f]]
            mu[flag_map[f]] = flag_map[self.mu[f]]
        return UndirectedGraph(a, mu, self.nv)

    def vertex_signature(self, v):
        loops = sum(1 for f in self.vertex_flags(v) if self.is_loop(f)) // 2
        return (self.valence(v), loops)

    def to_text(self):
        pairs = ",".join("%d-%d" % (f + 1, g + 1) for f, g in self.edges())
        verts = ",".join(str(x + 1) for x in self.a)
        return "U|F=%d|mu=%s|a=%s" % (len(self.a), pairs, verts)


class DirectedGraph(_Base):
    __slots__ = ("a", "mu", "src", "nv")
    directed = True

    def __init__(self, a, mu, src, nv=None):
        a = tuple(a)
        mu = tuple(mu)
        src = tuple(bool(x) for x in src)
        if nv is None:
            nv = max(a) + 1 if a else 0
        if not len(a) == len(mu) == len(src):
            raise ValueError("a, mu and src must have one entry per flag")
        for f, g in enumerate(mu):
            if g is None:
                continue
            if not 0 <= g < len(a) or mu[g] != f or src[f] == src[g]:
                raise ValueError("mu must pair each source with a target")
        if any(not 0 <= x < nv for x in a):
            raise ValueError("vertex index out of range")
        self.a = a
        self.mu = mu
        self.src = src
        self.nv = nv

    def _data(self):
        return ("D", self.a, self.mu, self.src, self.nv)

    def sources(self):
        return [f for f, s in enumerate(self.src) if s]

    def targets(self):
        return [f for f, s in enumerate(self.src) if not s]

    def legs(self):
        return [f for f, g in enumerate(self.mu) if g is None]

    def edges(self):
        """Internal edges (s, mu(s)) ordered by their source flag."""
        return [(f, self.mu[f]) for f in range(len(self.a)) if self.src[f] and self.mu[f] is not None]

    def outdeg(self, v):
        return sum(1 for f, x in enumerate(self.a) if x == v and self.src[f])

    def indeg(self, v):
        return sum(1 for f, x in enumerate(self.a) if x == v and not self.src[f])

    def degree(self, m):
        return self.nv * (1 - m) + m * len(self.sources())

    def relabel(self, flag_map, vertex_map):
        n = len(self.a)
        a = [0] * n
        mu = [None] * n
        src = [False] * n
        for f in range(n):
            g = flag_map[f]
            a[g] = vertex_map[self.a[f]]
            mu[g] = None if self.mu[f] is None else flag_map[self.mu[f]]
            src[g] = self.src[f]
        return DirectedGraph(a, mu, src, self.nv)

    def vertex_signature(self, v):
        fl = self.vertex_flags(v)
        loops = sum(1 for f in fl if self.src[f] and self.is_loop(f))
        out = sum(1 for f in fl if self.src[f])
        return (len(fl), out, len(fl) - out, loops)

    def is_truncated(self):
        """All valences at least two, and bivalent vertices are sinks."""
        for v in range(self.nv):
            fl = self.vertex_flags(v)
            if len(fl) < 2:
                return False
            if len(fl) == 2 and any(self.src[f] for f in fl):
                return False
        return True

    def to_text(self):
        if self.legs():
            raise ValueError("text format covers graphs without external legs")
        S = ",".join(str(f + 1) for f in self.sources())
        T = ",".join(str(f + 1) for f in self.targets())
        pairs = ",".join("%d-%d" % (s + 1, t + 1) for s, t in self.edges())
        verts = ",".join(str(x + 1) for x in self.a)
        return "D|S=%s|T=%s|mu=%s|a=%s" % (S, T, pairs, verts)


def _split_list(text):
    return [int(x) for x in text.split(",")] if text else []


def from_text(line):
    """Parse one line of the text format back into a graph."""
    parts = line.strip().split("|")
    fields = dict(p.split("=", 1) for p in parts[1:])
    a = [x - 1 for x in _split_list(fields["a"])]
    pairs = [tuple(int(y) - 1 for y in p.split("-")) for p in fields["mu"].split(",") if p]
    if parts[0] == "U":
        k = int(fields["F"])
        if len(a) != k:
            raise ValueError("flag count mismatch")
        mu = [None] * k
        for f, g in pairs:
            mu[f] = g
            mu[g] = f
        return UndirectedGraph(a, mu)
    if parts[0] == "D":
        S = [x - 1 for x in _split_list(fields["S"])]
        k = len(S) + len(_split_list(fields["T"]))
        if len(a) != k:
            raise ValueError("flag count mismatch")
        mu = [None] * k
        src = [False] * k
        for s in S:
            src[s] = True
        for s, t in pairs:
            mu[s] = t
            mu[t] = s
        return DirectedGraph(a, mu, src)
    raise ValueError("unknown graph kind %r" % parts[0])


# ---------------------------------------------------------------------------
# isomorphisms


def _edge_key(G, e, vmap=None):
    f, g = e
    u, w = G.a[f], G.a[g]
    if vmap is not None:
        u, w = vmap[u], vmap[w]
    if G.directed:
        return (u, w)
    return (min(u, w), max(u, w))


def _edge_groups(G, vmap=None):
    groups = {}
    for e in G.edges():
        groups.setdefault(_edge_key(G, e, vmap), []).append(e)
    return groups


def _flag_assignments(G, H, vmap):
    """All flag bijections over a fixed vertex bijection G -> H."""
    gg = _edge_groups(G, vmap)
    hg = _edge_groups(H)
    if {k: len(v) for k, v in gg.items()} != {k: len(v) for k, v in hg.items()}:
        return
    keys = sorted(gg)
    choices = []
    for k in keys:
        src_edges = gg[k]
        tgt_edges = hg[k]
        opts = []
        for perm in permutations(tgt_edges):
            loop = k[0] == k[1]
            if G.directed or not loop:
                opts.append([(e, e2, False) for e, e2 in zip(src_edges, perm)])
            else:
                for flips in product((False, True), repeat=len(src_edges)):
                    opts.append([(e, e2, fl) for e, e2, fl in zip(src_edges, perm, flips)])
        choices.append(opts)
    for combo in product(*choices):
        fmap = [None] * len(G.a)
        for block in combo:
            for (f, g), (f2, g2), flip in block:
                if G.directed:
                    fmap[f], fmap[g] = f2, g2
                elif G.a[f] == G.a[g]:
                    if flip:
                        fmap[f], fmap[g] = g2, f2
                    else:
                        fmap[f], fmap[g] = f2, g2
                elif vmap[G.a[f]] == H.a[f2]:
                    fmap[f], fmap[g] = f2, g2
                else:
                    fmap[f], fmap[g] = g2, f2
        yield tuple(fmap)


def _multiplicities(G):
    mult = {}
    for e in G.edges():
        k = _edge_key(G, e)
        mult[k] = mult.get(k, 0) + 1
    return mult


def isomorphisms(G, H):
    """Every isomorphism G -> H as GraphIso(flag map, vertex map)."""
    if type(G) is not type(H):
        return []
    if (G.num_flags, G.nv) != (H.num_flags, H.nv):
        return []
    if G.directed and (G.legs() or H.legs()):
        raise NotImplementedError("isomorphisms of graphs with external legs")
    sigG = [G.vertex_signature(v) for v in range(G.nv)]
    sigH = [H.vertex_signature(v) for v in range(H.nv)]
    if sorted(sigG) != sorted(sigH):
        return []
    mG = _multiplicities(G)
    mH = _multiplicities(H)
    n = G.nv
    out = []
    vmap = [None] * n
    used = [False] * n

    def pair_ok(u, w):
        x, y = vmap[u], vmap[w]
        if G.directed:
            return mG.get((u, w), 0) == mH.get((x, y), 0) and mG.get((w, u), 0) == mH.get((y, x), 0)
        return mG.get((min(u, w), max(u, w)), 0) == mH.get((min(x, y), max(x, y)), 0)

    def rec(u):
        if u == n:
            for fm in _flag_assignments(G, H, vmap):
                out.append(GraphIso(fm, tuple(vmap)))
            return
        for x in range(n):
            if used[x] or sigH[x] != sigG[u]:
                continue
            vmap[u] = x
            if all(pair_ok(w, u) for w in range(u + 1)):
                used[x] = True
                rec(u + 1)
                used[x] = False
            vmap[u] = None

    rec(0)
    return out


def automorphisms(G):
    return isomorphisms(G, G)


# ---------------------------------------------------------------------------
# canonical forms


def refined_colors(G):
    """Iterated neighbourhood refinement of vertex invariants."""
    n = G.nv
    flags = G.flags_by_vertex()
    sig = [G.vertex_signature(v) for v in range(n)]
    ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
    col = [ranks[s] for s in sig]
    while True:
        sig = []
        for v in range(n):
            nb = []
            for f in flags[v]:
                g = G.mu[f]
                if g is None:
                    nb.append((-1, G.src[f] if G.directed else 0))
                    continue
                w = G.a[g]
                if w == v:
                    continue
                nb.append((col[w], G.src[f] if G.directed else 0))
            sig.append((col[v], tuple(sorted(nb))))
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(ranks) == len(set(col)):
            return new
        col = new


def _vertex_pairs(G):
    out = []
    for f, g in G.edges():
        out.append((G.a[f], G.a[g]))
    return out


def _code(G, pairs, rank):
    if G.directed:
        return tuple(sorted((rank[u], rank[w]) for u, w in pairs))
    return tuple(sorted((min(rank[u], rank[w]), max(rank[u], rank[w])) for u, w in pairs))


def minimal_orderings(G):
    """The minimal edge code over vertex rankings and every ranking attaining it."""
    col = refined_colors(G)
    classes = {}
    for v, c in enumerate(col):
        classes.setdefault(c, []).append(v)
    blocks = [classes[c] for c in sorted(classes)]
    pairs = _vertex_pairs(G)
    best = None
    winners = []
    for combo in product(*[permutations(b) for b in blocks]):
        rank = [0] * G.nv
        r = 0
        for block in combo:
            for v in block:
                rank[v] = r
                r += 1
        code = _code(G, pairs, rank)
        if best is None or code < best:
            best = code
            winners = [rank]
        elif code == best:
            winners.append(rank)
    return best, winners


def graph_from_code(directed, nv, code):
    """Canonical labeled graph: flags sorted by (vertex, edge index, end)."""
    half = []
    for i, (u, w) in enumerate(code):
        half.append((u, i, 0))
        half.append((w, i, 1))
    half.sort()
    pos = {h[1:]: k for k, h in enumerate(half)}
    a = [h[0] for h in half]
    mu = [0] * len(half)
    src = [False] * len(half)
    for (u, i, end), k in ((h, pos[h[1:]]) for h in half):
        mu[k] = pos[(i, 1 - end)]
        src[k] = end == 0
    if directed:
        return DirectedGraph(a, mu, src, nv)
    return UndirectedGraph(a, mu, nv)


def _lift(G, H, vmap):
    """One flag bijection over the vertex bijection vmap (G -> H)."""
    for fm in _flag_assignments(G, H, vmap):
        return fm
    raise ValueError("vertex map does not lift")


def canonical_form(G):
    """(canonical graph, GraphIso from G) -- equal for isomorphic inputs."""
    if G.directed and G.legs():
        raise NotImplementedError("canonical form of graphs with external legs")
    code, winners = minimal_orderings(G)
    H = graph_from_code(G.directed, G.nv, code)
    vmap = winners[0]
    return H, GraphIso(_lift(G, H, vmap), tuple(vmap))


def canonical_key(G):
    code, _ = minimal_orderings(G)
    return ("D" if G.directed else "U", G.nv, code)


def automorphism_generators(H):
    """Generators of Aut(H) as flag/vertex maps.

    Lifts of all vertex automorphisms, transpositions of parallel edges and,
    for undirected loops, the swap of the two flags of the loop.
    """
    _, winners = minimal_orderings(H)
    base = winners[0]
    inv = _invert(base)
    gens = []
    for w in winners:
        vm = [0] * H.nv
        for v in range(H.nv):
            vm[v] = inv[w[v]]
        # vm maps v to the vertex occupying w[v]'s rank in the base ranking
        gens.append(GraphIso(_lift(H, H, vm), tuple(vm)))
    ident_v = list(range(H.nv))
    for k, group in _edge_groups(H).items():
        for (f1, g1), (f2, g2) in zip(group, group[1:]):
            fm = list(range(H.num_flags))
            fm[f1], fm[f2] = f2, f1
            fm[g1], fm[g2] = g2, g1
            gens.append(GraphIso(tuple(fm), tuple(ident_v)))
        if not H.directed and k[0] == k[1]:
            for f, g in group:
                fm = list(range(H.num_flags))
                fm[f], fm[g] = g, f
                gens.append(GraphIso(tuple(fm), tuple(ident_v)))
    return gens


# ---------------------------------------------------------------------------
# components and subgraphs


def connected_components(G):
    """Vertex sets of the connected components, ordered by smallest vertex."""
    parent = list(range(G.nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f, g in enumerate(G.mu):
        if g is not None:
            ru, rw = find(G.a[f]), find(G.a[g])
            if ru != rw:
                parent[max(ru, rw)] = min(ru, rw)
    comps = {}
    for v in range(G.nv):
        comps.setdefault(find(v), []).append(v)
    return [tuple(c) for _, c in sorted(comps.items())]


def neighbor_closed_subsets(G):
    """All vertex sets closed under following edges, as sorted tuples."""
    comps = connected_components(G)
    out = []
    for choice in product((False, True), repeat=len(comps)):
        vs = sorted(v for c, pick in zip(comps, choice) if pick for v in c)
        out.append(tuple(vs))
    out.sort(key=lambda s: (len(s), s))
    return out


def is_neighbor_closed(G, vertices):
    vs = set(vertices)
    for f, g in enumerate(G.mu):
        if g is not None and (G.a[f] in vs) != (G.a[g] in vs):
            return False
    return True


def induced_subgraph(G, vertices):
    """The subgraph on a neighbor-closed vertex set, orders restricted."""
    if not is_neighbor_closed(G, vertices):
        raise ValueError("vertex set is not neighbor-closed")
    vs = sorted(vertices)
    vmap = {v: i for i, v in enumerate(vs)}
    keep = [f for f in range(G.num_flags) if G.a[f] in vmap]
    fmap = {f: i for i, f in enumerate(keep)}
    a = [vmap[G.a[f]] for f in keep]
    mu = [None if G.mu[f] is None else fmap[G.mu[f]] for f in keep]
    if G.directed:
        return DirectedGraph(a, mu, [G.src[f] for f in keep], len(vs)), fmap, vmap
    return UndirectedGraph(a, mu, len(vs)), fmap, vmap


def is_connected(G):
    return len(connected_components(G)) <= 1


# ---------------------------------------------------------------------------
# contraction


def normalize_for_directed_contraction(D, s):
    """Reorder so the contracted edge sits where the contraction sign is defined.

    a(s) and a(mu(s)) become the first two vertices, flags are grouped by
    vertex, s is the last flag of its vertex and mu(s) the first of its.
    Returns (graph, flag map, vertex map).
    """
    t = D.mu[s]
    if not D.src[s] or t is None:
        raise ValueError("expected an internal source flag")
    v, w = D.a[s], D.a[t]
    if v == w:
        raise ValueError("loop edge")
    vf = D.flags_by_vertex()
    verts = [v, w] + [x for x in range(D.nv) if x != v and x != w]
    order = [f for f in vf[v] if f != s] + [s] + [t] + [f for f in vf[w] if f != t]
    for x in verts[2:]:
        order.extend(vf[x])
    fmap = _invert(order)
    vmap = _invert(verts)
    return D.relabel(fmap, vmap), fmap, vmap


def is_normalized_directed(D, s):
    t = D.mu[s]
    if t is None or D.a[s] != 0 or D.a[t] != 1 or not D.order_preserving():
        return False
    return s == max(D.vertex_flags(0)) and t == min(D.vertex_flags(1))


def contract_directed(D, s):
    """Contract the edge (s, mu(s)); returns (graph, flag map, vertex map).

    The removed flags map to None, both end vertices map to the new first vertex.
    """
    t = D.mu[s]
    if not D.src[s] or t is None:
        raise ValueError("expected an internal source flag")
    v, w = D.a[s], D.a[t]
    if v == w:
        raise ValueError("cannot contract a loop")
    vf = D.flags_by_vertex()
    order = ([f for f in vf[v] if f < s] + [f for f in vf[w] if f > t]
             + [f for f in vf[w] if f < t] + [f for f in vf[v] if f > s])
    order += [f for f in range(D.num_flags) if D.a[f] != v and D.a[f] != w]
    fmap = [None] * D.num_flags
    for i, f in enumerate(order):
        fmap[f] = i
    vmap = [None] * D.nv
    vmap[v] = vmap[w] = 0
    k = 1
    for x in range(D.nv):
        if x != v and x != w:
            vmap[x] = k
            k += 1
    n = len(order)
    a = [0] * n
    mu = [None] * n
    src = [False] * n
    for f in order:
        i = fmap[f]
        a[i] = vmap[D.a[f]]
        mu[i] = None if D.mu[f] is None else fmap[D.mu[f]]
        src[i] = D.src[f]
    return DirectedGraph(a, mu, src, D.nv - 1), fmap, vmap


def normalize_for_undirected_contraction(G, f):
    """Reorder so that edge {f < f'} is first and its ends are the first vertices."""
    f, g = sorted((f, G.mu[f]))
    v, w = G.a[f], G.a[g]
    if v == w:
        raise ValueError("loop edge")
    vf = G.flags_by_vertex()
    verts = [v, w] + [x for x in range(G.nv) if x != v and x != w]
    order = [f] + [x for x in vf[v] if x != f] + vf[w]
    for x in verts[2:]:
        order.extend(vf[x])
    fmap = _invert(order)
    vmap = _invert(verts)
    return G.relabel(fmap, vmap), fmap, vmap


def is_normalized_undirected(G, f=0):
    g = G.mu[f]
    return (f == 0 and g > f and G.a[f] == 0 and G.a[g] == 1 and G.order_preserving())


def contract_undirected(G, f=0):
    """Contract the edge {f, mu(f)} of a graph in normal position.

    Returns (graph, flag map); the flag map restricted to the surviving flags
    is the order-preserving reindexing of F minus the edge.
    """
    g = G.mu[f]
    if G.a[f] == G.a[g]:
        raise ValueError("cannot contract a loop")
    if not is_normalized_undirected(G, f):
        raise ValueError("graph is not normalized for contracting this edge")
    keep = [x for x in range(G.num_flags) if x != f and x != g]
    fmap = [None] * G.num_flags
    for i, x in enumerate(keep):
        fmap[x] = i
    a = [max(G.a[x] - 1, 0) for x in keep]
    mu = [fmap[G.mu[x]] for x in keep]
    return UndirectedGraph(a, mu, G.nv - 1), fmap


# ---------------------------------------------------------------------------
# directing and undirecting


def direct(G, o, names=False):
    """The truncated directed graph Direct(G, o).

    o lists one value in {+1, 0, -1} per edge, in the edge order of G.
    With names=True also return the names of flags and vertices:
    ('f', x) for a surviving flag x of G, ('s+', i), ('t+', i), ('s-', i),
    ('t-', i) for the flags created at a zero edge i, ('v', u) for vertices
    of G and ('e', i) for the new bivalent vertices.
    """
    edges = G.edges()
    o = tuple(o)
    if len(o) != len(edges):
        raise ValueError("need one direction per edge")
    edge_of = {}
    for i, (f, g) in enumerate(edges):
        edge_of[f] = (i, 0)
        edge_of[g] = (i, 1)
    vnames = []
    for u in range(G.nv):
        vnames.append(("v", u))
        for i, (f, g) in enumerate(edges):
            if o[i] == ZERO and G.a[f] == u:
                vnames.append(("e", i))
    vindex = {n: k for k, n in enumerate(vnames)}
    fnames = []
    for x in range(G.num_flags):
        i, end = edge_of[x]
        if o[i] == ZERO:
            fnames.extend([("s-", i), ("t-", i)] if end == 0 else [("s+", i), ("t+", i)])
        else:
            fnames.append(("f", x))
    findex = {n: k for k, n in enumerate(fnames)}
    n = len(fnames)
    a = [0] * n
    mu = [0] * n
    src = [False] * n
    for k, nm in enumerate(fnames):
        tag, x = nm
        if tag == "f":
            i, end = edge_of[x]
            f, g = edges[i]
            a[k] = vindex[("v", G.a[x])]
            src[k] = (end == 0) == (o[i] == PLUS)
            mu[k] = findex[("f", G.mu[x])]
        else:
            i = x
            f, g = edges[i]
            if tag == "s+":
                a[k], src[k], mu[k] = vindex[("v", G.a[g])], True, findex[("t+", i)]
            elif tag == "s-":
                a[k], src[k], mu[k] = vindex[("v", G.a[f])], True, findex[("t-", i)]
            elif tag == "t+":
                a[k], src[k], mu[k] = vindex[("e", i)], False, findex[("s+", i)]
            else:
                a[k], src[k], mu[k] = vindex[("e", i)], False, findex[("s-", i)]
    D = DirectedGraph(a, mu, src, len(vnames))
    if names:
        return D, fnames, vnames
    return D


def underlying(D):
    """Smooth the bivalent sinks of a truncated graph and forget directions."""
    if D.legs():
        raise ValueError("graph has external legs")
    if not D.is_truncated():
        raise ValueError("graph is not truncated")
    vf = D.flags_by_vertex()
    smooth = [v for v in range(D.nv) if len(vf[v]) == 2]
    drop = set()
    partner = {}
    for v in smooth:
        t1, t2 = vf[v]
        s1, s2 = D.mu[t1], D.mu[t2]
        drop.update((t1, t2))
        partner[s1] = s2
        partner[s2] = s1
    keep = [f for f in range(D.num_flags) if f not in drop]
    fmap = {f: i for i, f in enumerate(keep)}
    sm = set(smooth)
    verts = [v for v in range(D.nv) if v not in sm]
    vmap = {v: i for i, v in enumerate(verts)}
    a = [vmap[D.a[f]] for f in keep]
    mu = [fmap[partner[f]] if f in partner else fmap[D.mu[f]] for f in keep]
    return UndirectedGraph(a, mu, len(verts))


def directions(G):
    return list(product((MINUS, ZERO, PLUS), repeat=G.num_edges))


def act_on_direction(iso, G, H, o):
    """Transport a direction o on G along an isomorphism G -> H."""
    fm = iso.flags
    hedges = H.edges()
    index = {e: i for i, e in enumerate(hedges)}
    out = [None] * len(hedges)
    for i, (f, g) in enumerate(G.edges()):
        x, y = fm[f], fm[g]
        if x < y:
            out[index[(x, y)]] = o[i]
        else:
            out[index[(y, x)]] = -o[i]
    return tuple(out)


# ---------------------------------------------------------------------------
# enumeration


def _multigraphs(nv, ne, min_valence):
    """Labeled multigraphs with non-increasing degrees (symmetry pruned)."""
    pairs = [(i, j) for i in range(nv) for j in range(i, nv)]
    row_end = {}
    for idx, (i, j) in enumerate(pairs):
        if j == nv - 1:
            row_end[idx] = i
    deg = [0] * nv
    mult = [0] * len(pairs)

    def rec(idx, remaining):
        if idx == len(pairs):
            if remaining == 0:
                yield list(mult)
            return
        i, j = pairs[idx]
        step = 2 if i == j else 1
        deficit = sum(max(0, min_valence - deg[v]) for v in range(i, nv))
        if deficit > 2 * remaining:
            return
        for x in range(remaining + 1):
            mult[idx] = x
            deg[i] += step * x
            if i != j:
                deg[j] += x
            ok = True
            if idx in row_end:
                r = row_end[idx]
                if deg[r] < min_valence or (r > 0 and deg[r] > deg[r - 1]):
                    ok = False
            if ok:
                yield from rec(idx + 1, remaining - x)
            deg[i] -= step * x
            if i != j:
                deg[j] -= x
        mult[idx] = 0

    for sol in rec(0, ne):
        yield [(pairs[k], x) for k, x in enumerate(sol) if x]


def _graph_from_pairs(nv, edge_pairs, directed=False):
    code = []
    for (u, w), x in edge_pairs:
        code.extend([(u, w)] * x)
    return graph_from_code(directed, nv, tuple(sorted(code)))


def enumerate_multigraphs(nv, ne, min_valence=3, connected=True):
    """One connected multigraph per isomorphism class with the given sizes."""
    seen = {}
    for sol in _multigraphs(nv, ne, min_valence):
        G = _graph_from_pairs(nv, sol)
        if connected and not is_connected(G):
            continue
        H, _ = canonical_form(G)
        key = canonical_key(H)
        if key not in seen:
            seen[key] = H
    return [seen[k] for k in sorted(seen)]


_UNDIRECTED_MEMO = {}


def enumerate_undirected(genus, max_vertices=None, min_valence=3):
    """Connected graphs of the given genus with all valences >= min_valence."""
    key = (genus, max_vertices, min_valence)
    if key not in _UNDIRECTED_MEMO:
        _UNDIRECTED_MEMO[key] = _enumerate_undirected(genus, max_vertices, min_valence)
    return list(_UNDIRECTED_MEMO[key])


def _enumerate_undirected(genus, max_vertices, min_valence):
    if genus < 0:
        return []
    out = []
    nmax = 2 * (genus - 1) if min_valence >= 3 else None
    if min_valence >= 3 and genus <= 1:
        return []
    n = 1
    while True:
        if nmax is not None and n > nmax:
            break
        if max_vertices is not None and n > max_vertices:
            break
        ne = genus - 1 + n
        if 2 * ne < min_valence * n:
            if min_valence >= 3:
                break
        if ne >= 0:
            out.extend(enumerate_multigraphs(n, ne, min_valence))
        n += 1
        if nmax is None and max_vertices is None:
            raise ValueError("unbounded enumeration; give max_vertices")
    return out


def orientations(G):
    """All directed graphs with underlying multigraph G, one per class."""
    groups = _edge_groups(G)
    keys = sorted(groups)
    choices = []
    for k in keys:
        x = len(groups[k])
        if k[0] == k[1]:
            choices.append([(k, x, 0)])
        else:
            choices.append([(k, x - j, j) for j in range(x + 1)])
    seen = {}
    for combo in product(*choices):
        code = []
        for (u, w), fwd, back in combo:
            code.extend([(u, w)] * fwd)
            code.extend([(w, u)] * back)
        D = graph_from_code(True, G.nv, tuple(sorted(code)))
        H, _ = canonical_form(D)
        key = canonical_key(H)
        if key not in seen:
            seen[key] = H
    return [seen[k] for k in sorted(seen)]


def enumerate_directed(genus, nv, min_valence=2):
    """Connected directed graphs with nv vertices and the given genus."""
    ne = genus - 1 + nv
    if ne < 0:
        return []
    out = {}
    for G in enumerate_multigraphs(nv, ne, min_valence):
        for D in orientations(G):
            out[canonical_key(D)] = D
    return [out[k] for k in sorted(out)]


def undirected_degree(G, m):
    return G.degree(m)


def enumerate_directed_truncated(genus, max_degree, m):
    """Truncated directed graphs of the given genus with degree <= max_degree."""
    out = {}
    for G in enumerate_undirected(genus):
        base = G.degree(m)
        if base > max_degree:
            continue
        lmax = max_degree - base
        for o in directions(G):
            if sum(1 for x in o if x == ZERO) > lmax:
                continue
            D = direct(G, o)
            H, _ = canonical_form(D)
            key = canonical_key(H)
            if key not in out:
                out[key] = H
    return [out[k] for k in sorted(out)]
