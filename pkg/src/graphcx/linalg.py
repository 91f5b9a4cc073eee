"""Exact linear algebra over the rationals.

Sparse matrices are stored as coordinate dictionaries.  Ranks are computed
either by fraction-free integer elimination (the reference path), by dense
Bareiss elimination, or modulo two large primes whose answers must agree.
"""

from fractions import Fraction
from math import gcd

# two primes below 2**31, so products fit comfortably in machine words
PRIMES = (2147483629, 2147483587)


class RankDisagreement(ArithmeticError):
    pass


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class SparseMatrix:
    """A matrix over Q with entries kept in a dict {(row, col): Fraction}."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries=()):
        if nrows < 0 or ncols < 0:
            raise ValueError("negative shape")
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        items = entries.items() if isinstance(entries, dict) else entries
        for item in items:
            if isinstance(entries, dict):
                (r, c), v = item
            else:
                r, c, v = item
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError("entry (%d, %d) out of range" % (r, c))
            if (r, c) in self.entries:
                raise ValueError("duplicate entry at (%d, %d)" % (r, c))
            v = _as_fraction(v)
            if v:
                self.entries[(r, c)] = v

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [(i, i, 1) for i in range(n)])

    @classmethod
    def from_dense(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        ents = []
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    ents.append((i, j, v))
        return cls(len(rows), ncols, ents)

    @classmethod
    def from_columns(cls, nrows, columns):
        """Columns are dicts {row: value} (or dense sequences)."""
        ents = []
        for j, col in enumerate(columns):
            for i, v in _items(col):
                if v:
                    ents.append((i, j, v))
        return cls(nrows, len(columns), ents)

    def __repr__(self):
        return "SparseMatrix(%d, %d, nnz=%d)" % (self.nrows, self.ncols, len(self.entries))

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.entries) == (other.nrows, other.ncols, other.entries)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def nnz(self):
        return len(self.entries)

    def triplets(self):
        return sorted((r, c, v) for (r, c), v in self.entries.items())

    def rows(self):
        out = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def columns(self):
        out = [dict() for _ in range(self.ncols)]
        for (r, c), v in self.entries.items():
            out[c][r] = v
        return out

    def to_dense(self):
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self):
        return SparseMatrix(self.ncols, self.nrows, [(c, r, v) for (r, c), v in self.entries.items()])

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        orows = other.rows()
        acc = {}
        for (r, k), v in self.entries.items():
            for c, w in orows[k].items():
                acc[(r, c)] = acc.get((r, c), 0) + v * w
        return SparseMatrix(self.nrows, other.ncols, {k: v for k, v in acc.items() if v})

    def is_zero(self):
        return not self.entries

    def apply(self, vector):
        """Matrix times a vector given as a dict or a dense sequence."""
        vec = dict(_items(vector))
        out = {}
        for (r, c), v in self.entries.items():
            x = vec.get(c)
            if x:
                out[r] = out.get(r, 0) + v * x
        return {r: v for r, v in out.items() if v}

    def permuted(self, row_perm=None, col_perm=None):
        """Reindex rows and columns: row i goes to row_perm[i]."""
        rp = row_perm or list(range(self.nrows))
        cp = col_perm or list(range(self.ncols))
        return SparseMatrix(self.nrows, self.ncols,
                            [(rp[r], cp[c], v) for (r, c), v in self.entries.items()])


def _items(vector):
    if isinstance(vector, dict):
        return vector.items()
    return enumerate(vector)


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def integer_row(vector):
    """Scale a rational vector to a primitive integer vector with the same span."""
    den = 1
    items = [(k, _as_fraction(v)) for k, v in _items(vector) if v]
    for _, v in items:
        den = den * v.denominator // gcd(den, v.denominator)
    row = {k: int(v * den) for k, v in items}
    return _primitive(row)


class IntegerEchelon:
    """Incremental fraction-free row echelon form over Z (hence over Q).

    Rows are reduced against existing pivots by integer cross-multiplication
    and then divided by their content, so no fractions ever appear.
    """

    def __init__(self):
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vector):
        row = integer_row(vector)
        pivots = self.pivots
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                return row
            a = row[c]
            b = p[c]
            g = gcd(a, b)
            a //= g
            b //= g
            if b != 1:
                new = {k: b * v for k, v in row.items()}
            else:
                new = dict(row)
            for k, v in p.items():
                w = new.get(k, 0) - a * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            row = _primitive(new)
        return row

    def add(self, vector):
        """Insert a vector; True iff it was independent of the earlier ones."""
        row = self.reduce(vector)
        if not row:
            return False
        c = min(row)
        if row[c] < 0:
            row = {k: -v for k, v in row.items()}
        self.pivots[c] = row
        return True

    def contains(self, vector):
        return not self.reduce(vector)


class ModularEchelon:
    """Incremental row echelon form over the prime field F_p."""

    def __init__(self, prime):
        self.p = prime
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    def _row(self, vector):
        p = self.p
        row = {}
        for k, v in _items(vector):
            if not v:
                continue
            v = _as_fraction(v)
            if v.denominator % p == 0:
                raise ZeroDivisionError("denominator divisible by the prime")
            x = v.numerator * pow(v.denominator, -1, p) % p
            if x:
                row[k] = x
        return row

    def reduce(self, vector):
        p = self.p
        row = self._row(vector)
        pivots = self.pivots
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                return row
            f = row[c]
            for k, v in piv.items():
                w = (row.get(k, 0) - f * v) % p
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
        return row

    def add(self, vector):
        row = self.reduce(vector)
        if not row:
            return False
        c = min(row)
        inv = pow(row[c], -1, self.p)
        self.pivots[c] = {k: v * inv % self.p for k, v in row.items()}
        return True


def _vectors(matrix_or_vectors):
    if isinstance(matrix_or_vectors, SparseMatrix):
        return matrix_or_vectors.rows()
    return list(matrix_or_vectors)


def rank_fraction_free(M):
    ech = IntegerEchelon()
    for row in _vectors(M):
        ech.add(row)
    return len(ech)


def rank_bareiss(M):
    """Dense Bareiss elimination; the determinant-preserving textbook variant."""
    if isinstance(M, SparseMatrix):
        nrows, ncols = M.shape
        rows = [dict(r) for r in M.rows()]
    else:
        rows = [dict(_items(v)) for v in M]
        nrows = len(rows)
        ncols = 1 + max((k for r in rows for k in r), default=-1)
    ints = []
    for r in rows:
        ir = integer_row(r)
        ints.append([ir.get(j, 0) for j in range(ncols)])
    A = ints
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if A[i][col]:
                piv = i
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        pr = A[rank]
        pv = pr[col]
        for i in range(rank + 1, nrows):
            row = A[i]
            f = row[col]
            for j in range(col + 1, ncols):
                row[j] = (pv * row[j] - f * pr[j]) // prev
            row[col] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_prime(M, prime):
    ech = ModularEchelon(prime)
    for row in _vectors(M):
        ech.add(row)
    return len(ech)


def rank_modular(M, primes=PRIMES):
    """Rank modulo each prime; all must agree or RankDisagreement is raised."""
    vecs = _vectors(M)
    ranks = [rank_mod_prime(vecs, p) for p in primes]
    if len(set(ranks)) != 1:
        raise RankDisagreement("modular ranks disagree: %s" % ranks)
    return ranks[0]


def rank(M, method="exact"):
    """Rank over Q.  method: 'exact' (fraction-free sparse), 'bareiss', 'modular'."""
    if method == "exact":
        return rank_fraction_free(M)
    if method == "bareiss":
        return rank_bareiss(M)
    if method == "modular":
        return rank_modular(M)
    raise ValueError("unknown rank method %r" % method)


def rref(M):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    A = [list(r) for r in M.to_dense()]
    nrows, ncols = M.shape
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A[:r], pivots


def kernel_basis(M):
    """Basis of the right kernel {v : M v = 0} as dense lists of Fractions."""
    R, pivots = rref(M)
    free = [c for c in range(M.ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * M.ncols
        v[fc] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def quotient_dim(ambient_dim, spanning_vectors, method="exact"):
    """Dimension of Q^ambient_dim modulo the span of the given vectors."""
    for v in spanning_vectors:
        if not isinstance(v, dict) and len(v) != ambient_dim:
            raise ValueError("vector length differs from the ambient dimension")
        if isinstance(v, dict) and any(not 0 <= k < ambient_dim for k in v):
            raise ValueError("vector index out of range")
    return ambient_dim - rank(list(spanning_vectors), method=method)


def independent_subset(vectors):
    """Indices of a maximal independent subset, chosen greedily in order."""
    ech = IntegerEchelon()
    return [i for i, v in enumerate(vectors) if ech.add(v)]
