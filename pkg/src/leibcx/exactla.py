"""Exact sparse linear algebra over the rationals.

Vectors are dicts {index: Fraction} holding only nonzero entries.  The
workhorse is SparseEchelon, an incremental fraction-free row echelon:
rows are kept as integer dicts and reduction multiplies through by pivot
values instead of dividing, so no Fraction arithmetic happens in the hot
loop.  With track=True each accepted row also carries its expression as
an exact rational combination of the inserted source vectors, which is
what coordinate recovery (membership certificates) uses.

Dense routines (rref, nullspace) use plain Fractions; they only run on
small matrices where canonical output matters more than speed.
"""

from fractions import Fraction
from math import gcd


def _as_int_vector(vec):
    # clear denominators; returns ({i: int}, lcm) with lcm > 0
    items = [(i, c) for i, c in vec.items() if c]
    if not items:
        return {}, 1
    lcm = 1
    for _, c in items:
        q = c.denominator if isinstance(c, Fraction) else 1
        lcm = lcm * q // gcd(lcm, q)
    return {i: int(c * lcm) for i, c in items}, lcm


def _gcd_normalize(row):
    # divide an integer row by the gcd of its entries; make first-seen
    # (smallest index) entry positive; returns (row, divisor) with the
    # sign folded into the divisor
    if not row:
        return row, 1
    g = 0
    for c in row.values():
        g = gcd(g, c)
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {i: c // g for i, c in row.items()}
    return row, g


class SparseEchelon:
    """Incremental integer row echelon with optional coordinate tracking.

    insert(vec) reduces vec against the stored rows; if a nonzero residue
    remains it becomes a new row and insert returns True, otherwise False.
    rank == number of stored rows.  With track=True, coordinates(vec)
    returns {source_index: Fraction} expressing vec over the accepted and
    rejected insertions alike (every insert() call is a source), or None
    when vec is outside the span.
    """

    def __init__(self, track=False):
        self.rows = []        # list of integer dicts, one pivot each
        self.pivots = {}      # pivot index -> row position
        self._rowpiv = []     # row position -> pivot index
        self.track = track
        self._exprs = []      # row -> {source: Fraction}, only if track
        self.nsources = 0

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, vec):
        # returns (residue, scale, gamma) with
        #   scale * vec == residue + sum_k gamma[k] * rows[k]
        # residue has no entry at any stored pivot; all integer.
        # Rows must be applied in insertion order: row k is clean at the
        # pivots of rows < k, so later rows absorb anything row k adds.
        res, scale0 = _as_int_vector(vec)
        scale = scale0
        gamma = {}
        for k, row in enumerate(self.rows):
            piv = self._rowpiv[k]
            c = res.get(piv, 0)
            if not c:
                continue
            p = row[piv]
            if c % p == 0:
                q = c // p
                for i, rv in row.items():
                    nv = res.get(i, 0) - q * rv
                    if nv:
                        res[i] = nv
                    else:
                        res.pop(i, None)
                gamma[k] = gamma.get(k, 0) + q
            else:
                for j in gamma:
                    gamma[j] *= p
                scale *= p
                for i in list(res):
                    res[i] *= p
                for i, rv in row.items():
                    nv = res.get(i, 0) - c * rv
                    if nv:
                        res[i] = nv
                    else:
                        res.pop(i, None)
                gamma[k] = gamma.get(k, 0) + c
        return res, scale, gamma

    def insert(self, vec):
        src = self.nsources
        self.nsources += 1
        res, scale, gamma = self._reduce(vec)
        res = {i: c for i, c in res.items() if c}
        if not res:
            if self.track:
                # vec = sum (gamma_k / scale) * rows[k]; remember nothing,
                # rejected sources are reconstructed on demand
                pass
            return False
        res, div = _gcd_normalize(res)
        if self.track:
            # res = (scale/div) * vec - sum (gamma_k/div) * rows[k]
            expr = {}
            for k, g in gamma.items():
                coeff = Fraction(-g, div)
                for s, c in self._exprs[k].items():
                    v = expr.get(s, 0) + coeff * c
                    if v:
                        expr[s] = v
                    else:
                        expr.pop(s, None)
            v = expr.get(src, 0) + Fraction(scale, div)
            if v:
                expr[src] = v
            self._exprs.append(expr)
        piv = min(res)
        self.pivots[piv] = len(self.rows)
        self._rowpiv.append(piv)
        self.rows.append(res)
        return True

    def residue(self, vec):
        """Reduced form of vec against the stored rows, as Fractions."""
        res, scale, _ = self._reduce(vec)
        return {i: Fraction(c, scale) for i, c in res.items() if c}

    def contains(self, vec):
        res, _, _ = self._reduce(vec)
        return not any(res.values())

    def coordinates(self, vec):
        """Express vec over the inserted sources; None if outside the span."""
        if not self.track:
            raise RuntimeError("echelon built without track=True")
        res, scale, gamma = self._reduce(vec)
        if any(res.values()):
            return None
        out = {}
        for k, g in gamma.items():
            coeff = Fraction(g, scale)
            for s, c in self._exprs[k].items():
                v = out.get(s, 0) + coeff * c
                if v:
                    out[s] = v
                else:
                    out.pop(s, None)
        return out


def rank(rows):
    """Rank of a list of sparse vectors (dicts)."""
    ech = SparseEchelon()
    for r in rows:
        ech.insert(r)
    return ech.rank


def rref(rows, ncols=None):
    """Dense reduced row echelon form over Fraction.

    rows: list of dicts or lists.  Returns (reduced_rows, pivot_cols)
    where reduced_rows is a list of lists of Fractions (zero rows
    dropped) and pivot_cols the sorted pivot column indices.
    """
    if ncols is None:
        ncols = 0
        for r in rows:
            if isinstance(r, dict):
                ncols = max(ncols, max(r, default=-1) + 1)
            else:
                ncols = max(ncols, len(r))
    mat = []
    for r in rows:
        if isinstance(r, dict):
            mat.append([Fraction(r.get(j, 0)) for j in range(ncols)])
        else:
            row = [Fraction(x) for x in r]
            row += [Fraction(0)] * (ncols - len(row))
            mat.append(row)
    pivots = []
    rrow = 0
    for col in range(ncols):
        sel = None
        for i in range(rrow, len(mat)):
            if mat[i][col]:
                sel = i
                break
        if sel is None:
            continue
        mat[rrow], mat[sel] = mat[sel], mat[rrow]
        inv = 1 / mat[rrow][col]
        mat[rrow] = [x * inv for x in mat[rrow]]
        for i in range(len(mat)):
            if i != rrow and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rrow])]
        pivots.append(col)
        rrow += 1
        if rrow == len(mat):
            break
    return mat[:rrow], pivots


def nullspace(rows, ncols):
    """Canonical basis of the right kernel of the matrix given by rows.

    Returns a list of length-ncols Fraction lists, one per free column,
    each having entry 1 at its free column.
    """
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for rowi, p in enumerate(pivots):
            v[p] = -red[rowi][f]
        basis.append(v)
    return basis


def matmul(a, b):
    """Product of dense matrices (lists of lists of Fractions)."""
    if not a or not b:
        return []
    n = len(b)
    out = []
    for row in a:
        out.append([sum(row[k] * b[k][j] for k in range(n))
                    for j in range(len(b[0]))])
    return out


def transpose(mat):
    if not mat:
        return []
    return [list(col) for col in zip(*mat)]


def is_zero_matrix(mat):
    return all(not x for row in mat for x in row)
