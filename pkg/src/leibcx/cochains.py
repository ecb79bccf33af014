"""Cochains on a Leibniz algebra and the anti-cyclic subcomplex.

A scalar cochain of arity a assigns a rational to every length-a word of
basis indices.  A dual-valued cochain assigns a dual vector; lowering it
against the canonical pairing on the double gives a scalar cochain one
arity up, with a sign (the pairing puts the dual slot first).

The coboundary on scalar cochains precomposes with the bracket-word
expansion of the boundary; on dual-valued cochains the differential uses
the left/right coadjoint actions.  The two are intertwined by lowering,
up to the sign (-1)^arity, and that compatibility is one of the certified
statements.

A scalar cochain A of arity n+1 is anti-cyclic when evaluating it on the
tensor expansion of the bracket word w returns (n+1) A(w) for every w.
Anti-cyclic cochains of arity n+1 correspond one-to-one to functionals
on F^(n+1); in those implicit coordinates the coboundary becomes the
transpose of the chain boundary, which makes the cochain side computable
and lets extension classes be read off by exact elimination.
"""

import itertools
from fractions import Fraction
from functools import lru_cache

from .errors import InputError
from .exactla import SparseEchelon, nullspace, rank
from .words import _add_term, embedded_word
from .complexes import boundary_word_terms, free_lie_basis


def _all_words(m, length):
    return itertools.product(range(1, m + 1), repeat=length)


class Cochain:
    """Scalar cochain: {word: Fraction} over length-arity index words."""

    __slots__ = ("arity", "dim", "coeffs")

    def __init__(self, arity, dim, coeffs=None):
        if arity < 1 or dim < 1:
            raise InputError("cochain arity and dimension must be positive")
        self.arity = arity
        self.dim = dim
        self.coeffs = {}
        for w, c in (coeffs or {}).items():
            w = tuple(w)
            if len(w) != arity:
                raise InputError(
                    f"coefficient word {w} has length != arity {arity}")
            for i in w:
                if not (isinstance(i, int) and 1 <= i <= dim):
                    raise InputError(f"index {i!r} out of range 1..{dim}")
            c = Fraction(c)
            if c:
                self.coeffs[w] = c

    def coefficient(self, word):
        return self.coeffs.get(tuple(word), Fraction(0))

    value = coefficient

    def apply_terms(self, terms):
        """Evaluate linearly on {word: coeff} terms."""
        total = Fraction(0)
        for w, c in terms.items():
            v = self.coeffs.get(w)
            if v:
                total += c * v
        return total

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.arity == other.arity
                and self.dim == other.dim and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.arity, self.dim, frozenset(self.coeffs.items())))

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            _add_term(out, w, c)
        return Cochain(self.arity, self.dim, out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            _add_term(out, w, -c)
        return Cochain(self.arity, self.dim, out)

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return Cochain(self.arity, self.dim,
                       {w: scalar * c for w, c in self.coeffs.items()})

    def __repr__(self):
        return f"Cochain(arity={self.arity}, dim={self.dim}, " \
               f"{len(self.coeffs)} coefficients)"


class DualValuedCochain:
    """Cochain with values in the dual space: {(word, l): Fraction}."""

    __slots__ = ("arity", "dim", "coeffs")

    def __init__(self, arity, dim, coeffs=None):
        if arity < 0 or dim < 1:
            raise InputError("bad arity or dimension")
        self.arity = arity
        self.dim = dim
        self.coeffs = {}
        for (w, l), c in (coeffs or {}).items():
            w = tuple(w)
            if len(w) != arity:
                raise InputError(
                    f"argument word {w} has length != arity {arity}")
            if not (isinstance(l, int) and 1 <= l <= dim):
                raise InputError(f"dual index {l!r} out of range 1..{dim}")
            c = Fraction(c)
            if c:
                self.coeffs[(w, l)] = c

    def value(self, word):
        """Dual vector at a word, as {l: Fraction}."""
        word = tuple(word)
        out = {}
        for (w, l), c in self.coeffs.items():
            if w == word:
                out[l] = c
        return out

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, DualValuedCochain)
                and self.arity == other.arity and self.dim == other.dim
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.arity, self.dim, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"DualValuedCochain(arity={self.arity}, dim={self.dim}, " \
               f"{len(self.coeffs)} coefficients)"


def lower(f):
    """Scalar shadow of a dual-valued cochain against the double pairing.

    (lower f)(x_1..x_a, x) = pairing(f(x_1..x_a), x) = -<x, f(...)>, so
    the coefficient at word + (l,) is minus the dual coefficient.
    """
    out = {}
    for (w, l), c in f.coeffs.items():
        out[w + (l,)] = -c
    return Cochain(f.arity + 1, f.dim, out)


def coad_left(algebra, i, a):
    """[e_i, a] for a dual vector a: component on e^j is -sum_k c(i,j,k) a_k."""
    out = {}
    for j in range(1, algebra.dim + 1):
        row = algebra.bracket(i, j)
        total = Fraction(0)
        for k, ak in a.items():
            v = row.get(k)
            if v:
                total -= v * ak
        if total:
            out[j] = total
    return out


def coad_right(algebra, a, i):
    """[a, e_i]: component on e^j is sum_k (c(j,i,k) + c(i,j,k)) a_k."""
    out = {}
    for j in range(1, algebra.dim + 1):
        total = Fraction(0)
        for k, ak in a.items():
            total += (algebra.bracket(j, i).get(k, 0)
                      + algebra.bracket(i, j).get(k, 0)) * ak
        if total:
            out[j] = total
    return out


def lp_differential(algebra, f):
    """Differential of a dual-valued cochain, arity n -> n+1.

    (d f)(x_1..x_{n+1}) = [f(x_1..x_n), x_{n+1}]
        + sum_{i=1..n} (-1)^(i+n) [x_i, f(x_1..^i..x_{n+1})]
        - sum_{i<j}    (-1)^(i+n) f(x_1..^i.., [x_i,x_j], ..x_{n+1})
    """
    m = f.dim
    n = f.arity
    out = {}
    for w in _all_words(m, n + 1):
        val = {}
        head = f.value(w[:n])
        if head:
            for j, c in coad_right(algebra, head, w[n]).items():
                _add_term(val, j, c)
        for i0 in range(n):
            sign = (-1) ** (i0 + 1 + n)
            fv = f.value(w[:i0] + w[i0 + 1:])
            if fv:
                for j, c in coad_left(algebra, w[i0], fv).items():
                    _add_term(val, j, sign * c)
        for i0 in range(n + 1):
            sign = (-1) ** (i0 + n)  # minus times (-1)^(i+n), 1-based i
            for j0 in range(i0 + 1, n + 1):
                for k, cb in algebra.bracket(w[i0], w[j0]).items():
                    nw = w[:i0] + w[i0 + 1:j0] + (k,) + w[j0 + 1:]
                    fv = f.value(nw)
                    for l, c in fv.items():
                        _add_term(val, l, sign * cb * c)
        for l, c in val.items():
            out[(w, l)] = c
    return DualValuedCochain(n + 1, m, out)


def lp_coboundary(algebra, cochain):
    """Coboundary of a scalar cochain: precompose with the boundary words."""
    m = cochain.dim
    a = cochain.arity
    out = {}
    for w in _all_words(m, a + 1):
        total = cochain.apply_terms(
            boundary_word_terms(algebra, w, "alt"))
        if total:
            out[w] = total
    return Cochain(a + 1, m, out)


def is_anti_cyclic(cochain):
    """A(w) equals 1/arity times A evaluated on the expansion of {w}."""
    a = cochain.arity
    factor = Fraction(1, a)
    for w in _all_words(cochain.dim, a):
        total = Fraction(0)
        for tw, k in embedded_word(w).items():
            v = cochain.coeffs.get(tw)
            if v:
                total += k * v
        if cochain.coefficient(w) != factor * total:
            return False
    return True


@lru_cache(maxsize=None)
def bracket_coords_table(m, length):
    """coords of the bracket word {w} over the basis slice, for every w."""
    sl = free_lie_basis(m, length)
    table = {}
    for w in _all_words(m, length):
        table[w] = sl.coords({w: Fraction(1)})
    return table


def anti_cyclic_basis(m, degree):
    """Basis cochains of the degree-n anti-cyclic space (arity n+1).

    A_k(w) = k-th coordinate of the bracket word {w} over the basis of
    F^(n+1); there are dim F^(n+1) of them and they are independent.
    """
    length = degree + 1
    table = bracket_coords_table(m, length)
    count = free_lie_basis(m, length).dim
    out = []
    for k in range(count):
        coeffs = {}
        for w, coords in table.items():
            c = coords.get(k)
            if c:
                coeffs[w] = c
        out.append(Cochain(length, m, coeffs))
    return out


def to_implicit(cochain, check=True):
    """Vector of an anti-cyclic cochain over the matching basis words."""
    if check and not is_anti_cyclic(cochain):
        raise InputError("cochain is not anti-cyclic")
    sl = free_lie_basis(cochain.dim, cochain.arity)
    return [cochain.coefficient(b) for b in sl.words]


def from_implicit(vector, m, degree):
    """Anti-cyclic cochain of the given degree from implicit coordinates."""
    length = degree + 1
    table = bracket_coords_table(m, length)
    coeffs = {}
    for w, coords in table.items():
        total = Fraction(0)
        for k, c in coords.items():
            if k < len(vector):
                total += c * Fraction(vector[k])
        if total:
            coeffs[w] = total
    return Cochain(length, m, coeffs)


def coboundary_matrix_on_anti_cyclic(algebra, degree):
    """Matrix of the coboundary on the anti-cyclic space, implicit coords.

    Columns run over the degree-n basis cochains, rows over the basis of
    F^(n+2).  Returns (matrix, preserved) where preserved records that
    every coboundary landed back in the anti-cyclic space.
    """
    m = algebra.dim
    basis = anti_cyclic_basis(m, degree)
    nrows = free_lie_basis(m, degree + 2).dim
    mat = [[Fraction(0)] * len(basis) for _ in range(nrows)]
    preserved = True
    for col, a in enumerate(basis):
        ba = lp_coboundary(algebra, a)
        if not is_anti_cyclic(ba):
            preserved = False
            continue
        vec = to_implicit(ba, check=False)
        for r, c in enumerate(vec):
            if c:
                mat[r][col] = c
    return mat, preserved


def cohomology(algebra, max_degree=4):
    """Anti-cyclic cohomology dimensions, degrees 0..max_degree-2."""
    from .algebras import require_leibniz
    require_leibniz(algebra)
    if max_degree < 2:
        raise InputError("--max-degree must be at least 2")
    m = algebra.dim
    N = max_degree
    alp_dims = {n: free_lie_basis(m, n + 1).dim for n in range(0, N - 1)}
    ranks = {}
    preserved = {}
    for n in range(0, N - 1):
        mat, ok = coboundary_matrix_on_anti_cyclic(algebra, n)
        preserved[n] = ok
        cols = [{r: mat[r][c] for r in range(len(mat)) if mat[r][c]}
                for c in range(len(mat[0]) if mat else 0)]
        ranks[n] = rank(cols)
    ha = {}
    for n in range(0, N - 1):
        ha[n] = alp_dims[n] - ranks[n] - (ranks[n - 1] if n >= 1 else 0)
    return {"alp_dims": alp_dims, "coboundary_ranks": ranks,
            "HA": ha, "preserved": preserved}


def classify_extension(algebra, hcochain):
    """Decide whether an arity-3 scalar cochain defines a twist class.

    Checks anti-cyclicity and closedness; when both hold, reduces the
    implicit vector against the coboundary space and reports triviality
    plus coordinates over an exact basis of the degree-2 cohomology.
    """
    from .algebras import require_leibniz
    require_leibniz(algebra)
    if hcochain.arity != 3:
        raise InputError("extension classes live in arity 3")
    if hcochain.dim != algebra.dim:
        raise InputError("cochain dimension does not match the algebra")
    anti = is_anti_cyclic(hcochain)
    closed = lp_coboundary(algebra, hcochain).is_zero()
    out = {"anti_cyclic": anti, "closed": closed,
           "trivial": None, "class": None, "h2_dim": None}
    if not (anti and closed):
        return out
    m = algebra.dim
    v = to_implicit(hcochain, check=False)
    b1, _ = coboundary_matrix_on_anti_cyclic(algebra, 1)
    b2, _ = coboundary_matrix_on_anti_cyclic(algebra, 2)
    ech = SparseEchelon(track=True)
    ncob = len(b1[0]) if b1 else 0
    for col in range(ncob):
        ech.insert({r: b1[r][col] for r in range(len(b1)) if b1[r][col]})
    extension = []
    for z in nullspace(b2, len(v)):
        src = ech.nsources
        if ech.insert({i: c for i, c in enumerate(z) if c}):
            extension.append(src)
    coords = ech.coordinates({i: c for i, c in enumerate(v) if c})
    if coords is None:
        # closed cochain must lie in the cocycle space
        raise RuntimeError("closed cochain escaped the cocycle space")
    cls = [coords.get(s, Fraction(0)) for s in extension]
    out["trivial"] = not any(cls)
    out["class"] = cls
    out["h2_dim"] = len(extension)
    return out


def anti_cyclic_constraint_rows(m, arity):
    """Defining constraints of the anti-cyclic space as integer rows.

    Coordinates index the length-arity words; one row per word w:
    arity * A(w) - A(expansion of {w}) = 0.
    """
    words = list(_all_words(m, arity))
    idx = {w: i for i, w in enumerate(words)}
    rows = []
    for w in words:
        row = {idx[w]: Fraction(arity)}
        for tw, k in embedded_word(w).items():
            _add_term(row, idx[tw], Fraction(-k))
        if row:
            rows.append(row)
    return rows, idx


def symmetry_identity_rows(m, arity):
    """The equivalent finite identity set, arity 3 and 4 only.

    Arity 3: A(i,j,k) = A(i,k,j) and the cyclic sum vanishes.
    Arity 4: A(i,j,k,l) = A(i,j,l,k), the cyclic sum over the last three
    slots vanishes, and A(ijkl) + A(jikl) + A(klij) + A(lkij) = 0.
    """
    words = list(_all_words(m, arity))
    idx = {w: i for i, w in enumerate(words)}
    rows = []
    if arity == 3:
        for (i, j, k) in words:
            row = {}
            _add_term(row, idx[(i, j, k)], Fraction(1))
            _add_term(row, idx[(i, k, j)], Fraction(-1))
            if row:
                rows.append(row)
            row = {}
            for w in ((i, j, k), (j, k, i), (k, i, j)):
                _add_term(row, idx[w], Fraction(1))
            if row:
                rows.append(row)
        return rows, idx
    if arity == 4:
        for (i, j, k, l) in words:
            row = {}
            _add_term(row, idx[(i, j, k, l)], Fraction(1))
            _add_term(row, idx[(i, j, l, k)], Fraction(-1))
            if row:
                rows.append(row)
            row = {}
            for w in ((i, j, k, l), (i, k, l, j), (i, l, j, k)):
                _add_term(row, idx[w], Fraction(1))
            if row:
                rows.append(row)
            row = {}
            for w in ((i, j, k, l), (j, i, k, l), (k, l, i, j), (l, k, i, j)):
                _add_term(row, idx[w], Fraction(1))
            if row:
                rows.append(row)
        return rows, idx
    raise InputError("identity rows are tabulated for arity 3 and 4 only")


def same_row_space(rows_a, rows_b):
    """Exact mutual containment of two spans of sparse vectors."""
    ech_a = SparseEchelon()
    for r in rows_a:
        ech_a.insert(r)
    ech_b = SparseEchelon()
    for r in rows_b:
        ech_b.insert(r)
    if ech_a.rank != ech_b.rank:
        return False
    return (all(ech_a.contains(r) for r in rows_b)
            and all(ech_b.contains(r) for r in rows_a))
