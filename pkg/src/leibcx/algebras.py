"""Finite-dimensional Leibniz algebras over the rationals.

An algebra is stored by structure constants: bracket(i, j) returns the
coordinates of [e_i, e_j] as {k: Fraction} with 1-based indices
everywhere.  The left Leibniz identity

    [x, [y, z]] = [[x, y], z] + [y, [x, z]]

is checked on all basis triples; validate() reports every failing triple
with both sides so a bad input is diagnosable, not just rejected.

Also here: the two-sided symmetric ideal, the quotient Lie algebra
(liezation) with its projection matrix, the double g (+) g* with the
canonical symplectic-style pairing, optional twisting by a scalar
3-cochain, and the anti-invariance checks for bilinear forms.
"""

from fractions import Fraction

from .errors import InputError
from .exactla import SparseEchelon, rref


class LeibnizAlgebra:
    """Structure constants of a bracket on Q^dim, 1-based basis indices."""

    __slots__ = ("dim", "name", "_c")

    def __init__(self, dim, brackets, name=None):
        # brackets: {(i, j): {k: coeff}} for the nonzero products
        if not (isinstance(dim, int) and dim >= 1):
            raise InputError(f"dimension must be a positive int, got {dim!r}")
        self.dim = dim
        self.name = name
        c = {}
        for (i, j), comps in brackets.items():
            self._check_index(i)
            self._check_index(j)
            entry = {}
            for k, v in comps.items():
                self._check_index(k)
                v = Fraction(v)
                if v:
                    entry[k] = v
            if entry:
                c[(i, j)] = entry
        self._c = c

    def _check_index(self, i):
        if not (isinstance(i, int) and 1 <= i <= self.dim):
            raise InputError(
                f"basis index {i!r} out of range 1..{self.dim}")

    def bracket(self, i, j):
        """Coordinates of [e_i, e_j] as {k: Fraction}."""
        return self._c.get((i, j), {})

    def bracket_vectors(self, a, b):
        """Bracket of coordinate vectors {i: coeff}."""
        out = {}
        for i, ca in a.items():
            for j, cb in b.items():
                for k, v in self.bracket(i, j).items():
                    nv = out.get(k, 0) + ca * cb * v
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
        return out

    def items(self):
        """Nonzero structure entries as ((i, j), {k: coeff}) pairs."""
        return self._c.items()

    def validate(self):
        """Check the left Leibniz identity on all basis triples.

        Returns a ValidationReport listing every failing (i, j, k) with
        the two sides in coordinates.
        """
        failures = []
        for i in range(1, self.dim + 1):
            for j in range(1, self.dim + 1):
                inner = self.bracket(i, j)
                for k in range(1, self.dim + 1):
                    lhs = self.bracket_vectors({i: 1}, self.bracket(j, k))
                    rhs = self.bracket_vectors(inner, {k: 1})
                    for l, v in self.bracket_vectors({j: 1}, self.bracket(i, k)).items():
                        nv = rhs.get(l, 0) + v
                        if nv:
                            rhs[l] = nv
                        else:
                            rhs.pop(l, None)
                    if lhs != rhs:
                        failures.append(((i, j, k), lhs, rhs))
        return ValidationReport(self, failures)

    def is_antisymmetric(self):
        for i in range(1, self.dim + 1):
            for j in range(i, self.dim + 1):
                lhs = self.bracket(i, j)
                rhs = {k: -v for k, v in self.bracket(j, i).items()}
                if lhs != rhs:
                    return False
        return True

    def __repr__(self):
        label = self.name or f"dim-{self.dim}"
        return f"LeibnizAlgebra({label}, {len(self._c)} products)"


class ValidationReport:
    __slots__ = ("algebra", "failures")

    def __init__(self, algebra, failures):
        self.algebra = algebra
        self.failures = failures

    @property
    def passed(self):
        return not self.failures

    def witnesses(self):
        return [f[0] for f in self.failures]


def require_leibniz(algebra):
    report = algebra.validate()
    if not report.passed:
        triple = report.witnesses()[0]
        raise InputError(
            f"bracket fails the Leibniz identity, e.g. at basis triple {triple}")
    return algebra


def symmetric_ideal(algebra):
    """RREF basis (rows over columns 0..dim-1) of span{[x,y] + [y,x]}.

    This span is automatically a two-sided ideal acting trivially on the
    left, so no closure pass is needed.
    """
    rows = []
    for i in range(1, algebra.dim + 1):
        for j in range(i, algebra.dim + 1):
            v = dict(algebra.bracket(i, j))
            for k, c in algebra.bracket(j, i).items():
                nv = v.get(k, 0) + c
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
            if v:
                rows.append({k - 1: Fraction(c) for k, c in v.items()})
    reduced, pivots = rref(rows, algebra.dim)
    return reduced, pivots


def liezation(algebra):
    """Quotient by the symmetric ideal: (lie_algebra, projection).

    projection is a (quotient dim) x (dim) matrix of Fractions acting on
    coordinate columns; the quotient basis is the image of the basis
    vectors at the non-pivot coordinates of the ideal's RREF.
    """
    require_leibniz(algebra)
    ideal, pivots = symmetric_ideal(algebra)
    pivset = set(pivots)
    kept = [j for j in range(algebra.dim) if j not in pivset]
    pos = {j: t for t, j in enumerate(kept)}
    qdim = len(kept)

    def project(vec):
        # vec: {k(1-based): coeff}; reduce modulo the ideal rows, keep
        # the non-pivot coordinates
        work = {k - 1: Fraction(c) for k, c in vec.items()}
        for rowi, p in enumerate(pivots):
            c = work.get(p, 0)
            if c:
                for col, v in enumerate(ideal[rowi]):
                    if v:
                        nv = work.get(col, 0) - c * v
                        if nv:
                            work[col] = nv
                        else:
                            work.pop(col, None)
        return {pos[j] + 1: c for j, c in work.items() if c}

    # qdim = 0 would force [g,g] = [I,g] = 0, hence I = 0: impossible
    proj = [[Fraction(0)] * algebra.dim for _ in range(qdim)]
    for col in range(algebra.dim):
        img = project({col + 1: 1})
        for r1, c in img.items():
            proj[r1 - 1][col] = c
    brackets = {}
    for t1, j1 in enumerate(kept):
        for t2, j2 in enumerate(kept):
            img = project(algebra.bracket(j1 + 1, j2 + 1))
            if img:
                brackets[(t1 + 1, t2 + 1)] = img
    quotient = LeibnizAlgebra(qdim, brackets,
                              name=(algebra.name or "") + "_lie")
    return quotient, proj, kept


def lie_dimension(algebra):
    _, proj, _ = liezation(algebra)
    return len(proj)


def canonical_omega(m):
    """Pairing on the 2m-dim double: omega(x + a, y + b) = <x,b> - <y,a>.

    Returned as a dense 2m x 2m Fraction matrix over the double's basis
    E_1..E_m = e_1..e_m (base), E_{m+1}..E_{2m} = dual basis.
    """
    n = 2 * m
    mat = [[Fraction(0)] * n for _ in range(n)]
    for i in range(m):
        mat[i][m + i] = Fraction(1)
        mat[m + i][i] = Fraction(-1)
    return mat


class BilinearForm:
    """Dense bilinear form on an algebra's coordinate space."""

    __slots__ = ("matrix", "dim")

    def __init__(self, matrix):
        self.matrix = [[Fraction(x) for x in row] for row in matrix]
        self.dim = len(matrix)

    def __call__(self, a, b):
        # a, b: {i(1-based): coeff}
        total = Fraction(0)
        for i, ca in a.items():
            row = self.matrix[i - 1]
            for j, cb in b.items():
                total += ca * cb * row[j - 1]
        return total


def check_anti_invariance(algebra, form):
    """Both anti-invariance identities on all basis triples.

    A1: w(x, [y, z]) = -w([y, x], z)
    A2: w(x, [y, z]) = w([x, z] + [z, x], y)

    Returns {"passed": bool, "failures": [(tag, (i, j, k)), ...]}.
    """
    failures = []
    for i in range(1, algebra.dim + 1):
        ei = {i: 1}
        for j in range(1, algebra.dim + 1):
            for k in range(1, algebra.dim + 1):
                inner = algebra.bracket(j, k)
                lhs = form(ei, inner) if inner else Fraction(0)
                ji = algebra.bracket(j, i)
                r1 = -form(ji, {k: 1}) if ji else Fraction(0)
                if lhs != r1:
                    failures.append(("A1", (i, j, k)))
                mix = dict(algebra.bracket(i, k))
                for l, v in algebra.bracket(k, i).items():
                    nv = mix.get(l, 0) + v
                    if nv:
                        mix[l] = nv
                    else:
                        mix.pop(l, None)
                r2 = form(mix, {j: 1}) if mix else Fraction(0)
                if lhs != r2:
                    failures.append(("A2", (i, j, k)))
    return {"passed": not failures, "failures": failures}


def double(algebra, cocycle=None):
    """The double g (+) g* with left/right coadjoint brackets.

    Basis: E_1..E_m = e_1..e_m, E_{m+i} = dual vector e^i.  Products:

        [E_i, E_j]      = bracket of g           (i, j <= m)
        [e_i, a]_j      = - sum_k c(i,j,k) a_k   (left action on duals)
        [a, e_i]_j      = sum_k (c(j,i,k) + c(i,j,k)) a_k
        [a, b]          = 0

    cocycle, if given, is a degree-2 dual-valued twist H: the product of
    two base vectors gains the dual-part - sum_l H(i, j, l) e^l, where
    H(i, j, l) are the coefficients of the scalar 3-cochain.  Returns
    (double_algebra, omega_form).
    """
    require_leibniz(algebra)
    m = algebra.dim
    brackets = {}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            entry = {k: v for k, v in algebra.bracket(i, j).items()}
            if cocycle is not None:
                for l in range(1, m + 1):
                    h = cocycle.coefficient((i, j, l))
                    if h:
                        entry[m + l] = entry.get(m + l, 0) - h
            entry = {k: v for k, v in entry.items() if v}
            if entry:
                brackets[(i, j)] = entry
    for i in range(1, m + 1):
        for a in range(1, m + 1):
            # [e_i, e^a]: component on e^j is -c(i, j, a)
            left = {}
            right = {}
            for j in range(1, m + 1):
                cija = algebra.bracket(i, j).get(a, 0)
                if cija:
                    left[m + j] = -cija
                cjia = algebra.bracket(j, i).get(a, 0)
                s = cjia + cija
                if s:
                    right[m + j] = s
            if left:
                brackets[(i, m + a)] = left
            if right:
                brackets[(m + a, i)] = right
    name = (algebra.name or "g") + "_double"
    if cocycle is not None:
        name += "_twisted"
    dbl = LeibnizAlgebra(2 * m, brackets, name=name)
    omega = BilinearForm(canonical_omega(m))
    return dbl, omega
