"""Cochains: differentials, lowering, the anti-cyclic space, classes."""

import itertools
from fractions import Fraction

import pytest

from leibcx import catalog
from leibcx.cochains import (Cochain, DualValuedCochain, anti_cyclic_basis,
                             anti_cyclic_constraint_rows, bracket_coords_table,
                             classify_extension,
                             coboundary_matrix_on_anti_cyclic, cohomology,
                             from_implicit, is_anti_cyclic, lower,
                             lp_coboundary, lp_differential, same_row_space,
                             symmetry_identity_rows, to_implicit)
from leibcx.complexes import boundary_matrix, free_lie_basis, homology
from leibcx.errors import InputError
from leibcx.exactla import transpose


def test_lp_differential_frozen():
    L2 = catalog.get("L2")
    f = DualValuedCochain(1, 2, {((1,), 2): 1})  # f(e1) = e^2
    df = lp_differential(L2, f)
    # [f(e1), e1] + [e1, f(e1)] - f([e1,e1]) = 2e^1 - e^1 - 0 = e^1
    assert df.value((1, 1)) == {1: 1}
    assert df.value((2, 2)) == {}
    assert df.value((1, 2)) == {}
    # f(e2) = 0 so only the coadjoint terms act at (2, 1)
    assert df.value((2, 1)) == {}


def test_lp_differential_degree0():
    L2 = catalog.get("L2")
    phi = DualValuedCochain(0, 2, {((), 1): 1})  # the functional e^1
    dphi = lp_differential(L2, phi)
    # (d phi)(x) = [phi, x]; [e^1, e1] = (c(j,1,k)+c(1,j,k)) a_k = 0 at k=1
    assert dphi.value((1,)) == {}
    assert dphi.value((2,)) == {}
    psi = DualValuedCochain(0, 2, {((), 2): 1})  # e^2
    dpsi = lp_differential(L2, psi)
    assert dpsi.value((1,)) == {1: 2}  # [e^2, e1] = 2 e^1


def test_lower_sign():
    f = DualValuedCochain(1, 2, {((1,), 2): Fraction(3)})
    ft = lower(f)
    assert ft.coefficient((1, 2)) == -3
    assert ft.arity == 2


def test_lp_coboundary_frozen():
    L2 = catalog.get("L2")
    phi = Cochain(1, 2, {(2,): 1})  # phi(e2) = 1
    b = lp_coboundary(L2, phi)
    # (b phi)(x1, x2) = phi([x1,x2] + [x2,x1])
    assert b.coefficient((1, 1)) == 2
    assert b.coefficient((1, 2)) == 0


def test_tilde_relation_full_basis():
    # b(lower f) == (-1)^arity lower(d f) over every delta cochain
    for name in ("L2", "N3"):
        A = catalog.get(name)
        m = A.dim
        for n in (0, 1, 2):
            sign = (-1) ** n
            for w in itertools.product(range(1, m + 1), repeat=n):
                for l in range(1, m + 1):
                    f = DualValuedCochain(n, m, {(w, l): 1})
                    lhs = lp_coboundary(A, lower(f))
                    rhs = sign * lower(lp_differential(A, f))
                    assert lhs == rhs, (name, w, l)


def test_is_anti_cyclic_degree1():
    sym = Cochain(2, 2, {(1, 2): 1, (2, 1): 1, (1, 1): 5})
    assert is_anti_cyclic(sym)
    asym = Cochain(2, 2, {(1, 2): 1})
    assert not is_anti_cyclic(asym)


def test_anti_cyclic_basis_properties():
    for m in (1, 2, 3):
        for degree in (1, 2):
            basis = anti_cyclic_basis(m, degree)
            assert len(basis) == free_lie_basis(m, degree + 1).dim
            sl = free_lie_basis(m, degree + 1)
            for k, a in enumerate(basis):
                assert is_anti_cyclic(a), (m, degree, k)
                # A_k picks out the k-th coordinate on basis words
                for j, b in enumerate(sl.words):
                    assert a.coefficient(b) == (1 if j == k else 0)


def test_implicit_round_trip():
    m = 2
    vec = [Fraction(2), Fraction(-1, 3)]
    a = from_implicit(vec, m, 2)
    assert is_anti_cyclic(a)
    assert to_implicit(a) == vec
    bad = Cochain(3, 2, {(1, 2, 2): 1})
    with pytest.raises(InputError):
        to_implicit(bad)


def test_coboundary_transpose_identity():
    for name in ("L2", "N3", "sl2", "heis3", "doubleL2"):
        A = catalog.get(name)
        for degree in (0, 1, 2):
            mat, preserved = coboundary_matrix_on_anti_cyclic(A, degree)
            assert preserved, (name, degree)
            assert mat == transpose(boundary_matrix(A, degree + 2)), \
                (name, degree)


def test_cohomology_matches_homology():
    for name in catalog.VALID_NAMES:
        A = catalog.get(name)
        co = cohomology(A, max_degree=4)
        ho = homology(A, max_degree=4)
        assert co["HA"] == ho["HA"], name
        assert all(co["preserved"].values()), name


def test_cohomology_rejects_bad_input():
    with pytest.raises(InputError):
        cohomology(catalog.get("B1"))


def test_classify_coboundary_trivial():
    L2 = catalog.get("L2")
    tau = DualValuedCochain(1, 2, {((1,), 1): 1})
    bt = lp_coboundary(L2, lower(tau))
    rep = classify_extension(L2, bt)
    assert rep == {"anti_cyclic": True, "closed": True, "trivial": True,
                   "class": [], "h2_dim": 0}


def test_classify_abelian_classes_distinct():
    A2 = catalog.get("abelian2")
    basis = anti_cyclic_basis(2, 2)
    reps = [classify_extension(A2, a) for a in basis]
    for rep in reps:
        assert rep["anti_cyclic"] and rep["closed"] and not rep["trivial"]
        assert rep["h2_dim"] == 2
    assert reps[0]["class"] != reps[1]["class"]


def test_classify_rejects_wrong_arity():
    with pytest.raises(InputError):
        classify_extension(catalog.get("L2"), Cochain(2, 2, {}))


def test_classify_non_cocycle_reported():
    L2 = catalog.get("L2")
    rep = classify_extension(L2, from_implicit([0, 1], 2, 2))
    assert rep["anti_cyclic"] and not rep["closed"]
    assert rep["trivial"] is None and rep["class"] is None


def test_constraint_spaces_match_identities():
    for m in (1, 2, 3, 4):
        for arity in (3, 4):
            rows_def, _ = anti_cyclic_constraint_rows(m, arity)
            rows_sym, _ = symmetry_identity_rows(m, arity)
            assert same_row_space(rows_def, rows_sym), (m, arity)


def test_same_row_space_negative():
    a = [{0: Fraction(1)}]
    b = [{1: Fraction(1)}]
    assert not same_row_space(a, b)
    assert not same_row_space(a, a + b)


def test_bracket_coords_table_consistency():
    table = bracket_coords_table(2, 3)
    sl = free_lie_basis(2, 3)
    for w, coords in table.items():
        assert coords == sl.coords({w: Fraction(1)})
