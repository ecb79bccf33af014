"""Basis slices, boundaries, homology tables, and the graded Lie suite."""

from fractions import Fraction

import pytest

from leibcx import catalog
from leibcx.complexes import (DGLA, boundary_apply, boundary_matrix,
                              boundary_square_report, boundary_word_terms,
                              dgla_suite, free_lie_basis, homology,
                              intertwining_report, ker2_invariance,
                              kernel2_basis, loday_apply, loday_matrix,
                              omega0)
from leibcx.errors import InputError
from leibcx.words import LieElement, TensorElement

FROZEN_DIMS = {
    1: [1, 1, 0, 0, 0],
    2: [2, 3, 2, 3, 6],
    3: [3, 6, 8, 18, 48],
    4: [4, 10, 20, 60, 204],
}


def test_slice_dims_frozen():
    for m, dims in FROZEN_DIMS.items():
        assert [free_lie_basis(m, n).dim for n in range(1, 6)] == dims


def test_l2_slice3_words():
    sl = free_lie_basis(2, 3)
    assert sl.words == [(1, 1, 2), (1, 2, 2)]


def test_slice_coords_round_trip():
    sl = free_lie_basis(2, 3)
    # {2,1,1} = -2 {1,1,2}: head 2 against the symmetric pair {1,1}
    coords = sl.coords({(2, 1, 1): Fraction(1)})
    assert coords == {0: Fraction(-2)}
    assert sl.element(coords) == LieElement({(2, 1, 1): 1})


def test_boundary_low_degrees_frozen():
    L2 = catalog.get("L2")
    # del {x1, x2} = [x1,x2] + [x2,x1]
    assert boundary_word_terms(L2, (1, 1)) == {(2,): 2}
    assert boundary_word_terms(L2, (1, 2)) == {}
    # del {1,1,2} = {2,2}; del {1,2,2} = 0
    assert boundary_word_terms(L2, (1, 1, 2)) == {(2, 2): 1}
    assert boundary_word_terms(L2, (1, 2, 2)) == {}


def test_boundary_degree3_shape():
    # del(x1,x2,x3) = ([x1,x2],x3) + (x2,[x1,x3]) - (x1,[x2,x3]+[x3,x2])
    sl2 = catalog.get("sl2")
    got = boundary_word_terms(sl2, (1, 2, 3), "main")
    # [h,e]=2e, [h,f]=-2f, [e,f]=h, [f,e]=-h
    want = {}
    # ([h,e], f) = 2 (e, f)
    want[(2, 3)] = want.get((2, 3), 0) + 2
    # (e, [h,f]) = -2 (e, f)
    want[(2, 3)] = want.get((2, 3), 0) - 2
    # -(h, [e,f]+[f,e]) = -(h, h - h) = 0
    want = {w: c for w, c in want.items() if c}
    assert got == want


def test_boundary_variants_identical():
    for name in ("L2", "N3", "sl2", "doubleL2"):
        A = catalog.get(name)
        import itertools
        for n in (2, 3, 4):
            for w in itertools.product(range(1, A.dim + 1), repeat=n):
                assert boundary_word_terms(A, w, "main") == \
                    boundary_word_terms(A, w, "alt")


def test_boundary_squares_zero():
    for name in catalog.VALID_NAMES:
        rep = boundary_square_report(catalog.get(name), max_degree=4)
        assert all(v["passed"] for v in rep.values()), name


def test_b1_tensor_square_fails():
    rep = boundary_square_report(catalog.get("B1"), max_degree=3)
    assert not rep["loday_square_zero"]["passed"]
    assert (1, 1, 1) in rep["loday_square_zero"]["failures"]


def test_intertwining():
    for name in catalog.VALID_NAMES:
        rep = intertwining_report(catalog.get(name), max_length=4)
        assert rep["passed"], name


def test_loday_matrix_rank_l2():
    L2 = catalog.get("L2")
    mat = loday_matrix(L2, 2)
    # del_L(x (x) y) = [x, y]; image is [g, g] = span{e2}
    nonzero = [c for row in mat for c in row if c]
    assert nonzero == [Fraction(1)]


def test_homology_frozen_tables():
    expected = {
        "abelian1": ({2: 0, 3: 0, 4: 0, 5: 0}, {0: 1, 1: 1, 2: 0, 3: 0}),
        "abelian2": ({2: 0, 3: 0, 4: 0, 5: 0}, {0: 2, 1: 3, 2: 2, 3: 3}),
        "abelian3": ({2: 0, 3: 0, 4: 0, 5: 0}, {0: 3, 1: 6, 2: 8, 3: 18}),
        "abelian4": ({2: 0, 3: 0, 4: 0, 5: 0}, {0: 4, 1: 10, 2: 20, 3: 60}),
        "L2": ({2: 1, 3: 1, 4: 1, 5: 2}, {0: 1, 1: 1, 2: 0, 3: 0}),
        "N3": ({2: 2, 3: 3, 4: 5, 5: 13}, {0: 1, 1: 1, 2: 0, 3: 0}),
        "sl2": ({2: 0, 3: 5, 4: 3, 5: 15}, {0: 3, 1: 1, 2: 0, 3: 0}),
        "heis3": ({2: 0, 3: 3, 4: 2, 5: 12}, {0: 3, 1: 3, 2: 3, 3: 4}),
        "doubleL2": ({2: 2, 3: 5, 4: 13, 5: 44}, {0: 2, 1: 3, 2: 2, 3: 3}),
    }
    for name, (ranks, ha) in expected.items():
        rep = homology(catalog.get(name), max_degree=5)
        assert rep["ranks"] == ranks, name
        assert rep["HA"] == ha, name


def test_homology_loday_frozen():
    rep = homology(catalog.get("L2"), max_degree=5, loday=True)
    assert rep["HL"] == {0: 1, 1: 1, 2: 1, 3: 1}
    rep = homology(catalog.get("sl2"), max_degree=5, loday=True)
    assert rep["HL"] == {0: 0, 1: 0, 2: 0, 3: 0}
    rep = homology(catalog.get("heis3"), max_degree=5, loday=True)
    assert rep["HL"] == {0: 2, 1: 5, 2: 10, 3: 22}


def test_homology_rejects_bad_input():
    with pytest.raises(InputError):
        homology(catalog.get("B1"))
    with pytest.raises(InputError):
        homology(catalog.get("L2"), max_degree=1)


def test_omega0_frozen():
    assert omega0(catalog.get("sl2")) == {"dim": 1, "rank": 8,
                                          "relations": 25}
    assert omega0(catalog.get("heis3"))["dim"] == 3
    assert omega0(catalog.get("abelian2"))["dim"] == 3
    assert omega0(catalog.get("abelian4"))["dim"] == 10
    with pytest.raises(InputError):
        omega0(catalog.get("L2"))  # not antisymmetric


def test_kernel2_and_invariance():
    L2 = catalog.get("L2")
    ker = kernel2_basis(L2)
    # F^2 = {(1,1),(1,2),(2,2)}; del kills (1,2) and (2,2)
    assert len(ker) == 2
    for name in catalog.VALID_NAMES:
        A = catalog.get(name)
        for sub in catalog.lie_subalgebras(name):
            assert ker2_invariance(A, sub)["passed"], (name, sub)


def test_dgla_component_dims():
    dg = DGLA(catalog.get("L2"), max_degree=4)
    assert dg.component_dims() == {0: 1, -1: 2, -2: 3, -3: 2, -4: 3}


def test_dgla_derived_bracket_values():
    dg = DGLA(catalog.get("L2"), max_degree=2)
    x1 = dg.word_element((1,))
    d = dg.differential(x1)
    assert d.gl == {1: 1}
    # (D x1, x1) = {[e1, e1]} = {e2}
    res = dg.bracket(d, x1)
    assert res.parts == {1: {1: 1}}


def test_dgla_action_drops_ideal():
    dg = DGLA(catalog.get("N3"), max_degree=3)
    # e2 and e3 span the ideal; their action must vanish identically
    for vec in ({2: Fraction(1)}, {3: Fraction(1)}):
        for n in (1, 2, 3):
            for p in range(dg.slices[n].dim):
                assert dg.act(vec, n, {p: Fraction(1)}) == {}


def test_dgla_suite_small():
    checks = dgla_suite(catalog.get("L2"), max_degree=3)
    assert all(v["passed"] for v in checks.values()), checks
