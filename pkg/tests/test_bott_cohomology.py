"""Tests for the dotted-Weyl-action cohomology rule and the collection.

The rank-one table over projective space is frozen by hand: twists of
degree >= 0 have only sections, the next d-1 twists are acyclic, and
degree -d gives the determinant line in top degree. Serre duality is
used as a structural check with fresh random weights.
"""

import random

from grasstwist.bott_cohomology import (
    bott,
    bott_result_to_dict,
    dual_v_weight,
    hom_bundle_decomposition,
    kapranov_collection,
    strong_exceptional_check,
)
from grasstwist.schur_calculus import weyl_dimension


def test_rank_one_table():
    d = 4
    for m in range(0, 9):
        res = bott(1, d, (m,))
        assert not res.zero and res.degree == 0
        assert res.rep == (m,) + (0,) * (d - 1)
    for m in range(-d + 1, 0):
        assert bott(1, d, (m,)).zero
    res = bott(1, d, (-d,))
    assert res.degree == d - 1 and res.rep == (-1,) * d
    # same shape for every d
    for d in range(2, 7):
        res = bott(1, d, (-d,))
        assert res.degree == d - 1 and res.rep == (-1,) * d
        assert all(bott(1, d, (m,)).zero for m in range(-d + 1, 0))


def test_rank_two_basics():
    # global sections of the twisted tangent directions on Gr(2,4)
    res = bott(2, 4, (1, 0), (0, -1))
    assert res.degree == 0 and res.rep == (1, 0, 0, -1)
    assert weyl_dimension(res.rep, 4) == 15
    # the sub itself and the dual quotient are acyclic
    assert bott(2, 4, (0, -1)).zero
    assert bott(2, 4, (0, 0), (1, 0)).zero
    # structure sheaf
    res = bott(2, 4, (0, 0))
    assert res.degree == 0 and res.rep == (0, 0, 0, 0)


def test_bott_validation():
    for bad in (((1, 0, 0),), ((1,),)):
        try:
            bott(2, 4, *bad)
            assert False, "bad weight length accepted"
        except ValueError:
            pass
    try:
        bott(4, 4, (1, 1, 1, 1))
        assert False
    except ValueError:
        pass
    try:
        bott(2, 4, (1, 0), (0, 0, -1, 0))
        assert False
    except ValueError:
        pass


def test_bott_result_to_dict_labels():
    obj = bott_result_to_dict(bott(1, 4, (-4,)), 4)
    assert obj["label"] == "det V" and obj["dim"] == 1
    obj = bott_result_to_dict(bott(2, 4, (0, 0)), 4)
    assert obj["label"] == "O" and obj["dim"] == 1
    assert bott_result_to_dict(bott(1, 4, (-2,))) == {"zero": True}


def test_serre_duality_sweep():
    # pairing a bundle with its Serre twin lands in complementary degree
    rng = random.Random(99)
    for d in (4, 5):
        r = 2
        dim_gr = r * (d - r)
        for _ in range(300):
            alpha = tuple(sorted((rng.randint(-4, 4) for _ in range(r)), reverse=True))
            beta = tuple(
                sorted((rng.randint(-4, 4) for _ in range(d - r)), reverse=True)
            )
            res = bott(r, d, alpha, beta)
            alpha2 = tuple(-x - (d - r) for x in reversed(alpha))
            beta2 = tuple(-x + r for x in reversed(beta))
            twin = bott(r, d, alpha2, beta2)
            if res.zero:
                assert twin.zero
                continue
            assert twin.degree == dim_gr - res.degree
            assert twin.rep == tuple(-x for x in reversed(res.rep))


def test_dual_v_weight():
    assert dual_v_weight((2, 1, 0)) == (0, -1, -2)
    assert dual_v_weight(dual_v_weight((3, 0, -1))) == (3, 0, -1)


def test_kapranov_collection():
    assert kapranov_collection(2, 4) == [
        (0, 0),
        (1, 0),
        (1, 1),
        (2, 0),
        (2, 1),
        (2, 2),
    ]
    for d in range(3, 7):
        coll = kapranov_collection(2, d)
        assert len(coll) == d * (d - 1) // 2
        assert coll == sorted(coll)
        assert all(d - 2 >= a >= b >= 0 for a, b in coll)


def test_hom_bundle_decomposition():
    # Hom(sub-dual, Sym^2 sub-dual) as Schur components of the dual sub
    assert hom_bundle_decomposition((1, 0), (2, 0)) == {(2, -1): 1, (1, 0): 1}
    assert hom_bundle_decomposition((1, 1), (2, 1)) == {(1, 0): 1}


def test_strong_exceptional_check_d4():
    rep = strong_exceptional_check(2, 4)
    assert rep["pass"] and rep["pairs_checked"] == 36
    assert rep["failures"] == []
    mat = rep["hom_matrix"]
    # frozen first row: maps out of the structure sheaf
    assert mat[0] == [1, 4, 6, 10, 20, 20]
    n = len(mat)
    for i in range(n):
        assert mat[i][i] == 1
        for j in range(i):
            assert mat[i][j] == 0


def test_strong_exceptional_check_other_d():
    for d in (3, 5):
        rep = strong_exceptional_check(2, d)
        assert rep["pass"], d
        n = d * (d - 1) // 2
        assert rep["pairs_checked"] == n * n
