"""Tests for the exact Schur calculus layer.

Expected values are either classical bookkeeping checked by hand
(dimension counts from the Weyl product formula) or cross-checked
against the monomial character oracle, which is implemented
independently of the strip-insertion rule.
"""

import itertools
import random

from grasstwist.schur_calculus import (
    FormalSum,
    SchurTerm,
    cauchy_sym,
    char_dual,
    char_mul,
    character_multiplicities,
    clebsch_gordan_rank2,
    format_weight,
    littlewood_richardson,
    normalize_rank2,
    parse_weight,
    partitions_with_parts,
    pieri,
    schur_character,
    twist_term,
    weyl_dimension,
)


def _binom(n, k):
    import math

    return math.comb(n, k)


def test_weight_parse_format_roundtrip():
    assert parse_weight("2,1") == (2, 1)
    assert parse_weight("-4") == (-4,)
    assert format_weight((1, 0, 0, -1)) == "1,0,0,-1"
    assert parse_weight(format_weight((3, -2, 0))) == (3, -2, 0)


def test_weyl_dimension_values():
    assert weyl_dimension((0, 0), 2) == 1
    assert weyl_dimension((1, 0), 2) == 2
    assert weyl_dimension((2, 1, 0), 3) == 8
    # adjoint of gl_4 minus trace
    assert weyl_dimension((1, 0, 0, -1), 4) == 15
    assert weyl_dimension((3, 2, 0, 0), 4) == 60
    try:
        weyl_dimension((0, 1), 2)
        assert False, "non-dominant weight accepted"
    except ValueError:
        pass


def test_lr_small_products():
    assert littlewood_richardson((1, 0), (2, 0), 2) == {(3, 0): 1, (2, 1): 1}
    assert littlewood_richardson((2, 1, 0), (2, 1, 0), 3) == {
        (2, 2, 2): 1,
        (3, 2, 1): 2,
        (3, 3, 0): 1,
        (4, 1, 1): 1,
        (4, 2, 0): 1,
    }
    # negative entries go through the determinant shift
    assert littlewood_richardson((0, -1), (1, 0), 2) == {(1, -1): 1, (0, 0): 1}
    assert littlewood_richardson((0, -1), (2, 1), 2) == {(2, 0): 1, (1, 1): 1}


def test_lr_rejects_mismatched_lengths():
    try:
        littlewood_richardson((2, 1), (1, 0, 0), 3)
        assert False, "length mismatch accepted"
    except ValueError:
        pass


def test_lr_dimension_identity_sweep():
    rng = random.Random(20260814)
    for n in (2, 3, 4):
        for _ in range(120):
            lam = tuple(sorted((rng.randint(-3, 5) for _ in range(n)), reverse=True))
            mu = tuple(sorted((rng.randint(-3, 5) for _ in range(n)), reverse=True))
            lr = littlewood_richardson(lam, mu, n)
            lhs = weyl_dimension(lam, n) * weyl_dimension(mu, n)
            rhs = sum(m * weyl_dimension(w, n) for w, m in lr.items())
            assert lhs == rhs, (lam, mu, lr)
            assert all(m > 0 for m in lr.values())


def test_lr_matches_character_oracle():
    for n in (2, 3):
        parts = []
        for size in range(5):
            parts.extend(
                tuple(p) + (0,) * (n - len(p)) for p in partitions_with_parts(size, n)
            )
        for lam, mu in itertools.product(parts, repeat=2):
            prod = char_mul(schur_character(lam, n), schur_character(mu, n))
            assert character_multiplicities(prod, n) == littlewood_richardson(
                lam, mu, n
            ), (lam, mu)


def test_character_basics():
    assert schur_character((2, 1), 2) == {(2, 1): 1, (1, 2): 1}
    assert schur_character((1, 0, 0), 3) == {
        (1, 0, 0): 1,
        (0, 1, 0): 1,
        (0, 0, 1): 1,
    }
    # characters of single irreducibles come back as single multiplicities
    for n in (2, 3):
        for lam in ((2, 0) + (0,) * (n - 2), (3, 1) + (0,) * (n - 2)):
            assert character_multiplicities(schur_character(lam, n), n) == {lam: 1}
    # duality on the character level
    ch = schur_character((2, 1), 2)
    dual = char_dual(ch)
    assert character_multiplicities(dual, 2) == {(-1, -2): 1}


def test_pieri_is_wedge_multiplication():
    assert pieri((2, 0), 1, 2) == {(3, 0): 1, (2, 1): 1}
    assert pieri((2, 0), 2, 2) == {(3, 1): 1}
    assert pieri((1, 0, 0), 2, 3) == {(2, 1, 0): 1, (1, 1, 1): 1}
    for n in (2, 3, 4):
        parts = []
        for size in range(5):
            parts.extend(
                tuple(p) + (0,) * (n - len(p)) for p in partitions_with_parts(size, n)
            )
        for lam in parts:
            for j in range(n + 1):
                wedge = (1,) * j + (0,) * (n - j)
                assert pieri(lam, j, n) == littlewood_richardson(lam, wedge, n)


def test_clebsch_gordan_agrees_with_lr():
    rng = random.Random(7)
    for _ in range(200):
        x = tuple(sorted((rng.randint(-4, 6) for _ in range(2)), reverse=True))
        y = tuple(sorted((rng.randint(-4, 6) for _ in range(2)), reverse=True))
        assert clebsch_gordan_rank2(x, y) == littlewood_richardson(x, y, 2), (x, y)


def test_cauchy_sym_partitions():
    assert cauchy_sym(2, 4, 2) == [(2, 0), (1, 1)]
    assert cauchy_sym(0, 4, 2) == [(0, 0)]
    assert cauchy_sym(3, 5, 2) == [(3, 0), (2, 1)]
    assert (4, 0) in cauchy_sym(4, 4, 2)
    try:
        cauchy_sym(-1, 4, 2)
        assert False
    except ValueError:
        pass
    try:
        cauchy_sym(2, 2, 3)
        assert False
    except ValueError:
        pass


def test_cauchy_dimension_identity():
    # Sym^k(C^r tensor C^d) decomposes along paired partitions
    for d in range(2, 6):
        for k in range(7):
            total = sum(
                weyl_dimension(p, 2) * weyl_dimension(p + (0,) * (d - 2), d)
                for p in cauchy_sym(k, d, 2)
            )
            assert total == _binom(2 * d + k - 1, k), (d, k)


def test_normalize_rank2():
    # Sym^m of the dual sub, twisted
    assert normalize_rank2(2, 1, True).s_weight == (3, 1)
    assert normalize_rank2(0, 0, True).s_weight == (0, 0)
    # Sym^m of the sub itself
    assert normalize_rank2(2, 0, False).s_weight == (0, -2)
    # the rank-two identification of sub with twisted dual sub
    assert normalize_rank2(1, 0, False) == normalize_rank2(1, -1, True)
    try:
        normalize_rank2(-1, 0, True)
        assert False
    except ValueError:
        pass


def test_twist_term_moves_both_entries():
    t = SchurTerm(s_weight=(1, 0), v_weight=(), shift=0, cstar=0)
    assert twist_term(t, 2).s_weight == (3, 2)
    assert twist_term(t, -1).s_weight == (0, -1)


def test_formal_sum_algebra():
    a = SchurTerm(s_weight=(1, 0))
    b = SchurTerm(s_weight=(2, 0), shift=-1)
    fs = FormalSum()
    fs.add(a, 2)
    fs.add(b, 1)
    fs.add(a, -2)
    assert len(fs) == 1 and fs.items() == [(b, 1)]
    other = FormalSum()
    other.add(b, -1)
    total = fs + other
    assert len(total) == 0
    fs2 = FormalSum()
    fs2.add(a, 3)
    doubled = fs2.scale(2)
    assert doubled.items() == [(a, 6)]
    assert fs2.items() == [(a, 3)]
    obj = doubled.to_json_obj()
    assert obj[0]["mult"] == 6 and obj[0]["s_weight"] == "1,0"
