"""Spin membership, the double cover, explicit Weyl matrices, splitting."""

import random
from fractions import Fraction
from itertools import permutations

import pytest

from spinforge.clifford import MultiVector, parse_text, weyl_generator
from spinforge.coeff import CYCLO8, QQ
from spinforge.rootdata import sign_changes
from spinforge.spingroup import (InfeasibleError, MembershipError, SOMatrix,
                                 SpinElement, compose_signed_permutation,
                                 d_epsilon_matrix, element_order,
                                 extension_splits, hyperbolic_torus_element,
                                 is_gspin, lift_sign_change, permutation_block,
                                 project, weyl_section)


def int_matrix(rows, ring=QQ):
    return SOMatrix(ring, [[ring.from_int(x) for x in row] for row in rows])


def swap_matrix(m, flips, ring=QQ, middle_sign=1):
    """Identity with column pairs (i, m+1-i) swapped at 1-based indices."""
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        rows[i][i] = 1
    for i in flips:
        j = m + 1 - i
        rows[i - 1][i - 1] = rows[j - 1][j - 1] = 0
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = 1
    if m % 2:
        rows[m // 2][m // 2] = middle_sign
    return int_matrix(rows, ring)


# ---------------------------------------------------------------------------
# membership

def test_is_gspin_examples():
    m = 8
    assert is_gspin(MultiVector.one(m, QQ)) == "spin"
    w1w2 = weyl_generator(1, m, CYCLO8) * weyl_generator(2, m, CYCLO8)
    assert is_gspin(w1w2) == "spin"
    assert is_gspin(parse_text("1*e1", m, QQ)) == "neither"      # odd
    assert is_gspin(parse_text("2", m, QQ)) == "gspin"           # norm 4
    assert is_gspin(parse_text("1*e1 f1", m, QQ)) == "neither"   # norm 0


def test_spin_element_constructor_verifies():
    with pytest.raises(MembershipError):
        SpinElement(parse_text("1*e1", 8, QQ))
    g = SpinElement(MultiVector.one(8, QQ))
    assert g.norm == QQ.one


# ---------------------------------------------------------------------------
# the covering map

def test_project_identity():
    g = SpinElement(MultiVector.one(8, QQ))
    assert project(g) == SOMatrix.identity(QQ, 8)


def test_project_w1w2_even():
    m = 8
    g = SpinElement(weyl_generator(1, m, CYCLO8) * weyl_generator(2, m, CYCLO8))
    assert project(g) == swap_matrix(m, (1, 2), ring=CYCLO8)


def test_project_omega1_odd():
    m = 7
    g = SpinElement(weyl_generator(1, m, CYCLO8))
    assert project(g) == swap_matrix(m, (1,), ring=CYCLO8, middle_sign=-1)


def test_project_torus_element():
    m, u = 7, Fraction(3, 2)
    g = hyperbolic_torus_element(1, u, m, QQ)
    mat = project(g)
    assert mat.rows[0][0] == u * u
    assert mat.rows[m - 1][m - 1] == 1 / (u * u)
    assert mat.rows[1][1] == 1


def test_projection_is_multiplicative():
    rng = random.Random(41)
    for m in (7, 8, 9):
        n = m // 2
        kind = "B" if m % 2 else "D"
        eps_list = list(sign_changes(n, kind))
        for _ in range(15):
            a = lift_sign_change(rng.choice(eps_list), m)
            b = lift_sign_change(rng.choice(eps_list), m)
            assert project(a * b) == project(a) * project(b)


def test_projection_kernel_is_plus_minus_one():
    for m in (7, 8):
        n = m // 2
        kind = "B" if m % 2 else "D"
        identity = SOMatrix.identity(CYCLO8, m)
        one = MultiVector.one(m, CYCLO8)
        for eps in sign_changes(n, kind):
            g = lift_sign_change(eps, m)
            assert project(g) == project(-g)
            for h in (g, -g):
                if project(h) == identity:
                    assert h.mv in (one, -one)


# ---------------------------------------------------------------------------
# explicit Weyl matrices

def test_d_epsilon_examples():
    n4 = (1, 1, 1, 1)
    assert d_epsilon_matrix(n4, 8) == SOMatrix.identity(QQ, 8)
    assert d_epsilon_matrix((-1, -1, 1, 1), 8) == swap_matrix(8, (1, 2))
    assert d_epsilon_matrix((-1, 1, 1), 7) == swap_matrix(7, (1,), middle_sign=-1)


def test_d_epsilon_parity_enforced():
    with pytest.raises(ValueError):
        d_epsilon_matrix((-1, 1, 1, 1), 8)


def test_d_epsilon_involutions():
    for m in (7, 8, 9):
        n = m // 2
        kind = "B" if m % 2 else "D"
        for eps in sign_changes(n, kind):
            d = d_epsilon_matrix(eps, m)
            assert d * d == SOMatrix.identity(QQ, m)


def test_weyl_section_identity_and_block_shape():
    n = 4
    ident = weyl_section((1,) * n, tuple(range(n)), 8)
    assert ident == SOMatrix.identity(QQ, 8)
    swap = weyl_section((1,) * n, (1, 0, 2, 3), 8)
    # upper block is the transposition matrix, lower block its mirrored copy
    rows = swap.rows
    assert rows[0][1] == rows[1][0] == QQ.one
    assert rows[6][7] == rows[7][6] == QQ.one
    assert rows[2][2] == rows[5][5] == QQ.one


def test_weyl_section_homomorphism_small_ranks():
    for m in (5, 6, 7):
        n = m // 2
        kind = "B" if m % 2 else "D"
        group = [(eps, sigma)
                 for eps in sign_changes(n, kind)
                 for sigma in permutations(range(n))]
        assert len(group) in (8, 24, 48)
        for w1 in group:
            for w2 in group:
                w12 = compose_signed_permutation(w1, w2)
                lhs = weyl_section(w1[0], w1[1], m) * weyl_section(w2[0], w2[1], m)
                assert lhs == weyl_section(w12[0], w12[1], m), (m, w1, w2)


def test_permutation_block_rejects_bad_input():
    with pytest.raises(ValueError):
        permutation_block((0, 0, 1), 7)


# ---------------------------------------------------------------------------
# lifts and orders

def test_lift_coherence_exhaustive():
    for n in (1, 2, 3, 4):
        for m in (2 * n + 1, 2 * n):
            kind = "B" if m % 2 else "D"
            for eps in sign_changes(n, kind):
                lifted = lift_sign_change(eps, m)
                assert project(lifted) == d_epsilon_matrix(eps, m, ring=CYCLO8)


def test_lift_trivial_sign_change():
    g = lift_sign_change((1, 1, 1), 7)
    assert g.mv == MultiVector.one(7, CYCLO8)


def test_element_order_examples():
    assert element_order(SpinElement(MultiVector.one(7, CYCLO8)), 4) == 1
    w0_7 = lift_sign_change((-1, -1, -1), 7)
    assert element_order(w0_7, 8) == 2
    w0_11 = lift_sign_change((-1,) * 5, 11)
    # square is -1 by the sign law, and -1 has order two
    assert w0_11.mv * w0_11.mv == -MultiVector.one(11, CYCLO8)
    assert element_order(w0_11, 8) == 4


def test_order_classification_across_dimensions():
    for m in (7, 8, 9, 11, 12, 13, 15, 16, 17):
        n = m // 2
        if m % 2 == 0 and n % 2:
            continue  # longest element does not act as -1
        g = lift_sign_change((-1,) * n, m)
        order = element_order(g, 8)
        want = 2 if (m >= 7 and m % 8 in (0, 1, 7)) else 4
        assert order == want, m


# ---------------------------------------------------------------------------
# the splitting question

def test_extension_splits_trivial_group():
    rec = extension_splits(1, "D")
    assert rec.splits and rec.section is not None


def test_extension_nonsplit_rank_one():
    rec = extension_splits(1, "B")
    assert not rec.splits
    assert rec.obstruction == (((-1,)), ((-1,)))


def test_extension_nonsplit_small_ranks():
    for n in (2, 3, 4):
        for kind in ("B", "D"):
            assert not extension_splits(n, kind).splits, (n, kind)


def test_extension_infeasible_guard():
    with pytest.raises(InfeasibleError):
        extension_splits(5, "B")


def test_hyperbolic_torus_homomorphism():
    rng = random.Random(43)
    m = 7
    for _ in range(20):
        u = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        v = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        gu = hyperbolic_torus_element(2, u, m, QQ)
        gv = hyperbolic_torus_element(2, v, m, QQ)
        guv = hyperbolic_torus_element(2, u * v, m, QQ)
        assert (gu * gv).mv == guv.mv
