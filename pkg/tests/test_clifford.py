"""Clifford algebra multiplication, the anti-involution, lifts, serialization."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from spinforge.clifford import (MultiVector, basis_name, basis_position,
                                clifford_norm, parse_text, pairing_on_v,
                                to_text, weyl_generator)
from spinforge.coeff import CYCLO8, QQ, Cyclo8, PrimeField, UnsupportedRingError


def mv(text, m, ring=QQ):
    return parse_text(text, m, ring)


def random_multivector(m, rng, max_terms=4, max_len=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = tuple(sorted(rng.sample(range(m), rng.randint(0, max_len))))
        terms[mono] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return MultiVector(m, QQ, terms)


def random_vector(m, rng):
    coords = [Fraction(rng.randint(-5, 5)) for _ in range(m)]
    terms = {(i,): c for i, c in enumerate(coords) if c}
    return coords, MultiVector(m, QQ, terms)


# ---------------------------------------------------------------------------
# multiplication

def test_mul_isotropic_square():
    m = 7
    e1 = mv("1*e1", m)
    assert e1 * e1 == MultiVector.zero(m, QQ)


def test_mul_hyperbolic_relation():
    # oracle: (e1 + f1)^2 = Q(e1 + f1) = 2, which forces f1 e1 = 2 - e1 f1
    m = 7
    e1, f1 = mv("1*e1", m), mv("1*f1", m)
    s = e1 + f1
    assert s * s == mv("2", m)
    assert f1 * e1 == mv("2", m) - e1 * f1
    assert f1 * e1 == mv("2 + -1*e1 f1", m)


def test_mul_u0_squares_to_one():
    m = 7
    u0 = mv("1*u0", m)
    assert u0 * u0 == MultiVector.one(m, QQ)


def test_weyl_generator_square_is_minus_one():
    for m in (7, 8):
        w1 = weyl_generator(1, m, CYCLO8)
        assert w1 * w1 == MultiVector.scalar(m, CYCLO8, CYCLO8.from_int(-1))


def test_universal_relation_random():
    rng = random.Random(23)
    for _ in range(200):
        m = rng.choice([5, 6, 7, 8, 9])
        x, vx = random_vector(m, rng)
        y, vy = random_vector(m, rng)
        form = pairing_on_v(x, y, m, QQ)
        lhs = vx * vy + vy * vx
        assert lhs == MultiVector.scalar(m, QQ, 2 * form)


def test_associativity_random():
    rng = random.Random(29)
    for _ in range(60):
        m = rng.choice([5, 7, 8, 9])
        a, b, c = (random_multivector(m, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_mixed_dimension_rejected():
    with pytest.raises(ValueError):
        mv("1*e1", 7) * mv("1*e1", 8)
    with pytest.raises(ValueError):
        mv("1*e1", 7) * parse_text("1*e1", 7, CYCLO8)


# ---------------------------------------------------------------------------
# the anti-involution

def test_star_examples():
    m = 7
    assert MultiVector.one(m, QQ).star() == MultiVector.one(m, QQ)
    e1 = mv("1*e1", m)
    assert e1.star() == -e1
    e1f1 = mv("1*e1 f1", m)
    assert e1f1.star() == mv("2 + -1*e1 f1", m)  # f1 e1 normal-ordered


def test_star_is_anti_automorphism():
    rng = random.Random(31)
    for _ in range(80):
        m = rng.choice([5, 7, 8])
        a, b = random_multivector(m, rng), random_multivector(m, rng)
        assert (a * b).star() == b.star() * a.star()
        assert a.star().star() == a


# ---------------------------------------------------------------------------
# grading, norm

def test_grade_parity():
    m = 7
    assert mv("1*e1 f1", m).grade_parity() == "even"
    assert (mv("1*e1", m) + mv("1*e2", m)).grade_parity() == "odd"
    assert (mv("1", m) + mv("1*e1", m)).grade_parity() == "mixed"
    assert MultiVector.zero(m, QQ).grade_parity() == "zero"


def test_clifford_norm_examples():
    m = 8
    assert clifford_norm(MultiVector.one(m, QQ)) == MultiVector.one(m, QQ)
    w1w2 = weyl_generator(1, m, CYCLO8) * weyl_generator(2, m, CYCLO8)
    assert clifford_norm(w1w2) == MultiVector.one(m, CYCLO8)
    e1 = mv("1*e1", m)
    assert clifford_norm(e1) == MultiVector.zero(m, QQ)


# ---------------------------------------------------------------------------
# generator lifts

def test_weyl_generator_shapes():
    w1 = weyl_generator(1, 8, CYCLO8)
    inv_s2 = CYCLO8.one / CYCLO8.sqrt2()
    want = (MultiVector.from_name(8, CYCLO8, "e1")
            - MultiVector.from_name(8, CYCLO8, "f1")) * inv_s2
    assert w1 == want

    om1 = weyl_generator(1, 7, CYCLO8)
    w0 = MultiVector.from_name(7, CYCLO8, "u0") * CYCLO8.sqrt_minus_one()
    want7 = w0 * ((MultiVector.from_name(7, CYCLO8, "e1")
                   - MultiVector.from_name(7, CYCLO8, "f1")) * inv_s2)
    assert om1 == want7


def test_sign_law():
    for m in (7, 8, 9, 11, 12):
        n = m // 2
        g = MultiVector.one(m, CYCLO8)
        for k in range(1, n + 1):
            g = g * weyl_generator(k, m, CYCLO8)
            want = MultiVector.scalar(m, CYCLO8,
                                      CYCLO8.from_int((-1) ** (k * (k + 1) // 2)))
            assert g * g == want, (m, k)


def test_lift_anticommutation():
    for m in (7, 8):
        n = m // 2
        gens = [weyl_generator(i, m, CYCLO8) for i in range(1, n + 1)]
        for i in range(n):
            for j in range(i + 1, n):
                assert gens[i] * gens[j] == -(gens[j] * gens[i])


def test_weyl_generator_ring_requirements():
    with pytest.raises(UnsupportedRingError):
        weyl_generator(1, 8, QQ)
    with pytest.raises(UnsupportedRingError):
        weyl_generator(1, 7, PrimeField(13))  # 13 = 5 mod 8: no sqrt2


def test_monomial_count_is_2_to_m():
    for m in range(1, 13):
        count = sum(1 for k in range(m + 1) for _ in combinations(range(m), k))
        assert count == 2 ** m


# ---------------------------------------------------------------------------
# text round-trip

def test_basis_names():
    assert [basis_name(p, 7) for p in range(7)] == \
        ["e1", "e2", "e3", "u0", "f3", "f2", "f1"]
    assert [basis_name(p, 8) for p in range(8)] == \
        ["e1", "e2", "e3", "e4", "f4", "f3", "f2", "f1"]
    assert basis_position("u0", 7) == 3
    with pytest.raises(ValueError):
        basis_position("u0", 8)
    with pytest.raises(ValueError):
        basis_position("e5", 7)


def test_text_round_trip_all_rings():
    rng = random.Random(37)
    rings = [QQ, CYCLO8, PrimeField(41)]

    def coeff(ring):
        if ring is QQ:
            return Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if ring is CYCLO8:
            return Cyclo8(*[Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                            for _ in range(4)])
        return ring.from_int(rng.randint(0, 40))

    for ring in rings:
        for _ in range(150):
            m = rng.choice([5, 7, 8])
            terms = {}
            for _ in range(rng.randint(0, 4)):
                mono = tuple(sorted(rng.sample(range(m), rng.randint(0, 3))))
                terms[mono] = coeff(ring)
            x = MultiVector(m, ring, terms)
            assert parse_text(to_text(x), m, ring) == x


def test_text_fixed_forms():
    assert to_text(MultiVector.zero(7, QQ)) == "0"
    assert parse_text("0", 7, QQ) == MultiVector.zero(7, QQ)
    x = mv("3/2 + 1*e1 f2", 7)
    assert to_text(x) == "3/2 + 1*e1 f2"
    fp = PrimeField(41)
    y = parse_text("18 mod 41*e1 f1", 8, fp)
    assert to_text(y) == "18 mod 41*e1 f1"
    z = parse_text("1+z^2*e1 u0", 7, CYCLO8)
    assert to_text(z) == "1+z^2*e1 u0"
