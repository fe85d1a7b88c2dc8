"""Coefficient rings and elementary number theory."""

import random
from fractions import Fraction

import pytest

from spinforge.coeff import (CYCLO8, QQ, Cyclo8, FpElem, InvalidModulusError,
                             PreconditionError, PrimeField, QuadraticField,
                             is_prime, legendre, mu_l_projection,
                             ring_from_name, spin_coefficient_field, sqrt_mod,
                             sqrt_mod_int)


def brute_force_squares(p):
    return {x * x % p for x in range(1, p)}


def trial_division_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# primality

def test_is_prime_small_values():
    assert is_prime(29)
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(561)  # Carmichael number
    assert trial_division_prime(561) is False


def test_is_prime_matches_trial_division():
    for n in range(10000):
        assert is_prime(n) == trial_division_prime(n), n


def test_is_prime_large_values():
    m61 = 2**61 - 1          # Mersenne prime below 2**64
    m89 = 2**89 - 1          # Mersenne prime above 2**64
    m67 = 2**67 - 1          # 193707721 * 761838257287
    assert is_prime(m61)
    assert is_prime(m89)
    assert not is_prime(m67)
    assert m67 == 193707721 * 761838257287


# ---------------------------------------------------------------------------
# Legendre symbols

def test_legendre_examples():
    assert legendre(-1, 5) == 1
    assert legendre(3, 5) == -1
    assert 3 % 5 not in brute_force_squares(5)
    assert legendre(0, 7) == 0


def test_legendre_brute_force_agreement():
    for p in (3, 5, 7, 11, 13, 29, 97):
        squares = brute_force_squares(p)
        for a in range(p):
            want = 0 if a == 0 else (1 if a in squares else -1)
            assert legendre(a, p) == want, (a, p)


def test_legendre_multiplicative():
    rng = random.Random(11)
    p = 101
    for _ in range(200):
        a, b = rng.randrange(1, p), rng.randrange(1, p)
        assert legendre(a, p) * legendre(b, p) == legendre(a * b, p)


def test_legendre_rejects_bad_modulus():
    with pytest.raises(InvalidModulusError):
        legendre(3, 15)
    with pytest.raises(InvalidModulusError):
        legendre(3, 2)


# ---------------------------------------------------------------------------
# modular square roots

def test_sqrt_mod_examples():
    assert sqrt_mod(FpElem(4, 13)) == FpElem(2, 13)
    r = sqrt_mod(FpElem(2, 17))
    assert r == FpElem(6, 17)
    assert 6 * 6 % 17 == 2
    assert sqrt_mod(FpElem(3, 5)) is None
    assert 3 not in brute_force_squares(5)


def test_sqrt_mod_canonical_and_correct():
    for p in (13, 17, 29, 97, 101):
        for a in range(p):
            r = sqrt_mod_int(a, p)
            if a == 0:
                assert r == 0
            elif a in brute_force_squares(p):
                assert r is not None and r * r % p == a
                assert r <= p - r  # smaller root
            else:
                assert r is None


def test_one_mod_8_primes_have_both_roots():
    primes = [p for p in range(3, 10000, 2) if p % 8 == 1 and is_prime(p)]
    assert primes[:3] == [17, 41, 73]
    for p in primes:
        assert sqrt_mod_int(2, p) is not None
        assert sqrt_mod_int(-1, p) is not None


# ---------------------------------------------------------------------------
# l-torsion projection

def test_mu_l_projection_example():
    out = mu_l_projection(FpElem(2, 41), 5)
    assert out == FpElem(18, 41)
    assert pow(18, 5, 41) == 1


def test_mu_l_projection_fixes_torsion_and_identity():
    p, l = 41, 5
    gamma = pow(6, (p - 1) // l, p)  # 6 generates F_41^*
    assert gamma != 1
    for k in range(l):
        x = FpElem(pow(gamma, k, p), p)
        assert mu_l_projection(x, l) == x
    assert mu_l_projection(FpElem(1, 41), 5) == FpElem(1, 41)


def test_mu_l_projection_homomorphism():
    rng = random.Random(3)
    p, l = 311, 5  # 310 = 2 * 5 * 31
    for _ in range(100):
        x = FpElem(rng.randrange(1, p), p)
        y = FpElem(rng.randrange(1, p), p)
        assert mu_l_projection(x * y, l) == mu_l_projection(x, l) * mu_l_projection(y, l)


def test_mu_l_projection_preconditions():
    with pytest.raises(PreconditionError):
        mu_l_projection(FpElem(2, 13), 5)     # 5 does not divide 12
    with pytest.raises(PreconditionError):
        mu_l_projection(FpElem(2, 101), 5)    # 25 divides 100
    with pytest.raises(PreconditionError):
        mu_l_projection(FpElem(0, 41), 5)


# ---------------------------------------------------------------------------
# exact ring laws

def test_rational_laws_random():
    rng = random.Random(5)
    for _ in range(300):
        a, b, c = (Fraction(rng.randint(-50, 50), rng.randint(1, 30))
                   for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c


def test_cyclo8_constants():
    s2 = CYCLO8.sqrt2()
    i = CYCLO8.sqrt_minus_one()
    assert s2 * s2 == 2
    assert i * i == -1
    assert (s2 * i) * (s2 * i) == -2


def test_cyclo8_field_operations():
    rng = random.Random(9)
    for _ in range(100):
        x = Cyclo8(*[Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                     for _ in range(4)])
        if not x:
            continue
        assert x * x.inverse() == 1
        y = Cyclo8(*[rng.randint(-4, 4) for _ in range(4)])
        z = Cyclo8(*[rng.randint(-4, 4) for _ in range(4)])
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_cyclo8_parse_round_trip():
    rng = random.Random(13)
    for _ in range(200):
        x = Cyclo8(*[Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                     for _ in range(4)])
        assert Cyclo8.parse(str(x)) == x
    assert str(Cyclo8(1, 0, 1, 0)) == "1+z^2"
    assert Cyclo8.parse("1+z^2") == Cyclo8(1, 0, 1, 0)


def test_prime_field_handle():
    fp = PrimeField(41)
    assert fp.parse("18 mod 41") == FpElem(18, 41)
    assert fp.show(FpElem(18, 41)) == "18 mod 41"
    assert fp.sqrt2() is not None          # 41 = 1 mod 8
    assert PrimeField(5).sqrt2() is None   # 2 is not a square mod 5
    with pytest.raises(InvalidModulusError):
        PrimeField(15)
    with pytest.raises(ValueError):
        FpElem(3, 41) + FpElem(3, 43)


def test_quadratic_field_roots():
    for p in (5, 7, 11, 13):
        fq = QuadraticField(p)
        s2 = fq.sqrt2()
        assert s2 * s2 == 2
        i = fq.sqrt_minus_one()
        assert i * i == fq.from_int(-1)
        x = fq.from_int(3) + fq.sqrt2()
        assert x * x.inverse() == 1
        assert fq.parse(fq.show(x)) == x


def test_ring_registry_and_field_selection():
    assert ring_from_name("rational") is QQ
    assert ring_from_name("cyclo8") is CYCLO8
    assert ring_from_name("fp:41") == PrimeField(41)
    assert ring_from_name("fp2:7") == QuadraticField(7)
    assert isinstance(spin_coefficient_field(17, 7), PrimeField)
    assert isinstance(spin_coefficient_field(5, 7), QuadraticField)
