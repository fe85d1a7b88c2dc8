"""Exact coefficient rings and elementary number theory.

The algebra layers work over any of four exact fields behind one small
ring-handle interface: the rationals ``QQ`` (``fractions.Fraction``
elements), the eighth-cyclotomic field ``CYCLO8`` realized as
Q[z]/(z^4 + 1) (which houses sqrt(2) = z - z^3 and i = z^2), prime fields
``PrimeField(p)``, and quadratic extensions ``QuadraticField(p)`` for when
F_p is missing a needed square root.  A handle provides zero / one /
from_int / parse / show plus the two special square roots; elements are
immutable, hashable and overload the usual arithmetic operators.

Also here: primality (deterministic below 2**64, error < 2**-128 above),
Legendre symbols, modular square roots, and the projection of F_p^* onto
its l-torsion subgroup.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction


class InvalidModulusError(ValueError):
    """Modulus is not an odd prime."""


class PreconditionError(ValueError):
    """An arithmetic precondition of the operation does not hold."""


class UnsupportedRingError(ValueError):
    """The active coefficient ring lacks a required square root."""


# ---------------------------------------------------------------------------
# primality, Legendre symbols, modular square roots

# Sorenson-Webster: these twelve witnesses are exact for all n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_EXTRA_ROUNDS = 64  # above 2**64; total error < 4**-64 = 2**-128


def _mr_composite(n: int, d: int, s: int, a: int) -> bool:
    a %= n
    if a == 0:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Miller-Rabin: deterministic for n < 2**64, error < 2**-128 above."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = list(_MR_WITNESSES)
    if n >= 1 << 64:
        rng = random.Random(n)  # reproducible per input
        bases += [rng.randrange(2, n - 1) for _ in range(_EXTRA_ROUNDS)]
    return not any(_mr_composite(n, d, s, a) for a in bases)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) in {-1, 0, 1} for an odd prime p."""
    if p <= 2 or not is_prime(p):
        raise InvalidModulusError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod_int(a: int, p: int) -> int | None:
    """The smaller square root of a mod p, or None for a non-residue."""
    if p <= 2 or not is_prime(p):
        raise InvalidModulusError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        # Tonelli-Shanks
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c = s, pow(z, q, p)
        t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            t2, i = t, 0
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    return min(r, p - r)


# ---------------------------------------------------------------------------
# the rationals

class RationalField:
    """Ring handle for Q; elements are fractions.Fraction."""

    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def parse(self, text: str) -> Fraction:
        return Fraction(text)

    def show(self, x) -> str:
        return str(x)

    def sqrt2(self):
        return None

    def sqrt_minus_one(self):
        return None

    def __repr__(self):
        return "QQ"


QQ = RationalField()


# ---------------------------------------------------------------------------
# the eighth cyclotomic field Q[z]/(z^4 + 1)

_ZPOW = ("", "z", "z^2", "z^3")
_CYCLO_TERM = re.compile(r"^([+-]?)(\d+(?:/\d+)?)?(z(?:\^([123]))?)?$")


class Cyclo8:
    """Element c0 + c1*z + c2*z^2 + c3*z^3 of Q[z]/(z^4 + 1).

    Stored as four integer numerators over one positive denominator in
    lowest terms.  sqrt(2) = z - z^3 and i = z^2 live here, which is all
    the Clifford layer ever asks of a characteristic-zero ring.
    """

    __slots__ = ("nums", "den")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        fr = [Fraction(c) for c in (c0, c1, c2, c3)]
        den = 1
        for f in fr:
            den = den // gcd(den, f.denominator) * f.denominator
        self._set(tuple(int(f * den) for f in fr), den)

    def _set(self, nums, den):
        g = gcd(gcd(gcd(gcd(nums[0], nums[1]), nums[2]), nums[3]), den)
        if g > 1:
            nums = tuple(x // g for x in nums)
            den //= g
        object.__setattr__(self, "nums", nums)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("Cyclo8 is immutable")

    @classmethod
    def _make(cls, nums, den):
        # trusted fast path: integer numerators over a positive denominator
        self = object.__new__(cls)
        self._set(nums, den)
        return self

    @property
    def coeffs(self):
        d = self.den
        return tuple(Fraction(n, d) for n in self.nums)

    def _coerce(self, other):
        if isinstance(other, Cyclo8):
            return other
        if isinstance(other, int):
            return Cyclo8._make((other, 0, 0, 0), 1)
        if isinstance(other, Fraction):
            return Cyclo8._make((other.numerator, 0, 0, 0), other.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self.den, o.den
        if d1 == d2:
            return Cyclo8._make(tuple(a + b for a, b in zip(self.nums, o.nums)), d1)
        return Cyclo8._make(tuple(a * d2 + b * d1
                                  for a, b in zip(self.nums, o.nums)), d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Cyclo8._make(tuple(-a for a in self.nums), self.den)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if other == 1:
                return self
            return Cyclo8._make(tuple(a * other for a in self.nums), self.den)
        if isinstance(other, Fraction):
            return Cyclo8._make(tuple(a * other.numerator for a in self.nums),
                                self.den * other.denominator)
        if not isinstance(other, Cyclo8):
            return NotImplemented
        a, b = self.nums, other.nums
        out = [0, 0, 0, 0]
        for i in range(4):
            ai = a[i]
            if not ai:
                continue
            for j in range(4):
                bj = b[j]
                if not bj:
                    continue
                k = i + j
                if k < 4:
                    out[k] += ai * bj
                else:
                    out[k - 4] -= ai * bj  # z^4 = -1
        return Cyclo8._make(tuple(out), self.den * other.den)

    __rmul__ = __mul__

    def _conjugate(self, k: int) -> "Cyclo8":
        """Image under the field automorphism z -> z^k (k odd)."""
        out = [0, 0, 0, 0]
        for j, c in enumerate(self.nums):
            pos = j * k % 8
            if pos >= 4:
                out[pos - 4] -= c
            else:
                out[pos] += c
        return Cyclo8._make(tuple(out), self.den)

    def inverse(self) -> "Cyclo8":
        if not self:
            raise ZeroDivisionError("division by zero in Q(z)")
        cof = self._conjugate(3) * self._conjugate(5) * self._conjugate(7)
        norm = self * cof
        assert norm.is_rational(), "field norm must be rational"
        return cof * Fraction(norm.den, norm.nums[0])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = Cyclo8(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.nums == o.nums and self.den == o.den

    def __hash__(self):
        return hash(("Cyclo8", self.nums, self.den))

    def __bool__(self):
        return any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def __str__(self):
        out = ""
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else ("+" if out else "")
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = _ZPOW[k]
            else:
                body = f"{mag}{_ZPOW[k]}"
            out += sign + body
        return out or "0"

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> "Cyclo8":
        text = text.strip().replace(" ", "")
        if text in ("0", "+0", "-0"):
            return cls(0)
        out = [Fraction(0)] * 4
        for token in re.findall(r"[+-]?[^+-]+", text):
            mt = _CYCLO_TERM.match(token)
            if not mt or (mt.group(2) is None and mt.group(3) is None):
                raise ValueError(f"cannot parse {text!r} as a Q(z) element")
            coeff = Fraction(mt.group(2)) if mt.group(2) else Fraction(1)
            if mt.group(1) == "-":
                coeff = -coeff
            power = 0
            if mt.group(3):
                power = int(mt.group(4)) if mt.group(4) else 1
            out[power] += coeff
        return cls(*out)


class Cyclo8Field:
    """Ring handle for Q[z]/(z^4 + 1)."""

    name = "cyclo8"
    zero = Cyclo8(0)
    one = Cyclo8(1)

    def from_int(self, n: int) -> Cyclo8:
        return Cyclo8(n)

    def parse(self, text: str) -> Cyclo8:
        return Cyclo8.parse(text)

    def show(self, x: Cyclo8) -> str:
        return str(x)

    def sqrt2(self) -> Cyclo8:
        return Cyclo8(0, 1, 0, -1)

    def sqrt_minus_one(self) -> Cyclo8:
        return Cyclo8(0, 0, 1, 0)

    def __repr__(self):
        return "CYCLO8"


CYCLO8 = Cyclo8Field()


# ---------------------------------------------------------------------------
# prime fields

class FpElem:
    """Residue in [0, p) for an odd prime p; mixed-modulus arithmetic is rejected."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "value", value % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, *_):
        raise AttributeError("FpElem is immutable")

    def _coerce(self, other):
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other
        if isinstance(other, int):
            return FpElem(other, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FpElem(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FpElem(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FpElem(o.value - self.value, self.p)

    def __neg__(self):
        return FpElem(-self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FpElem(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(self.value * pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o / self

    def __pow__(self, k: int):
        return FpElem(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.value == o.value

    def __hash__(self):
        return hash(("FpElem", self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return f"{self.value} mod {self.p}"

    __repr__ = __str__


class PrimeField:
    """Ring handle for F_p, p an odd prime."""

    def __init__(self, p: int):
        if p <= 2 or not is_prime(p):
            raise InvalidModulusError(f"{p} is not an odd prime")
        self.p = p
        self.name = f"fp:{p}"
        self.zero = FpElem(0, p)
        self.one = FpElem(1, p)

    def from_int(self, n: int) -> FpElem:
        return FpElem(n, self.p)

    def parse(self, text: str) -> FpElem:
        mt = re.match(r"^(\d+) mod (\d+)$", text.strip())
        if not mt or int(mt.group(2)) != self.p:
            raise ValueError(f"cannot parse {text!r} as an element of F_{self.p}")
        return FpElem(int(mt.group(1)), self.p)

    def show(self, x: FpElem) -> str:
        return str(x)

    def sqrt2(self):
        r = sqrt_mod_int(2, self.p)
        return None if r is None else FpElem(r, self.p)

    def sqrt_minus_one(self):
        r = sqrt_mod_int(-1, self.p)
        return None if r is None else FpElem(r, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def sqrt_mod(a: FpElem) -> FpElem | None:
    """Square root in F_p with the smaller canonical residue, or None."""
    r = sqrt_mod_int(a.value, a.p)
    return None if r is None else FpElem(r, a.p)


def mu_l_projection(x: FpElem, l: int) -> FpElem:
    """Project a unit of F_p onto the l-torsion subgroup of F_p^*.

    Requires l an odd prime with l | p-1 and l^2 not | p-1; the projection
    x -> x^c (c = 0 mod (p-1)/l, c = 1 mod l) is then a group homomorphism
    fixing the l-torsion pointwise.
    """
    p = x.p
    if l == 2 or not is_prime(l):
        raise PreconditionError(f"{l} is not an odd prime")
    if (p - 1) % l != 0:
        raise PreconditionError(f"{l} does not divide p - 1 = {p - 1}")
    if (p - 1) % (l * l) == 0:
        raise PreconditionError(f"{l}^2 divides p - 1 = {p - 1}")
    if x.value == 0:
        raise PreconditionError("projection is defined on units only")
    m0 = (p - 1) // l
    c = m0 * pow(m0, -1, l) % (p - 1)
    return FpElem(pow(x.value, c, p), p)


# ---------------------------------------------------------------------------
# quadratic extensions F_p(sqrt d)

class Fp2Elem:
    """Element a + b*s of F_p(s), s^2 = d with d a fixed non-residue."""

    __slots__ = ("a", "b", "p", "d")

    def __init__(self, a: int, b: int, p: int, d: int):
        object.__setattr__(self, "a", a % p)
        object.__setattr__(self, "b", b % p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *_):
        raise AttributeError("Fp2Elem is immutable")

    def _coerce(self, other):
        if isinstance(other, Fp2Elem):
            if (other.p, other.d) != (self.p, self.d):
                raise ValueError("mixed quadratic extensions")
            return other
        if isinstance(other, int):
            return Fp2Elem(other, 0, self.p, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp2Elem(self.a + o.a, self.b + o.b, self.p, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp2Elem(self.a - o.a, self.b - o.b, self.p, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o - self

    def __neg__(self):
        return Fp2Elem(-self.a, -self.b, self.p, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp2Elem(self.a * o.a + self.d * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.p, self.d)

    __rmul__ = __mul__

    def inverse(self) -> "Fp2Elem":
        nrm = (self.a * self.a - self.d * self.b * self.b) % self.p
        if nrm == 0:
            raise ZeroDivisionError("division by zero in F_p^2")
        ninv = pow(nrm, -1, self.p)
        return Fp2Elem(self.a * ninv, -self.b * ninv, self.p, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Fp2Elem(1, 0, self.p, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else (self.a, self.b) == (o.a, o.b)

    def __hash__(self):
        return hash(("Fp2Elem", self.a, self.b, self.p, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __str__(self):
        if self.b == 0:
            return f"{self.a} mod {self.p}"
        s = "s" if self.b == 1 else f"{self.b}s"
        if self.a == 0:
            return f"{s} mod {self.p}"
        return f"{self.a}+{s} mod {self.p}"

    __repr__ = __str__


class QuadraticField:
    """Ring handle for F_p(sqrt d), d the least quadratic non-residue mod p."""

    def __init__(self, p: int):
        if p <= 2 or not is_prime(p):
            raise InvalidModulusError(f"{p} is not an odd prime")
        d = 2
        while legendre(d, p) != -1:
            d += 1
        self.p = p
        self.d = d
        self.name = f"fp2:{p}"
        self.zero = Fp2Elem(0, 0, p, d)
        self.one = Fp2Elem(1, 0, p, d)

    def from_int(self, n: int) -> Fp2Elem:
        return Fp2Elem(n, 0, self.p, self.d)

    def parse(self, text: str) -> Fp2Elem:
        # accepted shapes: "a mod p", "bs mod p", "s mod p", "a+bs mod p", "a+s mod p"
        text = text.strip()
        mt = re.match(r"^(.*) mod (\d+)$", text)
        if not mt or int(mt.group(2)) != self.p:
            raise ValueError(f"cannot parse {text!r} as an element of F_{self.p}^2")
        body = mt.group(1)
        a = b = 0
        for token in re.findall(r"[+-]?[^+-]+", body):
            tm = re.match(r"^([+-]?)(\d+)?(s)?$", token)
            if not tm or (tm.group(2) is None and tm.group(3) is None):
                raise ValueError(f"cannot parse {text!r} as an element of F_{self.p}^2")
            val = int(tm.group(2)) if tm.group(2) else 1
            if tm.group(1) == "-":
                val = -val
            if tm.group(3):
                b += val
            else:
                a += val
        return Fp2Elem(a, b, self.p, self.d)

    def show(self, x: Fp2Elem) -> str:
        return str(x)

    def _embed_root(self, a: int):
        """A square root of the integer a, which always exists in F_p^2."""
        r = sqrt_mod_int(a, self.p)
        if r is not None:
            return Fp2Elem(r, 0, self.p, self.d)
        u = sqrt_mod_int(a * pow(self.d, -1, self.p) % self.p, self.p)
        return Fp2Elem(0, u, self.p, self.d)

    def sqrt2(self) -> Fp2Elem:
        return self._embed_root(2)

    def sqrt_minus_one(self) -> Fp2Elem:
        return self._embed_root(-1 % self.p)

    def __eq__(self, other):
        return isinstance(other, QuadraticField) and other.p == self.p

    def __hash__(self):
        return hash(("QuadraticField", self.p))

    def __repr__(self):
        return f"QuadraticField({self.p})"


def ring_from_name(name: str):
    """Resolve 'rational', 'cyclo8', 'fp:<p>' or 'fp2:<p>' to a ring handle."""
    if name == "rational":
        return QQ
    if name == "cyclo8":
        return CYCLO8
    if name.startswith("fp:"):
        return PrimeField(int(name[3:]))
    if name.startswith("fp2:"):
        return QuadraticField(int(name[4:]))
    raise ValueError(f"unknown ring {name!r}")


def spin_coefficient_field(p: int, m: int):
    """F_p when it has the square roots the dimension-m lifts need, else F_p^2."""
    field = PrimeField(p)
    ok = field.sqrt2() is not None and (m % 2 == 0 or field.sqrt_minus_one() is not None)
    return field if ok else QuadraticField(p)
