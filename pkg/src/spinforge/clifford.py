"""Split Clifford algebra of the hyperbolic pairing x1*y_m + ... + x_m*y1.

The ambient m-dimensional space carries the ordered basis

    e_1, ..., e_n, (u0,) f_n, ..., f_1        n = m // 2, u0 only for odd m

with (e_i, f_i) = 1, (u0, u0) = 1 and every other pairing zero.  In terms
of 0-based basis positions this is simply (v_i, v_j) = 1 iff i + j = m - 1.
Multiplication normal-orders against that pairing: e_i^2 = f_i^2 = 0,
u0^2 = 1, e_i f_i = 2 - f_i e_i, and distinct non-paired basis vectors
anticommute.  A multivector is a sparse map from canonical monomials
(strictly increasing position tuples) to coefficients in the active ring;
dense 2^m vectors are never materialized.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .coeff import UnsupportedRingError


# ---------------------------------------------------------------------------
# basis bookkeeping

def basis_name(pos: int, m: int) -> str:
    n = m // 2
    if pos < n:
        return f"e{pos + 1}"
    if m % 2 == 1 and pos == n:
        return "u0"
    return f"f{m - pos}"


def basis_position(name: str, m: int) -> int:
    n = m // 2
    mt = re.fullmatch(r"([efu])(\d+)", name)
    if not mt:
        raise ValueError(f"bad generator name {name!r}")
    kind, idx = mt.group(1), int(mt.group(2))
    if kind == "u":
        if idx != 0 or m % 2 == 0:
            raise ValueError(f"generator {name!r} not available in dimension {m}")
        return n
    if not 1 <= idx <= n:
        raise ValueError(f"generator index {idx} out of range for dimension {m}")
    return idx - 1 if kind == "e" else m - idx


@lru_cache(maxsize=None)
def _insert(m: int, mono: tuple, g: int):
    """mono * v_g as ((canonical monomial, integer coefficient), ...)."""
    if not mono or mono[-1] < g:
        return ((mono + (g,), 1),)
    last, head = mono[-1], mono[:-1]
    if last == g:
        # v_g^2 is 1 on the middle vector, 0 on the isotropic ones
        return ((head, 1),) if 2 * g == m - 1 else ()
    out = {}
    if last + g == m - 1:
        out[head] = 2  # contraction 2*(v_last, v_g)
    for mono2, c in _insert(m, head, g):
        key = mono2 + (last,)
        out[key] = out.get(key, 0) - c
    return tuple(sorted((k, v) for k, v in out.items() if v))


@lru_cache(maxsize=None)
def _mono_mul(m: int, a: tuple, b: tuple):
    """Product of two canonical monomials, integer structure constants."""
    out = {a: 1}
    for g in b:
        nxt = {}
        for mono, c in out.items():
            for mono2, c2 in _insert(m, mono, g):
                key = mono2
                nxt[key] = nxt.get(key, 0) + c * c2
        out = {k: v for k, v in nxt.items() if v}
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _order_sequence(m: int, seq: tuple):
    """Normal-order an arbitrary generator sequence (integer coefficients)."""
    out = {(): 1}
    for g in seq:
        nxt = {}
        for mono, c in out.items():
            for mono2, c2 in _insert(m, mono, g):
                nxt[mono2] = nxt.get(mono2, 0) + c * c2
        out = {k: v for k, v in nxt.items() if v}
    return tuple(sorted(out.items()))


# ---------------------------------------------------------------------------

class MultiVector:
    """Sparse element of the split Clifford algebra in dimension m.

    Instances are treated as immutable: the term dict is never mutated
    after construction, zero coefficients are dropped, and monomials are
    canonical (strictly increasing position tuples).
    """

    __slots__ = ("m", "ring", "terms")

    def __init__(self, m: int, ring, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            if not c:
                continue
            if any(not 0 <= p < m for p in mono) or list(mono) != sorted(set(mono)):
                raise ValueError(f"monomial {mono} is not canonical for dimension {m}")
            clean[mono] = c
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("MultiVector is immutable")

    @classmethod
    def _raw(cls, m, ring, terms):
        # trusted fast path: monomials already canonical, zeros still dropped
        self = object.__new__(cls)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", {k: c for k, c in terms.items() if c})
        return self

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, m, ring):
        return cls(m, ring, {})

    @classmethod
    def scalar(cls, m, ring, c):
        return cls(m, ring, {(): c})

    @classmethod
    def one(cls, m, ring):
        return cls.scalar(m, ring, ring.one)

    @classmethod
    def basis_vector(cls, m, ring, pos: int):
        return cls(m, ring, {(pos,): ring.one})

    @classmethod
    def from_name(cls, m, ring, name: str):
        return cls.basis_vector(m, ring, basis_position(name, m))

    # -- ring structure ----------------------------------------------------

    def _check_compatible(self, other):
        if self.m != other.m or self.ring.name != other.ring.name:
            raise ValueError("mixed ambient dimensions or coefficient rings")

    def __add__(self, other):
        if not isinstance(other, MultiVector):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out[mono] + c if mono in out else c
        return MultiVector._raw(self.m, self.ring, out)

    def __sub__(self, other):
        if not isinstance(other, MultiVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return MultiVector._raw(self.m, self.ring,
                                {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MultiVector):
            self._check_compatible(other)
            out = {}
            for ma, ca in self.terms.items():
                for mb, cb in other.terms.items():
                    cab = ca * cb
                    for mono, ic in _mono_mul(self.m, ma, mb):
                        if ic == 1:
                            v = cab
                        elif ic == -1:
                            v = -cab
                        else:
                            v = cab * ic
                        out[mono] = out[mono] + v if mono in out else v
            return MultiVector._raw(self.m, self.ring, out)
        # ring scalar (or plain int)
        return MultiVector._raw(self.m, self.ring,
                                {k: c * other for k, c in self.terms.items()})

    def __rmul__(self, other):
        return MultiVector._raw(self.m, self.ring,
                                {k: other * c for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, MultiVector):
            return NotImplemented
        return (self.m == other.m and self.ring.name == other.ring.name
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.m, self.ring.name, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- structure maps ----------------------------------------------------

    def star(self) -> "MultiVector":
        """The anti-involution (v_1...v_r)* = (-1)^r v_r...v_1, normal-ordered."""
        out = {}
        for mono, c in self.terms.items():
            sign = -1 if len(mono) % 2 else 1
            for mono2, ic in _order_sequence(self.m, tuple(reversed(mono))):
                v = c * (sign * ic)
                out[mono2] = out[mono2] + v if mono2 in out else v
        return MultiVector._raw(self.m, self.ring, out)

    def grade_parity(self) -> str:
        """'even', 'odd', 'mixed' or 'zero' by monomial-length parity."""
        if not self.terms:
            return "zero"
        parities = {len(mono) % 2 for mono in self.terms}
        if parities == {0}:
            return "even"
        if parities == {1}:
            return "odd"
        return "mixed"

    def is_scalar(self) -> bool:
        return all(mono == () for mono in self.terms)

    def scalar_coefficient(self):
        """Coefficient of the empty monomial (the ring zero when absent)."""
        return self.terms.get((), self.ring.zero)

    def vector_coefficients(self):
        """Length-m coefficient list when the support is pure grade one."""
        coeffs = [self.ring.zero] * self.m
        for mono, c in self.terms.items():
            if len(mono) != 1:
                return None
            coeffs[mono[0]] = c
        return coeffs

    def clifford_norm(self) -> "MultiVector":
        return self * self.star()

    def __repr__(self):
        return f"MultiVector({self.m}, {self.ring.name}, {to_text(self)!r})"


def clifford_norm(g: MultiVector) -> MultiVector:
    """g times g-star; a unit scalar exactly on the similitude group."""
    return g.clifford_norm()


def grade_parity(a: MultiVector) -> str:
    return a.grade_parity()


def star(a: MultiVector) -> MultiVector:
    return a.star()


def pairing_on_v(x, y, m: int, ring):
    """The split bilinear form on coordinate vectors: sum x_i y_{m-1-i}."""
    acc = ring.zero
    for i in range(m):
        acc = acc + x[i] * y[m - 1 - i]
    return acc


def weyl_generator(i: int, m: int, ring) -> MultiVector:
    """Clifford lift of the i-th coordinate sign flip.

    (e_i - f_i)/sqrt(2) for even m; for odd m the same multiplied on the
    left by sqrt(-1) u0.  Either element squares to -1 and distinct ones
    anticommute, so k-fold products square to (-1)^(k(k+1)/2).
    """
    n = m // 2
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range for dimension {m}")
    s2 = ring.sqrt2()
    if s2 is None:
        raise UnsupportedRingError(f"ring {ring.name} has no sqrt(2)")
    w = (MultiVector.basis_vector(m, ring, i - 1)
         - MultiVector.basis_vector(m, ring, m - i)) * (ring.one / s2)
    if m % 2 == 0:
        return w
    sm1 = ring.sqrt_minus_one()
    if sm1 is None:
        raise UnsupportedRingError(f"ring {ring.name} has no sqrt(-1)")
    w0 = MultiVector.basis_vector(m, ring, n) * sm1
    return w0 * w


# ---------------------------------------------------------------------------
# text serialization: terms joined by " + ", each "coeff*gen gen ..." with
# the coefficient rendered by the active ring.  Round-trips exactly.

def to_text(mv: MultiVector) -> str:
    if not mv.terms:
        return "0"
    parts = []
    for mono in sorted(mv.terms, key=lambda t: (len(t), t)):
        c = mv.ring.show(mv.terms[mono])
        if mono:
            parts.append(c + "*" + " ".join(basis_name(p, mv.m) for p in mono))
        else:
            parts.append(c)
    return " + ".join(parts)


def parse_text(text: str, m: int, ring) -> MultiVector:
    text = text.strip()
    if text == "0":
        return MultiVector.zero(m, ring)
    terms = {}
    for part in text.split(" + "):
        coeff_text, _, mono_text = part.partition("*")
        coeff = ring.parse(coeff_text.strip())
        mono = tuple(sorted(basis_position(nm, m) for nm in mono_text.split()))
        if len(set(mono)) != len(mono):
            raise ValueError(f"repeated generator in term {part!r}")
        terms[mono] = terms[mono] + coeff if mono in terms else coeff
    return MultiVector(m, ring, terms)


def mentioned_dimension(text: str) -> int:
    """Smallest ambient dimension consistent with the generators in a term string."""
    names = re.findall(r"[efu]\d+", text)
    top = 0
    odd = False
    for nm in names:
        if nm == "u0":
            odd = True
        else:
            top = max(top, int(nm[1:]))
    m = 2 * max(top, 1)
    return m + 1 if odd else m
