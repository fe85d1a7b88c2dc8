"""Root systems of types B_n and D_n, the spin torus lattices, and parity
bookkeeping.

Conventions: weights live in chi-coordinates (possibly half-integral),
coroots and cocharacters in the dual lambda-basis (integral), where the
basis cocharacter lambda_i scales the i-th torus coordinate by t^2 while
the similitude-like coordinate z picks up one t.  With that normalization
the cocharacter lattice of the spin torus is { sum m_i lambda_i : sum m_i
even }, and the canonical pairing is the plain coordinate dot product.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg
from .coeff import QQ, PreconditionError


def sign_changes(n: int, kind: str):
    """All sign vectors for type 'B'; even-minus-count vectors for type 'D'."""
    if kind not in ("B", "D"):
        raise ValueError(f"unknown type {kind!r}")
    for signs in product((1, -1), repeat=n):
        if kind == "D" and signs.count(-1) % 2:
            continue
        yield signs


@dataclass(frozen=True)
class RootDatum:
    kind: str                 # "B" (m odd) or "D" (m even)
    n: int                    # rank
    m: int                    # ambient dimension, 2n+1 or 2n
    simple_roots: tuple       # chi-coordinate integer vectors
    simple_coroots: tuple     # lambda-coordinate integer vectors
    positive_roots: tuple
    heights: tuple            # parallel to positive_roots

    @property
    def roots(self):
        return self.positive_roots + tuple(
            tuple(-x for x in r) for r in self.positive_roots)

    @property
    def coxeter_number(self) -> int:
        return 2 * self.n if self.kind == "B" else 2 * self.n - 2


def _coroot(root):
    """alpha-vee in lambda-coordinates: alpha for long roots, 2*alpha for short."""
    norm2 = sum(x * x for x in root)
    if norm2 == 2:
        return tuple(root)
    assert norm2 == 1
    return tuple(2 * x for x in root)


def build_root_datum(m: int) -> RootDatum:
    """Enumerate the roots of so_m with heights relative to the standard base."""
    if m < 5:
        raise PreconditionError(f"dimension {m} below 5")
    n = m // 2
    kind = "B" if m % 2 else "D"

    def chi(i, s=1):
        v = [0] * n
        v[i] = s
        return v

    positives = []
    for i in range(n):
        for j in range(i + 1, n):
            positives.append(tuple(a - b for a, b in zip(chi(i), chi(j))))
            positives.append(tuple(a + b for a, b in zip(chi(i), chi(j))))
    if kind == "B":
        positives.extend(tuple(chi(i)) for i in range(n))

    simple = [tuple(a - b for a, b in zip(chi(i), chi(i + 1))) for i in range(n - 1)]
    if kind == "B":
        simple.append(tuple(chi(n - 1)))
    else:
        simple.append(tuple(a + b for a, b in zip(chi(n - 2), chi(n - 1))))
    simple = tuple(simple)

    # height = coefficient sum in the simple-root basis, found by exact solve
    cols = [[Fraction(simple[k][i]) for k in range(n)] for i in range(n)]
    heights = []
    for root in positives:
        x = linalg.solve(cols, [Fraction(c) for c in root], QQ)
        assert x is not None
        assert all(xi.denominator == 1 and xi >= 0 for xi in x), root
        heights.append(int(sum(x)))

    return RootDatum(kind=kind, n=n, m=m,
                     simple_roots=simple,
                     simple_coroots=tuple(_coroot(a) for a in simple),
                     positive_roots=tuple(positives),
                     heights=tuple(heights))


# ---------------------------------------------------------------------------
# cocharacters and torus points

@dataclass(frozen=True)
class Cocharacter:
    """Integer lambda-coordinates; lies in the cocharacter lattice iff the
    coordinate sum is even."""

    coeffs: tuple

    @property
    def integral(self) -> bool:
        return sum(self.coeffs) % 2 == 0


@dataclass(frozen=True)
class TorusPoint:
    """(z, t_1, ..., t_n) with z^2 = t_1 ... t_n."""

    z: object
    t: tuple

    def is_identity(self) -> bool:
        one = self.z / self.z  # ring one
        return self.z == one and all(ti == one for ti in self.t)


def rho_vee(m: int) -> Cocharacter:
    """Half-sum of the positive coroots, in lambda-coordinates."""
    rd = build_root_datum(m)
    acc = [Fraction(0)] * rd.n
    for root in rd.positive_roots:
        for i, c in enumerate(_coroot(root)):
            acc[i] += Fraction(c, 2)
    assert all(x.denominator == 1 for x in acc)
    return Cocharacter(tuple(int(x) for x in acc))


def cochar_eval(c: Cocharacter, s) -> TorusPoint:
    """Evaluate a lattice cocharacter at a ring element s."""
    if not c.integral:
        raise PreconditionError("coordinate sum is odd: not a lattice cocharacter")
    t = tuple(s ** k for k in c.coeffs)
    z = s ** (sum(c.coeffs) // 2)
    prod_t = t[0] if t else s ** 0
    for ti in t[1:]:
        prod_t = prod_t * ti
    assert z * z == prod_t
    return TorusPoint(z=z, t=t)


# ---------------------------------------------------------------------------
# spin weights and the sign-change action

def spin_weights(m: int):
    """The half-integral weight list of the spin module, multiplicity one.

    All sign vectors (1/2)(+-1, ..., +-1) for odd m; those with an even
    number of minus signs for even m.
    """
    n = m // 2
    kind = "B" if m % 2 else "D"
    return tuple(tuple(Fraction(s, 2) for s in signs)
                 for signs in sign_changes(n, kind))


def d_orbit(eps, weight):
    """Coordinatewise sign flip of a weight."""
    return tuple(e * w for e, w in zip(eps, weight))


def check_simple_transitivity(m: int) -> bool:
    """The sign-change group permutes the spin weights simply transitively."""
    n = m // 2
    kind = "B" if m % 2 else "D"
    weights = spin_weights(m)
    base = weights[0]
    group = tuple(sign_changes(n, kind))
    orbit = {d_orbit(eps, base) for eps in group}
    stabilizer = [eps for eps in group if d_orbit(eps, base) == base]
    return (orbit == set(weights)
            and len(group) == len(weights)
            and stabilizer == [tuple([1] * n)])


def pairing(vec, covec) -> Fraction:
    """Canonical pairing: coordinate dot product of a chi-vector with a
    lambda-vector."""
    if len(vec) != len(covec):
        raise ValueError("rank mismatch")
    return sum((Fraction(a) * b for a, b in zip(vec, covec)), Fraction(0))


# ---------------------------------------------------------------------------
# parity diagnostics

def cartan_involution_check(m: int) -> dict:
    """Count the adjoint fixed space of rho-vee(-1) by root heights.

    A root space is fixed exactly when the root height is even, so the
    fixed dimension is rank + #{even-height roots}; the split-involution
    criterion asks this to equal half the number of roots.
    """
    rd = build_root_datum(m)
    if not rho_vee(m).integral:
        raise PreconditionError(f"rho-vee is not a lattice cocharacter for m={m}")
    even_positive = sum(1 for h in rd.heights if h % 2 == 0)
    fixed_dim = rd.n + 2 * even_positive
    half_phi = len(rd.positive_roots)
    return {"m": m, "rank": rd.n, "even_height_roots": 2 * even_positive,
            "fixed_dim": fixed_dim, "half_phi": half_phi,
            "holds": fixed_dim == half_phi}


def parity_classify(m: int) -> dict:
    """Dimension-m parity record: longest-element action, invariant-form
    symmetry type, lifted-involution order, and whether m qualifies."""
    if m < 5:
        raise PreconditionError(f"dimension {m} below 5")
    n = m // 2
    if m % 2:
        w0_minus_one = True
        form = "symmetric" if n % 4 in (0, 3) else "skew"
    else:
        w0_minus_one = n % 2 == 0
        if n % 2:
            form = "none"
        else:
            form = "symmetric" if n % 4 == 0 else "skew"
    order = 2 if (n * (n + 1) // 2) % 2 == 0 else 4
    return {"m": m,
            "qualifies": m >= 7 and m % 8 in (0, 1, 7),
            "form_type": form,
            "w0_minus_one": w0_minus_one,
            "w0_lift_order": order}


def lparam_descent(n: int, m_vec) -> dict:
    """Parity test for archimedean parameters: the adjoint-group descent
    holds iff sum(m_i) matches n(n+1)/2 mod 2, and the descended parameter
    is integrally algebraic iff moreover n = 0,3 mod 4 and sum(m_i) is even."""
    m_vec = tuple(m_vec)
    if len(m_vec) != n:
        raise ValueError("rank mismatch")
    if len(set(m_vec)) != n or any(x <= 0 for x in m_vec):
        warnings.warn("parameter entries should be distinct positive integers",
                      stacklevel=2)
    total = sum(m_vec)
    descends = total % 2 == (n * (n + 1) // 2) % 2
    l_algebraic = descends and n % 4 in (0, 3) and total % 2 == 0
    return {"n": n, "m_vec": m_vec, "descends": descends, "l_algebraic": l_algebraic}
