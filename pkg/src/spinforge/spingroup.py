"""The spin and similitude groups inside the even Clifford algebra.

Membership is always verified, never assumed: an element is accepted as a
spin element only after checking even parity, unit scalar Clifford norm,
and that conjugation v -> g v g* preserves the ambient space.  The
projection onto the special orthogonal group is the matrix of that
conjugation in the ordered basis; its kernel is {+-1}.

Sign-change Weyl representatives lift along explicit generator products:
the increasing-index product over the flipped coordinates is *the*
canonical lift, and the splitting search for the lifted sign-change group
varies only the 2^|D| signs in front of canonical lifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .coeff import QQ, CYCLO8
from .clifford import MultiVector, weyl_generator
from .linalg import Matrix
from .rootdata import sign_changes


class MembershipError(ValueError):
    """Element fails a group membership requirement."""


class InfeasibleError(ValueError):
    """Exhaustive search domain too large."""


class SOMatrix(Matrix):
    """m x m matrix g over a ring with g J g^t = J (J the anti-diagonal
    identity) and det g = 1; both are checked on construction."""

    def __init__(self, ring, rows, check=True):
        super().__init__(ring, rows)
        if check:
            self._validate()

    def _validate(self):
        m = self.nrows
        if any(len(row) != m for row in self.rows):
            raise MembershipError("matrix is not square")
        one, zero = self.ring.one, self.ring.zero
        for i in range(m):
            for j in range(m):
                acc = zero
                for k in range(m):
                    a, b = self.rows[i][m - 1 - k], self.rows[j][k]
                    if a and b:
                        acc = acc + a * b
                want = one if i + j == m - 1 else zero
                if acc != want:
                    raise MembershipError("matrix does not preserve the split form")
        if self.det() != one:
            raise MembershipError("determinant is not 1")


def validate_sign_change(eps, m: int):
    n = m // 2
    eps = tuple(eps)
    if len(eps) != n or any(e not in (1, -1) for e in eps):
        raise ValueError(f"bad sign vector {eps} for dimension {m}")
    if m % 2 == 0 and eps.count(-1) % 2:
        raise ValueError("even dimension requires an even number of sign flips")
    return eps


# ---------------------------------------------------------------------------
# membership and the covering map

def _gspin_data(g: MultiVector):
    if g.grade_parity() not in ("even",):
        return "neither", None
    nrm = g.clifford_norm()
    if not nrm.is_scalar():
        return "neither", None
    c = nrm.scalar_coefficient()
    if not c:
        return "neither", None
    gs = g.star()
    for pos in range(g.m):
        image = g * MultiVector.basis_vector(g.m, g.ring, pos) * gs
        if image.vector_coefficients() is None:
            return "neither", None
    return ("spin" if c == g.ring.one else "gspin"), c


def is_gspin(g: MultiVector) -> str:
    """Classify a multivector as 'spin', 'gspin' or 'neither'."""
    return _gspin_data(g)[0]


class SpinElement:
    """A certified norm-1 element of the even Clifford group."""

    def __init__(self, mv: MultiVector):
        kind, nrm = _gspin_data(mv)
        if kind != "spin":
            raise MembershipError(f"multivector is {kind}, not spin")
        self.mv = mv
        self.norm = nrm

    def __mul__(self, other):
        if not isinstance(other, SpinElement):
            return NotImplemented
        return SpinElement(self.mv * other.mv)

    def __neg__(self):
        return SpinElement(-self.mv)

    def __eq__(self, other):
        if not isinstance(other, SpinElement):
            return NotImplemented
        return self.mv == other.mv

    def __hash__(self):
        return hash(self.mv)

    @cached_property
    def matrix(self) -> SOMatrix:
        return project(self)

    def __repr__(self):
        return f"SpinElement({self.mv!r})"


def project(g: SpinElement) -> SOMatrix:
    """Matrix of v -> g v g* in the ordered basis (column j = image of the
    j-th basis vector).  A group homomorphism with kernel {+-1}."""
    mv = g.mv
    gs = mv.star()
    cols = []
    for pos in range(mv.m):
        image = mv * MultiVector.basis_vector(mv.m, mv.ring, pos) * gs
        coeffs = image.vector_coefficients()
        if coeffs is None:
            raise MembershipError("conjugation left the ambient space")
        cols.append(coeffs)
    rows = [[cols[j][i] for j in range(mv.m)] for i in range(mv.m)]
    return SOMatrix(mv.ring, rows)


# ---------------------------------------------------------------------------
# explicit Weyl representatives on the orthogonal side

def d_epsilon_matrix(eps, m: int, ring=QQ) -> SOMatrix:
    """Identity with columns i and m+1-i swapped wherever eps_i = -1; for
    odd m the middle entry becomes (-1)^(number of flips)."""
    eps = validate_sign_change(eps, m)
    n = m // 2
    zero, one = ring.zero, ring.one
    rows = [[zero] * m for _ in range(m)]
    for i in range(m):
        rows[i][i] = one
    flips = 0
    for i, e in enumerate(eps):
        if e == -1:
            flips += 1
            j = m - 1 - i
            rows[i][i] = rows[j][j] = zero
            rows[j][i] = rows[i][j] = one
    if m % 2 and flips % 2:
        rows[n][n] = -one
    return SOMatrix(ring, rows)


def permutation_block(sigma, m: int, ring=QQ) -> SOMatrix:
    """Block matrix diag(M, (1,) J M J) for the permutation matrix M of
    sigma (M[i][j] = 1 iff i = sigma(j)); preserves the split form."""
    n = m // 2
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(n)):
        raise ValueError(f"bad permutation {sigma}")
    zero, one = ring.zero, ring.one
    rows = [[zero] * m for _ in range(m)]
    if m % 2:
        rows[n][n] = one
    for j in range(n):
        rows[sigma[j]][j] = one
        # mirrored lower block: J M J
        rows[m - 1 - sigma[j]][m - 1 - j] = one
    return SOMatrix(ring, rows)


def weyl_section(eps, sigma, m: int, ring=QQ) -> SOMatrix:
    """Orthogonal representative of the signed permutation (eps, sigma);
    the assignment is a group homomorphism splitting the torus normalizer."""
    prod_rows = (d_epsilon_matrix(eps, m, ring) * permutation_block(sigma, m, ring)).rows
    return SOMatrix(ring, prod_rows, check=False)


def compose_signed_permutation(w1, w2):
    """(eps1, sigma1) * (eps2, sigma2) in the semidirect product, acting as
    matrices multiply: the sigma1-shuffle of eps2 merges with eps1."""
    eps1, s1 = w1
    eps2, s2 = w2
    n = len(eps1)
    s1_inv = [0] * n
    for j, v in enumerate(s1):
        s1_inv[v] = j
    eps = tuple(eps1[i] * eps2[s1_inv[i]] for i in range(n))
    sigma = tuple(s1[s2[j]] for j in range(n))
    return eps, sigma


# ---------------------------------------------------------------------------
# Clifford lifts of the sign-change group

def lift_sign_change(eps, m: int, ring=CYCLO8) -> SpinElement:
    """Increasing-index product of the generator lifts over the flipped
    coordinates; projects onto the matching column-swap matrix."""
    eps = validate_sign_change(eps, m)
    g = MultiVector.one(m, ring)
    for i, e in enumerate(eps):
        if e == -1:
            g = g * weyl_generator(i + 1, m, ring)
    return SpinElement(g)


def element_order(g: SpinElement, cap: int) -> int | None:
    """Least k <= cap with g^k = 1, else None."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    one = MultiVector.one(g.mv.m, g.mv.ring)
    acc = g.mv
    for k in range(1, cap + 1):
        if acc == one:
            return k
        acc = acc * g.mv
    return None


@dataclass
class ExtensionReport:
    """Result of the exhaustive section search over sign assignments."""

    splits: bool
    section: dict | None        # eps -> sign on the canonical lift
    obstruction: tuple | None   # (a, b) pair no assignment can satisfy


def extension_splits(n: int, kind: str) -> ExtensionReport:
    """Search all 2^|D| sign assignments eps -> +-(canonical lift) for a
    multiplicative section of the lifted sign-change group.

    Only the sign in front of each canonical lift is free, so a section
    exists iff some assignment s satisfies s(a) s(b) c(a, b) = s(ab) for
    the +-1 product table c of the canonical lifts.
    """
    elements = list(sign_changes(n, kind))
    if len(elements) > 16:
        raise InfeasibleError(f"|D| = {len(elements)} sign assignments exceed "
                              "the exhaustive regime (|D| <= 16)")
    m = 2 * n + 1 if kind == "B" else 2 * n
    index = {eps: i for i, eps in enumerate(elements)}
    lifts = [lift_sign_change(eps, m, CYCLO8).mv for eps in elements]

    constraints = []  # (i, j, k, c) meaning s_i * s_j * c == s_k
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            ab = tuple(x * y for x, y in zip(a, b))
            k = index[ab]
            prod = lifts[i] * lifts[j]
            if prod == lifts[k]:
                c = 1
            elif prod == -lifts[k]:
                c = -1
            else:
                raise AssertionError("canonical lifts do not close up to sign")
            constraints.append((i, j, k, c))
    # diagonal pairs first: they are sign-assignment independent, so they
    # falsify hopeless searches immediately
    constraints.sort(key=lambda t: (t[0] != t[1], t))

    for assignment in product((1, -1), repeat=len(elements)):
        if all(assignment[i] * assignment[j] * c == assignment[k]
               for i, j, k, c in constraints):
            section = {eps: assignment[i] for i, eps in enumerate(index)}
            return ExtensionReport(splits=True, section=section, obstruction=None)

    obstruction = next(((elements[i], elements[j])
                        for i, j, k, c in constraints
                        if i == j and c == -1), None)
    return ExtensionReport(splits=False, section=None, obstruction=obstruction)


def hyperbolic_torus_element(i: int, u, m: int, ring) -> SpinElement:
    """Spin torus element scaling e_i by u^2 and f_i by u^-2 (others fixed)."""
    if not 1 <= i <= m // 2:
        raise ValueError(f"index {i} out of range for dimension {m}")
    a = ring.one / u
    b = (u - a) * (ring.one / ring.from_int(2))
    g = (MultiVector.scalar(m, ring, a)
         + MultiVector(m, ring, {(i - 1, m - i): b}))
    return SpinElement(g)
