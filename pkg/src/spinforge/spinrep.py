"""The spin module: the even Clifford algebra acting on the exterior algebra
of the isotropic half-space W = <e_1, ..., e_n>.

Generator actions on a wedge indexed by a subset S of {1..n}:

    e_i  : wedge with the i-th vector            (0 if i already present)
    f_i  : 2 * contraction against the dual      (0 if i absent)
    u0   : (-1)^|S|

The factor 2 on contraction realizes e_i f_i + f_i e_i = 2; placing it
entirely on f_i keeps the e_i action integral.  The u0 sign picks one of
the two algebra involutions and is fixed so matrices reproduce
bit-for-bit.  For even m the module is the half of fixed wedge-degree
parity (even wedges when n is even, odd wedges when n is odd), which only
even-graded algebra elements preserve.

Basis order everywhere: subsets as increasing tuples, lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .coeff import QQ, PrimeField, PreconditionError, is_prime
from .clifford import MultiVector
from .rootdata import cochar_eval, rho_vee, spin_weights
from .spingroup import SpinElement


class ParityError(ValueError):
    """Odd element acting on a half-spin module."""


def module_dim(m: int) -> int:
    n = m // 2
    return 2 ** n if m % 2 else 2 ** (n - 1)


def spin_basis(m: int):
    """Wedge subsets in lexicographic order; for even m only the half of
    the correct degree parity."""
    n = m // 2
    subsets = []
    for k in range(n + 1):
        if m % 2 == 0 and k % 2 != n % 2:
            continue
        subsets.extend(combinations(range(1, n + 1), k))
    return sorted(subsets)


def _apply_generator(m: int, pos: int, subset: tuple):
    """(new subset, integer coefficient) for one basis generator, or None."""
    n = m // 2
    if pos < n:                      # e_{pos+1}: wedge
        i = pos + 1
        if i in subset:
            return None
        before = sum(1 for j in subset if j < i)
        return tuple(sorted(subset + (i,))), -1 if before % 2 else 1
    if m % 2 and pos == n:           # u0: parity involution
        return subset, -1 if len(subset) % 2 else 1
    i = m - pos                      # f_i: 2 * contraction
    if i not in subset:
        return None
    before = sum(1 for j in subset if j < i)
    return tuple(j for j in subset if j != i), -2 if before % 2 else 2


def clifford_action(a: MultiVector, vec: dict) -> dict:
    """Act by a multivector on a module vector {subset: coefficient}.

    Monomials act right-to-left; for even ambient dimension the element
    must be even-graded, otherwise it would leak out of the half module.
    """
    m, ring = a.m, a.ring
    if m % 2 == 0 and a.grade_parity() not in ("even", "zero"):
        raise ParityError("odd element on a half-spin module")
    out = {}
    for mono, coeff in a.terms.items():
        for subset, c in vec.items():
            sign = 1
            cur = subset
            for pos in reversed(mono):
                step = _apply_generator(m, pos, cur)
                if step is None:
                    cur = None
                    break
                cur, ic = step
                sign *= ic
            if cur is None:
                continue
            v = coeff * c * sign
            out[cur] = out[cur] + v if cur in out else v
    return {k: v for k, v in out.items() if v}


class SpinMatrix(linalg.Matrix):
    """Matrix of a module endomorphism in the lexicographic wedge basis."""

    __slots__ = ("basis",)

    def __init__(self, ring, rows, basis):
        super().__init__(ring, rows)
        object.__setattr__(self, "basis", tuple(basis))


def spin_matrix(g) -> SpinMatrix:
    """Representation matrix of a spin element (or even multivector)."""
    mv = g.mv if isinstance(g, SpinElement) else g
    m, ring = mv.m, mv.ring
    basis = spin_basis(m)
    index = {s: i for i, s in enumerate(basis)}
    size = len(basis)
    rows = [[ring.zero] * size for _ in range(size)]
    for j, subset in enumerate(basis):
        image = clifford_action(mv, {subset: ring.one})
        for subset2, c in image.items():
            rows[index[subset2]][j] = c
    return SpinMatrix(ring, rows, basis)


def torus_weight_diagnostics(m: int):
    """Read each basis wedge's weight off the diagonal torus action:
    +1/2 in coordinate i iff i lies in the subset.  Must reproduce the
    abstract weight list as a multiset."""
    out = []
    for subset in spin_basis(m):
        out.append(tuple(Fraction(1, 2) if i in subset else Fraction(-1, 2)
                         for i in range(1, m // 2 + 1)))
    return tuple(out)


def so_spanning_multivectors(m: int, ring):
    """The commutator spanning set (u v - v u)/4 over basis vector pairs;
    its image spans the orthogonal Lie algebra inside the even algebra."""
    quarter = ring.one / ring.from_int(4)
    out = []
    for a in range(m):
        for b in range(a + 1, m):
            u = MultiVector.basis_vector(m, ring, a)
            v = MultiVector.basis_vector(m, ring, b)
            out.append((u * v - v * u) * quarter)
    return out


# ---------------------------------------------------------------------------
# the invariant bilinear form

@dataclass
class InvariantForm:
    matrix: SpinMatrix
    symmetry: str  # "symmetric" | "skew"


def invariant_form(m: int, ring):
    """Solve X^t B + B X = 0 over the Lie-algebra spanning set.

    The Cartan directions force B to pair each wedge with its complement,
    leaving one unknown per basis element; the remaining spanning matrices
    cut that space down.  Returns the one-dimensional solution normalized
    to leading entry 1, classified symmetric or skew, or None when the
    module is not self-dual (solution space dimension zero).
    """
    basis = spin_basis(m)
    index = {s: i for i, s in enumerate(basis)}
    n = m // 2
    full = set(range(1, n + 1))
    comp = []
    for s in basis:
        c = tuple(sorted(full - set(s)))
        comp.append(index.get(c))
    if any(c is None for c in comp):
        # complement leaves the half module: no torus-compatible pairing
        return None

    size = len(basis)
    rows = []
    seen = set()
    for x_mv in so_spanning_multivectors(m, ring):
        entries = []
        for j, subset in enumerate(basis):
            image = clifford_action(x_mv, {subset: ring.one})
            entries.extend((index[s2], j, val) for s2, val in image.items())
        equations = {}
        for r, c, val in entries:
            # X^t B term at (c, comp(r)); B X term at (comp(r), c)
            key1 = (c, comp[r])
            eq = equations.setdefault(key1, {})
            eq[comp[r]] = eq[comp[r]] + val if comp[r] in eq else val
            key2 = (comp[r], c)
            eq = equations.setdefault(key2, {})
            eq[r] = eq[r] + val if r in eq else val
        for eq in equations.values():
            items = tuple(sorted((k, ring.show(v)) for k, v in eq.items() if v))
            if not items or items in seen:
                continue
            seen.add(items)
            row = [ring.zero] * size
            for k, v in eq.items():
                row[k] = v
            rows.append(row)

    kernel = linalg.nullspace(rows, size, ring)
    if not kernel:
        return None
    if len(kernel) > 1:
        raise RuntimeError("invariant form is not unique: module not irreducible?")
    b = kernel[0]
    lead = next(x for x in b if x)
    b = [x / lead for x in b]
    if not all(b):
        raise RuntimeError("invariant form is degenerate")

    if all(b[comp[j]] == b[j] for j in range(size)):
        symmetry = "symmetric"
    elif all(b[comp[j]] == -b[j] for j in range(size)):
        symmetry = "skew"
    else:
        raise RuntimeError("invariant form is neither symmetric nor skew")

    rows_b = [[ring.zero] * size for _ in range(size)]
    for j in range(size):
        rows_b[comp[j]][j] = b[j]
    return InvariantForm(matrix=SpinMatrix(ring, rows_b, basis), symmetry=symmetry)


def _form_primes(bound: int):
    """Primes p = 1 mod 8 with p > bound, smallest first."""
    p = bound + 1
    while True:
        if p % 8 == 1 and is_prime(p):
            yield p
        p += 1


def classify_invariant_form(m: int) -> dict:
    """Symmetry type of the invariant form.

    Exact rational solve for module dimension up to 32; above that, two
    independent prime fields (p = 1 mod 8, p > 2N) must agree.
    """
    size = module_dim(m)
    if size <= 32:
        form = invariant_form(m, QQ)
        rings = ["rational"]
        symmetry = form.symmetry if form else "none"
    else:
        gen = _form_primes(2 * size)
        fields = [PrimeField(next(gen)), PrimeField(next(gen))]
        forms = [invariant_form(m, fld) for fld in fields]
        rings = [fld.name for fld in fields]
        results = {("none" if f is None else f.symmetry) for f in forms}
        if len(results) != 1:
            raise RuntimeError(f"prime fields disagree on the form type: {results}")
        symmetry = results.pop()
    return {"m": m, "dim": size, "symmetry": symmetry,
            "self_dual": symmetry != "none", "rings": rings}


# ---------------------------------------------------------------------------
# split-involution cross-check on the representation side

def involution_diagonal(m: int, ring=QQ):
    """Diagonal spin action of rho-vee(-1): weight value on each wedge."""
    rv = rho_vee(m)
    if not rv.integral:
        raise PreconditionError(f"rho-vee is not a lattice cocharacter for m={m}")
    point = cochar_eval(rv, ring.from_int(-1))
    out = []
    for subset in spin_basis(m):
        val = point.z
        for i, ti in enumerate(point.t, start=1):
            if i not in subset:
                val = val / ti
        out.append(val)
    return out


def cartan_fixed_space_report(m: int) -> dict:
    """Fixed-space dimension of conjugation by rho-vee(-1) on the
    represented Lie algebra, for comparison with the root-height count."""
    diag = involution_diagonal(m, QQ)
    mats = [spin_matrix(x) for x in so_spanning_multivectors(m, QQ)]
    vecs = [[x for row in mt.rows for x in row] for mt in mats]
    lie_dim = linalg.rank(vecs, QQ)
    diffs = []
    for mt in mats:
        size = mt.nrows
        diff = [[diag[i] * mt.rows[i][j] / diag[j] - mt.rows[i][j]
                 for j in range(size)] for i in range(size)]
        diffs.append([x for row in diff for x in row])
    moved = linalg.rank(diffs, QQ)
    return {"m": m, "lie_dim": lie_dim, "fixed_dim": lie_dim - moved}
