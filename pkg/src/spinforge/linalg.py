"""Small exact dense linear algebra over the coefficient fields.

Plain Gaussian elimination with exact division; every entry is a ring
element supporting +, -, *, / and truthiness as the zero test.  Sizes stay
in the hundreds, so nothing clever is attempted.
"""

from __future__ import annotations


class Matrix:
    """Immutable dense matrix over a ring handle."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring, rows):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    def __setattr__(self, *_):
        raise AttributeError("Matrix is immutable")

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero, ring.one
        return cls(ring, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_int_rows(cls, ring, rows):
        return cls(ring, [[ring.from_int(x) for x in row] for row in rows])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        assert self.ncols == other.nrows
        z = self.ring.zero
        cols = list(zip(*other.rows))
        out = [[_dot(row, col, z) for col in cols] for row in self.rows]
        return Matrix(self.ring, out)

    def __neg__(self):
        return Matrix(self.ring, [[-x for x in row] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring.name == other.ring.name and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring.name, self.rows))

    def transpose(self):
        return Matrix(self.ring, list(zip(*self.rows)))

    def det(self):
        assert self.nrows == self.ncols
        a = [list(row) for row in self.rows]
        n = self.nrows
        sign = 1
        acc = self.ring.one
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c]), None)
            if piv is None:
                return self.ring.zero
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                sign = -sign
            acc = acc * a[c][c]
            inv = self.ring.one / a[c][c]
            for r in range(c + 1, n):
                if not a[r][c]:
                    continue
                f = a[r][c] * inv
                for k in range(c, n):
                    a[r][k] = a[r][k] - f * a[c][k]
        return acc if sign == 1 else -acc

    def serialized_rows(self):
        """Row-major nested lists of ring-serialized entries."""
        return [[self.ring.show(x) for x in row] for row in self.rows]

    def __repr__(self):
        return f"Matrix({self.ring.name}, {self.nrows}x{self.ncols})"


def _dot(u, v, zero):
    acc = zero
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def _echelon(rows, ring):
    """Row-reduce in place; returns the list of pivot column indices."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ring.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(rows, ring) -> int:
    work = [list(r) for r in rows]
    if not work:
        return 0
    return len(_echelon(work, ring))


def nullspace(rows, ncols, ring):
    """Basis of the right kernel of the dense row list, as dense vectors."""
    z, o = ring.zero, ring.one
    work = [list(r) for r in rows] or [[z] * ncols]
    pivots = _echelon(work, ring)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [z] * ncols
        vec[free] = o
        for r, c in enumerate(pivots):
            vec[c] = -work[r][free]
        basis.append(vec)
    return basis


def solve(a_rows, b, ring):
    """Unique solution of A x = b for square invertible A, else None."""
    n = len(a_rows)
    work = [list(row) + [b[i]] for i, row in enumerate(a_rows)]
    pivots = _echelon(work, ring)
    if pivots != list(range(n)):
        return None
    return [work[i][n] for i in range(n)]
