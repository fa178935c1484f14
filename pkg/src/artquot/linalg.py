"""Exact linear algebra over the rationals.

Row reduction runs fraction-free: each incoming row is scaled to integers,
eliminated against the current pivot rows by integer cross-multiplication
(with gcd normalization to keep entries small), and only the final
normalization to reduced echelon form touches Fractions.  Everything is
exact; there is no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .ring import AlgebraError

Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[Vector, ...], row-major


def _integerize(row: Sequence) -> list[int]:
    den = 1
    vals = [Fraction(x) for x in row]
    for x in vals:
        den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) for x in vals]


def _gcd_normalize(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g == 0:
        return row
    lead = next(x for x in row if x)
    if lead < 0:
        g = -g
    return [x // g for x in row]


def _lead(row: Sequence[int], start: int = 0) -> int | None:
    for c in range(start, len(row)):
        if row[c]:
            return c
    return None


def rref(vectors: Iterable[Sequence], width: int):
    """Canonical reduced row echelon form.

    Returns (rows, pivots): rows are tuples of Fractions with pivot entries
    1 and zeros above and below each pivot; pivots are the pivot columns in
    increasing order.  Zero rows are dropped.
    """
    pivot_rows: dict[int, list[int]] = {}
    for vec in vectors:
        if len(vec) != width:
            raise AlgebraError("vector has wrong length")
        row = _integerize(vec)
        c = _lead(row)
        while c is not None and c in pivot_rows:
            p = pivot_rows[c]
            a, b = p[c], row[c]
            row = [a * x - b * y for x, y in zip(row, p)]
            row = _gcd_normalize(row)
            c = _lead(row, c + 1)
        if c is not None:
            pivot_rows[c] = _gcd_normalize(row)
    pivots = tuple(sorted(pivot_rows))
    rows = []
    for c in pivots:
        r = pivot_rows[c]
        piv = r[c]
        rows.append([Fraction(x, piv) for x in r])
    # eliminate above the pivots
    for j in range(len(pivots) - 1, -1, -1):
        cj = pivots[j]
        for i in range(j):
            f = rows[i][cj]
            if f:
                rows[i] = [xi - f * xj for xi, xj in zip(rows[i], rows[j])]
    return tuple(tuple(r) for r in rows), pivots


class Subspace:
    """A linear subspace of k^ambient, stored as canonical RREF rows."""

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, ambient: int, vectors: Iterable[Sequence] = ()):
        self.ambient = ambient
        self.rows, self.pivots = rref(vectors, ambient)

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        unit = [[Fraction(int(i == j)) for j in range(ambient)] for i in range(ambient)]
        return cls(ambient, unit)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence) -> Vector:
        """Residual of vec after reduction by the stored rows; zero iff vec is in the span."""
        v = [Fraction(x) for x in vec]
        if len(v) != self.ambient:
            raise AlgebraError("vector has wrong length")
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                v = [xi - f * ri for xi, ri in zip(v, row)]
        return tuple(v)

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise AlgebraError("ambient dimensions differ")
        return Subspace(self.ambient, list(self.rows) + list(other.rows))

    def intersection(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: reduce [U|U; W|0]; rows with zero left half span U cap W."""
        if self.ambient != other.ambient:
            raise AlgebraError("ambient dimensions differ")
        d = self.ambient
        block = [list(r) + list(r) for r in self.rows]
        block += [list(r) + [Fraction(0)] * d for r in other.rows]
        rows, _ = rref(block, 2 * d)
        vecs = [r[d:] for r in rows if not any(r[:d])]
        return Subspace(d, vecs)

    def coords(self, vec: Sequence) -> Vector:
        """Coordinates of vec in the row basis; raises if vec is outside."""
        v = [Fraction(x) for x in vec]
        out = []
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            out.append(f)
            if f:
                v = [xi - f * ri for xi, ri in zip(v, row)]
        if any(v):
            raise AlgebraError("vector is not in the subspace")
        return tuple(out)

    def residual_matrix(self) -> Matrix:
        """Matrix of v -> v - (projection onto the span); its kernel is the span."""
        d = self.ambient
        rows = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
        for row, p in zip(self.rows, self.pivots):
            for i in range(d):
                f = rows[i][p]
                if f:
                    rows[i] = [xi - f * ri for xi, ri in zip(rows[i], row)]
        # rows currently hold images of unit vectors as *rows*; the residual
        # map is symmetric in this representation only if we transpose
        return tuple(zip(*rows))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def kernel(matrix_rows: Sequence[Sequence], width: int) -> Subspace:
    """Null space {v : A v = 0} of the matrix with the given rows."""
    rows, pivots = rref(matrix_rows, width)
    pivot_set = set(pivots)
    vecs = []
    for f in range(width):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * width
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        vecs.append(v)
    return Subspace(width, vecs)


def rank(matrix_rows: Sequence[Sequence], width: int) -> int:
    rows, _ = rref(matrix_rows, width)
    return len(rows)


# ---------------------------------------------------------------------------
# dense matrix helpers (row-major tuples of Fraction tuples)

def identity_matrix(d: int) -> Matrix:
    return tuple(
        tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d)
    )


def zero_matrix(d: int) -> Matrix:
    return tuple(tuple(Fraction(0) for _ in range(d)) for _ in range(d))


def mat_vec(mat: Matrix, vec: Sequence) -> Vector:
    return tuple(sum((r[j] * vec[j] for j in range(len(vec)) if vec[j]), Fraction(0)) for r in mat)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt)
        for row in a
    )


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, c) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def mat_pow(a: Matrix, k: int) -> Matrix:
    out = identity_matrix(len(a))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def column_space(mat: Matrix) -> Subspace:
    """Span of the columns, as a subspace of k^(number of rows)."""
    return Subspace(len(mat), list(zip(*mat)))


def is_invertible(mat: Matrix) -> bool:
    return rank(mat, len(mat)) == len(mat)
