"""Exact linear algebra over cyclotomic numbers.

Vectors are plain lists of Cyc values and a Matrix is a thin wrapper
around a list of such rows.  Everything here runs on exact arithmetic,
so ranks, kernels and solutions are decided with no numerical slack.
Elimination skips zero entries, which matters for the block-triangular
species matrices produced elsewhere in the package.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyc


def as_cyc(value) -> Cyc:
    if isinstance(value, Cyc):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyc.rational(value)
    raise TypeError("expected Cyc, int or Fraction, got %r" % (value,))


def zero_vector(n: int) -> list[Cyc]:
    z = Cyc.zero()
    return [z] * n


def vec_add(a: list[Cyc], b: list[Cyc]) -> list[Cyc]:
    return [x + y for x, y in zip(a, b)]


def vec_sub(a: list[Cyc], b: list[Cyc]) -> list[Cyc]:
    return [x - y for x, y in zip(a, b)]


def vec_scale(c, a: list[Cyc]) -> list[Cyc]:
    c = as_cyc(c)
    if not c:
        return zero_vector(len(a))
    return [c * x for x in a]


def vec_is_zero(a: list[Cyc]) -> bool:
    return not any(a)


class CycMatrix:
    """A dense matrix of Cyc entries with exact row reduction."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = [[as_cyc(v) for v in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "CycMatrix":
        one, zero = Cyc.one(), Cyc.zero()
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "CycMatrix":
        zero = Cyc.zero()
        m = cls([[zero] * ncols for _ in range(nrows)])
        m.ncols = ncols
        return m

    def copy(self) -> "CycMatrix":
        m = CycMatrix.__new__(CycMatrix)
        m.rows = [list(row) for row in self.rows]
        m.nrows = self.nrows
        m.ncols = self.ncols
        return m

    def transpose(self) -> "CycMatrix":
        return CycMatrix([list(col) for col in zip(*self.rows)]) if self.rows else CycMatrix.zeros(self.ncols, 0)

    def mul(self, other: "CycMatrix") -> "CycMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        cols = other.transpose().rows
        out = []
        for row in self.rows:
            out.append([_dot(row, col) for col in cols])
        return CycMatrix(out)

    def apply(self, vec: list[Cyc]) -> list[Cyc]:
        """Matrix times column vector."""
        if len(vec) != self.ncols:
            raise ValueError("shape mismatch in matrix-vector product")
        return [_dot(row, vec) for row in self.rows]

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.nrows == other.nrows and self.rows == other.rows

    __hash__ = None

    def rref(self) -> tuple["CycMatrix", list[int], int]:
        """Reduced row echelon form, the pivot columns, and the rank."""
        m = self.copy()
        pivots = _rref_inplace(m.rows, m.ncols)
        return m, pivots, len(pivots)

    def rank(self) -> int:
        work = [list(row) for row in self.rows]
        return len(_rref_inplace(work, self.ncols))

    def kernel_basis(self) -> list[list[Cyc]]:
        """Basis of the right null space, one vector per free column."""
        work = [list(row) for row in self.rows]
        pivots = _rref_inplace(work, self.ncols)
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        one, zero = Cyc.one(), Cyc.zero()
        for j in free:
            vec = [zero] * self.ncols
            vec[j] = one
            for i, pj in enumerate(pivots):
                vec[pj] = -work[i][j]
            basis.append(vec)
        return basis

    def inverse(self) -> "CycMatrix":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices are invertible")
        n = self.nrows
        one, zero = Cyc.one(), Cyc.zero()
        work = [list(self.rows[i]) + [one if j == i else zero for j in range(n)]
                for i in range(n)]
        pivots = _rref_inplace(work, n)
        if len(pivots) != n:
            raise ValueError("matrix is singular")
        return CycMatrix([row[n:] for row in work])

    def solve(self, rhs: list[Cyc]) -> list[Cyc] | None:
        """One solution of A x = rhs, or None when the system is inconsistent.

        Free variables are set to zero.
        """
        if len(rhs) != self.nrows:
            raise ValueError("rhs length mismatch")
        work = [list(row) + [as_cyc(rhs[i])] for i, row in enumerate(self.rows)]
        pivots = _rref_inplace(work, self.ncols + 1)
        if pivots and pivots[-1] == self.ncols:
            return None
        zero = Cyc.zero()
        x = [zero] * self.ncols
        for i, pj in enumerate(pivots):
            x[pj] = work[i][self.ncols]
        return x

    def __repr__(self):
        return "CycMatrix(%d x %d)" % (self.nrows, self.ncols)


def _dot(a: list[Cyc], b: list[Cyc]) -> Cyc:
    total = Cyc.zero()
    for x, y in zip(a, b):
        if x and y:
            total = total + x * y
    return total


def _rref_inplace(rows: list[list[Cyc]], limit: int) -> list[int]:
    """Row-reduce in place over columns [0, limit); returns pivot columns.

    Rows may be wider than `limit` (augmented systems); the extra columns
    ride along in the row operations but never host a pivot.
    """
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for col in range(limit):
        pivot = None
        for i in range(r, nrows):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        if lead != Cyc.one():
            inv = lead.inverse()
            rows[r] = [inv * v if v else v for v in rows[r]]
        for i in range(nrows):
            if i == r:
                continue
            factor = rows[i][col]
            if not factor:
                continue
            rows[i] = [v - factor * w if w else v
                       for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return pivots


def span_rank(vectors: list[list[Cyc]]) -> int:
    if not vectors:
        return 0
    return CycMatrix(vectors).rank()


def span_contains(vectors: list[list[Cyc]], vec: list[Cyc]) -> bool:
    """Whether vec lies in the span of the given row vectors."""
    if vec_is_zero(vec):
        return True
    if not vectors:
        return False
    base = CycMatrix(vectors).rank()
    return CycMatrix(list(vectors) + [vec]).rank() == base


def span_le(inner: list[list[Cyc]], outer: list[list[Cyc]]) -> bool:
    """Whether span(inner) is contained in span(outer)."""
    if not inner:
        return True
    if not outer:
        return all(vec_is_zero(v) for v in inner)
    base = CycMatrix(outer).rank()
    return CycMatrix(list(outer) + list(inner)).rank() == base


def span_equal(a: list[list[Cyc]], b: list[list[Cyc]]) -> bool:
    return span_le(a, b) and span_le(b, a)


def intersect_spans(a: list[list[Cyc]], b: list[list[Cyc]]) -> list[list[Cyc]]:
    """Basis of span(a) intersected with span(b).

    A vector in the intersection is u A = w B, so null vectors of the
    stacked transpose [A^T | -B^T] give the coefficients u.
    """
    if not a or not b:
        return []
    ncols = len(a[0])
    stacked = []
    for j in range(ncols):
        stacked.append([row[j] for row in a] + [-row[j] for row in b])
    combos = CycMatrix(stacked).kernel_basis()
    out = []
    for combo in combos:
        vec = zero_vector(ncols)
        for coeff, row in zip(combo[: len(a)], a):
            if coeff:
                vec = vec_add(vec, vec_scale(coeff, row))
        if not vec_is_zero(vec):
            out.append(vec)
    if not out:
        return []
    reduced, pivots, _ = CycMatrix(out).rref()
    return [reduced.rows[i] for i in range(len(pivots))]


def intersect(spaces: list["CycMatrix"]) -> "CycMatrix":
    """Basis of the intersection of the row spaces of the given matrices.

    All matrices must share a column count.  The result's rows are a
    reduced-echelon basis, so the output is independent of input order.
    """
    if not spaces:
        raise ValueError("need at least one space")
    ncols = spaces[0].ncols
    for m in spaces[1:]:
        if m.ncols != ncols:
            raise ValueError("ambient dimension mismatch")
    current = [list(r) for r in spaces[0].rows]
    for m in spaces[1:]:
        current = intersect_spans(current, [list(r) for r in m.rows])
        if not current:
            break
    if not current:
        return CycMatrix.zeros(0, ncols)
    reduced, pivots, rank = CycMatrix(current).rref()
    return CycMatrix([reduced.rows[i] for i in range(rank)])


def solve_coordinates(basis: list[list[Cyc]], vec: list[Cyc]) -> list[Cyc] | None:
    """Coefficients expressing vec as a combination of the basis rows."""
    if not basis:
        return [] if vec_is_zero(vec) else None
    mat = CycMatrix([list(col) for col in zip(*basis)])
    return mat.solve(list(vec))
