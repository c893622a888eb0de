"""Exact dense linear algebra over Q(zeta_{2p}).

Gaussian elimination with the first nonzero entry of each column as pivot,
rows scanned top-down.  ``RankAccumulator`` is the streaming variant used for
large commutator spans: rows are kept sparse and inserted one at a time.
"""

from __future__ import annotations

from .cyclotomic import CycNum, ParameterError, field

__all__ = [
    "Matrix",
    "rref",
    "rank",
    "span_rank",
    "coordinates",
    "Coordinatizer",
    "RankAccumulator",
    "NotInSpan",
]


class NotInSpan(Exception):
    """The vector is not a combination of the given basis."""


class Matrix:
    """Dense rows x cols matrix of ``CycNum``; entries stored row-major."""

    __slots__ = ("p", "rows", "cols", "entries")

    def __init__(self, p: int, rows: int, cols: int, entries=None):
        fld = field(p)
        self.p = p
        self.rows = rows
        self.cols = cols
        if entries is None:
            entries = [fld.zero] * (rows * cols)
        else:
            entries = [fld.coerce(x) for x in entries]
            if len(entries) != rows * cols:
                raise ParameterError(f"expected {rows * cols} entries, got {len(entries)}")
        self.entries = entries

    @classmethod
    def from_rows(cls, p: int, rows, cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ParameterError("ragged rows")
        return cls(p, len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, p: int, n: int) -> Matrix:
        m = cls(p, n, n)
        one = field(p).one
        for i in range(n):
            m.entries[i * n + i] = one
        return m

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> Matrix:
        return cls(p, rows, cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.entries[i * self.cols + j] = field(self.p).coerce(value)

    def row(self, i: int) -> list[CycNum]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> list[CycNum]:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[CycNum]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> Matrix:
        return Matrix.from_rows(self.p, [self.column(j) for j in range(self.cols)], self.rows)

    def copy(self) -> Matrix:
        return Matrix(self.p, self.rows, self.cols, list(self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.p, self.rows, self.cols) == (other.p, other.rows, other.cols) and self.entries == other.entries

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(self.p, self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(self.p, self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.p, self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> Matrix:
        return Matrix(self.p, self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows or self.p != other.p:
            raise ParameterError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = field(self.p).zero
        out = []
        ocols = [other.column(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, x) for k, x in enumerate(r) if x]
            for col in ocols:
                acc = zero
                for k, x in nz:
                    y = col[k]
                    if y:
                        acc = acc + x * y
                out.append(acc)
        return Matrix(self.p, self.rows, other.cols, out)

    def __pow__(self, n: int) -> Matrix:
        result = Matrix.identity(self.p, self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def _same_shape(self, other):
        if (self.p, self.rows, self.cols) != (other.p, other.rows, other.cols):
            raise ParameterError("shape or field mismatch")

    def __repr__(self):
        return f"Matrix(p={self.p}, {self.rows}x{self.cols})"

    def to_json(self):
        return [[x.to_json() for x in self.row(i)] for i in range(self.rows)]


def _rref_rows(rows, ncols):
    """In-place reduced row echelon form on a list of row lists; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if x else x for x in rows[r]]
        prow = rows[r]
        nz = [(j, x) for j, x in enumerate(prow) if x and j >= c]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j, x in nz:
                        row[j] = row[j] - f * x
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    rows = m.to_rows()
    pivots = _rref_rows(rows, m.cols)
    return Matrix.from_rows(m.p, rows, m.cols) if rows else m.copy(), len(pivots), pivots


def rank(m: Matrix) -> int:
    return rref(m)[1]


def span_rank(vectors, p: int | None = None) -> int:
    """Rank of the span of a list of equal-length vectors (lists of CycNum)."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ParameterError("vectors have different lengths")
    acc = RankAccumulator()
    for v in vectors:
        acc.add(v)
    return acc.rank


class Coordinatizer:
    """Solves v = sum c_i basis_i for many v against one fixed independent basis."""

    def __init__(self, basis):
        basis = [list(b) for b in basis]
        if not basis:
            raise ParameterError("empty basis")
        self.basis = basis
        self.n = len(basis)
        self.length = len(basis[0])
        fld = basis[0][0].field if self.length else None
        self.field = fld
        work = [list(b) for b in basis]
        pivots = _rref_rows(work, self.length)
        if len(pivots) != self.n:
            raise ParameterError(f"basis is linearly dependent (rank {len(pivots)} < {self.n})")
        self.pivots = pivots
        # square system basis[:, pivots]; invert it via [M | I]
        n = self.n
        aug = []
        for i, b in enumerate(basis):
            row = [b[c] for c in pivots] + [fld.one if j == i else fld.zero for j in range(n)]
            aug.append(row)
        # rows of aug are basis vectors restricted to pivots: c^T M = v_P  => c = v_P M^{-1}
        _rref_rows(aug, n)
        self.inverse = [row[n:] for row in aug]

    def solve(self, v):
        """Coordinates of v, or raise ``NotInSpan``."""
        v = list(v)
        if len(v) != self.length:
            raise ParameterError("vector length does not match basis")
        zero = self.field.zero
        vp = [v[c] for c in self.pivots]
        coords = [zero] * self.n
        for k, x in enumerate(vp):
            if x:
                inv_row = self.inverse[k]
                for i in range(self.n):
                    y = inv_row[i]
                    if y:
                        coords[i] = coords[i] + x * y
        # recombine and compare: catches vectors outside the span
        for j in range(self.length):
            acc = zero
            for i, c in enumerate(coords):
                if c:
                    b = self.basis[i][j]
                    if b:
                        acc = acc + c * b
            if acc != v[j]:
                raise NotInSpan(f"vector not in span (first mismatch at index {j})")
        return coords


def coordinates(v, basis):
    """Coefficients c with v = sum c_i basis_i, or None if v is outside the span.

    Raises ``ParameterError`` if the basis is dependent.
    """
    try:
        return Coordinatizer(basis).solve(v)
    except NotInSpan:
        return None


class RankAccumulator:
    """Incremental rank of a growing set of vectors.

    Rows are stored sparsely as {column: CycNum}, each with leading entry 1 at
    its pivot column; a new vector is reduced against them and kept only if a
    nonzero remainder survives.
    """

    def __init__(self):
        self.rows: dict[int, dict[int, CycNum]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, vector) -> bool:
        """Insert a vector (dense list or sparse dict); True if it increased the rank."""
        if isinstance(vector, dict):
            v = {k: x for k, x in vector.items() if x}
        else:
            v = {k: x for k, x in enumerate(vector) if x}
        rows = self.rows
        while v:
            c = min(v)
            row = rows.get(c)
            if row is None:
                inv = v[c].inverse()
                rows[c] = {k: x * inv for k, x in v.items()}
                return True
            f = v[c]
            for k, x in row.items():
                y = v.get(k)
                y = -(f * x) if y is None else y - f * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        return False
