"""Exact rational linear algebra.

Everything downstream (cohomology, place permutations, filtered models)
reduces to matrices over Q.  Entries are `fractions.Fraction`, kept in
lowest terms by construction, and all operations are pure; no floating
point enters any identity check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"entries must be exact rationals, got {x!r}")


class RationalMatrix:
    """Immutable matrix over Q.  Dimensions are fixed at construction.

    >>> m = RationalMatrix([[1, 2], [3, 4]])
    >>> m.trace()
    Fraction(5, 1)
    >>> (m @ m.identity(2)) == m
    True
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, shape=None):
        rows = tuple(tuple(_frac(x) for x in row) for row in entries)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows")
            nrows = len(rows)
            if shape is not None and tuple(shape) != (nrows, ncols):
                raise ValueError("shape disagrees with entries")
        else:
            if shape is None:
                raise ValueError("empty matrix needs an explicit shape")
            nrows, ncols = shape
            if nrows != 0 and ncols != 0:
                raise ValueError("shape disagrees with empty entry list")
        self.rows = nrows
        self.cols = ncols
        self.entries = rows

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "RationalMatrix":
        if m == 0 or n == 0:
            return cls([], shape=(m, n))
        return cls([[Fraction(0)] * n for _ in range(m)])

    @classmethod
    def from_columns(cls, columns, nrows: int) -> "RationalMatrix":
        cols = [tuple(_frac(x) for x in c) for c in columns]
        if any(len(c) != nrows for c in cols):
            raise ValueError("column length mismatch")
        if not cols or nrows == 0:
            return cls([], shape=(nrows, len(cols)))
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(nrows)])

    @classmethod
    def diagonal(cls, diag) -> "RationalMatrix":
        diag = [_frac(x) for x in diag]
        n = len(diag)
        return cls([[diag[i] if i == j else Fraction(0) for j in range(n)]
                    for i in range(n)])

    # -- basic structure ----------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == \
               (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"RationalMatrix({self.rows}x{self.cols}: {body})"

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        self._same_shape(other)
        if self.rows == 0 or self.cols == 0:
            return RationalMatrix([], shape=(self.rows, self.cols))
        return RationalMatrix([[a + b for a, b in zip(r1, r2)]
                               for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        if self.rows == 0 or self.cols == 0:
            return RationalMatrix([], shape=(self.rows, self.cols))
        return RationalMatrix([[a - b for a, b in zip(r1, r2)]
                               for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.scale(Fraction(-1))

    def scale(self, c) -> "RationalMatrix":
        c = _frac(c)
        if self.rows == 0 or self.cols == 0:
            return RationalMatrix([], shape=(self.rows, self.cols))
        return RationalMatrix([[c * x for x in row] for row in self.entries])

    def __matmul__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} "
                             f"by {other.rows}x{other.cols}")
        if self.rows == 0 or other.cols == 0:
            return RationalMatrix([], shape=(self.rows, other.cols))
        if self.cols == 0:
            return RationalMatrix.zeros(self.rows, other.cols)
        ot = list(zip(*other.entries))
        return RationalMatrix([[sum(a * b for a, b in zip(r, col)) for col in ot]
                               for r in self.entries])

    def apply(self, vector):
        """Matrix times column vector (a sequence), returns a tuple."""
        if len(vector) != self.cols:
            raise ValueError("vector length mismatch")
        vec = [_frac(x) for x in vector]
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    def transpose(self) -> "RationalMatrix":
        if self.rows == 0 or self.cols == 0:
            return RationalMatrix([], shape=(self.cols, self.rows))
        return RationalMatrix([list(col) for col in zip(*self.entries)])

    def hstack(self, other) -> "RationalMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        if self.cols == 0:
            return other
        if other.cols == 0:
            return self
        return RationalMatrix([list(r1) + list(r2)
                               for r1, r2 in zip(self.entries, other.entries)])

    # -- invariants ----------------------------------------------------

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError(f"trace of non-square {self.rows}x{self.cols} matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def det(self) -> Fraction:
        if not self.is_square:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        a = [list(row) for row in self.entries]
        det = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            det *= a[col][col]
            inv = 1 / a[col][col]
            for r in range(col + 1, n):
                if a[r][col] != 0:
                    f = a[r][col] * inv
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column tuple).

        Pivots are chosen left to right, so the result is canonical for a
        given matrix and downstream basis choices are reproducible.
        """
        a = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            piv = next((i for i in range(r, self.rows) if a[i][c] != 0), None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = 1 / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(self.rows):
                if i != r and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        out = RationalMatrix(a) if a else RationalMatrix([], shape=(0, self.cols))
        return out, tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self):
        """Basis of the right kernel, as a list of column tuples.

        Free columns are taken in increasing index order (lexicographic
        pivot convention), making the basis deterministic.
        """
        red, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.cols
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -red.entries[r][fc]
            basis.append(tuple(v))
        return basis

    def column_space_basis(self):
        """Pivot columns of the original matrix, in column order."""
        _, pivots = self.rref()
        return [self.column(c) for c in pivots]

    def solve(self, b):
        """One exact solution x of A x = b, or None if inconsistent."""
        if len(b) != self.rows:
            raise ValueError("rhs length mismatch")
        aug = self.hstack(RationalMatrix.from_columns([b], self.rows))
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [Fraction(0)] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red.entries[r][self.cols]
        return tuple(x)

    def inverse(self) -> "RationalMatrix":
        if not self.is_square:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug = self.hstack(RationalMatrix.identity(n))
        red, pivots = aug.rref()
        if list(pivots[:n]) != list(range(n)):
            raise ValueError("matrix is singular")
        return RationalMatrix([row[n:] for row in red.entries])

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.rows

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")


def trace(m: RationalMatrix) -> Fraction:
    """Exact trace of a square rational matrix."""
    return m.trace()


@dataclass(frozen=True)
class GradedTrace:
    """Per-degree traces of a graded endomorphism, finitely supported.

    The alternating sum of a graded trace is the Lefschetz number of the
    endomorphism it records.
    """

    traces: tuple  # tuple of (degree, Fraction) pairs, degrees strictly increasing

    def __init__(self, traces):
        items = sorted((int(d), _frac(t)) for d, t in dict(traces).items())
        object.__setattr__(self, "traces", tuple(items))

    def trace_in_degree(self, d: int) -> Fraction:
        for deg, t in self.traces:
            if deg == d:
                return t
        return Fraction(0)

    def alternating_sum(self) -> Fraction:
        return sum(((-1) ** d * t for d, t in self.traces), Fraction(0))


def alternating_sum(g: GradedTrace) -> Fraction:
    """Sum of (-1)^i times the degree-i trace."""
    return g.alternating_sum()


def fixed_subspace_basis(group):
    """Basis (list of column tuples) of the common fixed subspace of a
    finite matrix group, via the averaging projector."""
    n = group[0].rows
    proj = RationalMatrix.zeros(n, n)
    for g in group:
        proj = proj + g
    proj = proj.scale(Fraction(1, len(group)))
    return proj.column_space_basis(), proj


def restricted_trace(phi: RationalMatrix, subspace_basis) -> Fraction:
    """Trace of phi restricted to an invariant subspace with given basis."""
    if not subspace_basis:
        return Fraction(0)
    n = phi.rows
    b = RationalMatrix.from_columns(subspace_basis, n)
    total = Fraction(0)
    for j, col in enumerate(subspace_basis):
        image = phi.apply(col)
        coords = b.solve(image)
        if coords is None:
            raise ValueError("subspace is not invariant under the endomorphism")
        total += coords[j]
    return total


def group_average_trace(phi: RationalMatrix, group) -> Fraction:
    """Average of Tr(phi g) over a finite commuting matrix group.

    Returns |G|^-1 sum_g Tr(phi g) and independently computes the trace
    of phi on the fixed subspace V^G (image of the averaging projector),
    asserting exact agreement of the two numbers.
    """
    group = list(group)
    if not group:
        raise ValueError("group must be non-empty")
    n = phi.rows
    if not phi.is_square:
        raise ValueError("endomorphism must be square")
    for g in group:
        if g.rows != n or g.cols != n:
            raise ValueError("group elements must match the endomorphism size")
        if not g.is_invertible():
            raise ValueError("group elements must be invertible")
        if phi @ g != g @ phi:
            raise ValueError("endomorphism does not commute with the group")
    elems = set(group)
    for g in group:
        for h in group:
            if (g @ h) not in elems:
                raise ValueError("matrix set is not closed under multiplication")

    averaged = sum(((phi @ g).trace() for g in group), Fraction(0)) / len(group)

    basis, proj = fixed_subspace_basis(group)
    # the projector must be idempotent onto V^G
    assert proj @ proj == proj
    direct = restricted_trace(phi, basis)
    assert averaged == direct, (averaged, direct)
    return averaged


# -- Smith normal form over the integers -------------------------------

def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def _add_row(a, src, dst, q):
    # row dst += q * row src
    a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]


def _add_col(a, src, dst, q):
    for row in a:
        row[dst] += q * row[src]


def _negate_row(a, i):
    a[i] = [-x for x in a[i]]


def _negate_col(a, j):
    for row in a:
        row[j] = -row[j]


def smith_normal_form(matrix):
    """Smith normal form of an integer matrix.

    Returns (U, D, V) as nested integer lists with U * A * V = D, where U
    and V are unimodular and D is diagonal with d1 | d2 | ... .  The
    factorization is verified by multiplication before returning.
    """
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def pivot_position(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while True:
        pos = pivot_position(t)
        if pos is None:
            break
        i, j = pos
        if i != t:
            _swap_rows(a, t, i)
            _swap_rows(u, t, i)
        if j != t:
            _swap_cols(a, t, j)
            _swap_cols(v, t, j)
        while True:
            # clear column t below the pivot
            dirty = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    _add_row(a, t, i, -q)
                    _add_row(u, t, i, -q)
                    if a[i][t] != 0:
                        # remainder smaller than pivot: swap it up and restart
                        _swap_rows(a, t, i)
                        _swap_rows(u, t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    _add_col(a, t, j, -q)
                    _add_col(v, t, j, -q)
                    if a[t][j] != 0:
                        _swap_cols(a, t, j)
                        _swap_cols(v, t, j)
                        dirty = True
                        break
            if dirty:
                continue
            # pivot must divide the whole remaining block for d1 | d2 | ...
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _add_row(a, offender, t, 1)
            _add_row(u, offender, t, 1)
        if a[t][t] < 0:
            _negate_row(a, t)
            _negate_row(u, t)
        t += 1
        if t == min(m, n):
            break

    original = [[int(x) for x in row] for row in matrix]
    prod = _int_mat_mul(_int_mat_mul(u, original), v)
    assert prod == a, "Smith factorization check failed"
    return u, a, v


def _int_mat_mul(x, y):
    if not x or not y:
        return []
    yt = list(zip(*y))
    return [[sum(p * q for p, q in zip(row, col)) for col in yt] for row in x]


def int_det(matrix) -> int:
    """Determinant of an integer matrix (exact, via Fraction elimination)."""
    m = RationalMatrix(matrix) if matrix else RationalMatrix([], shape=(0, 0))
    if m.rows == 0:
        return 1
    d = m.det()
    assert d.denominator == 1
    return int(d)


def is_unimodular(matrix) -> bool:
    return int_det(matrix) in (1, -1)


def snf_diagonal(matrix):
    """Nonzero diagonal entries of the Smith normal form."""
    _, d, _ = smith_normal_form(matrix)
    out = []
    for i in range(min(len(d), len(d[0]) if d else 0)):
        if d[i][i] != 0:
            out.append(d[i][i])
    return out


def integer_rank(matrix) -> int:
    """Rank of an integer matrix, read off the Smith normal form."""
    if not matrix or not matrix[0]:
        return 0
    return len(snf_diagonal(matrix))
