"""Exact dense linear algebra over the integers and rationals.

Entries are Python ints and ``fractions.Fraction``, so everything is
arbitrary precision and no rounding can occur anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored row-major as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) < 1 or len(self.entries[0]) < 1:
            raise ValueError("matrix must have at least one row and one column")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise ValueError("ragged rows")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"non-integer entry {x!r}")

    @staticmethod
    def from_rows(rows: Iterable[Sequence[int]]) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(tuple((0,) * cols for _ in range(rows)))

    @staticmethod
    def diagonal(diag: Sequence[int]) -> "IntMatrix":
        n = len(diag)
        return IntMatrix(tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(row[j] for row in self.entries) for j in range(self.cols))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_diagonal(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(self.column(j) for j in range(self.cols)))

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        return IntMatrix(
            tuple(
                tuple(sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                      for j in range(other.cols))
                for i in range(self.rows)
            )
        )

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product with ``vec`` as a column vector."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(sum(row[k] * vec[k] for k in range(self.cols)) for row in self.entries)

    def minor(self, i: int, j: int) -> "IntMatrix":
        """Submatrix with row ``i`` and column ``j`` removed."""
        return IntMatrix(
            tuple(tuple(row[c] for c in range(self.cols) if c != j)
                  for r, row in enumerate(self.entries) if r != i)
        )

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class RatMatrix:
    """Immutable rational matrix; :class:`fractions.Fraction` keeps every
    entry in lowest terms with positive denominator."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) < 1 or len(self.entries[0]) < 1:
            raise ValueError("matrix must have at least one row and one column")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise ValueError("ragged rows")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def matmul_int(self, other: IntMatrix) -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        return RatMatrix(
            tuple(
                tuple(sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)),
                          start=Fraction(0))
                      for j in range(other.cols))
                for i in range(self.rows)
            )
        )

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == (1 if i == j else 0)
            for i in range(self.rows) for j in range(self.cols)
        )


def det_exact(m: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination with full pivoting.

    The pivot is the smallest nonzero magnitude in the trailing block, ties
    broken by lowest row then lowest column index, so the elimination path
    is deterministic.  All divisions are exact.
    """
    if not m.is_square():
        raise ValueError("determinant requires a square matrix")
    n = m.rows
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        best = None
        for i in range(k, n):
            for j in range(k, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            return 0
        pi, pj = best
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                q, r = divmod(num, prev)
                assert r == 0, "Bareiss division must be exact"
                a[i][j] = q
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse_rational(m: IntMatrix) -> RatMatrix:
    """Exact inverse via the adjugate: entry (i, j) is cofactor(j, i) / det."""
    if not m.is_square():
        raise ValueError("inverse requires a square matrix")
    d = det_exact(m)
    if d == 0:
        raise ValueError("matrix is singular")
    n = m.rows
    if n == 1:
        return RatMatrix(((Fraction(1, d),),))
    return RatMatrix(
        tuple(
            tuple(Fraction((-1) ** (i + j) * det_exact(m.minor(j, i)), d) for j in range(n))
            for i in range(n)
        )
    )


def _det_cofactor(rows: list[list[int]]) -> int:
    # Laplace expansion along the first row; independent of the Bareiss path.
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x == 0:
            continue
        sub = [row[:j] + row[j + 1:] for row in rows[1:]]
        total += (-1) ** j * x * _det_cofactor(sub)
    return total


def det_diag_perturbation(g: IntMatrix, d: IntMatrix) -> int:
    """det(G + D) through the principal-minor expansion over diagonal subsets.

    Sums, over every subset S of indices, the product of the selected
    diagonal entries of D times the complementary principal minor of G.
    The minors are computed by cofactor expansion, so the result never
    touches the elimination path of :func:`det_exact` and can serve as an
    independent cross-check.  Cost grows like 2^n, a desk-scale oracle.
    """
    if not g.is_square():
        raise ValueError("first argument must be square")
    if not d.is_square() or d.rows != g.rows:
        raise ValueError("size mismatch between matrix and diagonal")
    if not d.is_diagonal():
        raise ValueError("second argument must be diagonal")
    n = g.rows
    diag = [d.entries[i][i] for i in range(n)]
    total = 0
    for r in range(n + 1):
        for picked in combinations(range(n), r):
            prod = 1
            for i in picked:
                prod *= diag[i]
            if prod == 0:
                continue
            keep = [i for i in range(n) if i not in picked]
            sub = [[g.entries[i][j] for j in keep] for i in keep]
            total += prod * _det_cofactor(sub)
    return total
