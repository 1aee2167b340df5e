"""Monomial rational self-maps of projective space via their log-matrices.

A map is the tuple of its defining monomials; column i of the log-matrix
holds the exponent vector of the i-th monomial.  Maps are identified up to
a common monomial factor, so every stored matrix is in canonical form:
each row has been lowered by its minimum and therefore contains a zero.
"""

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .exactmat import IntMatrix, det_exact, inverse_rational

ExponentVector = tuple[int, ...]

_FACTOR_RE = re.compile(r"x(\d+)(?:\^(\d+))?")


class MapError(ValueError):
    """Base class for monomial map errors."""


class MapSyntaxError(MapError):
    """Input text does not follow the monomial grammar."""


class InvalidMapError(MapError):
    """Matrix violates a monomial map invariant."""


class NotCremonaError(MapError):
    """Operation requires a Cremona map."""


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..n}, stored as a 0-based image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection: {self.images}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    @staticmethod
    def from_one_line(text: str) -> "Permutation":
        """Parse the 1-based one-line form, e.g. ``132``."""
        return Permutation(tuple(int(c) - 1 for c in text))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images):
            inv[img] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images))

    def one_line(self) -> str:
        return "".join(str(i + 1) for i in self.images)


def all_permutations(n: int) -> list[Permutation]:
    """All permutations on {1..n} in lexicographic order of image tuples."""
    from itertools import permutations as _perms

    return [Permutation(p) for p in _perms(range(n))]


@dataclass(frozen=True)
class MonomialMap:
    """Canonical monomial self-map.  Construct through :func:`reduce_canonical`
    or :func:`parse_map` unless the matrix is already canonical."""

    log_matrix: IntMatrix

    def __post_init__(self):
        a = self.log_matrix
        if not a.is_square():
            raise InvalidMapError("log-matrix must be square")
        n = a.rows
        sums = a.column_sums()
        d = sums[0]
        if any(s != d for s in sums):
            raise InvalidMapError(f"unequal monomial degrees: column sums {sums}")
        if d < 1:
            raise InvalidMapError("degenerate map: degree must be at least 1")
        for i in range(n):
            row = a.row(i)
            if min(row) < 0:
                raise InvalidMapError(f"negative exponent in row {i + 1}")
            if min(row) != 0:
                raise InvalidMapError(
                    f"row {i + 1} has no zero: monomials share the factor x{i + 1}"
                )
            if max(row) == 0:
                raise InvalidMapError(f"variable x{i + 1} divides none of the monomials")
        cols = [a.column(j) for j in range(n)]
        if len(set(cols)) != n:
            raise InvalidMapError("duplicate monomials")

    @property
    def n(self) -> int:
        return self.log_matrix.rows

    @property
    def degree(self) -> int:
        return sum(self.log_matrix.column(0))

    def monomial(self, i: int) -> ExponentVector:
        """Exponent vector of the i-th defining monomial (0-based)."""
        return self.log_matrix.column(i)

    def monomials(self) -> tuple[ExponentVector, ...]:
        return tuple(self.log_matrix.column(j) for j in range(self.n))

    def __str__(self) -> str:
        return format_map(self)


MatrixLike = Union[IntMatrix, Sequence[Sequence[int]]]


def _as_matrix(m: MatrixLike) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix.from_rows(m)


def identity_map(n: int) -> MonomialMap:
    return MonomialMap(IntMatrix.identity(n))


def reduce_canonical(matrix: MatrixLike) -> MonomialMap:
    """Cancel the common monomial factor: subtract each row's minimum.

    Two nonnegative matrices with equal column sums define the same rational
    map exactly when their reductions coincide.
    """
    a = _as_matrix(matrix)
    if not a.is_square():
        raise InvalidMapError("log-matrix must be square")
    sums = a.column_sums()
    if any(s != sums[0] for s in sums):
        raise InvalidMapError(f"unequal monomial degrees: column sums {sums}")
    if any(x < 0 for row in a.entries for x in row):
        raise InvalidMapError("negative exponent")
    reduced = tuple(tuple(x - min(row) for x in row) for row in a.entries)
    return MonomialMap(IntMatrix(reduced))


def gcd_exponent(matrix: MatrixLike) -> ExponentVector:
    """Exponent of the monomial factor :func:`reduce_canonical` removes."""
    a = _as_matrix(matrix)
    return tuple(min(row) for row in a.entries)


def parse_map(text: str) -> MonomialMap:
    """Parse ``x1*x2, x1*x3, x2*x3`` style input into a canonical map.

    Monomials are comma-separated products of powers of x1..xn (``*`` for
    product, ``^`` for power, whitespace ignored); n is the number of
    monomials.  Degree mismatches, out-of-range variables and duplicate
    monomials are rejected; a common monomial factor is cancelled.
    """
    parts = [re.sub(r"\s+", "", p) for p in text.split(",")]
    if parts == [""]:
        raise MapSyntaxError("empty input")
    n = len(parts)
    columns = []
    for pos, part in enumerate(parts, start=1):
        if not part:
            raise MapSyntaxError(f"monomial {pos} is empty")
        vec = [0] * n
        for factor in part.split("*"):
            m = _FACTOR_RE.fullmatch(factor)
            if m is None:
                raise MapSyntaxError(f"cannot parse factor {factor!r} in monomial {pos}")
            idx = int(m.group(1))
            exp = int(m.group(2)) if m.group(2) is not None else 1
            if not 1 <= idx <= n:
                raise MapSyntaxError(
                    f"variable x{idx} out of range in monomial {pos} (n = {n})"
                )
            vec[idx - 1] += exp
        columns.append(tuple(vec))
    degrees = [sum(c) for c in columns]
    if len(set(degrees)) != 1:
        raise InvalidMapError(f"unequal monomial degrees: {degrees}")
    if len(set(columns)) != n:
        raise InvalidMapError("duplicate monomials")
    rows = tuple(tuple(columns[j][i] for j in range(n)) for i in range(n))
    return reduce_canonical(IntMatrix(rows))


def format_monomial(vec: Sequence[int]) -> str:
    parts = [f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(vec) if e > 0]
    return "*".join(parts) if parts else "1"


def format_map(f: MonomialMap) -> str:
    """Render in the grammar accepted by :func:`parse_map`; variables appear
    in increasing index, exponent 1 is left implicit."""
    return ", ".join(format_monomial(f.monomial(i)) for i in range(f.n))


def compose(f: MonomialMap, g: MonomialMap) -> MonomialMap:
    """Composite map: apply ``g`` first, then ``f``.

    Column i of the product A_g · A_f is the exponent of the i-th monomial
    of ``f`` evaluated on the monomials of ``g``; the result is reduced
    canonically.
    """
    if f.n != g.n:
        raise MapError(f"dimension mismatch: {f.n} vs {g.n}")
    return reduce_canonical(g.log_matrix.matmul(f.log_matrix))


def compose_all(maps: Iterable[MonomialMap]) -> MonomialMap:
    """Compose left to right: ``compose_all([F, G, H])`` applies H first."""
    seq = list(maps)
    if not seq:
        raise MapError("nothing to compose")
    acc = seq[-1]
    for m in reversed(seq[:-1]):
        acc = compose(m, acc)
    return acc


def is_cremona(f: MonomialMap) -> bool:
    """A monomial map is Cremona exactly when |det| of its log-matrix equals
    the common degree of its monomials."""
    return abs(det_exact(f.log_matrix)) == f.degree


def maps_equal(f: Union[MonomialMap, MatrixLike], g: Union[MonomialMap, MatrixLike]) -> bool:
    """Equality as rational maps: canonical reductions agree entry-wise."""
    fm = f if isinstance(f, MonomialMap) else reduce_canonical(f)
    gm = g if isinstance(g, MonomialMap) else reduce_canonical(g)
    if fm.n != gm.n:
        raise MapError(f"dimension mismatch: {fm.n} vs {gm.n}")
    return fm.log_matrix == gm.log_matrix


def check_difference_integrality(f: MonomialMap):
    """Evaluate A^{-1}(e_i - e_j) for all i < j and collect the witnesses.

    Every coordinate must be an integer whenever the map is Cremona; the
    boolean result is exposed so tests can assert exactly that.
    """
    if not is_cremona(f):
        raise NotCremonaError("difference integrality requires a Cremona map")
    inv = inverse_rational(f.log_matrix)
    n = f.n
    ok = True
    witnesses = []
    for i in range(n):
        for j in range(i + 1, n):
            diff = [inv[k, i] - inv[k, j] for k in range(n)]
            if all(x.denominator == 1 for x in diff):
                witnesses.append((i + 1, j + 1, tuple(int(x) for x in diff)))
            else:
                ok = False
    return ok, witnesses


def perm_map(perm: Permutation) -> MonomialMap:
    """Degree-1 map sending x_i to position(s) given by ``perm``: column j of
    the log-matrix is e_{perm(j)}."""
    n = perm.n
    rows = tuple(tuple(int(perm(j) == i) for j in range(n)) for i in range(n))
    return MonomialMap(IntMatrix(rows))


def permute_map(f: MonomialMap, source: Permutation, target: Permutation) -> MonomialMap:
    """Relabel source variables by ``source`` and reorder target monomials by
    ``target``: entry (i, j) moves to (source(i), target(j))."""
    if source.n != f.n or target.n != f.n:
        raise MapError("permutation size mismatch")
    a = f.log_matrix
    n = f.n
    si, ti = source.inverse(), target.inverse()
    rows = tuple(tuple(a[si(r), ti(c)] for c in range(n)) for r in range(n))
    return MonomialMap(IntMatrix(rows))


def map_to_json(f: MonomialMap) -> dict:
    return {"n": f.n, "degree": f.degree, "log_matrix": [list(r) for r in f.log_matrix.entries]}


def map_from_json(data: Union[str, dict]) -> MonomialMap:
    """Inverse of :func:`map_to_json`; validates shape and declared degree."""
    obj = json.loads(data) if isinstance(data, str) else data
    try:
        n = obj["n"]
        rows = obj["log_matrix"]
    except (KeyError, TypeError) as exc:
        raise MapError(f"malformed map object: {exc}") from exc
    if len(rows) != n or any(len(r) != n for r in rows):
        raise MapError(f"log_matrix is not {n}x{n}")
    if any(not isinstance(x, int) or isinstance(x, bool) for r in rows for x in r):
        raise MapError("log_matrix entries must be integers")
    f = reduce_canonical(IntMatrix.from_rows(rows))
    declared = obj.get("degree")
    if declared is not None and declared != f.degree:
        raise MapError(f"declared degree {declared} != actual degree {f.degree}")
    return f
