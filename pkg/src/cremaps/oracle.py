"""Desk-scale brute-force oracles for the inverse characterization.

These enumerate candidate inverse data directly from the defining linear
system, independently of the constructive algorithms, so uniqueness and
the tau = 1 cone-point characterization can be checked executably.
"""

from dataclasses import dataclass
from itertools import product
from typing import Sequence, Union

from .exactmat import IntMatrix, det_exact, inverse_rational
from .inverse import InverseSolution, invert
from .monomap import MonomialMap, NotCremonaError

MatrixLike = Union[IntMatrix, MonomialMap, Sequence[Sequence[int]]]


class BoundExceededError(RuntimeError):
    """No solution found although one must exist within a large enough bound."""


class UniquenessViolationError(RuntimeError):
    """The bounded search produced data that would falsify a uniqueness claim."""


def _as_log_matrix(a: MatrixLike) -> IntMatrix:
    if isinstance(a, MonomialMap):
        return a.log_matrix
    if isinstance(a, IntMatrix):
        return a
    return IntMatrix.from_rows(a)


def _degree(a: IntMatrix) -> int:
    sums = a.column_sums()
    if any(s != sums[0] for s in sums):
        raise ValueError("not a log-matrix: unequal column sums")
    if sums[0] < 1 or any(x < 0 for row in a.entries for x in row):
        raise ValueError("not a log-matrix: need nonnegative entries and degree >= 1")
    return sums[0]


@dataclass(frozen=True)
class ConeSystem:
    """Homogeneous system A·beta_i = gamma + tau·e_i in the n^2 + n + 1
    unknowns ordered (beta_1 | ... | beta_n | gamma | tau)."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def num_vars(self) -> int:
        return self.n * self.n + self.n + 1

    def is_solution(self, vec: Sequence[int]) -> bool:
        if len(vec) != self.num_vars or any(x < 0 for x in vec):
            return False
        return all(sum(c * x for c, x in zip(row, vec)) == 0 for row in self.rows)


def cone_system(a: MatrixLike) -> ConeSystem:
    amat = _as_log_matrix(a)
    if not amat.is_square():
        raise ValueError("log-matrix must be square")
    n = amat.rows
    rows = []
    for i in range(n):
        for r in range(n):
            row = [0] * (n * n + n + 1)
            for k in range(n):
                row[i * n + k] = amat[r, k]
            row[n * n + r] = -1
            row[n * n + n] = -1 if r == i else 0
            rows.append(tuple(row))
    return ConeSystem(n, tuple(rows))


def h_prime_family(a: MatrixLike) -> tuple[tuple[int, ...], ...]:
    """The tau = 0 reduction witnesses, one per variable index k:
    (e_k, ..., e_k, A·e_k, 0)."""
    amat = _as_log_matrix(a)
    n = amat.rows
    family = []
    for k in range(n):
        e_k = [int(j == k) for j in range(n)]
        vec = e_k * n + list(amat.column(k)) + [0]
        family.append(tuple(vec))
    return tuple(family)


@dataclass(frozen=True)
class OracleResult:
    solutions: tuple[InverseSolution, ...]
    cremona: bool


def _enumerate_condition_a(
    amat: IntMatrix, bound: int, cap_gamma: int | None
) -> list[InverseSolution]:
    """All (B, gamma) with A·beta_i = gamma + e_i, entries of B in [0, bound].

    beta_1 ranges over the box; gamma = A·beta_1 - e_1 then determines every
    other column through A^{-1}, which keeps the search box n-dimensional.
    """
    n = amat.rows
    ainv = inverse_rational(amat)
    found = []
    for beta1 in product(range(bound + 1), repeat=n):
        abeta1 = amat.apply(beta1)
        gamma = tuple(abeta1[r] - (1 if r == 0 else 0) for r in range(n))
        if min(gamma) < 0:
            continue
        if cap_gamma is not None and max(gamma) > cap_gamma:
            continue
        columns = [beta1]
        ok = True
        for i in range(1, n):
            rhs = [gamma[r] + (1 if r == i else 0) for r in range(n)]
            col = [sum(ainv[k, r] * rhs[r] for r in range(n)) for k in range(n)]
            if any(x.denominator != 1 or x < 0 or x > bound for x in col):
                ok = False
                break
            columns.append(tuple(int(x) for x in col))
        if ok:
            b = IntMatrix(tuple(tuple(columns[j][i] for j in range(n)) for i in range(n)))
            found.append(InverseSolution(b, gamma))
    return found


def brute_force_solutions(a: MatrixLike, bound: int | None = None) -> OracleResult:
    """Enumerate every normalized inverse candidate with entries up to bound.

    Candidates satisfy condition (a) with a shared nonnegative gamma and are
    filtered by the zero-in-every-row condition (b).  For a Cremona input an
    empty result means the bound was too small and raises; a non-Cremona
    input legitimately returns no solutions, flagged as such.
    """
    amat = _as_log_matrix(a)
    if not amat.is_square():
        raise ValueError("log-matrix must be square")
    d = _degree(amat)
    det = det_exact(amat)
    cremona = abs(det) == d
    if bound is None:
        if not cremona:
            raise ValueError("a bound is required for non-Cremona input")
        sol = invert(MonomialMap(amat))
        bound = max(max(x for row in sol.B.entries for x in row), 1) + 1
    if det == 0:
        return OracleResult((), False)
    survivors = tuple(
        s
        for s in _enumerate_condition_a(amat, bound, cap_gamma=None)
        if all(min(s.B.row(i)) == 0 for i in range(amat.rows))
    )
    if cremona and not survivors:
        raise BoundExceededError(f"no solution with entries <= {bound} for a Cremona input")
    return OracleResult(survivors, cremona)


def cone_minimal_tau1(a: MatrixLike, bound: int | None = None) -> tuple[int, ...]:
    """The unique tau = 1 cone point irreducible against the h' family.

    Enumerates integral cone points with tau = 1 and coordinates up to
    bound, discards those from which some h'_k can be subtracted while
    staying in the cone, and checks the single survivor against
    :func:`invert`.  Multiple survivors would falsify the uniqueness claim
    and raise a hard failure.
    """
    amat = _as_log_matrix(a)
    f = MonomialMap(amat)
    if abs(det_exact(amat)) != f.degree:
        raise NotCremonaError("the cone oracle requires a Cremona map")
    n = amat.rows
    expected = invert(f)
    expected_vec = tuple(
        x for j in range(n) for x in expected.beta(j)
    ) + expected.gamma + (1,)
    if bound is None:
        bound = max(expected_vec) + 1
    candidates = _enumerate_condition_a(amat, bound, cap_gamma=bound)

    def reducible(sol: InverseSolution) -> bool:
        for k in range(n):
            if min(sol.B.row(k)) >= 1 and all(
                sol.gamma[r] >= amat[r, k] for r in range(n)
            ):
                return True
        return False

    irreducible = [s for s in candidates if not reducible(s)]
    if not irreducible:
        raise BoundExceededError(f"no tau = 1 point with coordinates <= {bound}")
    if len(irreducible) > 1:
        raise UniquenessViolationError(
            f"{len(irreducible)} irreducible tau = 1 points within bound {bound}"
        )
    sol = irreducible[0]
    vec = tuple(x for j in range(n) for x in sol.beta(j)) + sol.gamma + (1,)
    if vec != expected_vec:
        raise UniquenessViolationError(
            "irreducible tau = 1 point disagrees with the constructed inverse"
        )
    return vec
