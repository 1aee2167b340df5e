"""Plane (n = 3) monomial Cremona maps: generators, support classification,
decomposition into generator words, and closed-form inverses.

The two building blocks are the Steiner involution S = (x1x2, x1x3, x2x3)
and the hyperbolism H = (x1^2, x1x2, x2x3); every plane monomial Cremona
map is a word in S, H and variable permutations.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .exactmat import IntMatrix, det_exact
from .inverse import InverseSolution
from .monomap import (
    MonomialMap,
    NotCremonaError,
    Permutation,
    all_permutations,
    compose,
    is_cremona,
    maps_equal,
    perm_map,
    permute_map,
    reduce_canonical,
)


class SupportPatternError(ValueError):
    """No source/target permutation pair matches the required zero pattern."""


class DecompositionError(RuntimeError):
    """Internal failure: the degree stopped decreasing or a guaranteed
    pattern match did not happen."""


# ---------------------------------------------------------------------------
# generators


def steiner_map() -> MonomialMap:
    return reduce_canonical([[1, 1, 0], [1, 0, 1], [0, 1, 1]])


def hyperbolism_power(k: int) -> MonomialMap:
    """H^k = (x1^{k+1}, x1^k·x2, x2^k·x3), the degree-(k+1) hyperbolism power."""
    if k < 1:
        raise ValueError("power must be at least 1")
    return reduce_canonical([[k + 1, k, 0], [0, 1, k], [0, 0, 1]])


def hyperbolism_inverse(d: int) -> MonomialMap:
    """G_d = (x1·x2^{d-1}, x2^d, x1^{d-1}·x3), the exact inverse of H^{d-1}."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return reduce_canonical([[1, 0, d - 1], [d - 1, d, 0], [0, 0, 1]])


def basic_generators(d: int) -> tuple[MonomialMap, MonomialMap, MonomialMap]:
    """(S, H^{d-1}, G_d) with compose(H^{d-1}, G_d) the identity."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return steiner_map(), hyperbolism_power(d - 1), hyperbolism_inverse(d)


# ---------------------------------------------------------------------------
# generator words


@dataclass(frozen=True)
class Steiner:
    def text(self) -> str:
        return "S"

    def to_json(self) -> dict:
        return {"kind": "steiner"}


@dataclass(frozen=True)
class HyperbolismPower:
    power: int

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("power must be at least 1")

    def text(self) -> str:
        return "H" if self.power == 1 else f"H^{self.power}"

    def to_json(self) -> dict:
        return {"kind": "hyperbolism", "power": self.power}


@dataclass(frozen=True)
class PermToken:
    source: Permutation
    target: Permutation

    def text(self) -> str:
        return f"P({self.source.one_line()}|{self.target.one_line()})"

    def to_json(self) -> dict:
        return {
            "kind": "perm",
            "source": [i + 1 for i in self.source.images],
            "target": [i + 1 for i in self.target.images],
        }


GeneratorToken = Union[Steiner, HyperbolismPower, PermToken]


@dataclass(frozen=True)
class GeneratorWord:
    """Token sequence, rightmost token applied first."""

    tokens: tuple[GeneratorToken, ...]

    def text(self) -> str:
        return ".".join(t.text() for t in self.tokens)

    def to_json(self) -> list[dict]:
        return [t.to_json() for t in self.tokens]

    def __len__(self) -> int:
        return len(self.tokens)


def token_map(token: GeneratorToken) -> MonomialMap:
    if isinstance(token, Steiner):
        return steiner_map()
    if isinstance(token, HyperbolismPower):
        return hyperbolism_power(token.power)
    if isinstance(token, PermToken):
        # column j of the log-matrix is e_{source(target^{-1}(j))}
        tinv = token.target.inverse()
        combined = Permutation(tuple(token.source(tinv(j)) for j in range(token.source.n)))
        return perm_map(combined)
    raise TypeError(f"unknown token {token!r}")


def evaluate_word(word: GeneratorWord) -> MonomialMap:
    """Compose the token maps right to left; the result is canonical."""
    if not word.tokens:
        raise ValueError("empty word")
    acc = token_map(word.tokens[-1])
    for tok in reversed(word.tokens[:-1]):
        acc = compose(token_map(tok), acc)
    return acc


# ---------------------------------------------------------------------------
# support classification

_PERMS3 = all_permutations(3)

CASE_TAGS = ("I", "II", "IIIa", "IIIb", "IIIc", "IIId", "IIIe")


def normal_form(tag: str, d: int) -> MonomialMap:
    """The listed normal form for each support case at degree d."""
    forms = {
        "I": [[d, 0, d - 1], [0, 1, 0], [0, d - 1, 1]],  # (x1^d, x2·x3^{d-1}, x1^{d-1}·x3)
        "II": [[0, 0, 1], [d, d - 1, 0], [0, 1, d - 1]],  # (x2^d, x2^{d-1}·x3, x1·x3^{d-1})
        "IIIa": [[d - 1, 0, 1], [1, 0, 0], [0, d, d - 1]],  # (x1^{d-1}·x2, x3^d, x1·x3^{d-1})
        "IIIb": [[d - 1, 0, d], [1, d - 1, 0], [0, 1, 0]],  # (x1^{d-1}·x2, x2^{d-1}·x3, x1^d)
        "IIIc": [[1, 0, 0], [d - 1, 1, 0], [0, d - 1, d]],  # (x1·x2^{d-1}, x2·x3^{d-1}, x3^d)
        "IIId": [[1, 0, d - 1], [d - 1, d, 0], [0, 0, 1]],  # (x1·x2^{d-1}, x2^d, x1^{d-1}·x3)
        "IIIe": [[1, 0, 1], [1, 1, 0], [0, 1, 1]],  # (x1·x2, x2·x3, x1·x3), d = 2
    }
    if tag not in forms:
        raise ValueError(f"unknown case tag {tag!r}")
    if tag == "IIIe" and d != 2:
        raise ValueError("case IIIe has degree 2")
    return MonomialMap(IntMatrix.from_rows(forms[tag]))


@dataclass(frozen=True)
class PlaneCase:
    """Classification result: permuting the input by (source, target) yields
    ``normal_form(tag, degree)`` exactly."""

    tag: str
    source: Permutation
    target: Permutation
    degree: int

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "source": [i + 1 for i in self.source.images],
            "target": [i + 1 for i in self.target.images],
            "degree": self.degree,
        }


def _case_tag(a: IntMatrix, d: int) -> str | None:
    # pattern: monomial 1 omits x3, monomial 2 omits x1, monomial 3 omits x2
    if not (a[2, 0] == 0 and a[0, 1] == 0 and a[1, 2] == 0):
        return None
    a1, a2 = a[0, 0], a[1, 0]
    b2, b3 = a[1, 1], a[2, 1]
    c1, c3 = a[0, 2], a[2, 2]
    if a1 >= 1 and a2 == 0:
        return "I"
    if a1 == 0 and a2 >= 1:
        return "II"
    if b2 == 0:
        return "IIIa"
    if c3 == 0:
        return "IIIb"
    if c1 == 0:
        return "IIIc"
    if b3 == 0:
        return "IIId"
    return "IIIe"


def classify(f: MonomialMap) -> PlaneCase:
    """Match the cyclic support pattern under source/target permutations.

    Scans the 36 permutation pairs in lexicographic order and returns the
    first pair whose permuted matrix equals a listed normal form; the case
    tag follows the branch conditions on the pattern entries.
    """
    if f.n != 3:
        raise ValueError("classification is defined for n = 3 only")
    if not is_cremona(f):
        raise NotCremonaError("classification requires a Cremona map")
    d = f.degree
    for source in _PERMS3:
        for target in _PERMS3:
            g = permute_map(f, source, target)
            tag = _case_tag(g.log_matrix, d)
            if tag is None:
                continue
            if g.log_matrix == normal_form(tag, d).log_matrix:
                return PlaneCase(tag, source, target, d)
    raise SupportPatternError("support matches no cyclic permutation pattern")


# ---------------------------------------------------------------------------
# decomposition into generator words


def _source_token(perm: Permutation) -> PermToken:
    return PermToken(source=perm, target=Permutation.identity(perm.n))


def _perm_of_map(f: MonomialMap) -> Permutation:
    assert f.degree == 1
    images = []
    for j in range(f.n):
        col = f.monomial(j)
        images.append(col.index(1))
    return Permutation(tuple(images))


def _conjugated_core(m: MonomialMap) -> list[GeneratorToken]:
    """Write a permuted generator power as tokens [P, core, P'].

    Every cyclic-patterned plane Cremona map is a hyperbolism power or the
    Steiner involution up to source/target permutations, so a search over
    the 36 pairs must succeed; identity permutation tokens are dropped.
    """
    d = m.degree
    if d == 1:
        return [_source_token(_perm_of_map(m))]
    cores: list[GeneratorToken] = [HyperbolismPower(d - 1)]
    if d == 2:
        cores.append(Steiner())
    for core in cores:
        core_map = token_map(core)
        for st in _PERMS3:
            for ss in _PERMS3:
                candidate = compose(perm_map(st), compose(core_map, perm_map(ss)))
                if maps_equal(candidate, m):
                    tokens: list[GeneratorToken] = []
                    if not st.is_identity():
                        tokens.append(_source_token(st))
                    tokens.append(core)
                    if not ss.is_identity():
                        tokens.append(_source_token(ss))
                    return tokens
    raise DecompositionError("map is not a permuted generator power")


def _left_shape(f: MonomialMap) -> tuple[Permutation, Permutation, MonomialMap] | None:
    # target shape: third monomial a pure power x3^d, x3 absent from monomial 2
    for source in _PERMS3:
        for target in _PERMS3:
            g = permute_map(f, source, target)
            a = g.log_matrix
            if a[0, 2] == 0 and a[1, 2] == 0 and a[2, 1] == 0:
                return source, target, g
    return None


def decompose(f: MonomialMap) -> GeneratorWord:
    """Express a plane Cremona monomial map as a generator word.

    Strategy, by induction on the degree: permutation maps become a single
    permutation token; maps matching the cyclic pattern are permuted
    generator powers and are emitted directly; otherwise some monomial is a
    pure power, the map is permuted to that shape and either one Steiner
    factor (when a1 >= b1) or one hyperbolism factor (when b1 > a1, which
    strictly lowers the degree) is split off.  Iterative with a hard step
    bound; the contract is recomposition equality, not a canonical word.
    """
    if f.n != 3:
        raise ValueError("decomposition is defined for n = 3 only")
    if not is_cremona(f):
        raise NotCremonaError("decomposition requires a Cremona map")

    left: list[GeneratorToken] = []
    right: list[GeneratorToken] = []
    current = f
    steiner = steiner_map()
    hyper = hyperbolism_power(1)
    for _ in range(f.degree + 2):
        if current.degree == 1:
            return GeneratorWord(tuple(left + [_source_token(_perm_of_map(current))] + right))
        try:
            classify(current)
        except SupportPatternError:
            pass
        else:
            return GeneratorWord(tuple(left + _conjugated_core(current) + right))

        shaped = _left_shape(current)
        if shaped is None:
            raise DecompositionError("no pure-power shape found for a non-cyclic map")
        rho, pi, g = shaped
        # g = permute_map(current, rho, pi), so current = Q_pi . g . Q_rho^{-1}
        if not pi.is_identity():
            left.append(_source_token(pi))
        if not rho.is_identity():
            right.insert(0, _source_token(rho.inverse()))
        a = g.log_matrix
        a1, b1 = a[0, 0], a[0, 1]
        if a1 >= b1:
            # S is an involution, so g = S . (S . g); S . g matches the cyclic pattern
            rest = compose(steiner, g)
            return GeneratorWord(tuple(left + [Steiner()] + _conjugated_core(rest) + right))
        assert a1 >= 1, "a1 = 0 maps match the cyclic pattern and were emitted above"
        nxt = compose(hyper, g)
        if nxt.degree >= g.degree:
            raise DecompositionError(
                f"degree failed to decrease: {g.degree} -> {nxt.degree}"
            )
        left.extend(_hyperbolism_inverse_tokens())
        current = nxt
    raise DecompositionError("step bound exceeded")


@lru_cache(maxsize=1)
def _hyperbolism_inverse_tokens() -> tuple[GeneratorToken, ...]:
    # G_2 = (x1x2, x2^2, x1x3) is H conjugated by a transposition
    return tuple(_conjugated_core(hyperbolism_inverse(2)))


# ---------------------------------------------------------------------------
# closed-form inverse


def _unpermute_solution(
    bprime: list[list[int]],
    gprime: list[int],
    source: Permutation,
    target: Permutation,
) -> InverseSolution:
    # solution for the permuted matrix pulled back to the original frame
    n = len(gprime)
    b = [[bprime[target(k)][source(j)] for j in range(n)] for k in range(n)]
    gam = tuple(gprime[source(k)] for k in range(n))
    return InverseSolution(IntMatrix.from_rows(b), gam)


def invert3_closed_form(f: MonomialMap) -> InverseSolution:
    """Read the inverse off the two displayed closed forms (n = 3).

    Searches permutation pairs for either the pure-power shape with
    determinant +d or the cyclic shape (whose determinant is +d
    automatically), instantiates the corresponding formulas, and pulls the
    solution back through the permutations.  Equals :func:`invert` by
    uniqueness; the inverse has the same degree as the input.
    """
    if f.n != 3:
        raise ValueError("closed-form inverse is defined for n = 3 only")
    if not is_cremona(f):
        raise NotCremonaError("closed-form inverse requires a Cremona map")
    d = f.degree
    for source in _PERMS3:
        for target in _PERMS3:
            g = permute_map(f, source, target)
            a = g.log_matrix
            if a[0, 2] == 0 and a[1, 2] == 0 and a[2, 1] == 0 and det_exact(a) == d:
                a1, a2, a3 = a[0, 0], a[1, 0], a[2, 0]
                b1, b2 = a[0, 1], a[1, 1]
                q, r = divmod(a3 * b2 + 1, d)
                assert r == 0, "closed-form entry (a3·b2+1)/d must be integral"
                bprime = [[d, 0, b1], [0, a1 + a2, a2], [0, a3, q]]
                gprime = [d * a1 - 1, d * a2, d * a3]
                return _unpermute_solution(bprime, gprime, source, target)
            if a[2, 0] == 0 and a[0, 1] == 0 and a[1, 2] == 0:
                assert det_exact(a) == d, "cyclic support pattern forces det = +d"
                a1, a2 = a[0, 0], a[1, 0]
                b2, b3 = a[1, 1], a[2, 1]
                c1, c3 = a[0, 2], a[2, 2]
                bprime = [[b2, c1, 0], [0, c3, a2], [b3, 0, a1]]
                gprime = [a1 * b2 + b3 * c1 - 1, a2 * b2, b3 * c3]
                return _unpermute_solution(bprime, gprime, source, target)
    raise SupportPatternError(
        "support matches neither closed-form shape; use invert() instead"
    )
