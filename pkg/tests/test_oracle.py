import pytest
from corpus import low_degree_corpus

from cremaps import (
    BoundExceededError,
    IntMatrix,
    NotCremonaError,
    brute_force_solutions,
    cone_minimal_tau1,
    cone_system,
    h_prime_family,
    invert,
    invert_with_trace,
    parse_map,
)

HYPERBOLISM = parse_map("x1^2, x1*x2, x2*x3")


class TestBruteForce:
    def test_hyperbolism_is_a_singleton(self):
        result = brute_force_solutions(HYPERBOLISM.log_matrix, bound=3)
        assert result.cremona
        assert len(result.solutions) == 1
        assert result.solutions[0] == invert(HYPERBOLISM)

    def test_identity(self):
        result = brute_force_solutions(IntMatrix.identity(2), bound=1)
        assert result.cremona
        assert len(result.solutions) == 1
        sol = result.solutions[0]
        assert sol.B == IntMatrix.identity(2)
        assert sol.gamma == (0, 0)

    def test_non_cremona_comes_back_empty_and_flagged(self):
        result = brute_force_solutions(IntMatrix.from_rows([[2, 0], [0, 2]]), bound=4)
        assert result.solutions == ()
        assert not result.cremona

    def test_insufficient_bound_raises(self):
        with pytest.raises(BoundExceededError):
            brute_force_solutions(HYPERBOLISM.log_matrix, bound=1)

    def test_self_calibrating_bound(self):
        result = brute_force_solutions(HYPERBOLISM.log_matrix)
        assert len(result.solutions) == 1

    def test_uniqueness_on_low_degree_corpus(self):
        for f in low_degree_corpus(515, 15):
            result = brute_force_solutions(f.log_matrix)
            assert result.cremona
            assert len(result.solutions) == 1
            assert result.solutions[0] == invert(f)


class TestConeSystem:
    def test_shape(self):
        cs = cone_system(HYPERBOLISM.log_matrix)
        assert cs.n == 3
        assert cs.num_vars == 13
        assert len(cs.rows) == 9

    def test_pinned_tau0_generator_is_an_h_prime(self):
        family = h_prime_family(HYPERBOLISM.log_matrix)
        assert (0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0) in family

    def test_h_prime_vectors_solve_the_system(self):
        cs = cone_system(HYPERBOLISM.log_matrix)
        for h in h_prime_family(HYPERBOLISM.log_matrix):
            assert cs.is_solution(h)

    def test_minimal_tau1_point(self):
        vec = cone_minimal_tau1(HYPERBOLISM.log_matrix)
        assert vec == (1, 1, 0, 0, 2, 0, 1, 0, 1, 2, 1, 0, 1)
        assert cone_system(HYPERBOLISM.log_matrix).is_solution(vec)

    def test_identity_2x2(self):
        assert cone_minimal_tau1(IntMatrix.identity(2)) == (1, 0, 0, 1, 0, 0, 1)

    def test_requires_cremona(self):
        with pytest.raises(NotCremonaError):
            cone_minimal_tau1(IntMatrix.from_rows([[2, 0], [0, 2]]))

    def test_reducibility_witness(self):
        # a tau = 1 point with a strictly positive row loses an h' vector
        # and stays in the cone
        _, trace = invert_with_trace(HYPERBOLISM)
        pre_b, pre_g = trace.pre_normalization
        cs = cone_system(HYPERBOLISM.log_matrix)
        n = 3
        point = tuple(x for j in range(n) for x in pre_b.column(j)) + pre_g + (1,)
        assert cs.is_solution(point)
        positive_rows = [k for k in range(n) if min(pre_b.row(k)) >= 1]
        assert positive_rows
        family = h_prime_family(HYPERBOLISM.log_matrix)
        for k in positive_rows:
            reduced = tuple(x - y for x, y in zip(point, family[k]))
            assert cs.is_solution(reduced)

    def test_matches_invert_on_low_degree_corpus(self):
        for f in low_degree_corpus(616, 8):
            vec = cone_minimal_tau1(f.log_matrix)
            sol = invert(f)
            expected = tuple(
                x for j in range(f.n) for x in sol.beta(j)
            ) + sol.gamma + (1,)
            assert vec == expected
