import random

import pytest
from corpus import det_leibniz

from cremaps import IntMatrix, det_diag_perturbation, det_exact, inverse_rational

A_EXAMPLE_D3 = IntMatrix.from_rows([[3, 2, 0], [0, 1, 2], [0, 0, 1]])
A_STEINER = IntMatrix.from_rows([[1, 1, 0], [1, 0, 1], [0, 1, 1]])


class TestDetExact:
    def test_identity(self):
        assert det_exact(IntMatrix.identity(3)) == 1

    def test_triangular_example(self):
        assert det_exact(A_EXAMPLE_D3) == 3

    def test_steiner_log_matrix(self):
        # frozen from the 3! -term permutation sum
        assert det_leibniz([[1, 1, 0], [1, 0, 1], [0, 1, 1]]) == -2
        assert det_exact(A_STEINER) == -2

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            det_exact(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))

    def test_singular(self):
        assert det_exact(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0

    def test_matches_leibniz_oracle(self):
        rng = random.Random(12345)
        for _ in range(300):
            n = rng.randint(1, 4)
            rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            assert det_exact(IntMatrix.from_rows(rows)) == det_leibniz(rows)


class TestInverseRational:
    def test_identity(self):
        inv = inverse_rational(IntMatrix.identity(3))
        assert inv.is_identity()

    def test_triangular_d2(self):
        a = IntMatrix.from_rows([[2, 1, 0], [0, 1, 1], [0, 0, 1]])
        inv = inverse_rational(a)
        from fractions import Fraction as F

        expected = [[1, -1, 1], [0, 2, -2], [0, 0, 2]]
        for i in range(3):
            for j in range(3):
                assert inv[i, j] == F(expected[i][j], 2)

    def test_steiner_inverse_by_multiplication(self):
        inv = inverse_rational(A_STEINER)
        assert inv.matmul_int(A_STEINER).is_identity()
        from fractions import Fraction as F

        expected = [[1, 1, -1], [1, -1, 1], [-1, 1, 1]]
        for i in range(3):
            for j in range(3):
                assert inv[i, j] == F(expected[i][j], 2)

    def test_singular_rejected(self):
        with pytest.raises(ValueError, match="singular"):
            inverse_rational(IntMatrix.from_rows([[1, 2], [2, 4]]))

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            inverse_rational(IntMatrix.from_rows([[1, 2, 3]]))

    def test_adjugate_integrality(self):
        rng = random.Random(777)
        count = 0
        while count < 100:
            n = rng.randint(1, 4)
            m = IntMatrix.from_rows([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
            d = det_exact(m)
            if d == 0:
                continue
            count += 1
            inv = inverse_rational(m)
            assert inv.matmul_int(m).is_identity()
            for i in range(n):
                for j in range(n):
                    assert (inv[i, j] * d).denominator == 1


class TestDetDiagPerturbation:
    def test_rank_one_plus_identity(self):
        g = IntMatrix.from_rows([[1, 1], [1, 1]])
        assert det_diag_perturbation(g, IntMatrix.identity(2)) == 3

    def test_pure_diagonal(self):
        g = IntMatrix.zero(2, 2)
        assert det_diag_perturbation(g, IntMatrix.diagonal([2, 3])) == 6

    def test_zero_diagonal_reduces_to_det(self):
        g = IntMatrix.from_rows([[1, 2], [3, 4]])
        assert det_diag_perturbation(g, IntMatrix.diagonal([0, 0])) == -2

    def test_non_diagonal_rejected(self):
        with pytest.raises(ValueError, match="diagonal"):
            det_diag_perturbation(IntMatrix.identity(2), IntMatrix.from_rows([[1, 1], [0, 1]]))

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            det_diag_perturbation(IntMatrix.identity(3), IntMatrix.identity(2))

    def test_agrees_with_det_exact_on_zero_diag(self):
        rng = random.Random(5)
        for _ in range(50):
            n = rng.randint(1, 5)
            g = IntMatrix.from_rows([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])
            assert det_diag_perturbation(g, IntMatrix.zero(n, n)) == det_exact(g)

    def test_agrees_with_det_of_sum(self):
        rng = random.Random(99)
        for _ in range(200):
            n = rng.randint(1, 5)
            g = IntMatrix.from_rows([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])
            diag = [rng.randint(-5, 5) for _ in range(n)]
            d = IntMatrix.diagonal(diag)
            s = IntMatrix.from_rows(
                [[g[i, j] + (diag[i] if i == j else 0) for j in range(n)] for i in range(n)]
            )
            assert det_diag_perturbation(g, d) == det_exact(s)

    def test_rank_at_most_one_trace_formula(self):
        rng = random.Random(31)
        for _ in range(60):
            n = rng.randint(1, 5)
            u = [rng.randint(-3, 3) for _ in range(n)]
            v = [rng.randint(-3, 3) for _ in range(n)]
            g = IntMatrix.from_rows([[u[i] * v[j] for j in range(n)] for i in range(n)])
            trace = sum(u[i] * v[i] for i in range(n))
            assert det_diag_perturbation(g, IntMatrix.identity(n)) == trace + 1
