from fractions import Fraction
from random import Random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rational_matrices
from springer2col.linalg import (
    ExactMatrix,
    _rank_gauss,
    concat_columns,
    nullspace_dim,
    rank,
    rank_of_vectors,
    solve_dim,
)
from springer2col.oracle import nilpotent_map
from springer2col.tableaux import make_shape


def test_identity_rank():
    assert rank(ExactMatrix.identity(3)) == 3


def test_zero_rank():
    assert rank(ExactMatrix.zeros(4, 2)) == 0


def test_rank_of_u_for_example_shape():
    # u has s = 2 independent nonzero columns
    assert rank(nilpotent_map(make_shape(4, 2)).matrix) == 2


def test_empty_matrices():
    assert rank(ExactMatrix.zeros(0, 3)) == 0
    assert rank(ExactMatrix.zeros(3, 0)) == 0
    assert nullspace_dim(ExactMatrix.zeros(0, 3)) == 3


def test_rejects_floats():
    with pytest.raises(TypeError):
        ExactMatrix.from_rows([[0.5]])


def test_entry_count_enforced():
    with pytest.raises(ValueError):
        ExactMatrix(2, 2, (Fraction(1),))


def test_concat_dimension_mismatch():
    with pytest.raises(ValueError):
        concat_columns(ExactMatrix.zeros(2, 1), ExactMatrix.zeros(3, 1))


def test_matmul_mismatch():
    with pytest.raises(ValueError):
        ExactMatrix.zeros(2, 3) @ ExactMatrix.zeros(2, 3)


def test_solve_dim_mismatch():
    with pytest.raises(ValueError):
        solve_dim([[1, 2]], 3)


def test_solve_dim_no_equations():
    assert solve_dim([], 4) == 4


def test_rational_rank_with_fractions():
    m = ExactMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
    assert rank(m) == 1


def test_concat_and_product():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    b = ExactMatrix.from_rows([[5], [6]])
    assert concat_columns(a, b).to_rows() == [[1, 2, 5], [3, 4, 6]]
    assert (a @ b).to_rows() == [[17], [39]]
    assert a.T.to_rows() == [[1, 3], [2, 4]]


@given(rational_matrices())
def test_rank_nullity(data):
    m = ExactMatrix.from_rows(data)
    assert rank(m) + nullspace_dim(m) == m.cols


@given(rational_matrices(integral=True))
def test_bareiss_matches_sympy(data):
    m = ExactMatrix.from_rows(data)
    assert rank(m) == sympy.Matrix(data).rank()
    assert rank(m) == _rank_gauss(m.to_rows())


@given(rational_matrices())
def test_rank_matches_sympy_rational(data):
    assert rank(ExactMatrix.from_rows(data)) == sympy.Matrix(data).rank()


@given(rational_matrices())
def test_rank_transpose_invariant(data):
    m = ExactMatrix.from_rows(data)
    assert rank(m) == rank(m.T) == rank_of_vectors(m.columns())


def _random_invertible(n, rng):
    while True:
        g = ExactMatrix.from_rows([[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)])
        if sympy.Matrix(g.to_rows()).det() != 0:
            return g


@settings(max_examples=60)
@given(rational_matrices(), st.integers(0, 10 ** 6))
def test_rank_invariant_under_invertible_multiplication(data, seed):
    rng = Random(seed)
    m = ExactMatrix.from_rows(data)
    left = _random_invertible(m.rows, rng)
    right = _random_invertible(m.cols, rng)
    assert rank(left @ m @ right) == rank(m)


@given(rational_matrices(), st.randoms(use_true_random=False))
def test_rank_invariant_under_permutations(data, rnd):
    rows = [list(r) for r in data]
    rnd.shuffle(rows)
    perm = list(range(len(rows[0])))
    rnd.shuffle(perm)
    shuffled = [[r[k] for k in perm] for r in rows]
    assert rank(ExactMatrix.from_rows(shuffled)) == rank(ExactMatrix.from_rows(data))


def test_exhaustive_small_01_matrices():
    # every 3x3 matrix with entries in {0,1}
    for bits in range(2 ** 9):
        data = [[(bits >> (3 * i + j)) & 1 for j in range(3)] for i in range(3)]
        assert rank(ExactMatrix.from_rows(data)) == sympy.Matrix(data).rank()
