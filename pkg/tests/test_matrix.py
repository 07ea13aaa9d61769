import random
from fractions import Fraction

import pytest

import oracles
from hypercert.errors import InputError
from hypercert.matrix import adjugate, determinant, matmul, square_minors
from hypercert.scalar import as_scalar, root_of_unity


def rand_matrix(rng, n):
    return [[as_scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 4))) for _ in range(n)] for _ in range(n)]


def test_determinant_matches_oracles():
    rng = random.Random(3)
    for n in range(1, 6):
        for _ in range(10):
            M = rand_matrix(rng, n)
            d = determinant(M)
            assert d == oracles.leibniz_det(M) == oracles.row_expansion_det(M)


def test_determinant_over_cyclotomic_entries():
    z = root_of_unity(3)
    M = [[1, z], [z * z, 1]]
    M = [[as_scalar(x) if not hasattr(x, "order") else x for x in r] for r in M]
    assert determinant(M) == 0


def test_adjugate_examples():
    a, b, c, d = (as_scalar(x) for x in (2, 3, 5, 7))
    assert adjugate([[a, b], [c, d]]) == [[d, -b], [-c, a]]
    one, zero = as_scalar(1), as_scalar(0)
    I3 = [[one if i == j else zero for j in range(3)] for i in range(3)]
    assert adjugate(I3) == I3
    rng = random.Random(5)
    M = rand_matrix(rng, 3)
    det = determinant(M)
    assert matmul(M, adjugate(M)) == [[det if i == j else 0 for j in range(3)] for i in range(3)]


def test_shape_errors():
    with pytest.raises(InputError):
        determinant([[1, 2]])
    with pytest.raises(InputError):
        determinant([])


def test_square_minors_count():
    M = [[as_scalar(i + j) for j in range(3)] for i in range(4)]
    assert sum(1 for _ in square_minors(M)) == 4 * 3 + 6 * 3 + 4 * 1
