from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from xrmatrix.cartan import (bilinear, cartan_matrix, epsilon, parity,
                             simple_root, theta, weight)


def test_isotropic_zeroth_direction():
    assert bilinear(epsilon(0), epsilon(0)) == 0


def test_diagonal_signature():
    assert [bilinear(epsilon(i), epsilon(i)) for i in range(5)] == \
        [0, 1, 1, -1, -1]


def test_root_norms():
    # expand (eps_2 - eps_3, eps_2 - eps_3) = 1 + (-1) by hand
    a2 = simple_root(2)
    assert bilinear(a2, a2) == 0
    assert bilinear(simple_root(1), simple_root(2)) == -1


def test_parities():
    # (4 - norm^2)/4 gives 1, 0, 1, 0
    assert [parity(i) for i in range(4)] == [1, 0, 1, 0]


def test_theta_grading():
    assert [theta(i) for i in range(1, 5)] == [0, 0, 1, 1]


def test_cartan_matrix_rows():
    mat = cartan_matrix()
    assert mat[1] == [-1, 2, -1, 0]
    assert mat[0] == [0, -1, 0, 1]
    assert mat[2] == [0, -1, 0, 1]     # degenerate rows are expected
    assert mat[3][3] == 2              # 2*(-2)/(-2 + 0)


def test_cartan_diagonal_and_integrality():
    mat = cartan_matrix()
    for i in range(4):
        assert mat[i][i] in (0, 2)
        for entry in mat[i]:
            assert isinstance(entry, int)


_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=6)
_weights = st.tuples(*(5 * (_rationals,))).map(weight)


@given(_weights, _weights)
def test_bilinear_symmetry(a, b):
    assert bilinear(a, b) == bilinear(b, a)


@given(_weights, _weights, _rationals)
def test_bilinear_linearity(a, b, c):
    scaled = weight(tuple(Fraction(c) * x for x in a))
    assert bilinear(scaled, b) == Fraction(c) * bilinear(a, b)
