import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from fixity.cyclo import (
    CycloMatrix,
    CyclotomicNumber,
    OrderExceedsCap,
    cyclotomic_polynomial,
    embed,
    kernel_rank,
    matrix_order,
    restrict,
    totient,
    zeta,
)

CONDUCTORS = [1, 3, 4, 5, 7, 8, 9, 12, 15]


def numeric(x: CyclotomicNumber) -> complex:
    """Independent complex evaluation from power-basis coordinates."""
    w = cmath.exp(2j * cmath.pi / x.m)
    return sum(complex(c) * w ** e for e, c in enumerate(x.coords))


small_q = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def cyclo(draw, m=None):
    if m is None:
        m = draw(st.sampled_from(CONDUCTORS))
    return CyclotomicNumber.from_coords(draw(st.lists(small_q, min_size=totient(m), max_size=totient(m))), m)


@st.composite
def cyclo_pair(draw):
    m = draw(st.sampled_from(CONDUCTORS))
    return draw(cyclo(m)), draw(cyclo(m))


@pytest.mark.parametrize("m", range(1, 41))
def test_cyclotomic_polynomial_matches_sympy(m):
    x = sympy.symbols("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(m)) == [int(c) for c in expected]


def test_known_values():
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert zeta(4) ** 2 == -1
    assert 1 + zeta(3) + zeta(3) ** 2 == 0
    assert (1 + zeta(3)).conjugate() == -zeta(3)


@pytest.mark.parametrize("m", [2, 3, 5, 6, 9, 12, 25])
def test_roots_of_unity_sum_to_zero(m):
    total = CyclotomicNumber(m)
    for k in range(m):
        total = total + zeta(m, k)
    assert total == 0
    assert zeta(m) ** m == 1
    assert zeta(m, m // 2 if m % 2 == 0 else 1) != 1


@given(cyclo_pair())
def test_multiplication_matches_complex_evaluation(pair):
    a, b = pair
    assert cmath.isclose(numeric(a * b), numeric(a) * numeric(b), abs_tol=1e-8)
    assert cmath.isclose(numeric(a + b), numeric(a) + numeric(b), abs_tol=1e-8)


@given(cyclo_pair(), st.data())
def test_ring_axioms(pair, data):
    a, b = pair
    c = data.draw(cyclo(a.m))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(cyclo())
def test_inverse(x):
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == 1


@given(cyclo_pair())
def test_conjugation_is_multiplicative(pair):
    a, b = pair
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert cmath.isclose(numeric(a.conjugate()), numeric(a).conjugate(), abs_tol=1e-8)


@given(cyclo_pair(), st.sampled_from([2, 3, 5]))
def test_embedding_is_a_ring_map(pair, k):
    a, b = pair
    m2 = a.m * k
    assert embed(a * b, m2) == embed(a, m2) * embed(b, m2)
    assert embed(a, m2) == a
    assert cmath.isclose(numeric(embed(a, m2)), numeric(a), abs_tol=1e-8)


def test_restrict():
    assert restrict(embed(zeta(3), 12), 3) == zeta(3)
    assert restrict(zeta(12), 3) is None


def test_rationals_hash_consistently_across_conductors():
    assert hash(CyclotomicNumber.rational(Fraction(1, 2), 5)) == hash(CyclotomicNumber.rational(Fraction(1, 2), 7))
    assert CyclotomicNumber.rational(3, 4) == CyclotomicNumber.rational(3, 9)


# matrices

def regular_block(mat: CycloMatrix) -> sympy.Matrix:
    """Rational matrix of the Q-linear map given by mat on Q(zeta_m)^n."""
    m, phi = mat.m, totient(mat.m)
    rows = []
    for i in range(mat.rows):
        block_row = [[] for _ in range(phi)]
        for j in range(mat.cols):
            x = mat[i, j]
            cols = [(x * zeta(m, k)).coords for k in range(phi)]
            for r in range(phi):
                block_row[r].extend(sympy.Rational(cols[k][r]) for k in range(phi))
        rows.extend(block_row)
    return sympy.Matrix(rows)


@st.composite
def low_rank_matrix(draw):
    m = draw(st.sampled_from([3, 4, 5, 8]))
    n = draw(st.integers(1, 4))
    r = draw(st.integers(0, n))
    entry = cyclo(m)
    left = CycloMatrix.from_rows([[draw(entry) for _ in range(r)] or [CyclotomicNumber(m)] for _ in range(n)], m)
    right = CycloMatrix.from_rows([[draw(entry) for _ in range(n)] for _ in range(max(r, 1))], m)
    if r == 0:
        return CycloMatrix.from_rows([[CyclotomicNumber(m)] * n for _ in range(n)], m)
    return left @ right


@given(low_rank_matrix())
def test_kernel_rank_matches_rational_rank_of_regular_block(mat):
    phi = totient(mat.m)
    rank_q = regular_block(mat).rank()
    assert rank_q % phi == 0
    assert kernel_rank(mat) == mat.cols - rank_q // phi


def test_shift_kernel_and_orders():
    one, zero = CyclotomicNumber.rational(1), CyclotomicNumber(1)
    shift = CycloMatrix.monomial([1, 2, 0], [one] * 3)
    assert kernel_rank(shift - CycloMatrix.identity(3)) == 1
    assert matrix_order(shift) == 3
    assert matrix_order(CycloMatrix.diagonal([zeta(8), zeta(4)])) == 8
    with pytest.raises(OrderExceedsCap):
        matrix_order(CycloMatrix.diagonal([CyclotomicNumber.rational(2)]), cap=50)
    assert zero.is_zero()


@given(low_rank_matrix())
def test_inverse_of_invertible(mat):
    if kernel_rank(mat) == 0:
        assert (mat @ mat.inverse()).is_identity()
