"""Hand-built groups shared by several test modules."""

from fractions import Fraction

from fixity.cyclo import CycloMatrix, CyclotomicNumber, zeta
from fixity.groups import enumerate_group
from fixity.reps import natural


def a5_in_so3():
    """Icosahedral rotations over Q(zeta_5), with golden ratio 1 + zeta + zeta^4."""
    one = CyclotomicNumber.rational(1, 5)
    z = zeta(5)
    phi = one + z + z ** 4
    h = Fraction(1, 2)
    rot5 = CycloMatrix.from_rows([[h * one, -h * phi, h * (phi - 1)],
                                  [h * phi, h * (phi - 1), -h * one],
                                  [h * (phi - 1), h * one, h * phi]], 5)
    rot3 = CycloMatrix.monomial([1, 2, 0], [one] * 3)
    rot2 = CycloMatrix.diagonal([-one, -one, one])
    return natural(enumerate_group([rot5, rot3, rot2]), "A5")


def elementary_abelian_3x3():
    return enumerate_group([CycloMatrix.diagonal([zeta(3), zeta(3, 0)]),
                            CycloMatrix.diagonal([zeta(3, 0), zeta(3)])])
