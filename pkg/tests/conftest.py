from fractions import Fraction

import pytest

from stressmatroid.arrangements import LineArrangement
from stressmatroid.exact_geom import Line
from stressmatroid.framework import make_framework
from stressmatroid.gadget import build_gadget
from stressmatroid.sign_matroid import matroid_from_framework


def arrangement(coeffs):
    return LineArrangement(
        tuple(Line(Fraction(a), Fraction(b), Fraction(c)) for a, b, c in coeffs))


# Fixed generic arrangements.  The two n=4 entries share three lines and
# differ only in the fourth intercept, placed on opposite sides of a
# crossing of the other three, so their combinatorial types differ.
ARR2_COEFFS = [(1, -1, 0), (1, 1, -1)]
ARR3_COEFFS = [(1, -1, 0), (1, 1, -1), (3, -1, -2)]
ARR4_COEFFS = [(1, -1, 0), (1, 1, -1), (3, -1, -2), (3, 1, -5)]
ARR4_OTHER_COEFFS = [(1, -1, 0), (1, 1, -1), (3, -1, -2), (3, 1, Fraction(-9, 4))]


@pytest.fixture(scope="session")
def arr2():
    return arrangement(ARR2_COEFFS)


@pytest.fixture(scope="session")
def arr3():
    return arrangement(ARR3_COEFFS)


@pytest.fixture(scope="session")
def arr4():
    return arrangement(ARR4_COEFFS)


@pytest.fixture(scope="session")
def arr4_other():
    return arrangement(ARR4_OTHER_COEFFS)


@pytest.fixture(scope="session")
def gadget2(arr2):
    return build_gadget(arr2)


@pytest.fixture(scope="session")
def gadget3(arr3):
    return build_gadget(arr3)


@pytest.fixture(scope="session")
def gadget2_matroid(gadget2):
    return matroid_from_framework(gadget2.framework)


@pytest.fixture(scope="session")
def gadget3_matroid(gadget3):
    return matroid_from_framework(gadget3.framework)


def k4_framework():
    """Triangle with an interior fourth vertex; triangle edges first."""
    return make_framework(
        [("1", (0, 0)), ("2", (1, 0)), ("3", (0, 1)),
         ("4", (Fraction(1, 4), Fraction(1, 4)))],
        [("1", "2"), ("1", "3"), ("2", "3"),
         ("1", "4"), ("2", "4"), ("3", "4")])


@pytest.fixture
def k4():
    return k4_framework()
