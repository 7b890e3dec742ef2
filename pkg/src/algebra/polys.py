"""
polys.py: exact integer polynomial rings used next to the truncated series.

`YPolynomial` is an element of ZZ[y]: a single (x, z)-coefficient of a cluster series, which is a
genuinely finite polynomial in y. `XY_RING` hosts the bivariate rational-function fixtures.
"""
from typing import Mapping

from sympy import ZZ
from sympy.polys.rings import PolyElement, ring

from src.utils.exceptions import PreconditionError

Y_RING, Y = ring("y", ZZ)
XY_RING, X_XY, Y_XY = ring("x,y", ZZ)

YPolynomial = PolyElement


def ypoly(coefficients: Mapping[int, int]) -> YPolynomial:
    """Builds a y-polynomial from a {degree: coefficient} map."""
    return Y_RING.from_dict({(degree,): coeff for degree, coeff in coefficients.items() if coeff})


def ypoly_coefficients(p: YPolynomial) -> dict:
    """{degree: coefficient} of a y-polynomial, ints only."""
    return {monom[0]: int(coeff) for monom, coeff in p.terms()}


def ypoly_min_degree(p: YPolynomial) -> int:
    if not p:
        raise PreconditionError("the zero polynomial has no lowest term")
    return min(ypoly_coefficients(p))


def deriv_y_at_1(p: YPolynomial) -> int:
    """p'(1), exactly."""
    if not p:
        return 0
    return int(p.diff(Y).evaluate(Y, 1))
