"""
fixtures.py: published closed forms and tables the engine is checked against.

The rational functions are the avoidance series of 122 and 212 as displayed rational functions
in x and y. The charts count each column subset u_I over all symbolic m-clusters of a length-4
pattern, one row per cluster length, columns in CHART_COLUMNS order.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional

from src.algebra import Series, TruncationSpec
from src.algebra.polys import X_XY as x
from src.algebra.polys import Y_XY as y
from src.genfun import avoidance_gf
from src.utils import pylogger
from src.words import Word

log = pylogger.get_pylogger(__name__)


@dataclass(frozen=True)
class RationalFixture:
    pattern: Word
    numerator: object
    denominator: object

    def __post_init__(self):
        if dict(self.denominator.terms()).get((0, 0), 0) != 1:
            raise ValueError(f"denominator of the {self.pattern} fixture must have constant term 1")


A_122 = RationalFixture(
    Word.parse("122"),
    numerator=1 - 2 * y + (1 + x) * y**2 - x * y**3 + x**2 * y**4,
    denominator=1 - (2 + x) * y + (1 + 2 * x) * y**2 - (x + x**2) * y**3 + x**2 * y**4,
)

A_212 = RationalFixture(
    Word.parse("212"),
    numerator=1 - 2 * y + (1 + x) * y**2 - (x - x**2) * y**3 + x**3 * y**5,
    denominator=(1 - y + x**2 * y**3) * (1 - (1 + x) * y + x * y**2 - x**2 * y**3),
)

RATIONAL_FIXTURES = {"122": A_122, "212": A_212}

# [x^4 y^7] A_u(x, y, 0)
AVOIDANCE_COEFFICIENTS = {"122": 13, "212": 12}


def verify_rational(fixture: RationalFixture, trunc: TruncationSpec, series: Optional[Series] = None) -> bool:
    """True iff denominator * series agrees with the numerator up to y^(W - deg_y(denominator))."""
    if series is None:
        series = avoidance_gf(fixture.pattern, trunc)
    bound = trunc.max_weight - fixture.denominator.degree(y)
    product = fixture.denominator * series.to_bivariate()

    def low(poly) -> Dict:
        return {monom: int(coeff) for monom, coeff in poly.terms() if monom[1] <= bound}

    agrees = low(product) == low(fixture.numerator)
    log.debug(f"Cross-multiplied rational fixture <pattern={fixture.pattern}, bound={bound}, agrees={agrees}>")
    return agrees


CHART_COLUMNS: List[str] = [
    "1", "2", "3", "4",
    "1,2", "1,3", "1,4", "2,3", "2,4", "3,4",
    "1,2,3", "1,2,4", "1,3,4", "2,3,4",
    "1,2,3,4",
]  # fmt: skip


def _row(*counts: int) -> List[int]:
    return list(counts) + [0] * (len(CHART_COLUMNS) - len(counts))


# k = 4; m -> {cluster length: counts}
PUBLISHED_CHARTS: Dict[int, Dict[int, List[int]]] = {
    2: {
        5: _row(1, 0, 0, 1, 1, 0, 0, 1, 0, 1),
        6: _row(1, 1, 1, 1, 0, 1, 0, 0, 1, 0),
        7: _row(1, 2, 2, 1, 0, 0, 1),
    },
    3: {
        6: _row(1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0),
        7: _row(2, 1, 1, 2, 1, 1, 0, 2, 1, 1, 0, 1, 1, 0, 0),
        8: _row(3, 3, 3, 3, 2, 2, 2, 2, 2, 2),
        9: _row(2, 4, 4, 2, 0, 2, 2, 0, 2, 0),
        10: _row(1, 3, 3, 1, 0, 0, 2),
    },
    4: {
        7: _row(1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1),
        8: _row(3, 1, 1, 3, 2, 1, 0, 2, 1, 2, 2, 2, 2, 2),
        9: _row(6, 4, 4, 6, 5, 4, 3, 5, 4, 5, 2, 2, 2, 2),
        10: _row(7, 9, 9, 7, 4, 7, 6, 6, 7, 4, 0, 2, 2, 0),
        11: _row(6, 12, 12, 6, 3, 6, 9, 3, 6, 3),
        12: _row(3, 9, 9, 3, 0, 3, 6, 0, 3, 0),
        13: _row(1, 4, 4, 1, 0, 0, 3),
    },
}

# pre-cluster counts of a length-4 pattern per number of rows
PRECLUSTER_COUNTS = {2: 3, 3: 9, 4: 27}
