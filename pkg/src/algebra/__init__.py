from src.algebra.polys import (
    XY_RING,
    Y,
    Y_RING,
    YPolynomial,
    deriv_y_at_1,
    ypoly,
    ypoly_coefficients,
    ypoly_min_degree,
)
from src.algebra.series import Series, TruncationSpec, all_words_gf
