"""
transforms.py: series-level forms of the word transforms u -> 1u, u -> u+ and back.
"""
from src.algebra import Series
from src.utils.exceptions import PreconditionError


def prepend_transform(mu: Series) -> Series:
    """M_{1u} = xy M_u / (1 - M_u)."""
    if any(b == 0 for (_, b, _) in mu.terms):
        raise PreconditionError("prepend_transform needs a series without weight-0 terms")
    return Series.monomial(mu.trunc, a=1, b=1) * mu * mu.quasi_inverse()


def plus_transform(mu: Series) -> Series:
    """M_{u+}(x, y, z) = M_u(xy, y, z)."""
    return mu.scale_x_by_y_power(1)


def unplus_transform(mu: Series) -> Series:
    """M_u(x, y, z) = M_{u+}(x/y, y, z); terms with b + a beyond the cap were already lost upstream."""
    if any(b < a for (a, b, _) in mu.terms):
        raise PreconditionError("unplus_transform needs every term with y-degree >= x-degree")
    return mu.scale_x_by_y_power(-1)
