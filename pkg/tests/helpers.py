"""Shared test utilities, independent of the package internals.

The rank oracle here is deliberately the textbook Fraction-based Gaussian
elimination so it shares no code path with the Bareiss routine under test.
"""

from fractions import Fraction

from stabgeom import PointConfiguration


def gauss_rank(matrix) -> int:
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    width = len(rows[0])
    rk = 0
    for col in range(width):
        piv = next((i for i in range(rk, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        pivot = rows[rk][col]
        rows[rk] = [x / pivot for x in rows[rk]]
        for i in range(len(rows)):
            if i != rk and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
    return rk


def config_of(*rows) -> PointConfiguration:
    return PointConfiguration.from_rows(list(rows))


def triple_point_config() -> PointConfiguration:
    """Three coincident points plus a generic triangle in the plane."""
    return config_of(
        (1, 0, 0), (1, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)
    )


def standard_six_config() -> PointConfiguration:
    """The reference frame plus (1,2,3) and (1,4,9); not on any conic."""
    return config_of(
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (1, 4, 9)
    )
