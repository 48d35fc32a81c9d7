"""The two conventions for the cubic binomial coefficient C(a, 3).

Cohomology counts force the truncated convention (``binom3``: zero below
a = 3), while polynomial identities in chi need the signed cubic itself
(``binom3_poly``).  Both are exposed; callers must pick deliberately, as
the two disagree exactly when a <= -1.
"""

from __future__ import annotations


def binom3(a: int) -> int:
    """Ways to choose 3 out of a: zero whenever a < 3."""
    if a < 3:
        return 0
    return a * (a - 1) * (a - 2) // 6


def binom3_poly(a: int) -> int:
    """The cubic a(a-1)(a-2)/6 itself, signed for negative arguments."""
    # A product of three consecutive integers is divisible by 6, so this
    # floor division is exact.
    return a * (a - 1) * (a - 2) // 6
