"""Chern-class bookkeeping for sheaves on projective 3-space.

Characters, duals, twists, and the Euler characteristic chi(F(m)).  Two
independent routes compute chi: a termwise transcription of the closed-form
cubic in the twist, and the Chow-ring pairing of the character with the Todd
class.  The duplication is deliberate; the test suite and the verification
checklist insist the two routes coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .binomials import binom3, binom3_poly
from .chowring import ChowClass, degree, exp_line, mul, todd_p3
from .errors import DomainError, NonIntegralChernClass, NonIntegralChi, RankUnsupported

#: Expansion constants of the closed-form chi cubic.  They mirror the Todd
#: coefficients used by the ring route but are kept as an independent
#: transcription so the two routes can cross-check each other.
CHI_CUBIC_T1 = Fraction(2)
CHI_CUBIC_T2 = Fraction(11, 6)
CHI_CUBIC_T3 = Fraction(1)

#: chi(F tensor F-dual) for a rank-3 bundle, as weights of (c1^2, c2, 1).
CHI_END_COEFFS = (4, -12, 9)


@dataclass(frozen=True)
class ChernData:
    """Integer Chern classes (c1, c2, c3) of a sheaf of the given rank."""

    rank: int
    c1: int
    c2: int
    c3: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank}")


@dataclass(frozen=True)
class ChiPolynomial:
    """chi(F(m)) as an exact cubic in the twist m, coefficients ascending."""

    coeffs: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def __call__(self, m: int) -> Fraction:
        c0, c1, c2, c3 = self.coeffs
        return ((c3 * m + c2) * m + c1) * m + c0

    @property
    def leading(self) -> Fraction:
        return self.coeffs[3]


def _as_int(value: Fraction, exc_type: type, what: str) -> int:
    if value.denominator != 1:
        raise exc_type(f"{what} is not an integer: {value}")
    return int(value)


def chern_character(d: ChernData) -> ChowClass:
    """rank + c1*H + (c1^2 - 2c2)/2 * H^2 + (c1^3 - 3c1c2 + 3c3)/6 * H^3."""
    c1, c2, c3 = d.c1, d.c2, d.c3
    return ChowClass(
        d.rank,
        c1,
        Fraction(c1 * c1 - 2 * c2, 2),
        Fraction(c1 ** 3 - 3 * c1 * c2 + 3 * c3, 6),
    )


def chern_from_character(x: ChowClass, rank: int) -> ChernData:
    """Invert chern_character; raises NonIntegralChernClass if no sheaf fits."""
    if rank < 1:
        raise ValueError(f"rank must be a positive integer, got {rank}")
    if x.a0 != rank:
        raise ValueError(f"degree-0 coefficient {x.a0} does not match rank {rank}")
    c1 = _as_int(x.a1, NonIntegralChernClass, "c1")
    c2 = _as_int(Fraction(c1 * c1, 2) - x.a2, NonIntegralChernClass, "c2")
    c3 = _as_int((6 * x.a3 - c1 ** 3 + 3 * c1 * c2) / 3, NonIntegralChernClass, "c3")
    return ChernData(rank, c1, c2, c3)


def dual(d: ChernData) -> ChernData:
    """Chern data of the dual sheaf: odd classes change sign."""
    return ChernData(d.rank, -d.c1, d.c2, -d.c3)


def twist(d: ChernData, k: int) -> ChernData:
    """Chern data of F(k), computed through the character.

    Twisting always lands back on integer classes, so the inversion cannot
    raise for integer input.
    """
    return chern_from_character(mul(chern_character(d), exp_line(k)), d.rank)


def euler_characteristic(d: ChernData, m: int) -> int:
    """chi(F(m)) through the Chow ring: degree of ch(F(m)) paired with Todd."""
    chi = degree(mul(mul(chern_character(d), exp_line(m)), todd_p3()))
    return _as_int(chi, NonIntegralChi, f"chi at twist {m}")


def chi_polynomial(d: ChernData) -> ChiPolynomial:
    """The chi cubic, transcribed termwise from the closed form.

    This route deliberately avoids the Chow ring; it reuses only the
    character components.  The coefficients in the twist m are

        m^3: rank/6
        m^2: ch1/2 + T1*rank/2
        m^1: ch2 + T1*ch1 + T2*rank
        m^0: ch3 + T1*ch2 + T2*ch1 + T3*rank
    """
    r = Fraction(d.rank)
    x1 = Fraction(d.c1)
    x2 = Fraction(d.c1 * d.c1 - 2 * d.c2, 2)
    x3 = Fraction(d.c1 ** 3 - 3 * d.c1 * d.c2 + 3 * d.c3, 6)
    return ChiPolynomial(
        (
            x3 + CHI_CUBIC_T1 * x2 + CHI_CUBIC_T2 * x1 + CHI_CUBIC_T3 * r,
            x2 + CHI_CUBIC_T1 * x1 + CHI_CUBIC_T2 * r,
            x1 / 2 + CHI_CUBIC_T1 * r / 2,
            r / 6,
        )
    )


def chi_curve_form(c1: int, d: int, g: int, m: int, *, signed_binomials: bool = False) -> int:
    """chi(F(m)) for a rank-3 bundle presented through a curve of degree d, genus g:

        2*C(m+3, 3) + C(m+c1+3, 3) - (m+c1)*d - 1 + g

    With the default truncated binomials this matches the cohomological
    derivation and agrees with the Riemann-Roch route whenever m+3 >= 0 and
    m+c1+3 >= 0.  With ``signed_binomials`` the expression is the honest
    cubic and agrees for every m.
    """
    if d < 1:
        raise DomainError(f"curve degree must be positive, got {d}")
    b = binom3_poly if signed_binomials else binom3
    return 2 * b(m + 3) + b(m + c1 + 3) - (m + c1) * d - 1 + g


def chi_endomorphisms(d: ChernData) -> int:
    """chi(F tensor F-dual) for rank 3, through the Chow ring."""
    if d.rank != 3:
        raise RankUnsupported(f"endomorphism chi closed form needs rank 3, got {d.rank}")
    pairing = mul(mul(chern_character(d), chern_character(dual(d))), todd_p3())
    return _as_int(degree(pairing), NonIntegralChi, "chi of the endomorphism bundle")


def chi_endomorphisms_closed_form(d: ChernData) -> int:
    """The same quantity from the closed form 4*c1^2 - 12*c2 + 9."""
    if d.rank != 3:
        raise RankUnsupported(f"endomorphism chi closed form needs rank 3, got {d.rank}")
    a, b, c = CHI_END_COEFFS
    return a * d.c1 ** 2 + b * d.c2 + c


def validate_parity(d: ChernData) -> bool:
    """Whether c3 - c1*c2 is even; required of any rank-3 reflexive sheaf."""
    if d.rank != 3:
        raise RankUnsupported(f"parity constraint is rank-3 specific, got rank {d.rank}")
    return (d.c3 - d.c1 * d.c2) % 2 == 0
