"""Spectra of rank-3 sheaves on P^3.

A spectrum is a nondecreasing integer tuple (k_1, ..., k_n).  In the twist
ranges where the theory applies, h^1 and h^2 of twists of the sheaf reduce
to sums of line-bundle cohomology on P^1 taken over the spectrum entries.
Only that arithmetic is mechanized here; deeper admissibility constraints
on which tuples occur for actual sheaves are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import DomainError, OutOfValidityRange

#: The shift applied to each spectrum entry inside both cohomology formulas:
#: the P^1 line-bundle degree read off at twist l is k_i + l + TWIST_SHIFT.
TWIST_SHIFT = 1


@dataclass(frozen=True)
class Spectrum:
    """A nondecreasing tuple of integers."""

    ks: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ks", tuple(int(k) for k in self.ks))
        if any(a > b for a, b in zip(self.ks, self.ks[1:])):
            raise ValueError(f"spectrum entries must be nondecreasing, got {self.ks}")

    def __len__(self) -> int:
        return len(self.ks)

    def __iter__(self):
        return iter(self.ks)


@dataclass(frozen=True)
class SpectrumContext:
    """Validity data for the cohomology formulas.

    ``s`` is the correction term in the h^1 formula (zero for locally free
    sheaves), and ``a_low <= a_high`` bound the splitting type on a generic
    line: h^1 is covered for l <= -a_high - 1 and h^2 for l >= a_low - 3.
    """

    s: int = 0
    a_low: int = 0
    a_high: int = 0

    def __post_init__(self) -> None:
        if self.s < 0:
            raise ValueError(f"the h^1 correction term cannot be negative, got {self.s}")
        if self.a_low > self.a_high:
            raise ValueError(f"need a_low <= a_high, got {self.a_low} > {self.a_high}")

    @classmethod
    def for_bundle(cls, a_low: int = 0, a_high: int = 0) -> "SpectrumContext":
        """Context of a locally free sheaf: the correction term is zero."""
        return cls(0, a_low, a_high)


#: Locally free with generic splitting type (0, ..., 0).
BALANCED_BUNDLE = SpectrumContext()


def h0_p1(a: int) -> int:
    """h^0 of the degree-a line bundle on P^1."""
    return max(0, a + 1)


def h1_p1(a: int) -> int:
    """h^1 of the degree-a line bundle on P^1."""
    return max(0, -a - 1)


def h1_from_spectrum(sp: Spectrum, l: int, ctx: SpectrumContext = BALANCED_BUNDLE) -> int:
    """h^1(F(l)) predicted by the spectrum, valid for l <= -a_high - 1."""
    if l > -ctx.a_high - 1:
        raise OutOfValidityRange(f"h^1 formula covers l <= {-ctx.a_high - 1}, got l = {l}")
    return ctx.s + sum(h0_p1(k + l + TWIST_SHIFT) for k in sp.ks)


def h2_from_spectrum(sp: Spectrum, l: int, ctx: SpectrumContext = BALANCED_BUNDLE) -> int:
    """h^2(F(l)) predicted by the spectrum, valid for l >= a_low - 3."""
    if l < ctx.a_low - 3:
        raise OutOfValidityRange(f"h^2 formula covers l >= {ctx.a_low - 3}, got l = {l}")
    return sum(h1_p1(k + l + TWIST_SHIFT) for k in sp.ks)


def is_instanton_spectrum(sp: Spectrum) -> bool:
    """True exactly for the all-zero spectrum: no cohomology in the test window."""
    return all(k == 0 for k in sp.ks)


def enumerate_spectra(n: int, bound: int) -> list[Spectrum]:
    """All nondecreasing integer n-tuples with zero sum and entries in [-bound, bound].

    Returned in lexicographic order.  Only the stated arithmetic constraints
    are imposed.
    """
    if n < 1:
        raise DomainError(f"spectrum length must be positive, got {n}")
    if bound < 1:
        raise DomainError(f"entry bound must be positive, got {bound}")
    return [
        Spectrum(ks)
        for ks in combinations_with_replacement(range(-bound, bound + 1), n)
        if sum(ks) == 0
    ]
