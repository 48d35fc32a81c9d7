"""Cohomology-dimension tables under the natural-cohomology hypothesis.

A sheaf has natural cohomology when at most one h^i(F(t)) is nonzero for
each twist t.  Then the whole table is forced by the chi cubic: the index
starts at 3 for t far negative (the leading coefficient rank/6 is positive,
so chi goes to minus infinity), drops by one each time t passes a
sign-change root of the cubic, and the populated entry is |chi(t)|.  The
walk can only reach index 0 if the cubic has three sign-change roots, so
cubics with fewer are rejected.

Everything is exact: root positions are never approximated, only compared
against the requested integer twists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .chern import ChernData, chern_from_character, chi_polynomial, dual, euler_characteristic
from .chowring import ONE, exp_line
from .cubics import CubicSignAnalysis
from .errors import DomainError, MissingRows, NotNaturalizable

Row = tuple[int, int, int, int]


@dataclass(frozen=True)
class MonadType:
    """Shape of a three-term monad O(-1)^a -> O^b -> O(1)^c."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c) < 0:
            raise ValueError(f"monad multiplicities cannot be negative: {(self.a, self.b, self.c)}")
        if self.b - self.a - self.c < 1:
            raise ValueError(f"monad cohomology must have positive rank, got {self.b - self.a - self.c}")


def monad_chern(mt: MonadType) -> ChernData:
    """Chern data of the monad cohomology: ch = b - a*exp(-H) - c*exp(H)."""
    character = mt.b * ONE - mt.a * exp_line(-1) - mt.c * exp_line(1)
    return chern_from_character(character, mt.b - mt.a - mt.c)


@dataclass(frozen=True, eq=True)
class CohomTable:
    """Rows (h^0, h^1, h^2, h^3) indexed by the twist."""

    chern: ChernData
    rows: Mapping[int, Row]

    def row(self, t: int) -> Row:
        if t not in self.rows:
            raise MissingRows(f"table for {self.chern} has no row at twist {t}")
        return self.rows[t]

    def to_json_dict(self) -> dict:
        return {
            "chern": [self.chern.rank, self.chern.c1, self.chern.c2, self.chern.c3],
            "rows": [{"t": t, "h": list(self.rows[t])} for t in sorted(self.rows)],
        }

    def to_text(self) -> str:
        ts = sorted(self.rows)
        header = ["t", "h0", "h1", "h2", "h3"]
        body = [[str(t), *[str(v) for v in self.rows[t]]] for t in ts]
        widths = [max(len(r[i]) for r in [header, *body]) for i in range(5)]
        lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in [header, *body]]
        return "\n".join(lines)


def natural_table(d: ChernData, t_min: int, t_max: int) -> CohomTable:
    """The unique candidate table over [t_min, t_max] under natural cohomology.

    Raises NotNaturalizable when the chi cubic has fewer than three
    sign-change roots: the index walk then cannot descend from the h^3
    region to the h^0 region, so no sheaf-style table exists at all.
    """
    if t_min > t_max:
        raise DomainError(f"empty twist range: {t_min} > {t_max}")
    p = chi_polynomial(d)
    analysis = CubicSignAnalysis(p.coeffs)
    if analysis.sign_changes < 3:
        raise NotNaturalizable(
            f"chi cubic of {d} has {analysis.sign_changes} sign change(s); "
            "the index walk from h^3 to h^0 needs 3"
        )
    rows: dict[int, Row] = {}
    for t in range(t_min, t_max + 1):
        chi = euler_characteristic(d, t)
        if chi == 0:
            rows[t] = (0, 0, 0, 0)
            continue
        index = 3 - analysis.odd_roots_below(t)
        value = chi if index % 2 == 0 else -chi
        if value < 0:
            # Unreachable when the root count is exact; kept as a guard
            # against a miscounting bug ever reintroducing sign errors.
            raise NotNaturalizable(f"negative dimension {value} at twist {t}", twist=t)
        row = [0, 0, 0, 0]
        row[index] = value
        rows[t] = tuple(row)
    return CohomTable(chern=d, rows=rows)


def instanton_check(tbl: CohomTable) -> bool:
    """The four vanishings characterizing an instanton among natural tables:

    h^0(F(-1)) = h^1(F(-2)) = h^2(F(-2)) = h^3(F(-3)) = 0.
    """
    return (
        tbl.row(-1)[0] == 0
        and tbl.row(-2)[1] == 0
        and tbl.row(-2)[2] == 0
        and tbl.row(-3)[3] == 0
    )


def serre_symmetry_check(d: ChernData, t_min: int, t_max: int) -> bool:
    """Whether h^i(F(t)) = h^(3-i)(F-dual(-t-4)) holds across the whole range."""
    left = natural_table(d, t_min, t_max)
    right = natural_table(dual(d), -t_max - 4, -t_min - 4)
    for t in range(t_min, t_max + 1):
        mirrored = right.rows[-t - 4]
        if any(left.rows[t][i] != mirrored[3 - i] for i in range(4)):
            return False
    return True
