"""Natural-cohomology tables: the index walk, monads, and Serre symmetry."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from instanton3.binomials import binom3
from instanton3.chern import ChernData, euler_characteristic
from instanton3.cohomtable import (
    CohomTable,
    MonadType,
    instanton_check,
    monad_chern,
    natural_table,
    serre_symmetry_check,
)
from instanton3.errors import DomainError, MissingRows, NotNaturalizable

CHARGE2 = ChernData(3, 0, 2, 0)

CHARGE2_ROWS = {
    -5: (0, 0, 0, 6),
    -4: (0, 0, 1, 0),
    -3: (0, 0, 2, 0),
    -2: (0, 0, 0, 0),
    -1: (0, 2, 0, 0),
    0: (0, 1, 0, 0),
    1: (6, 0, 0, 0),
}


def test_charge2_table_is_pinned():
    tbl = natural_table(CHARGE2, -5, 1)
    assert dict(tbl.rows) == CHARGE2_ROWS
    assert tbl.chern == CHARGE2


def test_charge4_table_with_integer_roots():
    # chi factors as (m-1)(m+2)(m+5)/2, so three rows vanish exactly.
    tbl = natural_table(ChernData(3, 0, 4, 0), -6, 2)
    assert dict(tbl.rows) == {
        -6: (0, 0, 0, 14),
        -5: (0, 0, 0, 0),
        -4: (0, 0, 5, 0),
        -3: (0, 0, 4, 0),
        -2: (0, 0, 0, 0),
        -1: (0, 4, 0, 0),
        0: (0, 5, 0, 0),
        1: (0, 0, 0, 0),
        2: (14, 0, 0, 0),
    }


def test_line_bundle_table():
    tbl = natural_table(ChernData(1, 0, 0, 0), -8, 4)
    for t in range(-8, 5):
        row = tbl.rows[t]
        if t >= 0:
            assert row == (binom3(t + 3), 0, 0, 0)
        elif t <= -4:
            assert row == (0, 0, 0, binom3(-t - 1))
        else:
            assert row == (0, 0, 0, 0)


@given(st.integers(min_value=2, max_value=8), st.integers(min_value=-9, max_value=5))
def test_table_entries_carry_abs_chi(n, t):
    d = ChernData(3, 0, n, 0)
    row = natural_table(d, t, t).rows[t]
    chi = euler_characteristic(d, t)
    assert sum(row) == abs(chi)
    assert sum(1 for v in row if v != 0) <= 1
    assert all(v >= 0 for v in row)


@given(st.integers(min_value=2, max_value=8), st.integers(min_value=-9, max_value=5))
def test_populated_index_matches_chi_sign(n, t):
    d = ChernData(3, 0, n, 0)
    row = natural_table(d, t, t).rows[t]
    chi = euler_characteristic(d, t)
    if chi != 0:
        index = next(i for i, v in enumerate(row) if v != 0)
        assert (-1) ** index * chi > 0


def test_index_never_increases_with_the_twist():
    tbl = natural_table(ChernData(3, 0, 5, 0), -10, 5)
    last_index = 3
    for t in range(-10, 6):
        row = tbl.rows[t]
        if sum(row) == 0:
            continue
        index = next(i for i, v in enumerate(row) if v != 0)
        assert index <= last_index
        last_index = index


def test_rejects_cubics_without_three_sign_changes():
    with pytest.raises(NotNaturalizable, match="sign change"):
        natural_table(ChernData(3, 0, -5, 0), -3, 1)


def test_rejects_empty_window():
    with pytest.raises(DomainError):
        natural_table(CHARGE2, 1, 0)


def test_row_access_and_missing_rows():
    tbl = natural_table(CHARGE2, -2, 1)
    assert tbl.row(-2) == (0, 0, 0, 0)
    with pytest.raises(MissingRows):
        tbl.row(-3)


def test_text_rendering_is_stable():
    tbl = natural_table(CHARGE2, -2, 1)
    assert tbl.to_text() == "\n".join(
        [
            " t  h0  h1  h2  h3",
            "-2   0   0   0   0",
            "-1   0   2   0   0",
            " 0   0   1   0   0",
            " 1   6   0   0   0",
        ]
    )


def test_json_rendering():
    payload = natural_table(CHARGE2, 0, 1).to_json_dict()
    assert payload == {
        "chern": [3, 0, 2, 0],
        "rows": [{"t": 0, "h": [0, 1, 0, 0]}, {"t": 1, "h": [6, 0, 0, 0]}],
    }


def test_instanton_check_on_the_charge2_table():
    assert instanton_check(natural_table(CHARGE2, -3, -1))
    assert instanton_check(natural_table(CHARGE2, -5, 1))


def test_instanton_check_rejects_split_profile():
    rows = {-3: (0, 0, 2, 0), -2: (0, 1, 1, 0), -1: (0, 2, 0, 0)}
    assert not instanton_check(CohomTable(chern=CHARGE2, rows=rows))


def test_instanton_check_rejects_section_at_minus_one():
    rows = {-3: (0, 0, 0, 0), -2: (0, 0, 0, 0), -1: (1, 0, 0, 0)}
    assert not instanton_check(CohomTable(chern=CHARGE2, rows=rows))


def test_instanton_check_needs_all_three_twists():
    with pytest.raises(MissingRows):
        instanton_check(natural_table(CHARGE2, -2, -1))


def test_monad_chern_pinned():
    assert monad_chern(MonadType(2, 7, 2)) == CHARGE2


@given(st.integers(min_value=1, max_value=8))
def test_monad_family(n):
    assert monad_chern(MonadType(n, 2 * n + 3, n)) == ChernData(3, 0, n, 0)


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6))
def test_monad_rank_and_degree(a, c):
    mt = MonadType(a, a + c + 2, c)
    d = monad_chern(mt)
    assert d.rank == 2
    assert d.c1 == a - c


def test_monad_validation():
    with pytest.raises(ValueError):
        MonadType(-1, 7, 2)
    with pytest.raises(ValueError):
        MonadType(2, 3, 1)  # rank would be zero


def test_serre_symmetry_for_the_charge2_type():
    assert serre_symmetry_check(CHARGE2, -10, 6)


@given(st.integers(min_value=2, max_value=6))
def test_serre_symmetry_across_the_charge_family(n):
    assert serre_symmetry_check(ChernData(3, 0, n, 0), -8, 4)


def test_serre_symmetry_with_nonzero_c1():
    assert serre_symmetry_check(ChernData(3, 3, 5, 3), -9, 5)
