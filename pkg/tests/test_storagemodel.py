import pytest
from hypothesis import given, strategies as st

from idrep.errors import InvalidWidth
from idrep.numrep import DEFAULT_CATALOG, Signedness
from idrep.storagemodel import (
    AccountingMode,
    ColumnSpec,
    char_stored,
    column_bytes,
    compare_representations,
    space_efficiency,
    varchar_prefix_bytes,
    varchar_stored,
)

ACTUAL, DECLARED = AccountingMode.ACTUAL_DATA, AccountingMode.DECLARED_MAX


@pytest.mark.parametrize(
    "data,stored",
    [("", "    "), ("ab", "ab  "), ("abcd", "abcd"), ("abcdefgh", "abcd")],
)
def test_char4_table(data, stored):
    assert char_stored(4, data) == (stored, 4)


@pytest.mark.parametrize("data,nbytes", [("", 1), ("ab", 3), ("abcd", 5), ("abcdefgh", 5)])
def test_varchar4_table(data, nbytes):
    assert varchar_stored(4, data, ACTUAL) == nbytes


def test_varchar_declared_mode():
    assert varchar_stored(10, "99999999", DECLARED) == 11
    assert varchar_stored(4, "", DECLARED) == 5


@pytest.mark.parametrize("n,prefix", [(0, 1), (254, 1), (255, 2), (256, 2), (65535, 2)])
def test_prefix_boundary(n, prefix):
    assert varchar_prefix_bytes(n) == prefix
    assert varchar_stored(n, "", ACTUAL) == prefix


def test_length_bounds():
    with pytest.raises(ValueError):
        char_stored(256, "x")
    with pytest.raises(ValueError):
        varchar_stored(65536, "x")
    with pytest.raises(ValueError):
        ColumnSpec.fixed_char(-1)


def test_column_bytes_sid_representations():
    assert column_bytes(ColumnSpec.fixed_char(8), "99999999", ACTUAL) == 8
    assert column_bytes(ColumnSpec.var_char(8), "99999999", ACTUAL) == 9
    assert column_bytes(ColumnSpec.integer(DEFAULT_CATALOG["INT"])) == 4
    assert column_bytes(ColumnSpec.integer(DEFAULT_CATALOG["BIGINT"]), None, DECLARED) == 8


@pytest.mark.parametrize("base,cand,pct", [(8, 4, 50.00), (9, 4, 55.56), (11, 4, 63.64), (7, 7, 0.0)])
def test_space_efficiency(base, cand, pct):
    assert space_efficiency(base, cand) == pct


def test_space_efficiency_rejects_zero_baseline():
    with pytest.raises(ValueError):
        space_efficiency(0, 4)


def test_rounding_is_half_up():
    # 1/8 = 12.5% exactly; 1/16 = 6.25% exactly
    assert space_efficiency(16, 15) == 6.25
    assert space_efficiency(800, 799) == 0.13  # 0.125 -> 0.13


@given(st.integers(1, 1000), st.integers(0, 999))
def test_efficiency_strictly_decreasing(base, c):
    assert space_efficiency(base, c) >= space_efficiency(base, c + 1)
    # exact values differ by 100/base; rounding to 0.01 keeps order strict when that step >= 0.01
    if base <= 10000:
        assert space_efficiency(base, c) > space_efficiency(base, c + 1)


@given(st.integers(0, 255), st.text(max_size=300))
def test_char_bytes_independent_of_data(n, data):
    stored, b = char_stored(n, data)
    assert b == n and len(stored) == n


@given(st.integers(0, 2000), st.text(max_size=3000))
def test_varchar_bytes_bounds(n, data):
    prefix = varchar_prefix_bytes(n)
    assert prefix <= varchar_stored(n, data, ACTUAL) <= n + prefix
    assert varchar_stored(n, data, DECLARED) == n + prefix


def test_compare_representations_eight_digits():
    rep = compare_representations(8)
    assert [(r.label, r.bytes) for r in rep.rows] == [
        ("CHAR(8)", 8),
        ("VARCHAR(8)", 9),
        ("INT", 4),
        ("BIGINT", 8),
    ]
    assert rep.baseline == "VARCHAR(8)"
    assert rep["VARCHAR(8)"].efficiency == 0
    assert rep["INT"].efficiency == 55.56
    assert all(r.efficiency < 100 for r in rep.rows)


def test_compare_representations_one_digit():
    rep = compare_representations(1)
    got = {r.label: r.bytes for r in rep.rows}
    assert got["CHAR(1)"] == 1 and got["VARCHAR(1)"] == 2 and got["TINYINT"] == 1
    # 9 fits every type; brute force over the catalog
    assert list(got)[2:] == [e.name for e in DEFAULT_CATALOG]


def test_compare_representations_width19():
    signed = compare_representations(19, sg=Signedness.SIGNED)
    assert [r.label for r in signed.rows] == ["CHAR(19)", "VARCHAR(19)"]
    unsigned = compare_representations(19, sg=Signedness.UNSIGNED)
    assert unsigned["BIGINT"].bytes == 8


def test_compare_representations_declared_mode():
    rep = compare_representations(8, mode=DECLARED)
    assert rep["VARCHAR(8)"].bytes == 9


def test_compare_invalid_width():
    with pytest.raises(InvalidWidth):
        compare_representations(0)
    with pytest.raises(InvalidWidth):
        compare_representations(20)


def test_mode_parse():
    assert AccountingMode.parse("declared") is DECLARED
    assert AccountingMode.parse("actual_data") is ACTUAL
