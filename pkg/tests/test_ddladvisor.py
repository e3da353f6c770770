import pytest
from hypothesis import given, strategies as st

from idrep.ddladvisor import (
    Candidate,
    DdlColumn,
    DdlTable,
    advise,
    detect_numeric_columns,
    load_samples_csv,
    parse_ddl,
    recommend,
    render_ddl,
)
from idrep.errors import DdlSyntaxError, NoFittingType, UnsupportedType
from idrep.numrep import Signedness
from idrep.storagemodel import AccountingMode, space_efficiency

DECLARED, ACTUAL = AccountingMode.DECLARED_MAX, AccountingMode.ACTUAL_DATA

STUDENT = """
CREATE TABLE student (
  SID varchar(10),
  UNIT_CODE varchar(100),
  NAME varchar(255),
  PLACE_BIRTH varchar(100),
  DATE_BIRTH Date,
  SEX char(1),
  PRIM_CLASS varchar(100)
);
"""


def test_parse_example():
    t = parse_ddl("CREATE TABLE student (SID varchar(10), SEX char(1), DATE_BIRTH date)")
    assert t.name == "student"
    assert [(c.name, c.type_name, c.length) for c in t.columns] == [
        ("SID", "varchar", 10),
        ("SEX", "char", 1),
        ("DATE_BIRTH", "date", None),
    ]


def test_parse_multiline_and_case():
    t = parse_ddl(STUDENT)
    assert len(t.columns) == 7
    assert t.column("name").length == 255
    t2 = parse_ddl("create   table T(a INT(11),b bigint, c Integer, d CHAR)")
    assert [c.type_name for c in t2.columns] == ["INT", "BIGINT", "INT", "char"]
    assert t2.column("d").length == 1


def test_parse_errors():
    with pytest.raises(DdlSyntaxError):
        parse_ddl("CREATE TABLE t ()")
    with pytest.raises(UnsupportedType) as exc:
        parse_ddl("CREATE TABLE t (x blob)")
    assert exc.value.token == "blob"
    with pytest.raises(DdlSyntaxError) as exc:
        parse_ddl("CREATE TABLE t (\n  a int,\n  b varchar(x)\n)")
    assert exc.value.line == 3
    with pytest.raises(DdlSyntaxError):
        parse_ddl("CREATE TABLE t (a int, a int)")
    with pytest.raises(DdlSyntaxError):
        parse_ddl("CREATE TABLE t (a char(300))")
    with pytest.raises(DdlSyntaxError):
        parse_ddl("CREATE TABLE t (a int) extra")
    with pytest.raises(DdlSyntaxError):
        parse_ddl("CREATE TABLE t (a int")


def test_round_trip_student():
    t = parse_ddl(STUDENT)
    assert parse_ddl(render_ddl(t)) == t


_ident = st.from_regex(r"[A-Za-z_][A-Za-z0-9_]{0,8}", fullmatch=True).filter(
    lambda s: s.lower() not in {"create", "table"}
)
_col = st.one_of(
    st.builds(DdlColumn, _ident, st.just("char"), st.integers(0, 255)),
    st.builds(DdlColumn, _ident, st.just("varchar"), st.integers(0, 65535)),
    st.builds(DdlColumn, _ident, st.sampled_from(["TINYINT", "INT", "BIGINT"]), st.none()),
    st.builds(DdlColumn, _ident, st.just("date"), st.none()),
)


@given(_ident, st.lists(_col, min_size=1, max_size=6, unique_by=lambda c: c.name.lower()))
def test_round_trip_property(name, cols):
    t = DdlTable(name, tuple(cols))
    assert parse_ddl(render_ddl(t)) == t


def test_detect_examples():
    t = parse_ddl(STUDENT)
    samples = {
        "SID": ["30108001", "40210123", "30103189"],
        "NAME": ["Ananda Putera Perkasa"],
        "UNIT_CODE": ["123", "4567"],
        "SEX": ["1", "2"],
    }
    cands = {c.column.name: c for c in detect_numeric_columns(t, samples)}
    assert set(cands) == {"SID", "SEX"}
    assert cands["SID"].observed_width == 8
    assert not cands["SID"].leading_zero


def test_detect_rejects_empty_and_wide():
    t = parse_ddl("CREATE TABLE t (a varchar(30), b varchar(30), c int)")
    samples = {"a": ["123", ""], "b": ["1" * 20], "c": ["5"]}
    assert detect_numeric_columns(t, samples) == []
    assert detect_numeric_columns(t, {"a": ["1"]}, min_samples=2) == []


@given(st.lists(st.text(alphabet="0123456789", min_size=4, max_size=4), min_size=1, max_size=20), st.randoms())
def test_detect_order_insensitive(values, rnd):
    t = parse_ddl("CREATE TABLE t (a varchar(10))")
    shuffled = list(values)
    rnd.shuffle(shuffled)
    assert detect_numeric_columns(t, {"a": values}) == detect_numeric_columns(t, {"a": shuffled})


def test_recommend_sid_declared():
    t = parse_ddl(STUDENT)
    (cand,) = detect_numeric_columns(t, {"SID": ["30108001", "40210123"]})
    rec = recommend(cand, mode=DECLARED)
    assert rec.proposed_type.name == "INT"
    assert (rec.current_bytes, rec.proposed_bytes, rec.efficiency) == (11, 4, 63.64)
    rec_actual = recommend(cand, mode=ACTUAL)
    assert (rec_actual.current_bytes, rec_actual.efficiency) == (9, 55.56)


def test_recommend_char8():
    t = parse_ddl("CREATE TABLE t (sid char(8))")
    (cand,) = detect_numeric_columns(t, {"sid": ["99999999"]})
    for mode in AccountingMode:
        rec = recommend(cand, mode=mode)
        assert (rec.proposed_type.name, rec.current_bytes, rec.proposed_bytes, rec.efficiency) == (
            "INT",
            8,
            4,
            50.00,
        )


def test_recommend_width19():
    t = parse_ddl("CREATE TABLE t (x varchar(20))")
    (cand,) = detect_numeric_columns(t, {"x": ["1234567890123456789"]})
    with pytest.raises(NoFittingType):
        recommend(cand, sg=Signedness.SIGNED)
    assert recommend(cand, sg=Signedness.UNSIGNED).proposed_type.name == "BIGINT"


def test_leading_zero_warning():
    t = parse_ddl("CREATE TABLE t (code varchar(5))")
    (cand,) = detect_numeric_columns(t, {"code": ["00123", "45678"]})
    rec = recommend(cand)
    assert cand.leading_zero
    assert rec.warnings and "leading zeros" in rec.warnings[0]


def test_efficiency_recomputes():
    rec = recommend(Candidate(DdlColumn("s", "varchar", 300), 3, 1), mode=DECLARED)
    assert rec.current_bytes == 302
    assert rec.efficiency == space_efficiency(rec.current_bytes, rec.proposed_bytes)


def test_samples_csv_and_advise():
    csv_text = "SID,NAME,SEX\n30108001,Ananda Putera Perkasa,1\n40210123,Budi,2\n"
    samples = load_samples_csv(csv_text)
    assert samples["SID"] == ["30108001", "40210123"]
    recs = advise(STUDENT, samples, mode=DECLARED)
    by_col = {r.column: r for r in recs}
    assert by_col["SID"].efficiency == 63.64
    # CHAR(1) "1"/"2" -> TINYINT, same size
    assert by_col["SEX"].efficiency == 0.0
    assert load_samples_csv("") == {}
