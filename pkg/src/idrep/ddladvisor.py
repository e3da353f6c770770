"""Find character columns that hold fixed-width numbers and suggest integer types.

Only a small ``CREATE TABLE`` subset is understood::

    CREATE TABLE name ( col type[(n)] [, col type[(n)]]... ) [;]

with types ``char``, ``varchar``, ``tinyint``, ``smallint``, ``mediumint``,
``int``/``integer``, ``bigint`` and ``date``.  Anything else is rejected with
:class:`~idrep.errors.UnsupportedType` instead of being skipped.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import DdlSyntaxError, NoFittingType, UnsupportedType
from .numrep import (
    DEFAULT_CATALOG,
    IntTypeSpec,
    Signedness,
    TypeCatalog,
    max_decimal_value,
    select_min_type,
)
from .storagemodel import AccountingMode, ColumnSpec, column_bytes, space_efficiency

MAX_NUMERIC_WIDTH = 19

_CHAR_TYPES = {"char": "char", "character": "char", "varchar": "varchar"}
_INT_ALIASES = {"integer": "INT"}


@dataclass(frozen=True)
class DdlColumn:
    name: str
    type_name: str  # "char", "varchar", "date" or a catalog integer type name
    length: Optional[int] = None

    def __post_init__(self):
        if self.type_name in ("char", "varchar"):
            # validates declared length bounds
            self.column_spec()

    @property
    def is_character(self) -> bool:
        return self.type_name in ("char", "varchar")

    def column_spec(self, catalog: TypeCatalog = DEFAULT_CATALOG) -> Optional[ColumnSpec]:
        if self.type_name == "char":
            return ColumnSpec.fixed_char(self.length)
        if self.type_name == "varchar":
            return ColumnSpec.var_char(self.length)
        if self.type_name == "date":
            return None
        return ColumnSpec.integer(catalog[self.type_name])

    def render(self) -> str:
        t = self.type_name
        return f"{self.name} {t}({self.length})" if self.length is not None else f"{self.name} {t}"


@dataclass(frozen=True)
class DdlTable:
    name: str
    columns: tuple[DdlColumn, ...]

    def __post_init__(self):
        seen = set()
        for c in self.columns:
            if c.name.lower() in seen:
                raise ValueError(f"duplicate column {c.name!r} in table {self.name!r}")
            seen.add(c.name.lower())

    def column(self, name: str) -> DdlColumn:
        for c in self.columns:
            if c.name.lower() == name.lower():
                return c
        raise KeyError(name)


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<comment>--[^\n]*)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*|`[^`]+`)"
    r"|(?P<num>\d+)|(?P<punct>[(),;])"
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DdlSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        if "\n" in chunk:
            line += chunk.count("\n")
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str, catalog: TypeCatalog):
        self.toks = _tokenize(text)
        self.i = 0
        self.catalog = catalog

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, what: str, tok: Optional[_Tok] = None):
        tok = tok or self.peek()
        found = tok.text or "end of input"
        raise DdlSyntaxError(f"expected {what}, found {found!r}", tok.line, tok.col)

    def keyword(self, word: str):
        tok = self.next()
        if tok.kind != "ident" or tok.text.lower() != word:
            self.fail(word.upper(), tok)

    def punct(self, p: str):
        tok = self.next()
        if tok.text != p:
            self.fail(repr(p), tok)

    def ident(self, what: str) -> str:
        tok = self.next()
        if tok.kind != "ident":
            self.fail(what, tok)
        return tok.text.strip("`")

    def table(self) -> DdlTable:
        self.keyword("create")
        self.keyword("table")
        name = self.ident("table name")
        self.punct("(")
        if self.peek().text == ")":
            self.fail("column definition")
        cols = [self.column()]
        while self.peek().text == ",":
            self.next()
            cols.append(self.column())
        self.punct(")")
        if self.peek().text == ";":
            self.next()
        if self.peek().kind != "eof":
            self.fail("end of statement")
        try:
            return DdlTable(name, tuple(cols))
        except ValueError as exc:
            raise DdlSyntaxError(str(exc), self.toks[0].line, self.toks[0].col) from exc

    def column(self) -> DdlColumn:
        name = self.ident("column name")
        tok = self.next()
        if tok.kind != "ident":
            self.fail("column type", tok)
        raw = tok.text.lower()
        length = None
        if self.peek().text == "(":
            self.next()
            num = self.next()
            if num.kind != "num":
                self.fail("length", num)
            length = int(num.text)
            self.punct(")")
        if raw in _CHAR_TYPES:
            kind = _CHAR_TYPES[raw]
            if length is None:
                if kind == "varchar":
                    self.fail("VARCHAR length")
                length = 1
            try:
                return DdlColumn(name, kind, length)
            except ValueError as exc:
                raise DdlSyntaxError(str(exc), tok.line, tok.col) from exc
        if raw == "date":
            if length is not None:
                raise DdlSyntaxError("DATE takes no length", tok.line, tok.col)
            return DdlColumn(name, "date")
        canon = _INT_ALIASES.get(raw, raw.upper())
        if canon in self.catalog:
            # integer (n) is a display width and does not change storage
            return DdlColumn(name, self.catalog[canon].name, length)
        raise UnsupportedType(tok.text, tok.line, tok.col)


def parse_ddl(text: str, catalog: TypeCatalog = DEFAULT_CATALOG) -> DdlTable:
    return _Parser(text, catalog).table()


def render_ddl(t: DdlTable) -> str:
    """Canonical single-statement rendering; ``parse_ddl`` reads it back unchanged."""
    body = ",\n".join(f"  {c.render()}" for c in t.columns)
    return f"CREATE TABLE {t.name} (\n{body}\n);\n"


@dataclass(frozen=True)
class Candidate:
    column: DdlColumn
    observed_width: int
    sample_count: int
    leading_zero: bool = False


def _is_digits(v: str) -> bool:
    return bool(v) and all("0" <= c <= "9" for c in v)


def detect_numeric_columns(
    t: DdlTable,
    samples: Mapping[str, Sequence[str]],
    min_samples: int = 1,
) -> list[Candidate]:
    """Character columns whose samples are all non-empty digit strings of one width."""
    found = []
    by_name = {k.lower(): v for k, v in samples.items()}
    for col in t.columns:
        if not col.is_character:
            continue
        values = by_name.get(col.name.lower())
        if values is None or len(values) < max(min_samples, 1):
            continue
        if not all(_is_digits(v) for v in values):
            continue
        widths = {len(v) for v in values}
        if len(widths) != 1:
            continue
        (width,) = widths
        if width > MAX_NUMERIC_WIDTH:
            continue
        lead = any(v[0] == "0" and len(v) > 1 for v in values)
        found.append(Candidate(col, width, len(values), lead))
    return found


@dataclass(frozen=True)
class Recommendation:
    column: str
    declared: str
    observed_width: int
    current_bytes: int
    proposed_type: IntTypeSpec
    proposed_bytes: int
    efficiency: float
    mode: AccountingMode
    signedness: Signedness = Signedness.SIGNED
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "column": self.column,
            "declared": self.declared,
            "observed_width": self.observed_width,
            "current_bytes": self.current_bytes,
            "proposed_type": self.proposed_type.name,
            "proposed_bytes": self.proposed_bytes,
            "efficiency_pct": f"{self.efficiency:.2f}",
            "mode": self.mode.value,
            "signedness": self.signedness.value,
            "warnings": "; ".join(self.warnings),
        }


def recommend(
    c: Candidate,
    catalog: TypeCatalog = DEFAULT_CATALOG,
    sg: Signedness = Signedness.SIGNED,
    mode: AccountingMode = AccountingMode.ACTUAL_DATA,
) -> Recommendation:
    largest = max_decimal_value(c.observed_width)
    proposed = select_min_type(catalog, largest, sg)
    if proposed is None:
        raise NoFittingType(
            f"column {c.column.name!r}: {c.observed_width}-digit values (up to {largest}) "
            f"fit no {sg.value} type in the catalog"
        )
    spec = c.column.column_spec(catalog)
    current = column_bytes(spec, "9" * c.observed_width, mode)
    warnings = []
    if c.leading_zero:
        warnings.append(
            f"samples have leading zeros; render stored integers back at width "
            f"{c.observed_width} (idschema.unpack) to keep them"
        )
    return Recommendation(
        column=c.column.name,
        declared=spec.label,
        observed_width=c.observed_width,
        current_bytes=current,
        proposed_type=proposed,
        proposed_bytes=proposed.bytes,
        efficiency=space_efficiency(current, proposed.bytes),
        mode=mode,
        signedness=sg,
        warnings=tuple(warnings),
    )


def load_samples_csv(text: str) -> dict[str, list[str]]:
    """Column name -> values from a CSV whose header row names the columns.

    Blank cells are kept as empty strings (and disqualify the column);
    cells missing from short rows are skipped.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        return {}
    header = [h.strip() for h in header]
    out: dict[str, list[str]] = {h: [] for h in header}
    for row in reader:
        for h, v in zip(header, row):
            out[h].append(v.strip())
    return out


def advise(
    ddl: str,
    samples: Mapping[str, Sequence[str]],
    catalog: TypeCatalog = DEFAULT_CATALOG,
    sg: Signedness = Signedness.SIGNED,
    mode: AccountingMode = AccountingMode.ACTUAL_DATA,
    min_samples: int = 1,
) -> list[Recommendation]:
    """Parse, detect and recommend in one call.

    Candidates with no fitting type are left out; use
    :func:`detect_numeric_columns` and :func:`recommend` directly to see them.
    """
    table = parse_ddl(ddl, catalog)
    recs = []
    for cand in detect_numeric_columns(table, samples, min_samples):
        try:
            recs.append(recommend(cand, catalog, sg, mode))
        except NoFittingType:
            continue
    return recs

