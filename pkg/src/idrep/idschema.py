"""Schemas for digit-structured identifiers and their integer codec.

An :class:`IdSchema` is an ordered list of fixed-width digit fields.  Enum
fields only accept listed codes; serial fields accept any digits of the
right width (a serial field may still carry ``codes``, which are used as
display labels only).  ``pack``/``unpack`` convert between the fixed-width
digit string and its decimal value, so leading zeros survive a round trip
as long as the value is rendered back at the schema's width.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Mapping, Optional, Union

from .errors import InvalidId, InvalidSchema, SchemaParseError, ValueOutOfRange
from .numrep import (
    DEFAULT_CATALOG,
    MAX_DECIMAL_DIGITS,
    IntTypeSpec,
    Signedness,
    TypeCatalog,
    max_decimal_value,
    select_min_type,
)

ENUM = "enum"
SERIAL = "serial"


def _is_digits(text: str) -> bool:
    # str.isdigit() accepts non-ASCII digits such as "²"
    return bool(text) and all("0" <= c <= "9" for c in text)


@dataclass(frozen=True)
class DigitField:
    name: str
    width: int
    kind: str = SERIAL
    codes: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.name:
            raise InvalidSchema("field name must be non-empty")
        if not isinstance(self.width, int) or self.width < 1:
            raise InvalidSchema(f"field {self.name!r}: width must be a positive integer")
        if self.kind not in (ENUM, SERIAL):
            raise InvalidSchema(f"field {self.name!r}: unknown kind {self.kind!r}")
        codes = dict(self.codes or {})
        for code in codes:
            if len(code) != self.width or not _is_digits(code):
                raise InvalidSchema(
                    f"field {self.name!r}: code {code!r} is not a {self.width}-digit string"
                )
        if self.kind == ENUM and not codes:
            raise InvalidSchema(f"enum field {self.name!r} declares no codes")
        object.__setattr__(self, "codes", codes)

    def __hash__(self):
        return hash((self.name, self.width, self.kind, tuple(sorted(self.codes.items()))))

    def label(self, code: str) -> Optional[str]:
        return self.codes.get(code)


@dataclass(frozen=True)
class IdSchema:
    name: str
    fields: tuple[DigitField, ...]

    def __post_init__(self):
        fields = tuple(self.fields)
        if not fields:
            raise InvalidSchema("schema needs at least one field")
        names = [f.name for f in fields]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise InvalidSchema(f"duplicate field names: {', '.join(dupes)}")
        total = sum(f.width for f in fields)
        if total > MAX_DECIMAL_DIGITS:
            raise InvalidSchema(
                f"total width {total} exceeds the packable maximum of {MAX_DECIMAL_DIGITS} digits"
            )
        object.__setattr__(self, "fields", fields)

    @property
    def total_width(self) -> int:
        return sum(f.width for f in self.fields)

    def field(self, name: str) -> DigitField:
        for f in self.fields:
            if f.name == name:
                return f
        raise KeyError(name)

    def spans(self):
        """Yield ``(field, start, stop)`` slices in declaration order."""
        pos = 0
        for f in self.fields:
            yield f, pos, pos + f.width
            pos += f.width

    def to_dict(self) -> dict:
        out = []
        for f in self.fields:
            d = {"name": f.name, "width": f.width, "kind": f.kind}
            if f.codes:
                d["codes"] = dict(f.codes)
            out.append(d)
        return {"name": self.name, "fields": out}


@dataclass(frozen=True)
class Violation:
    field: Optional[str]
    reason: str

    def __str__(self):
        return f"{self.field}: {self.reason}" if self.field else self.reason


@dataclass(frozen=True)
class ValidationReport:
    id: str
    violations: tuple[Violation, ...] = ()
    warnings: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Component:
    field: str
    digits: str
    label: Optional[str]


@dataclass(frozen=True)
class ParsedId:
    raw: str
    components: tuple[Component, ...]

    def __getitem__(self, name: str) -> Component:
        for c in self.components:
            if c.field == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {c.field: {"digits": c.digits, "label": c.label} for c in self.components}


def schema_from_dict(doc: Mapping) -> IdSchema:
    if not isinstance(doc, Mapping):
        raise SchemaParseError("schema document must be a JSON object")
    try:
        name = doc["name"]
        raw_fields = doc["fields"]
    except KeyError as exc:
        raise SchemaParseError(f"schema document missing key {exc}") from exc
    if not isinstance(raw_fields, list):
        raise SchemaParseError("'fields' must be a list")
    fields = []
    for i, rf in enumerate(raw_fields):
        if not isinstance(rf, Mapping) or "name" not in rf or "width" not in rf:
            raise SchemaParseError(f"field #{i} must be an object with 'name' and 'width'")
        codes = rf.get("codes") or {}
        if not isinstance(codes, Mapping):
            raise SchemaParseError(f"field {rf['name']!r}: 'codes' must be an object")
        width = rf["width"]
        if isinstance(width, bool) or not isinstance(width, int):
            raise SchemaParseError(f"field {rf['name']!r}: width must be an integer")
        fields.append(
            DigitField(
                name=str(rf["name"]),
                width=width,
                kind=str(rf.get("kind", SERIAL)),
                codes={str(k): str(v) for k, v in codes.items()},
            )
        )
    schema = IdSchema(str(name), tuple(fields))
    declared = doc.get("total_width")
    if declared is not None and declared != schema.total_width:
        raise InvalidSchema(
            f"declared total_width {declared} does not match field widths ({schema.total_width})"
        )
    return schema


def load_schema(doc: str) -> IdSchema:
    """Build a schema from JSON text."""
    try:
        parsed = json.loads(doc)
    except json.JSONDecodeError as exc:
        raise SchemaParseError(f"schema is not valid JSON: {exc}") from exc
    return schema_from_dict(parsed)


def load_schema_file(path: Union[str, Path]) -> IdSchema:
    return load_schema(Path(path).read_text())


def sid_schema() -> IdSchema:
    """The bundled 8-digit student-ID schema (level, program, year, seq)."""
    text = resources.files("idrep").joinpath("data/sid.json").read_text()
    return load_schema(text)


def serial_schema(width: int, name: str = "serial") -> IdSchema:
    """A single unconstrained serial field of ``width`` digits."""
    return IdSchema(name, (DigitField("value", width, SERIAL),))


def validate(s: IdSchema, id: str, permissive: bool = False) -> ValidationReport:
    """Check ``id`` against ``s``.

    With ``permissive=True`` unknown enum codes are reported as warnings
    instead of violations.  Length and character violations are never
    downgraded.
    """
    violations = []
    warnings = []
    if len(id) != s.total_width:
        violations.append(Violation(None, f"length {len(id)} != {s.total_width}"))
    if not _is_digits(id):
        bad = sorted({c for c in id if not "0" <= c <= "9"})
        violations.append(Violation(None, f"non-digit characters {''.join(bad)!r}"))
    if violations:
        return ValidationReport(id, tuple(violations))
    for f, start, stop in s.spans():
        code = id[start:stop]
        if f.kind == ENUM and code not in f.codes:
            v = Violation(f.name, f"code {code} unknown")
            (warnings if permissive else violations).append(v)
    return ValidationReport(id, tuple(violations), tuple(warnings))


def _require_valid(s: IdSchema, id: str, permissive: bool) -> None:
    report = validate(s, id, permissive)
    if not report.ok:
        detail = "; ".join(str(v) for v in report.violations)
        raise InvalidId(f"invalid {s.name} {id!r}: {detail}", report)


def parse_id(s: IdSchema, id: str, permissive: bool = False) -> ParsedId:
    _require_valid(s, id, permissive)
    comps = tuple(Component(f.name, id[a:b], f.label(id[a:b])) for f, a, b in s.spans())
    return ParsedId(id, comps)


def pack(s: IdSchema, id: str, permissive: bool = False) -> int:
    _require_valid(s, id, permissive)
    return int(id, 10)


def unpack(s: IdSchema, v: int) -> str:
    if v < 0 or v > max_decimal_value(s.total_width):
        raise ValueOutOfRange(f"{v} does not fit in {s.total_width} decimal digits")
    return f"{v:0{s.total_width}d}"


def recommended_type(
    s: IdSchema,
    catalog: TypeCatalog = DEFAULT_CATALOG,
    sg: Signedness = Signedness.SIGNED,
) -> Optional[IntTypeSpec]:
    return select_min_type(catalog, max_decimal_value(s.total_width), sg)
