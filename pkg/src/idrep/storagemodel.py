"""Column payload byte accounting for CHAR, VARCHAR and integer columns.

One byte per character is assumed throughout.  VARCHAR adds a length prefix
of one byte when the declared maximum is below 255 and two bytes otherwise
(the boundary is ``< 255``, not the ``<= 255`` real engines use).

VARCHAR can be priced two ways, see :class:`AccountingMode`:

* ``ACTUAL_DATA``: stored characters plus prefix (``VARCHAR(8)`` holding
  ``"99999999"`` costs 9 bytes);
* ``DECLARED_MAX``: declared maximum plus prefix (``VARCHAR(10)`` always
  costs 11 bytes).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Optional, Union

from .numrep import (
    DEFAULT_CATALOG,
    IntTypeSpec,
    Signedness,
    TypeCatalog,
    fitting_types,
    max_decimal_value,
)

CHAR_MAX_LEN = 255
VARCHAR_MAX_LEN = 65535
VARCHAR_ONE_BYTE_PREFIX_BELOW = 255


class AccountingMode(enum.Enum):
    ACTUAL_DATA = "actual_data"
    DECLARED_MAX = "declared_max"

    @classmethod
    def parse(cls, text: str) -> "AccountingMode":
        aliases = {"actual": cls.ACTUAL_DATA, "declared": cls.DECLARED_MAX}
        key = text.strip().lower()
        if key in aliases:
            return aliases[key]
        return cls(key)


class ColumnKind(enum.Enum):
    FIXED_CHAR = "fixed_char"
    VAR_CHAR = "var_char"
    INTEGER = "integer"


@dataclass(frozen=True)
class ColumnSpec:
    kind: ColumnKind
    length: Optional[int] = None
    int_type: Optional[IntTypeSpec] = None

    def __post_init__(self):
        if self.kind is ColumnKind.FIXED_CHAR:
            if self.length is None or not 0 <= self.length <= CHAR_MAX_LEN:
                raise ValueError(f"CHAR length must be in [0, {CHAR_MAX_LEN}], got {self.length}")
        elif self.kind is ColumnKind.VAR_CHAR:
            if self.length is None or not 0 <= self.length <= VARCHAR_MAX_LEN:
                raise ValueError(
                    f"VARCHAR length must be in [0, {VARCHAR_MAX_LEN}], got {self.length}"
                )
        elif self.int_type is None:
            raise ValueError("integer column needs an IntTypeSpec")

    @classmethod
    def fixed_char(cls, n: int) -> "ColumnSpec":
        return cls(ColumnKind.FIXED_CHAR, length=n)

    @classmethod
    def var_char(cls, n: int) -> "ColumnSpec":
        return cls(ColumnKind.VAR_CHAR, length=n)

    @classmethod
    def integer(cls, spec: IntTypeSpec) -> "ColumnSpec":
        return cls(ColumnKind.INTEGER, int_type=spec)

    @property
    def label(self) -> str:
        if self.kind is ColumnKind.FIXED_CHAR:
            return f"CHAR({self.length})"
        if self.kind is ColumnKind.VAR_CHAR:
            return f"VARCHAR({self.length})"
        return self.int_type.name

    def __str__(self):
        return self.label


def char_stored(declared_len: int, data: str) -> tuple[str, int]:
    """Return the stored CHAR value (truncated, space padded) and its byte cost."""
    if not 0 <= declared_len <= CHAR_MAX_LEN:
        raise ValueError(f"CHAR length must be in [0, {CHAR_MAX_LEN}], got {declared_len}")
    stored = data[:declared_len].ljust(declared_len, " ")
    return stored, declared_len


def varchar_prefix_bytes(declared_max: int) -> int:
    return 1 if declared_max < VARCHAR_ONE_BYTE_PREFIX_BELOW else 2


def varchar_stored(
    declared_max: int,
    data: str,
    mode: AccountingMode = AccountingMode.ACTUAL_DATA,
) -> int:
    if not 0 <= declared_max <= VARCHAR_MAX_LEN:
        raise ValueError(f"VARCHAR length must be in [0, {VARCHAR_MAX_LEN}], got {declared_max}")
    prefix = varchar_prefix_bytes(declared_max)
    if mode is AccountingMode.DECLARED_MAX:
        return declared_max + prefix
    return min(len(data), declared_max) + prefix


def column_bytes(
    col: ColumnSpec,
    data: Optional[str] = None,
    mode: AccountingMode = AccountingMode.ACTUAL_DATA,
) -> int:
    if col.kind is ColumnKind.FIXED_CHAR:
        return char_stored(col.length, data or "")[1]
    if col.kind is ColumnKind.VAR_CHAR:
        return varchar_stored(col.length, data or "", mode)
    return col.int_type.bytes


def _exact_efficiency(baseline_bytes: int, candidate_bytes: int) -> Fraction:
    if baseline_bytes <= 0:
        raise ValueError("baseline byte count must be positive")
    return Fraction(baseline_bytes - candidate_bytes, baseline_bytes) * 100


def round_percent(x: Union[Fraction, float]) -> float:
    """Round half-up to two decimals (avoids float banker's-rounding surprises)."""
    if isinstance(x, Fraction):
        d = Decimal(x.numerator) / Decimal(x.denominator)
    else:
        d = Decimal(repr(x))
    return float(d.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def space_efficiency(baseline_bytes: int, candidate_bytes: int) -> float:
    """Percent of baseline bytes saved by the candidate, to two decimals."""
    return round_percent(_exact_efficiency(baseline_bytes, candidate_bytes))


@dataclass(frozen=True)
class StorageRow:
    label: str
    bytes: int
    efficiency: float


@dataclass(frozen=True)
class StorageReport:
    rows: tuple[StorageRow, ...]
    baseline: str
    mode: AccountingMode
    digits: int
    signedness: Signedness

    def __getitem__(self, label: str) -> StorageRow:
        for r in self.rows:
            if r.label == label:
                return r
        raise KeyError(label)

    def as_records(self) -> list[dict]:
        return [
            {"representation": r.label, "bytes": r.bytes, "efficiency_pct": f"{r.efficiency:.2f}"}
            for r in self.rows
        ]

    def to_dict(self) -> dict:
        return {
            "digits": self.digits,
            "signedness": self.signedness.value,
            "mode": self.mode.value,
            "baseline": self.baseline,
            "rows": self.as_records(),
        }


def compare_representations(
    digits: int,
    catalog: TypeCatalog = DEFAULT_CATALOG,
    sg: Signedness = Signedness.SIGNED,
    mode: AccountingMode = AccountingMode.ACTUAL_DATA,
) -> StorageReport:
    """Price a ``digits``-wide identifier as CHAR, VARCHAR and each fitting integer type.

    The widest value (all nines) is used as the sample datum.  Efficiencies
    are relative to the VARCHAR row.
    """
    largest = max_decimal_value(digits)
    datum = str(largest)
    columns = [ColumnSpec.fixed_char(digits), ColumnSpec.var_char(digits)]
    columns += [ColumnSpec.integer(t) for t in fitting_types(catalog, largest, sg)]
    baseline = columns[1]
    base_bytes = column_bytes(baseline, datum, mode)
    rows = []
    for col in columns:
        b = column_bytes(col, datum, mode)
        rows.append(StorageRow(col.label, b, space_efficiency(base_bytes, b)))
    return StorageReport(tuple(rows), baseline.label, mode, digits, sg)
