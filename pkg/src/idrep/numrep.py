"""Binary positional values and the integer type catalog.

A :class:`BitVector` holds bits most-significant first, so ``"10100011"``
reads exactly as written and evaluates to 163.  The default
:class:`TypeCatalog` lists the five MySQL integer types; ranges are always
derived from the byte width and never stored.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .errors import CatalogError, InvalidWidth, ValueOutOfRange

MAX_BITS = 64
MAX_DECIMAL_DIGITS = 19


class Signedness(enum.Enum):
    SIGNED = "signed"
    UNSIGNED = "unsigned"


@dataclass(frozen=True)
class BitVector:
    """Ordered binary digits ``b[n-1] ... b[0]``, most significant first."""

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(self.bits)
        if not 1 <= len(bits) <= MAX_BITS:
            raise InvalidWidth(f"bit vector length must be in [1, {MAX_BITS}], got {len(bits)}")
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"bits must be 0 or 1: {bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        text = text.replace("_", "").strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary string: {text!r}")
        return cls(tuple(int(c) for c in text))

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))

    def bit(self, i: int) -> int:
        """Return ``b_i``, counting from the least significant position."""
        return self.bits[len(self.bits) - 1 - i]


def bits_to_value(b: BitVector) -> int:
    n = len(b)
    return sum(b.bit(i) << i for i in range(n))


def value_to_bits(v: int, n: int) -> BitVector:
    if not 1 <= n <= MAX_BITS:
        raise InvalidWidth(f"bit count must be in [1, {MAX_BITS}], got {n}")
    if v < 0 or v > (1 << n) - 1:
        raise ValueOutOfRange(f"{v} does not fit in {n} unsigned bits")
    return BitVector(tuple((v >> i) & 1 for i in range(n - 1, -1, -1)))


def max_decimal_value(digits: int) -> int:
    """Largest integer writable with ``digits`` decimal digits (all nines)."""
    if not 1 <= digits <= MAX_DECIMAL_DIGITS:
        raise InvalidWidth(f"digit count must be in [1, {MAX_DECIMAL_DIGITS}], got {digits}")
    return 10**digits - 1


@dataclass(frozen=True)
class IntTypeSpec:
    name: str
    bytes: int

    def __post_init__(self):
        if not isinstance(self.bytes, int) or self.bytes < 1:
            raise CatalogError(f"{self.name}: byte count must be a positive integer")
        if not self.name:
            raise CatalogError("integer type needs a name")

    @property
    def bits(self) -> int:
        return 8 * self.bytes

    @property
    def signed_min(self) -> int:
        return -(1 << (self.bits - 1))

    @property
    def signed_max(self) -> int:
        return (1 << (self.bits - 1)) - 1

    @property
    def unsigned_min(self) -> int:
        return 0

    @property
    def unsigned_max(self) -> int:
        return (1 << self.bits) - 1

    def bounds(self, s: Signedness = Signedness.SIGNED) -> tuple[int, int]:
        if s is Signedness.SIGNED:
            return self.signed_min, self.signed_max
        return self.unsigned_min, self.unsigned_max


@dataclass(frozen=True)
class TypeCatalog:
    """Integer types in ascending byte width.

    Equal widths are allowed for custom catalogs; the earlier entry then
    wins in :func:`select_min_type`.
    """

    entries: tuple[IntTypeSpec, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise CatalogError("catalog must contain at least one type")
        widths = [e.bytes for e in entries]
        if any(a > b for a, b in zip(widths, widths[1:])):
            raise CatalogError(f"catalog must be sorted by byte width, got {widths}")
        names = [e.name.upper() for e in entries]
        if len(set(names)) != len(names):
            raise CatalogError("catalog type names must be unique")
        object.__setattr__(self, "entries", entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, name: str) -> IntTypeSpec:
        for e in self.entries:
            if e.name.upper() == name.upper():
                return e
        raise KeyError(name)

    def __contains__(self, name) -> bool:
        return any(e.name.upper() == str(name).upper() for e in self.entries)


DEFAULT_CATALOG = TypeCatalog(
    (
        IntTypeSpec("TINYINT", 1),
        IntTypeSpec("SMALLINT", 2),
        IntTypeSpec("MEDIUMINT", 3),
        IntTypeSpec("INT", 4),
        IntTypeSpec("BIGINT", 8),
    )
)


def catalog_from_dict(doc: dict) -> TypeCatalog:
    try:
        raw = doc["entries"]
        entries = [IntTypeSpec(str(e["name"]), int(e["bytes"])) for e in raw]
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogError(f"malformed catalog document: {exc}") from exc
    return TypeCatalog(tuple(entries))


def load_catalog(source: Union[str, Path]) -> TypeCatalog:
    """Load a catalog from a JSON file path or a JSON text."""
    text = str(source)
    if not text.lstrip().startswith("{"):
        text = Path(source).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog is not valid JSON: {exc}") from exc
    return catalog_from_dict(doc)


def fits(spec: IntTypeSpec, v: int, s: Signedness = Signedness.SIGNED) -> bool:
    lo, hi = spec.bounds(s)
    return lo <= v <= hi


def select_min_type(
    catalog: Union[TypeCatalog, Iterable[IntTypeSpec]],
    v: int,
    s: Signedness = Signedness.SIGNED,
) -> Optional[IntTypeSpec]:
    for spec in catalog:
        if fits(spec, v, s):
            return spec
    return None


def fitting_types(
    catalog: Union[TypeCatalog, Sequence[IntTypeSpec]],
    v: int,
    s: Signedness = Signedness.SIGNED,
) -> list[IntTypeSpec]:
    return [spec for spec in catalog if fits(spec, v, s)]
