"""
Bit vectors and the integer type catalog
========================================

How many bytes does an 8-digit identifier need once it is stored as an
integer?  Start from the positional value of a bit pattern, then look at
the ranges of the five MySQL integer types.
"""

from idrep.numrep import (
    DEFAULT_CATALOG,
    BitVector,
    Signedness,
    bits_to_value,
    fits,
    max_decimal_value,
    select_min_type,
    value_to_bits,
)

# One byte, most significant bit first.
b = BitVector.from_string("10100011")
print(f"{b} -> {bits_to_value(b)}")
print(f"163 in 8 bits -> {value_to_bits(163, 8)}")

# Ranges come from the byte width alone.
for t in DEFAULT_CATALOG:
    print(f"{t.name:<10} {t.bytes}B  signed [{t.signed_min}, {t.signed_max}]  unsigned [0, {t.unsigned_max}]")

# The largest 8-digit id is all nines.
largest = max_decimal_value(8)
for t in DEFAULT_CATALOG:
    print(f"{largest} fits {t.name}: {fits(t, largest, Signedness.SIGNED)}")

best = select_min_type(DEFAULT_CATALOG, largest)
print(f"smallest signed type for {largest}: {best.name} ({best.bytes} bytes)")

# 19 digits is the limit: it still fits BIGINT, but only unsigned.
wide = max_decimal_value(19)
print("19 digits, signed:", select_min_type(DEFAULT_CATALOG, wide, Signedness.SIGNED))
print("19 digits, unsigned:", select_min_type(DEFAULT_CATALOG, wide, Signedness.UNSIGNED).name)
