"""
Storage cost: CHAR, VARCHAR or INT
==================================

CHAR(n) always costs n bytes.  VARCHAR(n) costs the stored length plus a
one-byte length prefix (two bytes once n reaches 255).  An integer costs
its type width.
"""

from idrep.formatting import render_table
from idrep.storagemodel import (
    AccountingMode,
    char_stored,
    compare_representations,
    space_efficiency,
    varchar_stored,
)

for data in ["", "ab", "abcd", "abcdefgh"]:
    stored, n = char_stored(4, data)
    print(f"{data!r:<11} CHAR(4) {stored!r:<7} {n}B   VARCHAR(4) {varchar_stored(4, data)}B")

report = compare_representations(8)
print(render_table(report.as_records()))

# VARCHAR(10) priced at its declared maximum (11 bytes) against INT.
declared = compare_representations(10, mode=AccountingMode.DECLARED_MAX)["VARCHAR(10)"].bytes
print(f"INT vs CHAR(8): {space_efficiency(8, 4):.2f}%")
print(f"INT vs VARCHAR(8): {report['INT'].efficiency:.2f}%")
print(f"INT vs VARCHAR(10), declared size: {space_efficiency(declared, 4):.2f}%")
