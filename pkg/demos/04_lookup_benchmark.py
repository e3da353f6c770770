"""
String keys vs. integer keys
============================

Fill a string-keyed and an integer-keyed store with the same consecutive
ids, then look the last id up over and over.  Wall-clock time depends on
the machine; the comparison and byte counters do not.

Pass ``--full`` for the full-size run (100,000 records x 100,000 lookups x
15 runs, roughly two minutes).
"""

import sys

from idrep import benchharness as bh

full = "--full" in sys.argv
records, reps, runs = (100000, 100000, 15) if full else (10000, 2000, 5)

d = bh.generate_dataset(count=records)
print(f"{d.count} records, keys {d.records[0].sid_text}..{d.records[-1].sid_text}")

for kind in bh.IndexKind:
    s = bh.run_benchmark(d, repetitions=reps, runs=runs, index_kind=kind)
    rs, ri = s.runs_string[0], s.runs_integer[0]
    print(
        f"{kind.value:<6} comparisons/lookup {rs.comparator_invocations // reps:>6}  "
        f"bytes/lookup string {rs.cost_units // reps:>6} vs integer {ri.cost_units // reps:>6}  "
        f"eta {s.eta_rounded:6.2f}%"
    )

s = bh.run_benchmark(d, repetitions=reps, runs=runs)
print(bh.summary_table(s))
print(bh.summary_csv(s))
