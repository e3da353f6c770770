"""String-keyed vs. integer-keyed lookup benchmark.

The experiment: fill two stores with the same consecutive 8-digit ids (one
keyed by the digit string, one by its integer value), look the same key up
many times in each, and compare total times with

    eta = (t_string - t_integer) / t_string * 100

Wall-clock totals depend on the machine, so every run also reports two
deterministic counters taken from an instrumented model of the lookup:

* ``comparator_invocations``: key comparisons performed;
* ``cost_units``: bytes examined for string keys (left to right, stopping
  at the first mismatch), one unit per comparison for integer keys.

Each index has two lookup paths.  ``lookup`` is the fast path that gets
timed: a numpy column scan, ``searchsorted`` or a dict.  ``probe`` walks
the same structure in pure Python and counts the work.  It is cached per
key because an index never changes after it is built.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .errors import (
    DatasetOverflow,
    EmptyDataset,
    InvariantViolation,
    MismatchedRunCounts,
    RepresentationMismatch,
    ZeroTotalTime,
)
from .storagemodel import round_percent

KEY_WIDTH = 8
KEY_MAX = 10**KEY_WIDTH - 1

DEFAULT_START = 10100001
DEFAULT_COUNT = 100000
DEFAULT_NAME = "Ananda Putera Perkasa"
DEFAULT_TARGET = 10200000
DEFAULT_REPS = 100000
DEFAULT_RUNS = 15

Clock = Callable[[], float]
Key = Union[bytes, int]


class KeyRepr(enum.Enum):
    STRING = "string"
    INTEGER = "integer"


class IndexKind(enum.Enum):
    SCAN = "scan"
    SORTED = "sorted"
    HASH = "hash"


class TimingMode(enum.Enum):
    PER_QUERY = "per_query"
    BATCH = "batch"


@dataclass(frozen=True)
class Record:
    sid_value: int
    sid_text: str
    name: str


@dataclass(frozen=True)
class Dataset:
    records: tuple[Record, ...]
    start: int
    count: int

    def __len__(self):
        return self.count

    def values(self) -> np.ndarray:
        return np.arange(self.start, self.start + self.count, dtype=np.int64)


def generate_dataset(
    start: int = DEFAULT_START,
    count: int = DEFAULT_COUNT,
    name: str = DEFAULT_NAME,
) -> Dataset:
    """Consecutive ids ``start .. start + count - 1``, all with the same name."""
    if start < 0 or count < 0:
        raise ValueError("start and count must be non-negative")
    if count and start + count - 1 > KEY_MAX:
        raise DatasetOverflow(
            f"keys up to {start + count - 1} exceed {KEY_WIDTH} digits (max {KEY_MAX})"
        )
    records = tuple(Record(v, f"{v:0{KEY_WIDTH}d}", name) for v in range(start, start + count))
    return Dataset(records, start, count)


def compare_bytes(a: bytes, b: bytes) -> tuple[int, int]:
    """Three-way byte-wise compare; returns ``(sign, bytes_examined)``."""
    n = min(len(a), len(b))
    for i in range(n):
        x, y = a[i], b[i]
        if x != y:
            return (-1 if x < y else 1), i + 1
    # a length check still costs one unit when both keys are empty
    return (len(a) > len(b)) - (len(a) < len(b)), max(n, 1)


def compare_ints(a: int, b: int) -> tuple[int, int]:
    return (a > b) - (a < b), 1


@dataclass(frozen=True)
class ProbeCost:
    found: bool
    comparisons: int
    cost_units: int


class Index:
    """Immutable lookup structure over one key representation."""

    kind: IndexKind

    def __init__(self, dataset: Dataset, key_repr: KeyRepr):
        if dataset.count == 0:
            raise EmptyDataset("cannot index an empty dataset")
        self.key_repr = key_repr
        self.size = dataset.count
        if key_repr is KeyRepr.STRING:
            self._keys: list = [r.sid_text.encode("ascii") for r in dataset.records]
            self._compare = compare_bytes
        else:
            self._keys = [r.sid_value for r in dataset.records]
            self._compare = compare_ints
        self._probe_cache: dict = {}

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"<{type(self).__name__} {self.key_repr.value} n={self.size}>"

    def key_of(self, value: int) -> Key:
        if self.key_repr is KeyRepr.STRING:
            return f"{value:0{KEY_WIDTH}d}".encode("ascii")
        return int(value)

    def lookup(self, key: Key) -> int:
        """Position of ``key`` or -1."""
        raise NotImplementedError

    def probe(self, key: Key) -> ProbeCost:
        cost = self._probe_cache.get(key)
        if cost is None:
            cost = self._probe_cache[key] = self._probe(key)
        return cost

    def _probe(self, key: Key) -> ProbeCost:
        raise NotImplementedError


def _string_column(keys: Sequence[bytes]) -> tuple[np.ndarray, np.ndarray]:
    # fixed 8-byte slots plus a length column, like a VARCHAR(8) payload
    if any(len(k) > KEY_WIDTH for k in keys):
        raise ValueError(f"string keys longer than {KEY_WIDTH} bytes are not supported")
    slots = np.array(keys, dtype=f"S{KEY_WIDTH}")
    lengths = np.fromiter((len(k) for k in keys), dtype=np.uint8, count=len(keys))
    return slots, lengths


def _int_column(keys: Sequence[int]) -> np.ndarray:
    # 4-byte INT when every key fits, as in the integer-keyed table
    dtype = np.int32 if max(keys) <= np.iinfo(np.int32).max else np.int64
    return np.asarray(keys, dtype=dtype)


def _in_column_range(column: np.ndarray, key: int) -> bool:
    info = np.iinfo(column.dtype)
    return info.min <= key <= info.max


def _slot_word(key: bytes) -> np.uint64:
    return np.frombuffer(key.ljust(KEY_WIDTH, b"\0"), dtype="<u8")[0]


class ScanIndex(Index):
    """Insertion-order traversal with early exit on the first match."""

    kind = IndexKind.SCAN

    def __init__(self, dataset: Dataset, key_repr: KeyRepr):
        super().__init__(dataset, key_repr)
        if key_repr is KeyRepr.STRING:
            slots, self._lengths = _string_column(self._keys)
            # memcmp-style equality of the 8-byte slot; numpy's generic
            # bytes ufunc is ~10x slower and would dominate the timing
            self._words = slots.view("<u8")
        else:
            self._column = _int_column(self._keys)

    def lookup(self, key: Key) -> int:
        if self.key_repr is KeyRepr.STRING:
            if len(key) > KEY_WIDTH:
                return -1
            hit = self._words == _slot_word(key)
            hit &= self._lengths == len(key)
        else:
            if not _in_column_range(self._column, key):
                return -1
            hit = self._column == key
        # evaluates the whole column; early exit is modelled by probe()
        pos = int(hit.argmax())
        return pos if hit[pos] else -1

    def _probe(self, key: Key) -> ProbeCost:
        compare = self._compare
        comparisons = cost = 0
        for k in self._keys:
            sign, examined = compare(k, key)
            comparisons += 1
            cost += examined
            if sign == 0:
                return ProbeCost(True, comparisons, cost)
        return ProbeCost(False, comparisons, cost)


class SortedIndex(Index):
    """Keys in ascending order, binary search."""

    kind = IndexKind.SORTED

    def __init__(self, dataset: Dataset, key_repr: KeyRepr):
        super().__init__(dataset, key_repr)
        self._keys.sort()
        if key_repr is KeyRepr.STRING:
            self._column = np.array(self._keys, dtype=f"S{KEY_WIDTH}")
        else:
            self._column = _int_column(self._keys)

    def lookup(self, key: Key) -> int:
        if self.key_repr is KeyRepr.STRING:
            if len(key) > KEY_WIDTH:
                return -1
        elif not _in_column_range(self._column, key):
            return -1
        pos = int(np.searchsorted(self._column, key))
        if pos < self.size and self._column[pos] == key:
            return pos
        return -1

    def _probe(self, key: Key) -> ProbeCost:
        keys, compare = self._keys, self._compare
        lo, hi = 0, len(keys)
        comparisons = cost = 0
        while lo < hi:
            mid = (lo + hi) // 2
            sign, examined = compare(keys[mid], key)
            comparisons += 1
            cost += examined
            if sign == 0:
                return ProbeCost(True, comparisons, cost)
            if sign < 0:
                lo = mid + 1
            else:
                hi = mid
        return ProbeCost(False, comparisons, cost)


class HashIndex(Index):
    """Hashed lookup.

    The cost model assumes a collision-free table: a hit costs one full key
    comparison, a miss costs none.  Hashing itself is not counted.
    """

    kind = IndexKind.HASH

    def __init__(self, dataset: Dataset, key_repr: KeyRepr):
        super().__init__(dataset, key_repr)
        self._table = {k: i for i, k in enumerate(self._keys)}

    def lookup(self, key: Key) -> int:
        return self._table.get(key, -1)

    def _probe(self, key: Key) -> ProbeCost:
        pos = self._table.get(key)
        if pos is None:
            return ProbeCost(False, 0, 0)
        _, examined = self._compare(self._keys[pos], key)
        return ProbeCost(True, 1, examined)


_INDEX_TYPES = {IndexKind.SCAN: ScanIndex, IndexKind.SORTED: SortedIndex, IndexKind.HASH: HashIndex}


def build_index(
    d: Dataset,
    key_repr: KeyRepr = KeyRepr.STRING,
    index_kind: IndexKind = IndexKind.SCAN,
) -> Index:
    return _INDEX_TYPES[IndexKind(index_kind)](d, KeyRepr(key_repr))


@dataclass(frozen=True)
class WorkloadSpec:
    target_key: int = DEFAULT_TARGET
    repetitions: int = DEFAULT_REPS
    index_kind: IndexKind = IndexKind.SCAN
    key_repr: KeyRepr = KeyRepr.STRING
    timing_mode: TimingMode = TimingMode.PER_QUERY

    def __post_init__(self):
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")


@dataclass(frozen=True)
class RunResult:
    total_seconds: float
    found_count: int
    comparator_invocations: int
    cost_units: int
    repetitions: int = 1


def run_workload(idx: Index, w: WorkloadSpec, clock: Clock = time.perf_counter) -> RunResult:
    """Look ``w.target_key`` up ``w.repetitions`` times and time it.

    ``PER_QUERY`` sums a clock reading taken around every lookup;
    ``BATCH`` reads the clock once around the whole loop.
    """
    if w.key_repr is not idx.key_repr:
        raise RepresentationMismatch(
            f"workload uses {w.key_repr.value} keys but the index holds {idx.key_repr.value} keys"
        )
    if w.index_kind is not idx.kind:
        raise ValueError(f"workload expects a {w.index_kind.value} index, got {idx.kind.value}")
    key = idx.key_of(w.target_key)
    lookup = idx.lookup
    reps = w.repetitions
    found = 0
    if w.timing_mode is TimingMode.PER_QUERY:
        total = 0.0
        for _ in range(reps):
            t0 = clock()
            pos = lookup(key)
            total += clock() - t0
            if pos >= 0:
                found += 1
    else:
        t0 = clock()
        for _ in range(reps):
            if lookup(key) >= 0:
                found += 1
        total = clock() - t0

    cost = idx.probe(key)
    if found != (reps if cost.found else 0):
        raise InvariantViolation(
            f"fast lookup found {found}/{reps} but the cost model says found={cost.found}"
        )
    return RunResult(
        total_seconds=total,
        found_count=found,
        comparator_invocations=cost.comparisons * reps,
        cost_units=cost.cost_units * reps,
        repetitions=reps,
    )


@dataclass(frozen=True)
class BenchSummary:
    runs_string: tuple[RunResult, ...]
    runs_integer: tuple[RunResult, ...]
    total_string_seconds: float
    total_integer_seconds: float
    eta_percent: float
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def eta_rounded(self) -> float:
        return round_percent(self.eta_percent)


def eta(t_string: float, t_integer: float) -> float:
    if t_string == 0:
        raise ZeroTotalTime("string total time is zero; eta is undefined")
    return (t_string - t_integer) / t_string * 100


def compare_runs(
    rs: Sequence[RunResult],
    ri: Sequence[RunResult],
    meta: Optional[dict] = None,
) -> BenchSummary:
    if not rs or not ri:
        raise MismatchedRunCounts("both sides need at least one run")
    if len(rs) != len(ri):
        raise MismatchedRunCounts(f"{len(rs)} string runs vs {len(ri)} integer runs")
    ts = sum(r.total_seconds for r in rs)
    ti = sum(r.total_seconds for r in ri)
    return BenchSummary(tuple(rs), tuple(ri), ts, ti, eta(ts, ti), dict(meta or {}))


def run_benchmark(
    dataset: Optional[Dataset] = None,
    *,
    repetitions: int = DEFAULT_REPS,
    runs: int = DEFAULT_RUNS,
    index_kind: IndexKind = IndexKind.SCAN,
    timing_mode: TimingMode = TimingMode.PER_QUERY,
    target: Optional[int] = None,
    clock: Clock = time.perf_counter,
) -> BenchSummary:
    """Full experiment: build both indexes, warm up, then alternate string/integer runs.

    ``target`` defaults to the dataset's last key (10200000 for the default
    dataset), the worst case for a scan.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    d = dataset if dataset is not None else generate_dataset()
    if target is None:
        if d.count == 0:
            raise EmptyDataset("cannot benchmark an empty dataset")
        target = d.start + d.count - 1
    index_kind, timing_mode = IndexKind(index_kind), TimingMode(timing_mode)
    indexes = {kr: build_index(d, kr, index_kind) for kr in KeyRepr}
    for idx in indexes.values():
        idx.lookup(idx.key_of(target))  # untimed warm-up pass
    specs = {
        kr: WorkloadSpec(target, repetitions, index_kind, kr, timing_mode) for kr in KeyRepr
    }
    rs, ri = [], []
    for _ in range(runs):
        rs.append(run_workload(indexes[KeyRepr.STRING], specs[KeyRepr.STRING], clock))
        ri.append(run_workload(indexes[KeyRepr.INTEGER], specs[KeyRepr.INTEGER], clock))
    meta = {
        "records": d.count,
        "start": d.start,
        "repetitions": repetitions,
        "runs": runs,
        "index": index_kind.value,
        "timing": timing_mode.value,
        "target": target,
    }
    return compare_runs(rs, ri, meta)


CSV_COLUMNS = ("run", "string_seconds", "integer_seconds")
COUNTER_COLUMNS = (
    "string_found",
    "integer_found",
    "string_comparisons",
    "string_cost_units",
    "integer_comparisons",
    "integer_cost_units",
)


def run_rows(s: BenchSummary) -> list[dict]:
    """One row per paired run; wall-clock values only under ``*_seconds`` keys."""
    rows = []
    for i, (a, b) in enumerate(zip(s.runs_string, s.runs_integer), start=1):
        rows.append(
            {
                "run": i,
                "string_seconds": a.total_seconds,
                "integer_seconds": b.total_seconds,
                "string_found": a.found_count,
                "integer_found": b.found_count,
                "string_comparisons": a.comparator_invocations,
                "string_cost_units": a.cost_units,
                "integer_comparisons": b.comparator_invocations,
                "integer_cost_units": b.cost_units,
            }
        )
    return rows


def summarize(s: BenchSummary) -> dict:
    """Table-12-shaped report: paired runs, totals and eta."""
    rows = run_rows(s)
    totals = {
        "run": "total",
        "string_seconds": s.total_string_seconds,
        "integer_seconds": s.total_integer_seconds,
    }
    for col in COUNTER_COLUMNS:
        totals[col] = sum(r[col] for r in rows)
    return {
        "meta": dict(s.meta),
        "runs": rows,
        "totals": totals,
        "eta_percent": f"{s.eta_rounded:.2f}",
    }


def summary_csv(s: BenchSummary) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for r in run_rows(s):
        lines.append(f"{r['run']},{r['string_seconds']!r},{r['integer_seconds']!r}")
    return "\n".join(lines) + "\n"


def summary_table(s: BenchSummary) -> str:
    from .formatting import render_table

    report = summarize(s)
    rows = report["runs"] + [report["totals"]]
    shown = []
    for r in rows:
        r = dict(r)
        for col in ("string_seconds", "integer_seconds"):
            r[col] = f"{r[col]:.6f}"
        shown.append(r)
    cols = list(CSV_COLUMNS) + list(COUNTER_COLUMNS)
    return render_table(shown, cols) + f"eta_percent  {report['eta_percent']}\n"
