"""Exhaustive and randomized verification sweeps, and the comparator benchmark."""

from __future__ import annotations

import csv
import hashlib
import io
import random
import time
from dataclasses import asdict, dataclass, field

from .cluster import cluster_of, cluster_of_trial
from .comparator import ComparisonResult, compare, compare_crt, compare_mrc
from .errors import InternalInconsistencyError
from .moduli import ModuliSet, decode, encode, mrc_digits

DEFAULT_GRID = ((2, 3, 5), (3, 5, 7), (3, 7, 5), (5, 7, 9), (7, 11, 13), (2, 9, 25))

CLUSTER_CEILING = 10**6
PAIR_CEILING = 10**6

BENCH_COLUMNS = ["method", "p1", "p2", "p3", "pairs", "total_ns", "ops_per_sec", "outcome_digest"]

METHODS = {
    "cluster-compare": compare,
    "crt": compare_crt,
    "mrc": compare_mrc,
}


class RangeTooLargeError(ValueError):
    pass


@dataclass
class VerifyReport:
    moduli: tuple[int, int, int]
    cluster_mode: str
    cluster_checked: int
    cluster_mismatches: int
    trial_mismatches: int
    compare_mode: str
    compare_checked: int
    compare_mismatches: int
    same_cluster_violations: int
    wall_time: float
    cluster_samples: list = field(default_factory=list)
    compare_samples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.cluster_mismatches
            or self.trial_mismatches
            or self.compare_mismatches
            or self.same_cluster_violations
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["moduli"] = list(self.moduli)
        d["ok"] = self.ok
        return d

    def summary(self) -> str:
        p = ",".join(map(str, self.moduli))
        return (
            f"({p}) {'OK ' if self.ok else 'FAIL'} "
            f"cluster[{self.cluster_mode}] {self.cluster_mismatches}/{self.cluster_checked} mismatches, "
            f"trial {self.trial_mismatches}; "
            f"compare[{self.compare_mode}] {self.compare_mismatches}/{self.compare_checked} mismatches, "
            f"same-cluster violations {self.same_cluster_violations}; "
            f"{self.wall_time:.3f}s"
        )


def _pick_mode(mode: str, size: int, ceiling: int, what: str) -> str:
    if mode == "auto":
        return "exhaustive" if size <= ceiling else "random"
    if mode == "exhaustive" and size > ceiling:
        raise RangeTooLargeError(
            f"{what} space of {size} exceeds the exhaustive ceiling {ceiling}; use --mode random"
        )
    if mode not in ("exhaustive", "random"):
        raise ValueError(f"unknown mode {mode!r}")
    return mode


def verify(
    ms: ModuliSet,
    mode: str = "auto",
    seed: int = 0,
    samples: int = 100_000,
    cluster_ceiling: int = CLUSTER_CEILING,
    pair_ceiling: int = PAIR_CEILING,
    sample_cap: int = 10,
) -> VerifyReport:
    """Check the cluster finder against the decoded value and every comparator
    against integer order.

    ``auto`` sweeps exhaustively when the space fits under its ceiling and
    falls back to ``samples`` seeded random draws otherwise.
    """
    cluster_mode = _pick_mode(mode, ms.M, cluster_ceiling, "cluster")
    compare_mode = _pick_mode(mode, ms.M * ms.M, pair_ceiling, "pair")
    rng = random.Random(seed)
    t0 = time.perf_counter()

    if cluster_mode == "exhaustive":
        ns = range(ms.M)
    else:
        ns = [rng.randrange(ms.M) for _ in range(samples)]
    cl_bad = trial_bad = 0
    cl_samples = []
    for n in ns:
        x = encode(n, ms)
        want = n // ms.cluster_width + 1
        got = cluster_of(x)
        if got != want:
            cl_bad += 1
            if len(cl_samples) < sample_cap:
                cl_samples.append([n, want, got])
        if cluster_of_trial(x) != got:
            trial_bad += 1

    if compare_mode == "exhaustive":
        values = range(ms.M)
        pairs = ((a, b) for a in values for b in values)
        checked = ms.M * ms.M
    else:
        pairs = [(rng.randrange(ms.M), rng.randrange(ms.M)) for _ in range(samples)]
        checked = samples
    cache: dict[int, tuple] = {}

    def prepared(n):
        entry = cache.get(n)
        if entry is None:
            x = encode(n, ms)
            entry = cache[n] = (x, decode(x), cluster_of(x))
        return entry

    cmp_bad = same_bad = 0
    cmp_samples = []
    for a, b in pairs:
        x, va, ca = prepared(a)
        y, vb, cb = prepared(b)
        want = ComparisonResult.of_ints(va, vb)
        try:
            got = compare(x, y)
        except InternalInconsistencyError:
            got = None
        bad = got is not want or compare_mrc(x, y) is not want
        if bad:
            cmp_bad += 1
            if len(cmp_samples) < sample_cap:
                cmp_samples.append([a, b, str(want), str(got)])
        if ca == cb and a != b and cluster_of(x - y) not in (1, ms.p1):
            same_bad += 1

    return VerifyReport(
        moduli=ms.moduli,
        cluster_mode=cluster_mode,
        cluster_checked=len(ns),
        cluster_mismatches=cl_bad,
        trial_mismatches=trial_bad,
        compare_mode=compare_mode,
        compare_checked=checked,
        compare_mismatches=cmp_bad,
        same_cluster_violations=same_bad,
        wall_time=time.perf_counter() - t0,
        cluster_samples=cl_samples,
        compare_samples=cmp_samples,
    )


@dataclass
class BenchRecord:
    method: str
    p1: int
    p2: int
    p3: int
    pairs: int
    total_ns: int
    ops_per_sec: float
    outcome_digest: str

    def row(self) -> list:
        return [getattr(self, c) for c in BENCH_COLUMNS]


def operand_stream(ms: ModuliSet, pairs: int, seed: int) -> list:
    """Pre-encoded operand pairs; identical for identical ``(ms, pairs, seed)``."""
    rng = random.Random(seed)
    return [(encode(rng.randrange(ms.M), ms), encode(rng.randrange(ms.M), ms)) for _ in range(pairs)]


def _digest(outcomes) -> str:
    h = hashlib.sha256(bytes(o.value + 1 for o in outcomes))
    return h.hexdigest()[:16]


def bench(ms: ModuliSet, pairs: int, seed: int = 0, methods=None) -> list[BenchRecord]:
    """Time each comparator over one shared operand stream."""
    if pairs < 1:
        raise ValueError("pair count must be at least 1")
    methods = list(methods or METHODS)
    stream = operand_stream(ms, pairs, seed)
    records = []
    for name in methods:
        fn = METHODS[name]
        t0 = time.perf_counter_ns()
        outcomes = [fn(x, y) for x, y in stream]
        elapsed = max(time.perf_counter_ns() - t0, 1)
        records.append(
            BenchRecord(name, ms.p1, ms.p2, ms.p3, pairs, elapsed, pairs * 1e9 / elapsed, _digest(outcomes))
        )
    return records


def bench_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BENCH_COLUMNS)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


def read_bench_csv(text: str) -> list[BenchRecord]:
    rows = list(csv.DictReader(io.StringIO(text)))
    if rows and list(rows[0]) != BENCH_COLUMNS:
        raise ValueError(f"unexpected columns {list(rows[0])}")
    return [
        BenchRecord(
            r["method"],
            int(r["p1"]),
            int(r["p2"]),
            int(r["p3"]),
            int(r["pairs"]),
            int(r["total_ns"]),
            float(r["ops_per_sec"]),
            r["outcome_digest"],
        )
        for r in rows
    ]
