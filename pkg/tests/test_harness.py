import json

import pytest

from rnscluster import ModuliSet
from rnscluster.harness import (
    BENCH_COLUMNS,
    DEFAULT_GRID,
    RangeTooLargeError,
    bench,
    bench_csv,
    operand_stream,
    read_bench_csv,
    verify,
)


@pytest.mark.parametrize("ps", [(3, 5, 7), (2, 3, 5), (3, 7, 5)])
def test_verify_exhaustive(ps):
    ms = ModuliSet(*ps)
    r = verify(ms, mode="exhaustive")
    assert r.ok
    assert r.cluster_checked == ms.M
    assert r.compare_checked == ms.M**2
    assert r.cluster_mismatches == r.compare_mismatches == r.same_cluster_violations == 0


def test_verify_auto_falls_back():
    r = verify(ModuliSet(7, 11, 13), samples=2000)
    assert (r.cluster_mode, r.compare_mode) == ("exhaustive", "random")
    assert r.compare_checked == 2000 and r.ok


def test_verify_range_too_large():
    with pytest.raises(RangeTooLargeError):
        verify(ModuliSet(7, 11, 13), mode="exhaustive")
    with pytest.raises(RangeTooLargeError):
        verify(ModuliSet(3, 5, 7), mode="exhaustive", cluster_ceiling=100)


def test_verify_random_reproducible():
    ms = ModuliSet(101, 103, 107)
    a = verify(ms, mode="random", seed=5, samples=500)
    b = verify(ms, mode="random", seed=5, samples=500)
    assert a.ok and (a.cluster_checked, a.compare_checked) == (500, 500)
    assert a.to_dict() | {"wall_time": 0} == b.to_dict() | {"wall_time": 0}


def test_verify_detects_mismatch(monkeypatch):
    import rnscluster.harness as h

    monkeypatch.setattr(h, "cluster_of", lambda x: 1)
    r = h.verify(ModuliSet(2, 3, 5), mode="exhaustive", sample_cap=3)
    assert not r.ok
    assert r.cluster_mismatches == 15
    assert len(r.cluster_samples) == 3


def test_report_json_round_trip():
    r = verify(ModuliSet(2, 3, 5))
    d = json.loads(json.dumps(r.to_dict()))
    assert d["moduli"] == [2, 3, 5] and d["ok"] is True
    assert set(d) >= {"cluster_mismatches", "compare_mismatches", "wall_time"}


def test_default_grid_is_coprime():
    for ps in DEFAULT_GRID:
        ModuliSet(*ps)


def test_operand_stream_deterministic():
    ms = ModuliSet(3, 5, 7)
    assert operand_stream(ms, 50, 9) == operand_stream(ms, 50, 9)
    assert operand_stream(ms, 50, 9) != operand_stream(ms, 50, 10)


def test_bench_rows():
    ms = ModuliSet(3, 5, 7)
    records = bench(ms, 2000, seed=1)
    assert [r.method for r in records] == ["cluster-compare", "crt", "mrc"]
    assert len({r.outcome_digest for r in records}) == 1
    assert all(r.pairs == 2000 and r.total_ns > 0 and r.ops_per_sec > 0 for r in records)
    text = bench_csv(records)
    assert text.splitlines()[0] == ",".join(BENCH_COLUMNS)
    back = read_bench_csv(text)
    assert [(b.method, b.pairs, b.outcome_digest) for b in back] == [
        (r.method, r.pairs, r.outcome_digest) for r in records
    ]


def test_bench_rejects_zero_pairs():
    with pytest.raises(ValueError):
        bench(ModuliSet(3, 5, 7), 0)
