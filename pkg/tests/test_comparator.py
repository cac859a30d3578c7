import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rnscluster import (
    EQUAL,
    GREATER,
    LESS,
    ComparisonResult,
    InternalInconsistencyError,
    ModuliMismatchError,
    ModuliSet,
    cluster_of,
    compare,
    compare_batch,
    compare_crt,
    compare_mrc,
    encode,
    explain_compare,
)
from rnscluster import comparator as comparator_mod

from conftest import coprime_triples


def test_example_greater(ms357):
    x, y = ms357.number(0, 1, 5), ms357.number(2, 1, 4)
    t = explain_compare(x, y)
    assert t.z.residues == (1, 0, 1)
    assert (t.cl_x, t.cl_y) == (3, 1)
    assert compare(x, y) is GREATER


def test_example_less(ms357):
    # 11 against 52; the residues of 52 are (1,2,3)
    x, y = ms357.number(2, 1, 4), ms357.number(1, 2, 3)
    t = explain_compare(x, y)
    assert (t.cl_x, t.cl_y) == (1, 2)
    assert compare(x, y) is LESS


def test_example_same_cluster(ms357):
    x, y = ms357.number(0, 3, 0), ms357.number(1, 2, 3)
    t = explain_compare(x, y)
    assert t.cl_x == t.cl_y == 2
    assert t.z.residues == (2, 1, 4)
    assert t.cl_z == 1
    assert t.result is GREATER


def test_equal(ms357):
    x = ms357.number(1, 2, 3)
    assert compare(x, x) is EQUAL
    assert compare_crt(x, x) is EQUAL
    assert compare_mrc(x, x) is EQUAL


def test_baselines_example(ms357):
    x, y = encode(96, ms357), encode(11, ms357)
    assert compare_crt(x, y) is GREATER
    assert compare_mrc(x, y) is GREATER


def test_result_helpers():
    assert GREATER.swapped() is LESS
    assert EQUAL.swapped() is EQUAL
    assert str(GREATER) == "GREATER"
    assert ComparisonResult.of_ints(3, 5) is LESS


@pytest.mark.parametrize("fn", [compare, compare_crt, compare_mrc])
def test_mismatch(ms357, fn):
    with pytest.raises(ModuliMismatchError):
        fn(encode(1, ms357), encode(1, ModuliSet(3, 7, 5)))


@pytest.mark.parametrize("ps", [(2, 3, 5), (3, 5, 7), (3, 7, 5), (5, 7, 9)])
def test_exhaustive_agreement(ps):
    ms = ModuliSet(*ps)
    nums = [encode(n, ms) for n in range(ms.M)]
    for a, x in enumerate(nums):
        for b, y in enumerate(nums):
            want = ComparisonResult.of_ints(a, b)
            assert compare(x, y) is want
            assert compare_crt(x, y) is want
            assert compare_mrc(x, y) is want


@pytest.mark.parametrize("ps", [(2, 3, 5), (3, 5, 7), (3, 7, 5), (2, 9, 25)])
def test_same_cluster_difference(ps):
    ms = ModuliSet(*ps)
    nums = [encode(n, ms) for n in range(ms.M)]
    cls = [cluster_of(x) for x in nums]
    for a in range(ms.M):
        for b in range(ms.M):
            if a != b and cls[a] == cls[b]:
                cz = cluster_of(nums[a] - nums[b])
                assert cz == (1 if a > b else ms.p1)


@settings(max_examples=300, deadline=None)
@given(coprime_triples, st.data())
def test_random_agreement_and_antisymmetry(ms, data):
    a = data.draw(st.integers(0, ms.M - 1))
    b = data.draw(st.integers(0, ms.M - 1))
    x, y = encode(a, ms), encode(b, ms)
    r = compare(x, y)
    assert r is ComparisonResult.of_ints(a, b)
    assert compare(y, x) is r.swapped()
    assert compare_mrc(x, y) is r


def test_large_moduli():
    ms = ModuliSet(1_000_003, 999_983, 1_000_033)
    rng = random.Random(7)
    for _ in range(2000):
        a, b = rng.randrange(ms.M), rng.randrange(ms.M)
        x, y = encode(a, ms), encode(b, ms)
        assert compare(x, y) is ComparisonResult.of_ints(a, b)
    lo = ms.cluster_width
    assert compare(encode(lo, ms), encode(lo - 1, ms)) is GREATER


def test_internal_inconsistency_guard(monkeypatch, ms357):
    # same cluster for x and y, but a forged difference cluster
    real = comparator_mod.cluster_of_residues
    calls = []

    def forged(ms, *res):
        calls.append(res)
        return 2 if len(calls) == 3 else real(ms, *res)

    monkeypatch.setattr(comparator_mod, "cluster_of_residues", forged)
    with pytest.raises(InternalInconsistencyError):
        compare(encode(50, ms357), encode(40, ms357))


def test_batch_matches_scalar(ms357):
    pairs = [(a, b) for a in range(ms357.M) for b in range(ms357.M)]
    xs = np.array([encode(a, ms357).residues for a, _ in pairs])
    ys = np.array([encode(b, ms357).residues for _, b in pairs])
    got = compare_batch(ms357, xs, ys)
    want = [ComparisonResult.of_ints(a, b).value for a, b in pairs]
    assert got.tolist() == want
