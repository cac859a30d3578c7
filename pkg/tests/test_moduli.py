import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rnscluster import (
    MAX_RANGE,
    ModuliMismatchError,
    ModuliOverflowError,
    ModuliSet,
    ModulusTooSmallError,
    MrcDigits,
    NotCoprimeError,
    OutOfRangeError,
    RnsNumber,
    add,
    decode,
    encode,
    mrc_digits,
    mul,
    new_moduli_set,
    sub,
)

from conftest import coprime, coprime_triples, moduli_and_value
from oracles import mrc_by_enumeration, value_by_search


def test_constants_357():
    ms = new_moduli_set(3, 5, 7)
    assert ms.M == 105
    assert ms.cluster_width == 35
    assert ms.q32 == 2
    assert ms.w1 == 2
    assert (ms.q32 * ms.inv_q32) % ms.p2 == 1
    assert (ms.w1 * ms.inv_w1) % ms.p1 == 1


def test_constants_235():
    ms = ModuliSet(2, 3, 5)
    assert (ms.M, ms.cluster_width) == (30, 15)


@pytest.mark.parametrize(
    "ps, err",
    [
        ((2, 4, 6), NotCoprimeError),
        ((3, 5, 9), NotCoprimeError),
        ((1, 5, 7), ModulusTooSmallError),
        ((3, 0, 7), ModulusTooSmallError),
        ((3, 5, -7), ModulusTooSmallError),
    ],
)
def test_rejects(ps, err):
    with pytest.raises(err):
        ModuliSet(*ps)


def test_rejects_non_int():
    with pytest.raises(TypeError):
        ModuliSet(3, 5.0, 7)
    with pytest.raises(TypeError):
        ModuliSet(True, 5, 7)


def test_overflow_limit():
    # coprime triples either side of 2**62
    big = ModuliSet(2**20 - 3, 2**21 - 9, 2**21 + 1)
    assert big.M <= MAX_RANGE
    with pytest.raises(ModuliOverflowError):
        ModuliSet(2**21 + 17, 2**21 - 9, 2**21 + 1)


def test_constructor_matches_gcd_grid():
    for t in itertools.product(range(2, 13), repeat=3):
        if coprime(*t):
            ModuliSet(*t)
        else:
            with pytest.raises(NotCoprimeError):
                ModuliSet(*t)


def test_moduli_unordered_kept():
    ms = ModuliSet(3, 7, 5)
    assert ms.moduli == (3, 7, 5)
    assert ms != ModuliSet(3, 5, 7)


@pytest.mark.parametrize(
    "n, residues",
    [(11, (2, 1, 4)), (0, (0, 0, 0)), (96, (0, 1, 5)), (52, (1, 2, 3)), (63, (0, 3, 0))],
)
def test_encode_357(ms357, n, residues):
    assert encode(n, ms357).residues == residues


@pytest.mark.parametrize("n", [-1, 105, 1000])
def test_encode_out_of_range(ms357, n):
    with pytest.raises(OutOfRangeError):
        encode(n, ms357)


def test_residue_bounds(ms357):
    with pytest.raises(OutOfRangeError):
        RnsNumber((3, 0, 0), ms357)
    with pytest.raises(ValueError):
        RnsNumber((1, 2), ms357)


@pytest.mark.parametrize("residues, n", [((2, 1, 4), 11), ((0, 0, 0), 0), ((1, 2, 3), 52)])
def test_decode_357(ms357, residues, n):
    assert decode(ms357.number(residues)) == n


def test_decode_matches_search_357(ms357):
    for a, b, c in itertools.product(range(3), range(5), range(7)):
        assert decode(ms357.number(a, b, c)) == value_by_search((a, b, c), (3, 5, 7))


def test_round_trip_grid(grid_ms):
    for n in range(grid_ms.M):
        assert decode(encode(n, grid_ms)) == n


@settings(max_examples=150, deadline=None)
@given(moduli_and_value())
def test_round_trip_random(mv):
    ms, n = mv
    x = encode(n, ms)
    assert decode(x) == n
    assert int(x) == n


def test_arith_examples(ms357):
    x, y = ms357.number(0, 1, 5), ms357.number(2, 1, 4)
    assert sub(x, y).residues == (1, 0, 1)
    assert sub(x, x).residues == (0, 0, 0)
    assert add(y, ms357.number(1, 0, 1)).residues == (0, 1, 5)
    assert decode(ms357.number(1, 0, 1)) == 85
    assert (y + ms357.number(1, 0, 1)) == x
    assert (x - y) == sub(x, y)


def test_arith_mismatch(ms357):
    with pytest.raises(ModuliMismatchError):
        add(encode(1, ms357), encode(1, ModuliSet(3, 7, 5)))


@settings(max_examples=200, deadline=None)
@given(coprime_triples, st.data())
def test_homomorphism(ms, data):
    a = data.draw(st.integers(0, ms.M - 1))
    b = data.draw(st.integers(0, ms.M - 1))
    xa, xb = encode(a, ms), encode(b, ms)
    assert decode(add(xa, xb)) == (a + b) % ms.M
    assert decode(sub(xa, xb)) == (a - b) % ms.M
    assert decode(mul(xa, xb)) == (a * b) % ms.M


@pytest.mark.parametrize("n, digits", [(0, (0, 0, 0)), (11, (2, 3, 0)), (96, (0, 2, 6))])
def test_mrc_examples(ms357, n, digits):
    assert mrc_digits(encode(n, ms357)) == MrcDigits(*digits)


def test_mrc_matches_enumeration(ms357):
    for n in range(ms357.M):
        assert tuple(mrc_digits(encode(n, ms357))) == mrc_by_enumeration(n, (3, 5, 7))


@settings(max_examples=150, deadline=None)
@given(moduli_and_value())
def test_mrc_recomposition(mv):
    ms, n = mv
    d = mrc_digits(encode(n, ms))
    assert d.value(ms) == n
    assert 0 <= d.a1 < ms.p1 and 0 <= d.a2 < ms.p2 and 0 <= d.a3 < ms.p3


def test_moduli_hashable_and_immutable(ms357):
    assert hash(ms357) == hash(ModuliSet(3, 5, 7))
    with pytest.raises(AttributeError):
        ms357.p1 = 5
    assert math.prod(ms357) == 105
