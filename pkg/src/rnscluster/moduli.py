"""Moduli sets, residue encoding and the positional converters (CRT, MRC).

A :class:`ModuliSet` is an ordered, pairwise-coprime triple ``(p1, p2, p3)``.
All constants needed by the cluster finder and the converters are derived once
at construction; instances are immutable and hashable, so they can key caches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import (
    ModuliMismatchError,
    ModuliOverflowError,
    ModulusTooSmallError,
    NotCoprimeError,
    OutOfRangeError,
)

#: Largest admissible dynamic range. Keeps every CRT product inside 128 bits.
MAX_RANGE = 2**62


def inverse_mod(a: int, m: int) -> int:
    """Multiplicative inverse of ``a`` modulo ``m`` (``m == 1`` gives 0)."""
    if m == 1:
        return 0
    return pow(a, -1, m)


@dataclass(frozen=True)
class ModuliSet:
    """Validated moduli triple with its precomputed constants.

    The moduli are kept in the order given; nothing below assumes
    ``p1 < p2 < p3``.
    """

    p1: int
    p2: int
    p3: int

    M: int = field(init=False, compare=False, repr=False)
    cluster_width: int = field(init=False, compare=False, repr=False)
    q32: int = field(init=False, compare=False, repr=False)
    inv_q32: int = field(init=False, compare=False, repr=False)
    w1: int = field(init=False, compare=False, repr=False)
    inv_w1: int = field(init=False, compare=False, repr=False)
    crt_coeffs: tuple = field(init=False, compare=False, repr=False)
    # inverses of p1 mod p2, p1 mod p3, p2 mod p3
    mrc_coeffs: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        ps = (self.p1, self.p2, self.p3)
        for p in ps:
            if isinstance(p, bool) or not isinstance(p, int):
                raise TypeError(f"modulus must be an int, got {p!r}")
            if p < 2:
                raise ModulusTooSmallError(f"modulus {p} is smaller than 2")
        for a, b in ((0, 1), (0, 2), (1, 2)):
            g = math.gcd(ps[a], ps[b])
            if g != 1:
                raise NotCoprimeError(ps[a], ps[b], g)
        M = self.p1 * self.p2 * self.p3
        if M > MAX_RANGE:
            raise ModuliOverflowError(f"dynamic range {M} exceeds 2**62")

        q32 = self.p3 % self.p2
        w1 = (self.p2 * self.p3) % self.p1
        crt = tuple((M // p, inverse_mod((M // p) % p, p)) for p in ps)
        mrc = (
            inverse_mod(self.p1 % self.p2, self.p2),
            inverse_mod(self.p1 % self.p3, self.p3),
            inverse_mod(self.p2 % self.p3, self.p3),
        )
        values = dict(
            M=M,
            cluster_width=self.p2 * self.p3,
            q32=q32,
            inv_q32=inverse_mod(q32, self.p2),
            w1=w1,
            inv_w1=inverse_mod(w1, self.p1),
            crt_coeffs=crt,
            mrc_coeffs=mrc,
        )
        for name, value in values.items():
            object.__setattr__(self, name, value)

    @property
    def moduli(self) -> tuple[int, int, int]:
        return (self.p1, self.p2, self.p3)

    def __iter__(self):
        return iter(self.moduli)

    def __str__(self):
        return f"({self.p1},{self.p2},{self.p3})"

    def encode(self, n: int) -> RnsNumber:
        return encode(n, self)

    def number(self, *residues: int) -> RnsNumber:
        """Build an :class:`RnsNumber` from residues given directly."""
        if len(residues) == 1:
            residues = tuple(residues[0])
        return RnsNumber(tuple(residues), self)


def new_moduli_set(p1: int, p2: int, p3: int) -> ModuliSet:
    return ModuliSet(p1, p2, p3)


@dataclass(frozen=True)
class RnsNumber:
    """A residue triple bound to its moduli set."""

    residues: tuple[int, int, int]
    moduli: ModuliSet

    def __post_init__(self):
        res = tuple(self.residues)
        if len(res) != 3:
            raise ValueError(f"expected 3 residues, got {len(res)}")
        for x, p in zip(res, self.moduli.moduli):
            if isinstance(x, bool) or not isinstance(x, int):
                raise TypeError(f"residue must be an int, got {x!r}")
            if not 0 <= x < p:
                raise OutOfRangeError(f"residue {x} not in [0, {p})")
        object.__setattr__(self, "residues", res)

    @property
    def x1(self) -> int:
        return self.residues[0]

    @property
    def x2(self) -> int:
        return self.residues[1]

    @property
    def x3(self) -> int:
        return self.residues[2]

    def is_zero(self) -> bool:
        return self.residues == (0, 0, 0)

    def __iter__(self):
        return iter(self.residues)

    def __int__(self):
        return decode(self)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __str__(self):
        return "({},{},{})".format(*self.residues)


class MrcDigits(NamedTuple):
    """Mixed-radix digits, least significant first (weights 1, p1, p1*p2)."""

    a1: int
    a2: int
    a3: int

    def value(self, ms: ModuliSet) -> int:
        return self.a1 + self.a2 * ms.p1 + self.a3 * ms.p1 * ms.p2


def encode(n: int, ms: ModuliSet) -> RnsNumber:
    if not 0 <= n < ms.M:
        raise OutOfRangeError(f"{n} not in [0, {ms.M})")
    return RnsNumber((n % ms.p1, n % ms.p2, n % ms.p3), ms)


def decode(x: RnsNumber) -> int:
    """CRT reconstruction of the unique integer in ``[0, M)``."""
    ms = x.moduli
    total = 0
    for xi, (Mi, inv), p in zip(x.residues, ms.crt_coeffs, ms.moduli):
        total += Mi * ((xi * inv) % p)
    return total % ms.M


def _check_same(x: RnsNumber, y: RnsNumber) -> ModuliSet:
    if x.moduli != y.moduli:
        raise ModuliMismatchError(f"operands use moduli {x.moduli} and {y.moduli}")
    return x.moduli


def add(x: RnsNumber, y: RnsNumber) -> RnsNumber:
    ms = _check_same(x, y)
    return RnsNumber(tuple((a + b) % p for a, b, p in zip(x.residues, y.residues, ms.moduli)), ms)


def sub(x: RnsNumber, y: RnsNumber) -> RnsNumber:
    ms = _check_same(x, y)
    return RnsNumber(tuple((a - b) % p for a, b, p in zip(x.residues, y.residues, ms.moduli)), ms)


def mul(x: RnsNumber, y: RnsNumber) -> RnsNumber:
    ms = _check_same(x, y)
    return RnsNumber(tuple((a * b) % p for a, b, p in zip(x.residues, y.residues, ms.moduli)), ms)


def mrc_digits(x: RnsNumber) -> MrcDigits:
    """Sequential subtract-and-divide mixed-radix conversion."""
    ms = x.moduli
    inv12, inv13, inv23 = ms.mrc_coeffs
    x1, x2, x3 = x.residues
    a1 = x1
    a2 = ((x2 - a1) * inv12) % ms.p2
    t3 = ((x3 - a1) * inv13) % ms.p3
    a3 = ((t3 - a2) * inv23) % ms.p3
    return MrcDigits(a1, a2, a3)
