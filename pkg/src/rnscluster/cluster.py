"""Cluster assignment for residue triples.

The range ``[0, M)`` is split into ``p1`` clusters of width ``p2*p3``; cluster
``m`` (1-based) holds ``[(m-1)*p2*p3, m*p2*p3)``.  Inside a cluster a number is
``(m-1)*p2*p3 + j*p2 + r`` with ``r = x2``.  Writing ``x3 = j*p2 + r - i*p3``,
the subgroup index ``i`` is fixed by ``x3 mod p2 = (r - i*(p3 mod p2)) mod p2``,
and ``m`` then follows from the congruence

    (x3 + i*p3 + (m-1)*p2*p3) mod p1 == x1

No positional value is ever reconstructed.  :func:`cluster_of` solves both steps
in closed form with precomputed inverses; :func:`cluster_of_trial` does the
table lookup and tries ``m = 1..p1`` in turn; :func:`cluster_oracle` decodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import NoSolutionError, OutOfRangeError
from .moduli import ModuliSet, RnsNumber, decode


@dataclass(frozen=True)
class SubgroupTable:
    """``s[r][i] = (r - i*q32) mod p2`` and its row-wise inverse."""

    moduli: ModuliSet
    s: tuple[tuple[int, ...], ...]
    inv: tuple[tuple[int, ...], ...]

    def row(self, r: int) -> tuple[int, ...]:
        return self.s[r]

    def as_array(self) -> np.ndarray:
        return np.array(self.s, dtype=np.int64)


@lru_cache(maxsize=256)
def build_subgroup_table(ms: ModuliSet) -> SubgroupTable:
    p2, q = ms.p2, ms.q32
    s = tuple(tuple((r - i * q) % p2 for i in range(p2)) for r in range(p2))
    inv = []
    for row in s:
        lookup = [0] * p2
        for i, v in enumerate(row):
            lookup[v] = i
        inv.append(tuple(lookup))
    return SubgroupTable(ms, s, tuple(inv))


def subgroup_index(table: SubgroupTable, r: int, x3: int) -> int:
    """Look up the ``i`` whose table entry in row ``r`` equals ``x3 mod p2``."""
    ms = table.moduli
    if not (0 <= r < ms.p2 and 0 <= x3 < ms.p3):
        raise OutOfRangeError(f"(r={r}, x3={x3}) outside moduli {ms}")
    return table.inv[r][x3 % ms.p2]


def subgroup_index_closed(ms: ModuliSet, r: int, x3: int) -> int:
    return ((r - x3) * ms.inv_q32) % ms.p2


def relation_lhs(ms: ModuliSet, c: int, i: int, m: int) -> int:
    """Left side of the cluster relation, ``(c + i*p3 + (m-1)*p2*p3) mod p1``."""
    return (c + i * ms.p3 + (m - 1) * ms.cluster_width) % ms.p1


def cluster_of(x: RnsNumber) -> int:
    return cluster_of_residues(x.moduli, *x.residues)


def cluster_of_residues(ms: ModuliSet, x1: int, x2: int, x3: int) -> int:
    """Closed-form cluster of an unchecked residue triple."""
    i = ((x2 - x3) * ms.inv_q32) % ms.p2
    return 1 + ((x1 - x3 - i * ms.p3) * ms.inv_w1) % ms.p1


def cluster_of_trial(x: RnsNumber) -> int:
    ms = x.moduli
    x1, x2, x3 = x.residues
    i = subgroup_index(build_subgroup_table(ms), x2, x3)
    for m in range(1, ms.p1 + 1):
        if relation_lhs(ms, x3, i, m) == x1:
            return m
    raise NoSolutionError(f"no cluster satisfies the relation for {x} in {ms}")


def cluster_oracle(x: RnsNumber) -> int:
    return decode(x) // x.moduli.cluster_width + 1


def cluster_of_batch(ms: ModuliSet, residues) -> np.ndarray:
    """Vectorised :func:`cluster_of` over an ``(n, 3)`` array of residues."""
    res = np.asarray(residues, dtype=np.int64)
    x1, x2, x3 = res[:, 0], res[:, 1], res[:, 2]
    i = ((x2 - x3) * ms.inv_q32) % ms.p2
    return 1 + (((x1 - x3 - i * ms.p3) % ms.p1) * ms.inv_w1) % ms.p1


class Table1Row(NamedTuple):
    j: int
    N: int
    A: int
    B: int
    C: int


def enumerate_table1(ms: ModuliSet, m: int, r: int) -> list[Table1Row]:
    """Members of group ``r`` in cluster ``m``, in increasing order."""
    if not 1 <= m <= ms.p1:
        raise OutOfRangeError(f"cluster {m} not in [1, {ms.p1}]")
    if not 0 <= r < ms.p2:
        raise OutOfRangeError(f"group {r} not in [0, {ms.p2})")
    base = (m - 1) * ms.cluster_width
    rows = []
    for j in range(ms.p3):
        n = base + j * ms.p2 + r
        rows.append(Table1Row(j, n, n % ms.p1, n % ms.p2, (j * ms.p2 + r) % ms.p3))
    return rows
