"""Magnitude comparison of residue triples.

:func:`compare` decides order from three cluster indices (both operands and
their modular difference) and never leaves the residue domain.  The CRT and
MRC comparators convert to a positional form first; they are the ground truth
for tests and the baselines for benchmarking.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .cluster import cluster_of, cluster_of_batch, cluster_of_residues
from .errors import InternalInconsistencyError, ModuliMismatchError
from .moduli import ModuliSet, RnsNumber, decode, mrc_digits, sub


class ComparisonResult(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def swapped(self) -> ComparisonResult:
        return ComparisonResult(-self.value)

    @classmethod
    def of_ints(cls, a: int, b: int) -> ComparisonResult:
        return cls((a > b) - (a < b))

    def __str__(self):
        return self.name


LESS = ComparisonResult.LESS
EQUAL = ComparisonResult.EQUAL
GREATER = ComparisonResult.GREATER


def _same_moduli(x: RnsNumber, y: RnsNumber) -> ModuliSet:
    if x.moduli != y.moduli:
        raise ModuliMismatchError(f"operands use moduli {x.moduli} and {y.moduli}")
    return x.moduli


def compare(x: RnsNumber, y: RnsNumber) -> ComparisonResult:
    ms = x.moduli
    if ms is not y.moduli and ms != y.moduli:
        raise ModuliMismatchError(f"operands use moduli {x.moduli} and {y.moduli}")
    p1, p2, p3 = ms.p1, ms.p2, ms.p3
    x1, x2, x3 = x.residues
    y1, y2, y3 = y.residues
    z1, z2, z3 = (x1 - y1) % p1, (x2 - y2) % p2, (x3 - y3) % p3
    if not (z1 or z2 or z3):
        return EQUAL
    cx = cluster_of_residues(ms, x1, x2, x3)
    cy = cluster_of_residues(ms, y1, y2, y3)
    if cx > cy:
        return GREATER
    if cx < cy:
        return LESS
    cz = cluster_of_residues(ms, z1, z2, z3)
    if cz == 1:
        return GREATER
    if cz == ms.p1:
        return LESS
    raise InternalInconsistencyError(
        f"CL(x)=CL(y)={cx} but CL(x-y)={cz} for x={x}, y={y} in {ms}"
    )


@dataclass(frozen=True)
class ComparisonTrace:
    """Intermediate values of one :func:`compare` call."""

    x: RnsNumber
    y: RnsNumber
    z: RnsNumber
    cl_x: int
    cl_y: int
    cl_z: int
    result: ComparisonResult


def explain_compare(x: RnsNumber, y: RnsNumber) -> ComparisonTrace:
    """Same decision as :func:`compare`, keeping every cluster index."""
    _same_moduli(x, y)
    z = sub(x, y)
    return ComparisonTrace(
        x, y, z, cluster_of(x), cluster_of(y), cluster_of(z), compare(x, y)
    )


def compare_crt(x: RnsNumber, y: RnsNumber) -> ComparisonResult:
    _same_moduli(x, y)
    return ComparisonResult.of_ints(decode(x), decode(y))


def compare_mrc(x: RnsNumber, y: RnsNumber) -> ComparisonResult:
    _same_moduli(x, y)
    a, b = mrc_digits(x), mrc_digits(y)
    # most significant digit first
    return ComparisonResult.of_ints(a[::-1], b[::-1])


def compare_batch(ms: ModuliSet, xs, ys) -> np.ndarray:
    """Vectorised :func:`compare` on ``(n, 3)`` residue arrays.

    Returns an int8 array of -1/0/1.  Rows where the difference lands outside
    clusters 1 and p1 for same-cluster operands raise, as in the scalar path.
    """
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    mods = np.array(ms.moduli, dtype=np.int64)
    zs = (xs - ys) % mods
    cx = cluster_of_batch(ms, xs)
    cy = cluster_of_batch(ms, ys)
    cz = cluster_of_batch(ms, zs)
    out = np.sign(cx - cy).astype(np.int8)
    tie = cx == cy
    zero = ~zs.any(axis=1)
    out[tie & (cz == 1)] = 1
    out[tie & (cz == ms.p1)] = -1
    out[zero] = 0
    bad = tie & ~zero & (cz != 1) & (cz != ms.p1)
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        raise InternalInconsistencyError(
            f"CL(x)=CL(y) but CL(x-y)={int(cz[k])} at row {k} in {ms}"
        )
    return out
