"""
Comparing two RNS numbers
=========================

Compares residue triples from their clusters and the cluster of their
difference, then checks against CRT and mixed-radix comparison and times all
three.
"""

import numpy as np

from rnscluster import ModuliSet, compare, compare_batch, explain_compare
from rnscluster.harness import bench, bench_csv, verify

ms = ModuliSet(3, 5, 7)

# %%
# Two operands in different clusters are ordered by cluster alone.
print(explain_compare(ms.number(0, 1, 5), ms.number(2, 1, 4)))

# %%
# In the same cluster, the difference lands in cluster 1 if x > y and in
# cluster p1 if x < y (it wraps around M).
t = explain_compare(ms.number(0, 3, 0), ms.number(1, 2, 3))
print(f"Z = {t.z}, CL(Z) = {t.cl_z} -> {t.result}")
t = explain_compare(ms.number(1, 2, 3), ms.number(0, 3, 0))
print(f"Z = {t.z}, CL(Z) = {t.cl_z} -> {t.result}")

# %%
# The full order table for (3,5,7), vectorised.
n = np.arange(ms.M)
res = np.stack([n % ms.p1, n % ms.p2, n % ms.p3], axis=1)
xs = np.repeat(res, ms.M, axis=0)
ys = np.tile(res, (ms.M, 1))
order = compare_batch(ms, xs, ys).reshape(ms.M, ms.M)
assert (order == np.sign(n[:, None] - n[None, :])).all()
print("all", ms.M**2, "pairs ordered correctly")

# %%
# Verification report for the same set.
print(verify(ms).summary())

# %%
# Timing on one shared operand stream. Operands are encoded before timing.
print(bench_csv(bench(ms, 20_000, seed=1)))
