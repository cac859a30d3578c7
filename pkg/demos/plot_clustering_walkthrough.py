"""
Finding the cluster of a residue triple
=======================================

Walks through cluster assignment for moduli (3, 5, 7) without ever
reconstructing the integer value.
"""

import numpy as np

from rnscluster import (
    ModuliSet,
    build_subgroup_table,
    cluster_of,
    cluster_of_trial,
    decode,
    enumerate_table1,
    relation_lhs,
    subgroup_index,
)

ms = ModuliSet(3, 5, 7)
print(f"M = {ms.M}, {ms.p1} clusters of width {ms.cluster_width}")

# %%
# The subgroup table: row r lists (r - i*(p3 mod p2)) mod p2 for i = 0..p2-1.
# Every row is a permutation, so x3 mod p2 picks out exactly one i.
table = build_subgroup_table(ms)
print(table.as_array())

# %%
# Members of group r=1 in cluster 1, with their residues.
for row in enumerate_table1(ms, 1, 1):
    print(row)

# %%
# Step through (2,1,4): group r = x2, subgroup from the table, then try
# m = 1..p1 until the congruence holds.
x = ms.number(2, 1, 4)
i = subgroup_index(table, x.x2, x.x3)
print(f"r = {x.x2}, x3 mod p2 = {x.x3 % ms.p2} -> i = {i}")
for m in range(1, ms.p1 + 1):
    lhs = relation_lhs(ms, x.x3, i, m)
    print(f"  m={m}: lhs={lhs} {'==' if lhs == x.x1 else '!='} x1={x.x1}")
print("cluster", cluster_of_trial(x), "closed form", cluster_of(x), "value", decode(x))

# %%
# The cluster map over the whole range is a staircase.
clusters = np.array([cluster_of(ms.encode(n)) for n in range(ms.M)])
print(np.bincount(clusters)[1:])
assert (clusters == np.arange(ms.M) // ms.cluster_width + 1).all()

# %%
# Moduli need not be increasing.
for ps in [(3, 7, 5), (7, 3, 5), (2, 9, 25)]:
    other = ModuliSet(*ps)
    ok = all(cluster_of(other.encode(n)) == n // other.cluster_width + 1 for n in range(other.M))
    print(ps, "all clusters correct:", ok)
