"""Brute-force references that share no code with the library."""


def value_by_search(residues, moduli):
    """Smallest n >= 0 whose residues match, found by scanning."""
    p1, p2, p3 = moduli
    for n in range(p1 * p2 * p3):
        if (n % p1, n % p2, n % p3) == tuple(residues):
            return n
    raise AssertionError("no solution")


def mrc_by_enumeration(n, moduli):
    p1, p2, p3 = moduli
    hits = [
        (a1, a2, a3)
        for a1 in range(p1)
        for a2 in range(p2)
        for a3 in range(p3)
        if a1 + a2 * p1 + a3 * p1 * p2 == n
    ]
    assert len(hits) == 1
    return hits[0]


def subgroup_by_division(n_offset, p3):
    """Subgroup index of an in-cluster offset, by integer division."""
    return n_offset // p3
