"""Two-level sum-of-products synthesis of the cluster finder."""

from __future__ import annotations

from ..cluster import cluster_of
from ..moduli import ModuliSet, encode
from .layout import BitLayout, default_layout
from .netlist import Gate, Netlist


def output_width(ms: ModuliSet) -> int:
    return max(1, (ms.p1 - 1).bit_length())


def output_names(ms: ModuliSet) -> list[str]:
    return [f"cl{b}" for b in range(output_width(ms))]


def _and_chain(gates: list[Gate], prefix: str, terms: list[str]) -> str:
    acc = terms[0]
    for k, t in enumerate(terms[1:], start=1):
        name = f"{prefix}_{k}"
        gates.append(Gate(name, "AND", (acc, t)))
        acc = name
    return acc


def synthesize_cluster_circuit(ms: ModuliSet, layout: BitLayout | None = None) -> Netlist:
    """One minterm per valid encoding with a nonzero cluster code.

    Output ``cl<b>`` is bit ``b`` of ``cluster - 1``.  Bit patterns that encode
    no residue are don't-cares and are never covered.
    """
    if layout is None:
        layout = default_layout(ms)
    layout.check_moduli(ms)
    inputs = layout.wires
    gates: list[Gate] = [Gate(f"n_{w}", "NOT", (w,)) for w in inputs]
    nout = output_width(ms)
    covers: list[list[str]] = [[] for _ in range(nout)]

    for n in range(ms.M):
        x = encode(n, ms)
        code = cluster_of(x) - 1
        if code == 0:
            continue
        bits = layout.bits_for(x.residues)
        literals = [w if bits[w] else f"n_{w}" for w in inputs]
        term = _and_chain(gates, f"m{n}", literals)
        for b in range(nout):
            if (code >> b) & 1:
                covers[b].append(term)

    # codes 1..p1-1 set every output bit at least once, so no cover is empty
    for b, terms in enumerate(covers):
        src = terms[0]
        for k, t in enumerate(terms[1:], start=1):
            name = f"s{b}_{k}"
            gates.append(Gate(name, "OR", (src, t)))
            src = name
        gates.append(Gate(f"cl{b}", "BUF", (src,)))

    return Netlist(tuple(inputs), tuple(gates), tuple(output_names(ms)))
