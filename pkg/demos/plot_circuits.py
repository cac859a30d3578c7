"""
Gate-level cluster finders
==========================

Synthesizes sum-of-products cluster circuits, then audits the published
two-cluster diagram for moduli (2,3,5) against every bit layout and writes
the report to docs/published_circuit_audit.md.
"""

from collections import Counter
from pathlib import Path

from rnscluster import ModuliSet
from rnscluster.circuit import (
    PAPER_GROUPS,
    check_equivalence,
    default_layout,
    format_netlist,
    paper_circuit_235,
    search_bit_layouts,
    synthesize_cluster_circuit,
)

ms = ModuliSet(2, 3, 5)

# %%
# Synthesis: one minterm per valid encoding in the upper cluster.
net = synthesize_cluster_circuit(ms)
print(net.gate_counts(), check_equivalence(net, ms, default_layout(ms)).summary())

# %%
# The published diagram, transcribed gate by gate.
published = paper_circuit_235()
print(format_netlist(published))

# %%
# Score it under every assignment of the 6 residue bits to the 7 input wires,
# with the spare wire tied low and then high, and under the labelled groups.
runs = {
    "all layouts, spare input = 0": search_bit_layouts(published, ms, held_value=0),
    "all layouts, spare input = 1": search_bit_layouts(published, ms, held_value=1),
    "labelled groups, spare input = 0": search_bit_layouts(published, ms, PAPER_GROUPS, held_value=0),
    "labelled groups, spare input = 1": search_bit_layouts(published, ms, PAPER_GROUPS, held_value=1),
}

lines = [
    "# Audit of the published (2,3,5) cluster circuit",
    "",
    "Generated by `demos/plot_circuits.py`. The circuit is scored against the",
    "software cluster finder on all 30 valid encodings for every candidate",
    "layout. A layout maps each residue bit (residue.bit, bit 0 least",
    "significant) to one input wire. Inputs left out of a layout are tied to",
    "the stated constant. Residue widths are 1, 2 and 3 bits, so one of the",
    "seven input wires is always spare.",
    "",
    "| search | layouts | full agreement | best | histogram (agree: count) |",
    "|---|---|---|---|---|",
]
for name, results in runs.items():
    hist = Counter(r.agree for _, r in results)
    hist_s = ", ".join(f"{k}: {hist[k]}" for k in sorted(hist, reverse=True))
    full = sum(r.full for _, r in results)
    lines.append(f"| {name} | {len(results)} | {full} | {results[0][1].agree}/30 | {hist_s} |")

lines += ["", "## Best layouts", ""]
for name, results in runs.items():
    lines.append(f"### {name}")
    lines.append("")
    best = results[0][1].agree
    for _, r in results:
        if r.agree < best:
            break
        lines.append(f"- `{r.layout.spec()}`: {r.agree}/30, wrong on n = "
                     + ", ".join(str(n) for n, _, _ in r.mismatches))
    lines.append("")

natural = "N11=1.0,N12=2.0,N22=2.1,N13=3.0,N23=3.1,N33=3.2"
rep = next(r for l, r in runs["all layouts, spare input = 0"] if l.spec() == natural)
lines += [
    "## Reading the names as N{bit}{residue}",
    "",
    "Reading the wire names as bit index then residue index gives residue 1 on",
    "N11, residue 2 on N12/N22 and residue 3 on N13/N23/N33, with N21 as the",
    f"unused bit. Under that layout the circuit agrees on {rep.agree}/30 values.",
    "",
    "## Conclusion",
    "",
    "No layout, group assignment, bit order or spare-input value makes the",
    "diagram agree with the cluster finder on all 30 valid inputs.",
    "",
]
text = "\n".join(lines)
print(text)
out = Path(__file__).resolve().parent.parent / "docs" / "published_circuit_audit.md"
out.write_text(text)
