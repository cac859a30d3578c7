"""Exhaustive comparison of a netlist against the software cluster finder."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from ..cluster import cluster_of
from ..moduli import ModuliSet, encode
from .layout import BitLayout, LayoutWidthMismatchError, residue_widths
from .netlist import Netlist, simulate, truth_table


class SearchSpaceTooLargeError(ValueError):
    pass


@dataclass
class EquivalenceReport:
    """Agreement of a circuit with :func:`cluster_of` over every valid encoding.

    ``mismatches`` holds ``(n, expected cluster, cluster read from outputs)``.
    Inputs not named by the layout (``held``) were tied to ``held_value``.
    """

    moduli: ModuliSet
    layout: BitLayout
    total: int
    agree: int
    mismatches: list[tuple[int, int, int]] = field(default_factory=list)
    held: tuple[str, ...] = ()
    held_value: int = 0

    @property
    def full(self) -> bool:
        return self.agree == self.total

    def summary(self) -> str:
        tag = " FULL" if self.full else ""
        return f"{self.agree}/{self.total}{tag}  layout {self.layout.spec()}"

    def to_dict(self) -> dict:
        return {
            "moduli": list(self.moduli.moduli),
            "layout": self.layout.spec(),
            "total": self.total,
            "agree": self.agree,
            "full": self.full,
            "held": list(self.held),
            "held_value": self.held_value,
            "mismatches": [list(m) for m in self.mismatches],
        }


def _check_layout(net: Netlist, ms: ModuliSet, layout: BitLayout) -> tuple[str, ...]:
    layout.check_moduli(ms)
    unknown = set(layout.wires) - set(net.inputs)
    if unknown:
        raise LayoutWidthMismatchError(f"layout wires {sorted(unknown)} are not netlist inputs")
    return tuple(w for w in net.inputs if w not in set(layout.wires))


def _outputs_to_cluster(bits) -> int:
    return 1 + sum(b << k for k, b in enumerate(bits))


def check_equivalence(
    net: Netlist, ms: ModuliSet, layout: BitLayout, held_value: int = 0
) -> EquivalenceReport:
    held = _check_layout(net, ms, layout)
    agree = 0
    mismatches = []
    for n in range(ms.M):
        x = encode(n, ms)
        assignment = dict.fromkeys(held, held_value)
        assignment.update(layout.bits_for(x.residues))
        out = simulate(net, assignment)
        got = _outputs_to_cluster(out[o] for o in net.outputs)
        want = cluster_of(x)
        if got == want:
            agree += 1
        else:
            mismatches.append((n, want, got))
    return EquivalenceReport(ms, layout, ms.M, agree, mismatches, held, held_value)


def enumerate_layouts(
    wires: Sequence[str],
    ms: ModuliSet,
    groups: Sequence[Sequence[str]] | None = None,
):
    """Yield candidate layouts.

    Without ``groups`` every injective assignment of residue bit slots to
    wires is produced.  With ``groups`` (three wire lists) each group feeds a
    distinct residue, and each residue's bits are an ordered selection of
    wires from its group; this covers both bit orders.
    """
    widths = residue_widths(ms)
    slots = [(r + 1, b) for r in range(3) for b in range(widths[r])]
    if groups is None:
        for chosen in itertools.permutations(wires, len(slots)):
            yield BitLayout(widths, dict(zip(chosen, slots)))
        return
    if len(groups) != 3:
        raise ValueError("groups must name exactly three wire lists")
    for perm in itertools.permutations(range(3)):
        # perm[r] is the group feeding residue r+1
        per_residue = []
        for r in range(3):
            g = list(groups[perm[r]])
            if len(g) < widths[r]:
                break
            per_residue.append(list(itertools.permutations(g, widths[r])))
        else:
            for picks in itertools.product(*per_residue):
                assignment = {}
                for r, pick in enumerate(picks):
                    for b, w in enumerate(pick):
                        assignment[w] = (r + 1, b)
                yield BitLayout(widths, assignment)


def count_layouts(n_wires: int, ms: ModuliSet, groups=None) -> int:
    widths = residue_widths(ms)
    if groups is None:
        return math.perm(n_wires, sum(widths))
    total = 0
    for perm in itertools.permutations(range(3)):
        sizes = [len(groups[perm[r]]) for r in range(3)]
        if all(s >= w for s, w in zip(sizes, widths)):
            total += math.prod(math.perm(s, w) for s, w in zip(sizes, widths))
    return total


def search_bit_layouts(
    net: Netlist,
    ms: ModuliSet,
    groups: Sequence[Sequence[str]] | None = None,
    max_layouts: int = 200_000,
    held_value: int = 0,
) -> list[tuple[BitLayout, EquivalenceReport]]:
    """Score every candidate layout, best agreement first.

    The netlist is simulated once over all input patterns; each layout then
    only re-indexes that truth table.  Ties keep enumeration order.
    """
    if groups is not None:
        missing = {w for g in groups for w in g} - set(net.inputs)
        if missing:
            raise LayoutWidthMismatchError(f"group wires {sorted(missing)} are not netlist inputs")
    size = count_layouts(len(net.inputs), ms, groups)
    if size > max_layouts:
        raise SearchSpaceTooLargeError(f"{size} candidate layouts exceeds the cap of {max_layouts}")

    table = truth_table(net)
    position = {w: k for k, w in enumerate(net.inputs)}
    numbers = [encode(n, ms) for n in range(ms.M)]
    expected = [cluster_of(x) for x in numbers]

    results = []
    for layout in enumerate_layouts(net.inputs, ms, groups):
        held = tuple(w for w in net.inputs if w not in set(layout.wires))
        base = 0
        if held_value:
            for w in held:
                base |= 1 << position[w]
        agree = 0
        mismatches = []
        for n, x in enumerate(numbers):
            pattern = base
            for w, bit in layout.bits_for(x.residues).items():
                pattern |= bit << position[w]
            got = _outputs_to_cluster(table[pattern])
            if got == expected[n]:
                agree += 1
            else:
                mismatches.append((n, expected[n], got))
        report = EquivalenceReport(ms, layout, ms.M, agree, mismatches, held, held_value)
        results.append((layout, report))
    results.sort(key=lambda lr: -lr[1].agree)
    return results
