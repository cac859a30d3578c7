"""The published two-cluster gate diagram for moduli (2,3,5)."""

from __future__ import annotations

from importlib import resources

from ..moduli import ModuliSet
from .netlist import Netlist, parse_netlist

#: Wire name groups as labelled next to the diagram: N1, N2, N3.
PAPER_GROUPS = (("N11", "N12"), ("N21", "N22"), ("N13", "N23", "N33"))


def paper_circuit_235_text() -> str:
    return resources.files(__package__).joinpath("data/cluster_235.net").read_text()


def paper_circuit_235() -> Netlist:
    return parse_netlist(paper_circuit_235_text())


def paper_moduli() -> ModuliSet:
    return ModuliSet(2, 3, 5)
