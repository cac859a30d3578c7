"""Gate-level cluster finders: netlists, synthesis and equivalence checks."""

from .equivalence import (
    EquivalenceReport,
    SearchSpaceTooLargeError,
    check_equivalence,
    count_layouts,
    enumerate_layouts,
    search_bit_layouts,
)
from .layout import BitLayout, LayoutWidthMismatchError, default_layout, residue_widths
from .netlist import (
    ArityError,
    CycleError,
    Gate,
    MissingInputError,
    Netlist,
    NetlistError,
    NetlistSyntaxError,
    UnknownWireError,
    format_netlist,
    parse_netlist,
    simulate,
    simulate_words,
    truth_table,
)
from .paper import PAPER_GROUPS, paper_circuit_235, paper_moduli
from .synth import output_names, output_width, synthesize_cluster_circuit

__all__ = [
    "ArityError",
    "BitLayout",
    "CycleError",
    "EquivalenceReport",
    "Gate",
    "LayoutWidthMismatchError",
    "MissingInputError",
    "Netlist",
    "NetlistError",
    "NetlistSyntaxError",
    "PAPER_GROUPS",
    "SearchSpaceTooLargeError",
    "UnknownWireError",
    "check_equivalence",
    "count_layouts",
    "default_layout",
    "enumerate_layouts",
    "format_netlist",
    "output_names",
    "output_width",
    "paper_circuit_235",
    "paper_moduli",
    "parse_netlist",
    "residue_widths",
    "search_bit_layouts",
    "simulate",
    "simulate_words",
    "synthesize_cluster_circuit",
    "truth_table",
]
