"""Combinational netlists: data model, text format and simulation.

Text format, one directive per line, ``#`` starts a comment::

    INPUT a b
    GATE g1 AND a b
    GATE g2 NOT g1
    OUTPUT g2

Gates may only read inputs or gates declared on earlier lines, which makes
every parsed netlist acyclic and already in topological order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

ARITY = {
    "AND": 2,
    "OR": 2,
    "XOR": 2,
    "NAND": 2,
    "NOR": 2,
    "NOT": 1,
    "BUF": 1,
}

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class NetlistError(Exception):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class NetlistSyntaxError(NetlistError):
    pass


class CycleError(NetlistError):
    """A gate reads a wire that is only defined later (or by itself)."""


class ArityError(NetlistError):
    pass


class UnknownWireError(NetlistError):
    pass


class MissingInputError(NetlistError):
    pass


@dataclass(frozen=True)
class Gate:
    name: str
    kind: str
    inputs: tuple[str, ...]


@dataclass(frozen=True)
class Netlist:
    inputs: tuple[str, ...]
    gates: tuple[Gate, ...]
    outputs: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        seen = set()
        for name in self.inputs:
            if name in seen:
                raise NetlistSyntaxError(f"wire {name!r} defined twice")
            seen.add(name)
        declared = set(seen) | {g.name for g in self.gates}
        for g in self.gates:
            if g.kind not in ARITY:
                raise NetlistSyntaxError(f"unknown gate kind {g.kind!r}")
            if len(g.inputs) != ARITY[g.kind]:
                raise ArityError(
                    f"{g.kind} gate {g.name!r} takes {ARITY[g.kind]} inputs, got {len(g.inputs)}"
                )
            for src in g.inputs:
                if src not in seen:
                    if src in declared:
                        raise CycleError(f"gate {g.name!r} reads {src!r} before it is defined")
                    raise UnknownWireError(f"gate {g.name!r} reads undefined wire {src!r}")
            if g.name in seen:
                raise NetlistSyntaxError(f"wire {g.name!r} defined twice")
            seen.add(g.name)
        for out in self.outputs:
            if out not in seen:
                raise UnknownWireError(f"output {out!r} is not a defined wire")

    @property
    def wires(self) -> list[str]:
        return list(self.inputs) + [g.name for g in self.gates]

    def used_inputs(self) -> set[str]:
        used = {src for g in self.gates for src in g.inputs} | set(self.outputs)
        return used & set(self.inputs)

    def gate_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for g in self.gates:
            counts[g.kind] = counts.get(g.kind, 0) + 1
        return counts


def _check_ident(token: str, line: int, column: int) -> str:
    if not _IDENT.match(token):
        raise NetlistSyntaxError(f"invalid identifier {token!r}", line, column)
    return token


def _tokens(text: str) -> Iterable[tuple[str, int]]:
    for m in re.finditer(r"\S+", text):
        yield m.group(), m.start() + 1


def parse_netlist(text: str) -> Netlist:
    inputs: list[str] = []
    gates: list[Gate] = []
    outputs: list[tuple[str, int, int]] = []
    defined: dict[str, int] = {}
    # (wire, line, column, reading gate) for reads of not-yet-defined wires
    pending: list[tuple[str, int, int, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = list(_tokens(body))
        if not toks:
            continue
        directive, dcol = toks[0]
        args = toks[1:]
        if directive == "INPUT":
            if not args:
                raise NetlistSyntaxError("INPUT needs at least one name", lineno, dcol)
            for tok, col in args:
                name = _check_ident(tok, lineno, col)
                if name in defined:
                    raise NetlistSyntaxError(f"wire {name!r} defined twice", lineno, col)
                defined[name] = lineno
                inputs.append(name)
        elif directive == "GATE":
            if len(args) < 2:
                raise NetlistSyntaxError("GATE needs an id and a kind", lineno, dcol)
            (gid, gcol), (kind, kcol) = args[0], args[1]
            gid = _check_ident(gid, lineno, gcol)
            if kind not in ARITY:
                raise NetlistSyntaxError(f"unknown gate kind {kind!r}", lineno, kcol)
            fanin = args[2:]
            if len(fanin) != ARITY[kind]:
                raise ArityError(
                    f"{kind} takes {ARITY[kind]} inputs, got {len(fanin)}", lineno, kcol
                )
            srcs = []
            for tok, col in fanin:
                src = _check_ident(tok, lineno, col)
                if src not in defined:
                    pending.append((src, lineno, col, gid))
                srcs.append(src)
            if gid in defined:
                raise NetlistSyntaxError(f"wire {gid!r} defined twice", lineno, gcol)
            defined[gid] = lineno
            gates.append(Gate(gid, kind, tuple(srcs)))
        elif directive == "OUTPUT":
            if not args:
                raise NetlistSyntaxError("OUTPUT needs at least one name", lineno, dcol)
            for tok, col in args:
                outputs.append((_check_ident(tok, lineno, col), lineno, col))
        else:
            raise NetlistSyntaxError(f"unknown directive {directive!r}", lineno, dcol)

    for src, lineno, col, gid in pending:
        if src in defined:
            raise CycleError(
                f"gate {gid!r} reads {src!r}, defined later on line {defined[src]}",
                lineno,
                col,
            )
        raise UnknownWireError(f"gate {gid!r} reads undefined wire {src!r}", lineno, col)
    for name, lineno, col in outputs:
        if name not in defined:
            raise UnknownWireError(f"output {name!r} is not a defined wire", lineno, col)

    return Netlist(tuple(inputs), tuple(gates), tuple(n for n, _, _ in outputs))


def format_netlist(net: Netlist, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" if h else "#" for h in header.splitlines())
    if net.inputs:
        lines.append("INPUT " + " ".join(net.inputs))
    for g in net.gates:
        lines.append(" ".join(["GATE", g.name, g.kind, *g.inputs]))
    if net.outputs:
        lines.append("OUTPUT " + " ".join(net.outputs))
    return "\n".join(lines) + "\n"


def _eval(kind: str, a: int, b: int, mask: int) -> int:
    if kind == "AND":
        return a & b
    if kind == "OR":
        return a | b
    if kind == "XOR":
        return a ^ b
    if kind == "NAND":
        return ~(a & b) & mask
    if kind == "NOR":
        return ~(a | b) & mask
    if kind == "NOT":
        return ~a & mask
    return a  # BUF


def simulate(net: Netlist, assignment: Mapping[str, int]) -> dict[str, int]:
    """Evaluate every gate once and return the output wire values."""
    values = _collect_inputs(net, assignment, lambda v: v in (0, 1))
    return _propagate(net, values, 1)


def simulate_words(net: Netlist, assignment: Mapping[str, int], width: int) -> dict[str, int]:
    """Bit-parallel simulation: bit ``k`` of every word is an independent vector."""
    mask = (1 << width) - 1
    values = _collect_inputs(net, assignment, lambda v: 0 <= v <= mask)
    return _propagate(net, values, mask)


def _collect_inputs(net, assignment, valid) -> dict[str, int]:
    values = {}
    for name in net.inputs:
        if name not in assignment:
            raise MissingInputError(f"no value for input {name!r}")
        v = int(assignment[name])
        if not valid(v):
            raise ValueError(f"bad value {assignment[name]!r} for input {name!r}")
        values[name] = v
    extra = set(assignment) - set(net.inputs)
    if extra:
        raise UnknownWireError(f"not inputs of this netlist: {sorted(extra)}")
    return values


def _propagate(net: Netlist, values: dict[str, int], mask: int) -> dict[str, int]:
    for g in net.gates:
        a = values[g.inputs[0]]
        b = values[g.inputs[1]] if len(g.inputs) > 1 else 0
        values[g.name] = _eval(g.kind, a, b, mask)
    return {out: values[out] for out in net.outputs}


def truth_table(net: Netlist) -> list[tuple[int, ...]]:
    """Outputs for every input pattern.

    Pattern ``k`` drives ``net.inputs[b]`` with bit ``b`` of ``k``.  Entry ``k``
    of the result is the tuple of output bits in ``net.outputs`` order.
    """
    n = len(net.inputs)
    if n > 20:
        raise ValueError(f"{n} inputs is too many for a full truth table")
    width = 1 << n
    words = {}
    for b, name in enumerate(net.inputs):
        # bit k of the word is bit b of pattern k
        w = 0
        for k in range(width):
            if (k >> b) & 1:
                w |= 1 << k
        words[name] = w
    outs = simulate_words(net, words, width)
    cols = [outs[o] for o in net.outputs]
    return [tuple((c >> k) & 1 for c in cols) for k in range(width)]
