"""Mapping between residue bits and netlist input wires."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..moduli import ModuliSet, RnsNumber


class LayoutWidthMismatchError(ValueError):
    pass


def residue_widths(ms: ModuliSet) -> tuple[int, int, int]:
    """Bits needed for each residue, ``ceil(log2(p))``."""
    return tuple((p - 1).bit_length() for p in ms.moduli)


@dataclass(frozen=True)
class BitLayout:
    """Which input wire carries which residue bit.

    ``assignment`` maps a wire name to ``(residue, bit)``; ``residue`` is 1..3
    and ``bit`` is the binary weight exponent (0 is least significant).
    Every ``(residue, bit)`` slot below its width is carried by exactly one
    wire.  Netlist inputs absent from the layout are held at 0.
    """

    widths: tuple[int, int, int]
    assignment: tuple[tuple[str, tuple[int, int]], ...]

    def __post_init__(self):
        items = self.assignment
        if isinstance(items, Mapping):
            items = items.items()
        items = tuple(sorted(((w, tuple(s)) for w, s in items), key=lambda t: (t[1], t[0])))
        object.__setattr__(self, "assignment", items)
        object.__setattr__(self, "widths", tuple(self.widths))
        wires = [w for w, _ in items]
        if len(set(wires)) != len(wires):
            raise LayoutWidthMismatchError("a wire appears twice in the layout")
        slots = sorted(s for _, s in items)
        expected = [(r + 1, b) for r in range(3) for b in range(self.widths[r])]
        if slots != expected:
            raise LayoutWidthMismatchError(
                f"layout slots {slots} do not cover widths {self.widths} exactly once"
            )

    def as_dict(self) -> dict[str, tuple[int, int]]:
        return dict(self.assignment)

    @property
    def wires(self) -> list[str]:
        return [w for w, _ in self.assignment]

    def bits_for(self, residues) -> dict[str, int]:
        res = tuple(residues)
        return {w: (res[r - 1] >> b) & 1 for w, (r, b) in self.assignment}

    def check_moduli(self, ms: ModuliSet) -> None:
        if self.widths != residue_widths(ms):
            raise LayoutWidthMismatchError(
                f"layout widths {self.widths} do not match {residue_widths(ms)} for {ms}"
            )

    def spec(self) -> str:
        return ",".join(f"{w}={r}.{b}" for w, (r, b) in self.assignment)

    def __str__(self):
        return self.spec()

    @classmethod
    def parse(cls, text: str, ms: ModuliSet) -> BitLayout:
        """Parse ``wire=residue.bit,...``, e.g. ``N11=1.0,N12=2.0,N22=2.1``."""
        assignment = {}
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            try:
                wire, slot = item.split("=")
                r, b = slot.split(".")
                assignment[wire.strip()] = (int(r), int(b))
            except ValueError:
                raise ValueError(f"bad layout entry {item!r}, expected wire=residue.bit") from None
        return cls(residue_widths(ms), assignment)


def default_layout(ms: ModuliSet, prefix: str = "x") -> BitLayout:
    """Wires named ``x<residue>_<bit>``."""
    widths = residue_widths(ms)
    return BitLayout(
        widths,
        {f"{prefix}{r + 1}_{b}": (r + 1, b) for r in range(3) for b in range(widths[r])},
    )


def encoding_bits(layout: BitLayout, x: RnsNumber) -> dict[str, int]:
    return layout.bits_for(x.residues)
