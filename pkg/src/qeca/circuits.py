"""Gate and circuit representation for classical-reversible / permutation circuits.

Three gate kinds cover everything the constructions need: X, SWAP, and a
multi-controlled X whose controls each carry a polarity (a negative control
fires on 0). Gates in a circuit execute first-to-last; note that when a
composition is written as a matrix product, the rightmost factor is the one
whose gates run first.

Wire 0 is the top wire in renderings and holds cell ``a_0``; basis states
encode as ``sum(a_i * 2**i)``, so wire i is bit i.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, NamedTuple

from .errors import CircuitParseError
from .rules import Configuration


class GateKind(Enum):
    X = "x"
    SWAP = "swap"
    MCX = "mcx"


@dataclass(frozen=True)
class Control:
    """A control wire; fires on 1 when positive, on 0 when negative."""

    wire: int
    positive: bool = True


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    targets: tuple[int, ...]
    controls: tuple[Control, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(self.targets))
        object.__setattr__(self, "controls", tuple(self.controls))
        wires = list(self.targets) + [c.wire for c in self.controls]
        if any(not isinstance(w, int) or w < 0 for w in wires):
            raise ValueError(f"wire indices must be non-negative integers: {wires}")
        if len(set(wires)) != len(wires):
            raise ValueError(f"gate wires must be distinct: {wires}")
        if self.kind is GateKind.X:
            if len(self.targets) != 1 or self.controls:
                raise ValueError("X takes exactly one target and no controls")
        elif self.kind is GateKind.SWAP:
            if len(self.targets) != 2 or self.controls:
                raise ValueError("SWAP takes exactly two targets and no controls")
        else:
            # an uncontrolled "MCX" would be an X in disguise; reject it so the
            # controls-match contract stays total
            if not self.targets or not self.controls:
                raise ValueError("MCX needs at least one target and one control")

    @classmethod
    def x(cls, wire: int) -> "Gate":
        return cls(GateKind.X, (wire,))

    @classmethod
    def swap(cls, a: int, b: int) -> "Gate":
        return cls(GateKind.SWAP, (a, b))

    @classmethod
    def mcx(cls, controls, targets) -> "Gate":
        ctrls = tuple(c if isinstance(c, Control) else Control(*c) for c in controls)
        return cls(GateKind.MCX, tuple(targets), ctrls)

    @classmethod
    def cnot(cls, control: int, target: int) -> "Gate":
        return cls.mcx([Control(control)], [target])

    def wires(self) -> tuple[int, ...]:
        """All wires the gate touches, ascending."""
        return tuple(sorted(list(self.targets) + [c.wire for c in self.controls]))

    @property
    def arity(self) -> int:
        return len(self.targets) + len(self.controls)


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list over ``n`` wires; gates apply left to right."""

    n: int
    gates: tuple[Gate, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.n < 1:
            raise ValueError(f"circuit needs at least one wire, got n={self.n}")
        for i, gate in enumerate(self.gates):
            high = max(gate.wires())
            if high >= self.n:
                raise ValueError(
                    f"gate {i} touches wire {high} but the circuit has {self.n} wires")

    @classmethod
    def empty(cls, n: int) -> "Circuit":
        return cls(n, ())

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def extended(self, gates) -> "Circuit":
        """A copy with ``gates`` appended."""
        return Circuit(self.n, self.gates + tuple(gates))


def apply_gate_to_bits(gate: Gate, bits: Configuration) -> Configuration:
    """Classical action of one gate on a configuration."""
    values = list(bits)
    high = max(gate.wires())
    if high >= len(values):
        raise ValueError(
            f"gate touches wire {high} but the configuration has {len(values)} cells")
    if gate.kind is GateKind.X:
        values[gate.targets[0]] ^= 1
    elif gate.kind is GateKind.SWAP:
        a, b = gate.targets
        values[a], values[b] = values[b], values[a]
    else:
        if all(values[c.wire] == int(c.positive) for c in gate.controls):
            for t in gate.targets:
                values[t] ^= 1
    return Configuration(tuple(values))


def _mirror_gate(gate: Gate, n: int) -> Gate:
    def m(w: int) -> int:
        return n - 1 - w

    return Gate(gate.kind,
                tuple(m(t) for t in gate.targets),
                tuple(Control(m(c.wire), c.positive) for c in gate.controls))


def reverse_circuit(circuit: Circuit) -> Circuit:
    """Mirror every wire index i to n-1-i; gate order and polarities unchanged.

    This is the vertical reflection of the diagram. On basis states it
    conjugates the circuit's permutation by bit reversal.
    """
    return Circuit(circuit.n, tuple(_mirror_gate(g, circuit.n) for g in circuit.gates))


def append_x_layer(circuit: Circuit) -> Circuit:
    """The circuit followed by an X gate on every wire (a full complement layer)."""
    return circuit.extended(Gate.x(w) for w in range(circuit.n))


def decompose_negative_controls(circuit: Circuit) -> Circuit:
    """Rewrite every negative control as X-conjugation of a positive one.

    Each negatively-controlled wire gets an X before and after the gate, and
    the control polarity flips to positive; the basis-state action is
    unchanged. Circuits without negative controls come back as-is.
    """
    if all(c.positive for g in circuit.gates for c in g.controls):
        return circuit
    gates: list[Gate] = []
    for gate in circuit.gates:
        flipped = sorted(c.wire for c in gate.controls if not c.positive)
        if not flipped:
            gates.append(gate)
            continue
        gates.extend(Gate.x(w) for w in flipped)
        gates.append(Gate(gate.kind, gate.targets,
                          tuple(Control(c.wire, True) for c in gate.controls)))
        gates.extend(Gate.x(w) for w in flipped)
    return Circuit(circuit.n, tuple(gates))


class CircuitStats(NamedTuple):
    gate_count: int
    max_arity: int


def stats(circuit: Circuit) -> CircuitStats:
    """Gate count and the largest number of wires any single gate touches."""
    if not circuit.gates:
        return CircuitStats(0, 0)
    return CircuitStats(len(circuit.gates),
                        max(g.arity for g in circuit.gates))


_POSITIVE_MARK = "●"  # filled dot
_NEGATIVE_MARK = "○"  # open dot
_TARGET_MARK = "⊕"  # circled plus
_SWAP_MARK = "×"
_WIRE = "─"
_LINK = "│"


def render_ascii(circuit: Circuit) -> str:
    """Text diagram: one row per wire (labeled by index), one column per gate.

    Positive controls are drawn ●, negative ○, X/MCX targets ⊕ and swap
    endpoints ×, with a vertical line through the wires a gate spans.
    """
    n = circuit.n
    label_width = len(str(n - 1))
    marks: dict[tuple[int, int], str] = {}
    spans: list[tuple[int, int]] = []
    for col, gate in enumerate(circuit.gates):
        symbol = _SWAP_MARK if gate.kind is GateKind.SWAP else _TARGET_MARK
        for t in gate.targets:
            marks[(t, col)] = symbol
        for c in gate.controls:
            marks[(c.wire, col)] = _POSITIVE_MARK if c.positive else _NEGATIVE_MARK
        wires = gate.wires()
        spans.append((wires[0], wires[-1]))

    cols = len(circuit.gates)
    lines = []
    for row in range(n):
        cells = "".join(
            f"{_WIRE}{marks.get((row, col), _WIRE)}{_WIRE}" for col in range(cols))
        lines.append(f"{row:>{label_width}}: {_WIRE}{cells}{_WIRE}")
        if row + 1 < n:
            links = "".join(
                f" {_LINK} " if lo <= row < hi else "   "
                for lo, hi in spans)
            lines.append(" " * (label_width + 3) + links)
    return "\n".join(lines) + "\n"


def _gate_to_json(gate: Gate) -> dict:
    obj: dict = {"kind": gate.kind.value, "targets": list(gate.targets)}
    if gate.kind is GateKind.MCX:
        obj["controls"] = [{"wire": c.wire, "positive": c.positive}
                           for c in gate.controls]
    return obj


def serialize(circuit: Circuit) -> str:
    """Circuit as canonical JSON text (stable key order, trailing newline)."""
    obj = {"n": circuit.n,
           "gates": [_gate_to_json(g) for g in circuit.gates]}
    return json.dumps(obj, indent=2) + "\n"


def _expect(condition: bool, message: str, location: str):
    if not condition:
        raise CircuitParseError(message, location)


def _parse_gate(obj, index: int) -> Gate:
    loc = f"$.gates[{index}]"
    _expect(isinstance(obj, dict), "gate must be an object", loc)
    kind_name = obj.get("kind")
    try:
        kind = GateKind(kind_name)
    except ValueError:
        raise CircuitParseError(f"unknown gate kind {kind_name!r}", loc) from None
    targets = obj.get("targets")
    _expect(isinstance(targets, list) and
            all(isinstance(t, int) and not isinstance(t, bool) for t in targets),
            "targets must be a list of integers", loc)
    raw_controls = obj.get("controls", [])
    _expect(isinstance(raw_controls, list), "controls must be a list", loc)
    controls = []
    for j, c in enumerate(raw_controls):
        cloc = f"{loc}.controls[{j}]"
        _expect(isinstance(c, dict) and isinstance(c.get("wire"), int)
                and not isinstance(c.get("wire"), bool)
                and isinstance(c.get("positive", True), bool),
                "control must be {wire: int, positive: bool}", cloc)
        controls.append(Control(c["wire"], c.get("positive", True)))
    try:
        return Gate(kind, tuple(targets), tuple(controls))
    except ValueError as exc:
        raise CircuitParseError(str(exc), loc) from None


def deserialize(text: str) -> Circuit:
    """Parse ``serialize`` output back into a circuit.

    Raises CircuitParseError with a JSON-path location on malformed input,
    unknown gate kinds, or out-of-range wire indices.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CircuitParseError(f"invalid JSON: {exc}", "$") from None
    _expect(isinstance(obj, dict), "top level must be an object", "$")
    n = obj.get("n")
    _expect(isinstance(n, int) and not isinstance(n, bool) and n >= 1,
            "field 'n' must be a positive integer", "$.n")
    raw_gates = obj.get("gates")
    _expect(isinstance(raw_gates, list), "field 'gates' must be a list", "$.gates")
    gates = [_parse_gate(g, i) for i, g in enumerate(raw_gates)]
    try:
        return Circuit(n, tuple(gates))
    except ValueError as exc:
        raise CircuitParseError(str(exc), "$.gates") from None
