"""Executing circuits on basis states, permutations, and full state vectors.

Index convention, used everywhere: basis index k corresponds to the
configuration with ``sum(a_i * 2**i) == k``, i.e. cell / wire 0 is the least
significant bit of k, even though it is drawn as the top wire.

A circuit built from X / SWAP / MCX gates acts on basis states as a
permutation, so a state vector is never multiplied by a matrix here:
amplitudes are relocated by the extracted permutation, which preserves the
norm bit-exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import kernels
from .circuits import Circuit, Gate, GateKind, apply_gate_to_bits
from .errors import CapacityError, NotReversibleError
from .reversibility import reversibility_predicate
from .rules import PERIODIC, BoundaryCondition, Configuration, Rule
from .synthesis import synthesize

#: Permutation extraction enumerates 2**n basis states up to this n.
MAX_PERMUTATION_CELLS = 20

#: Dense state vectors are capped a bit lower (16M complex amplitudes).
MAX_STATEVECTOR_CELLS = 16


def simulate_basis(circuit: Circuit, bits: Configuration) -> Configuration:
    """Run the circuit on one classical basis state."""
    if len(bits) != circuit.n:
        raise ValueError(
            f"configuration has {len(bits)} cells but the circuit has {circuit.n} wires")
    for gate in circuit.gates:
        bits = apply_gate_to_bits(gate, bits)
    return bits


@dataclass(frozen=True)
class Permutation:
    """Bijection on basis indices 0 .. 2**n - 1; ``image[k]`` is where k goes."""

    n: int
    image: np.ndarray

    def __post_init__(self):
        image = np.asarray(self.image, dtype=np.int64)
        object.__setattr__(self, "image", image)
        if image.shape != (1 << self.n,):
            raise ValueError(f"image must have 2**{self.n} entries")
        seen = np.zeros(image.size, dtype=bool)
        seen[image] = True
        if not seen.all():
            raise ValueError("image is not a bijection")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Permutation) and self.n == other.n
                and bool(np.array_equal(self.image, other.image)))

    def compose_after(self, first: "Permutation") -> "Permutation":
        """The permutation 'first, then self'."""
        if self.n != first.n:
            raise ValueError("permutation sizes differ")
        return Permutation(self.n, self.image[first.image])


def _gate_image(gate: Gate, states: np.ndarray) -> np.ndarray:
    if gate.kind is GateKind.X:
        return states ^ (1 << gate.targets[0])
    if gate.kind is GateKind.SWAP:
        a, b = gate.targets
        diff = ((states >> a) ^ (states >> b)) & 1
        return states ^ ((diff << a) | (diff << b))
    positive = sum(1 << c.wire for c in gate.controls if c.positive)
    negative = sum(1 << c.wire for c in gate.controls if not c.positive)
    fire = ((states & positive) == positive) & ((states & negative) == 0)
    flip = sum(1 << t for t in gate.targets)
    return states ^ np.where(fire, flip, 0)


def circuit_permutation(circuit: Circuit) -> Permutation:
    """Extract the basis-state permutation the circuit induces.

    The bijection is re-verified on construction; a failure would mean a bug
    in the gate primitives, not bad input.
    """
    if circuit.n > MAX_PERMUTATION_CELLS:
        raise CapacityError(
            f"n={circuit.n} exceeds the permutation guard of {MAX_PERMUTATION_CELLS}")
    states = np.arange(1 << circuit.n, dtype=np.int64)
    for gate in circuit.gates:
        states = _gate_image(gate, states)
    try:
        return Permutation(circuit.n, states)
    except ValueError as exc:  # pragma: no cover - gate primitives are bijective
        raise RuntimeError(f"circuit action is not a permutation: {exc}") from exc


@dataclass(frozen=True)
class StateVector:
    """2**n complex amplitudes; index k labels basis configuration k."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise ValueError(f"expected 2**{self.n} amplitudes, got shape {amps.shape}")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, n: int, index: int | Configuration) -> "StateVector":
        """The computational basis state |index>."""
        k = index.to_int() if isinstance(index, Configuration) else int(index)
        amps = np.zeros(1 << n, dtype=np.complex128)
        amps[k] = 1.0
        return cls(n, amps)

    @classmethod
    def uniform(cls, n: int) -> "StateVector":
        size = 1 << n
        return cls(n, np.full(size, 1.0 / np.sqrt(size), dtype=np.complex128))

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "StateVector":
        norm = self.norm()
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return StateVector(self.n, self.amplitudes / norm)

    def to_json_dict(self) -> dict:
        return {"n": self.n,
                "amplitudes": [[a.real, a.imag] for a in self.amplitudes]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "StateVector":
        obj = json.loads(text)
        if not isinstance(obj, dict) or not isinstance(obj.get("n"), int):
            raise ValueError("state vector JSON needs an integer field 'n'")
        pairs = obj.get("amplitudes")
        if not isinstance(pairs, list):
            raise ValueError("state vector JSON needs an 'amplitudes' list")
        try:
            amps = np.array([complex(re, im) for re, im in pairs],
                            dtype=np.complex128)
        except (TypeError, ValueError):
            raise ValueError("amplitudes must be [re, im] pairs") from None
        return cls(obj["n"], amps)


def simulate_statevector(circuit: Circuit, state: StateVector) -> StateVector:
    """Apply the circuit's permutation to the amplitudes.

    Pure relocation: amplitude values are moved, never combined or scaled, so
    the norm is conserved exactly.
    """
    if state.n != circuit.n:
        raise ValueError(
            f"state has {state.n} qubits but the circuit has {circuit.n} wires")
    if circuit.n > MAX_STATEVECTOR_CELLS:
        raise CapacityError(
            f"n={circuit.n} exceeds the state-vector guard of {MAX_STATEVECTOR_CELLS}")
    image = circuit_permutation(circuit).image
    out = np.empty_like(state.amplitudes)
    out[image] = state.amplitudes
    return StateVector(state.n, out)


def verify_implementation(rule: Rule | int, n: int, bc: BoundaryCondition) -> bool:
    """Exhaustively compare the synthesized circuit with classical stepping.

    True iff the circuit maps every one of the 2**n basis states exactly the
    way one automaton step does.
    """
    code = Rule.coerce(rule).code
    if n > MAX_STATEVECTOR_CELLS:
        raise CapacityError(
            f"n={n} exceeds the verification guard of {MAX_STATEVECTOR_CELLS}")
    if not reversibility_predicate(code, n, bc):
        raise NotReversibleError(
            f"rule {code} is not reversible at n={n} with {bc.value} boundary")
    circuit = synthesize(code, n, bc)
    image = circuit_permutation(circuit).image
    expected = kernels.rule_outputs(code, n, bc is PERIODIC)
    return bool(np.array_equal(image, expected.astype(np.int64)))
