"""Circuit constructions for every reversible rule at every valid (n, bc).

Five rules get purpose-built circuits (170, 60, 90, 150, 166); the other 17
reduce to them through three combinators: a trailing X layer (complemented
rules), wire mirroring (left/right reflected rules), and X-layer conjugation
(rule 154). Composition is plain gate-list concatenation in execution order,
with no algebraic simplification, so the structure of each construction stays
visible in the output.

The non-trivial constructions share a 3-step pattern: step 1 sweeps local
gates bottom-to-top so wire i holds the successor of cell i-1 for i >= 2;
step 2 fixes up wires 0 and 1 (this is where the boundary condition bites);
step 3 is a circular left shift. Every builder here is validated exhaustively
against classical stepping in the tests, which is what pins down the two
step-2 loop-bound subtleties noted inline.
"""

from __future__ import annotations

from .circuits import Circuit, Control, Gate, append_x_layer, reverse_circuit
from .errors import NotReversibleError
from .reversibility import (MAX_BRUTEFORCE_CELLS, is_reversible_bruteforce,
                            reversibility_predicate)
from .rules import FIXED, PERIODIC, BoundaryCondition, Rule

#: Rules whose circuits contain the wide multi-controlled gates of the
#: rule-166 construction; everything else sticks to gates on <= 3 wires.
RULE_166_FAMILY: frozenset[int] = frozenset({45, 75, 89, 101, 154, 166, 180, 210})

#: Smallest cell count any synthesized circuit supports.
MIN_CELLS = 3

#: Witness search is attempted up to this size when synthesis is refused.
_WITNESS_CELL_LIMIT = 14


def left_shift_circuit(n: int) -> Circuit:
    """Circular left shift by one cell: SWAP(0,1), SWAP(1,2), ..., SWAP(n-2,n-1).

    The swap staircase bubbles cell 0 to the far end while every other cell
    moves one place down; this is the circuit for rule 170 (periodic).
    """
    if n < 2:
        raise ValueError(f"left shift needs at least 2 wires, got n={n}")
    return Circuit(n, tuple(Gate.swap(i, i + 1) for i in range(n - 1)))


def rule60_circuit(n: int) -> Circuit:
    """Rule 60 (fixed boundary): XOR every cell into its right neighbor, in place.

    CNOT(i, i+1) for i = n-2 down to 0. The descending order matters: a wire
    must not serve as a control after it has been modified.
    """
    _require_cells(n)
    return Circuit(n, tuple(Gate.cnot(i, i + 1) for i in range(n - 2, -1, -1)))


def rule90_circuit(n: int) -> Circuit:
    """Rule 90 (fixed boundary, even n): every cell becomes the XOR of its neighbors.

    Step 1: CNOT(i, i+2) for i = n-3 down to 0, leaving wire i with the
    successor of cell i-1. Step 2 rebuilds wire 0 from the even wires
    (CNOT(i, 0) for even i = n-2 down to 2; wire 1 already holds what it
    needs). Step 3 shifts left.
    """
    _require_cells(n)
    if n % 2 != 0:
        raise NotReversibleError(
            f"rule 90 with fixed boundary is irreversible at odd n={n}",
            witness=None)
    gates = [Gate.cnot(i, i + 2) for i in range(n - 3, -1, -1)]
    gates += [Gate.cnot(i, 0) for i in range(n - 2, 1, -2)]
    return Circuit(n, tuple(gates)).extended(left_shift_circuit(n).gates)


def rule150_circuit(n: int, bc: BoundaryCondition) -> Circuit:
    """Rule 150: every cell becomes the XOR of itself and both neighbors.

    Step 1 applies the pair CNOT(i-2, i); CNOT(i-1, i) for i = n-1 down to 2.
    Step 2 depends on the boundary condition and n mod 3 (the excluded
    combinations are exactly the irreversible ones); the periodic n % 3 == 2
    case starts with a SWAP(0, 1). Step 3 shifts left.
    """
    _require_cells(n)
    rem = n % 3
    if (bc is PERIODIC and rem == 0) or (bc is FIXED and rem == 2):
        raise NotReversibleError(
            f"rule 150 is irreversible at n % 3 == {rem} with {bc.value} boundary",
            witness=None)
    gates = []
    for i in range(n - 1, 1, -1):
        gates += [Gate.cnot(i - 2, i), Gate.cnot(i - 1, i)]
    if bc is PERIODIC:
        if rem == 2:
            gates.append(Gate.swap(0, 1))
        first_low = 1 if rem == 1 else 2
        gates += [Gate.cnot(i, 0) for i in range(n - 1, first_low - 1, -1)
                  if (n - i) % 3 != 2]
        gates += [Gate.cnot(i, 1) for i in range(n - 1, 1, -1)
                  if (n - i) % 3 != 0]
    else:
        gates.append(Gate.cnot(0, 1))
        gates += [Gate.cnot(i, 0) for i in range(n - 1, 0, -1)
                  if (n - i) % 3 != 2]
    return Circuit(n, tuple(gates)).extended(left_shift_circuit(n).gates)


def _mcx_negative_first(negative: int, positives: list[int], target: int) -> Gate:
    controls = [Control(negative, positive=False)]
    controls += [Control(w) for w in positives]
    return Gate.mcx(controls, [target])


def rule166_circuit(n: int) -> Circuit:
    """Rule 166 (periodic boundary, odd n): cell becomes r XOR (NOT l AND c).

    Step 1: flip wire i iff wire i-1 is 1 and wire i-2 is 0, for i = n-1 down
    to 2 (a doubly-controlled X with a negative first control).

    Step 2 repairs wires 0 and 1 with two families of wide gates indexed by
    i = 0, 1, ...; instances whose leading (negative) control would fall off
    the register are dropped, which caps both families at i <= (n-3)/2:

    * target 1: negative control 2i+2, then positive controls on the odd
      wires 2i+3, 2i+5, ..., n-2 and on wire 0;
    * target 0: negative control 2i+1, then positive controls on the even
      wires 2i+2, 2i+4, ..., n-3 and on wire n-1.

    Step 3 shifts left. The family shapes (wire 0 / wire n-1 participating as
    controls, single target each) are pinned by exhaustive equivalence tests.
    """
    _require_cells(n)
    if n % 2 == 0:
        raise NotReversibleError(
            f"rule 166 with periodic boundary is irreversible at even n={n}",
            witness=None)
    gates = [
        Gate.mcx([Control(i - 2, positive=False), Control(i - 1)], [i])
        for i in range(n - 1, 1, -1)
    ]
    for i in range(0, n // 2 + 1):
        neg = 2 * i + 2
        if neg > n - 1:
            continue
        gates.append(_mcx_negative_first(
            neg, list(range(2 * i + 3, n - 1, 2)) + [0], target=1))
    for i in range(0, n // 2 + 1):
        neg = 2 * i + 1
        if neg > n - 1:
            continue
        gates.append(_mcx_negative_first(
            neg, list(range(2 * i + 2, n - 2, 2)) + [n - 1], target=0))
    return Circuit(n, tuple(gates)).extended(left_shift_circuit(n).gates)


def _prepend_conjugating_x_layer(circuit: Circuit) -> Circuit:
    layer = tuple(Gate.x(w) for w in range(circuit.n))
    return Circuit(circuit.n, layer + circuit.gates + layer)


def _build(code: int, n: int, bc: BoundaryCondition) -> Circuit:
    if code == 204:
        return Circuit.empty(n)
    if code == 51:
        return append_x_layer(Circuit.empty(n))
    if code == 170:
        return left_shift_circuit(n)
    if code == 240:
        return reverse_circuit(left_shift_circuit(n))
    if code == 60:
        return rule60_circuit(n)
    if code == 90:
        return rule90_circuit(n)
    if code == 150:
        return rule150_circuit(n, bc)
    if code == 166:
        return rule166_circuit(n)
    if code == 102:
        return reverse_circuit(rule60_circuit(n))
    if code == 180:
        return reverse_circuit(rule166_circuit(n))
    if code == 154:
        return _prepend_conjugating_x_layer(rule166_circuit(n))
    if code == 210:
        return reverse_circuit(_build(154, n, bc))
    # remaining rules are complements: run the partner, then flip every wire
    return append_x_layer(_build(255 - code, n, bc))


def synthesize(rule: Rule | int, n: int, bc: BoundaryCondition) -> Circuit:
    """Circuit implementing one step of ``rule`` on ``n`` cells under ``bc``.

    Valid whenever the closed-form reversibility condition holds and n >= 3.
    Refusals raise NotReversibleError; when the state space is small enough
    to search, the error carries a colliding configuration pair as proof.
    """
    code = Rule.coerce(rule).code
    _require_cells(n)
    if not reversibility_predicate(code, n, bc):
        witness = None
        if n <= min(_WITNESS_CELL_LIMIT, MAX_BRUTEFORCE_CELLS):
            verdict = is_reversible_bruteforce(code, n, bc)
            witness = verdict.witness  # None if merely outside the classification
        raise NotReversibleError(
            f"rule {code} is not reversible at n={n} with {bc.value} boundary",
            witness=witness)
    return _build(code, n, bc)


def _require_cells(n: int):
    if n < MIN_CELLS:
        raise ValueError(f"circuit constructions need n >= {MIN_CELLS}, got n={n}")
