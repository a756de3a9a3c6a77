"""Deciding which (rule, N, boundary) automata are one-step injective.

Two independent routes answer the question:

* ``is_reversible_bruteforce`` enumerates all ``2**N`` states and looks for a
  repeated successor (with a collision witness when one exists);
* ``reversibility_predicate`` is a hard-coded closed-form classification,
  valid for N >= 4. Exactly 22 of the 256 rules are ever reversible there.

The brute-force scan is the check on the transcription, never the other way
round. ``proof_family_witness`` produces the four parametric collision
families that prove irreversibility for the parity / mod-3 sensitive rules.

For N = 3 the closed form is conservative: a handful of rules outside the
22-rule set happen to be injective at that size (see the tests for the exact
list). The predicate deliberately keeps the general-N classification.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import CapacityError, UnsupportedRuleError
from .rules import (FIXED, PERIODIC, BoundaryCondition, Configuration, Rule,
                    step)

#: Largest cell count the exhaustive checker will enumerate (2**24 states).
MAX_BRUTEFORCE_CELLS = 24

#: N range of the reference classification experiment.
SCAN_N_MIN = 4
SCAN_N_MAX = 20

_PERIODIC_ANY = frozenset({15, 85, 170, 240})
_PERIODIC_ODD = frozenset({45, 75, 89, 101, 154, 166, 180, 210})
_FIXED_ANY = frozenset({60, 102, 153, 195})
_FIXED_EVEN = frozenset({90, 165})
_MOD3 = frozenset({105, 150})
_ALWAYS = frozenset({51, 204})


def reversibility_predicate(rule: Rule | int, n: int, bc: BoundaryCondition) -> bool:
    """Closed-form reversibility condition for ``(rule, n, bc)``.

    Transcribed table: {51, 204} always; {15, 85, 170, 240} periodic, any N;
    {45, 75, 89, 101, 154, 166, 180, 210} periodic, odd N; {105, 150}
    periodic iff N % 3 != 0 and fixed iff N % 3 != 2; {60, 102, 153, 195}
    fixed, any N; {90, 165} fixed, even N; everything else never.
    """
    code = Rule.coerce(rule).code
    if n < 3:
        raise ValueError(f"predicate is defined for n >= 3, got {n}")
    if code in _ALWAYS:
        return True
    if bc is PERIODIC:
        if code in _PERIODIC_ANY:
            return True
        if code in _PERIODIC_ODD:
            return n % 2 == 1
        if code in _MOD3:
            return n % 3 != 0
    else:
        if code in _FIXED_ANY:
            return True
        if code in _FIXED_EVEN:
            return n % 2 == 0
        if code in _MOD3:
            return n % 3 != 2
    return False


@dataclass(frozen=True)
class ReversibilityVerdict:
    """Outcome of an exhaustive injectivity check for one (rule, n, bc) cell."""

    rule: int
    n: int
    bc: BoundaryCondition
    reversible: bool
    witness: tuple[Configuration, Configuration] | None = None

    def __post_init__(self):
        if self.reversible and self.witness is not None:
            raise ValueError("reversible verdicts carry no witness")
        if not self.reversible and self.witness is None:
            raise ValueError("irreversible verdicts must carry a witness")


def smallest_collision(outputs: np.ndarray) -> tuple[int, int] | None:
    """Lexicographically smallest pair (x, y), x < y, with outputs[x] == outputs[y].

    Returns None when all outputs are distinct. "Smallest" minimizes x first,
    then y, over every colliding pair, not merely the first repeat met when
    scanning in order (the two can differ).
    """
    order = np.argsort(outputs, kind="stable")
    sorted_out = outputs[order]
    dup = sorted_out[1:] == sorted_out[:-1]
    if not dup.any():
        return None
    firsts = order[:-1][dup]
    seconds = order[1:][dup]
    best = int(np.argmin(firsts))
    return int(firsts[best]), int(seconds[best])


def is_reversible_bruteforce(rule: Rule | int, n: int,
                             bc: BoundaryCondition) -> ReversibilityVerdict:
    """Check injectivity of one step over all ``2**n`` states.

    Irreversible verdicts carry the lexicographically smallest colliding pair
    (by integer encoding) so downstream output is deterministic.
    """
    code = Rule.coerce(rule).code
    if n < 1:
        raise ValueError(f"cell count must be >= 1, got {n}")
    if n > MAX_BRUTEFORCE_CELLS:
        raise CapacityError(
            f"n={n} exceeds the exhaustive-check guard of {MAX_BRUTEFORCE_CELLS}")
    periodic = bc is PERIODIC
    if kernels.check_reversible(code, n, periodic):
        return ReversibilityVerdict(code, n, bc, True)
    outputs = kernels.rule_outputs(code, n, periodic)
    pair = smallest_collision(outputs)
    assert pair is not None
    witness = (Configuration.from_int(pair[0], n), Configuration.from_int(pair[1], n))
    return ReversibilityVerdict(code, n, bc, False, witness)


@dataclass(frozen=True)
class ClassificationReport:
    """Brute-force verdicts for every rule over a scanned range of (n, bc) cells.

    ``cells`` maps rule code to the list of (n, bc, reversible) entries in
    scan order: n ascending, periodic before fixed.
    """

    n_min: int
    n_max: int
    cells: dict[int, list[tuple[int, BoundaryCondition, bool]]] = field(repr=False)

    def reversible_rules(self) -> list[int]:
        """Rules with at least one reversible entry, ascending."""
        return sorted(code for code, entries in self.cells.items()
                      if any(rev for _, _, rev in entries))

    def to_json_dict(self) -> dict:
        return {
            "rules": {
                str(code): [
                    {"n": n, "bc": bc.value, "reversible": rev}
                    for n, bc, rev in self.cells[code]
                ]
                for code in sorted(self.cells)
            }
        }

    def to_text(self) -> str:
        """Line-oriented table: one ``rule n bc verdict`` line per cell."""
        lines = []
        for code in sorted(self.cells):
            for n, bc, rev in self.cells[code]:
                verdict = "reversible" if rev else "irreversible"
                lines.append(f"{code}\t{n}\t{bc.value}\t{verdict}")
        return "\n".join(lines) + "\n"


def _thread_count(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("QECA_THREADS", "").strip()
    return max(1, int(env)) if env else 1


def scan_all_rules(n_min: int = SCAN_N_MIN, n_max: int = SCAN_N_MAX,
                   threads: int | None = None) -> ClassificationReport:
    """Brute-force classification of all 256 rules over ``n_min..n_max``, both BCs.

    Each (n, bc) unit is independent; with ``threads > 1`` (or the
    QECA_THREADS environment variable) units run on a thread pool. The
    assembled report is identical either way.
    """
    if not (SCAN_N_MIN <= n_min <= n_max <= SCAN_N_MAX):
        raise ValueError(
            f"scan range must satisfy {SCAN_N_MIN} <= n_min <= n_max <= {SCAN_N_MAX}, "
            f"got [{n_min}, {n_max}]")

    units = [(n, bc) for n in range(n_min, n_max + 1) for bc in (PERIODIC, FIXED)]

    def run_unit(unit):
        n, bc = unit
        return unit, kernels.scan_rules(n, bc is PERIODIC)

    workers = _thread_count(threads)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = dict(pool.map(run_unit, units))
    else:
        results = dict(map(run_unit, units))

    cells: dict[int, list[tuple[int, BoundaryCondition, bool]]] = {
        code: [] for code in range(256)}
    for n, bc in units:
        verdicts = results[(n, bc)]
        for code in range(256):
            cells[code].append((n, bc, bool(verdicts[code])))
    return ClassificationReport(n_min, n_max, cells)


def _repeat(block: tuple[int, ...], k: int) -> tuple[int, ...]:
    return block * k


def proof_family_witness(rule: Rule | int, bc: BoundaryCondition,
                         n: int) -> tuple[Configuration, Configuration]:
    """Parametric collision pair proving irreversibility of one of four families.

    Supported combinations: rule 90 fixed at odd n; rule 150 periodic at
    n % 3 == 0; rule 150 fixed at n % 3 == 2; rule 166 periodic at even n.
    The returned pair is validated by stepping both members before return.
    """
    code = Rule.coerce(rule).code
    if n < 1:
        raise ValueError(f"cell count must be >= 1, got {n}")
    pair: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    if code == 90 and bc is FIXED and n % 2 == 1:
        # all-zero and alternating 1,0,...,1 both step to all-zero
        pair = ((0,) * n, _repeat((1, 0), n // 2) + (1,))
    elif code == 150 and bc is PERIODIC and n % 3 == 0:
        pair = ((0,) * n, _repeat((1, 1, 0), n // 3))
    elif code == 150 and bc is FIXED and n % 3 == 2:
        pair = ((0,) * n, _repeat((1, 1, 0), n // 3) + (1, 1))
    elif code == 166 and bc is PERIODIC and n % 2 == 0:
        # both phases of the alternating pattern step to all-ones
        pair = (_repeat((1, 0), n // 2), _repeat((0, 1), n // 2))
    if pair is None:
        raise UnsupportedRuleError(
            f"no collision family for rule {code} at n={n}, {bc.value} boundary")
    first, second = Configuration(pair[0]), Configuration(pair[1])
    if step(first, code, bc) != step(second, code, bc):  # pragma: no cover
        raise AssertionError("collision family failed self-validation")
    return first, second
