"""Reversible elementary cellular automata, and circuits that implement them.

The package answers three questions end to end:

* which (rule, cell count, boundary condition) automata are one-step
  reversible (``reversibility``, backed by exhaustive bit-parallel scans);
* what reversible circuit implements each of the 22 reversible rules
  (``synthesis`` over the ``circuits`` gate IR);
* does a circuit really reproduce the automaton (``simulate``, exhaustive
  basis-state and state-vector checks).
"""

from .circuits import (Circuit, CircuitStats, Control, Gate, GateKind,
                       append_x_layer, apply_gate_to_bits,
                       decompose_negative_controls, deserialize, render_ascii,
                       reverse_circuit, serialize, stats)
from .errors import (CapacityError, CircuitParseError, NotReversibleError,
                     UnsupportedRuleError)
from .kernels import BACKEND as KERNEL_BACKEND
from .reversibility import (ClassificationReport, ReversibilityVerdict,
                            is_reversible_bruteforce, proof_family_witness,
                            reversibility_predicate, scan_all_rules)
from .rules import (FIXED, PERIODIC, REVERSIBLE_RULES, BoundaryCondition,
                    Configuration, Rule, formula_step, rule_truth_table, step,
                    step_reference)
from .simulate import (Permutation, StateVector, circuit_permutation,
                       simulate_basis, simulate_statevector,
                       verify_implementation)
from .synthesis import (RULE_166_FAMILY, left_shift_circuit, rule60_circuit,
                        rule90_circuit, rule150_circuit, rule166_circuit,
                        synthesize)

__version__ = "1.0.0"

__all__ = [
    "BoundaryCondition",
    "CapacityError",
    "Circuit",
    "CircuitParseError",
    "CircuitStats",
    "ClassificationReport",
    "Configuration",
    "Control",
    "FIXED",
    "Gate",
    "GateKind",
    "KERNEL_BACKEND",
    "NotReversibleError",
    "PERIODIC",
    "Permutation",
    "REVERSIBLE_RULES",
    "RULE_166_FAMILY",
    "ReversibilityVerdict",
    "Rule",
    "StateVector",
    "UnsupportedRuleError",
    "append_x_layer",
    "apply_gate_to_bits",
    "circuit_permutation",
    "decompose_negative_controls",
    "deserialize",
    "formula_step",
    "is_reversible_bruteforce",
    "left_shift_circuit",
    "proof_family_witness",
    "render_ascii",
    "reverse_circuit",
    "reversibility_predicate",
    "rule60_circuit",
    "rule90_circuit",
    "rule150_circuit",
    "rule166_circuit",
    "rule_truth_table",
    "scan_all_rules",
    "serialize",
    "simulate_basis",
    "simulate_statevector",
    "stats",
    "step",
    "step_reference",
    "synthesize",
    "verify_implementation",
]
