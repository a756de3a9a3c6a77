"""Pure-numpy stepping kernels: the fallback backend.

Same interface as the compiled extension ``_kernels_c``. Every function works
on the integer encoding of configurations (bit i of a word is cell i) and
vectorizes the shifted-word step over all ``2**n`` states at once.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def _neighbor_words(states: np.ndarray, n: int, periodic: bool):
    one = np.uint32(1)
    mask = np.uint32((1 << n) - 1)
    if periodic:
        left = ((states << one) | (states >> np.uint32(n - 1))) & mask
        right = ((states >> one) | ((states & one) << np.uint32(n - 1))) & mask
    else:
        left = (states << one) & mask
        right = states >> one
    return left, right


def rule_outputs(rule: int, n: int, periodic: bool) -> np.ndarray:
    """Successor encoding for every state 0 .. 2**n - 1, as uint32."""
    states = np.arange(1 << n, dtype=np.uint32)
    left, right = _neighbor_words(states, n, periodic)
    out = np.zeros_like(states)
    for pattern in range(8):
        if (rule >> pattern) & 1:
            term = left if pattern & 4 else ~left
            term = term & (states if pattern & 2 else ~states)
            term = term & (right if pattern & 1 else ~right)
            out |= term
    return out & np.uint32((1 << n) - 1)


def check_reversible(rule: int, n: int, periodic: bool) -> bool:
    """Whether the one-step map is injective on all 2**n states."""
    out = rule_outputs(rule, n, periodic)
    seen = np.zeros(out.size, dtype=bool)
    seen[out] = True
    # injective <=> surjective on a finite set
    return bool(seen.all())


def scan_rules(n: int, periodic: bool) -> np.ndarray:
    """Reversibility verdict for all 256 rules at once; shape (256,) bool.

    Shares the eight neighborhood-indicator arrays across rules, so a full
    sweep costs 8 term builds plus ~4 ORs and one occupancy pass per rule.
    """
    states = np.arange(1 << n, dtype=np.uint32)
    left, right = _neighbor_words(states, n, periodic)
    terms = []
    for pattern in range(8):
        term = left if pattern & 4 else ~left
        term = term & (states if pattern & 2 else ~states)
        term = term & (right if pattern & 1 else ~right)
        terms.append(term & np.uint32((1 << n) - 1))
    verdicts = np.zeros(256, dtype=bool)
    seen = np.empty(states.size, dtype=bool)
    out = np.empty_like(states)
    for rule in range(256):
        out[:] = 0
        for pattern in range(8):
            if (rule >> pattern) & 1:
                out |= terms[pattern]
        seen[:] = False
        seen[out] = True
        verdicts[rule] = seen.all()
    return verdicts
