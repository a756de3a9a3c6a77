"""Classical elementary cellular automaton semantics.

A rule is an integer in [0, 255] whose bit ``4*l + 2*c + r`` gives the next
value of a cell whose (left, self, right) neighborhood reads ``(l, c, r)``.
Configurations are ordered bit arrays ``a_0 .. a_{N-1}`` and encode to the
integer ``sum(a_i * 2**i)``, so ``a_0`` is the least significant bit.

``step`` is the ground-truth one-step evolution used as the oracle by every
other module. It runs on the integer encoding with shifted-word boolean
expressions; ``step_reference`` is the deliberately naive cell-by-cell
evaluation kept around to pin the fast path down in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator

from .errors import UnsupportedRuleError


class BoundaryCondition(Enum):
    """How the endpoint cells find their missing neighbor."""

    PERIODIC = "periodic"  # index arithmetic modulo N
    FIXED = "fixed"  # virtual always-zero cells outside both ends

    @classmethod
    def parse(cls, text: str) -> "BoundaryCondition":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown boundary condition {text!r} "
                             f"(expected 'periodic' or 'fixed')") from None

    def __str__(self) -> str:
        return self.value


PERIODIC = BoundaryCondition.PERIODIC
FIXED = BoundaryCondition.FIXED


@dataclass(frozen=True)
class Rule:
    """A Wolfram-coded ECA rule."""

    code: int

    def __post_init__(self):
        if not isinstance(self.code, int) or isinstance(self.code, bool):
            raise ValueError(f"rule code must be an integer, got {self.code!r}")
        if not 0 <= self.code <= 255:
            raise ValueError(f"rule code must be in [0, 255], got {self.code}")

    @classmethod
    def coerce(cls, rule: "Rule | int") -> "Rule":
        return rule if isinstance(rule, Rule) else cls(rule)

    @classmethod
    def from_truth_table(cls, table: Iterable[int]) -> "Rule":
        """Rebuild a rule from its 8 truth-table bits, entry k for neighborhood k."""
        bits = tuple(table)
        if len(bits) != 8 or any(b not in (0, 1) for b in bits):
            raise ValueError("truth table must be 8 bits")
        return cls(sum(b << k for k, b in enumerate(bits)))

    def truth_table(self) -> tuple[int, ...]:
        """The 8 output bits, indexed by neighborhood value 4*l + 2*c + r."""
        return tuple((self.code >> k) & 1 for k in range(8))

    def output(self, left: int, center: int, right: int) -> int:
        """Next value of a cell whose neighborhood reads (left, center, right)."""
        return (self.code >> (4 * left + 2 * center + right)) & 1

    def complement(self) -> "Rule":
        """The rule whose outputs are all flipped (code 255 - code)."""
        return Rule(255 - self.code)

    def __index__(self) -> int:
        return self.code


def rule_truth_table(rule: Rule | int) -> tuple[int, ...]:
    """Truth table of ``rule``; entry k is the output for neighborhood value k."""
    return Rule.coerce(rule).truth_table()


@dataclass(frozen=True)
class Configuration:
    """An ordered, immutable array of cell values; ``bits[0]`` is ``a_0``."""

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if len(bits) < 1:
            raise ValueError("configuration needs at least one cell")
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"cell values must be 0 or 1, got {bits}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_int(cls, value: int, n: int) -> "Configuration":
        """Decode ``value = sum(a_i * 2**i)`` into an n-cell configuration."""
        if n < 1:
            raise ValueError("configuration needs at least one cell")
        if not 0 <= value < (1 << n):
            raise ValueError(f"value {value} does not fit in {n} cells")
        return cls(tuple((value >> i) & 1 for i in range(n)))

    @classmethod
    def from_string(cls, text: str) -> "Configuration":
        """Parse a bit string like ``"01011"``; the first character is ``a_0``."""
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"expected a nonempty string of 0/1, got {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def zeros(cls, n: int) -> "Configuration":
        return cls((0,) * n)

    def to_int(self) -> int:
        """Encode as ``sum(a_i * 2**i)``; exact inverse of ``from_int``."""
        value = 0
        for i, b in enumerate(self.bits):
            value |= b << i
        return value

    def to_string(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]


def step_word(value: int, n: int, rule_code: int, periodic: bool) -> int:
    """One automaton step on the integer encoding of an n-cell configuration.

    Evaluates all cells at once with shifted-word boolean expressions: one
    term per set truth-table bit, each an AND of the (possibly complemented)
    left / self / right neighbor words.
    """
    mask = (1 << n) - 1
    if periodic:
        left = ((value << 1) | (value >> (n - 1))) & mask
        right = ((value >> 1) | ((value & 1) << (n - 1))) & mask
    else:
        left = (value << 1) & mask
        right = value >> 1
    out = 0
    for pattern in range(8):
        if (rule_code >> pattern) & 1:
            term = left if pattern & 4 else ~left
            term &= value if pattern & 2 else ~value
            term &= right if pattern & 1 else ~right
            out |= term
    return out & mask


def step(config: Configuration, rule: Rule | int,
         bc: BoundaryCondition) -> Configuration:
    """Advance ``config`` by one step of ``rule`` under boundary condition ``bc``."""
    rule = Rule.coerce(rule)
    n = len(config)
    out = step_word(config.to_int(), n, rule.code, bc is PERIODIC)
    return Configuration.from_int(out, n)


def step_reference(config: Configuration, rule: Rule | int,
                   bc: BoundaryCondition) -> Configuration:
    """Naive cell-by-cell evaluation of one step; the independent check on ``step``."""
    rule = Rule.coerce(rule)
    table = rule.truth_table()
    return Configuration(tuple(
        table[4 * l + 2 * c + r]
        for l, c, r in _neighborhoods(config.bits, bc)
    ))


def _neighborhoods(bits: tuple[int, ...], bc: BoundaryCondition):
    """Yield (left, self, right) for every cell, honoring the boundary condition."""
    n = len(bits)
    for i in range(n):
        if bc is PERIODIC:
            yield bits[(i - 1) % n], bits[i], bits[(i + 1) % n]
        else:
            left = bits[i - 1] if i > 0 else 0
            right = bits[i + 1] if i < n - 1 else 0
            yield left, bits[i], right


def _not(b: int) -> int:
    return b ^ 1


# Compact per-cell formulas for the 22 reversible rules, keyed by rule code and
# written on (left, self, right). Derived from the rule codes themselves; each
# is cross-checked against truth-table stepping by tests. Two traps worth
# naming: rule 15 is the complement of rule 240 (left ^ 1, a XOR not an
# arithmetic +1), and rule 195 is the complement of rule 60 (l ^ c ^ 1), not
# the three-term parity - that one is rule 150.
FORMULAS: dict[int, Callable[[int, int, int], int]] = {
    15: lambda l, c, r: _not(l),
    45: lambda l, c, r: l ^ (_not(c) & r) ^ 1,
    51: lambda l, c, r: _not(c),
    60: lambda l, c, r: l ^ c,
    75: lambda l, c, r: l ^ (_not(r) & c) ^ 1,
    85: lambda l, c, r: _not(r),
    89: lambda l, c, r: r ^ (_not(l) & c) ^ 1,
    90: lambda l, c, r: l ^ r,
    101: lambda l, c, r: r ^ (_not(c) & l) ^ 1,
    102: lambda l, c, r: c ^ r,
    105: lambda l, c, r: l ^ c ^ r ^ 1,
    150: lambda l, c, r: l ^ c ^ r,
    153: lambda l, c, r: c ^ r ^ 1,
    154: lambda l, c, r: r ^ (_not(c) & l),
    165: lambda l, c, r: l ^ r ^ 1,
    166: lambda l, c, r: r ^ (_not(l) & c),
    170: lambda l, c, r: r,
    180: lambda l, c, r: l ^ (_not(r) & c),
    195: lambda l, c, r: l ^ c ^ 1,
    204: lambda l, c, r: c,
    210: lambda l, c, r: l ^ (_not(c) & r),
    240: lambda l, c, r: l,
}

#: The 22 rules whose one-step map is injective for some cell count and
#: boundary condition; exactly the rules with a compact formula above.
REVERSIBLE_RULES: frozenset[int] = frozenset(FORMULAS)


def formula_step(config: Configuration, rule: Rule | int,
                 bc: BoundaryCondition) -> Configuration:
    """One step evaluated through the compact per-rule formula.

    Exists purely as a cross-check on ``step``; only the 22 reversible rules
    have a formula.
    """
    rule = Rule.coerce(rule)
    try:
        formula = FORMULAS[rule.code]
    except KeyError:
        raise UnsupportedRuleError(
            f"rule {rule.code} has no compact formula (not in the reversible set)"
        ) from None
    return Configuration(tuple(
        formula(l, c, r) for l, c, r in _neighborhoods(config.bits, bc)
    ))
