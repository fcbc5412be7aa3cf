"""Classical two-valued semantics over epsilon atoms.

Truth tables are big integers: bit c of a formula's table is its value under
valuation number c. Valuations are numbered 0 .. 2^k-1 over the atom list in
first-occurrence order, where bit j of the counter set means atom j is FALSE.
Counter 0 is therefore the all-true valuation, and every witness reported by
the checks below is the falsifying valuation with the lowest counter. The
numbering is part of the external contract: rerunning any check reproduces
the same witness bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .formula import Atom, Epsilon, Formula, Iff, Not, Or, atoms

ATOM_BUDGET = 30


class BudgetError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Valuation:
    """A total truth assignment on an ordered atom domain."""

    domain: tuple[Atom, ...]
    true_atoms: frozenset[Atom]

    def __post_init__(self) -> None:
        missing = self.true_atoms.difference(self.domain)
        if missing:
            raise ValueError(f"true atoms outside domain: {sorted(map(str, missing))}")

    @classmethod
    def at_counter(cls, domain: Sequence[Atom], counter: int) -> "Valuation":
        true = frozenset(
            atom for j, atom in enumerate(domain) if not (counter >> j) & 1
        )
        return cls(domain=tuple(domain), true_atoms=true)

    @property
    def counter(self) -> int:
        return sum(
            1 << j for j, atom in enumerate(self.domain) if atom not in self.true_atoms
        )

    def value(self, atom: Atom) -> bool:
        if atom not in self.domain:
            raise ValueError(f"atom {atom} outside valuation domain")
        return atom in self.true_atoms

    def false_atoms(self) -> tuple[Atom, ...]:
        return tuple(a for a in self.domain if a not in self.true_atoms)

    def __str__(self) -> str:
        false = self.false_atoms()
        if not false:
            return "all atoms true"
        if len(false) == len(self.domain):
            return "all atoms false"
        return "false: " + ", ".join(map(str, false)) + "; all other atoms true"


def evaluate(formula: Formula, valuation: Valuation) -> bool:
    """Pointwise evaluation; the replay path used to certify reported witnesses."""
    if isinstance(formula, Epsilon):
        return valuation.value(formula.atom)
    if isinstance(formula, Not):
        return not evaluate(formula.operand, valuation)
    if isinstance(formula, Or):
        return evaluate(formula.left, valuation) or evaluate(formula.right, valuation)
    raise TypeError(f"not a formula node: {formula!r}")


_TILE_CACHE: dict[tuple[int, int], int] = {}


def full_mask(n_atoms: int) -> int:
    return (1 << (1 << n_atoms)) - 1


def atom_tile(n_atoms: int, j: int) -> int:
    """Truth table of atom j alone over n_atoms: one bit per valuation."""
    key = (n_atoms, j)
    cached = _TILE_CACHE.get(key)
    if cached is not None:
        return cached
    pattern = (1 << (1 << j)) - 1
    span = 1 << (j + 1)
    total = 1 << n_atoms
    while span < total:
        pattern |= pattern << span
        span <<= 1
    _TILE_CACHE[key] = pattern
    return pattern


def truth_table(formula: Formula, atom_order: Sequence[Atom]) -> int:
    """Big-integer truth table of formula over the given atom ordering."""
    k = len(atom_order)
    if k > ATOM_BUDGET:
        raise BudgetError(f"{k} atoms exceed the budget of {ATOM_BUDGET}")
    index = {atom: j for j, atom in enumerate(atom_order)}
    full = full_mask(k)

    def rec(f: Formula) -> int:
        if isinstance(f, Epsilon):
            return atom_tile(k, index[f.atom])
        if isinstance(f, Not):
            return full ^ rec(f.operand)
        if isinstance(f, Or):
            return rec(f.left) | rec(f.right)
        raise TypeError(f"not a formula node: {f!r}")

    return rec(formula)


def lowest_set_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True, slots=True)
class SemanticsVerdict:
    """Outcome of a semantic check, carrying a replayable counterexample."""

    holds: bool
    witness: Valuation | None


def merged_atom_order(formulas: Iterable[Formula]) -> tuple[Atom, ...]:
    order: dict[Atom, None] = {}
    for f in formulas:
        for atom in atoms(f):
            order.setdefault(atom)
    return tuple(order)


def is_tautology(formula: Formula) -> SemanticsVerdict:
    order = atoms(formula)
    table = truth_table(formula, order)
    gaps = full_mask(len(order)) & ~table
    if gaps == 0:
        return SemanticsVerdict(True, None)
    counter = lowest_set_bit(gaps)
    return SemanticsVerdict(False, Valuation.at_counter(order, counter))


def are_equivalent(left: Formula, right: Formula) -> SemanticsVerdict:
    """Tautological equivalence; the witness domain covers both formulas."""
    return is_tautology(Iff(left, right))


def entails(premises: Sequence[Formula], conclusion: Formula) -> SemanticsVerdict:
    """Tautological consequence: no valuation satisfies premises but not conclusion."""
    order = merged_atom_order([*premises, conclusion])
    full = full_mask(len(order))
    satisfied = full
    for p in premises:
        satisfied &= truth_table(p, order)
    violations = satisfied & ~truth_table(conclusion, order) & full
    if violations == 0:
        return SemanticsVerdict(True, None)
    counter = lowest_set_bit(violations)
    return SemanticsVerdict(False, Valuation.at_counter(order, counter))


def clear_caches() -> None:
    _TILE_CACHE.clear()
