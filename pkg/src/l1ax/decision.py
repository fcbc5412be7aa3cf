"""Theoremhood for L1 via admissible valuations.

A valuation over the full atom grid of a finite variable pool is admissible
when it satisfies every instance of the base axiom schemata whose variables
are drawn from the pool, repeated variables included. A formula is an L1
theorem over its own variables exactly when every admissible valuation
satisfies it; pools of up to five variables (a 2^25 grid) are supported.
The criterion's adequacy for formulas of at most five variables is a known
completeness result; this module contributes the machine check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .axioms import AX1, AX2, AX3, AX3S
from .formula import Atom, Formula, NameVar, name_variables
from .semantics import Valuation, full_mask, lowest_set_bit, truth_table
from .substitution import Substitution

POOL_CAP = 5

_MASK_CACHE: dict[tuple[tuple[NameVar, ...], str], int] = {}


def grid_atoms(pool: Sequence[NameVar]) -> tuple[Atom, ...]:
    """Row-major atom grid: all eps(x,y) with x, y from the pool."""
    return tuple(Atom(x, y) for x in pool for y in pool)


def _check_pool(pool: Sequence[NameVar]) -> tuple[NameVar, ...]:
    pool = tuple(pool)
    if not 1 <= len(pool) <= POOL_CAP:
        raise ValueError(f"pool size {len(pool)} outside 1..{POOL_CAP}")
    if len(set(pool)) != len(pool):
        raise ValueError("pool variables must be distinct")
    return pool


def axiom_instances(
    pool: Sequence[NameVar], symmetry: str = "Ax3"
) -> Iterator[Formula]:
    """Every instance of Ax1, Ax2 and the chosen symmetry axiom over the pool."""
    if symmetry not in ("Ax3", "Ax3s"):
        raise ValueError(f"unknown symmetry axiom {symmetry!r}")
    third = AX3 if symmetry == "Ax3" else AX3S
    for schema in (AX1, AX2, third):
        for targets in itertools.product(pool, repeat=schema.arity):
            sigma = Substitution.of(dict(zip(schema.variables, targets)))
            yield sigma.apply(schema.body)


def admissible_mask(pool: Sequence[NameVar], symmetry: str = "Ax3") -> int:
    """Bitmask over grid valuations: bit c set iff valuation c is admissible."""
    pool = _check_pool(pool)
    key = (pool, symmetry)
    cached = _MASK_CACHE.get(key)
    if cached is not None:
        return cached
    grid = grid_atoms(pool)
    mask = full_mask(len(grid))
    for instance in axiom_instances(pool, symmetry):
        mask &= truth_table(instance, grid)
    _MASK_CACHE[key] = mask
    return mask


def iter_set_bits(mask: int) -> Iterator[int]:
    if mask <= 0:
        if mask < 0:
            raise ValueError("negative mask")
        return
    data = mask.to_bytes((mask.bit_length() + 7) // 8, "little")
    for byte_index, b in enumerate(data):
        if b:
            base = byte_index * 8
            while b:
                low = b & -b
                yield base + low.bit_length() - 1
                b ^= low


def admissible_valuations(
    pool: Sequence[NameVar], symmetry: str = "Ax3"
) -> Iterator[Valuation]:
    """Admissible valuations in ascending counter order."""
    pool = _check_pool(pool)
    grid = grid_atoms(pool)
    for counter in iter_set_bits(admissible_mask(pool, symmetry)):
        yield Valuation.at_counter(grid, counter)


def admissible_count(pool: Sequence[NameVar], symmetry: str = "Ax3") -> int:
    return admissible_mask(pool, symmetry).bit_count()


@dataclass(frozen=True, slots=True)
class TheoremVerdict:
    """Validity over admissible valuations, with the first counter-valuation
    in counter order when the formula fails."""

    valid: bool
    pool: tuple[NameVar, ...]
    counter_valuation: Valuation | None


def holds_in_all_admissible(
    formula: Formula, pool: Sequence[NameVar], symmetry: str = "Ax3"
) -> TheoremVerdict:
    pool = _check_pool(pool)
    missing = set(name_variables(formula)) - set(pool)
    if missing:
        raise ValueError(f"formula variables outside pool: {sorted(missing)}")
    grid = grid_atoms(pool)
    mask = admissible_mask(pool, symmetry)
    violations = mask & ~truth_table(formula, grid) & full_mask(len(grid))
    if violations == 0:
        return TheoremVerdict(True, pool, None)
    counter = lowest_set_bit(violations)
    return TheoremVerdict(False, pool, Valuation.at_counter(grid, counter))


def is_theorem(formula: Formula) -> TheoremVerdict:
    """Decide L1 theoremhood over the formula's own variable pool."""
    return holds_in_all_admissible(formula, name_variables(formula))


def clear_caches() -> None:
    _MASK_CACHE.clear()
