"""Uniform simultaneous substitution and enumeration of candidate maps.

A substitution maps name variables to name variables and applies to every
atom at once, so swaps like {a->b, b->a} behave correctly. The enumerators
below produce the full space of maps the triviality and quasi-triviality
criteria quantify over: bijections of one schema's variables onto another's,
padded with canonically chosen fresh variables when the arities differ.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .formula import Atom, Epsilon, Formula, NameVar, Not, Or

# Fresh variables come from reserved pools so reported witnesses are stable:
# y1,y2,... pad triviality maps, u1,u2,... pad the first quasi-triviality
# case, v1,v2,... the second.
FRESH_TRIVIALITY = "y"
FRESH_QNT_LEFT = "u"
FRESH_QNT_RIGHT = "v"

RESERVED_FRESH_PREFIXES = (FRESH_TRIVIALITY, FRESH_QNT_LEFT, FRESH_QNT_RIGHT)


def is_reserved_fresh_name(name: str) -> bool:
    return (
        len(name) >= 2
        and name[0] in RESERVED_FRESH_PREFIXES
        and name[1:].isdigit()
    )


@dataclass(frozen=True, slots=True)
class Substitution:
    """An immutable variable-to-variable map; unmapped variables stay fixed."""

    items: tuple[tuple[NameVar, NameVar], ...]

    @classmethod
    def of(cls, mapping: Mapping[NameVar, NameVar]) -> "Substitution":
        return cls(items=tuple(sorted(mapping.items())))

    @classmethod
    def identity(cls) -> "Substitution":
        return cls(items=())

    @property
    def mapping(self) -> dict[NameVar, NameVar]:
        return dict(self.items)

    def target(self, var: NameVar) -> NameVar:
        for src, tgt in self.items:
            if src == var:
                return tgt
        return var

    def apply(self, formula: Formula) -> Formula:
        m = self.mapping

        def rec(f: Formula) -> Formula:
            if isinstance(f, Epsilon):
                a = f.atom
                return Epsilon(Atom(m.get(a.subject, a.subject), m.get(a.predicate, a.predicate)))
            if isinstance(f, Not):
                return Not(rec(f.operand))
            if isinstance(f, Or):
                return Or(rec(f.left), rec(f.right))
            raise TypeError(f"not a formula node: {f!r}")

        return rec(formula)

    def is_injective(self) -> bool:
        targets = [t for _, t in self.items]
        return len(targets) == len(set(targets))

    def invert(self) -> "Substitution":
        if not self.is_injective():
            raise ValueError("substitution is not injective")
        return Substitution(items=tuple(sorted((t, s) for s, t in self.items)))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{s}->{t}" for s, t in self.items) + "}"


def fresh_variables(prefix: str, count: int, avoid: set[NameVar]) -> tuple[NameVar, ...]:
    """First `count` names prefix1, prefix2, ... that avoid the given set."""
    out: list[NameVar] = []
    i = 1
    while len(out) < count:
        name = f"{prefix}{i}"
        if name not in avoid:
            out.append(name)
        i += 1
    return tuple(out)


@dataclass(frozen=True, slots=True)
class CandidateMap:
    """One enumerated map: rho is the 1-based source permutation, sigma the
    substitution sending source variable rho(i) to the i-th target."""

    rho: tuple[int, ...]
    sigma: Substitution


def padded_bijections(
    source_vars: Sequence[NameVar],
    target_vars: Sequence[NameVar],
    fresh_prefix: str,
) -> Iterator[CandidateMap]:
    """All bijections of source_vars onto target_vars plus fresh padding.

    Requires len(source_vars) >= len(target_vars). The targets are the
    reference variables in order followed by len(source)-len(target) fresh
    variables; rho ranges over all permutations in lexicographic order, so
    the identity permutation comes first and enumeration order is stable.
    """
    n = len(source_vars)
    r = len(target_vars)
    if n < r:
        raise ValueError(
            f"need at least {r} source variables, got {n}"
        )
    avoid = set(source_vars) | set(target_vars)
    targets = tuple(target_vars) + fresh_variables(fresh_prefix, n - r, avoid)
    for rho in itertools.permutations(range(1, n + 1)):
        sigma = Substitution.of(
            {source_vars[rho[i] - 1]: targets[i] for i in range(n)}
        )
        yield CandidateMap(rho=rho, sigma=sigma)


def triviality_maps(
    schema_vars: Sequence[NameVar], reference_vars: Sequence[NameVar]
) -> Iterator[CandidateMap]:
    """The n! candidate substitutions of the triviality criterion."""
    return padded_bijections(schema_vars, reference_vars, FRESH_TRIVIALITY)


def comparison_maps(
    left_vars: Sequence[NameVar], right_vars: Sequence[NameVar]
) -> tuple[int, list[CandidateMap]]:
    """Candidate maps for the quasi-triviality comparison of left vs right.

    Case 1 (len(left) <= len(right)): maps substitute the right schema's
    variables onto the left schema's plus fresh u-padding; the test is
    sigma(right) == left. Case 2 (len(left) > len(right)): maps substitute
    the left schema's variables onto the right schema's plus fresh
    v-padding; the test is sigma(left) == right.
    """
    if len(left_vars) <= len(right_vars):
        return 1, list(padded_bijections(right_vars, left_vars, FRESH_QNT_LEFT))
    return 2, list(padded_bijections(left_vars, right_vars, FRESH_QNT_RIGHT))
