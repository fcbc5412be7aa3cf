"""Triviality and quasi-triviality comparisons between axiom schemata.

Two schemata are compared by sweeping candidate renamings of one onto the
other and testing tautological equivalence. A successful candidate is the
witness; when none succeeds, every candidate is returned together with a
distinguishing valuation, so a negative verdict is as replayable as a
positive one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .axioms import A_T
from .formula import Formula, SchemaEntry
from .semantics import Valuation, are_equivalent, evaluate
from .substitution import (
    FRESH_QNT_RIGHT,
    CandidateMap,
    Substitution,
    comparison_maps,
    padded_bijections,
    triviality_maps,
)

QT_VERDICTS = ("quasi-trivial", "quasi-nontrivial")
TRIV_VERDICTS = ("trivial", "nontrivial")


class CriterionInapplicable(ValueError):
    """The compared schemata fall outside the definition's arity bounds."""


@dataclass(frozen=True, slots=True)
class Refutation:
    """A candidate map plus a valuation on which the two sides disagree.

    substituted_value is the value of the schema the map was applied to;
    target_value is the value of the schema it was compared against. Both
    replay through pointwise evaluation of the stored valuation.
    """

    candidate: CandidateMap
    valuation: Valuation
    substituted_value: bool
    target_value: bool


@dataclass(frozen=True, slots=True)
class TrivialityReport:
    subject: SchemaEntry
    reference: SchemaEntry
    verdict: str
    witness: CandidateMap | None
    refutations: tuple[Refutation, ...]
    map_count: int


@dataclass(frozen=True, slots=True)
class QntReport:
    """Outcome of the quasi-triviality comparison of left against right.

    case_used is 1 when the right schema's variables were mapped onto the
    left's (left arity <= right arity) and 2 for the reverse.
    witness_left_oriented re-expresses a successful map as a substitution
    applied to the left schema whenever that is meaningful: the inverse of
    a fresh-free case-1 map, or the case-2 map itself. hypothesis_met
    records whether each side is nontrivial with respect to the reference
    packaging of the axioms, the standing hypothesis of the comparison;
    it is bookkeeping, never a gate. cross_check is set for equal-arity
    pairs: the mirrored sweep (left's variables onto right's) must reach
    the same verdict.
    """

    left: SchemaEntry
    right: SchemaEntry
    case_used: int
    verdict: str
    witness: CandidateMap | None
    witness_left_oriented: Substitution | None
    refutations: tuple[Refutation, ...]
    map_count: int
    hypothesis_met: tuple[bool, bool]
    cross_check: str | None


def _sweep(
    candidates: Iterable[CandidateMap],
    source_body: Formula,
    target_body: Formula,
) -> tuple[CandidateMap | None, tuple[Refutation, ...], int]:
    """Test candidates in order, stopping at the first equivalence.

    Returns the witness (or None), the refutations of every candidate
    examined before success, and the number examined. With no witness the
    refutations cover the whole enumeration.
    """
    refutations: list[Refutation] = []
    count = 0
    for cand in candidates:
        count += 1
        substituted = cand.sigma.apply(source_body)
        verdict = are_equivalent(substituted, target_body)
        if verdict.holds:
            return cand, tuple(refutations), count
        assert verdict.witness is not None
        refutations.append(
            Refutation(
                candidate=cand,
                valuation=verdict.witness,
                substituted_value=evaluate(substituted, verdict.witness),
                target_value=evaluate(target_body, verdict.witness),
            )
        )
    return None, tuple(refutations), count


def triviality(subject: SchemaEntry, reference: SchemaEntry) -> TrivialityReport:
    """Is some renaming of subject onto reference's variables equivalent
    to reference? The enumeration covers all arity! padded bijections."""
    if subject.arity < 3:
        raise CriterionInapplicable(
            f"{subject.name} has {subject.arity} distinct variables; "
            "the triviality criterion needs at least 3"
        )
    if subject.arity < reference.arity:
        raise CriterionInapplicable(
            f"{subject.name} has fewer variables ({subject.arity}) than "
            f"the reference {reference.name} ({reference.arity})"
        )
    witness, refutations, count = _sweep(
        triviality_maps(subject.variables, reference.variables),
        subject.body,
        reference.body,
    )
    return TrivialityReport(
        subject=subject,
        reference=reference,
        verdict="trivial" if witness else "nontrivial",
        witness=witness,
        refutations=refutations,
        map_count=count,
    )


@lru_cache(maxsize=None)
def is_nontrivial_standard(entry: SchemaEntry) -> bool:
    """The standing hypothesis: nontrivial w.r.t. the packaged axioms."""
    return triviality(entry, A_T).verdict == "nontrivial"


def _left_oriented(
    left: SchemaEntry, right: SchemaEntry, case_used: int, witness: CandidateMap | None
) -> Substitution | None:
    if witness is None:
        return None
    if case_used == 2:
        return witness.sigma
    if left.arity == right.arity:
        # fresh-free case-1 maps are bijections, so the inverse exists
        return witness.sigma.invert()
    return None


def _mirror_cross_check(
    left: SchemaEntry, right: SchemaEntry, primary_found: bool
) -> str:
    mirrored = padded_bijections(left.variables, right.variables, FRESH_QNT_RIGHT)
    found = any(
        are_equivalent(cand.sigma.apply(left.body), right.body).holds
        for cand in mirrored
    )
    return "agree" if found == primary_found else "disagree"


def quasi_triviality(left: SchemaEntry, right: SchemaEntry) -> QntReport:
    """Compare two schemata for quasi-triviality.

    Case 1 (left arity <= right arity): sweep renamings of the right
    schema's variables onto the left's, padded with fresh u-variables, and
    test sigma(right) equivalent to left. Case 2 does the mirror image
    with fresh v-variables. Equal-arity pairs also run the mirrored sweep
    as a cross-check; the definition's branch stays authoritative.
    """
    for entry in (left, right):
        if entry.arity < 3:
            raise CriterionInapplicable(
                f"{entry.name} has {entry.arity} distinct variables; "
                "the quasi-triviality comparison needs at least 3 on each side"
            )
    case_used, candidates = comparison_maps(left.variables, right.variables)
    if case_used == 1:
        source, target = right, left
    else:
        source, target = left, right
    witness, refutations, count = _sweep(candidates, source.body, target.body)
    cross_check = None
    if left.arity == right.arity:
        cross_check = _mirror_cross_check(left, right, witness is not None)
    return QntReport(
        left=left,
        right=right,
        case_used=case_used,
        verdict="quasi-trivial" if witness else "quasi-nontrivial",
        witness=witness,
        witness_left_oriented=_left_oriented(left, right, case_used, witness),
        refutations=refutations,
        map_count=count,
        hypothesis_met=(is_nontrivial_standard(left), is_nontrivial_standard(right)),
        cross_check=cross_check,
    )


def is_trivial(subject: SchemaEntry, reference: SchemaEntry) -> bool:
    return triviality(subject, reference).verdict == "trivial"


def is_quasi_trivial(left: SchemaEntry, right: SchemaEntry) -> bool:
    return quasi_triviality(left, right).verdict == "quasi-trivial"


@dataclass(frozen=True, slots=True)
class InapplicablePair:
    """Matrix cell for a pair outside the comparison's arity bounds."""

    left: SchemaEntry
    right: SchemaEntry
    reason: str


MatrixCell = QntReport | InapplicablePair


def qnt_matrix(
    entries: Iterable[SchemaEntry],
) -> dict[tuple[str, str], MatrixCell]:
    """Quasi-triviality reports for every ordered pair, diagonal included.

    Pairs the definition does not cover become InapplicablePair cells
    rather than aborting the whole matrix.
    """
    pool = tuple(entries)
    cells: dict[tuple[str, str], MatrixCell] = {}
    for a in pool:
        for b in pool:
            try:
                cells[(a.name, b.name)] = quasi_triviality(a, b)
            except CriterionInapplicable as exc:
                cells[(a.name, b.name)] = InapplicablePair(a, b, str(exc))
    return cells


def clear_caches() -> None:
    is_nontrivial_standard.cache_clear()
