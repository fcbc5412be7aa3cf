"""Triviality and quasi-triviality sweeps with self-certifying witnesses."""

import random

import pytest

from l1ax.axioms import A_T, A_T1
from l1ax.criteria import (
    CriterionInapplicable,
    InapplicablePair,
    QntReport,
    is_nontrivial_standard,
    is_quasi_trivial,
    is_trivial,
    qnt_matrix,
    quasi_triviality,
    triviality,
)
from l1ax.semantics import are_equivalent, evaluate


def certify_refutations(report, source_body, target_body):
    """Replay every reported refutation and require a genuine disagreement."""
    for ref in report.refutations:
        image = ref.candidate.sigma.apply(source_body)
        assert evaluate(image, ref.valuation) == ref.substituted_value
        assert evaluate(target_body, ref.valuation) == ref.target_value
        assert ref.substituted_value != ref.target_value
        # canonical means lowest falsifying counter
        recomputed = are_equivalent(image, target_body)
        assert not recomputed.holds
        assert recomputed.witness.counter == ref.valuation.counter


def qnt_bodies(report):
    if report.case_used == 1:
        return report.right.body, report.left.body
    return report.left.body, report.right.body


def test_four_variable_schema_nontrivial_with_full_refutation_list(corpus):
    report = triviality(corpus["A_M8"], A_T)
    assert report.verdict == "nontrivial"
    assert report.witness is None
    assert report.map_count == 24
    assert len(report.refutations) == 24
    certify_refutations(report, corpus["A_M8"].body, A_T.body)

    first = report.refutations[0]
    assert first.candidate.rho == (1, 2, 3, 4)
    assert first.candidate.sigma.mapping == {"a": "a", "b": "b", "c": "c", "d": "y1"}
    assert first.valuation.counter == 6
    assert {str(a) for a in first.valuation.false_atoms()} == {
        "eps(a,a)",
        "eps(c,y1)",
    }


def test_triviality_of_a_schema_against_itself(corpus):
    report = triviality(corpus["A_t"], A_T)
    assert report.verdict == "trivial"
    assert report.witness is not None
    assert report.witness.rho == (1, 2, 3)
    assert report.map_count == 1  # the identity map succeeds immediately
    assert report.refutations == ()


def test_triviality_arity_guards(corpus):
    with pytest.raises(CriterionInapplicable):
        triviality(corpus["Ax1"], A_T)  # fewer than three variables
    with pytest.raises(CriterionInapplicable):
        triviality(corpus["Ax2"], corpus["A_M8"])  # subject below reference


def test_standard_nontriviality_is_cached(corpus):
    is_nontrivial_standard.cache_clear()
    assert is_nontrivial_standard(corpus["A_M8"])
    before = is_nontrivial_standard.cache_info().hits
    assert is_nontrivial_standard(corpus["A_M8"])
    assert is_nontrivial_standard.cache_info().hits == before + 1


def test_star_companion_is_quasi_trivial(corpus):
    report = quasi_triviality(corpus["Star"], corpus["A_M8"])
    assert report.verdict == "quasi-trivial"
    assert report.case_used == 1
    assert report.witness.rho == (1, 2, 3, 4)
    assert report.witness_left_oriented.mapping == {
        "a": "a",
        "b": "b",
        "d": "c",
        "e": "d",
    }
    assert report.cross_check == "agree"
    assert report.hypothesis_met == (True, True)


def test_five_variable_companion_is_quasi_trivial(corpus):
    report = quasi_triviality(corpus["DoubleStar"], corpus["A_M8"])
    assert report.verdict == "quasi-trivial"
    assert report.case_used == 2
    assert report.witness.rho == (1, 2, 3, 4, 5)
    assert report.witness.sigma.mapping == {
        "a": "a",
        "b": "b",
        "c": "v1",
        "d": "c",
        "e": "d",
    }
    assert report.witness_left_oriented == report.witness.sigma
    assert report.cross_check is None  # mirrored sweep needs equal arities
    assert report.hypothesis_met == (True, True)


def test_hypothesis_flags_are_recorded_not_enforced(corpus):
    report = quasi_triviality(corpus["A_t"], corpus["A_M8"])
    assert report.hypothesis_met == (False, True)
    assert report.verdict in ("quasi-trivial", "quasi-nontrivial")


def test_quasi_triviality_is_reflexive(corpus):
    for entry in corpus:
        if entry.arity < 3:
            continue
        report = quasi_triviality(entry, entry)
        assert report.verdict == "quasi-trivial", entry.name
        assert report.witness.rho == tuple(range(1, entry.arity + 1))
        assert report.map_count == 1


def test_quasi_triviality_is_symmetric(corpus):
    entries = [e for e in corpus if e.arity >= 3]
    five = corpus.established_five()
    pairs = [(x, y) for x in five for y in five]
    rng = random.Random(7)
    for _ in range(20):
        pairs.append((rng.choice(entries), rng.choice(entries)))
    for x, y in pairs:
        assert is_quasi_trivial(x, y) == is_quasi_trivial(y, x), (x.name, y.name)


def test_comparison_against_the_standard_matches_triviality(corpus):
    # with the three-variable standard as right side, the quasi-triviality
    # comparison degenerates to the plain triviality criterion
    for entry in corpus:
        if entry.arity < 3:
            continue
        assert is_quasi_trivial(entry, A_T) == is_trivial(entry, A_T), entry.name


def test_quasi_triviality_composes_along_monotone_arities(corpus):
    names = ("A_M8", "Star", "DoubleStar", "A_t", "A_t-1", "A_S1")
    entries = [corpus[n] for n in names]
    verdict = {}
    for x in entries:
        for y in entries:
            verdict[(x.name, y.name)] = is_quasi_trivial(x, y)
    # the chain through the four-variable companions must actually fire
    assert verdict[("A_M8", "Star")] and verdict[("Star", "DoubleStar")]
    checked = 0
    for x in entries:
        for y in entries:
            for z in entries:
                if not (x.arity <= y.arity <= z.arity):
                    continue
                if verdict[(x.name, y.name)] and verdict[(y.name, z.name)]:
                    assert verdict[(x.name, z.name)], (x.name, y.name, z.name)
                    checked += 1
    assert checked > 0


def test_quasi_triviality_arity_guard(corpus):
    with pytest.raises(CriterionInapplicable):
        quasi_triviality(corpus["Ax1"], corpus["A_M8"])
    with pytest.raises(CriterionInapplicable):
        quasi_triviality(corpus["A_M8"], corpus["Ax3s"])


def test_matrix_over_the_five_schemata(corpus):
    five = corpus.established_five()
    cells = qnt_matrix(five)
    assert len(cells) == 25
    for (a, b), cell in cells.items():
        assert isinstance(cell, QntReport)
        if a == b:
            assert cell.verdict == "quasi-trivial"
        else:
            assert cell.verdict == "quasi-nontrivial"
            assert len(cell.refutations) == cell.map_count == 24
            certify_refutations(cell, *qnt_bodies(cell))
        assert cell.cross_check == "agree"


def test_matrix_marks_inapplicable_pairs_instead_of_raising(corpus):
    cells = qnt_matrix((corpus["Ax1"], corpus["A_M8"]))
    assert isinstance(cells[("Ax1", "Ax1")], InapplicablePair)
    assert isinstance(cells[("Ax1", "A_M8")], InapplicablePair)
    assert isinstance(cells[("A_M8", "Ax1")], InapplicablePair)
    assert isinstance(cells[("A_M8", "A_M8")], QntReport)
    assert "variables" in cells[("Ax1", "A_M8")].reason


def test_nested_variant_nontrivial_against_the_flattened_standard(corpus):
    report = triviality(corpus["A_S3"], A_T1)
    assert report.verdict == "nontrivial"
    assert len(report.refutations) == 24
    certify_refutations(report, corpus["A_S3"].body, A_T1.body)
