"""The admissible-valuation decision procedure on square atom grids."""

import pytest

from l1ax.decision import (
    POOL_CAP,
    admissible_count,
    admissible_mask,
    admissible_valuations,
    axiom_instances,
    grid_atoms,
    holds_in_all_admissible,
    is_theorem,
    iter_set_bits,
)
from l1ax.formula import Atom
from l1ax.semantics import Valuation, evaluate
from l1ax.syntax import parse_formula

POOLS = (("a",), ("a", "b"), ("a", "b", "c"), ("a", "b", "c", "d"))


def test_grid_atoms_row_major():
    assert grid_atoms(("a", "b")) == (
        Atom("a", "a"),
        Atom("a", "b"),
        Atom("b", "a"),
        Atom("b", "b"),
    )


def test_admissible_counts_frozen():
    assert [admissible_count(p) for p in POOLS] == [2, 7, 36, 256]


def test_admissible_counts_match_naive_enumeration():
    # independent recount by brute force, pools small enough to afford it
    for pool in POOLS[:3]:
        domain = grid_atoms(pool)
        instances = list(axiom_instances(pool))
        count = sum(
            1
            for k in range(2 ** len(domain))
            if all(
                evaluate(inst, Valuation.at_counter(domain, k))
                for inst in instances
            )
        )
        assert count == admissible_count(pool)


def test_shortened_symmetry_axiom_carves_the_same_sets():
    for pool in POOLS:
        assert admissible_mask(pool, "Ax3") == admissible_mask(pool, "Ax3s")


def test_axiom_instance_counts():
    pool = ("a", "b")
    instances = list(axiom_instances(pool))
    # 4 two-variable instances plus 8 each for the two three-variable axioms
    assert len(instances) == 4 + 8 + 8


def test_membership_is_not_symmetric():
    f = parse_formula("eps(a,b) -> eps(b,a)")
    verdict = is_theorem(f)
    assert not verdict.valid
    assert verdict.pool == ("a", "b")
    w = verdict.counter_valuation
    assert w.counter == 12
    assert w.false_atoms() == (Atom("b", "a"), Atom("b", "b"))
    # the witness refutes the formula yet satisfies every axiom instance
    assert evaluate(f, w) is False
    for inst in axiom_instances(("a", "b")):
        assert evaluate(inst, w)


def test_base_schemata_are_valid(corpus):
    for name in ("Ax1", "Ax2", "Ax3", "Ax3s", "A_t", "A_t-1", "A_M8", "Star"):
        assert is_theorem(corpus[name].body).valid, name


def test_unrestricted_transitivity_of_converse_fails():
    assert not is_theorem(parse_formula("eps(a,b) & eps(b,c) -> eps(c,a)")).valid


def test_holds_in_all_admissible_allows_spectator_names():
    f = parse_formula("eps(a,b) -> eps(a,a)")
    assert holds_in_all_admissible(f, ("a", "b")).valid
    assert holds_in_all_admissible(f, ("a", "b", "c")).valid


def test_pool_cap_guard():
    too_big = tuple("abcdef")
    assert len(too_big) > POOL_CAP
    with pytest.raises(ValueError):
        admissible_mask(too_big)


def test_duplicate_pool_names_rejected():
    with pytest.raises(ValueError):
        admissible_count(("a", "a"))


def test_iter_set_bits():
    assert list(iter_set_bits(0)) == []
    assert list(iter_set_bits(0b101001)) == [0, 3, 5]


def test_single_name_pool_valuations():
    vals = list(admissible_valuations(("a",)))
    assert sorted(v.counter for v in vals) == [0, 1]
