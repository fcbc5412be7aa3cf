"""The bundled schema corpus: names, statuses, and transcription pins."""

import pytest

from l1ax.axioms import A_T, A_T1, AX1, AX2, AX3, AX3S
from l1ax.corpus import load_corpus
from l1ax.formula import And, Implies, conjoin, eps
from l1ax.syntax import parse_formula, print_formula

ALL_NAMES = (
    "Ax1",
    "Ax2",
    "Ax3",
    "Ax3s",
    "A_t",
    "A_t-1",
    "A_M8",
    "A_S1",
    "A_S2",
    "A_S3",
    "A_S3N",
    "A_S3Nd",
    "Star",
    "DoubleStar",
    "A_k1",
    "A_k2",
    "A_k3",
    "A_ad1",
    "A_ad2",
    "A_ad6",
    "A_ad6_2",
    "A_ad7",
    "A_ad7_2",
    "A_ad8",
    "A_S1ex1",
    "A_S1ex2",
    "A_S1ex3",
    "A_S2ex1",
    "A_S2ex2",
    "A_S2ex3",
)

ESTABLISHED = ALL_NAMES[:14]
CONJECTURES = ALL_NAMES[14:]


def test_names_and_size(corpus):
    assert corpus.names() == ALL_NAMES
    assert len(corpus) == 30
    assert "A_M8" in corpus
    assert "A_M9" not in corpus


def test_statuses(corpus):
    for name in ESTABLISHED:
        assert corpus.status(name) == "established"
    for name in CONJECTURES:
        assert corpus.status(name) == "conjecture"


def test_established_five(corpus):
    five = corpus.established_five()
    assert tuple(e.name for e in five) == ("A_M8", "A_S1", "A_S2", "A_S3N", "A_S3Nd")
    for e in five:
        assert e == corpus[e.name]


def test_conjecture_entries(corpus):
    assert tuple(e.name for e in corpus.conjecture_entries()) == CONJECTURES


def test_legacy_labels(corpus):
    assert corpus.legacy_label("A_S2ex2") == "A_S1ex2"
    assert corpus.legacy_label("A_S2ex3") == "A_S1ex3"
    assert corpus.legacy_label("A_S1") is None


def test_axiom_constants_match_the_corpus(corpus):
    for constant in (AX1, AX2, AX3, AX3S, A_T, A_T1):
        assert corpus[constant.name] == constant


def test_unknown_name_raises_with_the_known_list(corpus):
    with pytest.raises(KeyError) as exc:
        corpus["A_M9"]
    assert "A_M9" in str(exc.value)
    assert "A_M8" in str(exc.value)


def test_reference_schema_transcription(corpus):
    expected = Implies(
        And(eps("a", "b"), eps("c", "d")),
        conjoin(
            eps("a", "a"),
            eps("c", "c"),
            Implies(eps("b", "c"), And(eps("a", "d"), eps("b", "a"))),
        ),
    )
    assert corpus["A_M8"].body == expected
    assert corpus["A_M8"].variables == ("a", "b", "c", "d")


def test_flat_conjunction_schema_transcription(corpus):
    expected = Implies(
        And(eps("a", "b"), eps("b", "c")),
        conjoin(eps("a", "a"), eps("b", "b"), eps("a", "c"), eps("b", "a")),
    )
    assert corpus["A_ad8"].body == expected


def test_companion_schemata_variable_order(corpus):
    # the d-before-c occurrence order drives the map enumeration
    assert corpus["Star"].variables == ("a", "b", "d", "e")
    assert corpus["DoubleStar"].variables == ("a", "b", "d", "e", "c")
    assert corpus["Star"].body == parse_formula(
        "eps(a,b) & eps(d,e) -> eps(d,d) & eps(a,a)"
        " & (eps(b,d) -> eps(a,e)) & (!eps(b,a) -> !eps(b,d))"
    )
    assert corpus["DoubleStar"].body == parse_formula(
        "eps(a,b) & eps(d,e) -> eps(d,d) & eps(a,a)"
        " & (eps(b,d) -> eps(a,e) & eps(b,a)) & (eps(c,c) | !eps(c,c))"
    )


def test_every_body_round_trips_through_the_printer(corpus):
    for entry in corpus:
        assert parse_formula(print_formula(entry.body)) == entry.body


def test_loading_a_custom_schema_file(tmp_path):
    path = tmp_path / "mine.schemata"
    path.write_text("Mine := eps(a,b) -> eps(a,a)\n")
    custom = load_corpus(path)
    assert custom.names() == ("Mine",)
    assert custom["Mine"].arity == 2
    # bundled statuses still answer for custom names
    assert custom.status("Mine") == "established"


def test_reserved_fresh_names_rejected_at_load(tmp_path):
    path = tmp_path / "bad.schemata"
    path.write_text("Bad := eps(y1,a) -> eps(y1,y1)\n")
    with pytest.raises(ValueError) as exc:
        load_corpus(path)
    assert "reserved" in str(exc.value)


def test_missing_file_raises(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_corpus(tmp_path / "nope.schemata")
