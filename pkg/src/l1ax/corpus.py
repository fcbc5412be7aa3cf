"""The bundled schema corpus and its metadata.

Thirty entries: the base axiom schemata, their single-schema packagings, the
established characteristic schemata, the two starred companions and sixteen
conjectured schemata. Formulas live in data/corpus.schemata; status and
naming metadata live here. Two exchange-series entries carry a legacy_label
because they circulated under the same printed labels as the A_S1ex pair;
the legacy labels are informational only and never used for lookup.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .formula import SchemaEntry
from .substitution import is_reserved_fresh_name
from .syntax import parse_schema_file

ESTABLISHED = (
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
)

CONJECTURES = (
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

# the five schemata of the pairwise quasi-nontriviality theorem
ESTABLISHED_FIVE = ("A_M8", "A_S1", "A_S2", "A_S3N", "A_S3Nd")

LEGACY_LABELS = {
    "A_S2ex2": "A_S1ex2",
    "A_S2ex3": "A_S1ex3",
}


@dataclass(frozen=True, slots=True)
class Corpus:
    entries: dict[str, SchemaEntry]
    source: str

    def __getitem__(self, name: str) -> SchemaEntry:
        try:
            return self.entries[name]
        except KeyError:
            raise KeyError(
                f"unknown schema name {name!r}; known names: "
                + ", ".join(self.entries)
            ) from None

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def __iter__(self):
        return iter(self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)

    def names(self) -> tuple[str, ...]:
        return tuple(self.entries)

    def status(self, name: str) -> str:
        self[name]
        return "conjecture" if name in CONJECTURES else "established"

    def legacy_label(self, name: str) -> str | None:
        return LEGACY_LABELS.get(name)

    def established_five(self) -> tuple[SchemaEntry, ...]:
        return tuple(self[name] for name in ESTABLISHED_FIVE)

    def conjecture_entries(self) -> tuple[SchemaEntry, ...]:
        return tuple(self[name] for name in CONJECTURES if name in self.entries)


def validate_entries(entries: dict[str, SchemaEntry], source: str) -> None:
    for entry in entries.values():
        bad = [v for v in entry.variables if is_reserved_fresh_name(v)]
        if bad:
            raise ValueError(
                f"{source}: schema {entry.name!r} uses reserved fresh variable"
                f" names {bad}; the pools y1.., u1.., v1.. are reserved for"
                " generated substitutions"
            )


def load_corpus(path: str | Path | None = None) -> Corpus:
    """Load the bundled corpus, or any schema file in the same format."""
    if path is None:
        source = "bundled corpus"
        text = (
            resources.files("l1ax").joinpath("data/corpus.schemata").read_text()
        )
    else:
        source = str(path)
        text = Path(path).read_text()
    entries = parse_schema_file(text)
    validate_entries(entries, source)
    return Corpus(entries=entries, source=source)
