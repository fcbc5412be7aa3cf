"""A checking kernel for Hilbert-style derivations in L1.

Scripts are sequences of labeled lines, each carrying a stated formula and a
justification. The kernel never searches for proofs; it only confirms that
every line follows by its stated rule, and it keeps checking after a failure
so a corrupted line is isolated rather than cascading. Substitution steps
are sound here because assumptions are always taken as schemata (closed
under uniform substitution), as are the base axioms.

Script text format, one directive or step per line ('#' starts a comment):

    name: base_from_m8
    assume: A_M8 := eps(a,b) & eps(c,d) -> ...
    meta: reconstructed = true
    conclude: eps(a,b) -> eps(a,a)
    s1: eps(a,b) & eps(a,b) -> ... ; SCHEMA(A_M8, {c->a, d->b})
    s2: eps(a,b) -> eps(a,a) ; TAUTCONSEQ(s1)

Justifications: TAUT, AXIOM(name[, sigma]), SCHEMA(name[, sigma]),
MP(antecedent, implication), SUBST(line, sigma), TAUTCONSEQ(line, ...).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .axioms import AXIOMS_BY_NAME
from .formula import Formula, Implies, SchemaEntry
from .semantics import entails, is_tautology
from .substitution import Substitution
from .syntax import ParseError, SourceSpan, parse_formula, parse_substitution_mapping

DIRECTIVES = ("name", "assume", "meta", "conclude")


@dataclass(frozen=True, slots=True)
class Taut:
    def describe(self) -> str:
        return "TAUT"


@dataclass(frozen=True, slots=True)
class AxiomRef:
    axiom: str
    sigma: Substitution

    def describe(self) -> str:
        return f"AXIOM({self.axiom}, {self.sigma})"


@dataclass(frozen=True, slots=True)
class SchemaRef:
    schema: str
    sigma: Substitution

    def describe(self) -> str:
        return f"SCHEMA({self.schema}, {self.sigma})"


@dataclass(frozen=True, slots=True)
class ModusPonens:
    antecedent: str
    implication: str

    def describe(self) -> str:
        return f"MP({self.antecedent}, {self.implication})"


@dataclass(frozen=True, slots=True)
class Subst:
    source: str
    sigma: Substitution

    def describe(self) -> str:
        return f"SUBST({self.source}, {self.sigma})"


@dataclass(frozen=True, slots=True)
class TautConseq:
    sources: tuple[str, ...]

    def describe(self) -> str:
        return f"TAUTCONSEQ({', '.join(self.sources)})"


Justification = Taut | AxiomRef | SchemaRef | ModusPonens | Subst | TautConseq


@dataclass(frozen=True, slots=True)
class ProofLine:
    label: str
    formula: Formula
    justification: Justification


@dataclass(frozen=True, slots=True)
class ProofScript:
    name: str
    assumptions: tuple[SchemaEntry, ...]
    lines: tuple[ProofLine, ...]
    conclusion: Formula | None = None
    metadata: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True, slots=True)
class LineResult:
    label: str
    rule: str
    ok: bool
    detail: str


@dataclass(frozen=True, slots=True)
class ProofCheckResult:
    name: str
    ok: bool
    lines: tuple[LineResult, ...]
    conclusion_ok: bool
    failures: tuple[str, ...]


def _check_line(
    line: ProofLine,
    earlier: dict[str, Formula],
    assumptions: dict[str, SchemaEntry],
) -> LineResult:
    j = line.justification
    rule = j.describe()

    def fail(detail: str) -> LineResult:
        return LineResult(line.label, rule, False, detail)

    def ok(detail: str = "") -> LineResult:
        return LineResult(line.label, rule, True, detail)

    if isinstance(j, Taut):
        verdict = is_tautology(line.formula)
        if verdict.holds:
            return ok("tautology confirmed")
        return fail(f"not a tautology; counterexample {verdict.witness}")

    if isinstance(j, AxiomRef):
        schema = AXIOMS_BY_NAME.get(j.axiom)
        if schema is None:
            return fail(f"unknown axiom {j.axiom!r}")
        if j.sigma.apply(schema.body) == line.formula:
            return ok(f"instance of {j.axiom}")
        return fail(f"stated formula is not {j.axiom} under {j.sigma}")

    if isinstance(j, SchemaRef):
        schema = assumptions.get(j.schema)
        if schema is None:
            return fail(f"{j.schema!r} is not an assumed schema")
        if j.sigma.apply(schema.body) == line.formula:
            return ok(f"instance of assumed {j.schema}")
        return fail(f"stated formula is not {j.schema} under {j.sigma}")

    if isinstance(j, ModusPonens):
        ante = earlier.get(j.antecedent)
        impl = earlier.get(j.implication)
        if ante is None or impl is None:
            return fail("cited line does not precede this one")
        if impl == Implies(ante, line.formula):
            return ok("modus ponens")
        return fail(
            f"line {j.implication} is not ({j.antecedent} -> this line)"
        )

    if isinstance(j, Subst):
        src = earlier.get(j.source)
        if src is None:
            return fail("cited line does not precede this one")
        if j.sigma.apply(src) == line.formula:
            return ok(f"substitution instance of {j.source}")
        return fail(f"stated formula is not {j.source} under {j.sigma}")

    if isinstance(j, TautConseq):
        premises = []
        for ref in j.sources:
            f = earlier.get(ref)
            if f is None:
                return fail(f"cited line {ref!r} does not precede this one")
            premises.append(f)
        verdict = entails(premises, line.formula)
        if verdict.holds:
            return ok("tautological consequence")
        return fail(f"does not follow; counterexample {verdict.witness}")

    return fail(f"unknown justification {j!r}")


def check_proof(script: ProofScript) -> ProofCheckResult:
    """Verify every line; failures are recorded and do not stop the check."""
    assumptions = {s.name: s for s in script.assumptions}
    earlier: dict[str, Formula] = {}
    results: list[LineResult] = []
    failures: list[str] = []
    for line in script.lines:
        if line.label in earlier:
            results.append(
                LineResult(line.label, "", False, "duplicate label")
            )
            failures.append(line.label)
            continue
        result = _check_line(line, earlier, assumptions)
        results.append(result)
        if not result.ok:
            failures.append(line.label)
        # later lines may cite this one by its stated formula either way;
        # that is what isolates a single corrupted line
        earlier[line.label] = line.formula
    conclusion_ok = True
    if script.conclusion is not None:
        conclusion_ok = bool(script.lines) and (
            script.lines[-1].formula == script.conclusion
        )
        if not conclusion_ok:
            failures.append("(conclusion)")
    return ProofCheckResult(
        name=script.name,
        ok=not failures,
        lines=tuple(results),
        conclusion_ok=conclusion_ok,
        failures=tuple(failures),
    )


# script text parsing


def _split_args(text: str, span: SourceSpan) -> list[str]:
    args: list[str] = []
    depth = 0
    current = ""
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == "," and depth == 0:
            args.append(current.strip())
            current = ""
        else:
            current += ch
    if current.strip():
        args.append(current.strip())
    if depth != 0:
        raise ParseError("unbalanced braces in justification", span)
    return args


def _parse_sigma(arg: str, lineno: int) -> Substitution:
    return Substitution.of(parse_substitution_mapping(arg, line=lineno))


def _parse_justification(text: str, lineno: int) -> Justification:
    span = SourceSpan(lineno, 1)
    text = text.strip()
    if text == "TAUT":
        return Taut()
    if "(" not in text or not text.endswith(")"):
        raise ParseError(f"malformed justification {text!r}", span)
    head, _, inner = text.partition("(")
    head = head.strip()
    args = _split_args(inner[:-1], span)
    if head == "AXIOM":
        if len(args) == 1:
            return AxiomRef(args[0], Substitution.identity())
        if len(args) == 2:
            return AxiomRef(args[0], _parse_sigma(args[1], lineno))
        raise ParseError("AXIOM takes a name and an optional substitution", span)
    if head == "SCHEMA":
        if len(args) == 1:
            return SchemaRef(args[0], Substitution.identity())
        if len(args) == 2:
            return SchemaRef(args[0], _parse_sigma(args[1], lineno))
        raise ParseError("SCHEMA takes a name and an optional substitution", span)
    if head == "MP":
        if len(args) != 2:
            raise ParseError("MP takes two line labels", span)
        return ModusPonens(args[0], args[1])
    if head == "SUBST":
        if len(args) != 2:
            raise ParseError("SUBST takes a line label and a substitution", span)
        return Subst(args[0], _parse_sigma(args[1], lineno))
    if head == "TAUTCONSEQ":
        if not args:
            raise ParseError("TAUTCONSEQ needs at least one line label", span)
        return TautConseq(tuple(args))
    raise ParseError(f"unknown justification {head!r}", span)


def parse_proof_script(text: str, default_name: str = "script") -> ProofScript:
    name = default_name
    assumptions: list[SchemaEntry] = []
    metadata: dict[str, str] = {}
    conclusion: Formula | None = None
    lines: list[ProofLine] = []
    seen_labels: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        span = SourceSpan(lineno, 1)
        if ":" not in stripped:
            raise ParseError("expected 'label: formula ; JUSTIFICATION'", span)
        head, _, rest = stripped.partition(":")
        head = head.strip()
        rest = rest.strip()
        if head == "name":
            name = rest
        elif head == "assume":
            if ":=" not in rest:
                raise ParseError("assume needs 'Name := formula'", span)
            schema_name, _, formula_text = rest.partition(":=")
            schema_name = schema_name.strip()
            body = parse_formula(formula_text.strip(), line=lineno)
            assumptions.append(SchemaEntry.make(schema_name, body))
        elif head == "meta":
            if "=" not in rest:
                raise ParseError("meta needs 'key = value'", span)
            key, _, value = rest.partition("=")
            metadata[key.strip()] = value.strip()
        elif head == "conclude":
            conclusion = parse_formula(rest, line=lineno)
        else:
            if head in DIRECTIVES or not head or not head.replace("_", "").isalnum():
                raise ParseError(f"invalid step label {head!r}", span)
            if head in seen_labels:
                raise ParseError(f"duplicate step label {head!r}", span)
            if ";" not in rest:
                raise ParseError("step needs 'formula ; JUSTIFICATION'", span)
            formula_text, _, just_text = rest.rpartition(";")
            formula = parse_formula(formula_text.strip(), line=lineno)
            justification = _parse_justification(just_text, lineno)
            seen_labels.add(head)
            lines.append(ProofLine(head, formula, justification))

    if not lines:
        raise ParseError("script has no proof lines", SourceSpan(1, 1))
    return ProofScript(
        name=name,
        assumptions=tuple(assumptions),
        lines=tuple(lines),
        conclusion=conclusion,
        metadata=metadata,
    )


def load_proof_file(path: str | Path) -> ProofScript:
    p = Path(path)
    return parse_proof_script(p.read_text(), default_name=p.stem)


def bundled_scripts() -> dict[str, ProofScript]:
    """All proof scripts shipped in the proofs/ data directory, by name."""
    out: dict[str, ProofScript] = {}
    root = resources.files("l1ax").joinpath("proofs")
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".proof"):
            script = parse_proof_script(
                entry.read_text(), default_name=entry.name[: -len(".proof")]
            )
            out[script.name] = script
    return out


def check_bundled_proofs() -> dict[str, ProofCheckResult]:
    return {name: check_proof(s) for name, s in bundled_scripts().items()}


def derived_conclusions() -> dict[Formula, str]:
    """Conclusions of assumption-free bundled scripts that check out.

    Used to upgrade 'valid (admissible semantics)' verdicts to
    'provable (derivation checked)'.
    """
    out: dict[Formula, str] = {}
    for name, script in bundled_scripts().items():
        if script.assumptions:
            continue
        if check_proof(script).ok and script.lines:
            out.setdefault(script.lines[-1].formula, name)
    return out
