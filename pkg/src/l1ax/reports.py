"""Serialization of report objects to JSON-ready data and terminal text.

jsonable() lowers every report dataclass to plain dicts and lists:
formulas become their printed form, substitutions become source-to-target
maps, permutations become lists, and valuations become an atom list plus
the true subset. Aggregate reports (matrix cells, conjecture rows) carry
witness data but compress refutation sweeps to their count; the
single-pair commands expose every refutation in full.
"""

from __future__ import annotations

from functools import singledispatch
from typing import Any

from .characterize import CharacterizationReport, RecoveryOutcome
from .criteria import InapplicablePair, QntReport, Refutation, TrivialityReport
from .decision import TheoremVerdict
from .formula import Atom, Formula, SchemaEntry
from .proofs import LineResult, ProofCheckResult
from .semantics import SemanticsVerdict, Valuation
from .substitution import CandidateMap, Substitution
from .syntax import print_formula
from .verify import ConjectureRow, VerificationItem, VerificationReport


@singledispatch
def jsonable(obj: Any) -> Any:
    raise TypeError(f"no JSON form for {type(obj).__name__}")


@jsonable.register
def _(obj: type(None)) -> None:
    return None


@jsonable.register
def _(obj: Atom) -> str:
    return str(obj)


@jsonable.register
def _(obj: Formula) -> str:
    return print_formula(obj)


@jsonable.register
def _(obj: SchemaEntry) -> dict:
    return {
        "name": obj.name,
        "formula": print_formula(obj.body),
        "variables": list(obj.variables),
        "arity": obj.arity,
    }


@jsonable.register
def _(obj: Valuation) -> dict:
    return {
        "atoms": [str(a) for a in obj.domain],
        "true": [str(a) for a in obj.domain if a in obj.true_atoms],
    }


@jsonable.register
def _(obj: Substitution) -> dict:
    return {src: tgt for src, tgt in obj.items}


@jsonable.register
def _(obj: CandidateMap) -> dict:
    return {"rho": list(obj.rho), "sigma": jsonable(obj.sigma)}


@jsonable.register
def _(obj: SemanticsVerdict) -> dict:
    return {"holds": obj.holds, "witness": jsonable(obj.witness)}


@jsonable.register
def _(obj: TheoremVerdict) -> dict:
    return {
        "valid": obj.valid,
        "pool": list(obj.pool),
        "counter_valuation": jsonable(obj.counter_valuation),
    }


@jsonable.register
def _(obj: Refutation) -> dict:
    return {
        "rho": list(obj.candidate.rho),
        "sigma": jsonable(obj.candidate.sigma),
        "valuation": jsonable(obj.valuation),
        "substituted_value": obj.substituted_value,
        "target_value": obj.target_value,
    }


@jsonable.register
def _(obj: TrivialityReport) -> dict:
    return {
        "subject": obj.subject.name,
        "reference": obj.reference.name,
        "verdict": obj.verdict,
        "witness": jsonable(obj.witness),
        "refutations": [jsonable(r) for r in obj.refutations],
        "map_count": obj.map_count,
    }


@jsonable.register
def _(obj: QntReport) -> dict:
    return {
        "left": obj.left.name,
        "right": obj.right.name,
        "case_used": obj.case_used,
        "verdict": obj.verdict,
        "witness": jsonable(obj.witness),
        "witness_left_oriented": jsonable(obj.witness_left_oriented),
        "refutations": [jsonable(r) for r in obj.refutations],
        "map_count": obj.map_count,
        "hypothesis_met": list(obj.hypothesis_met),
        "cross_check": obj.cross_check,
    }


@jsonable.register
def _(obj: InapplicablePair) -> dict:
    return {
        "left": obj.left.name,
        "right": obj.right.name,
        "verdict": "inapplicable",
        "reason": obj.reason,
    }


@jsonable.register
def _(obj: RecoveryOutcome) -> dict:
    return {
        "axiom": obj.axiom.name,
        "recovered": obj.recovered,
        "pool_size": obj.pool_size,
        "witness_maps": [jsonable(s) for s in obj.witness_maps],
        "witness_instances": [print_formula(f) for f in obj.witness_instances],
        "counterexample": jsonable(obj.counterexample),
    }


@jsonable.register
def _(obj: CharacterizationReport) -> dict:
    return {
        "subject": obj.subject.name,
        "validity": jsonable(obj.validity),
        "recoveries": [jsonable(r) for r in obj.recoveries],
        "characteristic": obj.characteristic,
        "max_pool": obj.max_pool,
        "derivation_script": obj.derivation_script,
    }


@jsonable.register
def _(obj: LineResult) -> dict:
    return {
        "label": obj.label,
        "rule": obj.rule,
        "ok": obj.ok,
        "detail": obj.detail,
    }


@jsonable.register
def _(obj: ProofCheckResult) -> dict:
    return {
        "name": obj.name,
        "ok": obj.ok,
        "lines": [jsonable(l) for l in obj.lines],
        "conclusion_ok": obj.conclusion_ok,
        "failures": list(obj.failures),
    }


@jsonable.register
def _(obj: VerificationItem) -> dict:
    return {"name": obj.name, "passed": obj.passed, "detail": obj.detail}


@jsonable.register
def _(obj: VerificationReport) -> dict:
    return {"ok": obj.ok, "items": [jsonable(i) for i in obj.items]}


def qnt_summary(cell: QntReport | InapplicablePair) -> dict:
    """Compressed matrix/sweep cell: witnesses kept, refutations counted."""
    data = jsonable(cell)
    if "refutations" in data:
        data["refutation_count"] = len(data.pop("refutations"))
    return data


@jsonable.register
def _(obj: ConjectureRow) -> dict:
    nontriv = jsonable(obj.nontriviality)
    nontriv["refutation_count"] = len(nontriv.pop("refutations"))
    return {
        "schema": jsonable(obj.entry),
        "characterization": jsonable(obj.characterization),
        "nontriviality": nontriv,
        "comparisons": {
            name: qnt_summary(rep) for name, rep in obj.comparisons.items()
        },
    }


# terminal text


def valuation_text(v: Valuation) -> str:
    """The shorter of the false-side and true-side descriptions."""
    false = [a for a in v.domain if a not in v.true_atoms]
    true = [a for a in v.domain if a in v.true_atoms]
    if not false:
        return "all atoms true"
    if not true:
        return "all atoms false"
    if len(false) <= len(true):
        return "false: " + ", ".join(map(str, false)) + "; all other atoms true"
    return "true: " + ", ".join(map(str, true)) + "; all other atoms false"


def _bool_text(value: bool) -> str:
    return "yes" if value else "no"


def _count(n: int, noun: str) -> str:
    return f"{n} {noun}" if n == 1 else f"{n} {noun}s"


def refutation_lines(refutations: tuple[Refutation, ...]) -> list[str]:
    lines = []
    for i, ref in enumerate(refutations, start=1):
        rho = ",".join(str(k) for k in ref.candidate.rho)
        lines.append(
            f"  {i}. sigma {ref.candidate.sigma} rho ({rho}): "
            f"substituted={str(ref.substituted_value).lower()} "
            f"target={str(ref.target_value).lower()} under {valuation_text(ref.valuation)}"
        )
    return lines


def triviality_text(report: TrivialityReport) -> str:
    lines = [
        f"subject: {report.subject.name}",
        f"reference: {report.reference.name}",
        f"verdict: {report.verdict} w.r.t. {report.reference.name}",
        f"maps examined: {report.map_count}",
    ]
    if report.witness is not None:
        rho = ",".join(str(k) for k in report.witness.rho)
        lines.append(f"witness: sigma {report.witness.sigma} rho ({rho})")
    if report.refutations:
        lines.append("refutations:")
        lines.extend(refutation_lines(report.refutations))
    return "\n".join(lines)


def qnt_text(report: QntReport) -> str:
    lines = [
        f"left: {report.left.name}",
        f"right: {report.right.name}",
        f"case: {report.case_used}",
        f"verdict: {report.verdict}",
        f"maps examined: {report.map_count}",
    ]
    if report.witness is not None:
        rho = ",".join(str(k) for k in report.witness.rho)
        lines.append(f"witness: sigma {report.witness.sigma} rho ({rho})")
    if report.witness_left_oriented is not None:
        lines.append(f"witness (left-oriented): {report.witness_left_oriented}")
    hyp_left, hyp_right = report.hypothesis_met
    lines.append(
        "hypothesis (both nontrivial w.r.t. A_t): "
        f"left={_bool_text(hyp_left)} right={_bool_text(hyp_right)}"
    )
    if report.cross_check is not None:
        lines.append(f"cross-check (mirrored sweep): {report.cross_check}")
    if report.refutations:
        lines.append("refutations:")
        lines.extend(refutation_lines(report.refutations))
    return "\n".join(lines)


def matrix_text(cells: dict[tuple[str, str], QntReport | InapplicablePair]) -> str:
    names = []
    for a, _ in cells:
        if a not in names:
            names.append(a)
    lines = [f"entries: {', '.join(names)}"]
    off_diagonal_qnt = 0
    off_diagonal = 0
    for (a, b), cell in cells.items():
        if isinstance(cell, InapplicablePair):
            lines.append(f"{a} vs {b}: inapplicable ({cell.reason})")
            continue
        note = ""
        if cell.witness is not None and a == b:
            note = " (identity witness)"
        elif cell.witness_left_oriented is not None:
            note = f" (sigma {cell.witness_left_oriented})"
        elif cell.witness is not None:
            note = f" (sigma {cell.witness.sigma})"
        lines.append(
            f"{a} vs {b}: {cell.verdict} ({_count(cell.map_count, 'map')} examined){note}"
        )
        if a != b:
            off_diagonal += 1
            if cell.verdict == "quasi-nontrivial":
                off_diagonal_qnt += 1
    lines.append(
        f"off-diagonal quasi-nontrivial: {off_diagonal_qnt}/{off_diagonal}"
    )
    return "\n".join(lines)


def theorem_text(verdict: TheoremVerdict) -> str:
    pool = ",".join(verdict.pool)
    if verdict.valid:
        return f"valid\npool: {pool}"
    assert verdict.counter_valuation is not None
    return (
        "not valid\n"
        f"pool: {pool}\n"
        f"counter-valuation: {valuation_text(verdict.counter_valuation)}"
    )


def taut_text(verdict: SemanticsVerdict) -> str:
    if verdict.holds:
        return "tautology"
    assert verdict.witness is not None
    return f"not a tautology\ncounterexample: {valuation_text(verdict.witness)}"


def characterization_text(report: CharacterizationReport) -> str:
    lines = [f"schema: {report.subject.name}"]
    if report.validity.valid:
        lines.append(f"valid: yes (pool {','.join(report.validity.pool)})")
    else:
        lines.append("valid: no")
        assert report.validity.counter_valuation is not None
        lines.append(
            f"counter-valuation: {valuation_text(report.validity.counter_valuation)}"
        )
    if report.derivation_script is not None:
        lines.append(f"provable: yes (bundled script {report.derivation_script})")
    lines.append("recovery:")
    for rec in report.recoveries:
        if rec.recovered:
            maps = "; ".join(str(s) for s in rec.witness_maps)
            lines.append(
                f"  {rec.axiom.name}: recovered (pool {rec.pool_size}) via {maps}"
            )
        else:
            lines.append(
                f"  {rec.axiom.name}: not recovered (pools <= {rec.pool_size})"
            )
            if rec.counterexample is not None:
                lines.append(
                    f"    counterexample: {valuation_text(rec.counterexample)}"
                )
    lines.append(f"characteristic: {_bool_text(report.characteristic)}")
    return "\n".join(lines)


def proof_check_text(result: ProofCheckResult) -> str:
    lines = [f"script: {result.name} ({len(result.lines)} lines)"]
    for lr in result.lines:
        mark = "ok  " if lr.ok else "FAIL"
        detail = f": {lr.detail}" if lr.detail else ""
        lines.append(f"{mark} {lr.label} {lr.rule}{detail}")
    lines.append(f"conclusion: {'matches' if result.conclusion_ok else 'MISSING'}")
    lines.append(f"result: {'ok' if result.ok else 'FAILED'}")
    return "\n".join(lines)


def verification_text(report: VerificationReport) -> str:
    lines = []
    for item in report.items:
        mark = "PASS" if item.passed else "FAIL"
        lines.append(f"{mark} {item.name}: {item.detail}")
    lines.append(f"result: {'ok' if report.ok else 'FAILED'}")
    return "\n".join(lines)


def conjecture_text(rows: tuple[ConjectureRow, ...]) -> str:
    lines = []
    for row in rows:
        ch = row.characterization
        valid = _bool_text(ch.validity.valid)
        characteristic = _bool_text(ch.characteristic)
        recovered = ",".join(
            rec.axiom.name for rec in ch.recoveries if rec.recovered
        ) or "none"
        lines.append(
            f"{row.entry.name} ({row.entry.arity} variables): valid={valid} "
            f"recovers={recovered} characteristic={characteristic} "
            f"w.r.t. A_t: {row.nontriviality.verdict} "
            f"({_count(row.nontriviality.map_count, 'map')})"
        )
        for name, rep in row.comparisons.items():
            extra = ""
            if rep.witness_left_oriented is not None:
                extra = f" (sigma {rep.witness_left_oriented})"
            elif rep.witness is not None:
                extra = f" (sigma {rep.witness.sigma})"
            lines.append(
                f"  vs {name}: {rep.verdict} (case {rep.case_used}, "
                f"{_count(rep.map_count, 'map')}){extra}"
            )
    return "\n".join(lines)
