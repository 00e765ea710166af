"""Analysis reports: verdict synthesis, the stable JSON schema, and text
rendering.

Variables are rendered as letters a, b, c, ... while n <= 26 and as 1-based
indices beyond that.  JSON output sorts every map key and is byte-stable for
identical inputs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .bounds import BoundsTable
from .detectors import Reason, ScreenResult, Verdict
from .generate import VerificationReport
from .oracle import OracleResult


def var_name(index: int, n: int) -> str:
    """Letter name for a variable while the universe fits the alphabet."""
    if n <= 26:
        return chr(ord("a") + index)
    return str(index + 1)


def literal_name(index: int, negated: bool, n: int) -> str:
    return ("~" if negated else "") + var_name(index, n)


def class_key_name(key: tuple[int, ...], n: int) -> str:
    if n <= 26:
        return "".join(var_name(v, n) for v in key)
    return ",".join(var_name(v, n) for v in key)


def render_reason(reason: Reason, n: int) -> str:
    """One-line human-readable form of a fired rule."""
    if reason.rule == "beyond_f":
        return f"beyond_f clauses={reason.count} f={reason.threshold}"
    if reason.rule == "variable_occurrence":
        return (
            f"variable_occurrence variable={var_name(reason.variable, n)} "
            f"occurrences={reason.count} v={reason.threshold}"
        )
    if reason.rule == "literal_saturation":
        return (
            f"literal_saturation literal={literal_name(reason.variable, reason.negated, n)} "
            f"occurrences={reason.count} complement_occurrences={reason.complement_count} "
            f"q={reason.threshold}"
        )
    if reason.rule == "clause_class":
        return f"clause_class key={class_key_name(reason.class_key, n)}"
    raise ValueError(f"unknown rule {reason.rule!r}")


@dataclass(frozen=True, slots=True)
class AnalysisReport:
    """The complete analysis record for one formula."""

    n: int
    num_clauses: int
    screen: ScreenResult
    oracle_run: bool
    oracle: OracleResult | None
    verdict: str
    reasons: tuple[str, ...]

    @property
    def exit_code(self) -> int:
        """SAT-convention exit code: 20 proven unsat, 10 proven sat, 0 unknown."""
        if self.verdict.startswith("unsatisfiable"):
            return 20
        if self.verdict.startswith("satisfiable"):
            return 10
        return 0


def build_report(
    screen: ScreenResult,
    oracle: OracleResult | None = None,
) -> AnalysisReport:
    """Combine screening evidence and an optional oracle run into a verdict.

    Detector evidence wins (it is sound); the oracle settles what the
    detectors leave unknown.  An empty formula is satisfiable outright.
    """
    n = screen.n
    reasons = [render_reason(r, n) for r in screen.reasons]
    oracle_run = oracle is not None
    if screen.verdict is Verdict.UNSATISFIABLE:
        verdict = "unsatisfiable"
        if oracle_run and oracle.model_count == 0:
            reasons.append("oracle model_count=0")
    elif oracle_run and oracle.model_count == 0:
        verdict = "unsatisfiable (oracle)"
        reasons.append("oracle model_count=0")
    elif screen.num_clauses == 0:
        verdict = "satisfiable (trivially)"
        reasons.append("no clauses")
    elif oracle_run:
        verdict = "satisfiable (oracle)"
        reasons.append(f"oracle model_count={oracle.model_count}")
    else:
        verdict = "unknown"
    return AnalysisReport(
        n=n,
        num_clauses=screen.num_clauses,
        screen=screen,
        oracle_run=oracle_run,
        oracle=oracle,
        verdict=verdict,
        reasons=tuple(reasons),
    )


def bounds_to_dict(table: BoundsTable) -> dict:
    return {
        "n": table.n,
        "m": table.m,
        "f": table.f,
        "g": table.g,
        "r": table.r,
        "s": table.s,
        "v": table.v,
        "p": table.p,
        "q": table.q,
    }


def report_to_dict(report: AnalysisReport) -> dict:
    """The stable report schema; every numeric field an exact int."""
    screen = report.screen
    n = report.n
    table = screen.class_table
    oracle_doc: dict = {"run": report.oracle_run}
    if report.oracle_run:
        oracle_doc["model_count"] = report.oracle.model_count
    b = screen.bounds
    return {
        "n": n,
        "num_clauses": report.num_clauses,
        "bounds": {"m": b.m, "f": b.f, "g": b.g, "v": b.v, "p": b.p, "q": b.q},
        "range_class": screen.range_class.value,
        "detectors": {
            "corollary": screen.occurrence.outcome.value,
            "clause_class": {
                "verdict": screen.clause_class.outcome.value,
                "C": {
                    class_key_name(key, n): count
                    for key, count in table.counts.items()
                },
                "U": {str(width): cap for width, cap in table.ceilings.items()},
            },
        },
        "oracle": oracle_doc,
        "verdict": report.verdict,
        "reasons": list(report.reasons),
    }


def verification_to_dict(vr: VerificationReport) -> dict:
    t = vr.tightness
    return {
        "n": vr.n,
        "mode": vr.mode.value,
        "bounds": bounds_to_dict(vr.bounds),
        "strata": [
            {
                "name": s.name,
                "clause_counts": [s.clause_count_lo, s.clause_count_hi],
                "formulas_checked": s.formulas_checked,
                "max_models_seen": s.max_models_seen,
                "counterexamples": [
                    {
                        "num_clauses": ce.num_clauses,
                        "clause_indices": list(ce.clause_indices),
                        "model_count": ce.model_count,
                    }
                    for ce in s.counterexamples
                ],
            }
            for s in vr.strata
        ],
        "tightness": {
            "max_sat_clause_count": t.max_sat_clause_count,
            "max_sat_model_count": t.max_sat_model_count,
            "double_sat_clause_count": t.double_sat_clause_count,
            "double_sat_model_count": t.double_sat_model_count,
        },
        "ok": vr.ok,
    }


def oracle_to_dict(result: OracleResult, n: int) -> dict:
    doc: dict = {
        "model_count": result.model_count,
        "verdict": result.verdict.value,
    }
    if result.models:
        doc["models"] = [
            {var_name(v, n): bool(a >> v & 1) for v in range(n)}
            for a in result.models
        ]
    return doc


def to_json(doc: dict) -> str:
    """Byte-stable JSON: sorted keys, fixed two-space indentation."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def bounds_text(table: BoundsTable) -> str:
    rows = [
        ("n", table.n, "variables"),
        ("m", table.m, "clause universe size (3^n - 1)"),
        ("f", table.f, "final point of satisfiability (3^n - 2^n)"),
        ("g", table.g, "last point of double satisfiability (f - 2^(n-1))"),
        ("r", table.r, "clauses removed from m to reach f (2^n - 1)"),
        ("s", table.s, "clauses removed from f to reach g (2^(n-1))"),
        ("v", table.v, "variable-occurrence ceiling"),
        ("p", table.p, "literal-occurrence ceiling (3^(n-1))"),
        ("q", table.q, "complement-occurrence threshold (v - p)"),
    ]
    width = max(len(str(value)) for _, value, _ in rows)
    return "\n".join(f"{name}  {value:>{width}}  {note}" for name, value, note in rows)


def report_text(report: AnalysisReport) -> str:
    screen = report.screen
    n = report.n
    lines = [
        f"variables      {n}",
        f"clauses        {report.num_clauses}",
        f"range          {screen.range_class.value} "
        f"(g={screen.bounds.g}, f={screen.bounds.f}, m={screen.bounds.m})",
        f"occurrences    {screen.occurrence.outcome.value}",
        f"clause classes {screen.clause_class.outcome.value}",
        "oracle         "
        + (f"model_count={report.oracle.model_count}" if report.oracle_run else "not run"),
        f"verdict        {report.verdict}",
    ]
    for reason in report.reasons:
        lines.append(f"  reason: {reason}")
    return "\n".join(lines)


def _width_table(n: int) -> list[str]:
    from .bounds import Construction, clause_distribution

    rows = [("width", list(range(1, n + 1)))]
    rows.append(("universe (m)", list(clause_distribution(n, Construction.ALL))))
    rows.append(("max-sat (f)", list(clause_distribution(n, Construction.MAX_SAT))))
    if n >= 2:
        rows.append(
            ("double-sat (g)", list(clause_distribution(n, Construction.DOUBLE_SAT)))
        )
    cell = max(len(str(v)) for _, values in rows for v in values)
    return [
        f"  {label:<15}" + "  ".join(f"{v:>{cell}}" for v in values)
        for label, values in rows
    ]


def verification_text(vr: VerificationReport) -> str:
    lines = [
        f"n={vr.n} mode={vr.mode.value}  (g={vr.bounds.g}, f={vr.bounds.f}, m={vr.bounds.m})"
    ]
    lines.extend(_width_table(vr.n))
    for s in vr.strata:
        lines.append(
            f"  {s.name:<14} M in [{s.clause_count_lo}, {s.clause_count_hi}]"
            f"  checked={s.formulas_checked}"
            f"  max_models={s.max_models_seen}"
            f"  counterexamples={len(s.counterexamples)}"
        )
    total = sum(s.formulas_checked for s in vr.strata)
    total_ce = sum(len(s.counterexamples) for s in vr.strata)
    floor = min(s.clause_count_lo for s in vr.strata) - 1
    bound_name = "g" if floor == vr.bounds.g else "f"
    lines.append(
        f"  checked {total} formulas above {bound_name}({vr.n}), {total_ce} counterexamples"
    )
    t = vr.tightness
    lines.append(
        f"  tightness      max_sat: {t.max_sat_clause_count} clauses,"
        f" {t.max_sat_model_count} model(s)"
    )
    if t.double_sat_clause_count is not None:
        lines.append(
            f"                 double_sat: {t.double_sat_clause_count} clauses,"
            f" {t.double_sat_model_count} model(s)"
        )
    lines.append(f"  ok             {vr.ok}")
    return "\n".join(lines)
