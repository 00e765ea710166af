"""Polynomial-time unsatisfiability screening for PCNF formulas.

Three sound rules, none complete:

* clause count beyond f(n)  -> unsatisfiable
* a variable occurring more than v(n) times (both polarities combined)
  -> unsatisfiable; a literal occurring exactly p(n) times while its
  complement occurs more than q(n) times -> unsatisfiable
* a full clause class: all 2^k polarity patterns over one width-k variable
  set present -> unsatisfiable

A verdict of UNKNOWN means exactly that; plenty of unsatisfiable formulas in
the natural range slip through every rule here.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from .bounds import BoundsTable, RangeClass, bounds_for, classify_count
from .formula import PcnfFormula, bit_indices


class Verdict(Enum):
    UNSATISFIABLE = "unsatisfiable"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class Reason:
    """Why a rule fired, with the offending witness.

    ``rule`` is one of "beyond_f", "variable_occurrence", "literal_saturation",
    "clause_class"; the remaining fields are populated as the rule requires.
    """

    rule: str
    variable: int | None = None
    negated: bool | None = None
    class_key: tuple[int, ...] | None = None
    count: int | None = None
    threshold: int | None = None
    complement_count: int | None = None


@dataclass(frozen=True, slots=True)
class DetectorVerdict:
    outcome: Verdict
    reasons: tuple[Reason, ...] = ()

    @property
    def unsatisfiable(self) -> bool:
        return self.outcome is Verdict.UNSATISFIABLE


@dataclass(frozen=True, slots=True)
class OccurrenceCensus:
    """Exact occurrence counts, indexed by variable.

    In PCNF a variable occurs at most once per clause, so
    ``variable_counts[x]`` is also the number of clauses mentioning x, and it
    always equals ``positive_counts[x] + negative_counts[x]``.
    """

    variable_counts: tuple[int, ...]
    positive_counts: tuple[int, ...]
    negative_counts: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class ClauseClassTable:
    """Clause-class counts from the one-scan counting algorithm.

    ``counts`` maps each occurring variable set (polarity-stripped,
    ascending) to the number of clauses on exactly that set; ``ceilings``
    maps each occurring width k to 2^k, the most clauses any width-k set can
    carry.  ``clauses_scanned`` instruments the single-scan property.
    """

    counts: dict[tuple[int, ...], int] = field(default_factory=dict)
    ceilings: dict[int, int] = field(default_factory=dict)
    clauses_scanned: int = 0


@dataclass(frozen=True, slots=True)
class ScreenResult:
    """Everything the screening pipeline learned about one formula."""

    n: int
    num_clauses: int
    bounds: BoundsTable
    range_class: RangeClass
    census: OccurrenceCensus
    occurrence: DetectorVerdict
    clause_class: DetectorVerdict
    class_table: ClauseClassTable
    verdict: Verdict
    reasons: tuple[Reason, ...]

    @property
    def unsatisfiable(self) -> bool:
        return self.verdict is Verdict.UNSATISFIABLE


def occurrence_census(formula: PcnfFormula) -> OccurrenceCensus:
    """Count every variable's and literal's occurrences.

    Tallies distinct masks first (clauses repeat few mask values), then
    spreads the tallies over their bits.
    """
    n = formula.num_vars
    pos = [0] * n
    neg = [0] * n
    for mask, times in Counter(c.pos_mask for c in formula.clauses).items():
        for v in bit_indices(mask):
            pos[v] += times
    for mask, times in Counter(c.neg_mask for c in formula.clauses).items():
        for v in bit_indices(mask):
            neg[v] += times
    totals = tuple(p + q for p, q in zip(pos, neg))
    return OccurrenceCensus(
        variable_counts=totals,
        positive_counts=tuple(pos),
        negative_counts=tuple(neg),
    )


def occurrence_screen(
    formula: PcnfFormula,
    n: int | None = None,
    census: OccurrenceCensus | None = None,
) -> DetectorVerdict:
    """Screen occurrence counts against the v/p/q ceilings.

    Fires when a variable occurs more than v(n) times, or when a literal
    occurs exactly p(n) times while its complement occurs more than q(n)
    times.  Saturated literals imply the variable cap is breached too, so
    both reasons are reported when both hold.
    """
    n = n if n is not None else formula.num_vars
    table = bounds_for(n)
    if census is None:
        census = occurrence_census(formula)
    reasons: list[Reason] = []
    for x, total in enumerate(census.variable_counts):
        if total > table.v:
            reasons.append(
                Reason(
                    rule="variable_occurrence",
                    variable=x,
                    count=total,
                    threshold=table.v,
                )
            )
    for x in range(len(census.variable_counts)):
        p_count = census.positive_counts[x]
        n_count = census.negative_counts[x]
        # A valid PCNF formula is a subset of the clause universe, so no
        # literal can occur more than p(n) times; exceeding the ceiling
        # means n undercounts the occurring variables.
        if p_count > table.p or n_count > table.p:
            raise ValueError(
                f"literal occurrences for variable {x} exceed the ceiling "
                f"p({n})={table.p}; n is smaller than the formula's "
                "occurring-variable count"
            )
        for count, comp, negated in ((p_count, n_count, False), (n_count, p_count, True)):
            if count == table.p and comp > table.q:
                reasons.append(
                    Reason(
                        rule="literal_saturation",
                        variable=x,
                        negated=negated,
                        count=count,
                        threshold=table.q,
                        complement_count=comp,
                    )
                )
    if reasons:
        return DetectorVerdict(Verdict.UNSATISFIABLE, tuple(reasons))
    return DetectorVerdict(Verdict.UNKNOWN)


def clause_class_screen(
    formula: PcnfFormula, early_exit: bool = False
) -> tuple[DetectorVerdict, ClauseClassTable]:
    """Count clause classes in one scan and compare against the 2^k ceilings.

    A class hitting its ceiling means every polarity pattern on that
    variable set is present, which no assignment survives.  All saturated
    keys are reported.  With ``early_exit`` the scan stops at the first
    saturated class (the tables then cover only the clauses seen); the
    default scans everything first and checks after, and the two modes never
    disagree on the verdict.
    """
    if early_exit:
        counts: dict[int, int] = {}
        ceilings: dict[int, int] = {}
        scanned = 0
        saturated: int | None = None
        for clause in formula.clauses:
            scanned += 1
            occ = clause.occupancy
            c = counts.get(occ, 0) + 1
            counts[occ] = c
            width = occ.bit_count()
            if width not in ceilings:
                ceilings[width] = 1 << width
            if c == ceilings[width]:
                saturated = occ
                break
        table = ClauseClassTable(
            counts={bit_indices(occ): c for occ, c in counts.items()},
            ceilings=ceilings,
            clauses_scanned=scanned,
        )
        if saturated is None:
            return DetectorVerdict(Verdict.UNKNOWN), table
        reason = Reason(
            rule="clause_class",
            class_key=bit_indices(saturated),
            count=counts[saturated],
            threshold=ceilings[saturated.bit_count()],
        )
        return DetectorVerdict(Verdict.UNSATISFIABLE, (reason,)), table

    mask_counts = Counter(c.pos_mask | c.neg_mask for c in formula.clauses)
    ceilings = {}
    for occ in mask_counts:
        width = occ.bit_count()
        if width not in ceilings:
            ceilings[width] = 1 << width
    table = ClauseClassTable(
        counts={bit_indices(occ): c for occ, c in mask_counts.items()},
        ceilings=ceilings,
        clauses_scanned=len(formula.clauses),
    )

    reasons = tuple(
        Reason(rule="clause_class", class_key=key, count=c, threshold=1 << len(key))
        for key, c in sorted(table.counts.items())
        if c == 1 << len(key)
    )
    if reasons:
        return DetectorVerdict(Verdict.UNSATISFIABLE, reasons), table
    return DetectorVerdict(Verdict.UNKNOWN), table


def screen_all(
    formula: PcnfFormula,
    n: int | None = None,
    early_exit: bool = False,
) -> ScreenResult:
    """Run every polynomial-time screen and combine the evidence.

    The overall verdict is UNSATISFIABLE as soon as any sound rule fires
    (including the clause count exceeding f(n)); otherwise UNKNOWN, with all
    collected evidence attached.
    """
    effective_n = n if n is not None else formula.num_vars
    num_clauses = len(formula.clauses)
    range_class, table = classify_count(effective_n, num_clauses)
    census = occurrence_census(formula)
    occurrence = occurrence_screen(formula, n=effective_n, census=census)
    clause_class, class_table = clause_class_screen(formula, early_exit=early_exit)

    reasons: list[Reason] = []
    if range_class is RangeClass.BEYOND_F:
        reasons.append(
            Reason(rule="beyond_f", count=num_clauses, threshold=table.f)
        )
    reasons.extend(occurrence.reasons)
    reasons.extend(clause_class.reasons)

    verdict = Verdict.UNSATISFIABLE if reasons else Verdict.UNKNOWN
    return ScreenResult(
        n=effective_n,
        num_clauses=num_clauses,
        bounds=table,
        range_class=range_class,
        census=census,
        occurrence=occurrence,
        clause_class=clause_class,
        class_table=class_table,
        verdict=verdict,
        reasons=tuple(reasons),
    )
