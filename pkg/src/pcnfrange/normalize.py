"""Single-scan normalization of raw CNF into PCNF.

Three rules, applied per clause in one pass over the input literals:
duplicate literals collapse, clauses containing a variable and its
complement are dropped (always true, so the model set is untouched), and
repeated clauses are dropped.  Nothing else: no subsumption, no unit
propagation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .formula import Clause, PcnfFormula, RawCnf, clause_sort_key


class EmptyClauseError(ValueError):
    """The input contains an empty clause.

    Such an input is trivially unsatisfiable and has no PCNF image (PCNF
    clauses have at least one literal); the caller decides how to report it.
    """


@dataclass(frozen=True, slots=True)
class NormalizationStats:
    """What the scan removed, plus an instrumentation counter.

    ``literals_scanned`` counts literal visits; the scan touches each input
    literal exactly once, so it always equals the input's total literal
    count.
    """

    duplicate_literals_removed: int
    tautological_clauses_dropped: int
    duplicate_clauses_dropped: int
    literals_scanned: int


def normalize(raw: RawCnf) -> tuple[PcnfFormula, NormalizationStats]:
    """Normalize raw CNF to PCNF, preserving the set of models.

    The variable universe is preserved: variables whose every clause was
    dropped still count toward num_vars (clause-count bounds are sensitive
    to n, so it never changes silently).

    Raises EmptyClauseError if the input contains an empty clause.
    """
    dup_literals = 0
    tautologies = 0
    dup_clauses = 0
    scanned = 0

    seen: set[tuple[int, int]] = set()
    for clause in raw.clauses:
        if not clause:
            raise EmptyClauseError("input contains an empty clause")
        pos = neg = 0
        for lit in clause:
            scanned += 1
            bit = 1 << lit.variable
            if lit.negated:
                if neg & bit:
                    dup_literals += 1
                neg |= bit
            else:
                if pos & bit:
                    dup_literals += 1
                pos |= bit
        # Duplicate-literal removal happened implicitly above; only now is
        # the variable-and-complement test meaningful.
        if pos & neg:
            tautologies += 1
            continue
        if (pos, neg) in seen:
            dup_clauses += 1
            continue
        seen.add((pos, neg))

    ordered = sorted((Clause(p, q) for p, q in seen), key=clause_sort_key)
    stats = NormalizationStats(
        duplicate_literals_removed=dup_literals,
        tautological_clauses_dropped=tautologies,
        duplicate_clauses_dropped=dup_clauses,
        literals_scanned=scanned,
    )
    return PcnfFormula(raw.num_vars, tuple(ordered)), stats
