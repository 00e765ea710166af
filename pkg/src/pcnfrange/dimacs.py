"""DIMACS CNF reading and writing.

The parser accepts comment lines (``c ...``), one ``p cnf <vars> <clauses>``
header, and zero-terminated clauses (which may span lines or share one).
Duplicate literals, repeated clauses, tautologies, and empty clauses all
survive parsing untouched; normalization is a separate, explicit step.  A
header clause count that disagrees with the clauses actually present is
common in the wild, so it warns instead of failing.
"""
from __future__ import annotations

import warnings

from .formula import Literal, PcnfFormula, RawCnf, bit_indices


class DimacsError(ValueError):
    """Malformed DIMACS input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class MalformedHeaderError(DimacsError):
    pass


class LiteralOutOfRangeError(DimacsError):
    pass


class UnterminatedClauseError(DimacsError):
    pass


class DimacsWarning(UserWarning):
    """Recoverable oddity in DIMACS input (e.g. clause-count mismatch)."""


def parse_dimacs(text: str | bytes) -> RawCnf:
    """Parse DIMACS CNF text into a RawCnf.

    Raises MalformedHeaderError, LiteralOutOfRangeError, or
    UnterminatedClauseError (all carrying line numbers).  Emits a
    DimacsWarning when the header's clause count does not match.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    num_vars: int | None = None
    declared_clauses: int | None = None
    clauses: list[tuple[Literal, ...]] = []
    pending: list[Literal] = []
    last_line = 0

    for lineno, line in enumerate(text.splitlines(), start=1):
        last_line = lineno
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("p"):
            if num_vars is not None:
                raise MalformedHeaderError("duplicate header", lineno)
            fields = stripped.split()
            if len(fields) != 4 or fields[0] != "p" or fields[1] != "cnf":
                raise MalformedHeaderError(f"bad header {stripped!r}", lineno)
            try:
                num_vars = int(fields[2])
                declared_clauses = int(fields[3])
            except ValueError:
                raise MalformedHeaderError(f"bad header {stripped!r}", lineno) from None
            if num_vars < 0 or declared_clauses < 0:
                raise MalformedHeaderError(f"bad header {stripped!r}", lineno)
            continue
        if num_vars is None:
            raise MalformedHeaderError("clause before 'p cnf' header", lineno)
        for token in stripped.split():
            try:
                lit = int(token)
            except ValueError:
                raise DimacsError(f"non-integer token {token!r}", lineno) from None
            if lit == 0:
                clauses.append(tuple(pending))
                pending.clear()
                continue
            if abs(lit) > num_vars:
                raise LiteralOutOfRangeError(
                    f"literal {lit} out of range for {num_vars} variables", lineno
                )
            pending.append(Literal(abs(lit) - 1, negated=lit < 0))

    if num_vars is None:
        raise MalformedHeaderError("missing 'p cnf' header", last_line or None)
    if pending:
        raise UnterminatedClauseError(
            "end of input inside a clause (missing terminating 0)", last_line
        )
    if declared_clauses != len(clauses):
        warnings.warn(
            f"header declares {declared_clauses} clauses but {len(clauses)} found",
            DimacsWarning,
            stacklevel=2,
        )
    return RawCnf(num_vars=num_vars, clauses=tuple(clauses))


def write_dimacs(formula: PcnfFormula) -> str:
    """Serialize a formula in canonical clause order.

    Parsing the output and normalizing reproduces the formula exactly.
    """
    lines = [f"p cnf {formula.num_vars} {len(formula.clauses)}"]
    for clause in formula.clauses:
        parts = []
        for v in bit_indices(clause.occupancy):
            parts.append(str(-(v + 1) if clause.neg_mask >> v & 1 else v + 1))
        parts.append("0")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
