"""Shared test builders: a compact clause DSL and the golden 17-clause formula.

``cl("a ~b c")`` builds a clause from space-separated letters, ``~`` (or
``-``) marking negation; ``pf(n, "a, ~b, a b")`` builds a formula from
comma-separated clauses.
"""
from __future__ import annotations

from pathlib import Path

from pcnfrange import Clause, Literal, PcnfFormula, RawCnf

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN_CNF = FIXTURES / "detector_blind_n3_m17.cnf"


def lit(token: str) -> Literal:
    negated = token[0] in "~-"
    return Literal(ord(token.lstrip("~-")) - ord("a"), negated=negated)


def cl(spec: str) -> Clause:
    return Clause.from_literals(lit(tok) for tok in spec.split())


def pf(n: int, spec: str) -> PcnfFormula:
    clauses = [cl(part) for part in spec.split(",")] if spec.strip() else []
    return PcnfFormula.from_clauses(n, clauses)


def raw(n: int, spec: str) -> RawCnf:
    clauses = tuple(
        tuple(lit(tok) for tok in part.split()) for part in spec.split(",")
    ) if spec.strip() else ()
    return RawCnf(n, clauses)


# The natural-range unsatisfiable formula that defeats every detector:
# variable counts {a:13, b:12, c:12}, literal counts
# {a:8, ~a:5, b:5, ~b:7, c:5, ~c:7}, class counts
# {a:1, b:1, c:1, ab:3, ac:3, bc:2, abc:6}.
GOLDEN_SPEC = (
    "a, ~b, ~c,"
    " a b, a ~b, ~a ~b,"
    " a c, a ~c, ~a ~c,"
    " b c, ~b ~c,"
    " a b ~c, a ~b c, a ~b ~c, ~a b c, ~a b ~c, ~a ~b c"
)


def golden_formula() -> PcnfFormula:
    return pf(3, GOLDEN_SPEC)
