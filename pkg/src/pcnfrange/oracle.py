"""Exhaustive ground truth: exact model counting over all 2^n assignments.

Two routes to the same answer live here, deliberately:

* `solve` walks the assignment space with the clause check short-circuiting
  on the first falsified clause.  No sampling, no heuristics; this is the
  arbiter every verification suite trusts.
* `model_bitmap` evaluates a whole formula truth-table-at-once: each clause
  becomes a 2^n-bit satisfaction bitmap and the formula is their AND.  Same
  exhaustive semantics, orders of magnitude faster for the enumeration
  campaigns that grind through hundreds of thousands of small formulas.

`naive_model_set` is a third, bitmask-free evaluator kept solely to
cross-examine the encoding (it interprets literal objects against dicts).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

from .formula import Assignment, Clause, Literal, PcnfFormula, mask_pairs

DEFAULT_MAX_VARS = 24
MODEL_RETENTION_CAP = 4


class TooManyVariablesError(ValueError):
    """Refusal to enumerate: the assignment space exceeds the cap."""


class OracleVerdict(Enum):
    UNSAT = "unsat"
    UNIQUE = "unique"
    MULTIPLE = "multiple"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class OracleResult:
    """Exact model count, plus the models themselves when few enough."""

    model_count: int
    models: tuple[Assignment, ...]  # populated only when count <= retention cap

    @property
    def verdict(self) -> OracleVerdict:
        if self.model_count == 0:
            return OracleVerdict.UNSAT
        if self.model_count == 1:
            return OracleVerdict.UNIQUE
        return OracleVerdict.MULTIPLE


def count_models(
    num_vars: int,
    pairs: Sequence[tuple[int, int]],
    stop_after: int | None = None,
) -> int:
    """Count satisfying assignments of the clauses given as mask pairs.

    The assignment loop is the outer loop; clause evaluation short-circuits
    on the first falsified clause.  ``stop_after`` stops counting once that
    many models are found (exact for threshold questions like "is the count
    at most 1?").
    """
    count = 0
    for a in range(1 << num_vars):
        na = ~a
        for pos, neg in pairs:
            if not ((a & pos) | (na & neg)):
                break
        else:
            count += 1
            if stop_after is not None and count >= stop_after:
                return count
    return count


def solve(
    formula: PcnfFormula,
    max_n: int = DEFAULT_MAX_VARS,
    retention_cap: int = MODEL_RETENTION_CAP,
) -> OracleResult:
    """Exhaustively count the formula's models.

    Raises TooManyVariablesError rather than silently sampling when the
    formula has more than ``max_n`` variables.
    """
    n = formula.num_vars
    if n > max_n:
        raise TooManyVariablesError(
            f"{n} variables exceeds the enumeration cap of {max_n}"
        )
    pairs = mask_pairs(formula)
    count = 0
    models: list[Assignment] = []
    for a in range(1 << n):
        na = ~a
        for pos, neg in pairs:
            if not ((a & pos) | (na & neg)):
                break
        else:
            count += 1
            if count <= retention_cap:
                models.append(a)
    if count > retention_cap:
        models.clear()
    return OracleResult(model_count=count, models=tuple(models))


@lru_cache(maxsize=8)
def variable_bitmaps(num_vars: int) -> tuple[int, ...]:
    """bitmap[v] has bit a set iff assignment a sets variable v to True.

    Built by doubling: variable v's truth pattern over the assignment space
    is 2^v zeros followed by 2^v ones, repeated.
    """
    total = 1 << num_vars
    out = []
    for v in range(num_vars):
        block = ((1 << (1 << v)) - 1) << (1 << v)
        span = 1 << (v + 1)
        bm = block
        while span < total:
            bm |= bm << span
            span <<= 1
        out.append(bm)
    return tuple(out)


def clause_bitmap(pos_mask: int, neg_mask: int, num_vars: int) -> int:
    """Bitmap over all 2^n assignments of the assignments satisfying a clause.

    Complements the clause's falsifying subcube: the assignments falsifying
    it are exactly those fixing every positive variable to False and every
    negated one to True.
    """
    vbm = variable_bitmaps(num_vars)
    full = (1 << (1 << num_vars)) - 1
    falsified = full
    m = pos_mask
    while m:
        low = m & -m
        falsified &= ~vbm[low.bit_length() - 1]
        m ^= low
    m = neg_mask
    while m:
        low = m & -m
        falsified &= vbm[low.bit_length() - 1]
        m ^= low
    return full ^ (falsified & full)


def model_bitmap(num_vars: int, clauses: Iterable[Clause]) -> int:
    """Bitmap of all satisfying assignments (bit a set iff a is a model)."""
    acc = (1 << (1 << num_vars)) - 1
    for c in clauses:
        acc &= clause_bitmap(c.pos_mask, c.neg_mask, num_vars)
        if not acc:
            break
    return acc


def raw_model_bitmap(
    num_vars: int, clauses: Iterable[Sequence[Literal]]
) -> int:
    """Model bitmap of raw literal clauses.

    Tolerates duplicate literals, tautologies (their bitmap is all-ones),
    and empty clauses (all-zeros), so it can sit on either side of the
    normalizer when checking model preservation.
    """
    vbm = variable_bitmaps(num_vars)
    full = (1 << (1 << num_vars)) - 1
    acc = full
    for clause in clauses:
        sat = 0
        for lit in clause:
            bm = vbm[lit.variable]
            sat |= (full ^ bm) if lit.negated else bm
        acc &= sat
        if not acc:
            break
    return acc


def naive_model_set(
    num_vars: int, clauses: Sequence[Sequence[Literal]]
) -> set[tuple[bool, ...]]:
    """Bitmask-free reference evaluation, one literal at a time.

    Slow by design; exists to check that the mask encoding is faithful.
    """
    models = set()
    for bits in range(2**num_vars):
        values = tuple(bool(bits >> v & 1) for v in range(num_vars))
        if all(
            any(values[lit.variable] != lit.negated for lit in clause)
            for clause in clauses
        ):
            models.add(values)
    return models
