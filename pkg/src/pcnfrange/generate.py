"""Clause-universe enumeration, extremal constructions, and bound-verification
campaigns.

The constructions realize the bounds exactly: keeping only the clauses a
fixed witness satisfies yields the largest satisfiable formula (f(n)
clauses); keeping the clauses two assignments both satisfy (the witness and
the witness with one variable flipped) yields the largest doubly satisfiable
one (g(n) clauses).  `verify_bounds` grinds the claims against the oracle,
exhaustively where the stratum is small enough and by seeded sampling
elsewhere.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb

from .bounds import BoundsTable, bounds_for
from .formula import Assignment, Clause, PcnfFormula, all_true, clause_satisfied
from .oracle import clause_bitmap, solve

DEFAULT_ENUMERATION_CAP = 12
DEFAULT_BUDGET = 10_000_000


class EnumerationCapError(ValueError):
    """The clause universe for this n is too large to materialize."""


class BudgetExceededError(ValueError):
    """An exhaustive campaign would enumerate more formulas than allowed."""


class VerifyMode(Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLE = "sample"

    def __str__(self) -> str:
        return self.value


@lru_cache(maxsize=4)
def _universe(n: int) -> tuple[Clause, ...]:
    # (pos, neg) over every polarity split of every nonempty variable subset,
    # then canonical order: (width, pos_mask, neg_mask).
    triples = []
    for occ in range(1, 1 << n):
        width = occ.bit_count()
        sub = occ
        while True:
            triples.append((width, sub, occ ^ sub))
            if sub == 0:
                break
            sub = (sub - 1) & occ
    triples.sort()
    return tuple(Clause(pos, neg) for _, pos, neg in triples)


def enumerate_clauses(
    n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[Clause, ...]:
    """All 3^n - 1 clauses over n variables, canonically ordered."""
    if n < 1:
        raise ValueError(f"enumeration requires n >= 1, got {n}")
    if n > cap:
        raise EnumerationCapError(
            f"universe for n={n} has 3^{n}-1 clauses, beyond the cap of n={cap}"
        )
    return _universe(n)


def max_sat_construction(
    n: int, witness: Assignment | None = None
) -> PcnfFormula:
    """The largest satisfiable formula: every clause the witness satisfies.

    Exactly f(n) clauses for any witness; the witness is a model.
    """
    w = all_true(n) if witness is None else witness
    clauses = tuple(c for c in enumerate_clauses(n) if clause_satisfied(c, w))
    return PcnfFormula(n, clauses)


def double_sat_construction(
    n: int, witness: Assignment | None = None, flip_var: int = 0
) -> PcnfFormula:
    """The largest doubly satisfiable formula: clauses satisfied by the
    witness and by the witness with ``flip_var`` flipped.

    Exactly g(n) clauses; precisely those two assignments are models.
    Undefined for n=1, where a formula never has two models.
    """
    if n < 2:
        raise ValueError("double-sat construction requires n >= 2")
    if not 0 <= flip_var < n:
        raise ValueError(f"flip_var {flip_var} out of range for n={n}")
    w = all_true(n) if witness is None else witness
    w_flipped = w ^ (1 << flip_var)
    clauses = tuple(
        c
        for c in enumerate_clauses(n)
        if clause_satisfied(c, w) and clause_satisfied(c, w_flipped)
    )
    return PcnfFormula(n, clauses)


def _sample_indices(rng: random.Random, population: int, k: int) -> list[int]:
    # Without-replacement scheme, deterministic for a seeded Mersenne-Twister
    # rng: draw min(k, population-k) distinct indices, each by rejection on
    # getrandbits(bit_length(population)), take the complement when that was
    # the smaller side, return sorted.
    if not 0 <= k <= population:
        raise ValueError(f"cannot draw {k} of {population}")
    target = min(k, population - k)
    chosen: set[int] = set()
    add = chosen.add
    getrandbits = rng.getrandbits
    nbits = population.bit_length()
    while len(chosen) < target:
        v = getrandbits(nbits)
        if v < population:
            add(v)
    if target != k:
        return [i for i in range(population) if i not in chosen]
    return sorted(chosen)


def sample_pcnf(n: int, m_clauses: int, seed: int) -> PcnfFormula:
    """A uniform random ``m_clauses``-subset of the clause universe.

    Index sampling over the canonically ordered universe; identical seeds
    reproduce identical formulas everywhere.
    """
    universe = enumerate_clauses(n)
    if m_clauses > len(universe):
        raise ValueError(
            f"requested {m_clauses} clauses but the universe for n={n} "
            f"has only {len(universe)}"
        )
    rng = random.Random(seed)
    indices = _sample_indices(rng, len(universe), m_clauses)
    return PcnfFormula(n, tuple(map(universe.__getitem__, indices)))


@dataclass(frozen=True, slots=True)
class Counterexample:
    """A formula violating a bound claim (none are expected, ever)."""

    stratum: str
    num_clauses: int
    clause_indices: tuple[int, ...]
    model_count: int


@dataclass(frozen=True, slots=True)
class StratumReport:
    name: str
    clause_count_lo: int  # inclusive
    clause_count_hi: int  # inclusive
    formulas_checked: int
    max_models_seen: int
    counterexamples: tuple[Counterexample, ...]


@dataclass(frozen=True, slots=True)
class TightnessReport:
    """The bounds are attained, not merely upper bounds."""

    max_sat_clause_count: int
    max_sat_model_count: int
    double_sat_clause_count: int | None  # None when n=1
    double_sat_model_count: int | None


@dataclass(frozen=True, slots=True)
class VerificationReport:
    n: int
    mode: VerifyMode
    bounds: BoundsTable
    strata: tuple[StratumReport, ...]
    tightness: TightnessReport

    @property
    def ok(self) -> bool:
        if any(s.counterexamples for s in self.strata):
            return False
        t = self.tightness
        b = self.bounds
        if t.max_sat_clause_count != b.f or t.max_sat_model_count < 1:
            return False
        if t.double_sat_clause_count is not None and (
            t.double_sat_clause_count != b.g or t.double_sat_model_count != 2
        ):
            return False
        return True


def _tightness(n: int) -> TightnessReport:
    max_sat = max_sat_construction(n)
    max_sat_models = solve(max_sat).model_count
    if n >= 2:
        double_sat = double_sat_construction(n)
        double_count: int | None = len(double_sat.clauses)
        double_models: int | None = solve(double_sat).model_count
    else:
        double_count = double_models = None
    return TightnessReport(
        max_sat_clause_count=len(max_sat.clauses),
        max_sat_model_count=max_sat_models,
        double_sat_clause_count=double_count,
        double_sat_model_count=double_models,
    )


def _strata_ranges(
    table: BoundsTable, include_beyond_f: bool, include_natural_range: bool
) -> list[tuple[str, int, int]]:
    out = []
    if include_natural_range:
        out.append(("natural_range", table.g + 1, table.f))
    if include_beyond_f:
        out.append(("beyond_f", table.f + 1, table.m))
    return out


def _check_bitmap(stratum: str, acc: int) -> bool:
    # A stratum claim holds for a formula with satisfying-assignment bitmap
    # acc when: beyond_f -> no models; natural_range -> at most one.
    if stratum == "beyond_f":
        return acc == 0
    return acc.bit_count() <= 1


def verify_bounds(
    n: int,
    mode: VerifyMode = VerifyMode.EXHAUSTIVE,
    *,
    sample_count: int = 100_000,
    seed: int = 0,
    include_beyond_f: bool = True,
    include_natural_range: bool = True,
    budget: int = DEFAULT_BUDGET,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> VerificationReport:
    """Check the clause-count bound claims against the oracle.

    Exhaustive mode enumerates every formula of every clause count in the
    selected strata (natural range: g < M <= f, expecting at most one model;
    beyond f: M > f, expecting none) and refuses to start past ``budget``
    formulas.  Sample mode draws ``sample_count`` seeded random formulas with
    clause counts uniform over the selected strata.  The report also records
    tightness: the extremal constructions hit f(n) and g(n) exactly.
    """
    table = bounds_for(n)
    universe = enumerate_clauses(n, cap=enumeration_cap)
    ranges = _strata_ranges(table, include_beyond_f, include_natural_range)
    if not ranges:
        raise ValueError("no strata selected")

    full = (1 << (1 << n)) - 1

    strata_reports: list[StratumReport] = []
    if mode is VerifyMode.EXHAUSTIVE:
        total = sum(
            comb(table.m, size)
            for _, lo, hi in ranges
            for size in range(lo, hi + 1)
        )
        if total > budget:
            raise BudgetExceededError(
                f"exhaustive campaign would check {total} formulas "
                f"(budget {budget}); raise the budget to opt in"
            )
        bitmaps = [clause_bitmap(c.pos_mask, c.neg_mask, n) for c in universe]
        # distinct clauses have distinct falsifying subcubes, hence bitmaps
        index_of = {bm: i for i, bm in enumerate(bitmaps)}
        for name, lo, hi in ranges:
            checked = 0
            max_models = 0
            counterexamples: list[Counterexample] = []
            for size in range(lo, hi + 1):
                for combo in itertools.combinations(bitmaps, size):
                    acc = full
                    for bm in combo:
                        acc &= bm
                        if not acc:
                            break
                    checked += 1
                    if acc:
                        models = acc.bit_count()
                        if models > max_models:
                            max_models = models
                        if not _check_bitmap(name, acc):
                            counterexamples.append(
                                Counterexample(
                                    stratum=name,
                                    num_clauses=size,
                                    clause_indices=tuple(
                                        index_of[bm] for bm in combo
                                    ),
                                    model_count=models,
                                )
                            )
            strata_reports.append(
                StratumReport(
                    name=name,
                    clause_count_lo=lo,
                    clause_count_hi=hi,
                    formulas_checked=checked,
                    max_models_seen=max_models,
                    counterexamples=tuple(counterexamples),
                )
            )
    else:
        rng = random.Random(seed)
        lo = min(r[1] for r in ranges)
        hi = max(r[2] for r in ranges)
        lazy_bitmaps: list[int | None] = [None] * len(universe)
        tallies = {
            name: [0, 0, []] for name, _, _ in ranges
        }  # checked, max models, counterexamples
        for _ in range(sample_count):
            size = rng.randint(lo, hi)
            indices = _sample_indices(rng, table.m, size)
            name = next(
                nm for nm, rlo, rhi in ranges if rlo <= size <= rhi
            )
            acc = full
            for i in indices:
                bm = lazy_bitmaps[i]
                if bm is None:
                    c = universe[i]
                    bm = lazy_bitmaps[i] = clause_bitmap(c.pos_mask, c.neg_mask, n)
                acc &= bm
                if not acc:
                    break
            tally = tallies[name]
            tally[0] += 1
            models = acc.bit_count()
            if models > tally[1]:
                tally[1] = models
            if not _check_bitmap(name, acc):
                tally[2].append(
                    Counterexample(
                        stratum=name,
                        num_clauses=size,
                        clause_indices=tuple(indices),
                        model_count=models,
                    )
                )
        for name, rlo, rhi in ranges:
            checked, max_models, counterexamples = tallies[name]
            strata_reports.append(
                StratumReport(
                    name=name,
                    clause_count_lo=rlo,
                    clause_count_hi=rhi,
                    formulas_checked=checked,
                    max_models_seen=max_models,
                    counterexamples=tuple(counterexamples),
                )
            )

    return VerificationReport(
        n=n,
        mode=mode,
        bounds=table,
        strata=tuple(strata_reports),
        tightness=_tightness(n),
    )
