import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcnfrange import (
    EmptyClauseError,
    Literal,
    RawCnf,
    normalize,
    raw_model_bitmap,
)

from tests.helpers import cl, raw


def test_duplicate_literal_collapsed():
    f, stats = normalize(raw(2, "a a b"))
    assert f.clauses == (cl("a b"),)
    assert stats.duplicate_literals_removed == 1


def test_tautological_clause_dropped():
    f, stats = normalize(raw(2, "a ~a b"))
    assert f.clauses == ()
    assert stats.tautological_clauses_dropped == 1


def test_three_rules_together():
    f, stats = normalize(raw(2, "a b, b a, a a ~a"))
    assert f.clauses == (cl("a b"),)
    assert stats.duplicate_literals_removed == 1
    assert stats.tautological_clauses_dropped == 1
    assert stats.duplicate_clauses_dropped == 1
    assert stats.literals_scanned == 7


def test_empty_clause_rejected():
    with pytest.raises(EmptyClauseError):
        normalize(RawCnf(2, ((Literal(0),), ())))


def test_variable_universe_preserved():
    # b only appears in a dropped tautology; n stays 3.
    f, _ = normalize(raw(3, "a c, b ~b"))
    assert f.num_vars == 3


def test_idempotent_on_pcnf():
    f1, _ = normalize(raw(3, "a, ~b c, a b c"))
    as_raw = RawCnf(3, tuple(c.literals() for c in f1.clauses))
    f2, stats = normalize(as_raw)
    assert f2 == f1
    assert stats.duplicate_literals_removed == 0
    assert stats.tautological_clauses_dropped == 0
    assert stats.duplicate_clauses_dropped == 0


def test_single_scan_touches_each_literal_once():
    r = raw(3, "a a b, b ~b, c, c, a b c")
    _, stats = normalize(r)
    assert stats.literals_scanned == r.total_literals


def _random_raw(rng: random.Random, n: int) -> RawCnf:
    clauses = []
    for _ in range(rng.randint(0, 12)):
        width = rng.randint(1, n + 2)  # > n forces duplicates/tautologies
        lits = tuple(
            Literal(rng.randrange(n), negated=rng.random() < 0.5)
            for _ in range(width)
        )
        clauses.append(lits)
        if rng.random() < 0.3:  # inject a repeated clause
            clauses.append(lits)
    return RawCnf(n, tuple(clauses))


def test_model_set_preserved_on_random_inputs():
    rng = random.Random(2024)
    for _ in range(10_000):
        n = rng.randint(1, 12)
        r = _random_raw(rng, n)
        f, _ = normalize(r)
        before = raw_model_bitmap(n, r.clauses)
        after = raw_model_bitmap(n, [c.literals() for c in f.clauses])
        assert before == after


@settings(max_examples=200)
@given(st.integers(1, 6), st.data())
def test_renormalization_is_identity(n, data):
    num_clauses = data.draw(st.integers(0, 8))
    clauses = []
    for _ in range(num_clauses):
        lits = data.draw(
            st.lists(
                st.tuples(st.integers(0, n - 1), st.booleans()),
                min_size=1,
                max_size=n + 2,
            )
        )
        clauses.append(tuple(Literal(v, neg) for v, neg in lits))
    f1, _ = normalize(RawCnf(n, tuple(clauses)))
    f2, stats = normalize(RawCnf(n, tuple(c.literals() for c in f1.clauses)))
    assert f2 == f1
    assert stats.duplicate_clauses_dropped == 0
