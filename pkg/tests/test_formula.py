import pytest
from hypothesis import given
from hypothesis import strategies as st

from pcnfrange import (
    Clause,
    Literal,
    PcnfFormula,
    RawCnf,
    all_true,
    clause_canonical_key,
    clause_satisfied,
)
from pcnfrange.formula import MAX_VARS, bit_indices, clause_sort_key

from tests.helpers import cl


def test_unit_clause_satisfied_by_matching_assignment():
    assert clause_satisfied(cl("a"), 0b1)


def test_complement_falsified_by_matching_assignment():
    assert not clause_satisfied(cl("~a"), 0b1)


def test_all_negative_clause_falsified_by_all_true():
    assert not clause_satisfied(cl("~a ~b ~c"), 0b111)


def test_canonical_key_strips_polarity_and_sorts():
    assert clause_canonical_key(cl("a ~b")) == (0, 1)
    assert clause_canonical_key(cl("~c")) == (2,)
    assert clause_canonical_key(cl("~a b ~c")) == (0, 1, 2)


def test_clause_rejects_polarity_overlap():
    with pytest.raises(ValueError):
        Clause(0b1, 0b1)


def test_clause_rejects_empty():
    with pytest.raises(ValueError):
        Clause(0, 0)


def test_from_literals_collapses_repeats():
    c = Clause.from_literals([Literal(0), Literal(0), Literal(1, True)])
    assert (c.pos_mask, c.neg_mask) == (0b01, 0b10)


def test_from_literals_rejects_tautology():
    with pytest.raises(ValueError):
        Clause.from_literals([Literal(0), Literal(0, True)])


def test_clause_width_and_literals():
    c = cl("a ~b ~d")
    assert c.width == 3
    assert c.literals() == (Literal(0), Literal(1, True), Literal(3, True))


def test_bit_indices():
    assert bit_indices(0) == ()
    assert bit_indices(0b101101) == (0, 2, 3, 5)


def test_full_positive_clause_satisfied_by_every_nonzero_assignment():
    for n in range(1, 5):
        c = Clause(all_true(n), 0)
        for a in range(1, 1 << n):
            assert clause_satisfied(c, a)
        assert not clause_satisfied(c, 0)


def test_each_assignment_falsifies_exactly_one_polarity_pattern():
    # Over a fixed width-k variable set, the 2^k polarity patterns partition
    # the assignment space by which one each assignment falsifies.
    for k in range(1, 5):
        occ = (1 << k) - 1
        patterns = [Clause(pos, occ ^ pos) for pos in range(1 << k)]
        for a in range(1 << k):
            falsified = [c for c in patterns if not clause_satisfied(c, a)]
            assert len(falsified) == 1


@given(st.integers(1, 8), st.data())
def test_clause_satisfied_matches_literal_semantics(n, data):
    occ = data.draw(st.integers(1, (1 << n) - 1))
    pos = data.draw(st.integers(0, (1 << n) - 1)) & occ
    c = Clause(pos, occ ^ pos)
    a = data.draw(st.integers(0, (1 << n) - 1))
    expected = any(bool(a >> l.variable & 1) != l.negated for l in c.literals())
    assert clause_satisfied(c, a) == expected


def test_raw_cnf_rejects_out_of_range_literal():
    with pytest.raises(ValueError):
        RawCnf(1, ((Literal(1),),))


def test_raw_cnf_flags_empty_clause():
    assert RawCnf(2, ((),)).contains_empty_clause
    assert not RawCnf(2, ((Literal(0),),)).contains_empty_clause


def test_from_clauses_sorts_canonically():
    f = PcnfFormula.from_clauses(2, [cl("a b"), cl("~a"), cl("b")])
    assert f.clauses == (cl("~a"), cl("b"), cl("a b"))
    assert [clause_sort_key(c) for c in f.clauses] == sorted(
        clause_sort_key(c) for c in f.clauses
    )


def test_from_clauses_rejects_duplicates():
    with pytest.raises(ValueError):
        PcnfFormula.from_clauses(2, [cl("a b"), cl("a b")])


def test_from_clauses_rejects_out_of_universe_variables():
    with pytest.raises(ValueError):
        PcnfFormula.from_clauses(1, [cl("a b")])


def test_from_clauses_rejects_beyond_max_vars():
    with pytest.raises(ValueError):
        PcnfFormula.from_clauses(MAX_VARS + 1, [])


def test_occurring_variables():
    f = PcnfFormula.from_clauses(4, [cl("a"), cl("a ~c")])
    assert f.occurring_variables() == (0, 2)


def test_satisfied_by():
    f = PcnfFormula.from_clauses(2, [cl("a"), cl("~a b")])
    assert f.satisfied_by(0b11)
    assert not f.satisfied_by(0b01)
    assert PcnfFormula.from_clauses(2, []).satisfied_by(0)
