import itertools

import pytest
from hypothesis import given, settings

from models.verdict import Interpretation
from models.word import Word
from services.criterion_service import check_A, essential_count_fastpath, verdict, verdict_for_set
from services.errors import IndexOutOfRange
from services.model_catalog import cycle_systems
from services.whitehead_service import apply, apply_sequence, enumerate_moves, length_delta
from services.word_service import from_cyclic_words, invert, make_tangency_set
from tests.conftest import GENUS2_WORDS
from tests.strategies import sets_with_moves, tangency_sets


def _a_sets(genus, max_length):
    """Every condition-(A) set of genus <= genus with length <= max_length."""
    for k in range(0, min(genus, max_length // 2) + 1):
        for generators in itertools.combinations(range(1, genus + 1), k):
            letters = frozenset(generators) | frozenset(-i for i in generators)
            for cycles in cycle_systems(letters):
                yield from_cyclic_words(genus, cycles)


# =========================================================================
# check_A
# =========================================================================

def test_check_a_on_minimal_form(genus2_minimal):
    holds, report = check_A(genus2_minimal)
    assert holds
    assert report.counts == ((1, 1), (1, 1))
    assert [report.crossings(i) for i in (1, 2)] == [2, 2]


def test_check_a_repeated_letter(torus_four_parallel):
    holds, report = check_A(torus_four_parallel)
    assert not holds
    assert report.counts == ((2, 2),)


@pytest.mark.parametrize("g", [0, 1, 3])
def test_check_a_empty_set(g):
    assert check_A(make_tangency_set(g, []))[0]


def test_check_a_unbalanced_letter():
    assert not check_A(make_tangency_set(2, [(1, 2)]))[0]


# =========================================================================
# verdict
# =========================================================================

def test_verdict_genus2_example():
    v = verdict(2, [Word(w) for w in GENUS2_WORDS])
    assert v.criterion_holds
    assert v.interpretation is Interpretation.INCONCLUSIVE_REALIZABLE
    assert v.trace.lengths == [10, 6, 4]
    assert [str(w) for w in v.s_min.reduced] == ["x1 x2", "x1^-1", "x2^-1"]


def test_verdict_four_parallel_curves():
    v = verdict(1, [(1,), (1,), (-1,), (-1,)])
    assert not v.criterion_holds
    assert v.interpretation is Interpretation.NONTRIVIAL_H1


def test_verdict_single_inessential_curve():
    v = verdict(1, [()])
    assert v.criterion_holds
    assert v.s_min.length == 0


def test_verdict_genus_zero_holds():
    assert verdict(0, []).criterion_holds
    assert verdict(0, [(), ()]).criterion_holds


def test_verdict_genus_zero_rejects_letters():
    with pytest.raises(IndexOutOfRange):
        verdict(0, [(1,)])


def test_verdict_without_curves_fails():
    v = verdict(2, [])
    assert not v.criterion_holds
    assert v.interpretation is Interpretation.NONTRIVIAL_H1


def test_verdict_document_key_order():
    v = verdict(2, [Word(w) for w in GENUS2_WORDS])
    doc = v.to_dict()
    assert list(doc) == ["genus", "input_words", "s_min", "trace", "occurrences",
                         "criterion_holds", "interpretation"]
    assert doc["occurrences"] == {"1": {"pos": 1, "neg": 1}, "2": {"pos": 1, "neg": 1}}
    assert doc["input_words"][0] == "x1 x2 x1 x2 x2"


def test_verdict_is_deterministic():
    words = [Word(w) for w in GENUS2_WORDS]
    assert verdict(2, words) == verdict(2, words)


@given(tangency_sets())
def test_reversing_every_curve_keeps_the_verdict(s):
    flipped = [invert(w) for w in s.raw_words]
    assert verdict(s.genus, flipped).criterion_holds == verdict_for_set(s).criterion_holds


def test_inverting_a_single_word_can_change_the_verdict():
    assert not verdict(1, [Word((1,)), Word((1,))]).criterion_holds
    assert verdict(1, [Word((-1,)), Word((1,))]).criterion_holds


# =========================================================================
# essential_count_fastpath
# =========================================================================

def test_fastpath_three_curves_on_torus():
    s = make_tangency_set(1, [(1,), (1,), (-1,)])
    assert essential_count_fastpath(s) is False
    assert not verdict_for_set(s).criterion_holds


def test_fastpath_no_conclusion_at_two_g():
    assert essential_count_fastpath(make_tangency_set(2, [(1,), (-1,), (2,), (-2,)])) is None


def test_fastpath_five_parallel_curves():
    s = make_tangency_set(2, [(1,)] * 5)
    assert essential_count_fastpath(s) is False
    assert not verdict_for_set(s).criterion_holds


@given(tangency_sets(max_length=10))
def test_fastpath_agrees_with_pipeline(s):
    fast = essential_count_fastpath(s)
    if fast is not None:
        assert fast == verdict_for_set(s).criterion_holds


# =========================================================================
# Invariance properties
# =========================================================================

@pytest.mark.parametrize("genus", [1, 2, 3])
def test_condition_a_survives_non_increasing_moves(genus):
    checked = 0
    for s in _a_sets(genus, 6):
        assert check_A(s)[0]
        for m in enumerate_moves(genus):
            if length_delta(m, s) <= 0:
                assert check_A(apply(m, s))[0], (s, m)
                checked += 1
    assert checked > 0


@settings(max_examples=150, deadline=None)
@given(sets_with_moves(max_moves=5))
def test_verdict_independent_of_cut_system(case):
    s, moves = case
    moved = apply_sequence(moves, s)
    assert verdict_for_set(moved).criterion_holds == verdict_for_set(s).criterion_holds
