import itertools

import pytest
from hypothesis import given, strategies as st

from models.word import CyclicWord, Letter, Word
from services.errors import IndexOutOfRange
from services.word_service import (
    cyclic_equal,
    cyclic_reduce,
    free_reduce_codes,
    from_cyclic_words,
    invert,
    is_cyclically_reduced,
    least_rotation,
    length,
    make_tangency_set,
    same_cyclic_multiset,
)
from tests.strategies import words


def _reverse_inverse(codes):
    out = []
    for c in codes:
        out.insert(0, -c)
    return tuple(out)


# =========================================================================
# Letters
# =========================================================================

def test_letter_inverse_is_involution():
    for code in (1, -1, 3, -7):
        letter = Letter.from_code(code)
        assert letter.inverse().inverse() == letter
        assert letter.inverse().code == -code


def test_letter_order_matches_alphabet_order():
    ordered = [Letter(1), Letter(1, -1), Letter(2), Letter(2, -1), Letter(3)]
    assert sorted(reversed(ordered)) == ordered
    assert str(Letter(2, -1)) == "x2^-1"


@pytest.mark.parametrize("index, sign", [(0, 1), (-1, 1), (1, 0), (2, 2)])
def test_letter_rejects_bad_fields(index, sign):
    with pytest.raises(ValueError):
        Letter(index, sign)


# =========================================================================
# invert
# =========================================================================

def test_invert_empty_word():
    assert invert(Word()) == Word()


def test_invert_two_letters():
    assert invert(Word((1, 2))) == Word((-2, -1))


def test_invert_five_letters():
    w = Word((1, 2, 1, 2, 2))
    assert invert(w) == Word((-2, -2, -1, -2, -1))
    assert invert(w).codes == _reverse_inverse(w.codes)


@given(words())
def test_invert_is_involution_and_keeps_length(w):
    assert invert(invert(w)) == w
    assert len(invert(w)) == len(w)
    assert len(cyclic_reduce(invert(w))) == len(cyclic_reduce(w))


# =========================================================================
# cyclic_reduce
# =========================================================================

def test_cancelling_pair_reduces_to_empty_word():
    assert cyclic_reduce(Word((1, -1))).is_empty()


def test_end_letters_cancel_cyclically():
    assert cyclic_reduce(Word((1, 2, -1))) == CyclicWord((2,))


def test_canonical_rotation_starts_at_least_letter():
    c = cyclic_reduce(Word((-2, -2, -1)))
    assert c == CyclicWord((-1, -2, -2))
    assert str(c) == "x1^-1 x2^-1 x2^-1"


def test_free_reduce_cascades():
    assert free_reduce_codes([1, 2, -2, -1, 3]) == [3]


@given(words())
def test_cyclic_reduce_is_idempotent(w):
    once = cyclic_reduce(w)
    assert cyclic_reduce(once) == once
    assert is_cyclically_reduced(once)


@given(words())
def test_cyclic_reduce_shortens_with_same_parity(w):
    c = cyclic_reduce(w)
    assert len(c) <= len(w)
    assert len(c) % 2 == len(w) % 2


@given(words(), st.integers(0, 11))
def test_rotations_share_canonical_form(w, shift):
    codes = w.codes
    if codes:
        k = shift % len(codes)
        rotated = Word(codes[k:] + codes[:k])
        assert cyclic_equal(cyclic_reduce(rotated), cyclic_reduce(w))


@given(st.lists(st.integers(0, 5), min_size=1, max_size=12))
def test_least_rotation_matches_brute_force(keys):
    start = least_rotation(keys)
    best = min(keys[i:] + keys[:i] for i in range(len(keys)))
    assert keys[start:] + keys[:start] == best


def test_cyclic_reduce_exhaustive_genus_two_up_to_length_six():
    alphabet = (1, -1, 2, -2)
    for size in range(6 + 1):
        for codes in itertools.product(alphabet, repeat=size):
            c = cyclic_reduce(codes)
            assert cyclic_reduce(c) == c
            assert is_cyclically_reduced(c)


# =========================================================================
# cyclic_equal
# =========================================================================

def test_cyclic_equal_rotation():
    assert cyclic_equal(cyclic_reduce((1, 2)), cyclic_reduce((2, 1)))


def test_cyclic_word_not_identified_with_inverse():
    assert not cyclic_equal(cyclic_reduce((1, 2)), cyclic_reduce((-2, -1)))


def test_cyclic_equal_different_letters():
    assert not cyclic_equal(cyclic_reduce((1,)), cyclic_reduce((2,)))


# =========================================================================
# Tangency sets
# =========================================================================

def test_length_of_genus2_example(genus2_set):
    assert length(genus2_set) == 10


def test_length_of_empty_set():
    assert length(make_tangency_set(2, [])) == 0


def test_length_ignores_cancelling_word():
    s = make_tangency_set(1, [(1, -1)])
    assert length(s) == 0
    assert s.essential_count == 0
    assert s.inessential_count == 1


def test_tangency_set_is_a_multiset(torus_four_parallel):
    assert torus_four_parallel.essential_count == 4
    assert torus_four_parallel.state_key == ((1,), (1,), (-1,), (-1,))


def test_out_of_range_index_is_rejected():
    with pytest.raises(IndexOutOfRange) as exc:
        make_tangency_set(1, [(1, 2)])
    assert exc.value.index == 2
    assert exc.value.genus == 1


def test_genus_zero_accepts_only_empty_words():
    s = make_tangency_set(0, [()])
    assert s.length == 0
    with pytest.raises(IndexOutOfRange):
        make_tangency_set(0, [(1,)])


def test_negative_genus_is_rejected():
    with pytest.raises(ValueError):
        make_tangency_set(-1, [])


def test_word_order_does_not_split_states():
    s = make_tangency_set(2, [(1, 2), (-1,)])
    t = make_tangency_set(2, [(-1,), (2, 1)])
    assert same_cyclic_multiset(s, t)
    assert s != t


def test_from_cyclic_words_keeps_inessential_curves():
    s = from_cyclic_words(2, [(2, 1), (1, -1)], inessential=1)
    assert s.state_key == ((1, 2),)
    assert s.inessential_count == 2
    assert s.raw_words == (Word((1, 2)), Word(), Word())
