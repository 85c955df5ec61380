import math
import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from models.whitehead_move import MoveAction, MultiplierMove, PermutationMove
from services.errors import IndexOutOfRange
from services.whitehead_service import (
    apply,
    apply_sequence,
    canonical,
    enumerate_moves,
    is_minimal,
    length_delta,
    multiplier_deltas,
    multiplier_moves,
    naive_length_delta,
    permutation_moves,
    reduce,
    symmetry_key,
    symmetry_orbit,
)
from services.word_service import make_tangency_set
from tests.strategies import sets_with_moves, tangency_sets

K, R, L, B = MoveAction.KEEP, MoveAction.RIGHT, MoveAction.LEFT, MoveAction.BOTH


# =========================================================================
# Enumeration
# =========================================================================

@pytest.mark.parametrize("g", [1, 2, 3])
def test_move_counts_match_closed_formulas(g):
    assert len(enumerate_moves(g, permutations=False)) == 2 * g * (4 ** (g - 1) - 1)
    assert len(enumerate_moves(g, multipliers=False)) == 2 ** g * math.factorial(g) - 1


@pytest.mark.parametrize("g", [1, 2, 3])
def test_moves_are_distinct_substitutions(g):
    tables = {tuple(m.substitute(c) for i in range(1, g + 1) for c in (i, -i))
              for m in enumerate_moves(g)}
    assert len(tables) == len(enumerate_moves(g))
    identity = tuple((c,) for i in range(1, g + 1) for c in (i, -i))
    assert identity not in tables


def test_genus_one_has_no_multiplier_moves():
    assert enumerate_moves(1, permutations=False) == []


def test_genus_two_counts():
    assert len(multiplier_moves(2)) == 12
    assert len(permutation_moves(2)) == 7


def test_genus_zero_has_no_moves():
    assert enumerate_moves(0) == []


def test_enumeration_is_deterministic():
    assert enumerate_moves(3) == enumerate_moves(3)
    assert multiplier_moves(2)[0] == MultiplierMove(1, (K, R))


# =========================================================================
# Moves
# =========================================================================

def test_multiplier_substitution_respects_inverses():
    m = MultiplierMove(-2, (B, K))
    assert m.substitute(1) == (2, 1, -2)
    assert m.substitute(-1) == (2, -1, -2)
    assert m.substitute(2) == (2,)
    assert m.describe() == "a = x2^-1: x1 -> x2 x1 x2^-1"


def test_permutation_inverse():
    m = PermutationMove((-2, 3, 1))
    inv = m.inverse()
    for code in (1, -1, 2, -2, 3, -3):
        (image,) = m.substitute(code)
        assert inv.substitute(image) == (code,)


@settings(max_examples=200)
@given(sets_with_moves(max_moves=1))
def test_every_move_is_reversible(case):
    s, moves = case
    for m in moves:
        back = apply(m.inverse(), apply(m, s))
        assert back.state_key == canonical(s).state_key


# =========================================================================
# apply
# =========================================================================

def test_first_reduction_move(genus2_set):
    m = MultiplierMove(-2, (R, K))
    result = apply(m, genus2_set)
    expected = make_tangency_set(2, [(1, 1, 2), (-1, -2), (-1,)])
    assert result.state_key == expected.state_key
    assert result.length == 6


def test_second_reduction_move(genus2_set, genus2_minimal):
    first = apply(MultiplierMove(-2, (R, K)), genus2_set)
    second = apply(MultiplierMove(1, (K, L)), first)
    assert second.state_key == genus2_minimal.state_key


def test_permutation_on_empty_set():
    s = make_tangency_set(2, [])
    for m in permutation_moves(2):
        assert apply(m, s).state_key == ()


def test_apply_rejects_foreign_generators():
    s = make_tangency_set(2, [(1, 2)])
    with pytest.raises(IndexOutOfRange):
        apply(PermutationMove((-1,)), s)


def test_apply_carries_inessential_curves():
    s = make_tangency_set(2, [(1, 2), (), (2, -2)])
    out = apply(MultiplierMove(1, (K, R)), s)
    assert out.inessential_count == 2


@given(sets_with_moves())
def test_moves_preserve_essential_count(case):
    s, moves = case
    assert apply_sequence(moves, s).essential_count == s.essential_count


@given(tangency_sets())
def test_permutations_preserve_length(s):
    for m in permutation_moves(s.genus):
        assert apply(m, s).length == s.length


# =========================================================================
# length_delta
# =========================================================================

def test_length_delta_of_first_move(genus2_set):
    assert length_delta(MultiplierMove(-2, (R, K)), genus2_set) == -4


def test_permutation_delta_is_zero(genus2_set):
    for m in permutation_moves(2):
        assert length_delta(m, genus2_set) == 0


@given(tangency_sets(max_length=10))
def test_fast_deltas_match_naive(s):
    deltas = multiplier_deltas(s)
    for m, fast in zip(multiplier_moves(s.genus), deltas):
        assert int(fast) == naive_length_delta(m, s)
        assert length_delta(m, s) == int(fast)


def test_fast_delta_agrees_on_ten_thousand_cases():
    rng = random.Random(2024)
    checked = 0
    while checked < 10_000:
        g = rng.randint(2, 3)
        raw = [[rng.choice((1, -1)) * rng.randint(1, g) for _ in range(rng.randint(1, 5))]
               for _ in range(rng.randint(1, 3))]
        s = make_tangency_set(g, raw)
        m = rng.choice(multiplier_moves(g))
        assert length_delta(m, s) == naive_length_delta(m, s)
        checked += 1


# =========================================================================
# reduce
# =========================================================================

def test_reduce_genus2_example(genus2_set, genus2_minimal):
    s_min, trace = reduce(genus2_set)
    assert s_min.state_key == genus2_minimal.state_key
    assert trace.lengths == [10, 6, 4]
    assert trace.steps[0].move == MultiplierMove(2, (L, K))
    assert [step["length_after"] for step in trace.to_dict()] == [6, 4]


def test_reduce_empty_set():
    s_min, trace = reduce(make_tangency_set(2, []))
    assert s_min.state_key == ()
    assert len(trace) == 0


def test_reduce_genus_one_is_identity(torus_four_parallel):
    s_min, trace = reduce(torus_four_parallel)
    assert s_min.state_key == torus_four_parallel.state_key
    assert trace.lengths == [4]


@given(tangency_sets())
def test_reduce_is_minimal_and_idempotent(s):
    s_min, trace = reduce(s)
    assert s_min.length <= s.length
    assert is_minimal(s_min)
    lengths = trace.lengths
    assert all(a > b for a, b in zip(lengths, lengths[1:]))
    again, again_trace = reduce(s_min)
    assert again.state_key == s_min.state_key
    assert len(again_trace) == 0


def test_reduce_is_deterministic(genus2_set):
    assert reduce(genus2_set) == reduce(genus2_set)


def _reduced_random_word(rng, genus, size):
    codes = [rng.choice((1, -1)) * rng.randint(1, genus)]
    while len(codes) < size:
        c = rng.choice((1, -1)) * rng.randint(1, genus)
        if c == -codes[-1] or (len(codes) == size - 1 and c == -codes[0]):
            continue
        codes.append(c)
    return codes


@pytest.mark.slow
def test_reduce_long_genus_six_input():
    rng = random.Random(6)
    raw = [_reduced_random_word(rng, 6, 250) for _ in range(4)]
    s = make_tangency_set(6, raw)
    assert s.length == 1000
    started = time.perf_counter()
    s_min, _ = reduce(s)
    assert time.perf_counter() - started < 10.0
    assert is_minimal(s_min)
    assert s_min.essential_count == s.essential_count


# =========================================================================
# Symmetry
# =========================================================================

def test_symmetry_key_is_orbit_minimum(genus2_minimal):
    key = symmetry_key(genus2_minimal.state_key, 2)
    orbit = symmetry_orbit(genus2_minimal.state_key, 2)
    assert key in orbit
    assert all(symmetry_key(other, 2) == key for other in orbit)


@given(tangency_sets(max_genus=2), st.data())
def test_symmetry_key_invariant_under_permutations(s, data):
    m = data.draw(st.sampled_from(permutation_moves(s.genus)))
    assert symmetry_key(apply(m, s).state_key, s.genus) == symmetry_key(s.state_key, s.genus)
