"""
Hypothesis strategies for words, tangency sets and Whitehead moves.
"""

from hypothesis import strategies as st

from models.word import Word
from services.whitehead_service import enumerate_moves
from services.word_service import make_tangency_set


def letters(genus):
    return st.integers(-genus, genus).filter(lambda c: c != 0)


@st.composite
def words(draw, genus=3, max_size=12):
    return Word(tuple(draw(st.lists(letters(genus), max_size=max_size))))


@st.composite
def tangency_sets(draw, min_genus=1, max_genus=3, max_length=8):
    """Raw word sets with total raw length <= max_length, split into up to three words."""
    genus = draw(st.integers(min_genus, max_genus))
    flat = draw(st.lists(letters(genus), max_size=max_length))
    cuts = []
    if len(flat) > 1:
        cuts = sorted(draw(st.sets(st.integers(1, len(flat) - 1), max_size=2)))
    bounds = [0] + cuts + [len(flat)]
    pieces = [flat[lo:hi] for lo, hi in zip(bounds, bounds[1:]) if hi > lo]
    return make_tangency_set(genus, pieces)


@st.composite
def sets_with_moves(draw, max_genus=3, max_length=8, max_moves=5):
    s = draw(tangency_sets(max_genus=max_genus, max_length=max_length))
    moves = draw(st.lists(st.sampled_from(enumerate_moves(s.genus)), max_size=max_moves))
    return s, moves
