import itertools

import pytest

from models.model_class import ModelClass
from models.word import CyclicWord
from services.criterion_service import check_A
from services.model_catalog import (
    HAND_DRAWN_MODEL_COUNTS,
    catalog_note,
    colourability_hint,
    cycle_systems,
    enumerate_models,
    models_frame,
)
from services.oracle_service import bfs_explore
from services.whitehead_service import reduce, symmetry_key
from services.word_service import from_cyclic_words


def _as_set(m: ModelClass):
    return from_cyclic_words(m.genus, m.representative)


def _all_a_sets(genus):
    """Every condition-(A) state of a genus, without symmetry reduction."""
    states = set()
    for k in range(genus + 1):
        for generators in itertools.combinations(range(1, genus + 1), k):
            letters = frozenset(generators) | frozenset(-i for i in generators)
            for cycles in cycle_systems(letters):
                states.add(from_cyclic_words(genus, cycles).state_key)
    return states


def test_genus_zero_has_only_the_empty_model():
    classes = enumerate_models(0)
    assert len(classes) == 1
    assert classes[0].is_empty


def test_genus_one_has_two_models():
    classes = enumerate_models(1)
    assert len(classes) == 2
    assert classes[0].is_empty
    assert [str(w) for w in classes[1].representative] == ["x1", "x1^-1"]


def test_genus_two_has_five_nonempty_models(genus2_minimal):
    classes = enumerate_models(2)
    assert sum(1 for m in classes if not m.is_empty) == 5
    keys = {_as_set(m).state_key for m in classes}
    assert symmetry_key(genus2_minimal.state_key, 2) in keys
    assert () in keys


@pytest.mark.parametrize("g", [1, 2, 3])
def test_every_class_satisfies_condition_a(g):
    for m in enumerate_models(g):
        assert check_A(_as_set(m))[0]
        assert all(not w.is_empty() for w in m.representative)
        assert colourability_hint(m)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_classes_are_distinct_orbit_representatives(g):
    classes = enumerate_models(g)
    keys = [_as_set(m).state_key for m in classes]
    assert len(set(keys)) == len(keys)
    assert all(symmetry_key(key, g) == key for key in keys)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_orbits_cover_every_a_set(g):
    classes = enumerate_models(g)
    assert sum(m.orbit_size for m in classes) == len(_all_a_sets(g))


@pytest.mark.parametrize("g", [1, 2])
def test_minimal_flag_agrees_with_exhaustive_search(g):
    for m in enumerate_models(g):
        s = _as_set(m)
        oracle_min = bfs_explore(s, modulo_symmetry=True).global_min_length
        assert m.minimal == (oracle_min == s.length)
        if not m.minimal:
            assert from_cyclic_words(g, m.reduces_to).length == oracle_min


@pytest.mark.parametrize("g", [2, 3])
def test_reducible_classes_record_a_minimal_target(g):
    classes = enumerate_models(g)
    by_key = {_as_set(m).state_key: m for m in classes}
    for m in classes:
        if m.minimal:
            continue
        target = from_cyclic_words(g, m.reduces_to)
        assert target.length < _as_set(m).length
        assert symmetry_key(target.state_key, g) == target.state_key
        assert not reduce(target)[1].steps
        if check_A(target)[0]:
            assert by_key[target.state_key].minimal


def test_genus_two_has_one_reducible_class():
    reducible = [m for m in enumerate_models(2) if not m.minimal]
    assert len(reducible) == 1
    assert str(reducible[0]) == "{x1 x2, x1^-1 x2^-1}"
    assert [str(w) for w in reducible[0].reduces_to] == ["x1", "x1^-1"]
    assert reducible[0].to_dict()["reduces_to"] == ["x1", "x1^-1"]


def test_models_are_listed_by_generators_used():
    used = [m.generators_used for m in enumerate_models(3)]
    assert used == sorted(used)


def test_colourability_hint_flags_odd_parity():
    assert colourability_hint(ModelClass(1, (CyclicWord((1,)), CyclicWord((-1,)))))
    assert colourability_hint(ModelClass(2, ()))
    assert not colourability_hint(ModelClass(1, (CyclicWord((1,)),)))


def test_catalog_note_only_when_counts_differ():
    assert HAND_DRAWN_MODEL_COUNTS == {1: 1, 2: 4}
    assert catalog_note(1, enumerate_models(1)) is None
    assert catalog_note(3, enumerate_models(3)) is None
    note = catalog_note(2, enumerate_models(2))
    assert note is not None
    assert "5 nonempty classes" in note
    assert "shows 4" in note
    assert "4 of them are Whitehead-minimal" in note
    assert "{x1 x2, x1^-1 x2^-1} reduces to {x1, x1^-1}" in note


def test_models_frame_columns():
    df = models_frame(enumerate_models(2))
    assert list(df.columns) == ["class", "genus", "words", "curves", "generators_used",
                                "orbit_size", "minimal", "reduces_to", "colourable"]
    assert df.loc[0, "words"] == "(empty)"
    assert df["minimal"].sum() == 5
    assert df.loc[~df["minimal"], "reduces_to"].tolist() == ["x1; x1^-1"]
    assert df["colourable"].all()


def test_cycle_systems_on_one_generator():
    systems = list(cycle_systems(frozenset({1, -1})))
    assert systems == [[(1,), (-1,)]]
