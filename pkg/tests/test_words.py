import itertools

import pytest

from cxkit.coxeter import iter_words
from cxkit.words import (
    BraidMove,
    braid_equal,
    expose_square,
    greedy_normal_form,
    is_reduced,
    matsumoto_path,
    reduced_words,
    replay_moves,
    word_subword_leq,
)

from conftest import braid_class_bfs


def test_is_reduced_examples(systems):
    A2, B2 = systems("A2"), systems("B2")
    assert is_reduced(A2, ())
    assert not is_reduced(A2, (1, 1))
    assert is_reduced(B2, (1, 2, 1, 2))


def test_normal_form_examples(systems):
    A2 = systems("A2")
    nf = greedy_normal_form(A2, (1, 2, 1, 2))
    assert nf.factors == (A2.longest_element, A2.reflection(2))
    nf = greedy_normal_form(A2, (2, 1, 1))
    assert nf.factors == (A2.element_from_word((2, 1)), A2.reflection(1))
    assert greedy_normal_form(A2, (1,)).factors == (A2.reflection(1),)
    assert greedy_normal_form(A2, ()).factors == ()


def test_braid_equal_examples(systems):
    A2 = systems("A2")
    assert braid_equal(A2, (1, 2, 1), (2, 1, 2))
    assert not braid_equal(A2, (1, 2), (2, 1))
    assert not braid_equal(A2, (1, 1), (1,))


@pytest.mark.parametrize("descriptor", ["A2", "B2"])
def test_braid_equal_matches_bfs_closure(descriptor, systems):
    W = systems(descriptor)
    for n in range(6):
        words = list(itertools.product(W.generators, repeat=n))
        classes = {}
        for w in words:
            classes.setdefault(greedy_normal_form(W, w), set()).add(w)
        for w in words:
            oracle = braid_class_bfs(w, W.m)
            assert classes[greedy_normal_form(W, w)] == oracle


@pytest.mark.parametrize("descriptor", ["A2", "B2", "A3", "G2", "2A3"])
def test_normal_form_invariants(descriptor, systems):
    W = systems(descriptor.lstrip("2"))
    for w in iter_words(W.generators, 6 if W.rank == 2 else 5):
        nf = greedy_normal_form(W, w)
        assert nf.letter_count == len(w)
        assert all(not f.is_identity for f in nf.factors)
        for a, b in zip(nf.factors, nf.factors[1:]):
            assert b.left_descents <= a.right_descents
        assert greedy_normal_form(W, nf.expand()) == nf
        assert W.element_from_word(nf.expand()) == W.element_from_word(w)


def test_reduced_words_single_factor(systems):
    W = systems("A3")
    for x in W.elements():
        forms = {greedy_normal_form(W, w) for w in reduced_words(W, x)}
        if x.is_identity:
            assert forms == {greedy_normal_form(W, ())}
        else:
            (nf,) = forms
            assert nf.factors == (x,)


def test_matsumoto_examples(systems):
    A2 = systems("A2")
    assert matsumoto_path(A2, (1, 2, 1), (2, 1, 2)) == [BraidMove(1, 1, 2)]
    assert matsumoto_path(A2, (1, 2, 1), (1, 2, 1)) == []
    A3 = systems("A3")
    w0 = A3.longest_element
    words = reduced_words(A3, w0)
    assert len(words) == 16
    path = matsumoto_path(A3, words[0], words[-1])
    assert path and replay_moves(A3, words[0], path) == words[-1]


def test_matsumoto_preconditions(systems):
    A2 = systems("A2")
    with pytest.raises(ValueError):
        matsumoto_path(A2, (1, 1), (1, 1))
    with pytest.raises(ValueError):
        matsumoto_path(A2, (1, 2), (2, 1))


def test_matsumoto_budget(systems):
    A3 = systems("A3")
    words = reduced_words(A3, A3.longest_element)
    assert matsumoto_path(A3, words[0], words[-1], budget=2) is None


def test_expose_square_examples(systems):
    A2 = systems("A2")
    assert expose_square(A2, (1, 1)) == ((1, 1), [], 1)
    assert expose_square(A2, (1, 2, 1, 2)) == ((2, 1, 2, 2), [BraidMove(1, 1, 2)], 3)
    assert expose_square(A2, (1, 2, 1)) is None


@pytest.mark.parametrize("descriptor", ["A2", "B2", "G2", "A3", "B3"])
def test_expose_square_exactly_on_nonreduced(descriptor, systems):
    W = systems(descriptor)
    for w in iter_words(W.generators, 6 if W.rank == 2 else 5):
        found = expose_square(W, w)
        assert (found is None) == is_reduced(W, w)
        if found is not None:
            new, moves, pos = found
            assert replay_moves(W, w, moves) == new
            assert new[pos - 1] == new[pos]
            assert braid_equal(W, w, new)
            assert len(new) == len(w)


def test_subword_order():
    assert word_subword_leq((), (3, 1))
    assert word_subword_leq((1, 2), (1, 2, 1))
    assert not word_subword_leq((2, 2), (1, 2, 1))
    assert not word_subword_leq((1, 2, 1, 1), (1, 2, 1))


def test_braid_move_rejects_mismatch(systems):
    A2 = systems("A2")
    with pytest.raises(ValueError):
        BraidMove(1, 1, 2).apply(A2, (2, 1, 2))
