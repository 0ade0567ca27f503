import dataclasses

import pytest

from cxkit.coxeter import iter_words
from cxkit.reduction import (
    BraidRewrite,
    ClassSummary,
    CyclicShiftLeft,
    CyclicShiftRight,
    ReductionResult,
    SquareContraction,
    check_trace,
    move_from_dict,
    move_to_dict,
    reduce_word,
    verify_trace,
)
from cxkit.words import BraidMove, is_reduced


def test_examples(twists):
    A2, flip = twists("A2"), twists("2A2")
    r = reduce_word(A2, (1, 1))
    assert r.final_word == (1,)
    assert r.trace == (SquareContraction((1, 1), 1),)
    r = reduce_word(A2, (1, 2, 1))
    assert r.final_word == (2, 1) and r.element.length == 2 == r.summary.min_length
    assert [m.kind for m in r.trace] == ["cyclic_shift_left", "square_contraction"]
    r = reduce_word(flip, (1, 2))
    assert r.final_word == (2,)
    assert r.trace[0] == CyclicShiftLeft(1)
    r = reduce_word(A2, ())
    assert r.final_word == () and r.trace == ()


def test_move_semantics(twists):
    flip = twists("2A2")
    assert CyclicShiftLeft(1).apply(flip, (1, 2)) == (2, 2)
    assert CyclicShiftRight(1).apply(flip, (1, 2)) == (1, 1)
    assert SquareContraction((2, 1, 1), 2).apply(flip, (2, 1, 1)) == (2, 1)


@pytest.mark.parametrize("descriptor, maxlen", [("A2", 6), ("2A2", 6), ("B2", 5), ("2B2", 5), ("2A3", 4)])
def test_every_output_verifies(descriptor, maxlen, twists):
    tw = twists(descriptor)
    for w in iter_words(tw.system.generators, maxlen):
        r = reduce_word(tw, w)
        assert verify_trace(tw, w, r), w
        assert is_reduced(tw.system, r.final_word)
        if not any(isinstance(m, SquareContraction) for m in r.trace):
            # shifts and braid rewrites stay inside the F-class
            assert r.summary.contains_input


def test_length_non_increasing_along_trace(twists):
    tw = twists("A3")
    for w in iter_words(tw.system.generators, 5):
        cur = w
        for m in reduce_word(tw, w).trace:
            nxt = m.apply(tw, cur)
            assert len(nxt) <= len(cur)
            if isinstance(m, BraidRewrite):
                assert len(nxt) == len(cur)
            cur = nxt


def test_tampered_square_position_rejected(twists):
    A2 = twists("A2")
    r = reduce_word(A2, (1, 1))
    bad = dataclasses.replace(r, trace=(SquareContraction((1, 1), 2),))
    check = check_trace(A2, (1, 1), bad)
    assert not check and check.move_index == 1


def test_non_minimal_final_rejected(twists):
    A2 = twists("A2")
    w = (1, 2, 1)
    fake = ReductionResult(w, w, A2.system.element_from_word(w), ClassSummary(1, 3, False, True), ())
    check = check_trace(A2, w, fake)
    assert not check and "minimum" in check.message


def test_wrong_input_rejected(twists):
    A2 = twists("A2")
    r = reduce_word(A2, (1, 1))
    assert not verify_trace(A2, (2, 2), r)


def test_bad_braid_rewrite_rejected(twists):
    A2 = twists("A2")
    w = (1, 2, 1)
    res = ReductionResult(w, (1, 1, 2), A2.system.element_from_word((2,)), ClassSummary(1, 3, False, True),
                          (BraidRewrite(w, (1, 1, 2)),))
    assert not check_trace(A2, w, res)
    moves = (BraidMove(1, 2, 1),)
    res = dataclasses.replace(res, trace=(BraidRewrite(w, (2, 1, 2), moves),))
    assert not check_trace(A2, w, res)


def test_wrong_summary_rejected(twists):
    A2 = twists("A2")
    r = reduce_word(A2, (1, 2, 1))
    bad = dataclasses.replace(r, summary=ClassSummary(r.summary.min_length, 99, False, True))
    assert not check_trace(A2, (1, 2, 1), bad)


def test_deterministic(twists):
    tw = twists("B3")
    for w in [(1, 2, 3, 2, 1, 3), (3, 2, 1, 2, 3, 2), (2, 3, 2, 3, 2)]:
        assert reduce_word(tw, w) == reduce_word(tw, w)


def test_dict_roundtrip(twists):
    tw = twists("2A3")
    for w in [(1, 2, 3, 2, 1), (2, 2, 3), (1, 3, 2, 1, 3)]:
        r = reduce_word(tw, w)
        d = r.to_dict()
        for m in d["trace"]:
            assert move_to_dict(move_from_dict(m)) == m
        back = ReductionResult.from_dict(tw, d)
        assert back == r and verify_trace(tw, w, back)
