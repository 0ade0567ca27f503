"""Reduce a word over the simple reflections to a minimal-length element of an F-class.

The engine alternates two phases. While the word is not reduced it exposes a
square ``s s`` by braid moves and deletes one letter. Once reduced, if its
element is not of minimal length in its F-class, it takes the first step of a
cyclic-shift descent: a braid rewrite bringing the step's generator to the
front (or its F-image to the back), followed by moving that letter across.
Every move is recorded so that :func:`verify_trace` can replay it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar, Sequence, Union

from .coxeter import WeylElement, Word
from .fconj import f_conjugacy_class, reduce_to_min
from .twist import Twist
from .words import (
    BraidMove,
    braid_equal,
    braid_search,
    expose_square,
    is_reduced,
    replay_moves,
)


class TraceError(ValueError):
    """A move does not apply to the current word."""


@dataclass(frozen=True)
class BraidRewrite:
    before: Word
    after: Word
    moves: tuple[BraidMove, ...] = ()

    kind: ClassVar[str] = "braid_rewrite"
    paper_tag: ClassVar[str] = "braid-invariance"

    def apply(self, tw: Twist, word: Word) -> Word:
        if word != self.before:
            raise TraceError(f"braid rewrite expects {list(self.before)}, have {list(word)}")
        if not braid_equal(tw.system, self.before, self.after):
            raise TraceError(f"{list(self.before)} and {list(self.after)} are not braid equivalent")
        if self.moves:
            try:
                replayed = replay_moves(tw.system, self.before, self.moves)
            except ValueError as exc:
                raise TraceError(str(exc)) from None
            if replayed != self.after:
                raise TraceError("braid moves do not reproduce the rewritten word")
        return self.after

    def payload(self) -> dict:
        return {"before": list(self.before), "after": list(self.after),
                "moves": [m.to_dict() for m in self.moves]}


@dataclass(frozen=True)
class SquareContraction:
    """Delete the left letter of the square at ``position`` (1-based)."""

    word: Word
    position: int

    kind: ClassVar[str] = "square_contraction"
    paper_tag: ClassVar[str] = "square-contraction"

    def apply(self, tw: Twist, word: Word) -> Word:
        if word != self.word:
            raise TraceError(f"contraction expects {list(self.word)}, have {list(word)}")
        i = self.position - 1
        if not (0 <= i < len(word) - 1) or word[i] != word[i + 1]:
            raise TraceError(f"no square at position {self.position} of {list(word)}")
        return word[:i] + word[i + 1 :]

    def payload(self) -> dict:
        return {"word": list(self.word), "position": self.position}


@dataclass(frozen=True)
class CyclicShiftLeft:
    """``s v -> v F(s)``."""

    s: int

    kind: ClassVar[str] = "cyclic_shift_left"
    paper_tag: ClassVar[str] = "cyclic-shift"

    def apply(self, tw: Twist, word: Word) -> Word:
        if not word or word[0] != self.s:
            raise TraceError(f"left shift by {self.s} needs a word starting with it, have {list(word)}")
        return word[1:] + (tw(self.s),)

    def payload(self) -> dict:
        return {"s": self.s}


@dataclass(frozen=True)
class CyclicShiftRight:
    """``v F(s) -> s v``."""

    s: int

    kind: ClassVar[str] = "cyclic_shift_right"
    paper_tag: ClassVar[str] = "cyclic-shift"

    def apply(self, tw: Twist, word: Word) -> Word:
        if not word or word[-1] != tw(self.s):
            raise TraceError(f"right shift by {self.s} needs a word ending with F({self.s}), have {list(word)}")
        return (self.s,) + word[:-1]

    def payload(self) -> dict:
        return {"s": self.s}


ReductionMove = Union[BraidRewrite, SquareContraction, CyclicShiftLeft, CyclicShiftRight]
_MOVE_TYPES = {cls.kind: cls for cls in (BraidRewrite, SquareContraction, CyclicShiftLeft, CyclicShiftRight)}


def move_to_dict(move: ReductionMove) -> dict:
    return {"kind": move.kind, **move.payload(), "paper_tag": move.paper_tag}


def move_from_dict(d: dict) -> ReductionMove:
    kind = d.get("kind")
    if kind not in _MOVE_TYPES:
        raise TraceError(f"unknown move kind {kind!r}")
    if kind == "braid_rewrite":
        return BraidRewrite(tuple(d["before"]), tuple(d["after"]),
                            tuple(BraidMove.from_dict(m) for m in d.get("moves", [])))
    if kind == "square_contraction":
        return SquareContraction(tuple(d["word"]), int(d["position"]))
    return _MOVE_TYPES[kind](int(d["s"]))


@dataclass(frozen=True)
class ClassSummary:
    min_length: int
    size: int
    elliptic: bool
    contains_input: bool

    def to_dict(self) -> dict:
        return {"min_length": self.min_length, "size": self.size,
                "elliptic": self.elliptic, "contains_input": self.contains_input}


@dataclass(frozen=True)
class ReductionResult:
    input_word: Word
    final_word: Word
    element: WeylElement = field(repr=False)
    summary: ClassSummary
    trace: tuple[ReductionMove, ...]

    def to_dict(self) -> dict:
        return {
            "input_word": list(self.input_word),
            "final_word": list(self.final_word),
            "element": list(self.element.reduced_word),
            "class": self.summary.to_dict(),
            "trace": [move_to_dict(m) for m in self.trace],
        }

    @classmethod
    def from_dict(cls, tw: Twist, d: dict) -> "ReductionResult":
        c = d["class"]
        return cls(
            input_word=tw.system.check_word(d["input_word"]),
            final_word=tw.system.check_word(d["final_word"]),
            element=tw.system.element_from_word(d["element"]),
            summary=ClassSummary(int(c["min_length"]), int(c["size"]),
                                 bool(c["elliptic"]), bool(c["contains_input"])),
            trace=tuple(move_from_dict(m) for m in d["trace"]),
        )


def _rewrite(tw: Twist, word: Word, goal) -> list[ReductionMove]:
    found = braid_search(tw.system, word, goal)
    assert found is not None
    after, moves = found
    if after == word:
        return []
    return [BraidRewrite(word, after, tuple(moves))]


def reduce_word(tw: Twist, word: Sequence[int]) -> ReductionResult:
    """Reduce ``word`` to a reduced word of a minimal-length element, recording each move."""
    system = tw.system
    system.check_guard()
    start = system.check_word(word)
    cur = start
    trace: list[ReductionMove] = []

    def push(move: ReductionMove):
        nonlocal cur
        cur = move.apply(tw, cur)
        trace.append(move)

    while True:
        while True:
            found = expose_square(system, cur)
            if found is None:
                break
            exposed, moves, pos = found
            if moves:
                push(BraidRewrite(cur, exposed, tuple(moves)))
            push(SquareContraction(cur, pos))

        x = system.element_from_word(cur)
        _, path = reduce_to_min(tw, x)
        if not path.steps:
            break
        s = path.steps[0]
        if x.has_left_descent(s):
            for mv in _rewrite(tw, cur, lambda u: u[0] == s):
                push(mv)
            push(CyclicShiftLeft(s))
        else:
            # a length non-increasing step with s not a left descent has F(s) as a right descent
            fs = tw(s)
            for mv in _rewrite(tw, cur, lambda u: u[-1] == fs):
                push(mv)
            push(CyclicShiftRight(s))

    x0 = system.element_from_word(cur)
    cls = f_conjugacy_class(tw, x0)
    summary = ClassSummary(cls.min_length, cls.size, cls.elliptic,
                           system.element_from_word(start) in cls)
    return ReductionResult(start, cur, x0, summary, tuple(trace))


@dataclass(frozen=True)
class TraceCheck:
    ok: bool
    message: str = ""
    move_index: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_trace(tw: Twist, input_word: Sequence[int], result: ReductionResult) -> TraceCheck:
    """Replay a reduction trace and re-derive every claim it makes.

    Minimality is checked against a fresh enumeration of the F-class, not
    against the shift search used by the engine.
    """
    system = tw.system
    try:
        cur = system.check_word(input_word)
    except ValueError as exc:
        return TraceCheck(False, str(exc))
    if tuple(result.input_word) != cur:
        return TraceCheck(False, "input word does not match the certificate")
    for i, move in enumerate(result.trace, 1):
        before = cur
        try:
            cur = move.apply(tw, cur)
        except (TraceError, ValueError) as exc:
            return TraceCheck(False, f"move {i} ({move.kind}): {exc}", i)
        if isinstance(move, BraidRewrite) and len(cur) != len(before):
            return TraceCheck(False, f"move {i}: braid rewrite changed length", i)
    if cur != tuple(result.final_word):
        return TraceCheck(False, f"replay gives {list(cur)}, certificate claims {list(result.final_word)}")
    if not is_reduced(system, cur):
        return TraceCheck(False, "final word is not reduced")
    x0 = system.element_from_word(cur)
    if x0 != result.element:
        return TraceCheck(False, "final element does not match the final word")
    members = _class_by_enumeration(tw, x0)
    lmin = min(y.length for y in members)
    if x0.length != lmin:
        return TraceCheck(False, f"final element has length {x0.length}, class minimum is {lmin}")
    if result.summary.min_length != lmin or result.summary.size != len(members):
        return TraceCheck(False, "class summary does not match the recomputed class")
    return TraceCheck(True)


def verify_trace(tw: Twist, input_word: Sequence[int], result: ReductionResult) -> bool:
    return check_trace(tw, input_word, result).ok


def _class_by_enumeration(tw: Twist, x: WeylElement) -> set[WeylElement]:
    """``{v^-1 x F(v) : v in W}`` computed directly over the whole group."""
    return {v.inverse * x * tw.apply(v) for v in tw.system.elements()}
