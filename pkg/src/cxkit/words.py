"""Words over the simple reflections and the positive braid monoid.

Words are tuples of generator labels; all positions reported to callers are
1-based, matching how words are written on the command line.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence

from .coxeter import CoxeterSystem, WeylElement, Word
from .errors import BudgetExceeded

DEFAULT_BFS_BUDGET = 10**5


@dataclass(frozen=True)
class BraidMove:
    """Replace the alternating word ``s t s ...`` at ``position`` by ``t s t ...``.

    The replaced block has length ``m(s, t)``.
    """

    position: int
    s: int
    t: int

    def apply(self, system: CoxeterSystem, word: Sequence[int]) -> Word:
        m = system.m(self.s, self.t)
        i = self.position - 1
        before = _alternating(self.s, self.t, m)
        if self.s == self.t or tuple(word[i : i + m]) != before:
            raise ValueError(f"{self} does not apply to {tuple(word)}")
        return tuple(word[:i]) + _alternating(self.t, self.s, m) + tuple(word[i + m :])

    def to_dict(self) -> dict:
        return {"position": self.position, "s": self.s, "t": self.t}

    @classmethod
    def from_dict(cls, d: dict) -> "BraidMove":
        return cls(int(d["position"]), int(d["s"]), int(d["t"]))


def _alternating(s: int, t: int, m: int) -> Word:
    return tuple(s if k % 2 == 0 else t for k in range(m))


def replay_moves(system: CoxeterSystem, word: Sequence[int], moves: Sequence[BraidMove]) -> Word:
    out = tuple(word)
    for mv in moves:
        out = mv.apply(system, out)
    return out


def is_reduced(system: CoxeterSystem, word: Sequence[int]) -> bool:
    return system.element_from_word(word).length == len(word)


def braid_neighbors(system: CoxeterSystem, word: Word) -> list[tuple[Word, BraidMove]]:
    """All words one braid move away, sorted lexicographically."""
    out = []
    n = len(word)
    for i in range(n - 1):
        s, t = word[i], word[i + 1]
        if s == t:
            continue
        m = system.m(s, t)
        if i + m <= n and word[i : i + m] == _alternating(s, t, m):
            new = word[:i] + _alternating(t, s, m) + word[i + m :]
            out.append((new, BraidMove(i + 1, s, t)))
    out.sort(key=lambda p: p[0])
    return out


def braid_search(
    system: CoxeterSystem,
    start: Sequence[int],
    goal: Callable[[Word], bool],
    budget: int = DEFAULT_BFS_BUDGET,
) -> tuple[Word, list[BraidMove]] | None:
    """Breadth-first search of the braid class of ``start`` for a word satisfying ``goal``.

    Returns the first goal word found with the move chain from ``start``, or
    ``None`` if the whole class was searched without success. Raises
    :class:`BudgetExceeded` once more than ``budget`` words are visited.
    """
    start = tuple(start)
    if goal(start):
        return start, []
    parent: dict[Word, tuple[Word, BraidMove] | None] = {start: None}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for nxt, mv in braid_neighbors(system, w):
            if nxt in parent:
                continue
            parent[nxt] = (w, mv)
            if goal(nxt):
                path = []
                cur = nxt
                while parent[cur] is not None:
                    prev, m = parent[cur]
                    path.append(m)
                    cur = prev
                return nxt, path[::-1]
            if len(parent) > budget:
                raise BudgetExceeded(f"braid search visited more than {budget} words")
            queue.append(nxt)
    return None


def matsumoto_path(
    system: CoxeterSystem,
    w: Sequence[int],
    v: Sequence[int],
    budget: int = DEFAULT_BFS_BUDGET,
) -> list[BraidMove] | None:
    """Braid moves turning the reduced word ``w`` into the reduced word ``v``.

    Both words must be reduced expressions of the same element. ``None``
    means the search budget ran out (a path always exists).
    """
    w, v = system.check_word(w), system.check_word(v)
    x = system.element_from_word(w)
    if x.length != len(w) or len(v) != len(w):
        raise ValueError("matsumoto_path needs reduced words of equal length")
    if system.element_from_word(v) != x:
        raise ValueError("words represent different elements")
    try:
        found = braid_search(system, w, lambda u: u == v, budget)
    except BudgetExceeded:
        return None
    if found is None:
        raise AssertionError("reduced words of one element are not braid connected")
    return found[1]


@dataclass(frozen=True)
class BraidNormalForm:
    """Left-greedy factorization of a positive braid into simple elements."""

    factors: tuple[WeylElement, ...]

    @property
    def letter_count(self) -> int:
        return sum(f.length for f in self.factors)

    def words(self) -> list[Word]:
        return [f.reduced_word for f in self.factors]

    def expand(self) -> Word:
        return tuple(s for f in self.factors for s in f.reduced_word)

    def __len__(self) -> int:
        return len(self.factors)


def _slide(a: WeylElement, b: WeylElement) -> tuple[WeylElement, WeylElement]:
    """Make the pair ``(a, b)`` left-weighted: every left descent of ``b`` is a right descent of ``a``."""
    while True:
        free = b.left_descents - a.right_descents
        if not free:
            return a, b
        s = min(free)
        a = a.right_mul(s)
        b = b.left_mul(s)


def greedy_normal_form(system: CoxeterSystem, word: Sequence[int]) -> BraidNormalForm:
    """Left-greedy normal form of the positive braid represented by ``word``.

    Letters are appended one at a time; each append is followed by a single
    right-to-left pass making every adjacent pair left-weighted.
    """
    factors: list[WeylElement] = []
    for s in system.check_word(word):
        factors.append(system.reflection(s))
        for k in range(len(factors) - 1, 0, -1):
            a, b = _slide(factors[k - 1], factors[k])
            if a == factors[k - 1]:
                break
            factors[k - 1], factors[k] = a, b
        while factors and factors[-1].is_identity:
            factors.pop()
    return BraidNormalForm(tuple(factors))


def braid_equal(system: CoxeterSystem, w: Sequence[int], v: Sequence[int]) -> bool:
    if len(w) != len(v):
        return False
    return greedy_normal_form(system, w) == greedy_normal_form(system, v)


def expose_square(
    system: CoxeterSystem,
    word: Sequence[int],
    budget: int = DEFAULT_BFS_BUDGET,
) -> tuple[Word, list[BraidMove], int] | None:
    """Find a braid-equivalent word with two equal adjacent letters.

    Scans for the first letter ``s`` that is a right descent of the reduced
    prefix before it, then rewrites that prefix to a reduced word ending in
    ``s``. Returns ``(new_word, moves, position)`` where letters ``position``
    and ``position + 1`` coincide, or ``None`` when ``word`` is reduced.
    """
    word = system.check_word(word)
    x = system.identity
    for k, s in enumerate(word):
        if x.has_right_descent(s):
            prefix = word[:k]
            found = braid_search(system, prefix, lambda u: u[-1] == s, budget)
            assert found is not None, "exchange condition violated"
            new_prefix, moves = found
            return new_prefix + word[k:], moves, k
        x = x.right_mul(s)
    return None


def word_subword_leq(u: Sequence[int], w: Sequence[int]) -> bool:
    """True iff ``u`` is obtained from ``w`` by deleting letters."""
    it = iter(w)
    return all(any(a == b for b in it) for a in u)


def reduced_words(system: CoxeterSystem, x: WeylElement, budget: int = DEFAULT_BFS_BUDGET) -> list[Word]:
    """All reduced words of ``x``, sorted: the braid class of one of them."""
    start = x.reduced_word
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for nxt, _ in braid_neighbors(system, w):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > budget:
                    raise BudgetExceeded(f"more than {budget} reduced words")
                queue.append(nxt)
    return sorted(seen)
