"""F-conjugacy classes, cyclic shifts and descent to minimal length."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .coxeter import WeylElement
from .errors import BudgetExceeded
from .twist import Twist

DEFAULT_SHIFT_BUDGET = 10**6


@dataclass(frozen=True)
class ShiftPath:
    """A chain ``w_i = s_i w_{i-1} F(s_i)`` with non-increasing length."""

    start: WeylElement
    steps: tuple[int, ...] = ()

    def elements(self, tw: Twist) -> list[WeylElement]:
        out = [self.start]
        for s in self.steps:
            out.append(tw.conjugate(out[-1], s))
        return out

    def end(self, tw: Twist) -> WeylElement:
        return self.elements(tw)[-1]

    def is_valid(self, tw: Twist) -> bool:
        elems = self.elements(tw)
        return all(b.length <= a.length for a, b in zip(elems, elems[1:]))

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class FConjClass:
    twist: Twist = field(repr=False)
    elements: frozenset[WeylElement]
    min_length: int
    minimal_elements: frozenset[WeylElement]
    elliptic: bool
    representative: WeylElement

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, x: WeylElement) -> bool:
        return x in self.elements

    def sorted_elements(self) -> list[WeylElement]:
        return sorted(self.elements, key=lambda x: (x.length, x.reduced_word))


def _closure(tw: Twist, x: WeylElement) -> set[WeylElement]:
    seen = {x}
    stack = [x]
    gens = tw.system.generators
    while stack:
        y = stack.pop()
        for s in gens:
            z = tw.conjugate(y, s)
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return seen


def f_conjugacy_class(tw: Twist, x: WeylElement) -> FConjClass:
    """The F-class of ``x``: closure of ``{x}`` under ``y -> s y F(s)``."""
    tw.system.check_guard()
    key = ("class", x)
    cls = tw._cache.get(key)
    if cls is not None:
        return cls
    elems = frozenset(_closure(tw, x))
    cls = _make_class(tw, elems)
    for y in elems:
        tw._cache[("class", y)] = cls
    return cls


def _make_class(tw: Twist, elems: frozenset[WeylElement]) -> FConjClass:
    lmin = min(y.length for y in elems)
    minimal = frozenset(y for y in elems if y.length == lmin)
    rep = min(elems, key=lambda y: y.reduced_word)
    return FConjClass(tw, elems, lmin, minimal, _elliptic(tw, elems), rep)


def all_f_classes(tw: Twist) -> list[FConjClass]:
    """Partition of ``W`` into F-classes, ordered by their first element in ``W``."""
    done: set[WeylElement] = set()
    out = []
    for x in tw.system.elements():
        if x in done:
            continue
        cls = f_conjugacy_class(tw, x)
        done |= cls.elements
        out.append(cls)
    return out


def min_length_elements(cls: FConjClass) -> frozenset[WeylElement]:
    return cls.minimal_elements


def f_closed_support(tw: Twist, x: WeylElement) -> frozenset[int]:
    """Union of the F-orbits meeting the support of ``x``."""
    out: set[int] = set()
    for orb in tw.orbits():
        if orb & x.support:
            out |= orb
    return frozenset(out)


def _elliptic(tw: Twist, elems) -> bool:
    full = frozenset(tw.system.generators)
    return all(f_closed_support(tw, y) == full for y in elems)


def is_elliptic(tw: Twist, cls: FConjClass) -> bool:
    """No element of the class lies in a proper F-stable standard parabolic subgroup."""
    return _elliptic(tw, cls.elements)


def shifts_to(
    tw: Twist,
    x: WeylElement,
    y: WeylElement,
    budget: int = DEFAULT_SHIFT_BUDGET,
) -> ShiftPath | None:
    """A witness for ``x ->_F y``, or ``None`` if ``y`` is unreachable.

    Breadth-first over the elements reachable by length non-increasing
    generator conjugations; generators tried in label order.
    """
    if x == y:
        return ShiftPath(x)
    if y.length > x.length:
        return None
    parent: dict[WeylElement, tuple[WeylElement, int] | None] = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for s in tw.system.generators:
            v = tw.conjugate(u, s)
            if v in parent or v.length > u.length:
                continue
            parent[v] = (u, s)
            if v == y:
                return ShiftPath(x, tuple(_unwind(parent, v)))
            if len(parent) > budget:
                raise BudgetExceeded(f"shift search visited more than {budget} elements")
            queue.append(v)
    return None


def _unwind(parent, v) -> list[int]:
    steps = []
    while parent[v] is not None:
        u, s = parent[v]
        steps.append(s)
        v = u
    return steps[::-1]


def _descent_step(tw: Twist, x: WeylElement) -> list[int] | None:
    """Shortest equal-length shift path from ``x`` followed by one strictly shortening step."""
    lx = x.length
    parent: dict[WeylElement, tuple[WeylElement, int] | None] = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for s in tw.system.generators:
            v = tw.conjugate(u, s)
            lv = v.length
            if lv < lx:
                return _unwind(parent, u) + [s]
            if lv == lx and v not in parent:
                parent[v] = (u, s)
                queue.append(v)
    return None


def reduce_to_min(tw: Twist, x: WeylElement) -> tuple[WeylElement, ShiftPath]:
    """Descend from ``x`` to a minimal-length element of its F-class by cyclic shifts.

    Repeatedly searches the equal-length layer breadth-first for a strictly
    shortening conjugation. When none exists the current element is minimal.
    """
    tw.system.check_guard()
    steps: list[int] = []
    cur = x
    while True:
        seg = _descent_step(tw, cur)
        if seg is None:
            return cur, ShiftPath(x, tuple(steps))
        for s in seg:
            cur = tw.conjugate(cur, s)
        steps.extend(seg)


def shift_graph(tw: Twist, cls: FConjClass) -> dict[WeylElement, set[WeylElement]]:
    """Directed graph on the minimal elements; edges are generator conjugations."""
    graph = {}
    for x in cls.minimal_elements:
        graph[x] = {
            y for y in (tw.conjugate(x, s) for s in tw.system.generators)
            if y in cls.minimal_elements and y != x
        }
    return graph


def is_strongly_connected(graph: dict) -> bool:
    if not graph:
        return True
    root = next(iter(graph))
    reverse: dict = {v: set() for v in graph}
    for u, vs in graph.items():
        for v in vs:
            reverse[v].add(u)

    def reach(adj):
        seen = {root}
        stack = [root]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen

    return len(reach(graph)) == len(graph) == len(reach(reverse))
