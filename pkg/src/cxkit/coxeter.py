"""Finite crystallographic Coxeter systems with exact root-lattice arithmetic.

An element is stored as the tuple of images of the simple roots, each image an
integer coordinate vector in the basis of simple roots. All arithmetic is in
plain integers, so every crystallographic type (including G2 and F4) is exact.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import GuardExceeded, ParseError
from .polynomial import QPolynomial

Word = tuple[int, ...]
Vector = tuple[int, ...]

DEFAULT_MAX_ORDER = 10**6
_FACTOR_RE = re.compile(r"^([A-G])([1-8])$")

# smallest and largest admissible rank per family
_RANK_RANGE = {
    "A": (1, 8),
    "B": (2, 8),
    "C": (2, 8),
    "D": (4, 8),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_ORDER_OF_M = {0: 2, 1: 3, 2: 4, 3: 6}


def max_order_from_env() -> int:
    """Size guard for |W|, read from ``CXKIT_MAX_W`` at call time."""
    raw = os.environ.get("CXKIT_MAX_W")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_ORDER
    try:
        value = int(float(raw))
    except ValueError:
        raise ParseError(f"CXKIT_MAX_W is not a number: {raw!r}", raw) from None
    if value < 1:
        raise ParseError("CXKIT_MAX_W must be positive", raw)
    return value


def _cartan_factor(family: str, n: int) -> list[list[int]]:
    """Cartan matrix ``a[i][j] = <alpha_i^vee, alpha_j>`` in Bourbaki numbering."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if family in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if family == "B":
            # alpha_n short
            bond(n - 2, n - 1, -1, -2)
        elif family == "C":
            # alpha_n long
            bond(n - 2, n - 1, -2, -1)
    elif family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif family == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif family == "G":
        # alpha_1 short, alpha_2 long
        bond(0, 1, -1, -3)
    return a


def _group_order(family: str, n: int) -> int:
    if family == "A":
        return math.factorial(n + 1)
    if family in "BC":
        return 2**n * math.factorial(n)
    if family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(family, n)]


def parse_descriptor(descriptor: str) -> list[tuple[str, int]]:
    """Split ``"A2xB3"`` into ``[("A", 2), ("B", 3)]`` with rank validation."""
    text = descriptor.strip()
    if not text:
        raise ParseError("empty type descriptor", descriptor)
    factors = []
    for tok in text.split("x"):
        m = _FACTOR_RE.match(tok)
        if m is None:
            raise ParseError(f"unknown type factor {tok!r}", tok)
        family, n = m.group(1), int(m.group(2))
        lo, hi = _RANK_RANGE[family]
        if not lo <= n <= hi:
            raise ParseError(f"rank {n} out of range {lo}..{hi} for type {family}", tok)
        factors.append((family, n))
    return factors


@dataclass(frozen=True, eq=False)
class CoxeterSystem:
    """A finite Weyl group ``W`` with its simple reflections ``S``.

    Systems compare by identity; build them once with :func:`build_system`
    and share them.
    """

    descriptor: str
    cartan_matrix: tuple[tuple[int, ...], ...]
    factors: tuple[tuple[str, int], ...]
    order: int
    max_order: int = field(default=DEFAULT_MAX_ORDER, repr=False)

    # --- static data -------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @property
    def generators(self) -> tuple[int, ...]:
        """Generator labels ``1..n`` in descriptor order."""
        return tuple(range(1, self.rank + 1))

    @cached_property
    def coxeter_matrix(self) -> tuple[tuple[int, ...], ...]:
        a = self.cartan_matrix
        n = self.rank
        return tuple(
            tuple(1 if i == j else _ORDER_OF_M[a[i][j] * a[j][i]] for j in range(n))
            for i in range(n)
        )

    def m(self, s: int, t: int) -> int:
        """Order of ``s*t`` for generator labels ``s``, ``t``."""
        return self.coxeter_matrix[s - 1][t - 1]

    @cached_property
    def positive_roots(self) -> tuple[Vector, ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(n):
                    gamma = self._reflect(i, beta)
                    if all(c >= 0 for c in gamma) and gamma not in seen:
                        seen.add(gamma)
                        nxt.append(gamma)
            frontier = nxt
        return tuple(sorted(seen, key=lambda r: (sum(r), tuple(-c for c in r))))

    def _reflect(self, i: int, v: Vector) -> Vector:
        """Apply simple reflection ``s_{i+1}`` to a root-lattice vector."""
        row = self.cartan_matrix[i]
        pairing = sum(row[j] * v[j] for j in range(len(v)))
        if pairing == 0:
            return v
        out = list(v)
        out[i] -= pairing
        return tuple(out)

    # --- elements ----------------------------------------------------------

    @cached_property
    def identity(self) -> "WeylElement":
        n = self.rank
        return WeylElement(self, tuple(tuple(int(i == j) for i in range(n)) for j in range(n)))

    def check_word(self, word: Iterable[int]) -> Word:
        w = tuple(word)
        for s in w:
            if not (isinstance(s, int) and 1 <= s <= self.rank):
                raise ParseError(f"letter {s!r} is not a generator of {self.descriptor}", str(s))
        return w

    def element_from_word(self, word: Iterable[int]) -> "WeylElement":
        """The image of a word under the projection from the free monoid to ``W``."""
        x = self.identity
        for s in self.check_word(word):
            x = x.right_mul(s)
        return x

    def reflection(self, s: int) -> "WeylElement":
        return self.identity.right_mul(s)

    def check_guard(self, size: int | None = None, what: str = "W") -> None:
        size = self.order if size is None else size
        if size > self.max_order:
            raise GuardExceeded(f"|{what}| = {size} exceeds guard {self.max_order}")

    def elements(self) -> list["WeylElement"]:
        """All of ``W``, sorted by length and then canonical reduced word."""
        self.check_guard()
        return list(self._elements)

    @cached_property
    def _elements(self) -> tuple["WeylElement", ...]:
        seen = {self.identity}
        layer = [self.identity]
        out = [self.identity]
        while layer:
            nxt = []
            for x in layer:
                for s in self.generators:
                    if not x.has_right_descent(s):
                        y = x.right_mul(s)
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
            nxt.sort(key=lambda y: y.reduced_word)
            out.extend(nxt)
            layer = nxt
        assert len(out) == self.order, (len(out), self.order)
        return tuple(out)

    @cached_property
    def longest_element(self) -> "WeylElement":
        x = self.identity
        while True:
            for s in self.generators:
                if not x.has_right_descent(s):
                    x = x.right_mul(s)
                    break
            else:
                return x

    # --- operations --------------------------------------------------------

    def length(self, x: "WeylElement") -> int:
        return x.length

    def left_descents(self, x: "WeylElement") -> frozenset[int]:
        return x.left_descents

    def right_descents(self, x: "WeylElement") -> frozenset[int]:
        return x.right_descents

    def canonical_reduced_word(self, x: "WeylElement") -> Word:
        return x.reduced_word

    def bruhat_leq(self, v: "WeylElement", w: "WeylElement") -> bool:
        """Bruhat order via the lifting property on right descents."""
        while True:
            lv, lw = v.length, w.length
            if lv > lw:
                return False
            if lv == 0:
                return True
            if lv == lw:
                return v == w
            s = min(w.right_descents)
            if v.has_right_descent(s):
                v = v.right_mul(s)
            w = w.right_mul(s)

    def lower_interval(self, w: "WeylElement") -> set["WeylElement"]:
        """``[e, w]``, built from all subword products of a reduced word of ``w``."""
        below = {self.identity}
        for s in w.reduced_word:
            below |= {u.right_mul(s) for u in below}
            self.check_guard(len(below), "Bruhat interval")
        return below

    def poincare_polynomial(self, w: "WeylElement") -> QPolynomial:
        return QPolynomial.from_exponents(u.length for u in self.lower_interval(w))

    def parabolic_elements(self, J: Iterable[int]) -> list["WeylElement"]:
        """Elements of the standard parabolic subgroup ``W_J``."""
        J = frozenset(J)
        return [x for x in self.elements() if x.support <= J]

    def min_coset_reps(self, J: Iterable[int]) -> list["WeylElement"]:
        """Minimal-length representatives ``W^J`` of the cosets ``x W_J``."""
        J = frozenset(self.check_word(J))
        return [x for x in self.elements() if not (x.right_descents & J)]

    def parabolic_longest(self, J: Iterable[int]) -> "WeylElement":
        """Longest element of ``W_J``."""
        J = sorted(set(J))
        x = self.identity
        while True:
            for s in J:
                if not x.has_right_descent(s):
                    x = x.right_mul(s)
                    break
            else:
                return x

    def __repr__(self) -> str:
        return f"CoxeterSystem({self.descriptor!r})"


@dataclass(frozen=True)
class WeylElement:
    """Element of a Weyl group, stored as images of the simple roots.

    ``columns[j]`` is the image of the ``j``-th simple root. Two elements are
    equal iff their systems are the same object and their columns agree.
    """

    system: CoxeterSystem = field(repr=False)
    columns: tuple[Vector, ...]

    def _apply(self, v: Vector) -> Vector:
        cols = self.columns
        n = len(cols)
        return tuple(sum(v[j] * cols[j][i] for j in range(n) if v[j]) for i in range(n))

    def right_mul(self, s: int) -> "WeylElement":
        """``self * s`` for a generator label ``s``."""
        i = s - 1
        cols = self.columns
        a = self.system.cartan_matrix[i]
        ci = cols[i]
        new = []
        for j, cj in enumerate(cols):
            if j == i:
                new.append(tuple(-c for c in ci))
            elif a[j]:
                k = a[j]
                new.append(tuple(x - k * y for x, y in zip(cj, ci)))
            else:
                new.append(cj)
        return WeylElement(self.system, tuple(new))

    def left_mul(self, s: int) -> "WeylElement":
        """``s * self`` for a generator label ``s``."""
        reflect = self.system._reflect
        return WeylElement(self.system, tuple(reflect(s - 1, c) for c in self.columns))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.system is not self.system:
            raise ValueError("elements belong to different systems")
        return WeylElement(self.system, tuple(self._apply(c) for c in other.columns))

    @cached_property
    def inverse(self) -> "WeylElement":
        return self.system.element_from_word(reversed(_right_peel_word(self)))

    def has_right_descent(self, s: int) -> bool:
        col = self.columns[s - 1]
        for c in col:
            if c:
                return c < 0
        raise AssertionError("zero root image")

    @property
    def right_descents(self) -> frozenset[int]:
        return frozenset(s for s in self.system.generators if self.has_right_descent(s))

    @cached_property
    def left_descents(self) -> frozenset[int]:
        inv = self.inverse
        return frozenset(s for s in self.system.generators if inv.has_right_descent(s))

    def has_left_descent(self, s: int) -> bool:
        return s in self.left_descents

    @cached_property
    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        count = 0
        for beta in self.system.positive_roots:
            img = self._apply(beta)
            for c in img:
                if c:
                    count += c < 0
                    break
        return count

    @cached_property
    def reduced_word(self) -> Word:
        """Lexicographically smallest reduced word (smallest left descent first)."""
        inv = self.inverse
        word = []
        # peel the smallest left descent of x == smallest right descent of x^-1
        while True:
            for s in self.system.generators:
                if inv.has_right_descent(s):
                    word.append(s)
                    inv = inv.right_mul(s)
                    break
            else:
                return tuple(word)

    @cached_property
    def support(self) -> frozenset[int]:
        return frozenset(self.reduced_word)

    @property
    def is_identity(self) -> bool:
        return self == self.system.identity

    def __repr__(self) -> str:
        return f"<{self.system.descriptor}: {' '.join(map(str, self.reduced_word)) or 'e'}>"


def _right_peel_word(x: WeylElement) -> Word:
    out = []
    while True:
        for s in x.system.generators:
            if x.has_right_descent(s):
                out.append(s)
                x = x.right_mul(s)
                break
        else:
            return tuple(reversed(out))


def build_system(descriptor: str, max_order: int | None = None) -> CoxeterSystem:
    """Build the Weyl group named by a descriptor such as ``"A2"`` or ``"B2xG2"``.

    Raises :class:`ParseError` for an unknown type or unsupported rank and
    :class:`GuardExceeded` if ``|W|`` is larger than ``max_order`` (default
    ``CXKIT_MAX_W`` or 10**6).
    """
    factors = parse_descriptor(descriptor)
    limit = max_order_from_env() if max_order is None else max_order
    n = sum(r for _, r in factors)
    cartan = [[0] * n for _ in range(n)]
    offset = 0
    order = 1
    for family, r in factors:
        block = _cartan_factor(family, r)
        for i in range(r):
            for j in range(r):
                cartan[offset + i][offset + j] = block[i][j]
        offset += r
        order *= _group_order(family, r)
    if order > limit:
        raise GuardExceeded(f"|W({descriptor})| = {order} exceeds guard {limit}")
    return CoxeterSystem(
        descriptor=descriptor.strip(),
        cartan_matrix=tuple(tuple(row) for row in cartan),
        factors=tuple(factors),
        order=order,
        max_order=limit,
    )


def parse_word(text: str | Sequence[int]) -> Word:
    """Parse ``"1 2 1"`` into ``(1, 2, 1)``; whitespace only, empty allowed."""
    if not isinstance(text, str):
        return tuple(int(s) for s in text)
    out = []
    for tok in text.split():
        if not tok.isdigit() or int(tok) == 0:
            raise ParseError(f"bad letter {tok!r} in word", tok)
        out.append(int(tok))
    return tuple(out)


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(s) for s in word)


def iter_words(alphabet: Sequence[int], max_length: int) -> Iterator[Word]:
    """All words of length ``<= max_length`` in shortlex order."""
    layer: list[Word] = [()]
    yield ()
    for _ in range(max_length):
        layer = [w + (s,) for w in layer for s in alphabet]
        yield from layer
