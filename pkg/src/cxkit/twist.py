"""Diagram automorphisms ``F`` of a Coxeter system and the standard twisted types."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .coxeter import CoxeterSystem, WeylElement, Word, build_system
from .errors import CoxeterMatrixViolation, ParseError

_TWISTED_RE = re.compile(r"^([23])?([A-G][1-8](?:x[A-G][1-8])*)$")

# informational only; nothing evaluates these
SUZUKI_REE_Q = {
    "2B2": "q is an odd power of sqrt(2)",
    "2F4": "q is an odd power of sqrt(2)",
    "2G2": "q is an odd power of sqrt(3)",
}


def _registry_sigma(prefix: str, family: str, n: int) -> dict[int, int] | None:
    """Generator permutation for a registry twist, as ``{label: image}``."""
    if prefix == "2":
        if family == "A" and n >= 2:
            return {i: n + 1 - i for i in range(1, n + 1)}
        if family == "D":
            return {n - 1: n, n: n - 1}
        if family == "E" and n == 6:
            return {1: 6, 6: 1, 3: 5, 5: 3}
        if family == "B" and n == 2:
            return {1: 2, 2: 1}
        if family == "F" and n == 4:
            return {1: 4, 4: 1, 2: 3, 3: 2}
        if family == "G" and n == 2:
            return {1: 2, 2: 1}
    if prefix == "3" and family == "D" and n == 4:
        return {1: 3, 3: 4, 4: 1}
    return None


@dataclass(frozen=True, eq=False)
class Twist:
    """A permutation of the simple reflections preserving the Coxeter matrix.

    ``sigma[s - 1]`` is the image of generator ``s``. The identity permutation
    is the untwisted (split) case.
    """

    system: CoxeterSystem
    sigma: tuple[int, ...]
    label: str | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        d, img = 1, self.sigma
        ident = self.system.generators
        while img != ident:
            img = tuple(self.sigma[s - 1] for s in img)
            d += 1
        return d

    @property
    def is_trivial(self) -> bool:
        return self.sigma == self.system.generators

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        if self.is_trivial:
            return self.system.descriptor
        return f"{self.system.descriptor}[{format_cycles(self.sigma)}]"

    @property
    def q_constraint(self) -> str | None:
        return SUZUKI_REE_Q.get(self.label or "")

    def __call__(self, s: int) -> int:
        return self.sigma[s - 1]

    def apply_word(self, word: Iterable[int]) -> Word:
        return tuple(self.sigma[s - 1] for s in word)

    def apply(self, x: WeylElement) -> WeylElement:
        """``F(x)``: apply ``sigma`` letterwise to a reduced word of ``x``."""
        if self.is_trivial:
            return x
        key = ("F", x)
        y = self._cache.get(key)
        if y is None:
            y = self.system.element_from_word(self.apply_word(x.reduced_word))
            self._cache[key] = y
        return y

    def conjugate(self, x: WeylElement, s: int) -> WeylElement:
        """``s * x * F(s)``."""
        return x.left_mul(s).right_mul(self.sigma[s - 1])

    def orbits(self) -> tuple[frozenset[int], ...]:
        """The partition of the generators into ``F``-orbits, sorted by least member."""
        seen: set[int] = set()
        out = []
        for s in self.system.generators:
            if s in seen:
                continue
            orb = {s}
            t = self.sigma[s - 1]
            while t != s:
                orb.add(t)
                t = self.sigma[t - 1]
            seen |= orb
            out.append(frozenset(orb))
        return tuple(out)

    def orbit_of(self, s: int) -> frozenset[int]:
        for orb in self.orbits():
            if s in orb:
                return orb
        raise KeyError(s)

    def __repr__(self) -> str:
        return f"Twist({self.name!r}, order={self.order})"


def build_twist(system: CoxeterSystem, sigma: Sequence[int] | Mapping[int, int] | None = None) -> Twist:
    """Validate ``sigma`` and wrap it as a :class:`Twist`.

    ``sigma`` may be a full image tuple, a partial ``{label: image}`` mapping
    (unlisted generators are fixed) or ``None`` for the identity.
    """
    n = system.rank
    if sigma is None:
        img = system.generators
    elif isinstance(sigma, Mapping):
        img = tuple(sigma.get(s, s) for s in system.generators)
    else:
        img = tuple(sigma)
    if sorted(img) != list(system.generators):
        raise ParseError(f"{list(img)} is not a permutation of 1..{n}", str(list(img)))
    for s in system.generators:
        for t in system.generators:
            if system.m(img[s - 1], img[t - 1]) != system.m(s, t):
                raise CoxeterMatrixViolation(
                    f"twist {format_cycles(img)} is not a diagram automorphism: "
                    f"m(s{s}, s{t}) = {system.m(s, t)} but "
                    f"m(s{img[s - 1]}, s{img[t - 1]}) = {system.m(img[s - 1], img[t - 1])}"
                )
    return Twist(system, img, _match_registry(system, img))


def _match_registry(system: CoxeterSystem, img: tuple[int, ...]) -> str | None:
    if img == system.generators or len(system.factors) != 1:
        return None
    family, n = system.factors[0]
    for prefix in "23":
        reg = _registry_sigma(prefix, family, n)
        if reg is not None and tuple(reg.get(s, s) for s in system.generators) == img:
            return prefix + system.descriptor
    return None


def registry_twist(descriptor: str, max_order: int | None = None) -> tuple[CoxeterSystem, Twist]:
    """Parse ``"2A3"``, ``"3D4"``, ``"B2"`` etc. into a system and its standard twist."""
    text = descriptor.strip()
    m = _TWISTED_RE.match(text)
    if m is None:
        # re-parse for a precise diagnostic naming the bad factor
        build_system(text.lstrip("23") or text, max_order)
        raise ParseError(f"unknown descriptor {descriptor!r}", descriptor)
    prefix, base = m.group(1), m.group(2)
    system = build_system(base, max_order)
    if prefix is None:
        return system, Twist(system, system.generators)
    if len(system.factors) != 1:
        raise ParseError(f"twisted products are not in the registry: {descriptor!r}", descriptor)
    family, n = system.factors[0]
    reg = _registry_sigma(prefix, family, n)
    if reg is None:
        raise ParseError(f"no registry twist {prefix}{base}", descriptor)
    return system, build_twist(system, reg)


def parse_cycles(text: str, rank: int) -> tuple[int, ...]:
    """Parse cycle notation ``"(1 3)(2)"`` into an image tuple on ``1..rank``."""
    img = list(range(1, rank + 1))
    body = text.strip()
    if not body:
        return tuple(img)
    if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\)\s*)+", body):
        raise ParseError(f"bad cycle notation {text!r}", text)
    seen: set[int] = set()
    for cyc in re.findall(r"\(([^)]*)\)", body):
        labels = [int(t) for t in re.split(r"[\s,]+", cyc.strip())]
        for s in labels:
            if not 1 <= s <= rank or s in seen:
                raise ParseError(f"bad label {s} in cycle ({cyc})", str(s))
            seen.add(s)
        for a, b in zip(labels, labels[1:] + labels[:1]):
            img[a - 1] = b
    return tuple(img)


def format_cycles(img: Sequence[int]) -> str:
    seen: set[int] = set()
    parts = []
    for s in range(1, len(img) + 1):
        if s in seen or img[s - 1] == s:
            continue
        cyc = [s]
        t = img[s - 1]
        while t != s:
            cyc.append(t)
            t = img[t - 1]
        seen |= set(cyc)
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def resolve_twist(descriptor: str, cycles: str | None = None, max_order: int | None = None) -> Twist:
    """Registry descriptor, optionally overridden by an explicit cycle list."""
    system, tw = registry_twist(descriptor, max_order)
    if cycles:
        if not tw.is_trivial:
            raise ParseError("explicit cycles need an untwisted descriptor", cycles)
        return build_twist(system, parse_cycles(cycles, system.rank))
    return tw
