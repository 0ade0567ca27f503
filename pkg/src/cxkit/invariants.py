"""Combinatorial invariants of Deligne-Lusztig varieties attached to words and tuples.

Everything here is computed in the Weyl group: F-supports, irreducibility,
the point-count polynomial for the set of irreducible components, dimension,
the number of strata and smoothness evidence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import prod
from typing import Sequence, Union

from .coxeter import CoxeterSystem, WeylElement
from .polynomial import QPolynomial
from .twist import Twist


@dataclass(frozen=True)
class DLTuple:
    """A tuple ``(w_1, ..., w_r)`` of elements of one Weyl group; ``r = 0`` allowed."""

    elements: tuple[WeylElement, ...] = ()

    def __post_init__(self):
        systems = {id(x.system) for x in self.elements}
        if len(systems) > 1:
            raise ValueError("tuple mixes elements of different systems")

    @classmethod
    def from_words(cls, system: CoxeterSystem, words: Sequence[Sequence[int]]) -> "DLTuple":
        return cls(tuple(system.element_from_word(w) for w in words))

    def __add__(self, other: "DLTuple") -> "DLTuple":
        return DLTuple(self.elements + other.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


WordOrTuple = Union[Sequence[int], DLTuple]


def _letters(t: WordOrTuple) -> frozenset[int]:
    if isinstance(t, DLTuple):
        # generators below w in Bruhat order are exactly its support
        return frozenset().union(*(x.support for x in t.elements))
    return frozenset(t)


def f_support(tw: Twist, t: WordOrTuple) -> frozenset[frozenset[int]]:
    """The set of F-orbits met by the letters of a word, or by the supports of a tuple."""
    letters = _letters(t)
    if not isinstance(t, DLTuple):
        tw.system.check_word(t)
    return frozenset(orb for orb in tw.orbits() if orb & letters)


def has_full_f_support(tw: Twist, t: WordOrTuple) -> bool:
    return len(f_support(tw, t)) == len(tw.orbits())


def is_irreducible_dl(tw: Twist, t: WordOrTuple) -> bool:
    return has_full_f_support(tw, t)


def is_coxeter_element(tw: Twist, x: WeylElement) -> bool:
    """Full F-support, and the letters of a reduced word lie in pairwise distinct F-orbits."""
    word = x.reduced_word
    orbits = [tw.orbit_of(s) for s in word]
    return len(set(orbits)) == len(orbits) and has_full_f_support(tw, word)


def component_count(tw: Twist, t: WordOrTuple) -> QPolynomial:
    """Point count of ``G^F / P_I^F`` as a polynomial in ``q``.

    ``I`` is the F-support of ``t`` and ``J`` the union of its orbits; the
    count is the sum of ``q^l(w)`` over F-fixed minimal coset representatives
    ``w`` in ``W^J``.
    """
    J = frozenset().union(*f_support(tw, t))
    reps = tw.system.min_coset_reps(J)
    return QPolynomial.from_exponents(w.length for w in reps if tw.apply(w) == w)


def dl_dimension(t: DLTuple) -> int:
    return sum(x.length for x in t.elements)


def strata_count(t: DLTuple) -> int:
    """Number of strata ``X(w_1', ..., w_r')`` with ``w_i' <= w_i``."""
    return prod(len(x.system.lower_interval(x)) for x in t.elements)


def is_rationally_smooth(x: WeylElement) -> bool:
    """Palindromicity of the Poincare polynomial of the lower interval ``[e, x]``."""
    return x.system.poincare_polynomial(x).is_palindromic(x.length)


def is_dihedral_longest(x: WeylElement) -> bool:
    """``x`` is the longest element of a standard parabolic of rank at most 2."""
    supp = x.support
    return len(supp) <= 2 and supp <= x.right_descents


class Verdict(enum.Enum):
    SMOOTH_BY_DIHEDRAL_LONGEST = "SmoothByDihedralLongest"
    RATIONALLY_SMOOTH_ALL_FACTORS = "RationallySmoothAllFactors"
    UNKNOWN = "Unknown"


SIMPLY_LACED_CAVEAT = (
    "rational smoothness implies smoothness of the Schubert variety only in "
    "simply-laced types"
)


@dataclass(frozen=True)
class SmoothnessVerdict:
    verdict: Verdict
    evidence: tuple[dict, ...] = ()
    caveat: str | None = None
    failing: tuple[int, ...] = field(default=())

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict.value, "evidence": list(self.evidence)}
        if self.caveat:
            out["caveat"] = self.caveat
        if self.failing:
            out["failing_factors"] = list(self.failing)
        return out


def smoothness_certificate(t: DLTuple) -> SmoothnessVerdict:
    """Grade the evidence that the compactified variety of ``t`` is smooth."""
    evidence = []
    for i, x in enumerate(t.elements, 1):
        poly = x.system.poincare_polynomial(x)
        evidence.append({
            "factor": i,
            "word": list(x.reduced_word),
            "dihedral_longest": is_dihedral_longest(x),
            "poincare": str(poly),
            "palindromic": poly.is_palindromic(x.length),
        })
    if all(e["dihedral_longest"] for e in evidence):
        return SmoothnessVerdict(Verdict.SMOOTH_BY_DIHEDRAL_LONGEST, tuple(evidence))
    failing = tuple(e["factor"] for e in evidence if not e["palindromic"])
    if not failing:
        return SmoothnessVerdict(Verdict.RATIONALLY_SMOOTH_ALL_FACTORS, tuple(evidence),
                                 SIMPLY_LACED_CAVEAT)
    return SmoothnessVerdict(Verdict.UNKNOWN, tuple(evidence), None, failing)
