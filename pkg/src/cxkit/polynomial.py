"""Integer polynomials in a single formal variable ``q``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple


class SurdValue(NamedTuple):
    """Exact value ``rational + sqrt_coeff * sqrt(radicand)``."""

    rational: int
    sqrt_coeff: int
    radicand: int

    @property
    def is_rational(self) -> bool:
        return self.sqrt_coeff == 0

    def __str__(self) -> str:
        if self.sqrt_coeff == 0:
            return str(self.rational)
        return f"{self.rational} + {self.sqrt_coeff}*sqrt({self.radicand})"


@dataclass(frozen=True)
class QPolynomial:
    """Finitely supported polynomial with integer coefficients.

    ``coeffs[k]`` is the coefficient of ``q**k``; trailing zeros are stripped
    so that equal polynomials compare equal.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(a) for a in c))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "QPolynomial":
        """Sum of ``q**e`` over the given exponents (with multiplicity)."""
        counts: dict[int, int] = {}
        for e in exponents:
            counts[e] = counts.get(e, 0) + 1
        return cls.from_dict(counts)

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "QPolynomial":
        if not terms:
            return cls(())
        if min(terms) < 0:
            raise ValueError("negative exponent")
        c = [0] * (max(terms) + 1)
        for e, a in terms.items():
            c[int(e)] += int(a)
        return cls(tuple(c))

    @classmethod
    def parse(cls, text: str) -> "QPolynomial":
        """Inverse of ``str``: accepts ``"1 + 2*q + q^3"`` style input."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls(())
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[int, int] = {}
        i = 0
        while i < len(s):
            sign = -1 if s[i] == "-" else 1
            j = i + 1
            while j < len(s) and s[j] not in "+-":
                j += 1
            tok = s[i + 1 : j]
            if "q" in tok:
                head, _, tail = tok.partition("q")
                coeff = int(head.rstrip("*")) if head else 1
                exp = int(tail[1:]) if tail else 1
            else:
                coeff, exp = int(tok), 0
            terms[exp] = terms.get(exp, 0) + sign * coeff
            i = j
        return cls.from_dict(terms)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def to_dict(self) -> dict[str, int]:
        return {str(k): a for k, a in enumerate(self.coeffs) if a}

    def is_palindromic(self, degree: int | None = None) -> bool:
        """True iff the coefficient of ``q^k`` equals that of ``q^(degree-k)``."""
        n = self.degree if degree is None else degree
        c = self.coeffs
        get = lambda k: c[k] if 0 <= k < len(c) else 0  # noqa: E731
        return all(get(k) == get(n - k) for k in range(n + 1)) and len(c) <= n + 1

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if not self.coeffs or not other.coeffs:
            return QPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(tuple(out))

    def __call__(self, q):
        """Evaluate at an integer, ``Fraction`` or other ring element."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * q + a
        return acc

    def evaluate_root_power(self, p: int, doubled_exponent: int) -> SurdValue:
        """Evaluate exactly at ``q = p**(doubled_exponent/2)``.

        Used for the Suzuki and Ree groups where ``q`` is an odd power of
        ``sqrt(p)``. Odd powers of ``q`` contribute to the ``sqrt(p)`` part.
        """
        if doubled_exponent < 0:
            raise ValueError("exponent must be non-negative")
        rational, irrational = 0, 0
        for k, a in enumerate(self.coeffs):
            e = k * doubled_exponent
            if e % 2 == 0:
                rational += a * p ** (e // 2)
            else:
                irrational += a * p ** ((e - 1) // 2)
        return SurdValue(rational, irrational, p)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(("+ " if a > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPolynomial({str(self)!r})"

