"""Integer compositions: ordered words of positive parts with a fixed sum.

A composition is the ordered counterpart of a partition, so 1+3 and 3+1
are distinct compositions of 4. The operations here cover the word-level
structure the rest of the package builds on: reversal and palindromicity,
the gcd of the parts, the smallest period under concatenation, and the
rescaling that trades a common factor d for a d-fold repetition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Composition:
    """An ordered word of one or more positive integer parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("composition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive integers: {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> Composition:
        return cls(parts)

    @property
    def total(self) -> int:
        """The composed integer n, recomputed as the sum of the parts."""
        return sum(self.parts)

    @property
    def part_count(self) -> int:
        return len(self.parts)

    def reverse(self) -> Composition:
        """The same parts in the opposite order."""
        return Composition(self.parts[::-1])

    def is_palindrome(self) -> bool:
        """True iff the word reads the same forwards and backwards."""
        return self.parts == self.parts[::-1]

    def gcd(self) -> int:
        """Greatest common divisor of all parts; always divides ``total``."""
        return math.gcd(*self.parts)

    def period(self) -> int:
        """Smallest p such that the word is its length-p prefix repeated.

        Candidate periods are the divisors of the part count m, tried in
        increasing order; p works iff parts[i] == parts[i % p] for all i.
        A one-part word has period 1.
        """
        m = len(self.parts)
        for p in range(1, m + 1):
            if m % p:
                continue
            if all(self.parts[i] == self.parts[i % p] for i in range(p, m)):
                return p
        return m

    def is_aperiodic(self) -> bool:
        """True iff the smallest period equals the part count."""
        return self.period() == len(self.parts)

    def repeat(self, times: int) -> Composition:
        """The ``times``-fold concatenation of the word with itself."""
        if times < 1:
            raise ValueError(f"repetition count must be >= 1, got {times}")
        return Composition(self.parts * times)

    def rescale(self) -> Composition:
        """Trade the common factor d = gcd(parts) > 1 for a d-fold repeat.

        Divides every part by d and concatenates the quotient word d
        times, preserving the total while making the parts coprime. Only
        defined when d > 1; a word whose parts are already coprime is
        rejected, since there is nothing to rescale.
        """
        d = self.gcd()
        if d == 1:
            raise ValueError(f"{self} has coprime parts; rescale is undefined")
        return Composition(tuple(p // d for p in self.parts) * d)

    def compact(self) -> str:
        """Digit-juxtaposed display form, e.g. "161"; needs single-digit parts."""
        if any(p > 9 for p in self.parts):
            raise ValueError(f"compact form needs single-digit parts: {self}")
        return "".join(str(p) for p in self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def parse_composition(text: str) -> Composition:
    """Parse "2,1,2" (canonical comma form) or a comma-less numeral.

    A comma-less numeral is read one part per digit ("212" is 2,1,2 and
    "14" is 1,4, the juxtaposition idiom), unless some digit is 0, in
    which case the digit reading would be invalid and the numeral is
    taken as a single part ("10" is the one-part word 10). A lone
    multi-digit part with all digits nonzero therefore has no comma-less
    spelling; its str() form reads back as the digit word.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty composition literal")
    if "," in s:
        try:
            parts = tuple(int(tok) for tok in s.split(","))
        except ValueError:
            raise ValueError(f"bad composition literal: {text!r}") from None
    elif s.isdigit():
        if len(s) > 1 and "0" not in s:
            parts = tuple(int(ch) for ch in s)
        else:
            parts = (int(s),)
    else:
        raise ValueError(f"bad composition literal: {text!r}")
    return Composition(parts)
