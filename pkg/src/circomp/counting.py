"""Divisor and Moebius machinery, closed-form counts, and enumerators.

All counts are exact Python integers, so they stay correct far past the
64-bit range (2^(n-1) alone outgrows machine words at n = 65). The
streaming enumerators generate every member of each counted family in a
fixed bitmask order, giving the closed forms an independent exhaustive
cross-check at small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .compositions import Composition
from .circulant import ConnectionSet


def divisors(n: int) -> list[int]:
    """All divisors of n >= 1 in ascending order, including 1 and n."""
    _require_positive(n)
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def moebius(m: int) -> int:
    """0 when a squared prime divides m, else (-1)^(number of prime factors)."""
    _require_positive(m)
    sign = 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            sign = -sign
        p += 1
    return -sign if m > 1 else sign


def count_compositions(n: int) -> int:
    """2^(n-1) ordered words of positive parts summing to n."""
    _require_positive(n)
    return 1 << (n - 1)


def count_compositions_with_parts(n: int, k: int) -> int:
    """binom(n-1, k-1) compositions of n with exactly k parts."""
    _require_positive(n)
    if not 1 <= k <= n:
        raise ValueError(f"part count must be in [1, {n}], got {k}")
    return math.comb(n - 1, k - 1)


def count_prime_compositions(n: int) -> int:
    """Compositions of n with coprime parts: sum of mu(n/d) 2^(d-1) over d | n.

    Equals the number of connected circulant digraphs of order n.
    """
    _require_positive(n)
    return sum(moebius(n // d) << (d - 1) for d in divisors(n))


def count_disconnected_compositions(n: int) -> int:
    """Compositions of n whose parts share a factor: the complement of prime.

    Equals the sum of count_prime_compositions over the proper divisors
    of n, and the number of disconnected circulant digraphs of order n.
    """
    _require_positive(n)
    return count_compositions(n) - count_prime_compositions(n)


def count_palindromes(n: int) -> int:
    """2^floor(n/2) palindromic compositions of n >= 2; 1 for n = 1.

    The n = 1 value is a convention (the one-part word 1 is its own
    reversal); the closed form is stated for n >= 2.
    """
    _require_positive(n)
    return 1 if n == 1 else 1 << (n // 2)


def count_aperiodic_palindromes(n: int) -> int:
    """Aperiodic palindromes of n: sum of mu(n/d) (2^floor(d/2) - 1) over d | n.

    Equals the number of connected circulant graphs of order n; defined
    for n >= 2 only.
    """
    if n < 2:
        raise ValueError(f"aperiodic palindromes are counted for n >= 2, got {n}")
    return sum(moebius(n // d) * ((1 << (d // 2)) - 1) for d in divisors(n))


FAMILIES = (
    "compositions",
    "prime_compositions",
    "palindromes",
    "aperiodic_palindromes",
    "connection_sets",
    "symmetric_connection_sets",
)

_NEEDS_ORDER_TWO = ("palindromes", "aperiodic_palindromes", "symmetric_connection_sets")


def iter_family(n: int, family: str) -> Iterator[Composition] | Iterator[ConnectionSet]:
    """Yield every member of the named family at order n exactly once.

    Members arrive in ascending bitmask order: mask m encodes the
    connection set {0} | {i+1 : bit i of m set}, and composition
    families see the gap word of that set. The palindromic families
    follow the convention that they are defined for n >= 2 only.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from: {', '.join(FAMILIES)}")
    _require_positive(n)
    if n == 1 and family in _NEEDS_ORDER_TWO:
        raise ValueError(f"family {family!r} is defined for n >= 2 only")
    masks = range(1 << (n - 1))
    if family == "compositions":
        return (Composition(_gaps_of_mask(n, m)) for m in masks)
    if family == "prime_compositions":
        words = (Composition(_gaps_of_mask(n, m)) for m in masks)
        return (c for c in words if c.gcd() == 1)
    if family == "palindromes":
        return _iter_palindromes(n)
    if family == "aperiodic_palindromes":
        return (c for c in _iter_palindromes(n) if c.is_aperiodic())
    if family == "connection_sets":
        return (_set_of_mask(n, m) for m in masks)
    sets = (_set_of_mask(n, m) for m in masks)
    return (s for s in sets if s.is_symmetric())


def _iter_palindromes(n: int) -> Iterator[Composition]:
    """Palindromic gap words in ascending mask order.

    Scans every mask but skips those that are not fixed by bit reversal,
    since only mirror-symmetric sets can produce palindromic gap words.
    The skip is a pure accelerator: a wrong skip would shorten the stream
    and trip the count cross-checks, and every survivor still passes
    through the real palindrome predicate.
    """
    width = n - 1
    for m in range(1 << width):
        if m != _reverse_bits(m, width):
            continue
        c = Composition(_gaps_of_mask(n, m))
        if c.is_palindrome():
            yield c


def _gaps_of_mask(n: int, mask: int) -> tuple[int, ...]:
    """Cyclic gap word of the set {0} | {i+1 : bit i of mask set}."""
    parts = []
    prev = 0
    while mask:
        low = mask & -mask
        pos = low.bit_length()
        parts.append(pos - prev)
        prev = pos
        mask ^= low
    parts.append(n - prev)
    return tuple(parts)


def _set_of_mask(n: int, mask: int) -> ConnectionSet:
    """The connection set {0} | {i+1 : bit i of mask set} over Z_n."""
    elems = [0]
    pos = 1
    while mask:
        if mask & 1:
            elems.append(pos)
        mask >>= 1
        pos += 1
    return ConnectionSet(n, tuple(elems))


_REV8 = tuple(int(f"{b:08b}"[::-1], 2) for b in range(256))


def _reverse_bits(mask: int, width: int) -> int:
    """The mask read back to front as a width-bit string."""
    rev = 0
    left = width
    while left > 0:
        rev = (rev << 8) | _REV8[mask & 0xFF]
        mask >>= 8
        left -= 8
    return rev >> (-width % 8)


@dataclass(frozen=True)
class CountRow:
    """The five family sizes at one order n."""

    n: int
    compositions: int
    prime_compositions: int
    disconnected: int
    palindromes: int
    aperiodic_palindromes: int


def count_row(n: int) -> CountRow:
    """All five counts at order n.

    The n = 1 palindromic entries are both 1 by the single-word
    convention; the raw count_aperiodic_palindromes still rejects n < 2.
    """
    return CountRow(
        n=n,
        compositions=count_compositions(n),
        prime_compositions=count_prime_compositions(n),
        disconnected=count_disconnected_compositions(n),
        palindromes=count_palindromes(n),
        aperiodic_palindromes=1 if n == 1 else count_aperiodic_palindromes(n),
    )


def count_table(max_n: int) -> list[CountRow]:
    """Rows for n = 1..max_n, every value computed from the closed forms."""
    _require_positive(max_n)
    return [count_row(n) for n in range(1, max_n + 1)]


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
