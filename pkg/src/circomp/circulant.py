"""Connection sets over Z_n and the circulant (di)graphs they generate.

A connection set is a subset of Z_n containing 0, kept in sorted
canonical form. It generates a digraph on vertices 0..n-1 with an arc
i -> j whenever j - i lies in the set (mod n, i != j); when the set is
closed under negation the arcs pair up and the structure is an
undirected circulant graph. Connectivity is arithmetic in the set (the
set generates Z_n iff its gcd together with n is 1), but an explicit
traversal is kept alongside the gcd criterion so either can check the
other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class ConnectionSet:
    """Strictly increasing subset of Z_n whose smallest element is 0."""

    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        n, elems = self.modulus, self.elements
        if n < 1:
            raise ValueError(f"modulus must be >= 1, got {n}")
        if not elems or elems[0] != 0:
            raise ValueError(f"connection set must contain 0: {elems}")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ValueError(f"elements must be strictly increasing: {elems}")
        if elems[-1] >= n:
            raise ValueError(f"elements must lie in [0, {n}): {elems}")

    @classmethod
    def from_members(cls, modulus: int, members: Iterable[int]) -> ConnectionSet:
        """Canonicalize arbitrary members: reduce mod n, deduplicate, sort.

        The reduced set must contain 0; nothing is inserted silently.
        """
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        reduced = sorted({m % modulus for m in members})
        if not reduced or reduced[0] != 0:
            raise ValueError(f"connection set must contain 0 (mod {modulus}): {members!r}")
        return cls(modulus, tuple(reduced))

    @property
    def size(self) -> int:
        return len(self.elements)

    def inverse(self) -> ConnectionSet:
        """The negated set {n - a mod n}; an involution that fixes 0."""
        n = self.modulus
        return ConnectionSet(n, tuple(sorted((n - a) % n for a in self.elements)))

    def is_symmetric(self) -> bool:
        """True iff the set equals its negation, i.e. it defines a graph."""
        return self.elements == self.inverse().elements

    def gcd(self) -> int:
        """gcd of the elements taken together with the modulus; divides n.

        Adjoining n is what makes the value detect generation of Z_n:
        {0, 3} in Z_8 has element gcd 3 but still generates the whole
        group, and gcd(3, 8) = 1 reports exactly that.
        """
        return math.gcd(self.modulus, *self.elements)

    def __str__(self) -> str:
        return f"{self.modulus}: " + ",".join(str(a) for a in self.elements)


def parse_connection_set(text: str) -> ConnectionSet:
    """Parse the "n: a1,a2,..." literal, e.g. "8: 0,1,7"."""
    head, sep, tail = text.partition(":")
    if not sep or not tail.strip():
        raise ValueError(f"bad connection-set literal {text!r}; expected 'n: a1,a2,...'")
    try:
        modulus = int(head)
        members = [int(tok) for tok in tail.split(",")]
    except ValueError:
        raise ValueError(f"bad connection-set literal: {text!r}") from None
    return ConnectionSet.from_members(modulus, members)


@dataclass(frozen=True)
class CirculantDigraph:
    """(Di)graph on Z_n with an arc i -> i+s for every nonzero step s.

    Adjacency is answered arithmetically; arc and edge sequences are
    materialized only on demand. ``directed=False`` marks the undirected
    view produced by :func:`build_graph`.
    """

    connection: ConnectionSet
    directed: bool = True

    @property
    def order(self) -> int:
        return self.connection.modulus

    @property
    def steps(self) -> tuple[int, ...]:
        """Nonzero connection elements; each contributes one arc per vertex."""
        return self.connection.elements[1:]

    def has_arc(self, i: int, j: int) -> bool:
        n = self.order
        return i % n != j % n and (j - i) % n in self.steps

    def out_neighbors(self, i: int) -> tuple[int, ...]:
        n = self.order
        return tuple(sorted((i + s) % n for s in self.steps))

    def arcs(self) -> Iterator[tuple[int, int]]:
        """Every arc, sorted by (source, target)."""
        for i in range(self.order):
            for j in self.out_neighbors(i):
                yield (i, j)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Unordered adjacent pairs, each once, sorted by (low, high) endpoint."""
        seen = set()
        for i, j in self.arcs():
            e = (i, j) if i < j else (j, i)
            if e not in seen:
                seen.add(e)
                yield e

    def is_connected(self) -> bool:
        """Traversal oracle: every vertex reachable from 0, arcs followed both ways."""
        return self._reachable_from_zero(both_ways=True)

    def is_strongly_connected(self) -> bool:
        """Every vertex reachable from 0 and 0 reachable from every vertex."""
        return self._reachable_from_zero(invert=False) and self._reachable_from_zero(invert=True)

    def _reachable_from_zero(self, both_ways: bool = False, invert: bool = False) -> bool:
        n = self.order
        if n == 1:
            return True
        steps = self.steps
        if not steps:
            return False
        seen = bytearray(n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            i = stack.pop()
            for s in steps:
                targets = ((i + s) % n, (i - s) % n) if both_ways else (
                    ((i - s) % n,) if invert else ((i + s) % n,)
                )
                for j in targets:
                    if not seen[j]:
                        seen[j] = 1
                        count += 1
                        stack.append(j)
        return count == n


def build_digraph(connection: ConnectionSet) -> CirculantDigraph:
    """The circulant digraph generated by the connection set."""
    return CirculantDigraph(connection, directed=True)


def build_graph(connection: ConnectionSet) -> CirculantDigraph:
    """The undirected circulant graph; requires a symmetric connection set."""
    if not connection.is_symmetric():
        raise ValueError(
            f"{connection} is not closed under negation; it defines a digraph only"
        )
    return CirculantDigraph(connection, directed=False)


def is_connected_by_gcd(connection: ConnectionSet) -> bool:
    """Connectivity without traversal: the set generates Z_n iff its gcd is 1."""
    return connection.gcd() == 1
