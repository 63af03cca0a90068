"""
Connected sequences of 2-subsets and the intersection graph on them.

A connected sequence is a nonempty run of 2-subsets of {1..n} in which
consecutive subsets intersect.  Sequences are identified when one turns
into the other by the local moves

    (I)    {i,j},{i,j}        <->  {i,j}
    (II)   {i,j},{j,k},{k,l}  <->  {i,j},{i,l},{k,l}   (i != l)
    (III)  {i,j},{j,k},{k,i}  <->  {i,j},{k,i}
    (IV)   {i,j},{j,k},{i,j}  <->  {i,j}

Equivalence classes biject with corank-2 diagrams (map a sequence to the
product of the matching atoms), so equivalence is decided semantically
through that canonical diagram; the moves themselves are kept only as
single-step rewrites for fuzz validation, with no confluence claim.
Interpreting subsets as vertices of the intersection graph, sequences
are walks, the class count is n(n-1)n!/4, and the classes of walks
between two fixed vertices number (n-2)!.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from brauer.diagram import BrauerDiagram, DomainError, enumerate_all
from brauer.presentation import Quark, Word, phi

__all__ = [
    "ConnectedSequence",
    "GammaGraph",
    "seq_canonical",
    "seq_equivalent",
    "count_classes",
    "expected_class_count",
    "count_paths",
    "corank2_census",
    "gamma_graph",
    "find_sequence_rewrites",
    "parse_sequence",
    "sequence_to_text",
]

COUNT_LIMIT = 7


@dataclass(frozen=True)
class ConnectedSequence:
    """A nonempty sequence of 2-subsets with consecutive intersections."""

    n: int
    items: tuple[Quark, ...]

    def __post_init__(self):
        if not self.items:
            raise DomainError("a sequence must contain at least one pair")
        object.__setattr__(self, "items", tuple(self.items))
        for q in self.items:
            if q.j > self.n:
                raise DomainError(f"pair {q} exceeds rank n={self.n}")
        for a, b in zip(self.items, self.items[1:]):
            if not a.meets(b):
                raise DomainError(f"consecutive pairs {a} and {b} are disjoint")

    def __len__(self) -> int:
        return len(self.items)


def sequence(n: int, pairs: Iterable[Sequence[int]]) -> ConnectedSequence:
    return ConnectedSequence(n, tuple(Quark(i, j) for i, j in pairs))


def seq_canonical(s: ConnectedSequence) -> BrauerDiagram:
    """The canonical form of a class: the product of the matching atoms.

    Connectedness pins the corank at exactly 2.
    """
    image = phi(Word(s.n, s.items))
    assert image.corank == 2, "connected sequences always land in corank 2"
    return image


def seq_equivalent(a: ConnectedSequence, b: ConnectedSequence) -> bool:
    """Equivalence under moves (I)-(IV), decided via canonical diagrams."""
    if a.n != b.n:
        raise DomainError(f"rank mismatch: {a.n} != {b.n}")
    return seq_canonical(a) == seq_canonical(b)


def expected_class_count(n: int) -> int:
    """n(n-1)n!/4."""
    return n * (n - 1) * math.factorial(n) // 4


def count_classes(n: int, limit: int | None = COUNT_LIMIT) -> int:
    """Number of equivalence classes, counted by enumerating the
    corank-2 diagrams they biject with."""
    if n < 2:
        raise DomainError("classes need n >= 2")
    return sum(1 for d in enumerate_all(n, limit=limit) if d.corank == 2)


def count_paths(
    n: int,
    frm: Sequence[int],
    to: Sequence[int],
    limit: int | None = COUNT_LIMIT,
) -> int:
    """Number of classes of sequences with the given first and last pair,
    counted as corank-2 diagrams with those brackets; always (n-2)!."""
    if n < 2:
        raise DomainError("paths need n >= 2")
    frm_q, to_q = Quark(*frm), Quark(*to)
    if frm_q.j > n or to_q.j > n:
        raise DomainError("endpoint pairs exceed the rank")
    left = frozenset((frm_q.i, frm_q.j))
    right = frozenset((to_q.i, to_q.j))
    return sum(
        1
        for d in enumerate_all(n, limit=limit)
        if d.corank == 2
        and left in d.left_brackets()
        and right in d.right_brackets()
    )


def corank2_census(n: int, limit: int | None = COUNT_LIMIT) -> dict:
    """Counts of corank-2 diagrams keyed by (left bracket, right bracket)."""
    census: dict = {}
    for d in enumerate_all(n, limit=limit):
        if d.corank != 2:
            continue
        (lb,) = d.left_brackets()
        (rb,) = d.right_brackets()
        key = (tuple(sorted(lb)), tuple(sorted(rb)))
        census[key] = census.get(key, 0) + 1
    return census


# --- the intersection graph -------------------------------------------------

def _colex_rank(q: Quark) -> int:
    return (q.j - 1) * (q.j - 2) // 2 + (q.i - 1)


@dataclass(frozen=True)
class GammaGraph:
    """Graph on the 2-subsets of {1..n}; edges join intersecting subsets.

    Vertices sit in colex order, so a pair is found in O(1) from its
    colex rank.
    """

    n: int
    vertices: tuple[Quark, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def index_of(self, pair: Quark) -> int:
        if pair.j > self.n:
            raise DomainError(f"pair {pair} exceeds rank n={self.n}")
        return _colex_rank(pair)

    def neighbors(self, pair: Quark) -> tuple[Quark, ...]:
        return tuple(self.vertices[i] for i in self.adjacency[self.index_of(pair)])

    def degree(self, pair: Quark) -> int:
        return len(self.adjacency[self.index_of(pair)])

    def edges(self) -> list[tuple[Quark, Quark]]:
        return [
            (self.vertices[i], self.vertices[j])
            for i, row in enumerate(self.adjacency)
            for j in row
            if i < j
        ]

    def walk_to_sequence(self, pairs: Sequence[Quark]) -> ConnectedSequence:
        """Interpret a walk (repeated vertices allowed) as a sequence."""
        for q in pairs:
            self.index_of(q)
        return ConnectedSequence(self.n, tuple(pairs))

    def sequence_to_walk(self, s: ConnectedSequence) -> list[Quark]:
        if s.n != self.n:
            raise DomainError(f"rank mismatch: {s.n} != {self.n}")
        return list(s.items)

    def to_dot(self) -> str:
        lines = [f"graph gamma{self.n} {{"]
        for q in self.vertices:
            lines.append(f'  "{q.i},{q.j}";')
        for a, b in self.edges():
            lines.append(f'  "{a.i},{a.j}" -- "{b.i},{b.j}";')
        lines.append("}")
        return "\n".join(lines)


def gamma_graph(n: int) -> GammaGraph:
    if n < 2:
        raise DomainError("the pair graph needs n >= 2")
    vertices = tuple(
        Quark(i, j) for j in range(2, n + 1) for i in range(1, j)
    )
    adjacency = tuple(
        tuple(k for k, other in enumerate(vertices) if other != q and q.meets(other))
        for q in vertices
    )
    return GammaGraph(n, vertices, adjacency)


# --- single-step rewrites for fuzz validation -------------------------------

def find_sequence_rewrites(s: ConnectedSequence) -> list[tuple[str, int, ConnectedSequence]]:
    """All one-step applications of moves (I)-(IV) on s, both directions.

    Returned as (move label, position, rewritten sequence); expanding
    directions with a free index (reverse (IV)) emit one entry per
    admissible value.
    """
    items = s.items
    out = []

    def emit(label, pos, replacement, width):
        spliced = items[:pos] + tuple(replacement) + items[pos + width:]
        out.append((label, pos, ConnectedSequence(s.n, spliced)))

    for pos, a in enumerate(items):
        # (I) reverse: duplicate a pair
        emit("I", pos, (a, a), 1)
        # (IV) reverse: insert a detour {j,k} after a, for each j in a, fresh k
        for j in (a.i, a.j):
            for k in range(1, s.n + 1):
                if k != j and k != a.other(j):
                    emit("IV", pos, (a, Quark(j, k), a), 1)
    for pos, (a, b) in enumerate(zip(items, items[1:])):
        if a == b:
            emit("I", pos, (a,), 2)
        # (III) reverse: {i,j},{k,i} -> {i,j},{j,k},{k,i}
        for i in (a.i, a.j):
            if i in (b.i, b.j):
                j, k = a.other(i), b.other(i)
                if j != k:
                    emit("III", pos, (a, Quark(j, k), b), 2)
    for pos in range(len(items) - 2):
        a, b, c = items[pos:pos + 3]
        if a == c and a.meets(b):
            emit("IV", pos, (a,), 3)
        for j in (a.i, a.j):
            if j not in (b.i, b.j):
                continue
            i, k = a.other(j), b.other(j)
            # (II) forward: need c = {k,l} with l != i
            if k in (c.i, c.j):
                l = c.other(k)
                if l != i:
                    emit("II", pos, (a, Quark(i, l), c), 3)
            # (III) forward: c = {k,i}
            if {c.i, c.j} == {k, i}:
                emit("III", pos, (a, c), 3)
        # (II) reverse: {i,j},{i,l},{k,l} -> {i,j},{j,k},{k,l}
        for i in (a.i, a.j):
            if i not in (b.i, b.j):
                continue
            j, l = a.other(i), b.other(i)
            if l in (c.i, c.j) and l != i:
                k = c.other(l)
                if k != j and i != l:
                    emit("II", pos, (a, Quark(j, k), c), 3)
    return out


# --- text format -------------------------------------------------------------

def parse_sequence(n: int, text: str) -> ConnectedSequence:
    """Parse the bare pair-list form ``(1,2)(2,3)(3,4)``."""
    from brauer.presentation import parse_pair_list

    return sequence(n, parse_pair_list(text))


def sequence_to_text(s: ConnectedSequence) -> str:
    return "".join(f"({q.i},{q.j})" for q in s.items)
