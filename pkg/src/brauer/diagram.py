"""
Brauer monoid elements as perfect matchings on 2n points.

An element of the rank-n Brauer monoid is a partition of the 2n points
{1..n} u {1'..n'} into two-element blocks.  A block inside {1..n} is a
*left bracket*, a block inside {1'..n'} a *right bracket*, and a mixed
block a *line*.  Internally a diagram stores a flat partner array over
indices 0..2n-1 (unprimed i at index i-1, primed i' at index n+i-1), so
chain composition runs in O(n).

At the API boundary points are signed integers: i > 0 means the unprimed
point i, and -i means the primed point i'.  The text format writes primes
with an apostrophe, e.g. ``n=3;{1,3}{2,3'}{1',2'}``.

Products are computed by gluing the primed pins of the left factor to the
unprimed pins of the right factor and tracing the maximal chains; closed
loops formed in the middle are discarded (their count is available from
:func:`multiply_with_loops`).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

__all__ = [
    "DomainError",
    "GreenRelation",
    "BrauerDiagram",
    "make_diagram",
    "identity",
    "atom",
    "atoms",
    "multiply",
    "multiply_with_loops",
    "corank",
    "green_related",
    "from_permutation",
    "enumerate_all",
    "random_diagram",
    "parse_diagram",
    "ENUMERATION_LIMIT",
]

ENUMERATION_LIMIT = 8


class DomainError(ValueError):
    """Invalid input or violated precondition in a monoid operation."""


class GreenRelation(str, Enum):
    R = "R"
    L = "L"
    H = "H"
    D = "D"  # D and J coincide in the Brauer monoid


@dataclass(frozen=True)
class BrauerDiagram:
    """A fixed-point-free perfect matching of {1..n} u {1'..n'}.

    ``partner[p]`` is the index matched with index p, where unprimed i
    sits at index i-1 and primed i' at index n+i-1.  Instances are
    immutable and hashable; construct unchecked only from code that
    guarantees a valid matching, otherwise go through
    :func:`make_diagram` or :func:`parse_diagram`.
    """

    partner: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    def blocks(self) -> tuple[tuple[int, int], ...]:
        """Canonical block list with signed points (primed = negative)."""
        n = self.n
        out = []
        for p, q in self._index_blocks():
            out.append((p + 1 if p < n else -(p - n + 1), q + 1 if q < n else -(q - n + 1)))
        return tuple(out)

    def _index_blocks(self) -> list[tuple[int, int]]:
        # pairs of internal indices, smaller first, sorted lexicographically
        return sorted(
            (p, q) for p, q in enumerate(self.partner) if p < q
        )

    def left_brackets(self) -> frozenset[frozenset[int]]:
        """Blocks lying entirely in {1..n}, as sets of unprimed labels."""
        n = self.n
        return frozenset(
            frozenset((p + 1, q + 1))
            for p, q in enumerate(self.partner)
            if p < q < n
        )

    def right_brackets(self) -> frozenset[frozenset[int]]:
        """Blocks lying entirely in {1'..n'}, as sets of unprimed labels."""
        n = self.n
        return frozenset(
            frozenset((p - n + 1, q - n + 1))
            for p, q in enumerate(self.partner)
            if n <= p < q
        )

    def lines(self) -> dict[int, int]:
        """Mixed blocks as a map: unprimed label -> primed label."""
        n = self.n
        return {
            p + 1: q - n + 1
            for p, q in enumerate(self.partner)
            if p < n <= q
        }

    @property
    def corank(self) -> int:
        return 2 * len(self.left_brackets())

    def is_invertible(self) -> bool:
        return self.corank == 0

    def transpose(self) -> BrauerDiagram:
        """Swap primed and unprimed points (the diagram-side anti-involution)."""
        n = self.n
        flip = lambda p: p + n if p < n else p - n
        new = [0] * (2 * n)
        for p, q in enumerate(self.partner):
            new[flip(p)] = flip(q)
        return BrauerDiagram(tuple(new))

    def __mul__(self, other: BrauerDiagram) -> BrauerDiagram:
        if not isinstance(other, BrauerDiagram):
            return NotImplemented
        return multiply(self, other)

    def to_text(self) -> str:
        """Bit-exact canonical text form, e.g. ``n=3;{1,3}{2,3'}{1',2'}``."""
        n = self.n

        def point(p: int) -> str:
            return str(p + 1) if p < n else f"{p - n + 1}'"

        body = "".join("{%s,%s}" % (point(p), point(q)) for p, q in self._index_blocks())
        return f"n={n};{body}"

    def to_json_obj(self) -> dict:
        """JSON form: primed points as negative integers."""
        return {"n": self.n, "blocks": [list(b) for b in self.blocks()]}

    def __repr__(self) -> str:
        return f"BrauerDiagram({self.to_text()!r})"


def _signed_to_index(point: int, n: int) -> int:
    if point == 0 or abs(point) > n:
        raise DomainError(f"point {point} out of range for n={n}")
    return point - 1 if point > 0 else n - point - 1


def make_diagram(n: int, blocks: Iterable[Sequence[int]]) -> BrauerDiagram:
    """Validate and build a diagram from signed-point blocks.

    Rejects anything that is not a partition of the 2n points into
    two-element blocks: repeated or missing points, wrong block count,
    points out of range, or singleton blocks.
    """
    if n < 1:
        raise DomainError("rank n must be a positive integer")
    blocks = list(blocks)
    if len(blocks) != n:
        raise DomainError(f"expected {n} blocks, got {len(blocks)}")
    partner = [-1] * (2 * n)
    for block in blocks:
        if len(block) != 2:
            raise DomainError(f"block {tuple(block)} does not have two points")
        p, q = (_signed_to_index(x, n) for x in block)
        if p == q:
            raise DomainError(f"block {tuple(block)} repeats a point")
        for x in (p, q):
            if partner[x] != -1:
                raise DomainError(f"point {block[0] if x == p else block[1]} appears twice")
        partner[p], partner[q] = q, p
    # n blocks of 2 distinct points with no reuse cover all 2n points
    return BrauerDiagram(tuple(partner))


def identity(n: int) -> BrauerDiagram:
    """The unit element: every block is {k,k'}."""
    if n < 1:
        raise DomainError("rank n must be a positive integer")
    return BrauerDiagram(tuple(range(n, 2 * n)) + tuple(range(n)))


def atom(n: int, i: int, j: int) -> BrauerDiagram:
    """The idempotent with blocks {i,j}, {i',j'} and identity lines elsewhere."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"atom indices must lie in 1..{n}")
    if i == j:
        raise DomainError("atom indices must be distinct")
    partner = list(range(n, 2 * n)) + list(range(n))
    i0, j0 = i - 1, j - 1
    partner[i0], partner[j0] = j0, i0
    partner[n + i0], partner[n + j0] = n + j0, n + i0
    return BrauerDiagram(tuple(partner))


def atoms(n: int) -> list[BrauerDiagram]:
    """All C(n,2) atoms of rank n, ordered by (i, j)."""
    return [atom(n, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _compose(n: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Chain composition on raw partner arrays; returns (partners, loop count)."""
    size = 2 * n
    out = [-1] * size
    mid_seen = bytearray(n)
    for start in range(n):
        if out[start] != -1:
            continue
        p = a[start]
        while p >= n:
            mid_seen[p - n] = 1
            q = b[p - n]
            if q >= n:
                break
            mid_seen[q] = 1
            p = a[q + n]
        else:
            out[start], out[p] = p, start
            continue
        out[start], out[q] = q, start
    for start in range(n, size):
        if out[start] != -1:
            continue
        q = b[start]
        while q < n:
            mid_seen[q] = 1
            p = a[q + n]
            if p < n:
                break
            mid_seen[p - n] = 1
            q = b[p - n]
        else:
            out[start], out[q] = q, start
            continue
        out[start], out[p] = p, start
    loops = 0
    for m in range(n):
        if mid_seen[m]:
            continue
        loops += 1
        cur = m
        while not mid_seen[cur]:
            mid_seen[cur] = 1
            nxt = a[cur + n] - n
            mid_seen[nxt] = 1
            cur = b[nxt]
    return tuple(out), loops


def multiply_with_loops(a: BrauerDiagram, b: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Product together with the number of closed middle loops discarded."""
    if a.n != b.n:
        raise DomainError(f"rank mismatch: {a.n} != {b.n}")
    partner, loops = _compose(a.n, a.partner, b.partner)
    return BrauerDiagram(partner), loops


def multiply(a: BrauerDiagram, b: BrauerDiagram) -> BrauerDiagram:
    """Chain composition, a's chip on the left."""
    return multiply_with_loops(a, b)[0]


def corank(a: BrauerDiagram) -> int:
    """Twice the number of left brackets."""
    return a.corank


def green_related(a: BrauerDiagram, b: BrauerDiagram, rel: GreenRelation | str) -> bool:
    """Decide Green's relations via bracket sets.

    R: same left brackets; L: same right brackets; H: both;
    D (= J): equal corank.
    """
    if a.n != b.n:
        raise DomainError(f"rank mismatch: {a.n} != {b.n}")
    rel = GreenRelation(rel)
    if rel is GreenRelation.R:
        return a.left_brackets() == b.left_brackets()
    if rel is GreenRelation.L:
        return a.right_brackets() == b.right_brackets()
    if rel is GreenRelation.H:
        return (
            a.left_brackets() == b.left_brackets()
            and a.right_brackets() == b.right_brackets()
        )
    return a.corank == b.corank


def from_permutation(perm: Sequence[int]) -> BrauerDiagram:
    """Corank-0 diagram with lines {k, perm[k-1]'}.

    ``perm`` lists images 1-based, so ``perm[k-1]`` is the image of k.
    The embedding is multiplicative for left-to-right composition:
    ``from_permutation(p) * from_permutation(q) == from_permutation(t)``
    with ``t[k-1] = q[p[k-1]-1]``.
    """
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise DomainError("not a bijection of 1..n")
    partner = [0] * (2 * n)
    for k, image in enumerate(perm):
        partner[k] = n + image - 1
        partner[n + image - 1] = k
    return BrauerDiagram(tuple(partner))


def enumerate_all(n: int, limit: int | None = ENUMERATION_LIMIT) -> Iterator[BrauerDiagram]:
    """Yield every rank-n diagram exactly once ((2n-1)!! of them).

    Order: repeatedly match the smallest unmatched point with each larger
    point in increasing order.  The limit guards against accidental
    double-factorial blowups; pass ``limit=None`` to override.
    """
    if n < 1:
        raise DomainError("rank n must be a positive integer")
    if limit is not None and n > limit:
        raise DomainError(f"n={n} exceeds enumeration limit {limit}")
    partner = [-1] * (2 * n)

    def rec(first: int) -> Iterator[BrauerDiagram]:
        while first < 2 * n and partner[first] != -1:
            first += 1
        if first == 2 * n:
            yield BrauerDiagram(tuple(partner))
            return
        for other in range(first + 1, 2 * n):
            if partner[other] != -1:
                continue
            partner[first], partner[other] = other, first
            yield from rec(first + 1)
            partner[first], partner[other] = -1, -1

    return rec(0)


def count_all(n: int) -> int:
    """(2n-1)!!, the number of rank-n diagrams."""
    return math.prod(range(1, 2 * n, 2))


def random_diagram(n: int, rng) -> BrauerDiagram:
    """Uniformly random diagram (rng is a ``random.Random``)."""
    points = list(range(2 * n))
    rng.shuffle(points)
    partner = [0] * (2 * n)
    for t in range(0, 2 * n, 2):
        p, q = points[t], points[t + 1]
        partner[p], partner[q] = q, p
    return BrauerDiagram(tuple(partner))


_BLOCK_RE = re.compile(r"\{\s*(\d+)(')?\s*,\s*(\d+)(')?\s*\}")


def parse_diagram(text: str) -> BrauerDiagram:
    """Parse the text format; blocks may appear in any order."""
    text = text.strip()
    m = re.match(r"n\s*=\s*(\d+)\s*;", text)
    if not m:
        raise DomainError(f"diagram must start with 'n=<rank>;': {text!r}")
    n = int(m.group(1))
    body = text[m.end():]
    blocks = []
    pos = 0
    for bm in _BLOCK_RE.finditer(body):
        if body[pos:bm.start()].strip():
            raise DomainError(f"unexpected text in diagram: {body[pos:bm.start()]!r}")
        x = int(bm.group(1)) * (-1 if bm.group(2) else 1)
        y = int(bm.group(3)) * (-1 if bm.group(4) else 1)
        blocks.append((x, y))
        pos = bm.end()
    if body[pos:].strip():
        raise DomainError(f"unexpected text in diagram: {body[pos:]!r}")
    return make_diagram(n, blocks)


def diagram_from_json_obj(obj: dict) -> BrauerDiagram:
    """Parse the JSON form {"n": ..., "blocks": [[x, y], ...]}."""
    try:
        n, blocks = obj["n"], obj["blocks"]
    except (TypeError, KeyError) as exc:
        raise DomainError(f"diagram object needs 'n' and 'blocks': {obj!r}") from exc
    return make_diagram(n, blocks)
