"""
Geodesic lengths over the atom generating set.

For a singular diagram w, ls(w) is the least k with w a product of k
atoms.  Exact values come from a multi-source breadth-first search that
starts at every atom and extends by right multiplication; the maximum
over rank n is floor(3n/2) - 2.  Elements whose left and right bracket
are both {1,2} carry a permutation of {3..n}; its cycle structure gives
a closed form ls = (n-2) - s + c + 1 (s trivial, c nontrivial cycles)
and a witnessing word, the cyclic decomposition.

Length is undefined on invertible elements; tables simply exclude them.
"""

from __future__ import annotations

import csv
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from brauer.diagram import (
    BrauerDiagram,
    DomainError,
    atoms,
    parse_diagram,
)
from brauer.diagram import _compose  # shared hot path
from brauer.presentation import Quark, Word

__all__ = [
    "BFS_LIMIT",
    "CACHE_FORMAT_VERSION",
    "GeodesicTable",
    "bfs_lengths",
    "max_length",
    "expected_max_length",
    "CyclicDecomposition",
    "cyclic_decomposition",
    "ls_via_cycles",
    "load_or_compute_table",
]

BFS_LIMIT = 7
CACHE_FORMAT_VERSION = "1"


@dataclass
class GeodesicTable:
    """Exact geodesic distances for every singular diagram of rank n."""

    n: int
    dist: dict[BrauerDiagram, int]

    def __getitem__(self, d: BrauerDiagram) -> int:
        if d.n != self.n:
            raise DomainError(f"rank mismatch: {d.n} != {self.n}")
        if d.corank == 0:
            raise DomainError("length is undefined on invertible elements")
        return self.dist[d]

    def max_entry(self) -> tuple[int, BrauerDiagram]:
        """Maximal distance and its lexicographically smallest witness."""
        best = max(self.dist.values())
        witness = min(
            (d for d, v in self.dist.items() if v == best), key=BrauerDiagram.to_text
        )
        return best, witness

    def save(self, path: str | Path) -> None:
        """Write a sorted CSV cache with format-version and rank fields."""
        rows = sorted((d.to_text(), v) for d, v in self.dist.items())
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["format", CACHE_FORMAT_VERSION])
            writer.writerow(["n", str(self.n)])
            writer.writerow(["diagram", "distance"])
            writer.writerows(rows)

    @classmethod
    def load(cls, path: str | Path, n: int) -> GeodesicTable:
        """Read a cache file; reject stale format versions or wrong rank."""
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            try:
                fmt = next(reader)
                rank = next(reader)
                header = next(reader)
            except StopIteration as exc:
                raise DomainError(f"truncated cache file {path}") from exc
            if fmt != ["format", CACHE_FORMAT_VERSION]:
                raise DomainError(f"cache {path} has unsupported format {fmt}")
            if rank != ["n", str(n)] or header != ["diagram", "distance"]:
                raise DomainError(f"cache {path} does not match n={n}")
            dist = {parse_diagram(text): int(value) for text, value in reader}
        return cls(n, dist)


def _expand_chunk(n, chunk, gens, dist):
    out = []
    for p in chunk:
        for g in gens:
            q = _compose(n, p, g)[0]
            if q not in dist:
                out.append(q)
    return out


def bfs_lengths(
    n: int,
    limit: int | None = BFS_LIMIT,
    threads: int = 1,
    side: str = "right",
) -> GeodesicTable:
    """Multi-source BFS from the atoms; distances are exact ls values.

    Expansion multiplies on the right by default.  The left-handed walk
    gives identical distances (lengths are preserved by the reversal
    anti-involution) and exists for auditing that fact; production use
    is the right-handed walk.  With ``threads > 1`` the frontier is
    partitioned and merged per level, so distances are deterministic
    regardless of thread count.
    """
    if n < 2:
        raise DomainError("the singular part needs n >= 2")
    if limit is not None and n > limit:
        raise DomainError(f"n={n} exceeds BFS limit {limit}")
    if side not in ("right", "left"):
        raise DomainError(f"side must be 'right' or 'left', got {side!r}")
    gens = [a.partner for a in atoms(n)]
    dist: dict[tuple, int] = {g: 1 for g in gens}
    frontier = list(dist)
    level = 1
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while frontier:
            level += 1
            if side == "left":
                candidates = [
                    _compose(n, g, p)[0] for p in frontier for g in gens
                ]
            elif pool is None:
                candidates = _expand_chunk(n, frontier, gens, dist)
            else:
                step = max(1, len(frontier) // threads)
                chunks = [frontier[i:i + step] for i in range(0, len(frontier), step)]
                candidates = []
                for part in pool.map(
                    lambda c: _expand_chunk(n, c, gens, dist), chunks
                ):
                    candidates.extend(part)
            frontier = []
            for q in candidates:
                if q not in dist:
                    dist[q] = level
                    frontier.append(q)
    finally:
        if pool is not None:
            pool.shutdown()
    return GeodesicTable(n, {BrauerDiagram(p): v for p, v in dist.items()})


def expected_max_length(n: int) -> int:
    """floor(3n/2) - 2, the proven maximum of ls over rank n."""
    return 3 * n // 2 - 2


def max_length(
    n: int,
    table: GeodesicTable | None = None,
    limit: int | None = BFS_LIMIT,
    threads: int = 1,
) -> tuple[int, BrauerDiagram]:
    """Maximum geodesic length plus one witness attaining it."""
    if n < 2:
        raise DomainError("maximal length needs n >= 2")
    if table is None:
        table = bfs_lengths(n, limit=limit, threads=threads)
    return table.max_entry()


@dataclass(frozen=True)
class CyclicDecomposition:
    """Cycle data of an element sitting over the base pair {1,2}.

    ``cycles`` lists the nontrivial cycles of the underlying permutation
    of {3..n}, each starting at its smallest point and following the
    permutation; ``trivial_count`` is the number of fixed points.
    """

    n: int
    cycles: tuple[tuple[int, ...], ...]
    trivial_count: int

    @property
    def nontrivial_count(self) -> int:
        return len(self.cycles)

    def word(self) -> Word:
        """The witnessing word: base pair, then each cycle's run anchored
        at 1 (walked in the gluing orientation), separated by base pairs."""
        base = Quark(1, 2)
        quarks = [base]
        for cycle in self.cycles:
            for point in [cycle[0]] + list(reversed(cycle[1:])):
                quarks.append(Quark(1, point))
            quarks.append(base)
        return Word(self.n, tuple(quarks))

    def length(self) -> int:
        return (self.n - 2) - self.trivial_count + self.nontrivial_count + 1


def cyclic_decomposition(pi: BrauerDiagram) -> CyclicDecomposition:
    """Extract the cycle structure of an element H-related to the {1,2} atom."""
    base = frozenset({frozenset((1, 2))})
    if pi.left_brackets() != base or pi.right_brackets() != base:
        raise DomainError("element must have left and right bracket {1,2}")
    theta = pi.lines()
    cycles = []
    seen: set[int] = set()
    for start in sorted(theta):
        if start in seen or theta[start] == start:
            continue
        cycle = [start]
        x = theta[start]
        while x != start:
            cycle.append(x)
            x = theta[x]
        seen.update(cycle)
        cycles.append(tuple(cycle))
    trivial = sum(1 for p, image in theta.items() if p == image)
    return CyclicDecomposition(pi.n, tuple(cycles), trivial)


def ls_via_cycles(pi: BrauerDiagram) -> int:
    """Closed-form geodesic length on the H-class of the {1,2} atom:
    (n-2) - s + c + 1."""
    return cyclic_decomposition(pi).length()


def load_or_compute_table(
    n: int,
    cache_dir: str | Path | None = None,
    limit: int | None = BFS_LIMIT,
    threads: int = 1,
) -> GeodesicTable:
    """Fetch the table from the cache directory if present, else compute
    (and store it when a cache directory is given)."""
    path = None
    if cache_dir is not None:
        path = Path(cache_dir) / f"geodesics-n{n}.csv"
        if path.exists():
            try:
                return GeodesicTable.load(path, n)
            except (DomainError, OSError):
                pass  # stale or foreign file: recompute below
    table = bfs_lengths(n, limit=limit, threads=threads)
    if path is not None:
        os.makedirs(path.parent, exist_ok=True)
        table.save(path)
    return table
