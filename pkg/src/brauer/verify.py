"""
Exhaustive verification suites behind the ``verify`` CLI subcommand.

Each suite recomputes one of the checkable claims at rank n and compares
against the closed-form value: relation families under evaluation,
generation of the singular part by atoms, irreducibility of the atom
system, the maximal geodesic length and the cycle-formula lengths,
enumeration and class counts, and H-class sizes.  Suites carry per-rank
limits so a stray argument cannot trigger a double-factorial blowup;
``force`` lifts them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from brauer.decomposition import atom_closure, is_irreducible_generator_check
from brauer.diagram import DomainError, count_all, enumerate_all
from brauer.geodesics import bfs_lengths, expected_max_length, ls_via_cycles
from brauer.presentation import check_all_relations
from brauer.sequences import corank2_census, expected_class_count

__all__ = ["Claim", "SUITES", "SUITE_LIMITS", "run_suite", "run_suites"]

SUITE_LIMITS = {
    "relations": 8,
    "generation": 6,
    "irreducible": 5,
    "lengths": 7,
    "counts": 7,
    "hclasses": 7,
}


@dataclass(frozen=True)
class Claim:
    suite: str
    name: str
    expected: object
    computed: object
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.expected == self.computed

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name}: expected {self.expected}, computed {self.computed}"
        if self.detail:
            text += f" ({self.detail})"
        return text

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "expected": self.expected,
            "computed": self.computed,
            "detail": self.detail,
            "ok": self.ok,
        }


def _suite_relations(n: int, threads: int) -> list[Claim]:
    report = check_all_relations(n)
    detail = " ".join(f"{r}:{c}" for r, c in sorted(report.checked.items()))
    return [
        Claim("relations", f"relation violations (n={n})", 0, len(report.violations), detail)
    ]


def _suite_generation(n: int, threads: int) -> list[Claim]:
    closure = atom_closure(n)
    expected = count_all(n) - math.factorial(n)
    claims = [
        Claim("generation", f"atom-closure size (n={n})", expected, len(closure),
              f"(2n-1)!! - n! = {count_all(n)} - {math.factorial(n)}")
    ]
    singular = {d for d in enumerate_all(n, limit=None) if d.corank >= 2}
    claims.append(
        Claim("generation", f"closure equals corank>=2 set (n={n})", True, closure == singular)
    )
    return claims


def _suite_irreducible(n: int, threads: int) -> list[Claim]:
    report = is_irreducible_generator_check(n, limit=None)
    return [
        Claim("irreducible", f"reducible atoms (n={n})", 0, len(report.reducible),
              f"{math.comb(n, 2)} atoms checked")
    ]


def _suite_lengths(n: int, threads: int) -> list[Claim]:
    table = bfs_lengths(n, limit=None, threads=threads)
    value, witness = table.max_entry()
    claims = [
        Claim("lengths", f"maximal length (n={n})", expected_max_length(n), value,
              f"witness {witness.to_text()}")
    ]
    mismatches = sum(
        1
        for d in table.dist
        if d.left_brackets() == d.right_brackets() == frozenset({frozenset((1, 2))})
        and ls_via_cycles(d) != table[d]
    )
    claims.append(
        Claim("lengths", f"cycle-formula mismatches on the {{1,2}} class (n={n})", 0, mismatches)
    )
    return claims


def _suite_counts(n: int, threads: int) -> list[Claim]:
    total = sum(1 for _ in enumerate_all(n, limit=None))
    corank2 = corank2_census(n, limit=None)
    classes = sum(corank2.values())
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    bad_paths = sum(
        1
        for frm in pairs
        for to in pairs
        if corank2.get((frm, to), 0) != math.factorial(n - 2)
    )
    return [
        Claim("counts", f"diagram count (n={n})", count_all(n), total, "(2n-1)!!"),
        Claim("counts", f"class count (n={n})", expected_class_count(n), classes,
              "n(n-1)n!/4"),
        Claim("counts", f"endpoint pairs off (n-2)! (n={n})", 0, bad_paths,
              f"{len(pairs) ** 2} endpoint pairs"),
    ]


def _suite_hclasses(n: int, threads: int) -> list[Claim]:
    sizes: dict = {}
    for d in enumerate_all(n, limit=None):
        key = (d.left_brackets(), d.right_brackets())
        sizes[key] = sizes.get(key, 0) + 1
    bad = sum(
        1
        for (lb, _), size in sizes.items()
        if size != math.factorial(n - 2 * len(lb))
    )
    by_corank = sorted({(2 * len(lb), math.factorial(n - 2 * len(lb))) for (lb, _) in sizes})
    detail = " ".join(f"corank {c}: {s}" for c, s in by_corank)
    return [Claim("hclasses", f"H-classes off (n-2k)! (n={n})", 0, bad, detail)]


SUITES = {
    "relations": _suite_relations,
    "generation": _suite_generation,
    "irreducible": _suite_irreducible,
    "lengths": _suite_lengths,
    "counts": _suite_counts,
    "hclasses": _suite_hclasses,
}


def run_suite(name: str, n: int, force: bool = False, threads: int = 1) -> list[Claim]:
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if n < 2:
        raise DomainError("verification suites need n >= 2")
    if not force and n > SUITE_LIMITS[name]:
        raise DomainError(
            f"n={n} exceeds the {name} suite limit {SUITE_LIMITS[name]} (use --force)"
        )
    return SUITES[name](n, threads)


def run_suites(names, n: int, force: bool = False, threads: int = 1) -> list[Claim]:
    claims = []
    for name in names:
        claims.extend(run_suite(name, n, force=force, threads=threads))
    return claims
