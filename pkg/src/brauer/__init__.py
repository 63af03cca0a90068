"""Brauer monoid diagrams, the idempotent presentation of the singular
part, constructive atom factorization, geodesic lengths, and the related
counting results, all cross-checked against brute-force enumeration."""

from brauer.diagram import (
    BrauerDiagram,
    DomainError,
    GreenRelation,
    atom,
    atoms,
    corank,
    count_all,
    diagram_from_json_obj,
    enumerate_all,
    from_permutation,
    green_related,
    identity,
    make_diagram,
    multiply,
    multiply_with_loops,
    parse_diagram,
    random_diagram,
)

__all__ = [
    "BrauerDiagram",
    "DomainError",
    "GreenRelation",
    "atom",
    "atoms",
    "corank",
    "count_all",
    "diagram_from_json_obj",
    "enumerate_all",
    "from_permutation",
    "green_related",
    "identity",
    "make_diagram",
    "multiply",
    "multiply_with_loops",
    "parse_diagram",
    "random_diagram",
]
