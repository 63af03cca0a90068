"""
Command-line front end.

One subcommand per library operation, bit-exact text formats for all
diagram and word I/O, and a ``--json`` switch that replaces the text
output with a single JSON object (schema in docs/cli-schema.json).

Exit codes: 0 on success, 2 on a domain error (bad diagram or word,
violated precondition, limit exceeded), 1 on an internal failure or a
failed verification.  Usage errors print help to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import traceback

from brauer.decomposition import decompose
from brauer.diagram import (
    ENUMERATION_LIMIT,
    DomainError,
    enumerate_all,
    green_related,
    multiply,
    parse_diagram,
)
from brauer.geodesics import BFS_LIMIT, load_or_compute_table, max_length
from brauer.presentation import (
    Quark,
    normalize,
    parse_word,
    phi,
    word_to_text,
    words_equal_in_T,
)
from brauer.sequences import (
    COUNT_LIMIT,
    count_classes,
    count_paths,
    expected_class_count,
    gamma_graph,
    parse_sequence,
    seq_equivalent,
)
from brauer.verify import SUITES, run_suites

CACHE_DIR_ENV = "BRAUER_CACHE_DIR"


def _parse_endpoint(text: str) -> tuple[int, int]:
    parts = text.strip().lstrip("(").rstrip(")").split(",")
    if len(parts) != 2:
        raise DomainError(f"expected a pair like 1,2 - got {text!r}")
    try:
        i, j = (int(p) for p in parts)
    except ValueError as exc:
        raise DomainError(f"expected a pair like 1,2 - got {text!r}") from exc
    return i, j


def _cache_dir(args) -> str | None:
    return args.cache_dir or os.environ.get(CACHE_DIR_ENV) or None


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


# each handler returns (json_object, text_lines, exit_code)

def _cmd_mult(args):
    a, b = parse_diagram(args.a), parse_diagram(args.b)
    product = multiply(a, b)
    return {"command": "mult", "product": product.to_text()}, [product.to_text()], 0


def _cmd_corank(args):
    d = parse_diagram(args.diagram)
    return {"command": "corank", "corank": d.corank}, [str(d.corank)], 0


def _cmd_green(args):
    a, b = parse_diagram(args.a), parse_diagram(args.b)
    related = green_related(a, b, args.relation)
    obj = {"command": "green", "relation": args.relation, "related": related}
    return obj, [_bool_text(related)], 0


def _cmd_decompose(args):
    d = parse_diagram(args.diagram)
    factors = decompose(d)
    verified = phi(factors) == d
    obj = {
        "command": "decompose",
        "word": word_to_text(factors),
        "verified": verified,
    }
    return obj, [word_to_text(factors), f"verified: {_bool_text(verified)}"], 0


def _cmd_normalize(args):
    w = parse_word(args.word)
    result = normalize(w)
    return {"command": "normalize", "word": word_to_text(result)}, [word_to_text(result)], 0


def _cmd_phi(args):
    image = phi(parse_word(args.word))
    return {"command": "phi", "diagram": image.to_text()}, [image.to_text()], 0


def _cmd_equal(args):
    equal = words_equal_in_T(parse_word(args.u), parse_word(args.v))
    return {"command": "equal", "equal": equal}, [_bool_text(equal)], 0


def _cmd_length(args):
    d = parse_diagram(args.diagram)
    if d.corank == 0:
        raise DomainError("length is undefined on invertible elements")
    table = load_or_compute_table(
        d.n,
        cache_dir=_cache_dir(args),
        limit=None if args.force else BFS_LIMIT,
        threads=args.threads,
    )
    value = table[d]
    return {"command": "length", "length": value}, [str(value)], 0


def _cmd_longest(args):
    table = load_or_compute_table(
        args.n,
        cache_dir=_cache_dir(args),
        limit=None if args.force else BFS_LIMIT,
        threads=args.threads,
    )
    value, witness = max_length(args.n, table=table)
    obj = {
        "command": "longest",
        "n": args.n,
        "max": value,
        "witness": witness.to_text(),
    }
    return obj, [str(value), witness.to_text()], 0


def _cmd_classes(args):
    if args.dot:
        dot = gamma_graph(args.n).to_dot()
        return {"command": "classes", "n": args.n, "dot": dot}, [dot], 0
    value = count_classes(args.n, limit=None if args.force else COUNT_LIMIT)
    obj = {
        "command": "classes",
        "n": args.n,
        "classes": value,
        "formula": expected_class_count(args.n),
    }
    return obj, [str(value)], 0


def _cmd_paths(args):
    frm, to = _parse_endpoint(args.frm), _parse_endpoint(args.to)
    value = count_paths(args.n, frm, to, limit=None if args.force else COUNT_LIMIT)
    obj = {
        "command": "paths",
        "n": args.n,
        "from": f"{Quark(*frm).i},{Quark(*frm).j}",
        "to": f"{Quark(*to).i},{Quark(*to).j}",
        "paths": value,
    }
    return obj, [str(value)], 0


def _cmd_seq_equal(args):
    a = parse_sequence(args.n, args.a)
    b = parse_sequence(args.n, args.b)
    equal = seq_equivalent(a, b)
    return {"command": "seq-equal", "equal": equal}, [_bool_text(equal)], 0


def _cmd_enumerate(args):
    stream = enumerate_all(args.n, limit=None if args.force else ENUMERATION_LIMIT)
    if args.json:
        diagrams = [d.to_text() for d in stream]
        obj = {"command": "enumerate", "n": args.n, "count": len(diagrams), "diagrams": diagrams}
        return obj, [], 0
    # text mode streams to avoid materializing the whole monoid
    for d in stream:
        print(d.to_text())
    return None, [], 0


def _cmd_verify(args):
    suites = args.suites or sorted(SUITES)
    claims = run_suites(suites, args.n, force=args.force, threads=args.threads)
    ok = all(c.ok for c in claims)
    obj = {
        "command": "verify",
        "n": args.n,
        "suites": suites,
        "claims": [c.to_json_obj() for c in claims],
        "ok": ok,
    }
    return obj, [c.line() for c in claims], 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON object")
    common.add_argument("--threads", type=int, default=1, metavar="N",
                        help="worker threads for frontier expansion")
    common.add_argument("--cache-dir", metavar="PATH", default=None,
                        help=f"geodesic table cache (or ${CACHE_DIR_ENV})")
    common.add_argument("--force", action="store_true",
                        help="override the per-command rank limits")

    parser = argparse.ArgumentParser(
        prog="brauer",
        description="Brauer monoid diagrams, their idempotent presentation, "
                    "factorizations, geodesic lengths, and counting checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("mult", parents=[common], help="multiply two diagrams")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_cmd_mult)

    p = sub.add_parser("corank", parents=[common], help="corank of a diagram")
    p.add_argument("diagram")
    p.set_defaults(handler=_cmd_corank)

    p = sub.add_parser("green", parents=[common], help="test a Green's relation")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("relation", choices=["R", "L", "H", "D"])
    p.set_defaults(handler=_cmd_green)

    p = sub.add_parser("decompose", parents=[common],
                       help="factor a singular diagram into atoms")
    p.add_argument("diagram")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("normalize", parents=[common],
                       help="rewrite a word into connected-prefix/disjoint-tail form")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_normalize)

    p = sub.add_parser("phi", parents=[common], help="evaluate a word to a diagram")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_phi)

    p = sub.add_parser("equal", parents=[common], help="decide equality of two words")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(handler=_cmd_equal)

    p = sub.add_parser("length", parents=[common], help="geodesic length of a diagram")
    p.add_argument("diagram")
    p.set_defaults(handler=_cmd_length)

    p = sub.add_parser("longest", parents=[common],
                       help="maximal geodesic length at rank n, with witness")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_longest)

    p = sub.add_parser("classes", parents=[common],
                       help="number of connected-sequence classes at rank n")
    p.add_argument("n", type=int)
    p.add_argument("--dot", action="store_true",
                   help="print the pair graph in DOT form instead")
    p.set_defaults(handler=_cmd_classes)

    p = sub.add_parser("paths", parents=[common],
                       help="classes of sequences between two endpoint pairs")
    p.add_argument("n", type=int)
    p.add_argument("frm", metavar="from", help="first pair, e.g. 1,2")
    p.add_argument("to", help="last pair, e.g. 3,4")
    p.set_defaults(handler=_cmd_paths)

    p = sub.add_parser("seq-equal", parents=[common],
                       help="decide equivalence of two connected sequences")
    p.add_argument("n", type=int)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_cmd_seq_equal)

    p = sub.add_parser("verify", parents=[common],
                       help="run exhaustive verification suites")
    p.add_argument("n", type=int)
    p.add_argument("suites", nargs="*",
                   help=f"subset of {sorted(SUITES)} (default: all)")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("enumerate", parents=[common],
                       help="stream every diagram of rank n")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        obj, lines, code = args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception:
        traceback.print_exc()
        return 1
    if args.json:
        if obj is not None:
            print(json.dumps(obj, indent=2))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
