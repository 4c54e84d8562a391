"""Command-line front end.

Exit status: 0 on success, 1 when a verification suite finds
counterexamples, 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import reduce

from .endo import (
    GREEN_RELATIONS,
    GeneratorImages,
    Rejected,
    apply,
    classify,
    compose,
    green_endo,
    iso_to_lz2xN,
)
from .grammar import ParseError, format_pair, parse_element, parse_endo, parse_family, parse_word
from .omega import STUDY_FAMILY, FamilyError
from .semigroup import RELATIONS, check_member, green_related, inverse, multiply, natural_leq
from .verify import SUITES, non_injective_grid, run_suite
from .words import normalize_word

DEFAULT_WINDOW = 8


class UsageError(Exception):
    pass


def _emit(args, value, text: str | None = None) -> None:
    if args.json:
        print(json.dumps({"result": value}))
    else:
        print(text if text is not None else value)


def _bool(args, value: bool) -> None:
    _emit(args, value, "true" if value else "false")


def _family(args):
    return parse_family(args.family) if args.family else STUDY_FAMILY


def cmd_mul(args) -> int:
    family = _family(args)
    elems = [parse_element(t) for t in args.elements]
    _emit(args, str(reduce(lambda a, b: multiply(a, b, family), elems)))
    return 0


def cmd_inv(args) -> int:
    family = _family(args)
    x = parse_element(args.element)
    check_member(x, family)
    _emit(args, str(inverse(x)))
    return 0


def cmd_order(args) -> int:
    _bool(args, natural_leq(parse_element(args.s), parse_element(args.t), _family(args)))
    return 0


def cmd_green(args) -> int:
    a, b = parse_element(args.a), parse_element(args.b)
    _bool(args, green_related(a, b, args.relation, _family(args)))
    return 0


def cmd_normalize(args) -> int:
    pair = normalize_word(parse_word(args.word))
    _emit(args, list(pair), format_pair(pair))
    return 0


def cmd_endo_apply(args) -> int:
    _emit(args, str(apply(parse_endo(args.endo), parse_element(args.element))))
    return 0


def cmd_endo_compose(args) -> int:
    endos = [parse_endo(t) for t in args.endos]
    _emit(args, str(reduce(compose, endos)))
    return 0


def cmd_classify(args) -> int:
    images = GeneratorImages(*(parse_element(t) for t in args.images))
    window = args.window if args.window is not None else DEFAULT_WINDOW
    try:
        e = classify(images, window)
    except Rejected as exc:
        witness = [str(x) for x in exc.pair] if exc.pair else None
        if args.json:
            print(json.dumps({"rejected": exc.reason, "witness": witness}))
        else:
            print(f"rejected: {exc.reason}")
        return 0
    _emit(args, str(e))
    return 0


def cmd_endo_green(args) -> int:
    e1, e2 = parse_endo(args.e1), parse_endo(args.e2)
    _bool(args, green_endo(e1, e2, args.relation))
    return 0


def cmd_iso(args) -> int:
    pair = iso_to_lz2xN(parse_endo(args.endo))
    _emit(args, list(pair), format_pair(pair))
    return 0


def cmd_table(args) -> int:
    if args.bound < 1:
        raise UsageError("--bound must be at least 1")
    grid = non_injective_grid(args.bound, with_zero=False)
    labels = [str(e) for e in grid]
    if args.kind == "compose":
        entries = [[str(compose(r, c)) for c in grid] for r in grid]
        if args.format == "json":
            print(json.dumps({"kind": "compose", "bound": args.bound, "labels": labels, "entries": entries}))
        else:
            print("\t".join([""] + labels))
            for label, row in zip(labels, entries):
                print("\t".join([label] + row))
        return 0
    matrices = {
        rel: [[green_endo(r, c, rel) for c in grid] for r in grid] for rel in GREEN_RELATIONS
    }
    if args.format == "json":
        print(json.dumps({"kind": "green", "bound": args.bound, "labels": labels, "relations": matrices}))
    else:
        blocks = []
        for rel, matrix in matrices.items():
            lines = [f"# {rel}", "\t".join([""] + labels)]
            for label, row in zip(labels, matrix):
                lines.append("\t".join([label] + ["1" if v else "0" for v in row]))
            blocks.append("\n".join(lines))
        print("\n\n".join(blocks))
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(name, args.window, args.kmax) for name in names]
    if args.json:
        payload = [r.to_dict() for r in reports]
        print(json.dumps(payload if args.suite == "all" else payload[0], indent=2))
    else:
        print("\n".join(r.to_text() for r in reports))
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--window", type=int, default=None, help=f"verification window (default {DEFAULT_WINDOW})")
    common.add_argument("--kmax", type=int, default=None, help="parameter bound; suites default to 30 for identities, 12 for witness search")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--family", default=None, help="family literal, default {[0),[1)}")

    parser = argparse.ArgumentParser(prog="bicyclic-ext", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("mul", cmd_mul, "multiply elements left to right")
    p.add_argument("elements", nargs="+")
    p = add("inv", cmd_inv, "inverse of an element")
    p.add_argument("element")
    p = add("order", cmd_order, "natural partial order s <= t")
    p.add_argument("s")
    p.add_argument("t")
    p = add("green", cmd_green, "Green's relation between two elements")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("relation", choices=RELATIONS)
    p = add("normalize", cmd_normalize, "normal form q^k p^l of a word, printed as (k,l)")
    p.add_argument("word")
    p = add("endo-apply", cmd_endo_apply, "apply an endomorphism to an element")
    p.add_argument("endo")
    p.add_argument("element")
    p = add("endo-compose", cmd_endo_compose, "compose endomorphisms, left one applied first")
    p.add_argument("endos", nargs="+")
    p = add("classify", cmd_classify, "classify generator images a, b, c")
    p.add_argument("images", nargs=3)
    p = add("endo-green", cmd_endo_green, "Green's relation between non-injective endomorphisms")
    p.add_argument("e1")
    p.add_argument("e2")
    p.add_argument("relation", choices=GREEN_RELATIONS)
    p = add("iso", cmd_iso, "image in LZ2 x N of a gamma or delta")
    p.add_argument("endo")
    p = add("table", cmd_table, "compose table or Green's relation matrices")
    p.add_argument("kind", choices=("compose", "green"))
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, FamilyError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
