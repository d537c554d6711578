"""Command-line interface.

Exit codes are a stable contract for scripting: 0 on success or a passing
verification, 1 when verification fails, 2 on any input error (bad
arguments, unreadable files, invalid documents).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import construct, demo, search, serialize, verify
from .construct import Family, FamilySpec, TableGap
from .graph import GraphError
from .labels import LabelOutOfRange, format_label, parse_label

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _parse_unit(text: str) -> Fraction:
    try:
        return parse_label(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad unit {text!r}: {exc}") from None


def _read_graph(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    try:
        return serialize.from_json(text)
    except (serialize.ParseError, serialize.ValidationError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _cmd_generate(args) -> int:
    family = Family(args.family)
    spec = FamilySpec(family, args.n)
    if args.paper_table:
        try:
            unit, deviates = construct.paper_unit(spec)
        except TableGap as exc:
            raise InputError(str(exc)) from None
        if deviates:
            print(
                f"warning: published table unit {format_label(unit)} differs "
                f"from minimal unit",
                file=sys.stderr,
            )
    else:
        unit = _parse_unit(args.unit) if args.unit else None
    labeling = construct.label_family(spec, unit)
    meta = {"family": family.value, "n": args.n}
    text = serialize.to_json(labeling, meta=meta)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _read_graph(args.file)
    report = verify.verify_magic(g)
    if report.verdict:
        print(f"PASS  magic constant m(G) = {format_label(report.magic_constant)}")
        distinct = verify.is_fuzzy_magic_and_labeling(g)
        print(f"      combined vertex/edge label distinctness: {'yes' if distinct else 'no'}")
        return EXIT_OK
    print("FAIL")
    for violation in report.violations:
        print(f"  {violation}")
    return EXIT_FAIL


def _structure_of(g) -> search.GraphStructure:
    return search.GraphStructure(tuple(g.vertices), tuple(sorted(g.edges)))


def _cmd_search(args) -> int:
    g = _read_graph(args.file)
    structure = _structure_of(g)
    unit = _parse_unit(args.unit) if args.unit else None
    spec = search.SearchSpec(
        max_coefficient=args.max_coeff,
        target=args.target,
        unit=unit,
        limit=args.limit,
    )
    try:
        result = search.enumerate_magic(structure, spec)
    except (search.Infeasible, search.TargetTooLarge) as exc:
        raise InputError(str(exc)) from None
    d = spec.resolved_unit()
    print(f"unit d = {d.numerator}/{d.denominator}")
    print(f"solutions: {len(result.solutions)} (exhausted: {result.exhausted})")
    for s in result.solutions:
        vs = ", ".join(f"{v}:{c}" for v, c in sorted(s.vertex_coefficients.items()))
        es = ", ".join(f"{e[0]}-{e[1]}:{c}" for e, c in sorted(s.edge_coefficients.items()))
        print(f"  T={s.target}  vertices {{{vs}}}  edges {{{es}}}")
    return EXIT_OK


def _cmd_min_constant(args) -> int:
    g = _read_graph(args.file)
    structure = _structure_of(g)
    unit = _parse_unit(args.unit) if args.unit else None
    try:
        hit = search.minimal_magic_coefficient(structure, args.max_coeff, unit)
    except (search.Infeasible, search.TargetTooLarge) as exc:
        raise InputError(str(exc)) from None
    if hit is None:
        print("no magic labeling within the searched grid")
        return EXIT_FAIL
    target, witness = hit
    print(f"minimal magic coefficient T = {target}")
    vs = ", ".join(f"{v}:{c}" for v, c in sorted(witness.vertex_coefficients.items()))
    es = ", ".join(f"{e[0]}-{e[1]}:{c}" for e, c in sorted(witness.edge_coefficients.items()))
    print(f"witness: vertices {{{vs}}}  edges {{{es}}}")
    return EXIT_OK


def _cmd_export(args) -> int:
    g = _read_graph(args.file)
    if args.format == "dot":
        sys.stdout.write(serialize.to_dot(g))
    elif args.format == "csv":
        sys.stdout.write(serialize.to_csv(g))
    else:
        sys.stdout.write(serialize.to_json(g))
    return EXIT_OK


def _cmd_demo(args) -> int:
    if args.what != "workload":
        raise InputError(f"unknown demo {args.what!r}")
    sys.stdout.write(demo.demo_workload())
    return EXIT_OK


def _cmd_units(args) -> int:
    family = Family(args.family)
    try:
        lo_text, hi_text = args.n_range.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise InputError(f"bad range {args.n_range!r}, expected A..B") from None
    print(f"{'n':>6}  {'minimal':>10}  {'paper':>10}  note")
    for n in range(lo, hi + 1):
        try:
            spec = FamilySpec(family, n)
        except construct.InvalidFamilySpec:
            continue
        minimal = construct.minimal_unit(construct.magic_coefficient(spec))
        try:
            paper, deviates = construct.paper_unit(spec)
            note = "DEVIATES" if deviates else ""
            paper_text = format_label(paper)
        except TableGap:
            paper_text, note = "-", "table gap"
        print(f"{n:>6}  {format_label(minimal):>10}  {paper_text:>10}  {note}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzymagic",
        description="Construct, verify and search magic labelings of fuzzy graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="construct a family labeling and write it as JSON")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--unit", help='unit d as "p/q" or a decimal')
    p.add_argument("--paper-table", action="store_true",
                   help="take d from the published table instead of the minimal unit")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(run=_cmd_generate)

    p = sub.add_parser("verify", help="check the magic axioms on a graph file")
    p.add_argument("file")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("search", help="enumerate magic labelings on the coefficient grid")
    p.add_argument("file")
    p.add_argument("--max-coeff", required=True, type=int)
    p.add_argument("--target", type=int)
    p.add_argument("--unit")
    p.add_argument("--limit", type=int, default=search.DEFAULT_SOLUTION_LIMIT)
    p.set_defaults(run=_cmd_search)

    p = sub.add_parser("min-constant", help="smallest feasible magic sum on the grid")
    p.add_argument("file")
    p.add_argument("--max-coeff", required=True, type=int)
    p.add_argument("--unit")
    p.set_defaults(run=_cmd_min_constant)

    p = sub.add_parser("export", help="re-emit a graph file as dot, json or csv")
    p.add_argument("file")
    p.add_argument("--format", required=True, choices=["dot", "json", "csv"])
    p.set_defaults(run=_cmd_export)

    p = sub.add_parser("demo", help="built-in demonstrations")
    p.add_argument("what", choices=["workload"])
    p.set_defaults(run=_cmd_demo)

    p = sub.add_parser("units", help="compare minimal units with the published tables")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--n-range", required=True, help="inclusive range A..B")
    p.set_defaults(run=_cmd_units)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (InputError, GraphError, LabelOutOfRange,
            construct.InvalidFamilySpec, construct.UnitTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
