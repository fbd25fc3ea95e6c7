"""Command line entry point ``vg``.

Exit codes: 0 every law passed, 1 at least one law failed (the report
carries witnesses), 2 the input could not be read or is invalid.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from .axioms import (
    CheckReport,
    check_derived_rules,
    check_ehresmann,
    check_subspaces,
    check_vector_axioms,
)
from .constructions import (
    InducedGroupoid,
    induced_groupoid,
    null_groupoid,
    pair_groupoid,
    raw_anchor_morphism,
    raw_canonical_projection,
    single_unit_groupoid,
    to_table,
)
from .documents import (
    dumps,
    factorization_from_doc,
    groupoid_from_doc,
    load_json,
    matrix_from_json,
    morphism_from_doc,
    morphism_to_doc,
    serialize,
)
from .enumspace import SpaceRef
from .errors import NotAMorphism, VGError
from .groupoid import InducedRule, VectorGroupoid
from .linalg import FieldSpec
from .morphisms import check_morphism, factorize, transitivity_report

log = logging.getLogger("vecgroupoid")

GROUPOID_SUITES = ("ehresmann", "vector", "derived", "subspaces", "morphisms", "transitivity")
MORPHISM_SUITES = ("morphism", "groupoids")
FACTORIZE_SUITES = ("factorization",)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _suites(raw: str | None, allowed: tuple[str, ...], default: tuple[str, ...]) -> tuple[str, ...]:
    if raw is None:
        return default
    chosen = tuple(s.strip() for s in raw.split(",") if s.strip())
    unknown = [s for s in chosen if s not in allowed]
    if unknown or not chosen:
        raise InputError(f"unknown suites {unknown}; choose from {','.join(allowed)}")
    return chosen


def run_groupoid_suites(g: VectorGroupoid, suites: tuple[str, ...] = GROUPOID_SUITES) -> CheckReport:
    """Run the selected suites on ``g`` in the canonical order."""
    report = CheckReport()
    eh = None
    if "ehresmann" in suites:
        eh = check_ehresmann(g)
        report = report.merged(eh)
    if "vector" in suites:
        report = report.merged(check_vector_axioms(g))
    if "derived" in suites:
        passed = eh.passed if eh is not None else None
        report = report.merged(check_derived_rules(g, passed))
    if "subspaces" in suites:
        report = report.merged(check_subspaces(g))
    if "morphisms" in suites:
        report = report.merged(check_morphism(raw_anchor_morphism(g)), prefix="anchor:")
        if isinstance(g.mult, InducedRule):
            rule = g.mult
            ig = InducedGroupoid(rule.parent, rule.h, g.V0, (), None, rule.basis, g)
            report = report.merged(check_morphism(raw_canonical_projection(ig)), prefix="canonical:")
    if "transitivity" in suites:
        report = report.merged(transitivity_report(g))
    return report


def _read(path: str):
    try:
        return load_json(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(report: CheckReport, args, elapsed_ms: float) -> int:
    doc = report.to_dict(round(elapsed_ms, 3) if args.timing else None)
    text = dumps(doc) + "\n"
    if args.report:
        Path(args.report).write_text(text)
    else:
        sys.stdout.write(text)
    s = doc["summary"]
    log.info("%d passed, %d failed", s["pass_count"], s["fail_count"])
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_check(args) -> int:
    suites = _suites(args.suites, GROUPOID_SUITES, GROUPOID_SUITES)
    g = groupoid_from_doc(_read(args.file))
    t0 = time.perf_counter()
    report = run_groupoid_suites(g, suites)
    return _emit(report, args, (time.perf_counter() - t0) * 1000)


def _build(args) -> VectorGroupoid:
    if args.kind == "induced":
        if not args.parent or args.h is None:
            raise InputError("construct induced needs --parent FILE and --h MATRIX")
        parent = groupoid_from_doc(_read(args.parent), "parent")
        x = SpaceRef(args.dim, parent.field)
        h = matrix_from_json(load_json(args.h), parent.V0.dim, args.dim, parent.field, "h")
        g = induced_groupoid(parent, h, x).structure
    else:
        ctor = {"null": null_groupoid, "single-unit": single_unit_groupoid, "pair": pair_groupoid}[args.kind]
        g = ctor(SpaceRef(args.dim, FieldSpec(args.p)))
    return to_table(g) if args.table else g


def cmd_construct(args) -> int:
    g = _build(args)
    text = serialize(g) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.report or args.suites:
        suites = _suites(args.suites, GROUPOID_SUITES, GROUPOID_SUITES)
        t0 = time.perf_counter()
        report = run_groupoid_suites(g, suites)
        return _emit(report, args, (time.perf_counter() - t0) * 1000)
    return EXIT_OK


def cmd_morphism_check(args) -> int:
    suites = _suites(args.suites, MORPHISM_SUITES, ("morphism",))
    m = morphism_from_doc(_read(args.file))
    t0 = time.perf_counter()
    report = CheckReport()
    if "morphism" in suites:
        report = report.merged(check_morphism(m))
    if "groupoids" in suites:
        report = report.merged(run_groupoid_suites(m.source, GROUPOID_SUITES[:4]), prefix="source:")
        report = report.merged(run_groupoid_suites(m.target, GROUPOID_SUITES[:4]), prefix="target:")
    return _emit(report, args, (time.perf_counter() - t0) * 1000)


def cmd_factorize(args) -> int:
    _suites(args.suites, FACTORIZE_SUITES, FACTORIZE_SUITES)
    vp, u, h, ig = factorization_from_doc(_read(args.file))
    t0 = time.perf_counter()
    try:
        fac = factorize(vp, u, h, ig)
    except NotAMorphism as exc:
        report = exc.report.prefixed("given:")
        return _emit(report, args, (time.perf_counter() - t0) * 1000)
    if args.output:
        Path(args.output).write_text(dumps(morphism_to_doc(fac.morphism)) + "\n")
    return _emit(fac.report, args, (time.perf_counter() - t0) * 1000)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vg", description="Verify vector groupoids over GF(p).")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, suites):
        sp.add_argument("--report", help="write the JSON report here (default: stdout)")
        sp.add_argument("--suites", help=f"comma list from: {','.join(suites)}")
        sp.add_argument("--timing", action="store_true", help="record elapsed_ms in the report")

    sp = sub.add_parser("check", help="run the law suites on a groupoid document")
    sp.add_argument("file")
    common(sp, GROUPOID_SUITES)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("construct", help="write a constructed groupoid document")
    sp.add_argument("kind", choices=("null", "single-unit", "pair", "induced"))
    sp.add_argument("--p", type=int, default=2, help="field size (prime)")
    sp.add_argument("--dim", type=int, default=1, help="dimension of V (null, single-unit) or X (pair, induced)")
    sp.add_argument("--parent", help="induced: parent groupoid document")
    sp.add_argument("--h", help="induced: JSON matrix of h: X -> V0")
    sp.add_argument("--table", action="store_true", help="export the multiplication as a table")
    sp.add_argument("-o", "--output")
    common(sp, GROUPOID_SUITES)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("morphism-check", help="check a morphism document")
    sp.add_argument("file")
    common(sp, MORPHISM_SUITES)
    sp.set_defaults(func=cmd_morphism_check)

    sp = sub.add_parser("factorize", help="factor a morphism through the induced groupoid")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", help="write the factor as a morphism document")
    common(sp, FACTORIZE_SUITES)
    sp.set_defaults(func=cmd_factorize)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="vg: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (VGError, InputError, json.JSONDecodeError) as exc:
        print(f"vg: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
