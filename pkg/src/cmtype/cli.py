"""Command-line front end.

Subcommands::

    analyze FILE                      graded invariants + singular locus
    classify FILE [--assume ...]      representation-type verdict with citations
    semigroup A1,A2,...               Drozd-Roiter lengths for a semigroup ring
    arrangement FILE --reduction F    Drozd-Roiter lengths for a line arrangement
    generate FAMILY [ARGS...]         canonical presentation file for a family
    gb FILE                           reduced Groebner basis (degrevlex)

Global flags: ``--json`` (canonical report serialization), ``--seed N``
(linear-parameter seed, default 1), ``--budget-pairs N``, ``--budget-degree N``.
Exit codes: 0 success, 2 input error, 3 budget error.

The ``arrangement`` input file lists the individual lines as the ideal
generators (one linear form each); the reduction is a linear form in the
same two variables.
"""

from __future__ import annotations

import argparse
import sys
import time

from .classifier import classify
from .drozd_roiter import arrangement_dr, line_arrangement, semigroup_closure, semigroup_dr
from .errors import BudgetError, Budgets, InputError
from .families import catalog_presentation
from .groebner import buchberger
from .invariants import analyze
from .parsing import parse_polynomial, parse_presentation
from .presentation import render_polynomial, render_presentation
from .report import (
    build_document,
    classification_sections,
    digest_text,
    dr_section,
    finalize_document,
    invariants_section,
    reduction_section,
    render_json,
    render_text,
    singularity_section,
)
from .singularity import singular_locus


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the canonical JSON report")
    common.add_argument("--seed", type=int, default=1, help="seed for linear-parameter search")
    common.add_argument("--budget-pairs", type=int, default=None, help="S-pair budget override")
    common.add_argument("--budget-degree", type=int, default=None, help="S-pair degree budget override")

    parser = argparse.ArgumentParser(
        prog="cmtype",
        description="Graded ring invariants and Cohen-Macaulay representation-type classification",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("analyze", parents=[common], help="graded invariants of a presentation")
    p.add_argument("file")

    p = sub.add_parser("classify", parents=[common], help="representation-type verdict")
    p.add_argument("file")
    p.add_argument(
        "--assume",
        action="append",
        default=[],
        choices=["reduced", "domain"],
        help="assert a hypothesis the tool cannot verify",
    )

    p = sub.add_parser("semigroup", parents=[common], help="Drozd-Roiter lengths for <a1,a2,...>")
    p.add_argument("generators", help="comma-separated positive integers with gcd 1")

    p = sub.add_parser("arrangement", parents=[common], help="Drozd-Roiter lengths for a line arrangement")
    p.add_argument("file", help="presentation file whose ideal lists the lines")
    p.add_argument("--reduction", required=True, help="linear form nonvanishing on every line")

    p = sub.add_parser("generate", parents=[common], help="emit a canonical family presentation")
    p.add_argument("family")
    p.add_argument("args", nargs="*")

    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis of the ideal")
    p.add_argument("file")

    return parser


def _budgets(ns: argparse.Namespace) -> Budgets:
    base = Budgets()
    return Budgets(
        pairs=ns.budget_pairs if ns.budget_pairs is not None else base.pairs,
        degree=ns.budget_degree if ns.budget_degree is not None else base.degree,
        minors=base.minors,
    )


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _emit(doc: dict, started: float, as_json: bool) -> int:
    finalize_document(doc, (time.perf_counter() - started) * 1000.0)
    sys.stdout.write(render_json(doc) if as_json else render_text(doc))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    started = time.perf_counter()
    budgets = _budgets(ns)

    try:
        if ns.subcommand == "analyze":
            text = _read_file(ns.file)
            pres = parse_presentation(text, require_homogeneous=True)
            for warning in pres.warnings:
                print(f"warning: {warning}", file=sys.stderr)
            bundle = analyze(pres, seed=ns.seed, budgets=budgets)
            sing = singular_locus(bundle.presentation, budgets=budgets)
            names = tuple(bundle.presentation.variables)
            doc = build_document(
                "analyze",
                digest_text(text),
                {
                    "invariants": invariants_section(bundle.invariants),
                    "artinian_reduction": reduction_section(bundle.reduction, names),
                    "singularity": singularity_section(sing),
                },
            )
            return _emit(doc, started, ns.json)

        if ns.subcommand == "classify":
            text = _read_file(ns.file)
            pres = parse_presentation(text, require_homogeneous=True)
            for warning in pres.warnings:
                print(f"warning: {warning}", file=sys.stderr)
            result = classify(pres, frozenset(ns.assume), seed=ns.seed, budgets=budgets)
            sections = {"assumptions": sorted(ns.assume)}
            sections.update(classification_sections(result))
            doc = build_document("classify", digest_text(text), sections)
            return _emit(doc, started, ns.json)

        if ns.subcommand == "semigroup":
            try:
                gens = [int(part) for part in ns.generators.split(",") if part.strip()]
            except ValueError:
                raise InputError("semigroup generators must be integers") from None
            semigroup = semigroup_closure(gens)
            result = semigroup_dr(semigroup)
            doc = build_document(
                "semigroup",
                digest_text("semigroup:" + ",".join(str(g) for g in semigroup.generators)),
                {
                    "generators": list(semigroup.generators),
                    "frobenius": semigroup.frobenius,
                    "report": dr_section(result),
                },
            )
            return _emit(doc, started, ns.json)

        if ns.subcommand == "arrangement":
            text = _read_file(ns.file)
            pres = parse_presentation(text)
            reduction = parse_polynomial(ns.reduction, pres.variables)
            arrangement = line_arrangement(pres.generators, reduction)
            result = arrangement_dr(arrangement)
            names = tuple(pres.variables)
            doc = build_document(
                "arrangement",
                digest_text(text + "\nreduction:" + ns.reduction),
                {
                    "lines": [render_polynomial(l, names) for l in arrangement.lines],
                    "reduction": render_polynomial(arrangement.reduction, names),
                    "report": dr_section(result),
                },
            )
            return _emit(doc, started, ns.json)

        if ns.subcommand == "generate":
            pres = catalog_presentation(ns.family, ns.args)
            sys.stdout.write(render_presentation(pres))
            return 0

        if ns.subcommand == "gb":
            text = _read_file(ns.file)
            pres = parse_presentation(text)
            basis = buchberger(pres.ideal, budgets=budgets)
            names = tuple(pres.variables)
            doc = build_document(
                "gb",
                digest_text(text),
                {
                    "order": basis.order.value,
                    "basis": [render_polynomial(g, names) for g in basis.elements],
                },
            )
            return _emit(doc, started, ns.json)

        raise InputError(f"unknown subcommand {ns.subcommand!r}")
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 3


def run() -> None:  # console-script entry point
    raise SystemExit(main())


if __name__ == "__main__":
    run()
