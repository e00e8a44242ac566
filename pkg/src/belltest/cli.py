"""Command-line entry points.

Subcommands:

    simulate   run a survey over a classical or quantum population -> CSV
    test       analyze a CSV dataset -> JSON report
    search     find the angle triple with the most negative predicted margin
    interference  classify an observed probability against additivity

Exit codes: 0 success, 2 validation error, 3 degenerate/inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .dataio import (
    ReportContext,
    emit_report,
    format_dataset,
    parse_dataset,
)
from .errors import (
    BellTestError,
    DegenerateAlternatives,
    DegenerateVariance,
    EmptyConditioningBranch,
)
from .inequalities import interference_coefficient
from .probability import JointDistribution3, symmetrize
from .protocol import (
    ClassicalHiddenVariable,
    DesignVariant,
    ProtocolDesign,
    QuantumUnpolarized,
    check_symmetry,
    estimate_frequencies,
    run_protocol,
)
from .qubit import QuestionTriple
from .search import classical_margin_floor, maximize_quantum_violation
from .stats import violation_test

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_DEGENERATE = 3

DEFAULT_SYMMETRY_TOLERANCE = 0.05


def _angles(text: str) -> QuestionTriple:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated angles")
    try:
        a, b, c = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric angle in {text!r}") from None
    return QuestionTriple.from_floats(a, b, c)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="belltest",
        description="Classical-vs-quantum-like tests for dichotomic survey data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="simulate a survey, write a CSV dataset")
    sim.add_argument("--model", choices=["quantum", "classical"], required=True)
    sim.add_argument("--angles", type=_angles, help="question angles a,b,c in radians")
    sim.add_argument(
        "--atoms", type=float, nargs=8, metavar="W",
        help="8 atom weights in canonical order (+++ ++- +-+ +-- -++ -+- --+ ---)",
    )
    sim.add_argument("--symmetrize", action="store_true",
                     help="average the classical law with its global sign flip")
    sim.add_argument("--design", choices=["three", "two"], default="three")
    sim.add_argument("--n", type=int, required=True, help="agents per branch")
    sim.add_argument("--seed", type=int, required=True)
    sim.add_argument("--workers", type=int, default=1)
    sim.add_argument("--out", type=Path, required=True)

    tst = sub.add_parser("test", help="analyze a CSV dataset, write a JSON report")
    tst.add_argument("dataset", type=Path)
    tst.add_argument("--alpha", type=float, default=0.05)
    tst.add_argument("--symmetry-tolerance", type=float,
                     default=DEFAULT_SYMMETRY_TOLERANCE)
    tst.add_argument("--seed", type=int, default=None,
                     help="seed to echo into the report, if known")
    tst.add_argument("--report", type=Path, default=None,
                     help="report path (default: stdout)")

    sea = sub.add_parser("search", help="maximize the predicted quantum violation")
    sea.add_argument("--grid", type=int, default=360)
    sea.add_argument("--refine-tol", type=float, default=1e-9)
    sea.add_argument("--floor-samples", type=int, default=0,
                     help="also certify the classical margin floor on N samples")
    sea.add_argument("--seed", type=int, default=0)

    inter = sub.add_parser("interference", help="classify an interference coefficient")
    inter.add_argument("--p", type=float, required=True)
    inter.add_argument("--p1", type=float, required=True)
    inter.add_argument("--p2", type=float, required=True)

    return parser


def _cmd_simulate(args) -> int:
    if args.model == "quantum":
        if args.angles is None:
            print("simulate: --angles is required with --model quantum", file=sys.stderr)
            return EXIT_VALIDATION
        pop = QuantumUnpolarized(questions=args.angles)
    else:
        if args.atoms is None:
            print("simulate: --atoms is required with --model classical", file=sys.stderr)
            return EXIT_VALIDATION
        joint = JointDistribution3(tuple(args.atoms))
        if args.symmetrize:
            joint = symmetrize(joint)
        pop = ClassicalHiddenVariable(joint=joint)
    design = ProtocolDesign(
        variant=DesignVariant(args.design), n_per_branch=args.n
    )
    data = run_protocol(pop, design, seed=args.seed, workers=args.workers)
    args.out.write_text(format_dataset(data))
    return EXIT_OK


def _cmd_test(args) -> int:
    data = parse_dataset(args.dataset.read_text())
    symmetry = check_symmetry(data, tolerance=args.symmetry_tolerance)
    design = _infer_design(data)
    context = ReportContext(seed=args.seed, design=design, alpha=args.alpha)
    exit_code = EXIT_OK
    try:
        table = estimate_frequencies(data)
        test = violation_test(table, alpha=args.alpha)
        text = emit_report(test, table, context, symmetry)
    except DegenerateVariance as exc:
        table = estimate_frequencies(data)
        text = emit_report(None, table, context, symmetry,
                           degenerate_margin=exc.margin)
        exit_code = EXIT_DEGENERATE
    except EmptyConditioningBranch as exc:
        print(f"test: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    if args.report is not None:
        args.report.write_text(text)
    else:
        sys.stdout.write(text)
    return exit_code


def _infer_design(data) -> str:
    branches = {rec.branch.value for rec in data}
    if branches <= {"BA", "BC", "CA"}:
        return "three"
    if branches <= {"S1", "S2"}:
        return "two"
    return "mixed"


def _cmd_search(args) -> int:
    result = maximize_quantum_violation(grid_steps=args.grid, refine_tol=args.refine_tol)
    payload = {
        "best_angles": {
            "a": result.best_angles.a.phi,
            "b": result.best_angles.b.phi,
            "c": result.best_angles.c.phi,
        },
        "best_margin": result.best_margin,
        "evaluations": result.evaluations,
        "refinement_tolerance": result.refinement_tolerance,
    }
    if args.floor_samples > 0:
        rng = np.random.default_rng(args.seed)
        floor = classical_margin_floor(args.floor_samples, rng)
        payload["classical_floor"] = {
            "min_margin": floor.min_margin,
            "samples_evaluated": floor.samples_evaluated,
            "skipped": floor.skipped,
        }
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def _cmd_interference(args) -> int:
    try:
        result = interference_coefficient(args.p, args.p1, args.p2)
    except DegenerateAlternatives as exc:
        print(f"interference: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    print(json.dumps(
        {
            "p": args.p,
            "p1": args.p1,
            "p2": args.p2,
            "coefficient": result.coefficient,
            "regime": result.regime.value,
        },
        indent=2,
    ))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "simulate": _cmd_simulate,
        "test": _cmd_test,
        "search": _cmd_search,
        "interference": _cmd_interference,
    }
    try:
        return handlers[args.command](args)
    except (BellTestError, ValueError) as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
