"""Command-line front end.

Exit codes are a stable scripting contract: 0 for a certified or
positive verdict, 3 for inconclusive or negative, 2 for input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .io import (
    ProblemFileError,
    list_fixtures,
    load_problem,
    problem_to_dict,
    resolve_input,
    witness_report_to_dict,
    write_report,
)
from .search import MODES, SearchConfig, search
from .states import SubsystemLayout, parse_cut, schmidt
from .witness import (
    CONTAINS_ENTANGLED,
    PROTOCOL_DISTINGUISHES,
    PROTOCOL_FAILS,
    build_joint_state,
    check_witness,
    classify_full_basis,
    verify_one_way_protocol,
)


def _fmt(values) -> str:
    return ", ".join(f"{float(v):.12g}" for v in values)


def _input_echo(parsed) -> dict:
    echo = {
        "source": parsed.source,
        "states": list(parsed.state_names),
        "warnings": parsed.normalization_warnings() + list(parsed.notes),
    }
    if parsed.description:
        echo["description"] = parsed.description
    if parsed.detectors is not None:
        echo["detectors"] = list(parsed.detector_names)
        echo["probs"] = list(parsed.probs)
    return echo


def _report_skeleton(subcommand: str, parsed, options: dict) -> dict:
    return {
        "tool": "locc-witness",
        "version": __version__,
        "subcommand": subcommand,
        "input": _input_echo(parsed),
        "options": options,
    }


def _print_witness(report) -> None:
    print(f"verdict: {report.verdict}")
    print(f"margin: {report.margin:.12g} (tol {report.tol:g})")
    print(f"source schmidt:   {_fmt(report.source_schmidt)}")
    print(f"ensemble average: {_fmt(report.target_average)}")
    print(f"partial sums, source:  {_fmt(report.source_partial_sums)}")
    print(f"partial sums, average: {_fmt(report.average_partial_sums)}")
    for w in report.warnings:
        print(f"warning: {w}")


def cmd_schmidt(args) -> int:
    parsed = load_problem(resolve_input(args.input))
    state_layout = parsed.states[0].layout
    if parsed.detectors is not None:
        full_layout = SubsystemLayout(state_layout.parts + parsed.detectors[0].layout.parts)
    else:
        full_layout = state_layout
    cut = parse_cut(args.cut, full_layout)
    cut_labels = set(cut.left) | set(cut.right)

    rows = []
    if cut_labels == set(state_layout.labels):
        for name, state in zip(parsed.state_names, parsed.states):
            rows.append((name, schmidt(state, cut)))
    elif parsed.detectors is not None and cut_labels == set(full_layout.labels):
        joint = build_joint_state(parsed.witness_problem())
        rows.append(("joint", schmidt(joint, cut)))
    else:
        raise ProblemFileError(
            parsed.source, "cut", f"cut {args.cut!r} does not match the file's layouts"
        )

    for name, vec in rows:
        print(f"{name}: {_fmt(vec)}")
    if args.out:
        doc = _report_skeleton("schmidt", parsed, {"cut": str(cut)})
        doc["schmidt"] = [{"name": n, "values": [float(v) for v in vec]} for n, vec in rows]
        write_report(args.out, doc)
    return 0


def cmd_check(args) -> int:
    parsed = load_problem(resolve_input(args.input))
    report = check_witness(parsed.witness_problem(), args.tol)
    _print_witness(report)
    if args.out:
        doc = _report_skeleton("check", parsed, {"tol": args.tol, "seed": parsed.options.get("seed", 0)})
        doc.update(witness_report_to_dict(report))
        write_report(args.out, doc)
    return 0 if report.certified else 3


def cmd_search(args) -> int:
    parsed = load_problem(resolve_input(args.input))
    dims = tuple(int(d) for d in args.detector_dims.split(","))
    cfg = SearchConfig(
        detector_dims=dims,
        restarts=args.restarts,
        seed=args.seed,
        tol=args.tol,
        mode=args.mode,
    )
    result = search(parsed.states, cfg)
    print(f"found: {result.found}")
    print(f"restart: {result.restart_index}, iterations: {result.iterations_used}")
    _print_witness(result.best_report)
    dumped = problem_to_dict(result.best_problem, state_names=parsed.state_names)
    if args.dump_problem:
        write_report(args.dump_problem, dumped)
        print(f"best problem written to {args.dump_problem}")
    if args.out:
        doc = _report_skeleton(
            "search",
            parsed,
            {
                "tol": args.tol,
                "seed": args.seed,
                "restarts": args.restarts,
                "detector_dims": list(dims),
                "mode": args.mode,
            },
        )
        doc.update(witness_report_to_dict(result.best_report))
        doc["found"] = result.found
        doc["restart_index"] = result.restart_index
        doc["iterations_used"] = result.iterations_used
        doc["best_problem"] = dumped
        write_report(args.out, doc)
    return 0 if result.found else 3


def cmd_full_basis(args) -> int:
    parsed = load_problem(resolve_input(args.input))
    result = classify_full_basis(parsed.states, args.tol)
    print(f"classification: {result.classification}")
    print(f"max schmidt coefficient per state: {_fmt(result.max_schmidt)}")
    if result.witness is not None:
        print("cross-check witness:")
        _print_witness(result.witness)
    if args.out:
        doc = _report_skeleton("full-basis", parsed, {"tol": args.tol})
        doc["verdict"] = result.classification
        doc["max_schmidt"] = [float(v) for v in result.max_schmidt]
        if result.witness is not None:
            doc["witness"] = witness_report_to_dict(result.witness)
        write_report(args.out, doc)
    return 0 if result.classification == CONTAINS_ENTANGLED else 3


def cmd_protocol_verify(args) -> int:
    parsed = load_problem(resolve_input(args.input))
    measurement = load_problem(resolve_input(args.measurement))
    ok = verify_one_way_protocol(parsed.states, measurement.states, args.tol)
    verdict = PROTOCOL_DISTINGUISHES if ok else PROTOCOL_FAILS
    print(f"verdict: {verdict}")
    if args.out:
        doc = _report_skeleton("protocol-verify", parsed, {"tol": args.tol})
        doc["verdict"] = verdict
        doc["measurement"] = str(args.measurement)
        write_report(args.out, doc)
    return 0 if ok else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locc-witness",
        description=(
            "Certify when orthogonal bipartite pure states cannot be perfectly "
            "distinguished by LOCC. Inputs are JSON problem files or bundled "
            "fixture names (%s)." % ", ".join(list_fixtures() or ["none bundled"])
        ),
    )
    parser.add_argument("--version", action="version", version=f"locc-witness {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("input", help="problem file path or bundled fixture name")
        p.add_argument("--tol", type=float, default=1e-9, help="certification tolerance")
        p.add_argument("--out", help="write a machine-readable JSON report here")

    p = sub.add_parser("schmidt", help="print Schmidt vectors across a cut")
    add_common(p)
    p.add_argument("--cut", required=True, help="bipartition such as A:B or AC:BD")
    p.set_defaults(func=cmd_schmidt)

    p = sub.add_parser("check", help="run the witness on a file with detectors")
    add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="search detectors and probabilities for a certificate")
    add_common(p)
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--detector-dims", default="2,2", help="detector dimensions, e.g. 2,2")
    p.add_argument("--mode", choices=MODES, default=MODES[0])
    p.add_argument("--dump-problem", help="write the best problem as a problem file")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("full-basis", help="classify a complete orthonormal basis")
    add_common(p)
    p.set_defaults(func=cmd_full_basis)

    p = sub.add_parser("protocol-verify", help="verify a one-way measure-and-tell protocol")
    add_common(p)
    p.add_argument("--measurement", required=True, help="measurement basis file (single part)")
    p.set_defaults(func=cmd_protocol_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ProblemFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
