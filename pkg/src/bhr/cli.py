"""Batch command-line surface.

Exit codes: 0 success/holds/realizable, 2 usage error, 3 negative verdict,
4 unknown or budget exhausted.  ``--output record`` emits line-delimited,
schema-versioned JSON that round-trips through the text parsers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .cayley import build_from_list, difference_list, translate_orbit, verify_decomposition
from .conditions import condition_one, condition_two
from .errors import BhrError, ParseError
from .families import load_catalog
from .model import EdgeLengthList, PathRealization, is_perfect, validate
from .oracle import DEFAULT_BUDGET, count_realizations, search, sweep_conjecture
from .solver import Realizability, construct_linear, decide_bhr, decide_linear

RECORD_SCHEMA = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NEGATIVE = 3
EXIT_UNKNOWN = 4


def default_budget() -> int:
    raw = os.environ.get("BHR_BUDGET", "")
    try:
        return int(raw) if raw else DEFAULT_BUDGET
    except ValueError:
        return DEFAULT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bhr",
        description="Decide and construct realizations of edge-length multisets.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", choices=("text", "record"), default="text")

    p = sub.add_parser("check", help="run both solvability conditions on a list")
    p.add_argument("--list", required=True, dest="list_text")
    p.add_argument("--v", type=int, default=None, help="assert the derived order")
    common(p)

    p = sub.add_parser("realize", help="decide and construct a realization")
    p.add_argument("--list", required=True, dest="list_text")
    p.add_argument("--mode", choices=("linear", "cyclic"), default="cyclic")
    p.add_argument("--budget", type=int, default=None)
    common(p)

    p = sub.add_parser("verify", help="validate a path against a list")
    p.add_argument("--list", required=True, dest="list_text")
    p.add_argument("--path", required=True, dest="path_text")
    p.add_argument("--mode", choices=("linear", "cyclic"), default="linear")
    common(p)

    p = sub.add_parser("oracle", help="exhaustive search for one list")
    p.add_argument("--list", required=True, dest="list_text")
    p.add_argument("--mode", choices=("linear", "cyclic"), default="cyclic")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--order", choices=("ascending", "scarce", "abundant"),
                   default="ascending")
    p.add_argument("--perfect", action="store_true")
    p.add_argument("--count", action="store_true",
                   help="count realizations instead of searching")
    p.add_argument("--cap", type=int, default=13, help="order cap for --count")
    common(p)

    p = sub.add_parser("sweep", help="condition-vs-search sweep over all lists of one order")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--cap", type=int, default=13, help="largest order accepted")
    p.add_argument("--checkpoint", default=None,
                   help="checkpoint file (default on for v >= 12: sweep-v<order>.txt)")
    p.add_argument("--no-checkpoint", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    common(p)

    p = sub.add_parser("decompose", help="translate-orbit decomposition of a path")
    p.add_argument("--path", required=True, dest="path_text")
    common(p)

    p = sub.add_parser("catalog", help="soundness sweep of the template catalog")
    p.add_argument("--max-param", type=int, default=10)
    common(p)

    return parser


def _emit(args: argparse.Namespace, record: dict, text: str) -> None:
    if args.output == "record":
        record["schema"] = RECORD_SCHEMA
        record["command"] = args.command
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _parse_list(text: str) -> EdgeLengthList:
    return EdgeLengthList.parse(text)


def _cmd_check(args) -> int:
    lst = _parse_list(args.list_text)
    if args.v is not None and args.v != lst.order:
        raise ParseError(f"--v {args.v} does not match derived order {lst.order}")
    two = condition_two(lst)
    one = condition_one(lst)
    record = {
        "list": lst.format(),
        "v": lst.order,
        "divisor_form_holds": two.holds,
        "sublist_form_holds": one.holds,
        "witness": None if two.holds else two.witness_text(),
    }
    _emit(args, record, (
        f"list {lst.format()} (v={lst.order}): "
        f"divisor form {two.witness_text()}; sublist form "
        f"{one.witness_text()}"
    ))
    return EXIT_OK if two.holds else EXIT_NEGATIVE


def _status_exit(status: Realizability) -> int:
    if status is Realizability.REALIZABLE:
        return EXIT_OK
    if status is Realizability.NOT_REALIZABLE:
        return EXIT_NEGATIVE
    return EXIT_UNKNOWN


def _trace_json(step) -> object:
    if step is None:
        return None
    name = type(step).__name__
    body = {}
    for f in step.__dataclass_fields__:
        value = getattr(step, f)
        body[f] = _trace_json(value) if hasattr(value, "__dataclass_fields__") else value
    return {"step": name, **body}


def _cmd_realize(args) -> int:
    lst = _parse_list(args.list_text)
    budget = args.budget if args.budget is not None else default_budget()
    if args.mode == "linear":
        if all(l in (1, 2, 3, 5) for l in lst.support):
            verdict = construct_linear(*lst.abcd(), budget=budget)
        else:
            out = search(lst, "linear", budget=budget)
            status = (
                Realizability.REALIZABLE if out.found is not None
                else Realizability.NOT_REALIZABLE if out.exhausted
                else Realizability.UNKNOWN
            )
            from .solver import RealizabilityVerdict, SearchStep

            verdict = RealizabilityVerdict(
                status=status, mode="linear", witness=out.found,
                trace=None if out.found is None else SearchStep(
                    lst.format(), "linear", "ascending", False, budget, out.nodes),
                reason=None if not out.exhausted else
                f"exhaustive search, certificate {out.certificate}",
            )
    else:
        verdict = decide_bhr(lst, budget=budget)
    record = {
        "list": lst.format(),
        "v": lst.order,
        "mode": args.mode,
        "status": verdict.status.value,
        "witness": None if verdict.witness is None else verdict.witness.format(),
        "reason": verdict.reason,
        "budget_note": verdict.budget_note,
        "trace": _trace_json(verdict.trace),
    }
    lines = [f"{lst.format()} (v={lst.order}, {args.mode}): {verdict.status.value}"]
    if verdict.witness is not None:
        lines.append(f"  witness {verdict.witness.format()}")
    if verdict.reason:
        lines.append(f"  reason: {verdict.reason}")
    if verdict.budget_note:
        lines.append(f"  budget: {verdict.budget_note}")
    _emit(args, record, "\n".join(lines))
    return _status_exit(verdict.status)


def _cmd_verify(args) -> int:
    lst = _parse_list(args.list_text)
    path = PathRealization.parse(args.path_text)
    report = validate(path, lst, args.mode)
    record = {
        "list": lst.format(),
        "path": path.format(),
        "mode": args.mode,
        "passed": report.passed,
        "perfect": report.perfect,
        "mismatch": report.mismatch,
    }
    _emit(args, record, f"{path.format()} vs {lst.format()}: {report}")
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _cmd_oracle(args) -> int:
    lst = _parse_list(args.list_text)
    budget = args.budget if args.budget is not None else default_budget()
    if args.count:
        n = count_realizations(lst, args.mode, cap=args.cap)
        _emit(args, {"list": lst.format(), "mode": args.mode, "count": n},
              f"{lst.format()} ({args.mode}): {n} realization(s) from vertex 0")
        return EXIT_OK if n else EXIT_NEGATIVE
    out = search(lst, args.mode, budget=budget, order=args.order, perfect=args.perfect)
    record = {
        "list": lst.format(),
        "mode": args.mode,
        "order": args.order,
        "perfect": args.perfect,
        "found": None if out.found is None else out.found.format(),
        "exhausted": out.exhausted,
        "nodes": out.nodes,
        "certificate": out.certificate,
    }
    if out.found is not None:
        text = f"{lst.format()} ({args.mode}): witness {out.found.format()} [{out.nodes} nodes]"
        code = EXIT_OK
    elif out.exhausted:
        text = (f"{lst.format()} ({args.mode}): no realization; search exhausted "
                f"[{out.nodes} nodes, certificate {out.certificate}]")
        code = EXIT_NEGATIVE
    else:
        text = f"{lst.format()} ({args.mode}): undecided within {out.nodes} nodes"
        code = EXIT_UNKNOWN
    _emit(args, record, text)
    return code


def _cmd_sweep(args) -> int:
    budget = args.budget if args.budget is not None else default_budget()
    checkpoint = args.checkpoint
    if checkpoint is None and args.v >= 12 and not args.no_checkpoint:
        checkpoint = f"sweep-v{args.v}.txt"
    report = sweep_conjecture(
        args.v, budget=budget, cap=max(args.cap, args.v if args.cap else 0),
        checkpoint_path=checkpoint, workers=args.workers,
    )
    record = {
        "v": report.v,
        "total": report.total,
        "agreements": report.agreements,
        "realizable": report.realizable,
        "condition_failing": report.condition_failing,
        "violations": [list(e.counts) for e in report.violations],
        "inconclusive": [list(e.counts) for e in report.inconclusive],
        "nodes": report.nodes,
    }
    text = (
        f"v={report.v}: {report.total} lists, {report.agreements} agreements, "
        f"{report.realizable} realizable, {report.condition_failing} condition-failing, "
        f"{len(report.violations)} violations, {len(report.inconclusive)} inconclusive "
        f"[{report.nodes} nodes]"
    )
    _emit(args, record, text)
    if report.violations:
        return EXIT_NEGATIVE
    if report.inconclusive:
        return EXIT_UNKNOWN
    return EXIT_OK


def _cmd_decompose(args) -> int:
    path = PathRealization.parse(args.path_text)
    v = path.order
    ok = verify_decomposition(path)
    diffs = difference_list(path, v)
    record = {
        "path": path.format(),
        "v": v,
        "connection": {str(g): m for g, m in sorted(diffs.items())},
        "decomposes": ok,
        "translates": ["[" + ",".join(map(str, t)) + "]" for t in translate_orbit(path)],
    }
    lines = [f"path {path.format()} on Z_{v}"]
    for g, t in enumerate(translate_orbit(path)):
        lines.append(f"  +{g}: [" + ",".join(map(str, t)) + "]")
    lines.append(
        f"decomposition of the Cayley multigraph from its differences: "
        f"{'verified' if ok else 'FAILED'}"
    )
    _emit(args, record, "\n".join(lines))
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_catalog(args) -> int:
    catalog = load_catalog()
    entries = catalog.soundness_sweep(range(0, args.max_param + 1))
    bad = [e for e in entries if not e.ok]
    record = {
        "templates": len(catalog.templates),
        "instantiations": len(entries),
        "quarantined": [
            {"id": e.template_id, "param": e.param, "error": e.error} for e in bad
        ],
    }
    lines = [
        f"{len(catalog.templates)} templates, {len(entries)} instantiations checked"
    ]
    for e in bad:
        lines.append(f"  QUARANTINED {e.template_id} at param {e.param}: {e.error}")
    if not bad:
        lines.append("all templates validate")
    _emit(args, record, "\n".join(lines))
    return EXIT_OK if not bad else EXIT_NEGATIVE


_HANDLERS = {
    "check": _cmd_check,
    "realize": _cmd_realize,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "sweep": _cmd_sweep,
    "decompose": _cmd_decompose,
    "catalog": _cmd_catalog,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return _HANDLERS[args.command](args)
    except (BhrError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
