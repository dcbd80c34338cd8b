"""Command-line front end: exact analyses with deterministic JSON reports.

Every report field is exact (integers or "a/b" strings); the only
non-deterministic field is wall_clock_s, which callers comparing reports
should drop.  Exit codes: 0 all verdicts pass / enumeration completed,
1 a validation failed (the witness is printed), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .chardata import (
    ParseError,
    ValidationError,
    mixed_value_decomposition,
    psl2_slice,
    psl33_slice,
    validate_orthogonality,
)
from .constructions import (
    BadPattern,
    build_psl2_units,
    build_psl33_units,
    element_profiles,
    valenti_search,
    verify_unit_group,
)
from .finitefield import square_lines
from .helpengine import feasible_distributions
from .oracle import cached_group, check_square_criterion, enumerate_group
from .patterns import gap_report, group_patterns


def _run_report(command: str, params: dict, result: dict, ok: bool,
                t0: float) -> dict:
    return {
        "command": command,
        "params": params,
        "result": result,
        "ok": ok,
        "wall_clock_s": round(time.monotonic() - t0, 3),
    }


def _emit(report: dict, json_path: str | None) -> int:
    text = json.dumps(report, indent=2, sort_keys=True)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(f"[{report['command']}] ok={report['ok']}")
    if not report["ok"]:
        witnesses = report["result"].get("witnesses") or report["result"].get(
            "problems"
        )
        if witnesses:
            print("witness:", json.dumps(witnesses[:3]))
    if not json_path:
        print(text)
    return 0 if report["ok"] else 1


def _parse_pattern(text: str, parser) -> set[int]:
    try:
        return {int(tok) for tok in text.split(",") if tok.strip()}
    except ValueError:
        parser.error(f"bad --pattern {text!r}: expected comma-separated integers")


def cmd_chartab(args, parser) -> int:
    t0 = time.monotonic()
    table = psl33_slice() if args.group == "psl33" else psl2_slice(args.p)
    ortho = validate_orthogonality(table)
    result = {"table": table.to_json(), "orthogonality": ortho}
    report = _run_report(
        "chartab", {"group": args.group, "p": args.p}, result, ortho["ok"], t0
    )
    return _emit(report, args.json)


def cmd_help_scan(args, parser) -> int:
    t0 = time.monotonic()
    if args.group == "psl33":
        table = psl33_slice()
        scan = feasible_distributions(list(table.chars), 3, 3, ("a", "b"))
        expected: list[int] = []
    else:
        if args.p is None:
            parser.error("--p is required with --group psl2")
        table = psl2_slice(args.p)
        scan = feasible_distributions(list(table.chars), args.p, 2, ("c", "d"))
        expected = [(args.p + 1) // 2]
    result = scan.to_json()
    result["expected_feasible"] = expected
    ok = scan.feasible == expected
    print("feasible x:", scan.feasible)
    report = _run_report(
        "help-scan", {"group": args.group, "p": args.p}, result, ok, t0
    )
    return _emit(report, args.json)


def cmd_construct(args, parser) -> int:
    t0 = time.monotonic()
    if args.kind == "psl33":
        ug = build_psl33_units()
        params = {"kind": "psl33"}
    else:
        if args.p is None or args.pattern is None:
            parser.error("construct psl2 requires --p and --pattern")
        members = _parse_pattern(args.pattern, parser)
        try:
            ug = build_psl2_units(args.p, members)
        except (BadPattern, ValueError) as exc:
            parser.error(str(exc))
        params = {"kind": "psl2", "p": args.p, "pattern": sorted(members)}
    result = verify_unit_group(ug)
    if not args.verify:
        # enumeration-only view: keep the elements, drop the verdict fields
        result = {
            "group": result["group"],
            "order": result["order"],
            "elements": result["elements"],
        }
        ok = True
    else:
        ok = result["ok"]
        if args.kind == "psl2":
            profiles = element_profiles(ug)
            witness = valenti_search(profiles, args.p, group_patterns(args.p))
            result["valenti_witness"] = witness
    report = _run_report("construct", params, result, ok, t0)
    return _emit(report, args.json)


def cmd_patterns(args, parser) -> int:
    t0 = time.monotonic()
    result = gap_report(args.p)
    if not args.list_missing:
        result.pop("missing", None)
    report = _run_report(
        "patterns", {"p": args.p, "list_missing": args.list_missing},
        result, True, t0,
    )
    return _emit(report, args.json)


def cmd_oracle(args, parser) -> int:
    t0 = time.monotonic()
    if args.group == "psl3":
        group = enumerate_group("psl3", 3, refresh=args.refresh)
        p = 3
    else:
        if args.q is None:
            parser.error("--q is required with --group psl2")
        group = enumerate_group("psl2", args.q, refresh=args.refresh)
        p = int(round(args.q ** 0.5))
    classes = group.order_p_classes(p)
    result = {
        "group": group.name,
        "order": group.order,
        "exponent": group.exponent(),
        "order_p_classes": [
            {"size": size} for _rep, size in sorted(classes, key=lambda c: c[1])
        ],
    }
    report = _run_report(
        "oracle", {"group": args.group, "q": args.q, "refresh": args.refresh},
        result, True, t0,
    )
    return _emit(report, args.json)


def _invariant_checks(jobs: int) -> list[dict]:
    def ortho(p):
        def run():
            return validate_orthogonality(psl2_slice(p))["ok"]
        return f"psl2 orthogonality p={p}", run

    def checks():
        yield ortho(3)
        yield ortho(5)
        yield ortho(7)
        yield ortho(11)
        yield ortho(13)
        yield "psl33 orthogonality", lambda: validate_orthogonality(psl33_slice())["ok"]
        yield "psl33 degree decomposition", lambda: mixed_value_decomposition(
            psl33_slice(), "a", "b", "chi12", "chi16a"
        )["ok"]
        yield "square lines p=7", lambda: square_lines(7) == (4, 4)
        yield "oracle |PSL(2,9)| = 360", lambda: cached_group("psl2", 9).order == 360
        yield "oracle |PSL(3,3)| = 5616", lambda: cached_group("psl3", 3).order == 5616
        yield "square-class conjugacy criterion p=3", lambda: check_square_criterion(3)
        yield "pattern normalization p=11", lambda: len(group_patterns(11)) <= (11 * 11 - 1) // 2
        yield (
            "construct psl2 p=5 {1,2}",
            lambda: verify_unit_group(build_psl2_units(5, {1, 2}))["ok"],
        )
        yield (
            "construct psl33",
            lambda: verify_unit_group(build_psl33_units())["ok"],
        )

    named = list(checks())
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(lambda nc: nc[1](), named))
    else:
        outcomes = [run() for _name, run in named]
    return [
        {"check": name, "ok": bool(ok)}
        for (name, _run), ok in zip(named, outcomes)
    ]


def cmd_invariants(args, parser) -> int:
    t0 = time.monotonic()
    verdicts = _invariant_checks(args.jobs)
    ok = all(v["ok"] for v in verdicts)
    for v in verdicts:
        print(f"  {'PASS' if v['ok'] else 'FAIL'}  {v['check']}")
    report = _run_report(
        "invariants", {"jobs": args.jobs}, {"checks": verdicts}, ok, t0
    )
    return _emit(report, args.json)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH",
                        help="write the full JSON report to PATH")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="parallelism for independent checks")
    parser = argparse.ArgumentParser(
        prog="grunits",
        description="Exact analyses of p-subgroups of units in rational "
        "group algebras of PSL(2,p^2) and PSL(3,3).",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add(*a, **kw):
        return sub.add_parser(*a, parents=[common], **kw)

    p_chartab = add("chartab", help="character-table slice")
    p_chartab.add_argument("--group", choices=["psl2", "psl33"], required=True)
    p_chartab.add_argument("--p", type=int, default=None)
    p_chartab.set_defaults(func=cmd_chartab)

    p_scan = add("help-scan", help="HeLP feasibility scan")
    p_scan.add_argument("--group", choices=["psl2", "psl33"], required=True)
    p_scan.add_argument("--p", type=int, default=None)
    p_scan.set_defaults(func=cmd_help_scan)

    p_con = add("construct", help="build and verify unit subgroups")
    p_con.add_argument("kind", choices=["psl2", "psl33"])
    p_con.add_argument("--p", type=int, default=None)
    p_con.add_argument("--pattern", metavar="a,b,c", default=None)
    p_con.add_argument("--verify", action="store_true")
    p_con.set_defaults(func=cmd_construct)

    p_pat = add("patterns", help="balanced vs realizable patterns")
    p_pat.add_argument("--p", type=int, required=True)
    p_pat.add_argument("--list-missing", action="store_true")
    p_pat.set_defaults(func=cmd_patterns)

    p_or = add("oracle", help="brute-force group enumeration")
    p_or.add_argument("--group", choices=["psl2", "psl3"], required=True)
    p_or.add_argument("--q", type=int, default=None)
    p_or.add_argument("--refresh", action="store_true",
                      help="rebuild the enumeration cache")
    p_or.set_defaults(func=cmd_oracle)

    p_inv = add("invariants", help="cross-module coherence gate")
    p_inv.set_defaults(func=cmd_invariants)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cmd == "chartab" and args.group == "psl2" and args.p is None:
        parser.error("--p is required with --group psl2")
    try:
        return args.func(args, parser)
    except (ValidationError, ParseError) as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
