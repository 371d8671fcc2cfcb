"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .bds import enumerate_bds
from .dynkin import Diagram
from .export import weight_diagram_dot
from .oracle import DEFAULT_BOUND, OracleBoundExceeded, oracle_check
from .root_core import LieType, RootSystemError, root_system
from .series import count_series, expected_bds_count
from .vogan import DatumError, admissible_data, compact_datum, compact_dynkin, describe, make_vogan


class UsageError(Exception):
    pass


def _datum(type_text: str, node: int):
    try:
        return make_vogan(LieType.parse(type_text), node)
    except (DatumError, RootSystemError) as exc:
        raise UsageError(str(exc)) from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def classify_report(vd) -> dict:
    cd = compact_datum(vd)
    k = compact_dynkin(cd, vd.rs)
    systems = enumerate_bds(vd, None if vd.hermitian else cd)
    count = count_series(vd)
    return {
        "type": str(vd.type),
        "nu": vd.node,
        "hermitian": vd.hermitian,
        "highest_root": list(vd.rs.highest_root),
        "compact": cd.to_json(),
        "k_components": [str(t) for t, _ in k.component_types()],
        "systems": [s.to_json() for s in systems],
        "series": {"total": count.total, "bds": count.bds, "hermitian": count.hermitian},
    }


def cmd_classify(args) -> int:
    vd = _datum(args.type, args.nu)
    if args.json:
        print(_dump(classify_report(vd)))
        return 0
    rs = vd.rs
    cd = compact_datum(vd)
    g = Diagram(tuple(f"phi{i + 1}" for i in range(rs.rank)), rs.cartan)
    out = [describe(vd, cd), g.render("g diagram:"), compact_dynkin(cd, rs).render("k diagram:")]
    systems = enumerate_bds(vd, None if vd.hermitian else cd)
    out.append(f"Borel-de Siebenthal positive systems containing P_k: {len(systems)}")
    out += [f"  [{i + 1}] " + s.describe(rs.rank) for i, s in enumerate(systems)]
    count = count_series(vd)
    out.append(f"discrete series per infinitesimal character: {count.total}"
               f" (Borel-de Siebenthal: {count.bds}{', hermitian' if count.hermitian else ''})")
    if args.dump_roots:
        out.append(rs.dump().rstrip("\n"))
    print("\n".join(out))
    return 0


def cmd_export_dot(args) -> int:
    sys.stdout.write(weight_diagram_dot(_datum(args.type, args.nu)))
    return 0


def cmd_dump_roots(args) -> int:
    try:
        rs = root_system(LieType.parse(args.type))
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc
    sys.stdout.write(rs.dump())
    return 0


def cmd_oracle_check(args) -> int:
    vd = _datum(args.type, args.nu)
    try:
        report = oracle_check(vd, args.oracle_bound)
    except OracleBoundExceeded as exc:
        print(f"skipped: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(_dump(report))
    else:
        verdict = "OK" if report["ok"] else "MISMATCH"
        print(f"{verdict} {vd}: {report['bds_brute']} = {report['bds_enumerated']}"
              f" (positive systems {report['positive_systems']}, |W_g|/|W_k| {report['weyl_quotient']})")
    return 0 if report["ok"] else 1


def survey_rows(max_rank: int, oracle: bool = False, bound: int = DEFAULT_BOUND) -> List[dict]:
    rows = []
    for vd in admissible_data(max_rank):
        count = count_series(vd)
        row = {
            "type": str(vd.type),
            "nu": vd.node,
            "hermitian": vd.hermitian,
            "total": count.total,
            "bds": count.bds,
            "expected": expected_bds_count(vd),
            "oracle": None,
        }
        if oracle:
            try:
                row["oracle"] = "ok" if oracle_check(vd, bound)["ok"] else "mismatch"
            except OracleBoundExceeded:
                row["oracle"] = "skipped"
        row["ok"] = row["bds"] == row["expected"] and row["oracle"] != "mismatch"
        rows.append(row)
    return rows


def cmd_survey(args) -> int:
    max_rank = 8 if args.all else args.max_rank
    rows = survey_rows(max_rank, args.oracle, args.oracle_bound)
    if args.json:
        print(_dump(rows))
    else:
        print(f"{'type':<5} {'nu':>3} {'kind':<13} {'|Wg/Wk|':>8} {'bds':>4} {'thm':>4}  oracle")
        for r in rows:
            kind = "hermitian" if r["hermitian"] else "non-hermitian"
            flag = "" if r["ok"] else "  <-- MISMATCH"
            print(f"{r['type']:<5} {r['nu']:>3} {kind:<13} {r['total']:>8} {r['bds']:>4}"
                  f" {r['expected']:>4}  {r['oracle'] or '-'}{flag}")
        for r in rows:
            if r["oracle"] == "skipped":
                print(f"notice: oracle skipped for {r['type']} nu={r['nu']} (bound {args.oracle_bound})",
                      file=sys.stderr)
    return 0 if all(r["ok"] for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bdsroots",
        description="Borel-de Siebenthal positive root systems of equi-rank real forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def datum_args(p):
        p.add_argument("type", help="Lie type, e.g. B4, E6")
        p.add_argument("nu", type=int, help="painted simple root (1-based)")

    p = sub.add_parser("classify", help="compact data and all Borel-de Siebenthal systems")
    datum_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--dump-roots", action="store_true", help="append the root list")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("export-dot", help="DOT digraph of the weights of p")
    datum_args(p)
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("oracle-check", help="brute-force equivalence check")
    datum_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle-bound", type=int, default=DEFAULT_BOUND)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("survey", help="table of counts over all admissible data")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--all", action="store_true", help="all ranks up to 8")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    p.add_argument("--oracle-bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("dump-roots", help="canonical root list of a Lie type")
    p.add_argument("type")
    p.set_defaults(func=cmd_dump_roots)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
