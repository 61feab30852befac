"""Command line front end.

Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.
JSON output is wrapped in an envelope
``{"artifact_version", "command", "inputs", "result"}`` with sorted keys;
integers that can grow large are emitted as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, TextIO

from og10 import __version__
from og10.betti import (
    DEFAULT_MAX_ODD,
    DEFAULT_SEARCH_LIMIT,
    BettiVector,
    check_og10,
    search_feasible_og10,
)
from og10.degrees import evaluate_m5A1, identity_checks, is_enumeratively_valid
from og10.errors import DomainError
from og10.fibration import build_og10_model, total_euler, trace_rows
from og10.prym import NodalCoverModel, count_prym_strata, euler_prym, euler_prym_bruteforce
from og10.singularity import (
    QUINTIC,
    delta_total,
    enumerate_configurations,
    geometric_genus,
    mu_total,
)


def envelope(command: str, inputs: dict[str, Any], result: Any) -> str:
    payload = {
        "artifact_version": __version__,
        "command": command,
        "inputs": inputs,
        "result": result,
    }
    return json.dumps(payload, sort_keys=True, indent=2)


def _count_tangent(args: argparse.Namespace, out: TextIO) -> None:
    count = evaluate_m5A1(args.degree)
    if args.json:
        result = {"degree": args.degree, "count": str(count), "valid_range": is_enumeratively_valid(args.degree)}
        print(envelope("count-tangent", {"degree": args.degree}, result), file=out)
        return
    print(count, file=out)
    if not is_enumeratively_valid(args.degree):
        print(f"warning: degree {args.degree} < 3 is outside enumerative validity", file=sys.stderr)


def _strata(args: argparse.Namespace, out: TextIO) -> None:
    rows = []
    for config in enumerate_configurations(args.mu_max):
        genus = geometric_genus(QUINTIC, config)
        rows.append(
            {
                "configuration": config.to_json(),
                "label": config.label(),
                "mu_tot": mu_total(config),
                "delta": delta_total(config),
                "geometric_genus": genus,
                "genus_one": genus == 1,
            }
        )
    if args.json:
        print(envelope("strata", {"mu_max": args.mu_max}, rows), file=out)
        return
    print(f"{'configuration':<12} {'mu_tot':>6} {'delta':>5} {'genus':>5}  genus-1", file=out)
    for row in rows:
        flag = "yes" if row["genus_one"] else ""
        print(
            f"{row['label']:<12} {row['mu_tot']:>6} {row['delta']:>5} {row['geometric_genus']:>5}  {flag}",
            file=out,
        )
    print(f"{len(rows)} configurations", file=out)


def _prym_euler(args: argparse.Namespace, out: TextIO) -> None:
    model = NodalCoverModel(args.nodes, args.genus)
    inputs = {"nodes": args.nodes, "genus": args.genus, "brute_force": args.brute_force}
    if args.brute_force:
        value = euler_prym_bruteforce(model)
        strata, nonzero = count_prym_strata(model)
        closed = euler_prym(model)
        result = {"euler": value, "closed_form": closed, "strata": strata, "nonzero_strata": nonzero}
    else:
        value = euler_prym(model)
        result = {"euler": value}
    if args.json:
        print(envelope("prym-euler", inputs, result), file=out)
        return
    print(value, file=out)
    if args.brute_force:
        print(f"# {strata} strata enumerated, {nonzero} nonzero; closed form {closed}", file=sys.stderr)


def _og10_euler(args: argparse.Namespace, out: TextIO) -> None:
    model = build_og10_model()
    total = total_euler(model)
    rows = trace_rows(model)
    if args.json:
        result: dict[str, Any] = {"euler": str(total)}
        if args.trace:
            result["strata"] = [
                {**row, "base_euler": str(row["base_euler"]), "contribution": str(row["contribution"])}
                for row in rows
            ]
        print(envelope("og10-euler", {"trace": args.trace}, result), file=out)
        return
    if args.trace:
        print(f"{'stratum':<10} {'mu_tot':>6} {'genus':>5} {'fiber':>5}  {'base':<22} contribution", file=out)
        for row in rows:
            print(
                f"{row['label']:<10} {row['mu_tot']:>6} {row['geometric_genus']:>5} "
                f"{row['fiber_euler']:>5}  {row['base_euler']!s:<22} {row['contribution']}",
                file=out,
            )
    print(total, file=out)


def _betti_check(args: argparse.Namespace, out: TextIO) -> int:
    try:
        payload = json.loads(Path(args.file).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read Betti vector from {args.file}: {exc}") from None
    vector = BettiVector.from_json(payload)
    report = check_og10(vector)
    if args.json:
        print(envelope("betti check", {"file": str(args.file), "b": vector.to_json()}, report.to_json()), file=out)
    else:
        print(f"b2 = {report.b2_actual} (expected {report.b2_expected}): {_ok(report.b2_holds)}", file=out)
        print(f"b0 = 1, b1 = 0: {_ok(report.b0_is_one and report.b1_is_zero)}", file=out)
        print(f"duality: {_ok(report.duality_holds)}", file=out)
        print(f"salamon: {report.salamon.left} vs {report.salamon.right}: {_ok(report.salamon_holds)}", file=out)
        for k, bound, actual in report.verbitsky_violations:
            print(f"verbitsky: b{2 * k} = {actual} < {bound}: FAIL", file=out)
        if not report.verbitsky_violations:
            print("verbitsky: ok", file=out)
        print(f"euler: {report.euler_value} (expected {report.euler_expected}): {_ok(report.euler_holds)}", file=out)
    return 0 if report.passed else 1


def _betti_search(args: argparse.Namespace, out: TextIO) -> None:
    limit = None if args.limit == 0 else args.limit
    found = search_feasible_og10(args.max_odd, limit=limit)
    if args.json:
        inputs = {"max_odd": args.max_odd, "limit": args.limit}
        result = {"count": len(found), "vectors": [v.to_json() for v in found]}
        print(envelope("betti search", inputs, result), file=out)
        return
    for v in found:
        print(" ".join(map(str, v.values[: 2 * v.n + 1])), file=out)
    print(f"{len(found)} feasible vectors (b0..b10 shown; rest by duality)", file=out)


def _identities(args: argparse.Namespace, out: TextIO) -> int:
    checks = identity_checks()
    if args.json:
        result = [
            {"name": c.name, "left": str(c.left), "right": str(c.right), "equal": c.equal} for c in checks
        ]
        print(envelope("identities", {}, result), file=out)
    else:
        for c in checks:
            print(f"{c.name}: {c.left} = {c.right} {_ok(c.equal)}", file=out)
    return 0 if all(c.equal for c in checks) else 1


def _ok(flag: bool) -> str:
    return "ok" if flag else "FAIL"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="og10", description="Exact computation of the Euler characteristic of OG10 manifolds."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("count-tangent", help="number of 5-tangent hyperplanes to a degree d hypersurface in P^5")
    p.add_argument("--degree", "-d", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_count_tangent)

    p = sub.add_parser("strata", help="singularity configurations on a plane quintic")
    p.add_argument("--mu-max", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_strata)

    p = sub.add_parser("prym-euler", help="Euler characteristic of a compactified Prym")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--genus", type=int, required=True, help="genus of the normalization")
    p.add_argument("--brute-force", action="store_true", help="enumerate all strata")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_prym_euler)

    p = sub.add_parser("og10-euler", help="Euler characteristic of OG10")
    p.add_argument("--trace", action="store_true", help="show the per-stratum table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_og10_euler)

    betti = sub.add_parser("betti", help="Betti number constraints")
    betti_sub = betti.add_subparsers(dest="betti_command", required=True, metavar="ACTION")
    p = betti_sub.add_parser("check", help="check a Betti vector against the OG10 constraints")
    p.add_argument("--file", "-f", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_betti_check)
    p = betti_sub.add_parser("search", help="enumerate feasible OG10 Betti vectors")
    p.add_argument("--max-odd", type=int, default=DEFAULT_MAX_ODD, help="upper bound on b3, b5, b7, b9")
    p.add_argument("--limit", type=int, default=DEFAULT_SEARCH_LIMIT, help="stop after this many (0: all)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_betti_search)

    p = sub.add_parser("identities", help="numerical identities around the 5-tangent count")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_identities)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code = args.func(args, out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0 if code is None else code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
