"""Command-line client for the service.

Every subcommand issues requests against the FastAPI app in process, prints
a human-readable summary to stdout and writes machine-readable artifacts
only when asked to via --json/--dot.  Exit status: 0 on success, 1 when a
verification check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys


def _client():
    import warnings
    with warnings.catch_warnings():
        # recent starlette deprecates httpx in favour of httpx2, which is not
        # installable here; the fallback path still works
        warnings.filterwarnings("ignore", message="Using `httpx` with")
        from fastapi.testclient import TestClient
    from . import service
    return TestClient(service.app)


def _write_json(path: str, payload) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _post(client, path, payload):
    response = client.post(path, json=payload)
    if response.status_code != 200:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(2)
    return response


def _print_table(headers, rows) -> None:
    rows = [[str(c) for c in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    line = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
    print(line)
    print("-" * len(line))
    for row in rows:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)))


def cmd_build_grassmannian(args) -> int:
    client = _client()
    data = _post(client, "/grassmannian", {"n": args.n}).json()
    p = data["parameters"]
    print(f"G2({args.n}): ({p['v']}_{p['r']}, {p['b']}_{p['k']}) configuration"
          f" [{data['name']}]")
    print(f"regular={p['regular']} linear={p['linear']} binomial={p['binomial']}")
    if args.json:
        _write_json(args.json, data)
    if args.dot:
        dot = _post(client, "/dot", {"n": args.n, "which": "grassmannian"})
        _write_text(args.dot, dot.text)
    return 0


def cmd_hyperplanes(args) -> int:
    client = _client()
    data = _post(client, "/hyperplanes",
                 {"n": args.n, "oracle": args.oracle}).json()
    print(f"{data['count']} geometric hyperplanes of G2({args.n}) "
          f"({data['method']})")
    for h in data["hyperplanes"][:5]:
        print(f"  {h['partition']}: {' '.join(h['points'])}")
    if data["count"] > 5:
        print(f"  ... ({data['count'] - 5} more)")
    if args.json:
        _write_json(args.json, data)
    return 0


def cmd_veldkamp(args) -> int:
    client = _client()
    data = _post(client, "/veldkamp", {"n": args.n}).json()
    print(f"Veldkamp space of G2({args.n}): {data['points']} points, "
          f"{data['lines']} lines")
    census = data.get("census")
    if args.census:
        if census is None:
            print("error: census is only classified for n=7", file=sys.stderr)
            return 2
        print()
        print("Point types")
        _print_table(
            ["Type", "Form", "Constituents", "Number"],
            [[r["type"], r["form"], r["constituents"], r["number"]]
             for r in census["point_types"]])
        print()
        print("Line types")
        _print_table(
            ["Type", "Forms", "Core composition", "Size", "Number"],
            [[r["type"], " ".join(r["forms"]), r["core"], r["core_size"], r["number"]]
             for r in census["line_types"]])
        print()
        absent = all(v == 0 for v in census["forbidden_types"].values())
        names = ", ".join(census["forbidden_types"])
        print(f"absent line types ({names}): {'none occur' if absent else 'PRESENT'}")
        lo, hi = census["lines_per_point"]
        print(f"lines per point: {lo if lo == hi else (lo, hi)}")
        print(f"projective: {census['projective']}")
    if args.json:
        _write_json(args.json, data)
    return 0


def cmd_polar(args) -> int:
    client = _client()
    data = _post(client, "/polar", {"n": args.n, "what": args.what}).json()
    print(f"{data['kind']}: {len(data['points'])} points, "
          f"{len(data['lines'])} lines")
    for key, value in sorted(data["details"].items()):
        if key == "point_map":
            continue
        print(f"  {key}: {value}")
    if args.json:
        _write_json(args.json, data)
    return 0


def cmd_magic_line(args) -> int:
    client = _client()
    payload = {"n": args.n, "all": args.all}
    if not args.all:
        payload["pivot"] = args.pivot
    data = _post(client, "/magic-line", payload).json()
    failed = False
    for d in data["decompositions"]:
        print(f"pivot {d['pivot']} (vertex {d['vertex']}):")
        _print_table(
            ["Sector", "Points", "Lines"],
            [[name, len(sector["points"]), len(sector["lines"])]
             for name, sector in d["sectors"].items()])
        print(f"  induced lines inside the cone: {d['cone_induced_line_count']}")
        for report in d["reports"]:
            status = "PASS" if report["ok"] else "FAIL"
            print(f"  {status}  {report['name']}")
            if not report["ok"]:
                failed = True
                first = next(c for c in report["checks"] if not c["ok"])
                print(f"        {first['name']}: {first['detail']}")
        print()
    if args.json:
        _write_json(args.json, data)
    if args.dot:
        dot = _post(client, "/dot",
                    {"n": args.n, "which": "magic-line", "pivot": args.pivot})
        _write_text(args.dot, dot.text)
    return 1 if failed else 0


def cmd_verify_all(args) -> int:
    client = _client()
    data = _post(client, "/verify-all", {}).json()
    for check in data["checks"]:
        status = "PASS" if check["ok"] else "FAIL"
        print(f"{status}  {check['name']}: {check['detail']}")
    if args.json:
        _write_json(args.json, data)
    if not data["ok"]:
        first = next(c for c in data["checks"] if not c["ok"])
        print(f"first failure: {first['name']}: {first['detail']}", file=sys.stderr)
        return 1
    print("all checks passed")
    return 0


def cmd_serve(args) -> int:
    import uvicorn
    from . import service
    uvicorn.run(service.app, host=args.host, port=args.port)
    return 0


def _add_common(parser, default_n=7):
    parser.add_argument("--n", type=int, default=default_n,
                        help="ground set size (default %(default)s)")
    parser.add_argument("--json", metavar="PATH", help="write the response as JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="veldkamp",
        description="Pair Grassmannians, geometric hyperplanes, Veldkamp "
                    "spaces and their polar subgeometries.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-grassmannian", help="build the pair Grassmannian")
    _add_common(p)
    p.add_argument("--dot", metavar="PATH", help="write the collinearity graph as DOT")
    p.set_defaults(func=cmd_build_grassmannian)

    p = sub.add_parser("hyperplanes", help="enumerate geometric hyperplanes")
    _add_common(p)
    p.add_argument("--oracle", action="store_true",
                   help="use the exhaustive subset-scan oracle instead of backtracking")
    p.set_defaults(func=cmd_hyperplanes)

    p = sub.add_parser("veldkamp", help="build the Veldkamp space")
    _add_common(p)
    p.add_argument("--census", action="store_true",
                   help="print the point/line classification tables")
    p.set_defaults(func=cmd_veldkamp)

    p = sub.add_parser("polar", help="extract a polar subgeometry")
    _add_common(p)
    p.add_argument("--what", required=True,
                   choices=["symplectic", "quadric", "grassmannian", "heptad"])
    p.set_defaults(func=cmd_polar)

    p = sub.add_parser("magic-line", help="decompose the polar space for a pivot")
    _add_common(p)
    p.add_argument("--pivot", type=int, help="pivot element (1..n)")
    p.add_argument("--all", action="store_true", help="all pivots")
    p.add_argument("--dot", metavar="PATH",
                   help="write the sector-colored collinearity graph as DOT")
    p.set_defaults(func=cmd_magic_line)

    p = sub.add_parser("verify-all", help="run the full verification sweep")
    _add_common(p)
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def _validate(parser, args) -> None:
    n = getattr(args, "n", None)
    if n is not None and not 3 <= n <= 9:
        parser.error(f"--n must be between 3 and 9, got {n}")
    if args.command == "magic-line":
        if not args.all and args.pivot is None:
            parser.error("magic-line needs --pivot or --all")
        if args.pivot is not None and not 1 <= args.pivot <= args.n:
            parser.error(f"--pivot must be between 1 and {args.n}, got {args.pivot}")
        if args.dot and args.pivot is None:
            parser.error("--dot needs an explicit --pivot")
    if args.command in ("polar", "magic-line") and n != 7:
        parser.error(f"{args.command} is defined for --n 7")
    if args.command == "verify-all" and n != 7:
        parser.error("verify-all runs the ground-size-7 suite; use --n 7")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
