"""Command line front end.

Every subcommand is a thin client over the HTTP service: by default the
requests go to an in-process copy of the app, and --server redirects the
same calls to a running instance (see the serve subcommand).

Exit codes: 0 on success, 1 when a check or bound fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import warnings

import httpx

from . import __version__
from .harness import SUITE_NAMES, Report


class CliInputError(Exception):
    pass


class CliFailure(Exception):
    pass


_FAMILY_ATOM = re.compile(r"[KECP][0-9]+\Z")


def _make_client(server: "str | None"):
    if server:
        return httpx.Client(base_url=server, timeout=None)
    # the in-process client's transport stack warns about its httpx version
    # pin; that has no bearing on local use
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

        from .service.app import app

        return TestClient(app)


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise CliInputError(f"cannot read {path!r}: {e}") from None


def _graph_payload(args) -> tuple[str, str]:
    """Resolve the graph argument to (text, api_format).

    Files are read client-side so a remote server never needs our paths.
    Auto detection: family expressions by shape, inline edge lists by ';'
    or newline, anything else that names an existing file by path.
    """
    value, fmt = args.graph, args.format
    if fmt == "path":
        text = sys.stdin.read() if value == "-" else _read_file(value)
        return text, "auto"
    if value == "-":
        return sys.stdin.read(), fmt
    if fmt != "auto":
        return value, fmt
    if "(" in value or _FAMILY_ATOM.match(value):
        return value, "family"
    if ";" in value or "\n" in value:
        return value, "edgelist"
    if os.path.exists(value):
        return _read_file(value), "auto"
    raise CliInputError(
        f"cannot interpret graph argument {value!r}; pass --format or a file path"
    )


def _parse_preorder(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise CliInputError(
            f"preorder must be comma-separated vertex numbers, got {text!r}"
        ) from None


def _fmt_detail(detail) -> str:
    if isinstance(detail, dict) and "message" in detail:
        return str(detail["message"])
    if isinstance(detail, list):  # request-validation errors
        bits = []
        for item in detail:
            loc = ".".join(str(p) for p in item.get("loc", ())[1:])
            bits.append(f"{loc}: {item.get('msg', '')}".strip(": "))
        return "; ".join(bits) or "invalid request"
    return str(detail)


def _post(client, path: str, payload: dict) -> dict:
    try:
        resp = client.post(path, json=payload)
    except httpx.HTTPError as e:
        raise CliInputError(f"cannot reach server: {e}") from None
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail")
        except Exception:
            detail = resp.text
        if resp.status_code >= 500:
            raise CliFailure(f"server error: {_fmt_detail(detail)}")
        raise CliInputError(_fmt_detail(detail))
    return resp.json()


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands ---------------------------------------------------------------


def cmd_solve(args, client) -> int:
    text, fmt = _graph_payload(args)
    data = _post(
        client,
        "/solve",
        {
            "graph": text,
            "format": fmt,
            "preorder": _parse_preorder(args.preorder),
            "first": args.first,
            "alice_passes": args.alice_passes,
            "bob_passes": args.bob_passes,
        },
    )
    lines = [f"{data['quantity']} = {data['value']}"]
    if not args.quiet:
        bm = data["best_move"]
        lines.append(f"best first move: {'none' if bm is None else bm}")
        lines.append(f"nodes: {data['nodes']}")
        lines.append(f"memo entries: {data['memo_entries']}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_col(args, client) -> int:
    text, fmt = _graph_payload(args)
    data = _post(client, "/col", {"graph": text, "format": fmt})
    _emit(args, f"col = {data['value']}\n")
    return 0


def cmd_info(args, client) -> int:
    text, fmt = _graph_payload(args)
    data = _post(client, "/graph/info", {"graph": text, "format": fmt})
    edges = " ".join(f"({u},{v})" for u, v in data["edges"])
    _emit(
        args,
        (
            f"vertices: {data['vertices']}\n"
            f"edges: {edges or 'none'}\n"
            f"max degree: {data['max_degree']}\n"
            f"coloring number: {data['coloring_number']}\n"
        ),
    )
    return 0


def cmd_verify(args, client) -> int:
    payload = {"suite": args.suite, "seed": args.seed, "jobs": args.jobs}
    if args.max_n is not None:
        payload["max_n"] = args.max_n
    if args.samples is not None:
        payload["samples"] = args.samples
    data = _post(client, "/verify", payload)
    reports = [Report.from_dict(rd) for rd in data["reports"]]
    if args.json:
        doc = {
            "passed": data["passed"],
            "reports": [
                r.to_json_dict(include_elapsed=args.timings) for r in reports
            ],
        }
        out = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    else:
        out = "\n".join(r.to_text(include_elapsed=args.timings) for r in reports)
    _emit(args, out)
    if not args.quiet:
        for rd in data["reports"]:
            if rd.get("elapsed_s") is not None:
                print(f"{rd['suite']}: {rd['elapsed_s']:.1f}s", file=sys.stderr)
    return 0 if data["passed"] else 1


def _fmt_turn(t: dict) -> str:
    parts = [f"turn {t['turn']}:"]
    if t.get("bob_move") is not None:
        branch = f"[{t['bob_branch']}]" if t.get("bob_branch") else ""
        parts.append(f"adversary={t['bob_move']}{branch}")
    inv = t.get("invariant")
    if inv is not None:
        parts.append("invariant=" + ("ok" if inv["ok"] else "FAIL"))
    if t.get("alice_move") is not None:
        parts.append(f"move={t['alice_move']}[{t['alice_branch']}]")
    parts.append("real=[" + ",".join(map(str, t["real"])) + "]")
    parts.append("companion=[" + ",".join(map(str, t["imagined"])) + "]")
    if t.get("ended"):
        parts.append(f"ended={t['ended']}")
    return " ".join(parts)


def cmd_transfer(args, client) -> int:
    text, fmt = _graph_payload(args)
    data = _post(
        client,
        "/transfer",
        {
            "graph": text,
            "format": fmt,
            "remove": args.remove,
            "preorder": _parse_preorder(args.preorder),
            "adversary": args.adversary,
        },
    )
    lines = [
        f"removed vertex: {data['removed']}",
        f"bound (companion value): {data['bound']}",
    ]
    if data["score"] is not None:
        lines.append(f"score: {data['score']}")
    if data["max_score"] is not None:
        lines.append(
            f"worst score: {data['max_score']} over {data['lines']} adversary lines"
        )
    lines.append(f"within bound: {'yes' if data['within_bound'] else 'no'}")
    lines.append(f"blocked choices: {data['blocked_choices']}")
    lines.append(f"substitutions: {data['substitutions']}")
    if data["lines"] is not None:
        lines.append(f"invariant failures: {data['invariant_failures']}")
        lines.append(f"bookkeeping failures: {data['bookkeeping_failures']}")
    if not args.quiet:
        lines.extend(_fmt_turn(t) for t in data["turns"])
    _emit(args, "\n".join(lines) + "\n")
    ok = (
        data["within_bound"]
        and not data["invariant_failures"]
        and not data["bookkeeping_failures"]
    )
    return 0 if ok else 1


def cmd_play(args, client) -> int:
    text, fmt = _graph_payload(args)
    info = _post(client, "/graph/info", {"graph": text, "format": fmt})
    n = info["vertices"]
    order = _parse_preorder(args.preorder)
    user = args.side
    print(f"marking game on vertices 0..{n - 1}; you play {user}")
    print("alice (minimizer) moves on even turns, bob (maximizer) on odd turns")

    def show() -> dict:
        sc = _post(
            client,
            "/ordering/scores",
            {"graph": text, "format": fmt, "ordering": order},
        )
        shown = ",".join(map(str, order)) or "(empty)"
        print(
            f"  order: {shown}  scores: {','.join(map(str, sc['scores']))}"
            f"  max: {sc['current_max']}"
        )
        return sc

    if order:
        show()
    while len(order) < n:
        mover = "alice" if len(order) % 2 == 0 else "bob"
        if mover == user:
            try:
                raw = input(f"[{mover}] your move: ").strip()
            except (EOFError, KeyboardInterrupt):
                print("\naborted")
                return 0
            if not raw:
                continue
            try:
                v = int(raw)
            except ValueError:
                print(f"not a vertex number: {raw!r}")
                continue
            if not 0 <= v < n or v in order:
                print(f"illegal move: {v}")
                continue
        else:
            data = _post(
                client,
                "/solve",
                {"graph": text, "format": fmt, "preorder": order, "first": "auto"},
            )
            v = data["best_move"]
            print(f"[{mover}] engine plays {v}")
        order.append(v)
        show()
    sc = _post(
        client, "/ordering/scores", {"graph": text, "format": fmt, "ordering": order}
    )
    print(f"final score: {sc['final_score']}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


# -- parser ---------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--server", metavar="URL", help="send requests to a running instance"
    )
    common.add_argument(
        "--quiet", action="store_true", help="print the result line(s) only"
    )
    common.add_argument(
        "--output", metavar="FILE", help="write the command output to a file"
    )

    graphish = argparse.ArgumentParser(add_help=False)
    graphish.add_argument(
        "graph",
        help="family expression, inline edge list (';'-separated), file path, or -",
    )
    graphish.add_argument(
        "--format",
        choices=("auto", "family", "edgelist", "path"),
        default="auto",
        help="how to read the graph argument (default: auto-detect)",
    )

    p = argparse.ArgumentParser(
        prog="marklab",
        description="exact solver and verification harness for the graph marking game",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser(
        "solve", parents=[common, graphish], help="value and best move of a game"
    )
    sp.add_argument("--preorder", default="", help="comma-separated preordered vertices")
    sp.add_argument(
        "--first",
        choices=("auto", "alice", "bob"),
        default="auto",
        help="who moves next (auto: alice after an even preorder)",
    )
    sp.add_argument("--alice-passes", type=int, default=0, metavar="K")
    sp.add_argument("--bob-passes", type=int, default=0, metavar="K")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser(
        "col", parents=[common, graphish], help="coloring number (greedy bound)"
    )
    sp.set_defaults(func=cmd_col)

    sp = sub.add_parser("info", parents=[common, graphish], help="basic graph facts")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser(
        "verify", parents=[common], help="run a verification suite and report"
    )
    sp.add_argument("suite", choices=SUITE_NAMES + ("all",))
    sp.add_argument("--max-n", type=int, default=None, dest="max_n")
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true", help="emit the report as JSON")
    sp.add_argument(
        "--timings", action="store_true", help="include elapsed time in the report"
    )
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser(
        "transfer",
        parents=[common, graphish],
        help="drive the vertex-removal strategy transfer and audit it",
    )
    sp.add_argument("--remove", type=int, required=True, metavar="X")
    sp.add_argument("--preorder", default="", help="preorder in full-graph labels")
    sp.add_argument(
        "--adversary",
        choices=("optimal", "exhaustive"),
        default="optimal",
        help="one optimal line or every adversary line",
    )
    sp.set_defaults(func=cmd_transfer)

    sp = sub.add_parser(
        "play", parents=[common, graphish], help="play the game against the engine"
    )
    sp.add_argument(
        "--as",
        dest="side",
        choices=("alice", "bob"),
        default="alice",
        help="your side (default alice)",
    )
    sp.add_argument("--preorder", default="", help="start from this partial order")
    sp.set_defaults(func=cmd_play)

    sp = sub.add_parser("serve", help="run the HTTP service with uvicorn")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    sp.set_defaults(func=cmd_serve)

    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.func is cmd_serve:
            return cmd_serve(args)
        client = _make_client(args.server)
        try:
            return args.func(args, client)
        finally:
            client.close()
    except CliInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except CliFailure as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
