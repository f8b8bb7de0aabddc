"""Command-line client for the coxstat service.

By default the CLI talks to an in-process instance of the HTTP app, so no
server is needed; ``--server http://host:port`` points it at a running one
instead.  Machine formats (json, csv) are byte-stable across runs for fixed
inputs.

Exit codes: 0 success (and equal, for comparisons), 1 verification or
comparison mismatch, 2 usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any

USAGE_ERROR = 2
MISMATCH_ERROR = 1


def _client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server)
    import warnings

    with warnings.catch_warnings():
        # starlette's test client is the supported in-process transport here;
        # its httpx pairing warning is not actionable for CLI users
        warnings.filterwarnings("ignore", module=r"fastapi\.testclient")
        warnings.filterwarnings("ignore", message=r"Using `httpx` with `starlette")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _post(client, path: str, payload: dict) -> dict:
    reply = client.post(path, json=payload)
    if reply.status_code != 200:
        try:
            detail = reply.json().get("detail", reply.text)
        except ValueError:
            detail = reply.text
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)
    return reply.json()


def _dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _render_word(word: list[int]) -> str:
    return " ".join(str(x) for x in word)


def _render_factor(ij: list[int]) -> str:
    return f"t({ij[0]},{ij[1]})"


def _render_fork(word: list[int]) -> str:
    # type D fork display: mirrored left half, then w_1 over -w_1, then the rest
    left = [-x for x in reversed(word[1:])]
    right = word[1:]
    return (
        f"{' '.join(str(x) for x in left)} ( {word[0]} / {-word[0]} ) "
        f"{' '.join(str(x) for x in right)}"
    ).strip()


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_stats(args, client) -> int:
    data = _post(client, "/stats", {"word": args.word, "group": args.group})
    if args.format == "json":
        print(_dump_json(data))
    elif args.format == "csv":
        print("stat,value")
        for name, value in data["stats"].items():
            print(f"{name},{value}")
    else:
        print(" ".join(f"{k}={v}" for k, v in data["stats"].items()))
    return 0


def cmd_sort(args, client) -> int:
    data = _post(
        client, "/sort", {"word": args.word, "group": args.group, "trace": args.trace}
    )
    if args.format == "json":
        print(_dump_json(data))
        return 0
    if args.format == "csv":
        print("i,j,weight")
        weights = {"A": 0, "B": 1, "D": 2}[args.group]
        for i, j in data["factors"]:
            print(f"{i},{j},{j - i - (weights if i < 0 else 0)}")
        return 0
    factors = " ".join(_render_factor(f) for f in data["factors"])
    print(f"{factors}; sor={data['sor']}")
    if args.trace:
        render = _render_fork if args.group == "D" else _render_word
        for step in data["trace"]:
            print(render(step))
    return 0


def cmd_dist(args, client) -> int:
    payload = {
        "group": args.group,
        "n": args.n,
        "q_stat": args.q_stat,
        "threads": args.threads,
        "max_elements": args.max_elements,
    }
    if args.t_stat:
        payload["t_stat"] = args.t_stat
    if args.compare:
        payload["compare"] = args.compare
    data = _post(client, "/dist", payload)
    if args.format == "json":
        print(_dump_json(data))
    elif args.format == "csv":
        print("q,t,coeff")
        for a, b, c in data["terms"]:
            print(f"{a},{b},{c}")
    else:
        print(data["text"])
        if data["equal"] is not None:
            print(f"compare {data['compare']}: {'equal' if data['equal'] else 'NOT EQUAL'}")
    if data["equal"] is False:
        return MISMATCH_ERROR
    return 0


def _parse_max_n(text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        tag, _, value = piece.partition("=")
        if tag not in ("A", "B", "D") or not value.isdigit():
            raise argparse.ArgumentTypeError(
                f"bad --max-n entry {piece!r}; expected like A=7,B=5,D=6"
            )
        out[tag] = int(value)
    return out


def cmd_verify(args, client) -> int:
    payload: dict[str, Any] = {"suite": args.suite, "threads": args.threads}
    if args.max_n:
        payload["max_n"] = args.max_n
    data = _post(client, "/verify", payload)
    if args.format == "json":
        print(_dump_json(data))
    elif args.format == "csv":
        print("suite,name,ok,seconds")
        for row in data["checks"]:
            print(f"{row['suite']},{row['name']},{row['ok']},{row['seconds']}")
    else:
        for row in data["checks"]:
            mark = "ok  " if row["ok"] else "FAIL"
            print(f"{mark} [{row['suite']}] {row['name']}  ({row['seconds']}s)  {row['detail']}")
        total = len(data["checks"])
        passed = sum(1 for row in data["checks"] if row["ok"])
        print(f"{passed}/{total} checks passed")
    return 0 if data["ok"] else MISMATCH_ERROR


def cmd_bijection(args, client) -> int:
    data = _post(client, "/bijection", {"word": args.word, "inverse": args.inverse})
    if args.format == "json":
        print(_dump_json(data))
    else:
        print(_render_word(data["result"]))
    return 0


def cmd_bcode(args, client) -> int:
    data = _post(client, "/bcode", {"word": args.word})
    if args.format == "json":
        print(_dump_json(data))
    else:
        print(",".join(str(b) for b in data["code"]))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxstat",
        description="statistics, sorting factorizations and distribution "
        "identities on permutations and signed permutations",
    )
    parser.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default: text)",
    )
    parser.add_argument(
        "--server", metavar="URL", default=None,
        help="base URL of a running service; default runs the app in-process",
    )
    parser.add_argument(
        "--threads", type=int, default=1,
        help="worker threads for distribution scans (default: 1)",
    )
    parser.add_argument(
        "--max-elements", type=int, default=2_000_000,
        help="cap on enumerated group size (default: 2000000)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="all applicable statistics of one element")
    p.add_argument("word", help='quoted signed word, e.g. "6 3 7 2 4 5 1"')
    p.add_argument("--group", choices=("A", "B", "D"), required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("sort", help="selection-sort factorization and sorting index")
    p.add_argument("word")
    p.add_argument("--group", choices=("A", "B", "D"), required=True)
    p.add_argument("--trace", action="store_true", help="print intermediate words")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("dist", help="exact joint distribution over a whole group")
    p.add_argument("--group", choices=("A", "B", "D"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q-stat", required=True, help="statistic for the q exponent")
    p.add_argument("--t-stat", default=None, help="statistic for the t exponent")
    p.add_argument(
        "--compare", choices=("S", "B", "D"), default=None,
        help="compare against a closed form; exit 1 if different",
    )
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", choices=("all", "props", "identities", "oracle"), default="all")
    p.add_argument(
        "--max-n", type=_parse_max_n, default=None, metavar="A=7,B=5,D=6",
        help="per-type rank ceilings overriding the suite defaults",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bijection", help="canonical cycle-form bijection (type A)")
    p.add_argument("word")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("bcode", help="transposition code of the sort (type A)")
    p.add_argument("word")
    p.set_defaults(func=cmd_bcode)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        client = _client(args.server)
    except Exception as exc:
        print(f"error: cannot reach server: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        return args.func(args, client)
    except SystemExit as exc:
        return int(exc.code or 0)
    finally:
        client.close()


if __name__ == "__main__":
    sys.exit(main())
