"""Command-line client for the engine service.

Every subcommand speaks HTTP to the service: by default against an
in-process instance of the app (no socket needed), or against a running
server when --url is given.  Exit codes: 0 success / all checks match,
1 a reproduction mismatch or refused computation, 2 usage or parse
errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

from . import __version__


def _post(url: str | None, path: str, payload: dict) -> tuple[int, dict]:
    async def go() -> tuple[int, dict]:
        if url:
            client = httpx.AsyncClient(base_url=url, timeout=600.0)
        else:
            from .service.app import app

            client = httpx.AsyncClient(
                transport=httpx.ASGITransport(app=app), base_url="http://mathieu", timeout=600.0
            )
        async with client:
            response = await client.post(path, json=payload)
            return response.status_code, response.json()

    return asyncio.run(go())


def _fail(detail, code: int = 2) -> int:
    print(f"error: {detail}", file=sys.stderr)
    return code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


def cmd_apply(args) -> int:
    status, body = _post(args.url, "/apply", {"formula": args.formula, "point": args.point})
    if status != 200:
        return _fail(body.get("detail", body))
    if args.json:
        print(json.dumps(body, indent=2, sort_keys=True))
    elif args.point is not None:
        print(body["image"])
    else:
        print(body["cycles"])
    return 0


def cmd_group(args) -> int:
    try:
        text = _read_text(args.file)
    except OSError as exc:
        return _fail(exc)
    base = [int(x) for x in args.base.split(",")] if args.base else None
    status, body = _post(args.url, "/group", {"text": text, "base": base, "budget": args.budget})
    if status != 200:
        return _fail(body.get("detail", body))
    if args.json:
        print(json.dumps(body, indent=2, sort_keys=True))
        return 0
    print(f"degree       {body['degree']}")
    print(f"generators   {', '.join(body['labels'])}")
    print(f"order        {body['order']}")
    print(f"transitivity {body['transitivity']}")
    print(f"values       {body['values']}")
    print(f"verdict      {body['verdict']}")
    if body["min_support"] is not None:
        print(f"min support  {body['min_support']}")
    else:
        print(f"min support  {body['min_support_note']}")
    if body.get("stabilizer"):
        st = body["stabilizer"]
        sizes = ",".join(str(s) for s in st["orbit_sizes"])
        print(f"stabilizer of {st['fixed']}: order {st['order']}, orbit sizes {sizes}")
    return 0


def cmd_classify(args) -> int:
    status, body = _post(args.url, "/classify", {"p": args.p, "exhaustive": args.exhaustive})
    if status != 200:
        return _fail(body.get("detail", body))
    if args.json:
        print(json.dumps(body, indent=2, sort_keys=True))
        return 0
    print(f"case {body['case']} (engine {body['engine']['name']} {body['engine']['version']})")
    header = f"{'j':>2} {'u':>2}  {'order':>24} {'k':>2}  {'values':>24}  verdict  conjugate_of"
    print(header)
    for row in body["rows"]:
        conj = row["conjugate_of"] if row["conjugate_of"] is not None else "-"
        print(
            f"{row['alignment']:>2} {row['exponent']:>2}  {row['order']:>24} "
            f"{row['transitivity']:>2}  {row['values']:>24}  {row['verdict']:<7}  {conj}"
        )
    return 0


def cmd_minsupport(args) -> int:
    try:
        text = _read_text(args.file)
    except OSError as exc:
        return _fail(exc)
    status, body = _post(args.url, "/minsupport", {"text": text, "budget": args.budget})
    if status != 200:
        return _fail(body.get("detail", body))
    if body["min_support"] is None:
        print(body["note"])
        return 1
    print(body["min_support"])
    return 0


def cmd_reproduce(args) -> int:
    payload: dict = {"budget": args.budget}
    if args.corpus:
        try:
            payload["corpus"] = json.loads(_read_text(args.corpus))
        except (OSError, json.JSONDecodeError) as exc:
            return _fail(exc)
    status, body = _post(args.url, "/reproduce", payload)
    if status != 200:
        return _fail(body.get("detail", body))
    if args.json:
        print(json.dumps(body, indent=2, sort_keys=True))
    else:
        for check in body["checks"]:
            if check["match"]:
                print(f"ok    {check['id']}: {check['computed']}")
            else:
                print(f"FAIL  {check['id']}: computed {check['computed']}, expected {check['expected']}")
        good = sum(c["match"] for c in body["checks"])
        print(f"{good}/{len(body['checks'])} checks matched")
    return 0 if body["ok"] else 1


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("mathieu.service.app:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mathieu",
        description="Multiply transitive permutation groups: evaluate substitutions, "
        "analyze generator files, classify candidates, and rerun the verification suite.",
    )
    parser.add_argument("--version", action="version", version=f"mathieu {__version__}")
    parser.add_argument("--url", default=None, help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", help="compile a substitution formula to cycle notation")
    p.add_argument("formula", help="e.g. 'poly -3*z^15 + 4*z^4 @ GF(23)'")
    p.add_argument("--point", type=int, default=None, help="print only the image of this point")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_apply)

    p = sub.add_parser("group", help="analyze the group generated by a generator file")
    p.add_argument("file", help="generator file path, or - for stdin")
    p.add_argument("--base", default=None, help="comma-separated points for stabilizer queries")
    p.add_argument("--budget", type=int, default=2**24, help="element budget for minimal support")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("classify", help="classify the candidate companions for p in {7, 11, 23}")
    p.add_argument("p", type=int)
    p.add_argument("--exhaustive", action="store_true", help="also test the exponent q-1")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("minsupport", help="minimal support over all non-identity elements")
    p.add_argument("file", help="generator file path, or - for stdin")
    p.add_argument("--budget", type=int, default=2**24)
    p.set_defaults(fn=cmd_minsupport)

    p = sub.add_parser("reproduce", help="run the full verification suite")
    p.add_argument("--corpus", default=None, help="override the packaged expectation corpus (JSON file)")
    p.add_argument("--budget", type=int, default=2**24)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_reproduce)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except httpx.HTTPError as exc:
        return _fail(f"service unreachable: {exc}")


if __name__ == "__main__":
    sys.exit(main())
