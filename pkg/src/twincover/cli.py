"""Command-line client for the twincover service.

Every subcommand builds the same request the HTTP endpoints accept and
sends it either to a remote server (--server URL, or TWINCOVER_SERVER) or,
by default, straight to an in-process instance of the service, so the CLI
works standalone while producing byte-identical output to a deployed
server.  Responses are printed verbatim.

Exit codes: 0 on success, 2 when the verdict is out of scope, 1 on any
error (bad input, unsupported computation, connection failure).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys

import httpx

from .service import create_app


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twincover", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument(
            "--server",
            default=os.environ.get("TWINCOVER_SERVER") or None,
            help="base URL of a running twincover server (default: in-process)",
        )

    p = sub.add_parser("classify", help="decide whether a knot is determined by its cover")
    p.add_argument("presentation")
    p.add_argument("--mirror", action="store_true", help="classify the mirror image")
    add_common(p)

    p = sub.add_parser("cover", help="Seifert invariants of the double branched cover")
    p.add_argument("presentation")
    p.add_argument("--mirror", action="store_true")
    add_common(p)

    p = sub.add_parser("lift", help="lift a 2-bridge link of even type")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)
    p.add_argument("--mirror", action="store_true")
    add_common(p)

    p = sub.add_parser("jsj", help="JSJ graph of a satellite knot cover")
    p.add_argument("presentation")
    p.add_argument("--mirror", action="store_true")
    add_common(p)

    p = sub.add_parser("tabulate", help="census of a parameter grid")
    p.add_argument("family", choices=["torus", "montesinos", "twobridge-lift"])
    p.add_argument("--max", type=int, default=None, help="torus: largest q")
    p.add_argument("--max-alpha", type=int, default=None)
    p.add_argument("--max-b", type=int, default=None)
    p.add_argument("--verify", action="store_true", help="add an oracle-check column")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    p.set_defaults(fmt="json")
    add_common(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _request(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=300.0) as client:
            return client.post(path, json=payload)

    async def go():
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://twincover.local", timeout=None
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _emit(resp: httpx.Response) -> int:
    sys.stdout.write(resp.text)
    if not resp.text.endswith("\n"):
        sys.stdout.write("\n")
    if resp.status_code != 200:
        return 1
    try:
        verdict = resp.json().get("verdict")
    except (json.JSONDecodeError, AttributeError):
        verdict = None
    return 2 if verdict == "out_of_scope" else 0


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(json.dumps({"error": "usage", "detail": str(exc)}))
        return 1

    if args.command == "serve":
        import uvicorn

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0

    if args.command == "classify":
        payload = {"presentation": args.presentation, "mirror": args.mirror}
        path = "/classify"
    elif args.command == "cover":
        payload = {"presentation": args.presentation, "mirror": args.mirror}
        path = "/cover"
    elif args.command == "lift":
        payload = {"alpha": args.alpha, "beta": args.beta, "mirror": args.mirror}
        path = "/lift"
    elif args.command == "jsj":
        payload = {"presentation": args.presentation, "mirror": args.mirror}
        path = "/jsj"
    else:
        payload = {
            "family": args.family,
            "max": args.max,
            "max_alpha": args.max_alpha,
            "max_b": args.max_b,
            "verify": args.verify,
            "format": args.fmt,
        }
        path = "/tabulate"

    try:
        resp = _request(args.server, path, payload)
    except httpx.HTTPError as exc:
        print(json.dumps({"error": "connection", "detail": str(exc)}))
        return 1
    return _emit(resp)


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
