"""Command-line front end.

The CLI is a thin client over the HTTP service: every subcommand builds one
request and renders the JSON response as text or raw JSON.  By default the
service runs in-process; --server points the same client at a remote
instance.  Exit codes: 0 success, 1 domain error, 2 verification failure,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .context import DEFAULT_CAP, MAX_CAP

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class _Client:
    """POSTs against the in-process app or a remote base URL."""

    def __init__(self, server: str | None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server.rstrip("/"))
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict) -> tuple[int, dict]:
        response = self._client.post(path, json=payload)
        try:
            body = response.json()
        except ValueError:
            body = {"error": response.text}
        return response.status_code, body


def _build_parser() -> _Parser:
    parser = _Parser(prog="cobcalc", description="Exact truncated formal-group-law calculator.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-degree",
        type=int,
        default=None,
        metavar="D",
        help=f"truncation degree (default: FGL_MAX_DEGREE or {DEFAULT_CAP}, max {MAX_CAP})",
    )
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--server", default=None, metavar="URL", help="use a remote service instead of in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alpha", parents=[common], help="coefficient of x^i y^j in the universal law")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)

    p = sub.add_parser("chern", parents=[common], help="Chern number of a class")
    p.add_argument("--class", dest="cls", required=True, metavar="EXPR")
    p.add_argument("--omega", required=True, metavar="I,J,..", help="partition, e.g. 1,1")

    p = sub.add_parser("snumber", parents=[common], help="top s-number of a class")
    p.add_argument("--class", dest="cls", required=True, metavar="EXPR")

    p = sub.add_parser("boundary", parents=[common], help="boundary of a class")
    p.add_argument("--class", dest="cls", required=True, metavar="EXPR")

    p = sub.add_parser("star", parents=[common], help="* product of two W classes")
    p.add_argument("--left", required=True, metavar="EXPR")
    p.add_argument("--right", required=True, metavar="EXPR")

    p = sub.add_parser("generators", parents=[common], help="generator families with certificates")
    p.add_argument("--kind", choices=("e", "z", "x", "y"), default="x")
    p.add_argument("--degree", type=int, default=None)

    sub.add_parser("abel", parents=[common], help="two-parameter elimination of the universal law")
    sub.add_parser("buchstaber", parents=[common], help="four-parameter elimination of the universal law")

    p = sub.add_parser("hoehn", parents=[common], help="genus from the quartic ODE")
    p.add_argument("p", nargs=4, metavar="P", help="four rational coefficients, e.g. 2 1 0 0")

    p = sub.add_parser("krichever-check", parents=[common], help="functional-form check of a law")
    p.add_argument("--law", choices=("universal", "abel", "buchstaber"), default="universal")

    p = sub.add_parser("phiw", parents=[common], help="image of a W class under the projection genus")
    p.add_argument("--class", dest="cls", required=True, metavar="EXPR")

    p = sub.add_parser("ideal", parents=[common], help="graded ideal computations")
    p.add_argument("action", choices=("report", "member", "equal", "regularity"))
    p.add_argument("--gens", required=True, metavar="EXPR;EXPR", help="semicolon-separated generators")
    p.add_argument("--gens2", default=None, metavar="EXPR;EXPR", help="second list (equal action)")
    p.add_argument("--class", dest="cls", default=None, metavar="EXPR", help="class (member action)")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", default="all")

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _request_for(args) -> tuple[str, dict]:
    payload: dict = {}
    if args.max_degree is not None:
        payload["max_degree"] = args.max_degree
    if args.command == "alpha":
        payload.update({"i": args.i, "j": args.j})
        return "/alpha", payload
    if args.command == "chern":
        try:
            omega = [int(part) for part in args.omega.split(",") if part.strip()]
        except ValueError:
            raise SystemExit(_usage_error("omega must be a comma-separated list of integers"))
        payload.update({"class": args.cls, "omega": omega})
        return "/chern", payload
    if args.command in ("snumber", "boundary", "phiw"):
        payload["class"] = args.cls
        return f"/{args.command}", payload
    if args.command == "star":
        payload.update({"left": args.left, "right": args.right})
        return "/star", payload
    if args.command == "generators":
        payload["kind"] = args.kind
        if args.degree is not None:
            payload["degree"] = args.degree
        return "/generators", payload
    if args.command in ("abel", "buchstaber"):
        return f"/{args.command}", payload
    if args.command == "hoehn":
        payload["p"] = list(args.p)
        return "/hoehn", payload
    if args.command == "krichever-check":
        payload["law"] = args.law
        return "/krichever-check", payload
    if args.command == "ideal":
        payload.update({"action": args.action, "generators": _split_list(args.gens)})
        if args.gens2 is not None:
            payload["generators2"] = _split_list(args.gens2)
        if args.cls is not None:
            payload["class"] = args.cls
        return "/ideal", payload
    if args.command == "verify":
        payload["suite"] = args.suite
        return "/verify", payload
    raise AssertionError(f"unhandled command {args.command}")


def _split_list(text: str) -> list[str]:
    return [part.strip() for part in text.split(";") if part.strip()]


def _usage_error(message: str) -> int:
    print(f"cobcalc: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _pretty_rational(value: str) -> str:
    return value[:-2] if value.endswith("/1") else value


def _render_verify_text(body: dict) -> str:
    lines = []
    total = passed = 0
    for suite in body["suites"]:
        lines.append(f"== suite {suite['suite']} (max degree {body['max_degree']}) ==")
        for check in suite["checks"]:
            status = "PASS" if check["pass"] else "FAIL"
            detail = f"  [{check['detail']}]" if check["detail"] else ""
            lines.append(f"{status}  {check['name']}{detail}")
            total += 1
            passed += bool(check["pass"])
    lines.append(f"{passed}/{total} checks passed")
    return "\n".join(lines)


def _render_text(command: str, body: dict) -> str:
    if command == "verify":
        return _render_verify_text(body)
    if command in ("alpha", "boundary", "star", "phiw"):
        return body["class"]
    if command in ("chern", "snumber"):
        return _pretty_rational(body["value"])
    if command == "generators":
        lines = []
        for rec in body["records"]:
            certs = rec.get("certificates", {})
            tags = " ".join(f"{k}={v}" for k, v in sorted(certs.items()))
            lines.append(
                f"{rec['kind']} degree {rec['degree']}: {rec['class']}  "
                f"s={_pretty_rational(rec['s_number'])}  {tags}"
            )
        return "\n".join(lines)
    if command in ("abel", "buchstaber"):
        lines = [f"{name} -> {img}" for name, img in body["images"].items()]
        lines.append(f"functional-form check: {'pass' if body['krichever']['pass'] else 'fail'}")
        if body.get("params"):
            lines.append("quartic parameters: " + ", ".join(body["params"]))
        return "\n".join(lines)
    if command == "hoehn":
        return "\n".join(f"{name} -> {img}" for name, img in body["images"].items())
    if command == "krichever-check":
        report = body["report"]
        if report["pass"]:
            return f"{body['law']}: pass (checked through order {report['checked_order']})"
        return f"{body['law']}: fail (first obstruction in degree {report['failure_degree']}, residual {report['residual']})"
    if command == "ideal":
        return json.dumps(body["result"], indent=2, sort_keys=True)
    return json.dumps(body, indent=2, sort_keys=True)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE

    cap = args.max_degree
    if cap is None:
        env = os.environ.get("FGL_MAX_DEGREE")
        if env is not None:
            try:
                cap = int(env)
            except ValueError:
                print(f"cobcalc: error: FGL_MAX_DEGREE must be an integer, got {env!r}", file=sys.stderr)
                return EXIT_DOMAIN
    if cap is not None and not 1 <= cap <= MAX_CAP:
        print(f"cobcalc: error: max degree must be between 1 and {MAX_CAP}", file=sys.stderr)
        return EXIT_DOMAIN
    args.max_degree = cap

    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    try:
        path, payload = _request_for(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    client = _Client(args.server)
    status, body = client.post(path, payload)
    if status == 400:
        print(f"cobcalc: error: {body.get('error', 'domain error')}", file=sys.stderr)
        return EXIT_DOMAIN
    if status == 422:
        print(f"cobcalc: error: invalid request: {json.dumps(body.get('detail', body))}", file=sys.stderr)
        return EXIT_USAGE
    if status != 200:
        print(f"cobcalc: error: service returned status {status}", file=sys.stderr)
        return EXIT_DOMAIN

    if args.format == "json":
        print(json.dumps(body, indent=2, sort_keys=True))
    else:
        print(_render_text(args.command, body))

    if args.command == "verify" and not body.get("pass", False):
        return EXIT_VERIFY
    if args.command == "krichever-check" and not body["report"]["pass"]:
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
