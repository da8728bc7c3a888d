"""Thin command-line client for the evidence service.

Every subcommand issues one HTTP request. By default the service app runs
in-process (no server needed); pass ``--server URL`` to target a running
instance instead. Exit codes: 0 success, 1 domain error, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path

import httpx

from .documents import emit_table


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_document(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}", 2) from exc


def _post(args: argparse.Namespace, path: str, payload: dict) -> httpx.Response:
    async def go() -> httpx.Response:
        if args.server:
            client = httpx.AsyncClient(base_url=args.server, timeout=60.0)
        else:
            from .service import create_app

            client = httpx.AsyncClient(
                transport=httpx.ASGITransport(app=create_app()),
                base_url="http://openbelief.internal",
            )
        async with client:
            return await client.post(path, json=payload)

    try:
        return asyncio.run(go())
    except httpx.HTTPError as exc:
        raise _CliError(f"request failed: {exc}", 1) from exc


def _fail(response: httpx.Response) -> int:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, list):  # FastAPI request-validation errors
        detail = "; ".join(str(item.get("msg", item)) for item in detail)
    print(f"error: {detail or response.text}", file=sys.stderr)
    return 2 if response.status_code == 422 else 1


def _print_json(response: httpx.Response) -> int:
    print(json.dumps(response.json(), indent=2))
    return 0


def _split_ids(raw: str) -> list[str]:
    return [piece for piece in raw.split(",") if piece]


def _cmd_validate(args: argparse.Namespace) -> int:
    payload = {"document": _read_document(args.document), "renormalize": args.renormalize}
    response = _post(args, "/validate", payload)
    return _print_json(response) if response.is_success else _fail(response)


def _cmd_combine(args: argparse.Namespace) -> int:
    payload = {
        "document": _read_document(args.document),
        "rule": args.rule,
        "bodies": _split_ids(args.bodies),
    }
    response = _post(args, "/combine", payload)
    if not response.is_success:
        return _fail(response)
    if args.out == "csv":
        rows = [
            {"focal": ",".join(entry["focal"]), "mass": entry["mass"]}
            for entry in response.json()["masses"]
        ]
        sys.stdout.buffer.write(emit_table(rows, "csv", columns=("focal", "mass")))
        return 0
    return _print_json(response)


def _cmd_subset_value(args: argparse.Namespace) -> int:
    payload = {
        "document": _read_document(args.document),
        "body": args.body,
        "subset": _split_ids(args.set),
    }
    response = _post(args, args.endpoint, payload)
    return _print_json(response) if response.is_success else _fail(response)


def _cmd_betp(args: argparse.Namespace) -> int:
    payload = {"document": _read_document(args.document), "body": args.body}
    response = _post(args, "/pignistic", payload)
    return _print_json(response) if response.is_success else _fail(response)


def _cmd_measure(args: argparse.Namespace) -> int:
    payload = {
        "document": _read_document(args.document),
        "metric": args.metric,
        "bodies": _split_ids(args.bodies),
    }
    response = _post(args, "/measure", payload)
    return _print_json(response) if response.is_success else _fail(response)


def _cmd_conflict(args: argparse.Namespace) -> int:
    payload = {
        "document": _read_document(args.document),
        "model": args.model,
        "bodies": _split_ids(args.bodies),
        "epsilon": args.epsilon,
    }
    response = _post(args, "/conflict", payload)
    return _print_json(response) if response.is_success else _fail(response)


def _cmd_sweep(args: argparse.Namespace) -> int:
    payload = {"experiment": args.experiment, "step": args.step, "format": "csv"}
    response = _post(args, "/sweep", payload)
    if not response.is_success:
        return _fail(response)
    if args.out:
        Path(args.out).write_bytes(response.content)
    else:
        sys.stdout.buffer.write(response.content)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="openbelief",
        description="Client for the open-world belief-function service.",
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="send requests to a running service instead of in-process",
    )
    commands = parser.add_subparsers(dest="command", metavar="command", required=True)

    sub = commands.add_parser("validate", help="parse and validate an evidence document")
    sub.add_argument("document", help="path to a .evj file")
    sub.add_argument(
        "--renormalize", action="store_true", help="rescale body masses to sum to 1"
    )
    sub.set_defaults(handler=_cmd_validate)

    sub = commands.add_parser("combine", help="combine bodies of evidence")
    sub.add_argument("--rule", required=True, choices=("dempster", "gcr"))
    sub.add_argument("document", help="path to a .evj file")
    sub.add_argument("--bodies", required=True, help="comma-separated body ids (2 or more)")
    sub.add_argument("--out", choices=("json", "csv"), default="json")
    sub.set_defaults(handler=_cmd_combine)

    for name, endpoint, blurb in (
        ("bel", "/belief", "belief committed to a subset"),
        ("pl", "/plausibility", "plausibility of a subset"),
    ):
        sub = commands.add_parser(name, help=blurb)
        sub.add_argument("document", help="path to a .evj file")
        sub.add_argument("--body", required=True, help="body id")
        sub.add_argument(
            "--set",
            required=True,
            help='comma-separated labels; the empty string "" is the empty set',
        )
        sub.set_defaults(handler=_cmd_subset_value, endpoint=endpoint)

    sub = commands.add_parser("betp", help="pignistic probability distribution")
    sub.add_argument("document", help="path to a .evj file")
    sub.add_argument("--body", required=True, help="body id")
    sub.set_defaults(handler=_cmd_betp)

    sub = commands.add_parser("measure", help="pairwise measure between two bodies")
    sub.add_argument("--metric", required=True, choices=("k", "jousselme", "betp-dist"))
    sub.add_argument("document", help="path to a .evj file")
    sub.add_argument("--bodies", required=True, help="comma-separated pair of body ids")
    sub.set_defaults(handler=_cmd_measure)

    sub = commands.add_parser("conflict", help="two-tuple conflict model and verdict")
    sub.add_argument("--model", required=True, choices=("liu", "modified", "generalized"))
    sub.add_argument("document", help="path to a .evj file")
    sub.add_argument("--bodies", required=True, help="comma-separated pair of body ids")
    sub.add_argument("--epsilon", required=True, type=float, help="conflict tolerance in [0, 1]")
    sub.set_defaults(handler=_cmd_conflict)

    sub = commands.add_parser("sweep", help="run a bundled experiment, emit CSV")
    sub.add_argument(
        "--experiment", required=True, choices=("table1", "fig1", "fig2", "fig4")
    )
    sub.add_argument("--step", type=float, default=0.1, help="grid step (default 0.1)")
    sub.add_argument("--out", default=None, metavar="PATH", help="write CSV here instead of stdout")
    sub.set_defaults(handler=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
