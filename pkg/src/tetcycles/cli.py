"""Command line client for the HTTP API.

By default requests are served in process, so no server needs to run and
batch invocations stay deterministic; --server routes the same requests to
a remote instance instead.  File arguments accept "-" for stdin.

Exit codes: 0 success, 1 parse/validation/domain errors, 2 search budget
exceeded.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for the search
    # budget guard, so remap usage problems to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error parse_error: {message}", file=sys.stderr)
        raise SystemExit(1)


class _Client:
    def __init__(self, server: str | None) -> None:
        if server:
            import httpx

            self._client = httpx.Client(base_url=server.rstrip("/"), timeout=None)
        else:
            with warnings.catch_warnings():
                # the suggested httpx2 replacement is not installable here
                warnings.filterwarnings("ignore", message=".*httpx.*")
                from fastapi.testclient import TestClient

            from .service.app import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict):
        resp = self._client.post(path, json=payload)
        try:
            body = resp.json()
        except ValueError:
            body = {"code": "error", "detail": resp.text}
        return resp.status_code, body

    def close(self) -> None:
        self._client.close()


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        print(f"error parse_error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(1) from None


def _call(client: _Client, path: str, payload: dict) -> dict:
    status, body = client.post(path, payload)
    if status == 200:
        return body
    code = body.get("code", "error")
    detail = body.get("detail", "")
    print(f"error {code}: {detail}", file=sys.stderr)
    raise SystemExit(2 if code == "rank_guard_exceeded" else 1)


def _cmd_gen(client: _Client, args) -> int:
    payload: dict = {"name": args.name}
    if args.q is not None:
        payload["q"] = args.q
    data = _call(client, "/gen", payload)
    sys.stdout.write(data["mesh"])
    return 0


def _cmd_validate(client: _Client, args) -> int:
    data = _call(client, "/validate", {"mesh": _read(args.mesh)})
    lines = [f"valid {1 if data['ok'] else 0}"]
    if not data["ok"]:
        lines.append(f"witness {data['witness']}")
    lines.append(f"counts {data['n0']} {data['n1']} {data['n2']} {data['n3']}")
    lines.append(f"euler {data['euler_characteristic']}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if data["ok"] else 1


def _cmd_homology(client: _Client, args) -> int:
    data = _call(client, "/homology", {"mesh": _read(args.mesh), "dim": args.dim})
    sys.stdout.write(f"betti {data['betti']}\n" + "".join(data["representatives"]))
    return 0


def _cmd_cocycle(client: _Client, args) -> int:
    data = _call(
        client,
        "/cocycle",
        {"mesh": _read(args.mesh), "chain": _read(args.chain), "method": args.method},
    )
    sys.stdout.write(data["cochain"])
    return 0


def _cmd_intersect(client: _Client, args) -> int:
    data = _call(
        client,
        "/intersect",
        {
            "mesh": _read(args.mesh),
            "chain_a": _read(args.chain_a),
            "chain_b": _read(args.chain_b),
        },
    )
    sys.stdout.write(f"intersection {data['value']}\n")
    return 0


def _cmd_index(client: _Client, args) -> int:
    data = _call(
        client, "/index", {"mesh": _read(args.mesh), "chain": _read(args.chain)}
    )
    sys.stdout.write(f"rank {data['rank']}\n")
    sys.stdout.write(" ".join(["index"] + [str(b) for b in data["bits"]]) + "\n")
    return 0


def _cmd_homologous(client: _Client, args) -> int:
    data = _call(
        client,
        "/homologous",
        {
            "mesh": _read(args.mesh),
            "chain_a": _read(args.chain_a),
            "chain_b": _read(args.chain_b),
        },
    )
    sys.stdout.write(f"homologous {1 if data['homologous'] else 0}\n")
    return 0


def _cmd_minpath(client: _Client, args) -> int:
    payload = {"mesh": _read(args.mesh), "path": _read(args.path)}
    if args.weights is not None:
        payload["weights"] = _read(args.weights)
    if args.max_nodes is not None:
        payload["max_nodes"] = args.max_nodes
    data = _call(client, "/minpath", payload)
    sys.stdout.write(data["path"])
    return 0


def build_parser() -> _Parser:
    p = _Parser(prog="tetcycles", description=__doc__)
    p.add_argument("--server", default=None, help="base URL of a running server")
    p.add_argument(
        "--seed",
        type=int,
        default=0,
        help="accepted for interface compatibility; all operations are deterministic",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gen", help="write a built-in mesh to stdout")
    sp.add_argument("name", choices=["s3", "t3", "rp3"])
    sp.add_argument("--q", type=int, default=None, help="grid size for t3")
    sp.set_defaults(func=_cmd_gen)

    sp = sub.add_parser("validate", help="check the closed-manifold conditions")
    sp.add_argument("mesh")
    sp.set_defaults(func=_cmd_validate)

    sp = sub.add_parser("homology", help="mod-2 homology basis of a dimension")
    sp.add_argument("mesh")
    sp.add_argument("--dim", type=int, required=True, choices=[0, 1, 2, 3])
    sp.set_defaults(func=_cmd_homology)

    sp = sub.add_parser("cocycle", help="dual cocycle of a 1- or 2-cycle")
    sp.add_argument("mesh")
    sp.add_argument("chain")
    sp.add_argument("--method", choices=["fast", "oracle"], default="fast")
    sp.set_defaults(func=_cmd_cocycle)

    sp = sub.add_parser("intersect", help="mod-2 intersection number of two cycles")
    sp.add_argument("mesh")
    sp.add_argument("chain_a")
    sp.add_argument("chain_b")
    sp.set_defaults(func=_cmd_intersect)

    sp = sub.add_parser("index", help="index vector of a 1-cycle")
    sp.add_argument("mesh")
    sp.add_argument("chain")
    sp.set_defaults(func=_cmd_index)

    sp = sub.add_parser("homologous", help="whether two 1-cycles are homologous")
    sp.add_argument("mesh")
    sp.add_argument("chain_a")
    sp.add_argument("chain_b")
    sp.set_defaults(func=_cmd_homologous)

    sp = sub.add_parser("minpath", help="minimum-weight homologous path")
    sp.add_argument("mesh")
    sp.add_argument("path")
    sp.add_argument("--weights", default=None, help="edge weight file")
    sp.add_argument("--max-nodes", type=int, default=None, help="search budget")
    sp.set_defaults(func=_cmd_minpath)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    client = _Client(args.server)
    try:
        return args.func(client, args)
    finally:
        client.close()


if __name__ == "__main__":
    sys.exit(main())
