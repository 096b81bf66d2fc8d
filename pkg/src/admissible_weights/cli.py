"""Command-line front end.

Thin client of the service layer: each subcommand builds the same request
model the HTTP endpoint accepts and either calls the handler in-process
(default) or POSTs it to a running service (``--server``).  Output is
byte-deterministic JSON (sorted keys, canonical rational strings) or TSV
carrying the same content.

Exit codes: 0 success, 1 mathematical rejection (non-admissible or
critical level, blocked orbit move, weight outside a domain), 2 usage
error (unparsable token, bad type label, wrong weight shape).
"""

from __future__ import annotations

import argparse
import json
import sys
import urllib.error
import urllib.request
from typing import List, Optional

from .errors import DomainError, GroupTooLargeError, InputError
from .service import schemas
from .service.app import (
    handle_classify,
    handle_enumerate,
    handle_level_check,
    handle_orbit,
    handle_reduce,
    handle_root_data,
)

_HANDLERS = {
    "level-check": (handle_level_check, schemas.LevelCheckRequest, "/level-check"),
    "root-data": (handle_root_data, schemas.RootDataRequest, "/root-data"),
    "enumerate": (handle_enumerate, schemas.EnumerateRequest, "/enumerate"),
    "classify": (handle_classify, schemas.ClassifyRequest, "/classify"),
    "reduce": (handle_reduce, schemas.ReduceRequest, "/reduce"),
    "orbit": (handle_orbit, schemas.OrbitRequest, "/orbit"),
}

_RESPONSE_MODELS = {
    "level-check": schemas.LevelCheckResponse,
    "root-data": schemas.RootDataResponse,
    "enumerate": schemas.EnumerateResponse,
    "classify": schemas.ClassifyResponse,
    "reduce": schemas.ReduceResponse,
    "orbit": schemas.OrbitResponse,
}


def _split_csv(text: str) -> List[str]:
    return [t.strip() for t in text.split(",") if t.strip() != ""]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="admw",
        description="Exact admissible-weight classification for affine root systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, weight=False, moves=False, level=True):
        p.add_argument("--type", "-t", required=True, help="Lie type label, e.g. B2")
        if level:
            p.add_argument(
                "--level",
                required=True,
                help='exact rational level; write --level=-1/2 for negatives',
            )
        if weight:
            p.add_argument(
                "--weight",
                required=True,
                help="comma-separated fundamental-weight coordinates, e.g. 0,1/2",
            )
        if moves:
            p.add_argument(
                "--moves",
                required=True,
                help='comma-separated generators: "s0".."sl", "t1".."tl", "d<perm>"',
            )
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.add_argument("--verbose", "-v", action="store_true")
        p.add_argument("--server", help="base URL of a running service")

    common(sub.add_parser("level-check", help="decide the admissibility criterion"))
    rd = sub.add_parser("root-data", help="dump the finite root system")
    common(rd, level=False)
    common(sub.add_parser("enumerate", help="enumerate the classified family"))
    common(sub.add_parser("classify", help="membership oracle for one weight"), weight=True)
    common(sub.add_parser("reduce", help="rank-one reduction data"), weight=True)
    common(sub.add_parser("orbit", help="apply orbit moves"), weight=True, moves=True)

    sweep = sub.add_parser("sweep", help="batch enumeration over a (type, p, q) grid")
    sweep.add_argument("--config", required=True, help="key = value config file")
    sweep.add_argument("--server", help="base URL of a running service")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _request_for(args) -> object:
    cmd = args.command
    if cmd == "level-check":
        return schemas.LevelCheckRequest(type=args.type, level=args.level)
    if cmd == "root-data":
        return schemas.RootDataRequest(type=args.type)
    if cmd == "enumerate":
        return schemas.EnumerateRequest(
            type=args.type, level=args.level, verbose=args.verbose
        )
    if cmd == "classify":
        return schemas.ClassifyRequest(
            type=args.type, level=args.level, weight=_split_csv(args.weight)
        )
    if cmd == "reduce":
        return schemas.ReduceRequest(
            type=args.type, level=args.level, weight=_split_csv(args.weight)
        )
    if cmd == "orbit":
        return schemas.OrbitRequest(
            type=args.type,
            level=args.level,
            weight=_split_csv(args.weight),
            moves=_split_csv(args.moves),
        )
    raise AssertionError(cmd)


def _post(server: str, path: str, payload: dict):
    url = server.rstrip("/") + path
    data = json.dumps(payload).encode()
    req = urllib.request.Request(
        url, data=data, headers={"Content-Type": "application/json"}
    )
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, json.loads(resp.read().decode())
    except urllib.error.HTTPError as exc:
        body = exc.read().decode()
        try:
            detail = json.loads(body).get("detail", body)
        except json.JSONDecodeError:
            detail = body
        return exc.code, {"detail": detail}


def _run(cmd: str, request, server: Optional[str]):
    handler, _, path = _HANDLERS[cmd]
    if server is None:
        return handler(request)
    status, body = _post(server, path, request.model_dump())
    if status == 200:
        return _RESPONSE_MODELS[cmd].model_validate(body)
    if status in (409,):
        raise DomainError(str(body.get("detail", body)))
    raise InputError(str(body.get("detail", body)))


def _bool_str(b: bool) -> str:
    return "true" if b else "false"


def _tsv_rows(cmd: str, resp) -> List[List[str]]:
    if cmd == "level-check":
        return [
            ["type", resp.type],
            ["level", resp.level],
            ["admissible", _bool_str(resp.admissible)],
            ["p", str(resp.p)],
            ["q", str(resp.q)],
            ["case_gcd", str(resp.case_gcd)],
            ["min_numerator", str(resp.min_numerator)],
            ["reason", resp.reason or ""],
        ]
    if cmd == "root-data":
        rows = [
            ["type", resp.type],
            ["family", resp.family],
            ["rank", str(resp.rank)],
            ["h", str(resp.h)],
            ["h_dual", str(resp.h_dual)],
            ["lacing", str(resp.lacing)],
            ["theta", *resp.theta],
            ["theta_s", *resp.theta_s],
            ["rho", *resp.rho],
        ]
        rows += [["simple_root", *r] for r in resp.simple_roots]
        rows += [["root", *r] for r in resp.roots]
        rows += [["positive_root", *r] for r in resp.positive_roots]
        rows += [["form", *r] for r in resp.form]
        rows += [["cartan", *map(str, r)] for r in resp.cartan_matrix]
        rows += [["fundamental_weight", *r] for r in resp.fundamental_weights]
        rows += [["fundamental_coweight", *r] for r in resp.fundamental_coweights]
        return rows
    if cmd == "enumerate":
        rows = [
            ["type", resp.type],
            ["level", resp.level],
            ["p", str(resp.p)],
            ["q", str(resp.q)],
            ["case_gcd", str(resp.case_gcd)],
            ["dominant_count", str(resp.dominant_count)],
            ["total_count", str(resp.total_count)],
            ["twist_count", str(resp.twist_count)],
        ]
        for w in resp.dominant:
            rows.append(["dominant", ",".join(w.fundamental), ",".join(w.finite)])
        for idx, w in enumerate(resp.weights):
            row = ["member", ",".join(w.fundamental), ",".join(w.finite)]
            if resp.multiplicities is not None:
                row.append(str(resp.multiplicities[idx]))
            rows.append(row)
        return rows
    if cmd == "classify":
        rows = [
            ["weight", ",".join(resp.weight.fundamental)],
            ["level", resp.weight.level],
            ["is_module", _bool_str(resp.is_module)],
            ["admissible", _bool_str(resp.admissible)],
            ["integral_system", resp.integral_system],
        ]
        for f in resp.failures:
            rows.append(["failure", f.check, json.dumps(f.witness, sort_keys=True)])
        return rows
    if cmd == "reduce":
        rows = [["index", "level_i", "h_value", "sl2_admissible"]]
        for r in resp.rows:
            rows.append([str(r.index), r.level_i, r.h_value, _bool_str(r.sl2_admissible)])
        return rows
    if cmd == "orbit":
        rows = [
            ["ok", _bool_str(resp.ok)],
            ["start", ",".join(resp.start.fundamental)],
        ]
        for s in resp.steps:
            if s.applied:
                rows.append(["step", s.move, "applied", ",".join(s.weight.fundamental)])
            else:
                rows.append(
                    [
                        "step",
                        s.move,
                        "blocked",
                        json.dumps(
                            {"alpha": s.blocking_root.alpha, "n": s.blocking_root.n},
                            sort_keys=True,
                        ),
                        s.blocking_pairing,
                    ]
                )
        return rows
    raise AssertionError(cmd)


def _emit(resp, cmd: str, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(resp.model_dump(), sort_keys=True, indent=2) + "\n")
    else:
        for row in _tsv_rows(cmd, resp):
            out.write("\t".join(row) + "\n")


def _parse_sweep_config(path: str) -> dict:
    config = {"types": [], "p_min": 1, "p_max": 6, "q_min": 1, "q_max": 4}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            if "=" not in body:
                raise InputError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (part.strip() for part in body.split("=", 1))
            if key == "types":
                config["types"] = _split_csv(value)
            elif key in ("p_min", "p_max", "q_min", "q_max"):
                config[key] = int(value)
            else:
                raise InputError(f"{path}:{lineno}: unknown key {key!r}")
    if not config["types"]:
        raise InputError(f"{path}: no types specified")
    return config


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _run_sweep(args, out) -> int:
    from .finite import build_root_system
    from .rationals import format_rational

    config = _parse_sweep_config(args.config)
    out.write("type\tlevel\tdominant_count\ttotal_count\n")
    for label in config["types"]:
        rs = build_root_system(label)
        for p in range(config["p_min"], config["p_max"] + 1):
            for q in range(config["q_min"], config["q_max"] + 1):
                if _gcd(p, q) != 1:
                    continue
                from fractions import Fraction

                k = Fraction(p, q) - rs.dual_coxeter_number
                req = schemas.EnumerateRequest(
                    type=label, level=format_rational(k), verbose=False
                )
                try:
                    resp = _run("enumerate", req, args.server)
                except DomainError:
                    continue
                out.write(
                    f"{resp.type}\t{resp.level}\t{resp.dominant_count}"
                    f"\t{resp.total_count}\n"
                )
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "serve":
            import uvicorn

            from .service import app

            uvicorn.run(app, host=args.host, port=args.port)
            return 0
        if args.command == "sweep":
            return _run_sweep(args, out)
        request = _request_for(args)
        resp = _run(args.command, request, args.server)
        _emit(resp, args.command, args.format, out)
        if args.command == "level-check" and not resp.admissible:
            return 1
        if args.command == "orbit" and not resp.ok:
            return 1
        return 0
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, GroupTooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
