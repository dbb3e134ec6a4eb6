"""Command line client for the algebra service.

Every subcommand builds a request, sends it to the service (in-process by
default, remote with --url), and renders the JSON response. Exit codes:
0 success, 1 usage error, 2 counterexample found under --expect-holds,
3 domain error reported by the service.
"""

from __future__ import annotations

import argparse
import asyncio
import sys

import httpx

from .analysis import IDENTITIES
from .render import (dump_json, element_to_text, format_complex, parse_complex,
                     table_text, unit_names)
from .service.app import create_app


def _element_literal(text: str) -> list[complex]:
    return [parse_complex(tok) for tok in text.split(",")]


def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _coeffs(body: dict) -> list[complex]:
    return [complex(re, im) for re, im in body["coeffs"]]


def _post(args, path: str, payload: dict) -> tuple[int, dict]:
    async def go():
        if args.url:
            client = httpx.AsyncClient(base_url=args.url, timeout=30.0)
        else:
            client = httpx.AsyncClient(
                transport=httpx.ASGITransport(app=create_app()),
                base_url="http://pqalgebra.local")
        async with client:
            r = await client.post(path, json=payload)
            try:
                body = r.json()
            except ValueError:
                body = {}
            return r.status_code, body

    return asyncio.run(go())


def _fail(body) -> int:
    err = body.get("error", {}) if isinstance(body, dict) else {}
    kind = err.get("type", "HTTPError")
    message = err.get("message", "request failed")
    sys.stderr.write(f"error: {kind}: {message}\n")
    return 3


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _algebra_payload(args) -> dict:
    return {"family": args.family, "p": _pair(args.p), "q": _pair(args.q),
            "branch": args.branch}


def _cmd_table(args) -> int:
    status, body = _post(args, "/table", _algebra_payload(args))
    if status != 200:
        return _fail(body)
    if args.format == "json":
        _emit(dump_json(body))
        return 0
    names = unit_names(body["dim"])
    cells = [[element_to_text(_coeffs(cell), names) for cell in row]
             for row in body["table"]]
    if args.format == "csv":
        lines = ["," + ",".join(names)]
        lines += [name + "," + ",".join(row) for name, row in zip(names, cells)]
        _emit("\n".join(lines) + "\n")
        return 0
    _emit(table_text(body["family"], complex(*body["p"]), complex(*body["q"]),
                     cells))
    return 0


def _cmd_mul(args) -> int:
    payload = _algebra_payload(args)
    payload["x"] = [_pair(z) for z in args.x]
    payload["y"] = [_pair(z) for z in args.y]
    status, body = _post(args, "/multiply", payload)
    if status != 200:
        return _fail(body)
    if args.format == "json":
        _emit(dump_json(body))
        return 0
    el = body["element"]
    text = element_to_text(_coeffs(el), unit_names(el["dim"]))
    _emit(f"element,{text}\n" if args.format == "csv" else text + "\n")
    return 0


def _cmd_norm(args) -> int:
    payload = _algebra_payload(args)
    payload["x"] = [_pair(z) for z in args.x]
    status, body = _post(args, "/norm", payload)
    if status != 200:
        return _fail(body)
    if args.format == "json":
        _emit(dump_json(body))
        return 0
    text = format_complex(complex(*body["value"]))
    _emit(f"value,{text}\n" if args.format == "csv" else text + "\n")
    return 0


def _cmd_classify(args) -> int:
    payload = {"p": _pair(args.p), "q": _pair(args.q), "dim": args.dim}
    status, body = _post(args, "/classify", payload)
    if status != 200:
        return _fail(body)
    if args.format == "json":
        _emit(dump_json(body))
        return 0
    if args.format == "csv":
        minors = ";".join(format_complex(complex(*m)) for m in body["minors"])
        _emit(f"kind,{body['kind']}\nminors,{minors}\n")
        return 0
    _emit(body["kind"] + "\n")
    return 0


def _cmd_rep(args) -> int:
    payload = _algebra_payload(args)
    if args.sqrt_d is not None:
        payload["sqrt_d"] = _pair(args.sqrt_d)
    status, body = _post(args, "/representation", payload)
    if status != 200:
        return _fail(body)
    if args.format == "json":
        _emit(dump_json(body))
        return 0
    names = unit_names(body["coeff_dim"], "coeff")
    texts = [[[element_to_text(_coeffs(entry), names) for entry in row]
              for row in mat["entries"]] for mat in body["mats"]]
    if args.format == "csv":
        lines = ["label,m00,m01,m10,m11"]
        for label, m in zip(body["labels"], texts):
            lines.append(",".join([label, m[0][0], m[0][1], m[1][0], m[1][1]]))
        _emit("\n".join(lines) + "\n")
        return 0
    lines = []
    for label, m in zip(body["labels"], texts):
        w = max(len(t) for row in m for t in row)
        lines.append(f"{label}:")
        lines += [f"  [{row[0].ljust(w)}  {row[1].ljust(w)}]" for row in m]
    _emit("\n".join(lines) + "\n")
    return 0


def _cmd_power(args) -> int:
    payload = {"rho": args.rho, "k": args.k, "theta": args.theta}
    status, body = _post(args, "/power", payload)
    if status != 200:
        return _fail(body)
    if args.format == "json":
        _emit(dump_json(body))
        return 0
    el = body["element"]
    text = element_to_text(_coeffs(el), unit_names(el["dim"]))
    if args.format == "csv":
        p = format_complex(complex(*body["p"]))
        q = format_complex(complex(*body["q"]))
        _emit(f"element,{text}\np,{p}\nq,{q}\nrho,{body['rho']}\n")
        return 0
    _emit(text + "\n")
    return 0


def _cmd_verify(args) -> int:
    payload = _algebra_payload(args)
    payload.update({"identity": args.identity, "trials": args.samples,
                    "seed": args.seed, "tol": args.tol})
    status, body = _post(args, "/verify", payload)
    if status != 200:
        return _fail(body)
    found = body["counterexample"] is not None
    if args.format == "json":
        _emit(dump_json(body))
    else:
        sep = "," if args.format == "csv" else ": "
        lines = [f"identity{sep}{body['identity']}",
                 f"trials{sep}{body['trials']}",
                 f"seed{sep}{body['seed']}",
                 f"max_residual{sep}{body['max_residual']:.10g}",
                 f"counterexample{sep}{'found' if found else 'none'}"]
        _emit("\n".join(lines) + "\n")
    if args.expect_holds and found:
        return 2
    return 0


def _add_output_flags(sp) -> None:
    sp.add_argument("--format", choices=("text", "json", "csv"),
                    default="text", help="output format")
    sp.add_argument("--url", default=None,
                    help="base URL of a running service (default: in-process)")


def _add_algebra_flags(sp, require_family: bool = True) -> None:
    sp.add_argument("--family", required=require_family,
                    help="algebra family: C, Q, O or S")
    sp.add_argument("--p", type=parse_complex, default=0j,
                    help="linear parameter (default 0)")
    sp.add_argument("--q", type=parse_complex, default=1 + 0j,
                    help="constant parameter (default 1)")
    sp.add_argument("--branch", choices=("upper", "lower"), default="upper",
                    help="discriminant root branch")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqalgebra",
        description="Two-parameter hypercomplex algebras: tables, norms, "
                    "matrix models, identities and fractional unit powers.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("table", help="multiplication table of a family")
    _add_algebra_flags(sp)
    _add_output_flags(sp)
    sp.set_defaults(handler=_cmd_table)

    sp = sub.add_parser("mul", help="multiply two elements")
    _add_algebra_flags(sp)
    sp.add_argument("--x", type=_element_literal, required=True,
                    help="left factor, comma separated coefficients")
    sp.add_argument("--y", type=_element_literal, required=True,
                    help="right factor, comma separated coefficients")
    _add_output_flags(sp)
    sp.set_defaults(handler=_cmd_mul)

    sp = sub.add_parser("norm", help="norm form value of an element")
    _add_algebra_flags(sp)
    sp.add_argument("--x", type=_element_literal, required=True,
                    help="element, comma separated coefficients")
    _add_output_flags(sp)
    sp.set_defaults(handler=_cmd_norm)

    sp = sub.add_parser("classify", help="division/split/nil-degenerate kind")
    sp.add_argument("--p", type=parse_complex, required=True)
    sp.add_argument("--q", type=parse_complex, required=True)
    sp.add_argument("--dim", type=int, default=4,
                    help="norm form dimension (default 4)")
    _add_output_flags(sp)
    sp.set_defaults(handler=_cmd_classify)

    sp = sub.add_parser("rep", help="2x2 matrix model of a family")
    _add_algebra_flags(sp)
    sp.add_argument("--sqrt-d", type=parse_complex, default=None,
                    help="explicit discriminant root for the lower branch")
    _add_output_flags(sp)
    sp.set_defaults(handler=_cmd_rep)

    sp = sub.add_parser("power", help="fractional power of the periodic unit")
    sp.add_argument("--rho", default="1", help="base root, 1 or i (default 1)")
    sp.add_argument("--k", type=float, required=True, help="periodic exponent")
    sp.add_argument("--theta", type=float, required=True,
                    help="power to raise the unit to")
    _add_output_flags(sp)
    sp.set_defaults(handler=_cmd_power)

    sp = sub.add_parser("verify", help="random-trial check of an identity")
    _add_algebra_flags(sp)
    sp.add_argument("--identity", choices=IDENTITIES, required=True)
    sp.add_argument("--samples", type=int, default=1000,
                    help="number of random trials (default 1000)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tol", type=float, default=1e-9,
                    help="residual threshold (default 1e-9)")
    sp.add_argument("--expect-holds", action="store_true",
                    help="exit 2 if a counterexample turns up")
    _add_output_flags(sp)
    sp.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    return args.handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
