"""Command-line front end.

Every subcommand talks to the HTTP service: either a remote one named with
--server, or an in-process instance of the same app.  The CLI itself only
builds requests and renders payloads, so local and remote runs exercise the
identical code path.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .constants import load_constants, pinned_constants
from .service.app import create_app

SCHEMES = ("S", "V", "SV", "S+V")


def _make_client(args):
    if args.server:
        if args.constants:
            raise SystemExit("--constants cannot override a remote server's constant set")
        import httpx

        return httpx.Client(base_url=args.server, timeout=60.0)
    import warnings

    with warnings.catch_warnings():
        # this environment pairs starlette with an httpx it warns about; harmless
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

    c = load_constants(args.constants) if args.constants else pinned_constants()
    return TestClient(create_app(c))


def _payload(resp):
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except Exception:
            detail = resp.text
        raise SystemExit(f"service error {resp.status_code}: {detail}")
    return resp.json()


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _emit_rows(rows: list[dict], fmt: str, columns: list[str] | None = None) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
        return
    if not rows:
        return
    cols = columns or list(rows[0].keys())
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for row in rows:
            writer.writerow([_fmt(row.get(col, "")) for col in cols])
        sys.stdout.write(buf.getvalue())
        return
    matrix = [cols] + [[_fmt(row.get(col, "")) for col in cols] for row in rows]
    widths = [max(len(r[i]) for r in matrix) for i in range(len(cols))]
    print("  ".join(h.ljust(w) for h, w in zip(cols, widths)).rstrip())
    print("  ".join("-" * w for w in widths))
    for r in matrix[1:]:
        print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())


def _emit_dict(d: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(d, indent=2))
        return
    if fmt == "csv":
        _emit_rows([d], "csv")
        return
    width = max(len(k) for k in d)
    for k, v in d.items():
        print(f"{k.ljust(width)}  {_fmt(v)}")


def _schemes(arg: str) -> list[str]:
    return list(SCHEMES) if arg == "all" else [arg]


def _cmd_constants(client, args) -> int:
    data = _payload(client.get("/constants"))
    if args.format == "json":
        print(json.dumps(data, indent=2))
        return 0
    rows = [{"section": "constants", "key": k, "value": v}
            for k, v in data["constants"].items()]
    rows += [{"section": "atom", "key": a["label"],
              "value": f"z={a['z']} b={a['b']} r_fm={a['r_n_fm']}"}
             for a in data["atoms"]]
    rows += [{"section": "experiment", "key": e["key"],
              "value": f"{e['value_hz']} Hz +- {e['uncertainty_hz']}"}
             for e in data["experiments"]]
    _emit_rows(rows, args.format)
    return 0


def _cmd_level(client, args) -> int:
    rows = [_payload(client.post("/level", json={
        "atom": args.atom, "state": args.state, "scheme": sch}))
        for sch in _schemes(args.scheme)]
    _emit_rows(rows, args.format)
    return 0


def _terms_from_args(args) -> list[dict]:
    if args.term and (args.upper or args.lower):
        raise SystemExit("give either --term entries or --upper/--lower, not both")
    if args.term:
        terms = []
        for text in args.term:
            try:
                coeff, at, st = text.split(":")
                Fraction(coeff)
            except ValueError as exc:
                raise SystemExit(f"bad --term {text!r}; expected COEFF:ATOM:STATE") from exc
            terms.append({"coeff": coeff, "atom": at, "state": st})
        return terms
    if not (args.upper and args.lower):
        raise SystemExit("need --upper and --lower, or --term entries")
    return [{"coeff": "1", "atom": args.atom, "state": args.upper},
            {"coeff": "-1", "atom": args.atom, "state": args.lower}]


def _cmd_transition(client, args) -> int:
    terms = _terms_from_args(args)
    rows = [_payload(client.post("/transition", json={"terms": terms, "scheme": sch}))
            for sch in _schemes(args.scheme)]
    _emit_rows(rows, args.format)
    return 0


def _cmd_lamb(client, args) -> int:
    rows = [_payload(client.post("/lamb", json={
        "kind": args.kind, "atom": args.atom, "scheme": sch}))
        for sch in _schemes(args.scheme)]
    _emit_rows(rows, args.format)
    return 0


_TABLE1_COLUMNS = ["ratio", "zeta_S", "minus_ln_S", "zeta_V", "minus_ln_V",
                   "zeta_S+V", "minus_ln_S+V", "zeta_SV", "minus_ln_SV"]


def _cmd_table1(client, args) -> int:
    data = _payload(client.get("/table1"))
    rows = [{"ratio": r["ratio"],
             "zeta_S": r["zeta_S"], "minus_ln_S": r["minus_ln_S"],
             "zeta_V": r["zeta_V"], "minus_ln_V": r["minus_ln_V"],
             "zeta_S+V": r["zeta_SplusV"], "minus_ln_S+V": r["minus_ln_SplusV"],
             "zeta_SV": r["zeta_SV"], "minus_ln_SV": r["minus_ln_SV"]}
            for r in data]
    _emit_rows(rows, args.format, _TABLE1_COLUMNS)
    return 0


_REPORT_COLUMNS = ["key", "scheme", "ours_hz", "reference_text", "rel_gap",
                   "rel_tol", "status", "note"]


def _cmd_report(client, args) -> int:
    data = _payload(client.post("/report", json={
        "scheme": args.scheme, "strict": args.strict}))
    if args.format == "json":
        print(json.dumps(data["cases"], indent=2))
    else:
        _emit_rows(data["cases"], args.format,
                   _REPORT_COLUMNS if args.format == "table" else None)
    return int(data["exit_code"])


def _cmd_appendix(client, args) -> int:
    _emit_dict(_payload(client.get("/appendix")), args.format)
    return 0


def _cmd_oracle(client, args) -> int:
    checks = _payload(client.get("/oracle"))
    _emit_rows(checks, args.format)
    return 0 if all(chk["ok"] for chk in checks) else 1


def _cmd_twobody(client, args) -> int:
    zs = [args.z] if args.z is not None else [1.0, 2.0, 4.0, 8.0, 12.0, 16.0, 16.5]
    rows = []
    for z in zs:
        body = {"m1": args.m1, "m2": args.m2, "z_eff": z, "n": args.n}
        data = _payload(client.post("/twobody", json=body))
        data = {"z_eff": z, **data}
        rows.append(data)
    _emit_rows(rows, args.format)
    return 0


def _cmd_serve(client, args) -> int:
    import uvicorn

    c = load_constants(args.constants) if args.constants else pinned_constants()
    uvicorn.run(create_app(c), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--constants", metavar="FILE", default=None,
                        help="JSON file overriding pinned constant values")
    common.add_argument("--server", metavar="URL", default=None,
                        help="talk to a running service instead of in-process")
    common.add_argument("--format", choices=("table", "csv", "json"),
                        default="table")
    scheme = argparse.ArgumentParser(add_help=False)
    scheme.add_argument("--scheme", choices=("S", "V", "SV", "S+V", "all"),
                        default="S+V")

    parser = argparse.ArgumentParser(
        prog="rdelamb",
        description="hydrogenlike energy levels and Lamb shifts with "
                    "off-mass-shell radiative corrections")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("constants", parents=[common],
                   help="pinned constant set, atoms, and reference measurements")

    p = sub.add_parser("level", parents=[common, scheme],
                       help="all contributions for one bound level")
    p.add_argument("--atom", default="H")
    p.add_argument("--state", default="2S", help="e.g. 2S, 2P1/2, 4D5/2")

    p = sub.add_parser("transition", parents=[common, scheme],
                       help="signed rational combination of levels")
    p.add_argument("--atom", default="H")
    p.add_argument("--upper")
    p.add_argument("--lower")
    p.add_argument("--term", action="append",
                   help="COEFF:ATOM:STATE, repeatable; write negative weights "
                        "with =, e.g. --term=-5/4:H:2S")

    p = sub.add_parser("lamb", parents=[common, scheme],
                       help="classic 2S-2P splitting or the absolute 1S chain")
    p.add_argument("--kind", choices=("classic", "1s"), default="classic")
    p.add_argument("--atom", default="H")

    sub.add_parser("table1", parents=[common],
                   help="off-mass-shell parameter for all schemes and Z^2/n^2 rows")

    p = sub.add_parser("report", parents=[common, scheme],
                       help="every reference value with its agreement status")
    p.set_defaults(scheme="all")
    p.add_argument("--strict", action="store_true",
                   help="count documented reference discrepancies as failures")

    sub.add_parser("appendix", parents=[common],
                   help="noncovariant recomputation of the classic splitting")
    sub.add_parser("oracle", parents=[common],
                   help="independent quadrature and expansion checks")

    p = sub.add_parser("twobody", parents=[common],
                       help="relativistic two-body energy for a charge sweep")
    p.add_argument("--m1", type=float, default=1.0)
    p.add_argument("--m2", type=float, default=1.0)
    p.add_argument("--z", type=float, default=None,
                   help="single charge product instead of the default sweep")
    p.add_argument("--n", type=int, default=1)

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


_HANDLERS = {
    "constants": _cmd_constants,
    "level": _cmd_level,
    "transition": _cmd_transition,
    "lamb": _cmd_lamb,
    "table1": _cmd_table1,
    "report": _cmd_report,
    "appendix": _cmd_appendix,
    "oracle": _cmd_oracle,
    "twobody": _cmd_twobody,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        return _cmd_serve(None, args)
    client = _make_client(args)
    try:
        return _HANDLERS[args.command](client, args)
    finally:
        client.close()


if __name__ == "__main__":
    sys.exit(main())
