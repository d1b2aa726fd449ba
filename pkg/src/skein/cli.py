"""Command-line front end.

Exit codes: 0 when every assertion holds, 1 on a failed assertion (the first
counterexample is reported), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .polycore import Weight, Window, from_text, to_json, to_text

SCHEMA = 1


class CheckFailed(Exception):
    pass


def env_window(default: Window) -> Window:
    """SKEIN_WINDOW = "qmin,qmax,tmax[,amin,amax]" overrides the default window."""
    raw = os.environ.get("SKEIN_WINDOW")
    if not raw:
        return default
    vals = [int(x) for x in raw.split(",")]
    if len(vals) not in (3, 5):
        raise ValueError("SKEIN_WINDOW needs 3 or 5 comma-separated integers")
    if len(vals) == 3:
        vals += [default.amin, default.amax]
    return Window(*vals)


def parse_window(s: str | None, default: Window) -> Window:
    if not s:
        return env_window(default)
    vals = [int(x) for x in s.split(",")]
    if len(vals) == 3:
        vals += [default.amin, default.amax]
    if len(vals) != 5:
        raise ValueError("--window needs qmin,qmax,tmax[,amin,amax]")
    return Window(*vals)


def parse_partition(s: str | None):
    from .symfun import Partition
    if not s:
        return Partition(())
    parts = tuple(int(x) for x in s.replace(" ", "").split(",") if x)
    if any(x < y for x, y in zip(parts, parts[1:])) or any(x < 0 for x in parts):
        raise ValueError("partition parts must be weakly decreasing and nonnegative")
    return Partition(tuple(x for x in parts if x))


def emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        print(text)


# ------------------------------------------------------------------ commands

def cmd_hdet(args):
    from .haiman import hdet
    cells = [tuple(c) for c in json.loads(args.shape)]
    p = hdet(cells)
    emit(args, {"shape": [list(c) for c in cells], "poly": to_json(p), "text": to_text(p)}, to_text(p))


def cmd_keydet(args):
    from .haiman import key_cells, key_det
    lam = parse_partition(args.lam)
    p = key_det(args.a, args.b, args.l, lam)
    cells = key_cells(args.a, args.b, args.l, lam)
    emit(args, {"cells": [list(c) for c in cells], "poly": to_json(p), "text": to_text(p)}, to_text(p))


def cmd_schur(args):
    from .polycore import Registry
    from .symfun import alphabet, schur, schur_jt
    lam = parse_partition(args.lam)
    names = [f"x{i}" for i in range(1, args.n + 1)]
    reg = Registry(names)
    A = alphabet("X", names)
    p = schur(lam, A, reg)
    if len(lam.parts) <= args.n and p != schur_jt(lam, A, reg):
        raise CheckFailed(f"bialternant and Jacobi-Trudi disagree for {lam.parts}")
    emit(args, {"lambda": list(lam.parts), "poly": to_json(p), "text": to_text(p)}, to_text(p))


def _hilbert_params(args):
    vmax = args.vmax if args.vmax is not None else (args.tmax // 2 if args.tmax is not None else 3)
    return args.qmax, vmax


def cmd_ideal(args):
    from .ideals import default_hilbert_weights, key_generators, key_ideal
    if args.action == "gens":
        gens = key_generators(args.a, args.b)
        rows = [{"l": l, "lambda": list(lam.parts), "text": to_text(g), "poly": to_json(g)}
                for (l, lam), g in gens]
        text = "\n".join(f"Key_{r['l']}({','.join(map(str, r['lambda']))}): {r['text']}" for r in rows)
        emit(args, {"a": args.a, "b": args.b, "generators": rows}, text)
    elif args.action == "member":
        if not args.poly:
            raise ValueError("member needs --poly")
        I = key_ideal(args.a, args.b)
        p = from_text(args.poly, I.ring.reg)
        ok, cert = I.member(p)
        cert_rows = [{"generator": I.labels[i] if I.labels else i, "coef": to_text(c)} for i, c in sorted(cert.items())] \
            if ok else []
        payload = {"member": ok, "certificate": [{"generator": _label(r["generator"]), "coef": r["coef"]}
                                                 for r in cert_rows]}
        text = ("member\n" + "\n".join(f"  {_label(r['generator'])}: {r['coef']}" for r in cert_rows)) if ok \
            else "not a member"
        emit(args, payload, text)
        if not ok:
            raise CheckFailed(f"{args.poly} is not in the ideal within the window")
    else:
        qmax, vmax = _hilbert_params(args)
        weights = default_hilbert_weights(args.a, args.b, qmax, vmax)
        hil = key_ideal(args.a, args.b).hilbert(weights)
        rows = [{"a": w.a, "q": w.q, "t": w.t, "coef": str(c)}
                for w, c in sorted(hil.items(), key=lambda kv: (kv[0].t, kv[0].q)) if c]
        text = "\n".join(f"{r['coef']} a^{r['a']} q^{r['q']} t^{r['t']}" for r in rows)
        emit(args, {"table": rows}, text)


def _label(g):
    if isinstance(g, tuple) and len(g) == 2:
        l, lam = g
        parts = lam.parts if hasattr(lam, "parts") else tuple(lam)
        return f"Key_{l}({','.join(map(str, parts))})"
    return str(g)


def cmd_series(args):
    from .homseries import (default_window, hopf_crosscheck, hopf_parity_series, mono_text, series_table,
                            unknot_series)
    if args.action == "unknot":
        b = args.b if args.b is not None else 1
        s = unknot_series(b, deformed=args.deformed, dual=args.dual)
        W = parse_window(args.window, default_window(b, b) if not args.dual else Window(-20, 20, 12, 0, b))
        table = series_table(s, W, max(b, 1))
        emit(args, {"expr": str(s), "table": table}, str(s))
    elif args.action == "hopf":
        a, b = args.a, args.b
        s = hopf_parity_series(a, b, hochschild_bottom=args.bottom, deformed=args.deformed)
        W = parse_window(args.window, default_window(a, b))
        table = series_table(s, W, max(a, b, 1))
        odd = [r for r in table if r["t"] % 2]
        emit(args, {"expr": str(s), "table": table, "parity": not odd}, str(s))
        if odd:
            raise CheckFailed(f"odd t-degree at {odd[0]}")
    else:
        r = hopf_crosscheck(args.a, args.b, args.qmax, args.vmax if args.vmax is not None else 3)
        text = f"equal={r.equal} shift={mono_text(r.shift)} checked={r.checked}"
        emit(args, r.to_json(), text)
        if not r.equal:
            w, x, y = r.mismatches[0]
            raise CheckFailed(f"series differ at {w}: {x} vs {y}")


COORD_MAPS = {
    ("u", "v"): "u_to_v", ("v", "u"): "v_to_u",
    ("v", "vd"): "v_to_vdot", ("vd", "v"): "vdot_to_v",
    ("y", "v"): "y_to_v", ("y", "u"): "y_to_u", ("v", "y"): "y_from_v",
}


def cmd_coords(args):
    from . import coords
    if (args.src, args.dst) == ("unreduced", "reduced"):
        if args.b is None:
            raise ValueError("the reduction needs --b")
        reg = coords.two_strand_registry(args.a, args.b)
        m = coords.reduction_pi(args.a, args.b, reg)
    else:
        key = (args.src, args.dst)
        if key not in COORD_MAPS:
            raise ValueError(f"no map from {args.src} to {args.dst}; known: "
                             + ", ".join(f"{s}->{d}" for s, d in sorted(COORD_MAPS)) + ", unreduced->reduced")
        reg = coords.strand_registry(args.a)
        m = getattr(coords, COORD_MAPS[key])(args.a, reg)
    images = {n: to_text(p) for n, p in sorted(m.images.items())}
    emit(args, {"from": args.src, "to": args.dst, "images": images},
         "\n".join(f"{n} -> {t}" for n, t in images.items()))


def cmd_koszul(args):
    from .curvedkoszul import build_curved_koszul, contract_if_unit
    if args.action == "build":
        C = build_curved_koszul(args.b)
        if not C.check_curvature():
            raise CheckFailed("(d + Delta)^2 differs from the curvature")
        emit(args, {k: v for k, v in C.to_json().items() if k != "schema"},
             f"basis: {', '.join(r['label'] for r in C.to_json()['basis'])}\ncurvature: {to_text(C.curvature)}")
    else:
        C, h = contract_if_unit(args.b, args.invert)
        n = len(h)
        entries = [{"row": r, "col": c, "entry": to_text(h[r][c])} for r in range(n) for c in range(n) if h[r][c]]
        emit(args, {"invert": args.invert, "homotopy": entries},
             f"null-homotopy with {args.invert} inverted:\n"
             + "\n".join(f"  h[{e['row']}][{e['col']}] = {e['entry']}" for e in entries))


def cmd_digon(args):
    from .ideals import digon_report
    qmax = None
    if args.window:
        qmax = int(args.window.split(",")[0])
    report, failures = digon_report(args.a, args.b, qmax=qmax, vmax=args.vmax)
    emit(args, {"report": report, "failures": [str(f) for f in failures]},
         "\n".join(f"{k}: {v}" for k, v in report.items()))
    if failures or not all(report[k] for k in ("d2", "dJ_in_J", "J_exact", "E_exact")):
        raise CheckFailed(f"digon complex check failed: {failures[0] if failures else report}")


def cmd_verify(args):
    from .suites import SUITES, run_checks, suite_checks
    if args.suite != "all" and args.suite not in SUITES:
        raise ValueError(f"unknown suite {args.suite}")
    results = run_checks(suite_checks(args.suite), args.jobs)
    if args.format == "json":
        rows = [r.to_json() for r in results]
        if not args.timings:
            for r in rows:
                r.pop("seconds")
        print(json.dumps({"schema": SCHEMA, "suite": args.suite, "results": rows,
                          "ok": all(r.ok for r in results)}, sort_keys=True))
    else:
        for r in results:
            line = f"{'PASS' if r.ok else 'FAIL'} {r.suite}: {r.name}"
            if r.detail:
                line += f" ({r.detail})"
            if args.timings:
                line += f" [{r.seconds:.2f}s]"
            print(line)
    bad = [r for r in results if not r.ok]
    if bad:
        raise CheckFailed(f"{bad[0].suite}: {bad[0].name}: {bad[0].detail or 'failed'}")


# ------------------------------------------------------------------ parser

def build_parser():
    p = argparse.ArgumentParser(prog="skein", description="Exact computations for colored link homology.")
    p.add_argument("--format", choices=["text", "json"], default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hdet", help="Haiman determinant of a list of cells")
    s.add_argument("--shape", required=True, help='JSON list of [x, y] exponent pairs, e.g. "[[1,0],[0,0]]"')
    s.set_defaults(func=cmd_hdet)

    s = sub.add_parser("keydet", help="key-shape determinant")
    for f in ("--a", "--b", "--l"):
        s.add_argument(f, type=int, required=True)
    s.add_argument("--lambda", dest="lam", default="", help="comma-separated parts")
    s.set_defaults(func=cmd_keydet)

    s = sub.add_parser("schur", help="Schur polynomial")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_schur)

    s = sub.add_parser("ideal", help="Hopf-link ideal: generators, membership, Hilbert series")
    s.add_argument("action", choices=["gens", "member", "hilbert"])
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--poly")
    s.add_argument("--qmax", type=int)
    s.add_argument("--tmax", type=int)
    s.add_argument("--vmax", type=int)
    s.set_defaults(func=cmd_ideal)

    s = sub.add_parser("series", help="Poincare series")
    s.add_argument("action", choices=["unknot", "hopf", "compare"])
    s.add_argument("--a", type=int, default=1)
    s.add_argument("--b", type=int)
    s.add_argument("--deformed", action="store_true")
    s.add_argument("--dual", action="store_true")
    s.add_argument("--bottom", action="store_true", help="keep only the a^0 part")
    s.add_argument("--window", help="qmin,qmax,tmax[,amin,amax]")
    s.add_argument("--qmax", type=int)
    s.add_argument("--vmax", type=int)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("coords", help="coordinate changes")
    s.add_argument("action", choices=["map"])
    s.add_argument("--from", dest="src", required=True)
    s.add_argument("--to", dest="dst", required=True)
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int)
    s.set_defaults(func=cmd_coords)

    s = sub.add_parser("koszul", help="curved Koszul complex")
    s.add_argument("action", choices=["build", "contract"])
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--invert")
    s.set_defaults(func=cmd_koszul)

    s = sub.add_parser("digon", help="digon complex checks")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--window", help="qmax for the x-degree bound")
    s.add_argument("--vmax", type=int, default=2)
    s.set_defaults(func=cmd_digon)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=["symfun", "frobdem", "coords", "koszul", "keylemma", "ideals", "series", "all"])
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--timings", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "series":
        if args.action == "unknot" and args.b is None:
            args.b = 1
        if args.action in ("hopf", "compare") and args.b is None:
            args.b = 1
    try:
        args.func(args)
    except CheckFailed as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())
