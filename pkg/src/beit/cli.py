"""``beit`` command line: invariant reports, verification suites, table export.

Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 oracle cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import formulas as F
from . import graphs as G
from .algebra import default_prime, is_prime
from .resolution import (EXTENDED_CAP, ORACLE_CAP, OracleCapError, betti_table, depth_of,
                         extremal_positions, summarize)
from .verify import SUITES, VerifyConfig, run_suite

log = logging.getLogger("beit")

EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 1, 2, 3


class InputError(Exception):
    pass


def _load_graph(args):
    try:
        if args.family:
            return G.parse_family(args.family)
        return G.read_graph_json(args.file)
    except (G.GraphError, OSError, json.JSONDecodeError, KeyError, TypeError) as e:
        raise InputError(f"cannot read graph: {e}") from None


def _prime(args):
    p = args.prime if args.prime is not None else default_prime()
    if not is_prime(p) or p >= 2 ** 31:
        raise InputError(f"--prime must be a prime below 2^31, got {p}")
    return p


def _cap(args):
    if args.extended:
        log.warning("extended oracle budget: n <= %d, expect long runtimes for the Koszul method", EXTENDED_CAP)
        return EXTENDED_CAP
    return ORACLE_CAP


def _dominating_vertex(g):
    for v in reversed(g.vertices):
        if len(g.neighbors(v)) == g.n - 1:
            return v
    return None


def formula_report(g, family, p, cap, method):
    """Everything the closed forms give for ``g``; the oracle is used only on proper subgraphs."""
    out = {}
    kind, _, rest = (family or "").partition(":")
    params = [int(x) for x in rest.split(",")] if rest else []
    table, source = None, None
    if kind == "wheel" and params and params[0] >= 5:
        table, source = F.wheel_betti(params[0], p), f"wheel closed form, n={params[0]}"
    elif g.n >= 2 and not g.is_complete():
        v = _dominating_vertex(g)
        if v is not None:
            h = G.induced_subgraph(g, [u for u in g.vertices if u != v])
            if h.n <= cap and not h.is_complete():
                table = F.betti_cone_formula(betti_table(h, p, method, cap), G.clique_vector(h), h.n)
                source = f"cone formula over G - {v} (oracle on {h.n} vertices)"
    if table is not None:
        out["source"] = source
        out["table"] = table
        out["pd"], out["reg"], out["depth"] = table.pd, table.reg, depth_of(table)
        out["extremal"] = extremal_positions(table)
    leaf = (lambda x: depth_of(betti_table(x, p, method, cap))) if g.n - 1 <= cap else None
    try:
        d = F.predict_depth(g, lambda x: leaf(x) if leaf and x.n <= cap else None)
    except OracleCapError:
        d = None
    if d is not None:
        out["depth_chain"] = d
    if kind == "multipartite" and len(params) >= 2 and min(params) >= 2:
        out["depth_multipartite"] = F.depth_multipartite(params)
    depth = out.get("depth", out.get("depth_chain", out.get("depth_multipartite")))
    if depth is not None:
        out["dim"] = G.krull_dimension(g)
        out["cmdef"] = out["dim"] - depth
    return out


def _fmt_ext(ext):
    return ", ".join(f"beta_{{{i},{i + j}}}={v}" for i, j, v in ext) or "-"


def _section_text(title, data):
    lines = [f"[{title}]"]
    for k in ("source", "pd", "depth", "depth_chain", "depth_multipartite", "reg", "dim", "cmdef"):
        if k in data:
            lines.append(f"  {k}: {data[k]}")
    if "extremal" in data:
        lines.append(f"  extremal: {_fmt_ext(data['extremal'])}")
    if "table" in data:
        lines.extend("  " + ln for ln in data["table"].diagram().splitlines())
    if len(lines) == 1:
        lines.append("  no closed form applies to this graph")
    return lines


def _section_json(data):
    out = {}
    for k, v in data.items():
        if k == "table":
            out[k] = v.to_json()
        elif k == "extremal":
            out[k] = [list(e) for e in v]
        else:
            out[k] = v
    return out


def cmd_invariants(args):
    g = _load_graph(args)
    p, cap = _prime(args), _cap(args)
    want_oracle = args.oracle or not (args.formula or args.predict)
    report = {"graph": {
        "source": args.family or args.file, "n": g.n, "edges": [list(e) for e in g.sorted_edges()],
        "connected": g.is_connected(), "complete": g.is_complete(),
        "kappa": G.vertex_connectivity(g), "dim": G.krull_dimension(g),
        "cliques": list(G.clique_vector(g).counts), "p": p,
    }}
    if args.formula:
        report["formula"] = formula_report(g, args.family, p, cap, args.method)
    if args.predict:
        kind, _, rest = (args.family or "").partition(":")
        if kind != "grb":
            raise InputError("--predict needs --family grb:r,b")
        r, b = (int(x) for x in rest.split(","))
        try:
            report["predict"] = F.grb_profile(r, b).to_json()
        except F.FormulaError as e:
            raise InputError(str(e)) from None
    if want_oracle:
        t = betti_table(g, p, args.method, cap)
        s = summarize(t, g)
        report["oracle"] = {"method": args.method, "pd": s.pd, "depth": s.depth, "reg": s.reg,
                            "dim": s.dim, "cmdef": s.cmdef, "extremal": s.extremal, "table": t}
    if args.json:
        out = dict(report)
        for k in ("formula", "oracle"):
            if k in out:
                out[k] = _section_json(out[k])
        print(json.dumps(out, sort_keys=True, indent=1))
        return 0
    gr = report["graph"]
    print(f"graph: {gr['source']}  n={g.n}  edges={len(g.edges)}  connected={gr['connected']}  complete={gr['complete']}")
    print(f"kappa={gr['kappa']}  dim={gr['dim']}  cliques={tuple(gr['cliques'])}  p={p}")
    if "formula" in report:
        print("\n".join(_section_text("formula", report["formula"])))
    if "predict" in report:
        pr = report["predict"]
        print("[predict]")
        print(f"  n={pr['n']}  pd={pr['pd']}  depth={pr['depth']}  reg={pr['reg']}")
        print(f"  extremal ({len(pr['extremal'])}): {_fmt_ext(pr['extremal'])}")
    if "oracle" in report:
        print("\n".join(_section_text(f"oracle:{args.method}", report["oracle"])))
    return 0


def cmd_verify(args):
    cfg = VerifyConfig(extended=args.extended, p=_prime(args), method=args.method)
    if args.extended:
        _cap(args)
    results = run_suite(args.suite, cfg)
    ok = True
    payload = {}
    for name in sorted(results):
        reps = sorted(results[name], key=lambda r: r.instance)
        passed = all(r.passed for r in reps)
        ok &= passed
        payload[name] = {"instances": len(reps), "checks": sum(len(r.checks) for r in reps),
                         "pass": passed, "reports": [r.to_json(args.timing) for r in reps]}
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=1))
    else:
        for name in sorted(payload):
            d = payload[name]
            nfail = sum(not r["pass"] for r in d["reports"])
            status = "PASS" if d["pass"] else "FAIL"
            print(f"{status} {name}: {d['instances']} instances, {d['checks']} checks, {nfail} failing")
            for r in d["reports"]:
                for c in r["checks"]:
                    if not c["pass"]:
                        print(f"    {r['instance']} {c['name']}: expected {c['expected']} got {c['actual']}")
    return 0 if ok else EXIT_FAIL


FORMATS = ("json", "diagram-text", "csv")


def cmd_export(args):
    if args.format not in FORMATS:
        raise InputError(f"unknown format {args.format!r}; choose from {', '.join(FORMATS)}")
    g = _load_graph(args)
    t = betti_table(g, _prime(args), args.method, _cap(args))
    if args.format == "json":
        text = t.dumps() + "\n"
    elif args.format == "csv":
        text = t.to_csv()
    else:
        text = t.diagram() + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _graph_args(sp):
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="name:params, e.g. wheel:5, grb:3,2, multipartite:2,3")
    src.add_argument("--file", help="graph JSON file ({\"n\": .., \"edges\": [[u, v], ..]})")


def _common(sp):
    sp.add_argument("--extended", action="store_true", help=f"raise the oracle cap to n <= {EXTENDED_CAP}")
    sp.add_argument("--prime", type=int, default=None, help="field characteristic (default $BEIT_PRIME or 32003)")
    sp.add_argument("--method", choices=("syzygy", "koszul"), default="syzygy", help="oracle strategy")


def build_parser():
    ap = argparse.ArgumentParser(prog="beit", description="Betti numbers and depth of binomial edge ideals")
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("invariants", help="depth, dim, cmdef, pd, reg, extremal Betti numbers")
    _graph_args(sp)
    _common(sp)
    sp.add_argument("--formula", action="store_true", help="closed-form results (cone, wheel, join chain)")
    sp.add_argument("--oracle", action="store_true", help="exact computation (default when no mode is given)")
    sp.add_argument("--predict", action="store_true", help="G_{r,b} profile for --family grb:r,b")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("verify", help="formula-versus-oracle suites")
    sp.add_argument("suite", choices=["all", *SUITES])
    _common(sp)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--timing", action="store_true", help="include wall times (output no longer byte-stable)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="write a Betti table")
    _graph_args(sp)
    _common(sp)
    sp.add_argument("--format", default="json", help="json, diagram-text or csv")
    sp.add_argument("--output", "-o", help="output path (default stdout)")
    sp.set_defaults(func=cmd_export)
    return ap


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="beit: %(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"beit: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OracleCapError as e:
        print(f"beit: error: {e}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
