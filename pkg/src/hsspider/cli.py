"""Command line: ``hsspider invariant | graph-verify | paper-suite``.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 a resource
guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from . import graphs, models
from .errors import ResourceLimitError
from .exact import Frac, GoldenNumber, LaurentPoly, TAU, parse_golden
from .kauffman import bracket, kauffman
from .links import LinkDiagram, MoveError, PDError, checkerboard, parse_pd, split
from .webs import (UnsupportedWebError, WebError, checkerboard_web, evaluate_link_b2, expand_dashed,
                   parse_web, reduce_web)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
MODELS = ("bracket", "kauffman", "potts", "higman-sims", "b2", "pentagon-verify")


class InputError(ValueError):
    pass


def _render_frac(v: Frac) -> str:
    c = v.cleared()
    return str(c) if c is not None else "(%s) / (%s)" % (v.num, v.den)


def symmetric_to_c(p: LaurentPoly) -> Optional[LaurentPoly]:
    """Write a palindromic Laurent polynomial in q as a polynomial in c = q + 1/q."""
    q = LaurentPoly.gen("q")
    c = q + q ** -1
    rest = p.with_var("q")
    out = LaurentPoly(var="c")
    cg = LaurentPoly.gen("c")
    while not rest.is_zero():
        lo, hi = rest.degree_span()
        if lo != -hi or hi < 0:
            return None
        lead = rest.coeffs()[hi]
        rest = rest - (c ** hi) * lead
        out = out + (cg ** hi) * lead
    return out


# ---------------------------------------------------------------------------
# invariant
# ---------------------------------------------------------------------------


def _hs_coloring(args):
    d, col = args
    _, lm = models.higman_sims_model()
    out = []
    for p in split(d):
        c = checkerboard(p)[col]
        Z, chi = models.elimination_order_sum(lm, p, c)
        out.append((str(Z), chi))
    return out


def _link_invariant(model: str, d: LinkDiagram, workers: int) -> dict:
    res = {"model": model, "input": d.to_pd()}
    if model == "bracket":
        res["value"] = str(bracket(d))
    elif model == "kauffman":
        res["value"] = _render_frac(kauffman(d))
    elif model == "b2":
        res["value"] = _render_frac(evaluate_link_b2(d))
    elif model == "potts":
        pieces = []
        for p in split(d):
            cols = []
            for c in checkerboard(p):
                cols.append({"chi": models.black_euler(p, c), "black_faces": sorted(c.black),
                             "Z": str(models._potts_Z(p, c))})
            pieces.append(cols)
        ok = models.potts_symbolic_identity(d)
        res["value"] = str(bracket(d).with_var("u"))
        res["colorings"] = pieces
        res["identity"] = ok
    elif model == "higman-sims":
        jobs = [(d, 0), (d, 1)]
        if workers > 1:
            with ProcessPoolExecutor(max_workers=min(workers, 2)) as ex:
                per = list(ex.map(_hs_coloring, jobs))
        else:
            per = [_hs_coloring(j) for j in jobs]
        vals = []
        for pieces in per:
            v = GoldenNumber(1)
            for Z, chi in pieces:
                v = v * parse_golden(Z) / GoldenNumber(-10) ** chi
            vals.append(v)
        res["value"] = str(vals[0])
        res["colorings"] = [[{"chi": chi, "Z": Z} for Z, chi in pieces] for pieces in per]
        res["identity"] = vals[0] == vals[1]
    else:
        raise InputError("model %s takes a web file, not a PD code" % model)
    return res


def _web_value(w) -> LaurentPoly:
    if w.dashed or w.loops["D"]:
        v = expand_dashed(w).evaluate().cleared()
        return v.with_var("q")
    return reduce_web(w)


def _web_invariant(model: str, w) -> dict:
    res = {"model": model}
    if model == "b2":
        res["value"] = str(_web_value(w))
        return res
    if model in ("higman-sims", "pentagon-verify"):
        if model == "higman-sims":
            m, _ = models.higman_sims_model()
        else:
            m = models.pentagon_model()
        cols = checkerboard_web(w)
        vals, info = [], []
        for c in cols:
            Z, chi = models.elimination_order_sum(m, w, c)
            vals.append(Z / GoldenNumber.coerce(m.x) ** chi)
            info.append({"chi": chi, "Z": str(Z)})
        res["value"] = str(vals[0])
        res["colorings"] = info
        ref = _web_value(w)
        if model == "higman-sims":
            expect = ref.evaluate(TAU ** 2)
        else:
            pc = symmetric_to_c(ref)
            if pc is None:
                raise InputError("web value is not symmetric in q and 1/q")
            expect = pc.evaluate(TAU)
        res["reduced"] = str(expect)
        res["identity"] = vals[0] == vals[1] == expect
        return res
    raise InputError("model %s takes a PD code, not a web" % model)


def _emit(res: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(res, sort_keys=True))
        return
    print("%s: %s" % (res["model"], res["value"]))
    if "colorings" in res:
        for i, col in enumerate(res["colorings"]):
            if isinstance(col, list):  # per split piece
                for j, piece in enumerate(col):
                    print("  coloring %d piece %d: chi = %d, Z = %s" % (i, j, piece["chi"], piece["Z"]))
            else:
                print("  coloring %d: chi = %d, Z = %s" % (i, col["chi"], col["Z"]))
    if "reduced" in res:
        print("  reduced web value: %s" % res["reduced"])
    if "identity" in res:
        print("  check: %s" % ("PASS" if res["identity"] else "FAIL"))


def cmd_invariant(args) -> int:
    if (args.pd is None) == (args.web_file is None):
        raise InputError("give exactly one of --pd or --web-file")
    if args.pd is not None:
        d = parse_pd(args.pd)
        res = _link_invariant(args.model, d, args.workers)
    else:
        with open(args.web_file) as fh:
            w = parse_web(fh.read())
        res = _web_invariant(args.model, w)
    _emit(res, args.format)
    return EXIT_OK if res.get("identity", True) else EXIT_FAIL


# ---------------------------------------------------------------------------
# graph-verify
# ---------------------------------------------------------------------------


def _named_graph(name: str):
    name = name.lower()
    if name in ("hs", "higman-sims"):
        return graphs.higman_sims(), 3
    if name == "pentagon":
        return graphs.pentagon(), TAU
    if name.startswith("k") and name[1:].isdigit():
        return graphs.complete_graph(int(name[1:])), 3
    if name.startswith("p") and name[1:].isdigit():
        return graphs.path_graph(int(name[1:])), 3
    raise InputError("unknown graph %r (hs, pentagon, kN, pN)" % name)


def cmd_graph_verify(args) -> int:
    rows: List[models.ReportRow] = []
    if args.graph is None:
        pg = graphs.build_pg24()
        hov = graphs.hyperovals(pg)
        cls = graphs.hyperoval_classes(hov)
        rows.append(models.ReportRow("PG(2,4)", len(pg.points) == 21 and len(pg.lines) == 21,
                                     "%d points, %d lines" % (len(pg.points), len(pg.lines))))
        sizes = sorted(len(c) for c in cls)
        rows.append(models.ReportRow("hyperovals", len(hov) == 168 and sizes == [56, 56, 56],
                                     "%d in classes %s" % (len(hov), sizes)))
        st = graphs.build_steiner22(pg)
        rows.append(models.ReportRow("S(3,6,22)", graphs.verify_steiner(st), "%d blocks" % len(st.blocks)))
        g = graphs.build_higman_sims(st)
        srg = graphs.srg_check(g)
        rows.append(models.ReportRow("srg(100,22,0,6)", srg is not None and srg.astuple() == (100, 22, 0, 6)))
        rows.append(models.ReportRow("spectrum {22:1, 2:77, -8:22}",
                                     graphs.spectrum_check(g, {22: 1, 2: 77, -8: 22})))
        sections = [("higman-sims (q^1/2 = tau)", g, 3), ("pentagon", graphs.pentagon(), TAU)]
    else:
        g, c = _named_graph(args.graph)
        sections = [(g.name or args.graph, g, c)]
    for label, g, c in sections:
        rows.append(models.ReportRow("-- " + label, True, "%d vertices" % g.n))
        rows.extend(models.verify_model_constraints(g, c, k_point=g.n <= 200))
    table = rows
    if args.format == "json":
        print(json.dumps([{"name": r.name, "passed": r.passed, "detail": r.detail} for r in table],
                         sort_keys=True))
    else:
        for r in table:
            print(r.name if r.name.startswith("--") else str(r))
    failed = [r for r in table if not r.passed]
    if failed:
        for r in failed:
            print("FAILED: %s" % r, file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------------------
# paper-suite
# ---------------------------------------------------------------------------


def cmd_paper_suite(args) -> int:
    from .suite import run_suite

    only = [t for tok in (args.only or []) for t in tok.split(",") if t]
    try:
        results = run_suite(only, seed=args.seed)
    except KeyError as exc:
        raise InputError(str(exc.args[0]))
    if args.format == "json":
        print(json.dumps([{"number": r.number, "name": r.name, "passed": r.passed, "rows": r.rows,
                           "seconds": round(r.seconds, 3)} for r in results], sort_keys=True))
    else:
        for r in results:
            print(r.status_line())
            for row in r.rows:
                print("     " + row)
        n_ok = sum(r.passed for r in results)
        print("%d/%d checks passed" % (n_ok, len(results)))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hsspider", description="Link and web invariants, Higman-Sims state model.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--seed", type=int, default=0)

    inv = sub.add_parser("invariant", help="evaluate one diagram or web")
    inv.add_argument("--model", choices=MODELS, required=True)
    inv.add_argument("--pd", help='PD code, e.g. "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"; "U" is a loop')
    inv.add_argument("--web-file", help="closed web in the V/E/D/L text format")
    common(inv)
    inv.set_defaults(func=cmd_invariant)

    gv = sub.add_parser("graph-verify", help="build and check the graphs")
    gv.add_argument("--graph", help="hs, pentagon, kN or pN; default builds everything")
    common(gv)
    gv.set_defaults(func=cmd_graph_verify)

    ps = sub.add_parser("paper-suite", help="run the numbered reproduction checks")
    ps.add_argument("--only", action="append", help="check name or number; repeatable or comma separated")
    common(ps)
    ps.set_defaults(func=cmd_paper_suite)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, PDError, MoveError, WebError, UnsupportedWebError, OSError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
