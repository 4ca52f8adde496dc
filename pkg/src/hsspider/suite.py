"""Reproduction suite: thirteen numbered checks with timings.

Each check returns a :class:`CheckResult`; ``run_suite`` runs a selection
and renders one status line per check followed by its detail rows.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from . import graphs, models
from .exact import BiLaurent, GoldenNumber, LaurentPoly, TAU
from .kauffman import bracket, kauffman, specialize_kauffman
from .links import corpus, r1_add, r2_add, r2_sites, r3, r3_sites
from .webs import (dashed_loop_web, evaluate_link_b2, expand_dashed, loop_web, random_web,
                   reduce_web, tadpole_web, theta_web, triangle_web)

__all__ = ["CheckResult", "CHECKS", "run_suite", "check_names"]

Q2 = TAU ** 2  # q at q^(1/2) = tau


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    rows: List[str] = field(default_factory=list)
    seconds: float = 0.0

    def status_line(self) -> str:
        return "[%2d] %-22s %s  %.2fs" % (self.number, self.name, "PASS" if self.passed else "FAIL", self.seconds)


def _q():
    return LaurentPoly.gen("q")


def _scalar_polys() -> Dict[str, LaurentPoly]:
    q = _q()
    c = q + q ** -1
    return {
        "l": -(c * c + c - 2),
        "h": -(c + 2),
        "L2": c ** 3 - 2 * c + 1,
    }


def _dashed_loop() -> LaurentPoly:
    v = expand_dashed(dashed_loop_web()).evaluate().cleared()
    return v.with_var("q")


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------


def check_numerology(seed: int) -> CheckResult:
    s = _scalar_polys()
    l, h = s["l"].evaluate(Q2), s["h"].evaluate(Q2)
    L1 = reduce_web(loop_web(1)).evaluate(Q2)
    L2 = reduce_web(loop_web(2)).evaluate(Q2)
    D = _dashed_loop().evaluate(Q2)
    rows = [
        "|type-1 loop| = %s" % abs(int(L1.a)) if L1.is_rational() else "type-1 loop = %s" % L1,
        "type-2 loop = %s" % L2,
        "dashed loop = %s" % D,
        "l = %s" % l,
        "h = %s" % h,
    ]
    ok = (l == -10 and h == -5 and L1 == -10 and L2 == 22 and D == 77)
    return CheckResult(1, "numerology", ok, rows)


def check_higman_sims(seed: int) -> CheckResult:
    g = graphs.build_higman_sims()
    srg = graphs.srg_check(g)
    spec_ok = graphs.spectrum_check(g, {22: 1, 2: 77, -8: 22})
    deg = g.degrees()
    rows = [
        "vertices = %d" % g.n,
        "degrees = %s" % sorted(set(int(x) for x in deg)),
        "triangles = %d" % g.triangles(),
        "srg = %s" % (srg.astuple() if srg else None,),
        "spectrum {22:1, 2:77, -8:22}: %s" % spec_ok,
    ]
    ok = (g.n == 100 and set(deg.tolist()) == {22} and g.triangles() == 0
          and srg is not None and srg.astuple() == (100, 22, 0, 6) and spec_ok)
    return CheckResult(2, "higman-sims", ok, rows)


def check_model_identities(seed: int) -> CheckResult:
    g = graphs.higman_sims()
    A = g.adj
    n = g.n
    N = np.ones((n, n), dtype=np.int64)
    WI = -5 * A + N + 10 * np.eye(n, dtype=np.int64)
    WIN = WI @ N
    WI2 = WI @ WI
    rs = int(WI[0].sum())
    rows = [
        "row sum of W_I = -110 + 100 + 10 = %d" % rs,
        "W_I N = 0: %s" % (not np.any(WIN)),
        "W_I^2 = 50 W_I: %s" % bool(np.array_equal(WI2, 50 * WI)),
        "eigenvalue on the 2-eigenspace: -5*2 + 10 = %d" % (-5 * 2 + 10),
        "eigenvalue on the -8-eigenspace: 40 + 10 = %d" % (40 + 10),
    ]
    ok = rs == 0 and not np.any(WIN) and np.array_equal(WI2, 50 * WI)
    return CheckResult(3, "model-identities", ok, rows)


def check_three_point(seed: int) -> CheckResult:
    rep = graphs.k_point_regularity(graphs.higman_sims(), 3)
    return CheckResult(4, "three-point", rep.passed, rep.lines()[:1] + ["%d constants" % len(rep.constants)])


def check_pentagon(seed: int) -> CheckResult:
    rows = models.verify_model_constraints(graphs.pentagon(), TAU, k_point=True)
    return CheckResult(5, "pentagon", all(r.passed for r in rows), [str(r) for r in rows])


def check_potts_bracket(seed: int) -> CheckResult:
    rows, ok = [], True
    for name, d in corpus().items():
        r = models.potts_symbolic_identity(d)
        ok &= r
        rows.append("%-13s %s" % (name, "equal" if r else "DIFFERENT"))
    return CheckResult(6, "potts-bracket", ok, rows)


def check_b2_kauffman(seed: int) -> CheckResult:
    rows, ok = [], True
    for name, d in corpus().items():
        b2 = evaluate_link_b2(d)
        kf = specialize_kauffman(kauffman(d), -4).cleared()
        got = b2.cleared()
        r = got is not None and kf is not None and got.with_var("v") == kf.with_var("v")
        ok &= r
        rows.append("%-13s %s" % (name, kf.with_var("v") if kf is not None else b2))
    return CheckResult(7, "b2-kauffman", ok, rows)


def check_hs_state_model(seed: int) -> CheckResult:
    _, lm = models.higman_sims_model()
    rows, ok = [], True
    for name, d in corpus().items():
        ref = evaluate_link_b2(d).evaluate(TAU)
        kf = specialize_kauffman(kauffman(d), (TAU, -4))
        method = "naive" if name in ("unknot", "curl", "hopf", "trefoil") else "elim"
        vals = [models.normalized_link_value(lm, d, c, method) for c in (0, 1)]
        r = all(v == ref for v in vals) and kf == ref
        ok &= r
        rows.append("%-13s %-16s %s (%s)" % (name, ref, "equal" if r else "DIFFERENT", method))
    return CheckResult(8, "hs-state-model", ok, rows)


def _variants(d):
    out = []
    for a1, a2 in r2_sites(d):
        for over in (True, False):
            out.append(("r2 %d/%d %s" % (a1, a2, "over" if over else "under"), r2_add(d, a1, a2, over)))
    for f in r3_sites(d):
        out.append(("r3 face %d" % f, r3(d, f)))
    return out


def check_isotopy(seed: int) -> CheckResult:
    _, lm = models.higman_sims_model()
    a = GoldenNumber(-8) + TAU * 5  # a = Q^-5 at Q = tau
    rows, ok = [], True
    for name, d in corpus().items():
        k0, b0 = kauffman(d), bracket(d)
        h0 = models.normalized_link_value(lm, d)
        bad = 0
        variants = _variants(d)
        for label, e in variants:
            same = (kauffman(e) == k0 and bracket(e) == b0 and models.potts_symbolic_identity(e)
                    and models.normalized_link_value(lm, e) == h0)
            if not same:
                bad += 1
                rows.append("  %s %s changed" % (name, label))
        arcs = d.arcs()
        base = arcs[0] if arcs else ("U", 0)
        for sign in (1, -1):
            e = r1_add(d, base, sign)
            kr = kauffman(e) == k0 * BiLaurent.A() ** sign
            hr = models.normalized_link_value(lm, e) == h0 * a ** sign
            if not (kr and hr):
                bad += 1
                rows.append("  %s r1 %+d wrong factor" % (name, sign))
        ok &= bad == 0
        rows.append("%-13s %d moves, %d failures" % (name, len(variants) + 2, bad))
    rows.append("positive curl factor on HS = 5*tau - 8 = %s" % a)
    return CheckResult(9, "isotopy", ok, rows)


def check_colored_skein(seed: int) -> CheckResult:
    web, _ = models.higman_sims_model()
    rows = models.colored_skein_report(web)
    ok = all(r.passed for r in rows)
    out = [str(r) for r in rows]
    # the same relations as closed-web state sums in both colorings
    for label, w, want in (("tadpole", tadpole_web(), 0), ("theta (lens)", theta_web(), -110),
                           ("triangle", triangle_web(), 0)):
        vals = [models.normalized_web_value(web, w, c) for c in (0, 1)]
        r = all(v == want for v in vals)
        ok &= r
        out.append("%-28s %s  (%s)" % (label + " state sum", "PASS" if r else "FAIL", ", ".join(map(str, vals))))
    tri_ok, res = models.triangle_identity_by_types(web, graphs.higman_sims())
    ok &= tri_ok
    out.append("%-28s %s  (%d triple types)" % ("triangle from constants", "PASS" if tri_ok else "FAIL", len(res)))
    return CheckResult(10, "colored-skein", ok, out)


def check_web_engine(seed: int) -> CheckResult:
    s = _scalar_polys()
    want = {
        "type-1 loop": s["l"],
        "type-2 loop": s["L2"],
        "theta": s["h"] * s["L2"],
        "triangle": LaurentPoly(var="q"),
        "tadpole": LaurentPoly(var="q"),
    }
    webs = {"type-1 loop": loop_web(1), "type-2 loop": loop_web(2), "theta": theta_web(),
            "triangle": triangle_web(), "tadpole": tadpole_web()}
    rows, ok = [], True
    for k, w in webs.items():
        got = reduce_web(w)
        r = got == want[k]
        ok &= r
        rows.append("%-12s %s" % (k, got))
    D = _dashed_loop()
    q = _q()
    want_d = sum((q ** e for e in range(-4, 5)), LaurentPoly(var="q")) + 1
    r = D == want_d and len(D) == 9
    ok &= r
    rows.append("%-12s %s" % ("dashed loop", D))
    return CheckResult(11, "web-engine", ok, rows)


def check_confluence(seed: int, count: int = 100) -> CheckResult:
    rng = random.Random(seed)
    bad = 0
    rows = []
    for i in range(count):
        w = random_web(rng, 8)
        v1 = reduce_web(w, seed=rng.randrange(1 << 30))
        v2 = reduce_web(w, seed=rng.randrange(1 << 30))
        v0 = reduce_web(w)
        if not (v1 == v2 == v0):
            bad += 1
            rows.append("web %d: %s / %s" % (i, v1, v2))
    rows.insert(0, "%d random webs, seed %d, %d disagreements" % (count, seed, bad))
    return CheckResult(12, "confluence", bad == 0, rows)


def check_coloring_independence(seed: int) -> CheckResult:
    web, lm = models.higman_sims_model()
    potts = models.potts_model(9, TAU)  # u = tau gives u^4 + 2 + u^-4 = 9
    rows, ok = [], True
    for name, d in corpus().items():
        for label, m in (("higman-sims", lm), ("potts-9", potts)):
            vals = [models.normalized_link_value(m, d, c) for c in (0, 1)]
            r = vals[0] == vals[1]
            if label == "potts-9":
                r &= vals[0] == bracket(d).evaluate(TAU)
            ok &= r
            rows.append("%-13s %-12s %s" % (name, label, " | ".join(map(str, vals))))
    for label, w in (("theta", theta_web()), ("tadpole", tadpole_web()), ("triangle", triangle_web())):
        for mlabel, m in (("higman-sims", web), ("pentagon", models.pentagon_model())):
            vals = [models.normalized_web_value(m, w, c) for c in (0, 1)]
            r = vals[0] == vals[1]
            ok &= r
            rows.append("%-13s %-12s %s" % (label, mlabel, " | ".join(map(str, vals))))
    return CheckResult(13, "coloring-independence", ok, rows)


CHECKS: List[Callable[[int], CheckResult]] = [
    check_numerology, check_higman_sims, check_model_identities, check_three_point, check_pentagon,
    check_potts_bracket, check_b2_kauffman, check_hs_state_model, check_isotopy, check_colored_skein,
    check_web_engine, check_confluence, check_coloring_independence,
]

_NAMES = ["numerology", "higman-sims", "model-identities", "three-point", "pentagon", "potts-bracket",
          "b2-kauffman", "hs-state-model", "isotopy", "colored-skein", "web-engine", "confluence",
          "coloring-independence"]


def check_names() -> List[str]:
    return list(_NAMES)


def _select(only: Optional[Sequence[str]]) -> List[int]:
    if not only:
        return list(range(len(CHECKS)))
    out = []
    for tok in only:
        tok = tok.strip()
        if tok.isdigit() and 1 <= int(tok) <= len(CHECKS):
            out.append(int(tok) - 1)
        elif tok in _NAMES:
            out.append(_NAMES.index(tok))
        else:
            raise KeyError("unknown check %r (known: %s)" % (tok, ", ".join(_NAMES)))
    return sorted(set(out))


def run_suite(only: Optional[Sequence[str]] = None, seed: int = 0) -> List[CheckResult]:
    results = []
    for i in _select(only):
        t0 = time.perf_counter()
        try:
            res = CHECKS[i](seed)
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            res = CheckResult(i + 1, _NAMES[i], False, ["error: %s: %s" % (type(exc).__name__, exc)])
        res.seconds = time.perf_counter() - t0
        results.append(res)
    return results
