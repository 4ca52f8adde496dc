"""Checkerboard state models on link diagrams and colored B2 webs.

A state assigns an element of ``range(n)`` to every black face (atom).  A
crossing with black faces ``a, b`` at its black corners contributes
``W_+(a, b)`` if it is positive for the coloring, else ``W_-(a, b)``.  In a
colored web, a double edge with white faces on both sides (a *bridge*)
contributes ``W_I`` of the black faces at the 90 degree corners of its two
endpoints, and a double edge with black faces on both sides (a *border*)
contributes ``W_H`` of those two faces.  The normalized value is
``Z * x^(-chi)`` with ``chi`` the number of black faces.

Golden-valued matrices are contracted as integer tensors.  ``a + b*sqrt5``
is the 2x2 integer matrix ``[[a, 5b], [b, a]]`` and products of weights
become products of these matrices.
"""

from __future__ import annotations

import functools
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import ResourceLimitError
from .exact import GoldenNumber, LaurentPoly, TAU, parse_golden
from .graphs import SimpleGraph, k_point_regularity, srg_check
from .kauffman import bracket
from .links import Coloring, LinkDiagram, black_euler, checkerboard, split
from .webs import Web, WebColoring, checkerboard_web, web_faces

__all__ = [
    "LinkModel",
    "WebModel",
    "DegenerateParameterError",
    "potts_model",
    "graph_model",
    "higman_sims_model",
    "pentagon_model",
    "link_state_sum",
    "elimination_order_sum",
    "web_state_sum",
    "normalized_link_value",
    "normalized_web_value",
    "potts_symbolic_identity",
    "verify_model_constraints",
    "triangle_identity_exhaustive",
    "triangle_identity_by_types",
    "colored_skein_report",
    "model_to_json",
    "model_from_json",
    "ReportRow",
    "MAX_STATES",
]

MAX_STATES = 10 ** 9
SQRT5 = GoldenNumber(0, 1)


class DegenerateParameterError(ZeroDivisionError):
    pass


# ---------------------------------------------------------------------------
# Matrices over Q(sqrt5)
# ---------------------------------------------------------------------------


def _gmatrix(rows) -> np.ndarray:
    a = np.asarray(rows, dtype=object)
    out = np.empty(a.shape, dtype=object)
    for idx, v in np.ndenumerate(a):
        out[idx] = GoldenNumber.coerce(v)
    return out


def _is_golden_matrix(m: np.ndarray) -> bool:
    return all(isinstance(x, (GoldenNumber, int, Fraction)) for x in m.flat)


def _golden_parts(m: np.ndarray) -> Tuple[np.ndarray, np.ndarray, int]:
    """``m = (P + R*sqrt5) / D`` with integer arrays ``P``, ``R``."""
    g = [GoldenNumber.coerce(x) for x in m.flat]
    D = 1
    for x in g:
        D = math.lcm(D, x.a.denominator, x.b.denominator)
    P = np.array([int(x.a * D) for x in g], dtype=object).reshape(m.shape)
    R = np.array([int(x.b * D) for x in g], dtype=object).reshape(m.shape)
    return P, R, D


def _int_matrix(m: np.ndarray) -> Optional[np.ndarray]:
    """Integer copy of a golden matrix whose entries are integers, else None."""
    out = np.zeros(m.shape, dtype=np.int64)
    for idx, x in np.ndenumerate(m):
        x = GoldenNumber.coerce(x)
        if x.b != 0 or x.a.denominator != 1:
            return None
        out[idx] = int(x.a)
    return out


# ---------------------------------------------------------------------------
# Models
# ---------------------------------------------------------------------------


@dataclass
class LinkModel:
    n: int
    W_plus: np.ndarray
    W_minus: np.ndarray
    x: object
    name: str = ""

    def weight(self, sign: int) -> np.ndarray:
        return self.W_plus if sign > 0 else self.W_minus


@dataclass
class WebModel:
    n: int
    W_H: np.ndarray
    W_I: np.ndarray
    W_D: np.ndarray
    x: object
    h: object
    ell: object
    A: np.ndarray = field(repr=False, default=None)
    name: str = ""


def potts_model(n: int, u) -> LinkModel:
    """Potts model of order ``n`` with ``u = q^(1/4)``.

    ``u`` may be an int, Fraction, GoldenNumber or LaurentPoly.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if isinstance(u, (int, Fraction)):
        u = GoldenNumber.coerce(u)
    up, um = u ** 3, u ** -3
    op, om = -(u ** -1), -u
    Wp = np.empty((n, n), dtype=object)
    Wm = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            Wp[i, j] = up if i == j else op
            Wm[i, j] = um if i == j else om
    x = -(u ** 2 + u ** -2)
    return LinkModel(n, Wp, Wm, x, name="potts-%d" % n)


def graph_model(g: SimpleGraph, h, x, q_half=None) -> Tuple[WebModel, Optional[LinkModel]]:
    """Web weights from a graph, plus crossing weights when ``q_half`` is given.

    ``W_H = hA``, ``W_I = hA + N - xI``, ``W_D = N - I - A``, and
    ``W_+- = -q^(+-1/2) x I - q^(-+1)/s N - W_I/s`` with ``s = q^(1/2) + q^(-1/2)``.
    """
    h = GoldenNumber.coerce(h)
    x = GoldenNumber.coerce(x)
    n = g.n
    A = g.adj
    I = np.eye(n, dtype=np.int64)
    N = np.ones((n, n), dtype=np.int64)
    W_H = _gmatrix(A * 1) * h
    W_I = W_H + _gmatrix(N - 0) - _gmatrix(I) * x
    W_D = N - I - A
    web = WebModel(n, W_H, W_I, W_D, x, h, x, A=A, name=g.name)
    if q_half is None:
        return web, None
    v = GoldenNumber.coerce(q_half)
    s = v + v ** -1
    if s.is_zero():
        raise DegenerateParameterError("q^(1/2) + q^(-1/2) vanishes")
    Ig, Ng = _gmatrix(I), _gmatrix(N)
    Wp = Ig * (-v * x) - Ng * (v ** -2 / s) - W_I * (1 / s)
    Wm = Ig * (-(v ** -1) * x) - Ng * (v ** 2 / s) - W_I * (1 / s)
    return web, LinkModel(n, Wp, Wm, x, name=g.name)


@functools.lru_cache(maxsize=None)
def higman_sims_model():
    """(WebModel, LinkModel) at ``q^(1/2) = tau`` with h = -5, x = -10.

    Cached; callers must not modify the returned matrices.
    """
    from .graphs import higman_sims

    return graph_model(higman_sims(), -5, -10, TAU)


@functools.lru_cache(maxsize=None)
def pentagon_model():
    """Pentagon weights with x = -sqrt5, h = -(5 + sqrt5)/2.

    Here q + 1/q = tau; q itself is not in Q(sqrt5), so only web weights
    are returned.
    """
    from .graphs import pentagon

    web, _ = graph_model(pentagon(), -(5 + SQRT5) / 2, -SQRT5)
    return web


# ---------------------------------------------------------------------------
# State sums
# ---------------------------------------------------------------------------

# a factor: (atom indices, matrix); a 1-atom factor is the diagonal
Factor = Tuple[Tuple[int, ...], np.ndarray]


def _factors_for_link(m: LinkModel, d: LinkDiagram, c: Coloring) -> Tuple[List[Factor], List[int]]:
    atoms = c.atoms()
    pos = {f: i for i, f in enumerate(atoms)}
    out: List[Factor] = []
    for k, (fa, fb) in enumerate(c.black_pairs):
        W = m.weight(c.signs[k])
        if fa == fb:
            out.append(((pos[fa],), np.array([W[i, i] for i in range(m.n)], dtype=object)))
        else:
            out.append(((pos[fa], pos[fb]), W))
    return out, atoms


def _check_states(n: int, atoms: int) -> None:
    if atoms and n ** atoms > MAX_STATES:
        raise ResourceLimitError("%d^%d states exceed the limit %d" % (n, atoms, MAX_STATES))


def _golden_sum(total_p: int, total_r: int, D: int) -> GoldenNumber:
    return GoldenNumber(Fraction(total_p, D), Fraction(total_r, D))


def _naive(n: int, n_atoms: int, factors: List[Factor], chunk: int = 1 << 16):
    _check_states(n, n_atoms)
    golden = all(_is_golden_matrix(M) for _, M in factors)
    if not golden:
        total = None
        for state in itertools.product(range(n), repeat=n_atoms):
            w = 1
            for idx, M in factors:
                w = w * M[tuple(state[i] for i in idx)]
            total = w if total is None else total + w
        return total
    parts = [(idx,) + _golden_parts(M) for idx, M in factors]
    Dtot = 1
    bound = n ** n_atoms
    for idx, P, R, D in parts:
        Dtot *= D
        bound *= 2 * max(int(np.max(np.abs(P))), 5 * int(np.max(np.abs(R))), 1)
    use64 = bound < 2 ** 62
    dt = np.int64 if use64 else object
    parts = [(idx, P.astype(dt), R.astype(dt), D) for idx, P, R, D in parts]
    total = n ** n_atoms
    sp, sr = 0, 0
    for start in range(0, total, chunk):
        flat = np.arange(start, min(total, start + chunk))
        if n_atoms:
            st = np.unravel_index(flat, (n,) * n_atoms)
        else:
            st = ()
        p = np.ones(len(flat), dtype=dt)
        r = np.zeros(len(flat), dtype=dt)
        for idx, P, R, _ in parts:
            key = tuple(st[i] for i in idx)
            fp, fr = P[key], R[key]
            p, r = p * fp + 5 * r * fr, p * fr + r * fp
        sp += int(p.sum()) if use64 else sum(p.tolist())
        sr += int(r.sum()) if use64 else sum(r.tolist())
    return _golden_sum(sp, sr, Dtot)


_LETTERS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


def _eliminate(n: int, n_atoms: int, factors: List[Factor]):
    """Contract the factor network with numpy's einsum path search."""
    if not factors:
        return GoldenNumber(n ** n_atoms)
    golden = all(_is_golden_matrix(M) for _, M in factors)
    if not golden:
        ops, subs = [], []
        for idx, M in factors:
            ops.append(M)
            subs.append("".join(_LETTERS[i] for i in idx))
        free = set(range(n_atoms)) - {i for idx, _ in factors for i in idx}
        val = np.einsum(",".join(subs) + "->", *ops, optimize="greedy")
        return val * n ** len(free)
    nf = len(factors)
    if n_atoms + nf + 1 > len(_LETTERS):
        raise ResourceLimitError("factor network too large to contract")
    ring = _LETTERS[n_atoms:n_atoms + nf + 1]
    ops, subs = [], []
    Dtot = 1
    bound = n ** n_atoms
    reps = []
    for idx, M in factors:
        P, R, D = _golden_parts(M)
        Dtot *= D
        bound *= 2 * max(int(np.max(np.abs(P))), 5 * int(np.max(np.abs(R))), 1)
        reps.append((idx, P, R))
    dt = np.int64 if bound < 2 ** 62 else object
    for j, (idx, P, R) in enumerate(reps):
        rep = np.empty(P.shape + (2, 2), dtype=dt)
        rep[..., 0, 0] = P
        rep[..., 1, 1] = P
        rep[..., 0, 1] = 5 * R
        rep[..., 1, 0] = R
        ops.append(rep)
        subs.append("".join(_LETTERS[i] for i in idx) + ring[j] + ring[j + 1])
    free = set(range(n_atoms)) - {i for idx, _ in factors for i in idx}
    out = np.einsum(",".join(subs) + "->" + ring[0] + ring[nf], *ops, optimize="greedy")
    mult = n ** len(free)
    # first column of the product matrix is (a, b) of the product
    return _golden_sum(int(out[0, 0]) * mult, int(out[1, 0]) * mult, Dtot)


def link_state_sum(m: LinkModel, d: LinkDiagram, c: Coloring) -> Tuple[object, int]:
    """(Z, chi) by enumerating all n^atoms states."""
    factors, atoms = _factors_for_link(m, d, c)
    if not d.crossings:
        return GoldenNumber(m.n ** len(atoms)) if _is_golden_matrix(m.W_plus) else m.n ** len(atoms), black_euler(d, c)
    return _naive(m.n, len(atoms), factors), black_euler(d, c)


def elimination_order_sum(m, obj, c) -> Tuple[object, int]:
    """Same as :func:`link_state_sum` / :func:`web_state_sum` by contraction."""
    if isinstance(obj, LinkDiagram):
        factors, atoms = _factors_for_link(m, obj, c)
        if not obj.crossings:
            return GoldenNumber(m.n ** len(atoms)), black_euler(obj, c)
        return _eliminate(m.n, len(atoms), factors), black_euler(obj, c)
    factors, n_atoms = _factors_for_web(m, obj, c)
    return _eliminate(m.n, n_atoms, factors), c.n_black


def _factors_for_web(m: WebModel, w: Web, c: WebColoring) -> Tuple[List[Factor], int]:
    if not w.typ:
        return [], c.n_black
    faces = web_faces(w)
    fo = {h: f.face for f in faces for h in f.cycle}
    atoms = sorted(c.black)
    pos = {f: i for i, f in enumerate(atoms)}
    out: List[Factor] = []
    seen = set()
    for d1 in sorted(w.typ):
        if w.typ[d1] != 2 or d1 in seen:
            continue
        d2 = w.pair[d1]
        seen.update((d1, d2))
        if fo[d1] in c.black:
            fa, fb, M = fo[d1], fo[d2], m.W_H
        else:
            # black corner between the two singles at each end
            fa = fo[w.nxt[w.nxt[d1]]]
            fb = fo[w.nxt[w.nxt[d2]]]
            M = m.W_I
        if fa == fb:
            out.append(((pos[fa],), np.array([M[i, i] for i in range(m.n)], dtype=object)))
        else:
            out.append(((pos[fa], pos[fb]), M))
    return out, len(atoms)


def web_state_sum(m: WebModel, w: Web, c: WebColoring) -> Tuple[object, int]:
    """(Z, chi) for a connected colored web by enumerating states."""
    factors, n_atoms = _factors_for_web(m, w, c)
    if not factors:
        return GoldenNumber(m.n ** n_atoms), c.n_black
    return _naive(m.n, n_atoms, factors), c.n_black


def _normalize(Z, chi: int, x):
    return Z / (GoldenNumber.coerce(x) ** chi) if isinstance(Z, GoldenNumber) else Z * x ** (-chi)


def normalized_link_value(m: LinkModel, d: LinkDiagram, coloring: int = 0, method: str = "elim"):
    """``Z x^-chi`` multiplied over split pieces; ``coloring`` picks 0 or 1."""
    out = GoldenNumber(1)
    pieces = split(d)
    for p in pieces:
        c = checkerboard(p)[coloring]
        fn = elimination_order_sum if method == "elim" else link_state_sum
        Z, chi = fn(m, p, c)
        out = out * _normalize(Z, chi, m.x)
    return out


def normalized_web_value(m: WebModel, w: Web, coloring: int = 0, method: str = "elim"):
    c = checkerboard_web(w)[coloring]
    if method == "elim":
        Z, chi = elimination_order_sum(m, w, c)
    else:
        Z, chi = web_state_sum(m, w, c)
    return _normalize(Z, chi, m.x)


# ---------------------------------------------------------------------------
# Potts model as a polynomial identity in u
# ---------------------------------------------------------------------------


def _set_partitions(k: int) -> Iterator[Tuple[int, ...]]:
    """Restricted growth strings of length k."""
    if k == 0:
        yield ()
        return

    def rec(prefix, mx):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for b in range(mx + 2):
            yield from rec(prefix + [b], max(mx, b))

    yield from rec([0], 0)


def _potts_Z(d: LinkDiagram, c: Coloring) -> LaurentPoly:
    u = LaurentPoly.gen("u")
    n = u ** 4 + 2 + u ** -4
    atoms = c.atoms()
    pos = {f: i for i, f in enumerate(atoms)}
    same = {1: u ** 3, -1: u ** -3}
    diff = {1: -(u ** -1), -1: -u}
    total = LaurentPoly(var="u")
    for rgs in _set_partitions(len(atoms)):
        blocks = max(rgs) + 1 if rgs else 0
        w = LaurentPoly.constant(1, "u")
        for i in range(blocks):
            w = w * (n - i)
        for k, (fa, fb) in enumerate(c.black_pairs):
            s = c.signs[k]
            w = w * (same[s] if rgs[pos[fa]] == rgs[pos[fb]] else diff[s])
        total = total + w
    return total


def potts_symbolic_identity(d: LinkDiagram) -> bool:
    """Potts state sum for symbolic n = u^4 + 2 + u^-4 equals bracket(Q=u) x^chi.

    Checked on every split piece and both colorings, in cleared form.
    """
    u = LaurentPoly.gen("u")
    x = -(u ** 2 + u ** -2)
    for p in split(d):
        br = bracket(p).with_var("u")
        for c in checkerboard(p):
            Z = _potts_Z(p, c)
            if Z != br * x ** black_euler(p, c):
                return False
    return True


# ---------------------------------------------------------------------------
# Constraint report
# ---------------------------------------------------------------------------


@dataclass
class ReportRow:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self):
        return "%-28s %s%s" % (self.name, "PASS" if self.passed else "FAIL",
                                ("  (" + self.detail + ")") if self.detail else "")


def _gmat(m: np.ndarray) -> np.ndarray:
    return _gmatrix(m) if m.dtype != object else m


def _gdot(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ia, ib = _int_matrix(a), _int_matrix(b)
    if ia is not None and ib is not None:
        return _gmatrix(ia @ ib)
    return _gmat(a).dot(_gmat(b))


def _geq(a: np.ndarray, b: np.ndarray) -> bool:
    return all(GoldenNumber.coerce(x) == GoldenNumber.coerce(y) for x, y in zip(a.flat, b.flat))


def verify_model_constraints(g: SimpleGraph, qsum, x=None, h=None, k_point: bool = True) -> List[ReportRow]:
    """Check the web-level conditions on a graph for q + 1/q = ``qsum``.

    ``l = -(c^2 + c - 2)`` and ``h = -(c + 2)`` with ``c = q + 1/q``; ``x``
    defaults to ``l``.
    """
    c = GoldenNumber.coerce(qsum)
    ell = -(c * c + c - 2)
    h = GoldenNumber.coerce(h) if h is not None else -(c + 2)
    x = GoldenNumber.coerce(x) if x is not None else ell
    n = g.n
    web, _ = graph_model(g, h, x)
    A = g.adj
    rows: List[ReportRow] = []
    rows.append(ReportRow("x = l", x == ell, "l = %s" % ell))
    rows.append(ReportRow("n = l^2", GoldenNumber(n) == ell * ell, "n = %d, l^2 = %s" % (n, ell * ell)))
    diag = [web.W_H[i, i] for i in range(n)]
    rows.append(ReportRow("W_H(a,a) = 0", all(v == 0 for v in diag)))
    vals = {GoldenNumber.coerce(v) for v in web.W_H.flat}
    rows.append(ReportRow("W_H in {0, h}", vals <= {GoldenNumber(0), h}, "h = %s" % h))
    tri = g.triangles()
    rows.append(ReportRow("triangle-free", tri == 0, "%d triangles" % tri))
    deg = g.degrees()
    regular = bool(np.all(deg == deg[0]))
    v = int(deg[0]) if regular else None
    ok = regular and h * v == x - n
    rows.append(ReportRow("regular, h*v = x - n", ok,
                          "v = %s, h*v = %s, x - n = %s" % (v, h * v if regular else "-", x - n)))
    N = np.ones((n, n), dtype=np.int64)
    WIN = _gdot(web.W_I, N)
    rowsum = h * v + n - x if regular else None
    rows.append(ReportRow("W_I N = 0", all(GoldenNumber.coerce(t) == 0 for t in WIN.flat),
                          "row sum %s + %d + %s = %s" % (h * v, n, -x, rowsum) if regular else ""))
    WI2 = _gdot(web.W_I, web.W_I)
    xh = x * h
    ok = _geq(WI2, web.W_I * xh)
    rows.append(ReportRow("W_I^2 = xh W_I", ok, "xh = %s" % xh))
    srg = srg_check(g)
    rows.append(ReportRow("strongly regular", srg is not None,
                          "(%d, %d, %d, %d)" % srg.astuple() if srg else ""))
    if srg is not None:
        # eigenvalues of W_I on the non-constant eigenspaces of A
        disc = (srg.lam - srg.mu) ** 2 + 4 * (srg.k - srg.mu)
        sq = _golden_sqrt(disc)
        if sq is not None:
            eigs = [Fraction(srg.lam - srg.mu, 1) / 2 + sq / 2, Fraction(srg.lam - srg.mu, 1) / 2 - sq / 2]
            parts = ["%s*%s + %s = %s" % (_p(h), _p(e), _p(-x), h * e - x) for e in eigs]
            ev_ok = all((h * e - x) in (GoldenNumber(0), xh) for e in eigs)
            rows.append(ReportRow("W_I eigenvalues in {0, xh}", ev_ok, "; ".join(parts)))
    if k_point:
        rep = k_point_regularity(g, 3)
        rows.append(ReportRow("3-point regular", rep.passed, "%d placements" % rep.placements))
    return rows


def _p(v) -> str:
    t = str(v)
    return "(%s)" % t if " " in t or t.startswith("-") else t


def _golden_sqrt(k: int) -> Optional[GoldenNumber]:
    r = math.isqrt(k)
    if r * r == k:
        return GoldenNumber(r)
    if k % 5 == 0:
        r = math.isqrt(k // 5)
        if r * r * 5 == k:
            return GoldenNumber(0, r)
    return None


# ---------------------------------------------------------------------------
# Colored skein relations for integer web weights
# ---------------------------------------------------------------------------


def triangle_identity_exhaustive(web: WebModel) -> Tuple[bool, int]:
    """``sum_s W_I(a,s) W_I(b,s) W_I(c,s) = 0`` for every triple; returns
    (verdict, number of triples)."""
    W = _int_matrix(web.W_I)
    if W is None:
        n = web.n
        G = web.W_I
        ok = True
        for a, b, c in itertools.product(range(n), repeat=3):
            s = sum((G[a, t] * G[b, t] * G[c, t] for t in range(n)), GoldenNumber(0))
            ok &= (s == 0)
        return ok, n ** 3
    n = web.n
    pairs = (W[:, None, :] * W[None, :, :]).reshape(n * n, n)
    T = pairs @ W.T
    return bool(not np.any(T)), n ** 3


def triangle_identity_by_types(web: WebModel, g: SimpleGraph) -> Tuple[bool, Dict]:
    """The triangle sums from 3-point regularity constants alone.

    A boundary triple ``(a, b, c)`` is described by its distinct vertices
    (m of them, with a shape) and the map from the triple onto them.  The sum
    over ``s`` splits into ``s`` outside the triple, counted by the extension
    constants, and ``s`` equal to one of the distinct vertices.  Returns
    (all sums vanish, sum per type).
    """
    rep = k_point_regularity(g, 3)
    if not rep.passed:
        return False, {}
    h, x = GoldenNumber.coerce(web.h), GoldenNumber.coerce(web.x)

    def wi(adj: int, same: bool):
        return h * adj + 1 - (x if same else 0)

    def adjacency(m, shape, i, j):
        if i == j:
            return 0
        if m == 2:
            return shape
        i, j = min(i, j), max(i, j)
        bit = {(0, 1): 4, (0, 2): 2, (1, 2): 1}[(i, j)]
        return int(bool(shape & bit))

    results: Dict = {}
    for m, shape in sorted({key[:2] for key in rep.constants}):
        for amap in itertools.product(range(m), repeat=3):
            if len(set(amap)) != m:
                continue
            total = GoldenNumber(0)
            for pattern in itertools.product((0, 1), repeat=m):
                cnt = rep.constants.get((m, shape, pattern), 0)
                term = GoldenNumber(1)
                for t in amap:
                    term = term * wi(pattern[t], False)
                total = total + term * cnt
            for s in range(m):
                term = GoldenNumber(1)
                for t in amap:
                    term = term * wi(adjacency(m, shape, t, s), t == s)
                total = total + term
            results[(m, shape, amap)] = total
    return all(v == 0 for v in results.values()), results


def colored_skein_report(web: WebModel) -> List[ReportRow]:
    """Fixed-boundary forms of the colored relations for a model."""
    n = web.n
    h, x = GoldenNumber.coerce(web.h), GoldenNumber.coerce(web.x)
    rows = []
    WH, WI = web.W_H, web.W_I
    rows.append(ReportRow("W_H diagonal zero", all(GoldenNumber.coerce(WH[i, i]) == 0 for i in range(n))))
    vals = {GoldenNumber.coerce(t) for t in WH.flat}
    rows.append(ReportRow("W_H in {0, h}", vals <= {GoldenNumber(0), h}, "values %s" % sorted(map(str, vals))))
    # white lens: two border edges between the same pair of atoms
    ok = all(GoldenNumber.coerce(t) * GoldenNumber.coerce(t) == GoldenNumber.coerce(t) * h for t in WH.flat)
    rows.append(ReportRow("white lens W_H^2 = h W_H", ok))
    # black lens: two bridges through one interior atom, normalized by x
    WI2 = _gdot(WI, WI)
    rows.append(ReportRow("black lens W_I^2/x = h W_I", _geq(WI2, WI * (x * h))))
    N = np.ones((n, n), dtype=np.int64)
    WIN = _gdot(WI, N)
    rows.append(ReportRow("tadpole W_I N = 0", all(GoldenNumber.coerce(t) == 0 for t in WIN.flat)))
    ex = WI - WH - _gmatrix(N) + _gmatrix(np.eye(n, dtype=np.int64)) * x
    rows.append(ReportRow("exchange W_I - W_H = N - xI", all(GoldenNumber.coerce(t) == 0 for t in ex.flat)))
    rows.append(ReportRow("loop n/x = l", GoldenNumber(n) / x == GoldenNumber.coerce(web.ell)))
    WD = web.W_D
    offdiag = all(WD[i, j] in (0, 1) for i in range(n) for j in range(n) if i != j)
    supp = web.A is None or bool(np.all(((WD == 1) == ((web.A == 0) & ~np.eye(n, dtype=bool)))))
    rows.append(ReportRow("W_D = N - I - A", bool(np.all(np.diag(WD) == 0)) and offdiag and supp))
    ok, cnt = triangle_identity_exhaustive(web)
    rows.append(ReportRow("triangle identity", ok, "%d boundary triples" % cnt))
    return rows


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def model_to_json(m) -> str:
    def mat(M):
        return [[str(GoldenNumber.coerce(t)) for t in row] for row in M]

    if isinstance(m, LinkModel):
        obj = {"kind": "link", "name": m.name, "n": m.n, "x": str(GoldenNumber.coerce(m.x)),
               "W_plus": mat(m.W_plus), "W_minus": mat(m.W_minus)}
    else:
        obj = {"kind": "web", "name": m.name, "n": m.n, "x": str(m.x), "h": str(m.h),
               "W_H": mat(m.W_H), "W_I": mat(m.W_I), "W_D": mat(m.W_D)}
    return json.dumps(obj, sort_keys=True)


def model_from_json(text: str):
    obj = json.loads(text)

    def mat(rows):
        return _gmatrix([[parse_golden(t) for t in row] for row in rows])

    if obj["kind"] == "link":
        return LinkModel(obj["n"], mat(obj["W_plus"]), mat(obj["W_minus"]), parse_golden(obj["x"]), obj["name"])
    WD = np.array([[int(parse_golden(t).a) for t in row] for row in obj["W_D"]], dtype=np.int64)
    x, h = parse_golden(obj["x"]), parse_golden(obj["h"])
    return WebModel(obj["n"], mat(obj["W_H"]), mat(obj["W_I"]), WD, x, h, x, name=obj["name"])
