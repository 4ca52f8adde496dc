"""Closed B2 webs and their evaluation by the spider relations.

A web is a combinatorial map on the sphere.  Every half-edge ``h`` has a
partner ``pair[h]`` (the other end of its edge), a successor ``nxt[h]`` in
the counterclockwise rotation at its vertex, and an edge type 1 (single) or
2 (double).  Each vertex has two single and one double half-edge.
Vertexless loops are stored as counts.

Faces are orbits of ``succ(h) = nxt[pair[h]]``.  The face traced this way
lies to the right of the direction of travel.

Scalars (``q = v^2``)::

    single loop      l  = -(q^2 + q + 1/q + 1/q^2)
    double loop      L2 = q^3 + q + 1 + 1/q + 1/q^3
    tadpole          0
    single bigon     h  = -(q + 2 + 1/q)   (times the double legs joined)
    single triangle  0
    exchange         I(p) - I(p') = P(p) - P(p')

``I(p)`` is the H-shaped web whose two vertices group the four ends as the
pairing ``p`` does, and ``P(p)`` is ``p`` drawn as two plain single strands.
"""

from __future__ import annotations

import itertools
import random
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ResourceLimitError
from .exact import Frac, LaurentPoly
from .links import LinkDiagram

__all__ = [
    "Web",
    "WebError",
    "UnsupportedWebError",
    "SchedulerError",
    "FaceInfo",
    "WebColoring",
    "WebSum",
    "validate_web",
    "web_faces",
    "checkerboard_web",
    "canonical_web",
    "reduce_web",
    "expand_dashed",
    "expand_link",
    "evaluate_link_b2",
    "parse_web",
    "format_web",
    "random_web",
    "theta_web",
    "triangle_web",
    "tadpole_web",
    "loop_web",
    "dashed_loop_web",
    "single_loop",
    "double_loop",
    "bigon_value",
    "MAX_LINK_CROSSINGS",
    "expand_double_link",
    "evaluate_double_link",
]

MAX_LINK_CROSSINGS = 8

q = LaurentPoly.gen("q")


def single_loop() -> LaurentPoly:
    return -(q ** 2 + q + q ** -1 + q ** -2)


def double_loop() -> LaurentPoly:
    return q ** 3 + q + 1 + q ** -1 + q ** -3


def bigon_value() -> LaurentPoly:
    return -(q + 2 + q ** -1)


class WebError(ValueError):
    pass


class UnsupportedWebError(WebError):
    pass


class SchedulerError(RuntimeError):
    """No reducible face was found: the rewrite schedule made no progress."""


class Web:
    """Mutable half-edge map.  Half-edge ids are arbitrary ints.

    ``dashed`` lists marked pairs ``(e, f)`` of single half-edges.  Both lie
    on one face (the strip between two parallel strands) and are replaced
    together by :func:`expand_dashed`.  ``loops`` maps 1, 2 and ``'D'`` to
    counts of vertexless loops.
    """

    __slots__ = ("pair", "nxt", "typ", "loops", "dashed")

    def __init__(self, pair=None, nxt=None, typ=None, loops=None, dashed=()):
        self.pair: Dict[int, int] = dict(pair or {})
        self.nxt: Dict[int, int] = dict(nxt or {})
        self.typ: Dict[int, int] = dict(typ or {})
        self.loops: Dict = {1: 0, 2: 0, "D": 0}
        self.loops.update(loops or {})
        self.dashed: List[Tuple[int, int]] = list(dashed)

    def copy(self) -> "Web":
        return Web(self.pair, self.nxt, self.typ, self.loops, self.dashed)

    @property
    def n_vertices(self) -> int:
        return len(self.typ) // 3

    def fresh(self, k: int) -> List[int]:
        base = max(self.typ, default=-1) + 1
        return list(range(base, base + k))

    def add_vertex(self, hd: int, h1: int, h2: int) -> None:
        """Vertex with counterclockwise rotation (double, single, single)."""
        self.nxt[hd], self.nxt[h1], self.nxt[h2] = h1, h2, hd
        self.typ[hd], self.typ[h1], self.typ[h2] = 2, 1, 1

    def join(self, a: int, b: int) -> None:
        self.pair[a], self.pair[b] = b, a

    def vertex(self, h: int) -> Tuple[int, int, int]:
        a = h
        b = self.nxt[a]
        return (a, b, self.nxt[b])

    def double_of(self, h: int) -> int:
        for g in self.vertex(h):
            if self.typ[g] == 2:
                return g
        raise WebError("vertex without a double half-edge")

    def vertices(self) -> List[Tuple[int, int, int]]:
        seen, out = set(), []
        for h in sorted(self.typ):
            if h in seen or self.typ[h] != 2:
                continue
            v = self.vertex(h)
            seen.update(v)
            out.append(v)
        return out

    def succ(self, h: int) -> int:
        return self.nxt[self.pair[h]]

    def components(self) -> List["Web"]:
        """Connected pieces with vertices, loops dropped."""
        seen = set()
        out = []
        for h0 in sorted(self.typ):
            if h0 in seen:
                continue
            stack, comp = [h0], set()
            while stack:
                h = stack.pop()
                if h in comp:
                    continue
                comp.add(h)
                stack.extend((self.pair[h], self.nxt[h]))
            seen |= comp
            out.append(Web({h: self.pair[h] for h in comp}, {h: self.nxt[h] for h in comp},
                           {h: self.typ[h] for h in comp},
                           dashed=[p for p in self.dashed if p[0] in comp]))
        return out

    def __repr__(self):
        return "Web(V=%d, loops=%s)" % (self.n_vertices, {k: v for k, v in self.loops.items() if v})


# ---------------------------------------------------------------------------
# Faces and validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FaceInfo:
    face: int
    cycle: Tuple[int, ...]  # outgoing half-edges, in traversal order
    n_single: int
    n_double: int
    chi: Fraction  # formal Euler characteristic

    @property
    def sides(self) -> int:
        return self.n_single + self.n_double


def _formal_chi(n_single: int) -> Fraction:
    # corners: 90 degrees between two singles, 135 next to a double.  Each
    # corner contributes (180 - angle)/360, which sums to n_single/4.
    return 1 - Fraction(n_single, 4)


def web_faces(w: Web) -> List[FaceInfo]:
    seen = set()
    out = []
    for h0 in sorted(w.typ):
        if h0 in seen:
            continue
        cyc = [h0]
        seen.add(h0)
        h = w.succ(h0)
        while h != h0:
            cyc.append(h)
            seen.add(h)
            h = w.succ(h)
        n1 = sum(1 for g in cyc if w.typ[g] == 1)
        out.append(FaceInfo(len(out), tuple(cyc), n1, len(cyc) - n1, _formal_chi(n1)))
    return out


def _face_of(w: Web, faces: Sequence[FaceInfo]) -> Dict[int, int]:
    return {h: f.face for f in faces for h in f.cycle}


def validate_web(w: Web) -> List[FaceInfo]:
    """Check the vertex and sphere conditions; return the faces.

    A web made only of vertexless loops has, per loop, one face on each side.
    Those faces are reported with empty cycles.
    """
    for h, g in w.pair.items():
        if h == g or w.pair.get(g) != h:
            raise WebError("pairing is not a fixed-point-free involution at %d" % h)
        if w.typ[h] != w.typ[g]:
            raise WebError("edge %d-%d joins different strand types" % (h, g))
    if set(w.pair) != set(w.typ) or set(w.nxt) != set(w.typ):
        raise WebError("half-edge tables disagree")
    for h in w.typ:
        a, b, c = w.vertex(h)
        if w.nxt[c] != a:
            raise WebError("vertex at half-edge %d is not trivalent" % h)
        if sorted((w.typ[a], w.typ[b], w.typ[c])) != [1, 1, 2]:
            raise WebError("vertex at half-edge %d does not have two single and one double edge" % h)
    faces = web_faces(w)
    fo = _face_of(w, faces)
    for comp in w.components():
        hs = set(comp.typ)
        V, E = len(hs) // 3, len(hs) // 2
        F = len({fo[h] for h in hs})
        if V - E + F != 2:
            raise WebError("component is not a sphere map (V-E+F = %d)" % (V - E + F))
    for e, f in w.dashed:
        if w.typ.get(e) != 1 or w.typ.get(f) != 1 or fo[e] != fo[f] or e == f:
            raise WebError("dashed pair (%d, %d) is not two single half-edges on one face" % (e, f))
    loop_faces = []
    for t in (1, 2, "D"):
        for _ in range(w.loops[t]):
            loop_faces.append(FaceInfo(len(faces) + len(loop_faces), (), 0, 0, Fraction(1)))
    if not faces and loop_faces:
        # the outermost loop contributes both of its faces
        loop_faces.append(FaceInfo(len(faces) + len(loop_faces), (), 0, 0, Fraction(1)))
    return faces + loop_faces


# ---------------------------------------------------------------------------
# Checkerboard colorings of webs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WebColoring:
    black: frozenset  # face ids from web_faces
    n_faces: int

    @property
    def n_black(self) -> int:
        return len(self.black)


def checkerboard_web(w: Web) -> Tuple[WebColoring, WebColoring]:
    """Colorings where single edges separate colors and double edges do not.

    The first coloring has the face of the smallest half-edge black.  For a
    plain single loop the two faces are 0 (inside) and 1 (outside).
    """
    if w.loops[2] or w.loops["D"]:
        raise UnsupportedWebError("double or dashed vertexless loops have no colored state sum")
    if w.loops[1] and w.typ:
        raise UnsupportedWebError("colorings are computed for connected webs only")
    if not w.typ:
        if w.loops[1] != 1:
            raise UnsupportedWebError("colorings are computed for connected webs only")
        return WebColoring(frozenset({0}), 2), WebColoring(frozenset({1}), 2)
    if len(w.components()) > 1:
        raise UnsupportedWebError("colorings are computed for connected webs only")
    faces = web_faces(w)
    fo = _face_of(w, faces)
    color: Dict[int, int] = {fo[min(w.typ)]: 1}
    stack = [fo[min(w.typ)]]
    nbrs: Dict[int, List[Tuple[int, int]]] = {f.face: [] for f in faces}
    for h, g in w.pair.items():
        nbrs[fo[h]].append((fo[g], w.typ[h]))
    while stack:
        f = stack.pop()
        for g, t in nbrs[f]:
            want = color[f] if t == 2 else 1 - color[f]
            if g not in color:
                color[g] = want
                stack.append(g)
            elif color[g] != want:
                raise UnsupportedWebError("web faces admit no checkerboard coloring")
    first = frozenset(f for f, c in color.items() if c == 1)
    second = frozenset(f for f, c in color.items() if c == 0)
    return WebColoring(first, len(faces)), WebColoring(second, len(faces))


# ---------------------------------------------------------------------------
# Canonical keys
# ---------------------------------------------------------------------------


def _component_code(w: Web, hs: Iterable[int]) -> Tuple:
    best = None
    for r in hs:
        if w.typ[r] != 2:
            continue
        lab = {r: 0}
        order = [r]
        i = 0
        while i < len(order):
            h = order[i]
            for g in (w.pair[h], w.nxt[h]):
                if g not in lab:
                    lab[g] = len(order)
                    order.append(g)
            i += 1
        code = tuple((w.typ[h], lab[w.pair[h]], lab[w.nxt[h]]) for h in order)
        if best is None or code < best:
            best = code
    return best


def canonical_web(w: Web) -> Tuple:
    """Key equal for isomorphic maps (rotation preserving, no reflections)."""
    comps = sorted(_component_code(c, list(c.typ)) for c in w.components())
    return (tuple(comps), w.loops[1], w.loops[2], w.loops["D"])


# ---------------------------------------------------------------------------
# Rewiring
# ---------------------------------------------------------------------------


def _cut(w: Web, removed: Sequence[int], joins: Sequence[Tuple[int, int]]) -> Web:
    """Delete half-edges ``removed`` and reconnect through ``joins``.

    Each join pairs two removed half-edges of the same type.  The strand
    entering one of them continues out of the other.  Strands that close up
    inside the removed set become vertexless loops.
    """
    R = set(removed)
    partner: Dict[int, int] = {}
    for a, b in joins:
        if w.typ[a] != w.typ[b]:
            raise WebError("cannot join a single end to a double end")
        partner[a], partner[b] = b, a
    out = w.copy()
    for h in R:
        del out.pair[h], out.nxt[h], out.typ[h]
    visited = set()
    for r in sorted(R):
        e = w.pair[r]
        if e in R or r in visited:
            continue
        cur = r
        while True:
            visited.add(cur)
            if cur not in partner:
                raise WebError("dangling end %d while rewiring" % cur)
            c2 = partner[cur]
            visited.add(c2)
            g = w.pair[c2]
            if g not in R:
                out.pair[e], out.pair[g] = g, e
                break
            cur = g
    for r in sorted(partner):
        if r in visited:
            continue
        t = w.typ[r]
        cur = r
        while cur not in visited:
            visited.add(cur)
            c2 = partner[cur]
            visited.add(c2)
            cur = w.pair[c2]
        out.loops[t] += 1
    for r in R - visited:
        if w.pair[r] not in R or w.pair[r] in partner:
            raise WebError("half-edge %d left unmatched while rewiring" % r)
    out.dashed = [p for p in w.dashed if p[0] not in R and p[1] not in R]
    return out


def _has_bridge(w: Web, faces: Sequence[FaceInfo]) -> bool:
    fo = _face_of(w, faces)
    return any(fo[h] == fo[g] for h, g in w.pair.items())


# ---------------------------------------------------------------------------
# Reduction
# ---------------------------------------------------------------------------

_shared_memo: Dict[Tuple, LaurentPoly] = {}
_memo_lock = threading.Lock()


class _Reducer:
    def __init__(self, memo, rng: Optional[random.Random], check: bool):
        self.memo = memo
        self.rng = rng
        self.check = check
        self.L1 = single_loop()
        self.L2 = double_loop()
        self.h = bigon_value()
        self.zero = LaurentPoly(var="q")

    def value(self, w: Web) -> LaurentPoly:
        if w.dashed or w.loops["D"]:
            raise WebError("expand dashed edges before reducing")
        out = self.L1 ** w.loops[1] * self.L2 ** w.loops[2]
        if not w.typ:
            return out
        for c in w.components():
            v = self.connected(c)
            if v.is_zero():
                return self.zero
            out = out * v
        return out

    def connected(self, w: Web) -> LaurentPoly:
        key = _component_code(w, list(w.typ))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        val = self._connected(w)
        with _memo_lock:
            self.memo[key] = val
        return val

    def _connected(self, w: Web) -> LaurentPoly:
        faces = web_faces(w)
        if self.check:
            tot = sum((f.chi for f in faces), Fraction(0))
            if tot != 2:
                raise SchedulerError("formal Euler characteristics sum to %s" % tot)
        if _has_bridge(w, faces):
            # a strand that separates the sphere carries no invariant
            return self.zero
        cands = [f for f in faces if f.n_single <= 3]
        if not cands:
            raise SchedulerError("no face with formal Euler characteristic > 0")
        if self.rng is None:
            face = min(cands, key=lambda f: (f.n_double, f.n_single, f.face))
        else:
            face = self.rng.choice(cands)
        tracker = next(g for g in face.cycle if w.typ[g] == 1)

        W = w.copy()
        terms: List[Tuple[int, Web]] = []
        main_zero = False
        cyc = face.cycle
        while True:
            doubles = [g for g in cyc if W.typ[g] == 2]
            if not doubles:
                break
            d1 = doubles[0] if self.rng is None else self.rng.choice(doubles)
            a1 = W.nxt[d1]
            a2 = W.nxt[a1]
            d2 = W.pair[d1]
            b1 = W.nxt[d2]
            b2 = W.nxt[b1]
            removed = (d1, a1, a2, d2, b1, b2)
            terms.append((1, _cut(W, removed, [(a1, a2), (b1, b2)])))
            terms.append((-1, _cut(W, removed, [(a2, b1), (b2, a1)])))
            W.nxt[d1], W.nxt[a2], W.nxt[b1] = a2, b1, d1
            W.nxt[d2], W.nxt[b2], W.nxt[a1] = b2, a1, d2
            wf = web_faces(W)
            if self.check:
                tot = sum((f.chi for f in wf), Fraction(0))
                if tot != 2:
                    raise SchedulerError("formal Euler characteristics sum to %s" % tot)
            if _has_bridge(W, wf):
                main_zero = True
                break
            new = next(f for f in wf if tracker in f.cycle)
            if new.n_double >= len(doubles) or new.n_single != face.n_single:
                raise SchedulerError("exchange did not shrink the chosen face")
            cyc = new.cycle

        total = self.zero
        if not main_zero:
            t = face.n_single
            if t == 2:
                x = cyc[0]
                y = cyc[1]
                vx, vy = W.vertex(x), W.vertex(y)
                dx, dy = W.double_of(x), W.double_of(y)
                total = self.h * self.value(_cut(W, vx + vy, [(dx, dy)]))
            elif t not in (1, 3):
                raise SchedulerError("face with %d single sides chosen" % t)
        for c, t in terms:
            v = self.value(t)
            total = total + v if c > 0 else total - v
        return total


def reduce_web(w: Web, memo: Optional[dict] = None, seed: Optional[int] = None,
               check: bool = False, rng: Optional[random.Random] = None) -> LaurentPoly:
    """Evaluate a closed web to a Laurent polynomial in q.

    ``memo`` defaults to a module-level table.  With a ``seed`` (or ``rng``)
    the face and double side rewritten at each step are chosen at random.
    ``check`` asserts the formal Euler characteristic bookkeeping.
    """
    if rng is None and seed is not None:
        rng = random.Random(seed)
    if memo is None:
        memo = _shared_memo if rng is None else {}
    return _Reducer(memo, rng, check).value(w)


# ---------------------------------------------------------------------------
# Web sums, dashed strands, crossings
# ---------------------------------------------------------------------------


class WebSum:
    """Formal combination of webs keyed by canonical form."""

    def __init__(self):
        self.terms: Dict[Tuple, Tuple[Web, Frac]] = {}
        self.raw_terms = 0

    def add(self, w: Web, c: Frac) -> None:
        self.raw_terms += 1
        key = canonical_web(w)
        if key in self.terms:
            w0, c0 = self.terms[key]
            c = c0 + c
            if c.is_zero():
                del self.terms[key]
            else:
                self.terms[key] = (w0, c)
        elif not c.is_zero():
            self.terms[key] = (w, c)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return list(self.terms.values())

    def evaluate(self, memo=None) -> Frac:
        """Sum of coefficient times web value, in the coefficient variable."""
        total = None
        for w, c in self.terms.values():
            val = reduce_web(w, memo=memo)
            val = _lift(val, c)
            term = c * Frac(val)
            total = term if total is None else total + term
        if total is None:
            return Frac(LaurentPoly(var=_coef_var(self)))
        return total


def _coef_var(ws: WebSum) -> str:
    for _, c in ws.terms.values():
        return c.num.var
    return "q"


def _lift(val: LaurentPoly, c: Frac) -> LaurentPoly:
    # coefficients of link expansions live in v = q^(1/2)
    if c.num.var == "v":
        return val.substitute_power(2).with_var("v")
    return val


def _dashed_coefficients():
    x = single_loop()
    h = bigon_value()
    one = Frac(LaurentPoly.constant(1, var="q"))
    return one, -(one / Frac(x)), -(one / Frac(h))


def expand_dashed(w: Web, at=None) -> WebSum:
    """Replace every dashed pair and dashed loop by ``hh - vv/x - H/h``.

    ``hh`` keeps the two strands, ``vv`` turns them back on each other and
    ``H`` merges them into a double edge running along the strip.  With
    ``at`` a numeric value of q, the coefficients are checked for poles.
    """
    if at is not None:
        for name, p in (("x", single_loop()), ("h", bigon_value())):
            if p.evaluate(at) == 0:
                raise ZeroDivisionError("%s vanishes at q = %s" % (name, at))
    c_hh, c_vv, c_H = _dashed_coefficients()
    one = Frac(LaurentPoly.constant(1, var="q"))
    webs = [(w.copy(), one)]
    while True:
        out = []
        progressed = False
        for cur, c in webs:
            if cur.loops["D"]:
                progressed = True
                base = cur.copy()
                base.loops["D"] -= 1
                a = base.copy()
                a.loops[1] += 2
                b = base.copy()
                b.loops[1] += 1
                t = _merge(base, theta_web())
                out += [(a, c * c_hh), (b, c * c_vv), (t, c * c_H)]
            elif cur.dashed:
                progressed = True
                e, f = cur.dashed[0]
                rest = cur.copy()
                rest.dashed = cur.dashed[1:]
                out += _expand_pair(rest, e, f, c, (c_hh, c_vv, c_H))
            else:
                out.append((cur, c))
        webs = out
        if not progressed:
            break
    ws = WebSum()
    for cur, c in webs:
        ws.add(cur, c)
    return ws


def _expand_pair(w: Web, e: int, f: int, c: Frac, coefs):
    c_hh, c_vv, c_H = coefs
    e1, f1 = w.pair[e], w.pair[f]
    keep = w.copy()
    turn = w.copy()
    # bottom turnback joins the start of e with the end of f; top the rest
    turn.join(e, f1)
    turn.join(f, e1)
    H = w.copy()
    xd, xp, xr, yd, yp, yr = H.fresh(6)
    H.add_vertex(xd, xp, xr)
    H.add_vertex(yd, yp, yr)
    H.join(xd, yd)
    H.join(xp, e)
    H.join(xr, f1)
    H.join(yr, e1)
    H.join(yp, f)
    return [(keep, c * c_hh), (turn, c * c_vv), (H, c * c_H)]


def _merge(a: Web, b: Web) -> Web:
    out = a.copy()
    shift = max(a.typ, default=-1) + 1
    for h in b.typ:
        out.pair[h + shift] = b.pair[h] + shift
        out.nxt[h + shift] = b.nxt[h] + shift
        out.typ[h + shift] = b.typ[h]
    for k in (1, 2, "D"):
        out.loops[k] += b.loops[k]
    out.dashed += [(e + shift, f + shift) for e, f in b.dashed]
    return out


def _link_web(d: LinkDiagram, choice: Sequence[str], strand: int = 1) -> Web:
    """Web from a PD diagram with each crossing replaced by A, B, I or S.

    With single strands ``I`` is the H web grouping slots {3, 0} and {1, 2},
    the ends that the B-smoothing pairs.  With double strands (``strand=2``)
    ``S`` is a square of single edges with a double leg at each slot.
    """
    occ = d.occurrences()
    w = Web()
    port: Dict[Tuple[int, int], int] = {}
    nid = 0
    for k, ch in enumerate(choice):
        if ch == "I" and strand == 1:
            xd, x3, x0, yd, y1, y2 = range(nid, nid + 6)
            nid += 6
            w.add_vertex(xd, x3, x0)
            w.add_vertex(yd, y1, y2)
            w.join(xd, yd)
            port[(k, 3)], port[(k, 0)], port[(k, 1)], port[(k, 2)] = x3, x0, y1, y2
        elif ch == "S" and strand == 2:
            ids = [tuple(range(nid + 3 * i, nid + 3 * i + 3)) for i in range(4)]
            nid += 12
            for leg, nxt_side, prv_side in ids:
                w.add_vertex(leg, nxt_side, prv_side)
            for i in range(4):
                w.join(ids[i][1], ids[(i + 1) % 4][2])
                port[(k, i)] = ids[i][0]
        elif ch not in "AB":
            raise WebError("crossing choice %r does not apply to type %d strands" % (ch, strand))
    through = {"A": {0: 1, 1: 0, 2: 3, 3: 2}, "B": {0: 3, 3: 0, 1: 2, 2: 1}}
    used = set()
    seen = set()
    for (k, s), h in sorted(port.items()):
        if h in used:
            continue
        cur = d.other_end(k, s, occ)
        while cur not in port:
            kk, ss = cur
            o = (kk, through[choice[kk]][ss])
            seen.update((cur, o))
            cur = d.other_end(o[0], o[1], occ)
        g = port[cur]
        w.join(h, g)
        used.update((h, g))
    # strands avoiding every H close up
    for k, ch in enumerate(choice):
        if ch not in "AB":
            continue
        for s in range(4):
            if (k, s) in seen:
                continue
            cur = (k, s)
            while cur not in seen:
                kk, ss = cur
                o = (kk, through[choice[kk]][ss])
                seen.update((cur, o))
                cur = d.other_end(o[0], o[1], occ)
            w.loops[strand] += 1
    w.loops[strand] += d.loops
    return w


def expand_link(d: LinkDiagram, max_crossings: int = MAX_LINK_CROSSINGS) -> WebSum:
    """Expand every crossing into A, B and H webs.

    A crossing that is positive for the coloring whose corners 1 and 3 are
    black is ``-v A - v^-2/s B - H/s`` with ``s = v + 1/v``.
    """
    if d.n_crossings > max_crossings:
        raise ResourceLimitError(f"{d.n_crossings} crossings exceeds the limit {max_crossings}")
    v = LaurentPoly.gen("v")
    s = Frac(v + v ** -1)
    coef = {"A": Frac(-v), "B": -(Frac(v ** -2) / s), "I": -(Frac(LaurentPoly.constant(1, "v")) / s)}
    ws = WebSum()
    for choice in itertools.product("ABI", repeat=d.n_crossings):
        c = Frac(LaurentPoly.constant(1, "v"))
        for ch in choice:
            c = c * coef[ch]
        ws.add(_link_web(d, choice), c)
    return ws


def expand_double_link(d: LinkDiagram, max_crossings: int = MAX_LINK_CROSSINGS) -> WebSum:
    """Expand a diagram of type 2 strands: each crossing is
    ``q^-1 A + q B + S/(q + 2 + q^-1)``.  This assignment makes the value
    agree with the Kauffman polynomial at Q = q, d = 5."""
    if d.n_crossings > max_crossings:
        raise ResourceLimitError(f"{d.n_crossings} crossings exceeds the limit {max_crossings}")
    one = Frac(LaurentPoly.constant(1, "q"))
    coef = {"A": Frac(q ** -1), "B": Frac(q), "S": -(one / Frac(bigon_value()))}
    ws = WebSum()
    for choice in itertools.product("ABS", repeat=d.n_crossings):
        c = one
        for ch in choice:
            c = c * coef[ch]
        ws.add(_link_web(d, choice, strand=2), c)
    return ws


def evaluate_double_link(d: LinkDiagram, max_crossings: int = MAX_LINK_CROSSINGS) -> Frac:
    """Value of a diagram whose strands are all type 2, as a fraction in q."""
    return expand_double_link(d, max_crossings).evaluate()


def evaluate_link_b2(d: LinkDiagram, max_crossings: int = MAX_LINK_CROSSINGS) -> Frac:
    """B2 value of a diagram as a fraction in v = q^(1/2)."""
    return expand_link(d, max_crossings).evaluate()


# ---------------------------------------------------------------------------
# Small webs
# ---------------------------------------------------------------------------


def loop_web(t=1, count: int = 1) -> Web:
    w = Web()
    w.loops[t] = count
    return w


def dashed_loop_web(count: int = 1) -> Web:
    return loop_web("D", count)


def theta_web() -> Web:
    """Two vertices joined by one double and two single edges."""
    w = Web()
    w.add_vertex(0, 1, 2)
    w.add_vertex(3, 4, 5)
    w.join(0, 3)
    w.join(1, 5)
    w.join(2, 4)
    return w


def tadpole_web() -> Web:
    """Single loop with a double edge ending in a single loop on the inside
    (two tadpoles joined at their double edges)."""
    w = Web()
    w.add_vertex(0, 1, 2)
    w.add_vertex(3, 4, 5)
    w.join(0, 3)
    w.join(1, 2)
    w.join(4, 5)
    return w


def triangle_web() -> Web:
    """A single-edged triangle with its three double legs joined at a
    second, outer single-edged triangle."""
    w = Web()
    # inner vertices i and outer vertices 3+i; rotations counterclockwise
    for i in range(6):
        w.add_vertex(3 * i, 3 * i + 1, 3 * i + 2)
    for i in range(3):
        inner, outer = i, 3 + i
        w.join(3 * inner, 3 * outer)
        # inner triangle: second single of i to first single of i+1
        w.join(3 * inner + 2, 3 * ((i + 1) % 3) + 1)
        # outer triangle runs the opposite way around
        w.join(3 * outer + 1, 3 * (3 + (i + 1) % 3) + 2)
    return w


def random_web(rng: random.Random, max_vertices: int = 8) -> Web:
    """Theta web with random double chords inserted across faces."""
    w = theta_web()
    target = rng.randrange(2, max_vertices + 1, 2)
    while w.n_vertices < target:
        faces = [f for f in web_faces(w) if f.n_single >= 2]
        face = rng.choice(faces)
        singles = [g for g in face.cycle if w.typ[g] == 1]
        g1, g2 = rng.sample(singles, 2)
        _chord(w, g1, g2)
    if rng.random() < 0.2:
        w.loops[1] += 1
    validate_web(w)
    return w


def _subdivide(w: Web, g: int) -> int:
    """Put a new vertex on the edge of ``g``; return its double half-edge,
    pointing into the face that contains ``g``."""
    r = w.pair[g]
    sd, s_in, s_out = w.fresh(3)
    w.nxt[s_in], w.nxt[sd], w.nxt[s_out] = sd, s_out, s_in
    w.typ[s_in], w.typ[sd], w.typ[s_out] = 1, 2, 1
    w.join(g, s_in)
    w.join(s_out, r)
    return sd


def _chord(w: Web, g1: int, g2: int) -> None:
    d1 = _subdivide(w, g1)
    d2 = _subdivide(w, g2)
    w.join(d1, d2)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def format_web(w: Web) -> str:
    """``Vk: h1 h2 h3`` per vertex (counterclockwise), ``Ek(t): a b`` per
    edge with t in 1, 2, ``Dk: e f`` per dashed pair, ``L(t) x n`` loops."""
    lines = []
    for i, v in enumerate(w.vertices()):
        lines.append("V%d: %d %d %d" % ((i,) + v))
    seen = set()
    k = 0
    for h in sorted(w.pair):
        if h in seen:
            continue
        g = w.pair[h]
        seen.update((h, g))
        lines.append("E%d(%d): %d %d" % (k, w.typ[h], h, g))
        k += 1
    for i, (e, f) in enumerate(w.dashed):
        lines.append("D%d: %d %d" % (i, e, f))
    for t in (1, 2, "D"):
        if w.loops[t]:
            lines.append("L(%s) x %d" % (t, w.loops[t]))
    return "\n".join(lines) + "\n"


_V_RE = re.compile(r"^V\w*:\s*(-?\d+)\s+(-?\d+)\s+(-?\d+)$")
_E_RE = re.compile(r"^E\w*\(([12])\):\s*(-?\d+)\s+(-?\d+)$")
_D_RE = re.compile(r"^D\w*:\s*(-?\d+)\s+(-?\d+)$")
_L_RE = re.compile(r"^L\(([12D])\)\s*x\s*(\d+)$")


def parse_web(text: str, validate: bool = True) -> Web:
    w = Web()
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _V_RE.match(line)
        if m:
            a, b, c = map(int, m.groups())
            w.nxt[a], w.nxt[b], w.nxt[c] = b, c, a
            continue
        m = _E_RE.match(line)
        if m:
            t, a, b = map(int, m.groups())
            if a in w.pair or b in w.pair:
                raise WebError("line %d: half-edge used twice" % n)
            w.join(a, b)
            w.typ[a] = w.typ[b] = t
            continue
        m = _D_RE.match(line)
        if m:
            w.dashed.append((int(m.group(1)), int(m.group(2))))
            continue
        m = _L_RE.match(line)
        if m:
            t = m.group(1)
            w.loops[t if t == "D" else int(t)] += int(m.group(2))
            continue
        raise WebError("line %d: cannot parse %r" % (n, raw))
    if validate:
        validate_web(w)
    return w
