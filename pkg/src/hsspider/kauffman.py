"""Regular-isotopy Kauffman polynomial and Kauffman bracket of PD diagrams.

Conventions (see :mod:`hsspider.links` for the A/B smoothings):

* switching:  ``X - X' = (Q - 1/Q) * (B - A)`` where ``X'`` is ``X`` with
  over and under exchanged,
* loop:       ``delta = (a + Q - 1/Q - 1/a) / (Q - 1/Q)``,
* curl:       a curl whose B-smoothing splits off the small loop is ``a``,
  with ``a`` standing for ``Q^(d-1)``; the empty diagram is 1.

The bracket is the ``d = -2`` slice written as a smoothing sum,
``X = -Q*A - Q^-1*B`` with ``delta = -Q^2 - Q^-2``.
"""

from __future__ import annotations

import itertools
import threading
from typing import Dict, List, Optional, Tuple

from .errors import ResourceLimitError
from .exact import BiLaurent, Frac, GoldenNumber, LaurentPoly
from .links import LinkDiagram, traverse

__all__ = [
    "kauffman",
    "bracket",
    "specialize_kauffman",
    "loop_value",
    "smooth",
    "switch",
    "writhe",
    "MAX_CROSSINGS",
]

MAX_CROSSINGS = 10

Q = BiLaurent.Q()
A = BiLaurent.A()
Z = Q - Q ** -1
ONE = BiLaurent.constant(1)


def loop_value() -> Frac:
    """``delta`` as a fraction in (Q, a)."""
    return Frac(A + Q - Q ** -1 - A ** -1, Z)


_SMOOTH_PAIRS = {"A": ((0, 1), (2, 3)), "B": ((0, 3), (1, 2))}


def smooth(d: LinkDiagram, k: int, which: str) -> LinkDiagram:
    """Replace crossing ``k`` by its A- or B-smoothing."""
    x = d.crossings[k]
    rest = d.crossings[:k] + d.crossings[k + 1:]
    parent: Dict[int, int] = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in _SMOOTH_PAIRS[which]:
        ra, rb = find(x[i]), find(x[j])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    remaining = {a for y in rest for a in y}
    classes: Dict[int, List[int]] = {}
    for a in set(x):
        classes.setdefault(find(a), []).append(a)
    loops = sum(1 for members in classes.values() if not remaining.intersection(members))
    ren = {a: find(a) for a in set(x)}
    new = tuple(tuple(ren.get(a, a) for a in y) for y in rest)
    return LinkDiagram(new, d.loops + loops)


def switch(d: LinkDiagram, k: int) -> LinkDiagram:
    a, b, c, dd = d.crossings[k]
    xs = list(d.crossings)
    xs[k] = (b, c, dd, a)
    return LinkDiagram(tuple(xs), d.loops)


def _self_sign(under_slot: int, over_slot: int) -> int:
    """+1 when the orientation-respecting smoothing is the B-smoothing."""
    pair = frozenset({under_slot, (over_slot + 2) % 4})
    return 1 if pair in (frozenset({0, 3}), frozenset({1, 2})) else -1


def writhe(d: LinkDiagram, self_only: bool = False) -> int:
    """Sum of crossing signs for the orientation chosen by :func:`traverse`."""
    comps = traverse(d)
    seen: Dict[int, Tuple[int, int]] = {}
    w = 0
    for ci, visits in enumerate(comps):
        for k, s in visits:
            if k in seen:
                cj, s0 = seen[k]
                if self_only and cj != ci:
                    continue
                under, over = (s0, s) if s0 % 2 == 0 else (s, s0)
                w += _self_sign(under, over)
            else:
                seen[k] = (ci, s)
    return w


# value representation: {power of delta: BiLaurent coefficient}
_Poly = Dict[int, BiLaurent]

_memo: Dict[Tuple, Tuple[Tuple[int, BiLaurent], ...]] = {}
_memo_lock = threading.Lock()


def _add(acc: _Poly, other: _Poly, scale: BiLaurent) -> None:
    for m, c in other.items():
        v = acc.get(m, BiLaurent()) + c * scale
        if v.is_zero():
            acc.pop(m, None)
        else:
            acc[m] = v


def _eval(d: LinkDiagram) -> _Poly:
    if not d.crossings:
        return {d.loops: ONE}
    key = (d.crossings, d.loops)
    hit = _memo.get(key)
    if hit is not None:
        return dict(hit)
    # one fixed traversal; switching crossing k moves each of its labels
    # down one slot, so a visit at slot s becomes a visit at slot s - 1
    comps = traverse(d)
    shift = [0] * d.n_crossings
    out: _Poly = {}
    cur = d
    done = set()
    for visits in comps:
        for k, s in visits:
            if k in done:
                continue
            done.add(k)
            if s % 2 == 0:
                _add(out, _eval(smooth(cur, k, "B")), Z)
                _add(out, _eval(smooth(cur, k, "A")), -Z)
                cur = switch(cur, k)
                shift[k] = 3
    # cur is now descending: a framed unlink
    first: Dict[int, Tuple[int, int]] = {}
    w = 0
    for ci, visits in enumerate(comps):
        for k, s in visits:
            s = (s + shift[k]) % 4
            if k not in first:
                first[k] = (ci, s)
            elif first[k][0] == ci:
                s0 = first[k][1]
                under, over = (s0, s) if s0 % 2 == 0 else (s, s0)
                w += _self_sign(under, over)
    _add(out, {len(comps) + d.loops: A ** w}, ONE)
    with _memo_lock:
        _memo[key] = tuple(out.items())
    return out


def _to_frac(p: _Poly) -> Frac:
    if not p:
        return Frac(BiLaurent())
    top = max(p)
    dnum = A + Q - Q ** -1 - A ** -1
    num = BiLaurent()
    for m, c in p.items():
        num = num + c * dnum ** m * Z ** (top - m)
    return Frac(num, Z ** top)


def kauffman(d: LinkDiagram, max_crossings: int = MAX_CROSSINGS) -> Frac:
    """Kauffman polynomial as a fraction over Laurent polynomials in (Q, a)."""
    if d.n_crossings > max_crossings:
        raise ResourceLimitError(f"{d.n_crossings} crossings exceeds the limit {max_crossings}")
    return _to_frac(_eval(d))


def specialize_kauffman(v: Frac, slice_) -> Frac | GoldenNumber:
    """Substitute ``a -> Q^(d-1)``.

    ``slice_`` is ``-2``, ``-4`` (any integer ``d``: symbolic in Q) or a pair
    ``(Q0, d)`` with ``Q0`` a :class:`GoldenNumber`, giving a number.
    """
    if isinstance(slice_, int):
        k = slice_ - 1
        return Frac(v.num.specialize_a(k), v.den.specialize_a(k))
    q0, dd = slice_
    q0 = GoldenNumber.coerce(q0)
    aval = q0 ** (dd - 1)
    den = v.den.evaluate(q0, aval)
    if den == 0:
        raise ZeroDivisionError("denominator vanishes at this specialization")
    return v.num.evaluate(q0, aval) / den


def bracket(d: LinkDiagram) -> LaurentPoly:
    """Kauffman bracket by summing over all 2^c smoothings."""
    q = LaurentPoly.gen("Q")
    alpha, beta = -q, -(q ** -1)
    delta = -(q ** 2) - q ** -2
    n = d.n_crossings
    arcs = d.arcs()
    total = LaurentPoly(var="Q")
    for choice in itertools.product("AB", repeat=n):
        parent = {a: a for a in arcs}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for x, c in zip(d.crossings, choice):
            for i, j in _SMOOTH_PAIRS[c]:
                ra, rb = find(x[i]), find(x[j])
                if ra != rb:
                    parent[ra] = rb
        circles = len({find(a) for a in arcs}) + d.loops
        na = choice.count("A")
        total = total + alpha ** na * beta ** (n - na) * delta ** circles
    return total
