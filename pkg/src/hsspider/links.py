"""Unoriented link projections on the 2-sphere, given by PD codes.

A crossing ``X[a,b,c,d]`` lists its four arcs counterclockwise; the ``a-c``
strand passes under the ``b-d`` strand.  Slots are numbered 0..3 and the
region between slot ``i`` and slot ``i+1`` is *corner* ``i`` of the crossing.

Smoothings of a crossing (used throughout the package):

* ``A``: join slots 0-1 and 2-3,
* ``B``: join slots 0-3 and 1-2.

The A-smoothing merges corners 1 and 3.  A crossing is *positive* for a
checkerboard coloring when corners 1 and 3 are black, i.e. when the
A-smoothing joins its two black corners.

Crossing-free unknotted components have no PD expression and are counted in
``LinkDiagram.loops``.  Different PD components (or loops) are treated as a
split union, each on its own sphere.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

Crossing = Tuple[int, int, int, int]
Slot = Tuple[int, int]  # (crossing index, slot)
Corner = Tuple[int, int]  # (crossing index, corner)

__all__ = [
    "PDError",
    "PDSyntaxError",
    "ArcCountError",
    "EulerError",
    "MoveError",
    "LinkDiagram",
    "FaceMap",
    "Coloring",
    "parse_pd",
    "faces",
    "checkerboard",
    "black_euler",
    "mirror",
    "disjoint_union",
    "r1_add",
    "r2_add",
    "r2_sites",
    "r3",
    "r3_sites",
    "transform",
    "traverse",
    "braid_closure",
    "split",
    "validate_diagram",
    "corpus",
    "CORPUS",
]


class PDError(ValueError):
    """Base class for invalid PD input."""


class PDSyntaxError(PDError):
    pass


class ArcCountError(PDError):
    pass


class EulerError(PDError):
    pass


class MoveError(ValueError):
    """A Reidemeister move was requested at an inapplicable site."""


@dataclass(frozen=True)
class LinkDiagram:
    crossings: Tuple[Crossing, ...] = ()
    loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(a) for a in x) for x in self.crossings))

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def arcs(self) -> List[int]:
        return sorted({a for x in self.crossings for a in x})

    def occurrences(self) -> Dict[int, List[Slot]]:
        occ: Dict[int, List[Slot]] = {}
        for k, x in enumerate(self.crossings):
            for s, a in enumerate(x):
                occ.setdefault(a, []).append((k, s))
        return occ

    def other_end(self, k: int, s: int, occ=None) -> Slot:
        occ = occ if occ is not None else self.occurrences()
        a = self.crossings[k][s]
        o1, o2 = occ[a]
        return o2 if o1 == (k, s) else o1

    def is_connected(self) -> bool:
        return len(split(self)) <= 1

    def to_pd(self) -> str:
        toks = ["X[%d,%d,%d,%d]" % x for x in self.crossings] + ["U"] * self.loops
        return " ".join(toks)

    def relabeled(self) -> "LinkDiagram":
        """Arcs renamed 1, 2, ... in order of first appearance."""
        names: Dict[int, int] = {}
        out = []
        for x in self.crossings:
            row = []
            for a in x:
                if a not in names:
                    names[a] = len(names) + 1
                row.append(names[a])
            out.append(tuple(row))
        return LinkDiagram(tuple(out), self.loops)

    def __str__(self):
        return self.to_pd() or "(empty)"


_TOKEN_RE = re.compile(r"^X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]$")


def _tokens(text: str) -> List[str]:
    # allow "X[1, 2, 3, 4]" by gluing bracket contents first
    text = re.sub(r"\[\s*([^\]]*)\]", lambda m: "[" + re.sub(r"\s+", "", m.group(1)) + "]", text)
    return text.replace(";", " ").split()


def parse_pd(text: str, validate: bool = True) -> LinkDiagram:
    crossings = []
    loops = 0
    for tok in _tokens(text):
        if tok == "U":
            loops += 1
            continue
        m = _TOKEN_RE.match(tok)
        if not m:
            raise PDSyntaxError(f"malformed PD token {tok!r}")
        arcs = tuple(int(g) for g in m.groups())
        if any(a <= 0 for a in arcs):
            raise PDSyntaxError(f"arc labels must be positive in {tok!r}")
        crossings.append(arcs)
    d = LinkDiagram(tuple(crossings), loops)
    if validate:
        validate_diagram(d)
    return d


def validate_diagram(d: LinkDiagram) -> None:
    occ = d.occurrences()
    for a, places in occ.items():
        if len(places) != 2:
            raise ArcCountError(f"arc {a} occurs {len(places)} times")
    for comp in split(d):
        if not comp.crossings:
            continue
        fm = _face_cycles(comp)
        if len(fm) != comp.n_crossings + 2:
            raise EulerError(
                f"component with {comp.n_crossings} crossings has {len(fm)} faces; "
                "not a sphere diagram"
            )


def _piece_of_crossing(d: LinkDiagram) -> List[int]:
    n = len(d.crossings)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for places in d.occurrences().values():
        for k, _ in places[1:]:
            parent[find(k)] = find(places[0][0])
    return [find(k) for k in range(n)]


def split(d: LinkDiagram) -> List[LinkDiagram]:
    """Connected pieces: PD components and one diagram per trivial loop."""
    groups: Dict[int, List[int]] = {}
    for k, p in enumerate(_piece_of_crossing(d)):
        groups.setdefault(p, []).append(k)
    parts = [LinkDiagram(tuple(d.crossings[k] for k in ks)) for ks in groups.values()]
    parts += [LinkDiagram((), 1) for _ in range(d.loops)]
    return parts


# ---------------------------------------------------------------------------
# Faces and colorings
# ---------------------------------------------------------------------------


def _face_cycles(d: LinkDiagram) -> List[Tuple[Corner, ...]]:
    occ = d.occurrences()
    seen = set()
    cycles = []
    for k in range(len(d.crossings)):
        for i in range(4):
            if (k, i) in seen:
                continue
            cyc = []
            cur = (k, i)
            while cur not in seen:
                seen.add(cur)
                cyc.append(cur)
                ck, ci = cur
                cur = d.other_end(ck, (ci + 1) % 4, occ)
            cycles.append(tuple(cyc))
    return cycles


@dataclass(frozen=True)
class FaceMap:
    """Faces of a connected diagram as cycles of corners.

    For a single trivial loop there are two faces with no corners.
    """

    faces: Tuple[Tuple[Corner, ...], ...]
    corner_face: Dict[Corner, int] = field(compare=False, hash=False)
    adjacency: Tuple[Tuple[int, int], ...]  # one pair of faces per arc side

    def face_of(self, k: int, corner: int) -> int:
        return self.corner_face[(k, corner % 4)]

    def __len__(self):
        return len(self.faces)

    def to_json(self) -> str:
        return json.dumps({"faces": [list(map(list, f)) for f in self.faces],
                           "adjacency": [list(p) for p in self.adjacency]})


def faces(d: LinkDiagram) -> FaceMap:
    pieces = split(d)
    if len(pieces) > 1:
        raise ValueError("faces() needs a connected diagram; use split() first")
    if not d.crossings:
        if d.loops == 1:
            return FaceMap(((), ()), {}, ((0, 1),))
        return FaceMap(((),), {}, ())
    cycles = _face_cycles(d)
    corner_face = {c: fi for fi, cyc in enumerate(cycles) for c in cyc}
    adj = set()
    for k in range(len(d.crossings)):
        for i in range(4):
            # slot i+1 separates corner i from corner i+1
            f1, f2 = corner_face[(k, i)], corner_face[(k, (i + 1) % 4)]
            adj.add((min(f1, f2), max(f1, f2)))
    return FaceMap(tuple(cycles), corner_face, tuple(sorted(adj)))


@dataclass(frozen=True)
class Coloring:
    """A checkerboard coloring of a connected diagram.

    ``black_pairs[k]`` are the black faces at the two black corners of
    crossing ``k`` and ``signs[k]`` its sign relative to this coloring.
    """

    black: frozenset
    signs: Tuple[int, ...]
    black_pairs: Tuple[Tuple[int, int], ...]
    n_faces: int

    @property
    def n_black(self) -> int:
        return len(self.black)

    def atoms(self) -> List[int]:
        return sorted(self.black)


def checkerboard(d: LinkDiagram) -> Tuple[Coloring, Coloring]:
    """The two colorings; the first has the face at corner (0, 0) black."""
    fm = faces(d)
    nf = len(fm)
    if not d.crossings:
        if nf == 2:
            return (Coloring(frozenset({0}), (), (), 2), Coloring(frozenset({1}), (), (), 2))
        raise ValueError("empty diagram has no checkerboard coloring")
    color = [None] * nf
    color[0] = 1
    nbrs: Dict[int, List[int]] = {i: [] for i in range(nf)}
    for a, b in fm.adjacency:
        if a == b:
            raise EulerError("an arc has the same face on both sides")
        nbrs[a].append(b)
        nbrs[b].append(a)
    stack = [0]
    while stack:
        f = stack.pop()
        for g in nbrs[f]:
            if color[g] is None:
                color[g] = 1 - color[f]
                stack.append(g)
            elif color[g] == color[f]:
                raise EulerError("faces are not 2-colorable")
    out = []
    for want in (1, 0):
        black = frozenset(i for i in range(nf) if color[i] == want)
        signs, pairs = [], []
        for k in range(len(d.crossings)):
            face13 = (fm.face_of(k, 1), fm.face_of(k, 3))
            face02 = (fm.face_of(k, 0), fm.face_of(k, 2))
            if face13[0] in black:
                signs.append(+1)
                pairs.append(face13)
            else:
                signs.append(-1)
                pairs.append(face02)
        out.append(Coloring(black, tuple(signs), tuple(pairs), nf))
    return out[0], out[1]


def black_euler(d: LinkDiagram, c: Coloring) -> int:
    """Euler characteristic of the black region: one disk per black face.

    Black faces touch each other only at crossing points, and the state-model
    normalization treats them as separate disks.
    """
    return c.n_black


# ---------------------------------------------------------------------------
# Strand traversal
# ---------------------------------------------------------------------------


def traverse(d: LinkDiagram) -> List[List[Slot]]:
    """Link components as sequences of (crossing, entering slot).

    Components are ordered by their smallest arc label and each starts by
    entering the first occurrence of that label.  Exiting slot ``s`` leaves
    through slot ``s+2``.
    """
    occ = d.occurrences()
    seen_arcs = set()
    comps = []
    for a in sorted(occ):
        if a in seen_arcs:
            continue
        start = occ[a][0]
        visits = []
        cur = start
        while True:
            k, s = cur
            visits.append(cur)
            seen_arcs.add(d.crossings[k][s])
            out = (s + 2) % 4
            seen_arcs.add(d.crossings[k][out])
            cur = d.other_end(k, out, occ)
            if cur == start:
                break
        comps.append(visits)
    return comps


# ---------------------------------------------------------------------------
# Moves
# ---------------------------------------------------------------------------


def mirror(d: LinkDiagram) -> LinkDiagram:
    return LinkDiagram(tuple((b, c, dd, a) for a, b, c, dd in d.crossings), d.loops)


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    off = max(d1.arcs(), default=0)
    shifted = tuple(tuple(a + off for a in x) for x in d2.crossings)
    return LinkDiagram(d1.crossings + shifted, d1.loops + d2.loops)


def _fresh(d: LinkDiagram, n: int) -> List[int]:
    m = max(d.arcs(), default=0)
    return list(range(m + 1, m + 1 + n))


def _replace_slot(xs: List[List[int]], slot: Slot, label: int) -> None:
    k, s = slot
    xs[k][s] = label


def r1_add(d: LinkDiagram, arc, sign: int = 1, side: int = 0) -> LinkDiagram:
    """Add a curl on ``arc`` (or on trivial loop ``("U", i)``).

    ``sign=+1`` gives the curl whose B-smoothing splits off the small loop
    (its Kauffman value gains a factor ``a``); ``side`` picks one of the two
    planar placements of that curl.
    """
    if sign not in (1, -1) or side not in (0, 1):
        raise MoveError("sign must be +-1 and side 0 or 1")
    m1, m2, m3 = _fresh(d, 3)
    xs = [list(x) for x in d.crossings]
    loops = d.loops
    if isinstance(arc, tuple) and arc[0] == "U":
        if not (0 <= arc[1] < d.loops):
            raise MoveError(f"no trivial loop {arc[1]}")
        loops -= 1
        m3 = m1
    else:
        occ = d.occurrences()
        if arc not in occ:
            raise MoveError(f"no arc {arc}")
        p, q = occ[arc]
        _replace_slot(xs, p, m1)
        _replace_slot(xs, q, m3)
    # loop sits on a B pair (0-3 or 1-2) for sign +1, an A pair otherwise
    loop_slots = {(1, 0): (1, 2), (1, 1): (3, 0), (-1, 0): (0, 1), (-1, 1): (2, 3)}[(sign, side)]
    new = [0, 0, 0, 0]
    i, j = loop_slots
    new[i] = new[j] = m2
    rest = [s for s in range(4) if s not in loop_slots]
    # the strand entering at rest[0] must exit into the loop
    new[rest[0]] = m1
    new[rest[1]] = m3
    xs.append(new)
    return LinkDiagram(tuple(map(tuple, xs)), loops)


def _directed_arc_on_face(d: LinkDiagram, arc: int, fm: Optional[FaceMap] = None):
    """Yield (face, start_slot, end_slot) for each side of ``arc``.

    The face of corner (k, i) continues along the arc of slot (k, i+1), which
    it keeps on its left while travelling from that slot to the arc's other
    end (the face is to the right of the direction of travel).
    """
    fm = fm or faces(d)
    occ = d.occurrences()
    out = []
    for (k, s) in occ[arc]:
        corner = (k, (s - 1) % 4)
        out.append((fm.corner_face[corner], (k, s), d.other_end(k, s, occ)))
    return out


def r2_sites(d: LinkDiagram) -> List[Tuple[int, int]]:
    """Pairs of distinct arcs bordering a common face (connected diagrams)."""
    if not d.crossings or not d.is_connected():
        return []
    fm = faces(d)
    by_face: Dict[int, set] = {}
    for a in d.arcs():
        for f, _, _ in _directed_arc_on_face(d, a, fm):
            by_face.setdefault(f, set()).add(a)
    sites = set()
    for arcs in by_face.values():
        for a, b in itertools.combinations(sorted(arcs), 2):
            sites.add((a, b))
    return sorted(sites)


def r2_add(d: LinkDiagram, arc1, arc2, over: bool = True) -> LinkDiagram:
    """Push ``arc1`` across ``arc2`` (over it when ``over``), adding a bigon.

    Either argument may be a trivial loop ``("U", i)``.  Two arcs of the same
    connected piece must share a face; arcs of different split pieces can
    always be brought together.
    """
    is_loop1 = isinstance(arc1, tuple)
    is_loop2 = isinstance(arc2, tuple)
    if is_loop1 and is_loop2 and arc1 == arc2:
        raise MoveError("cannot push a loop across itself")
    if not is_loop1 and not is_loop2 and arc1 == arc2:
        raise MoveError("r2 needs two distinct arcs")
    for arc, is_loop in ((arc1, is_loop1), (arc2, is_loop2)):
        if is_loop:
            if arc[0] != "U" or not (0 <= arc[1] < d.loops):
                raise MoveError(f"no trivial loop {arc}")
        elif arc not in d.occurrences():
            raise MoveError(f"no arc {arc}")

    a1, a2, a3, b1, b2, b3 = _fresh(d, 6)
    xs = [list(x) for x in d.crossings]
    loops = d.loops - int(is_loop1) - int(is_loop2)

    occ = d.occurrences()
    ends1 = None if is_loop1 else tuple(occ[arc1])
    ends2 = None if is_loop2 else tuple(occ[arc2])
    if not is_loop1 and not is_loop2:
        piece = _piece_of_crossing(d)
        k1, k2 = occ[arc1][0][0], occ[arc2][0][0]
        if piece[k1] == piece[k2]:
            idx = [k for k in range(len(d.crossings)) if piece[k] == piece[k1]]
            sub = LinkDiagram(tuple(d.crossings[k] for k in idx))
            fm = faces(sub)
            back = lambda slot: (idx[slot[0]], slot[1])
            found = None
            for f, st, en in _directed_arc_on_face(sub, arc1, fm):
                for g, st2, en2 in _directed_arc_on_face(sub, arc2, fm):
                    if f == g and found is None:
                        found = ((back(st), back(en)), (back(st2), back(en2)))
            if found is None:
                raise MoveError(f"arcs {arc1} and {arc2} share no face")
            ends1, ends2 = found

    if is_loop1:
        a3 = a1
    else:
        _replace_slot(xs, ends1[0], a1)
        _replace_slot(xs, ends1[1], a3)
    if is_loop2:
        b3 = b1
    else:
        _replace_slot(xs, ends2[0], b1)
        _replace_slot(xs, ends2[1], b3)
    if over:
        x1 = [b2, a1, b3, a2]
        x2 = [b1, a3, b2, a2]
    else:
        x1 = [a1, b3, a2, b2]
        x2 = [a3, b2, a2, b1]
    xs += [x1, x2]
    return LinkDiagram(tuple(map(tuple, xs)), loops)


def _canon_crossing(x: Sequence[int]) -> Tuple[int, ...]:
    x = tuple(x)
    return min(x, x[2:] + x[:2])


def _triangle_local(config: str, ext, mid, under_of) -> Dict[Tuple[int, int], Tuple[int, ...]]:
    """PD of three pairwise crossing chords in a hexagon.

    Chord ``i`` runs from boundary position ``i`` to ``i+3``; ``ext[i]`` is
    ``(label at p_i, label at p_(i+3))``, ``mid[i]`` its middle segment.
    ``first[config][i]`` is the crossing chord ``i`` meets first from ``p_i``.
    """
    first = {"U": {0: (0, 1), 1: (0, 1), 2: (0, 2)},
             "D": {0: (0, 2), 1: (1, 2), 2: (1, 2)}}[config]
    out = {}
    for i, j in ((0, 1), (0, 2), (1, 2)):
        def ray(c, toward_start):
            is_first = first[c] == (i, j)
            if toward_start:
                return ext[c][0] if is_first else mid[c]
            return mid[c] if is_first else ext[c][1]
        rays = [ray(i, True), ray(j, True), ray(i, False), ray(j, False)]
        if under_of[(i, j)] == i:
            out[(i, j)] = tuple(rays)
        else:
            out[(i, j)] = tuple(rays[1:] + rays[:1])
    return out


def r3_sites(d: LinkDiagram) -> List[int]:
    """Faces on which an R3 move applies."""
    if not d.crossings or not d.is_connected():
        return []
    fm = faces(d)
    return [f for f in range(len(fm)) if _r3_match(d, fm, f) is not None]


def _r3_match(d: LinkDiagram, fm: FaceMap, f: int):
    cyc = fm.faces[f]
    if len(cyc) != 3 or len({k for k, _ in cyc}) != 3:
        return None
    ks = [k for k, _ in cyc]
    # chords: each triangle side is the arc in slot (k, i+1) of corner (k, i)
    chords = []
    for (k, i) in cyc:
        s = (i + 1) % 4
        k2, s2 = d.other_end(k, s)
        if k2 not in ks or k2 == k:
            return None
        m = d.crossings[k][s]
        chords.append({"mid": m, "ends": {k: d.crossings[k][(s + 2) % 4],
                                          k2: d.crossings[k2][(s2 + 2) % 4]},
                       "ks": (k, k2)})
    if len({c["mid"] for c in chords}) != 3:
        return None
    target = {k: _canon_crossing(d.crossings[k]) for k in ks}
    for perm in itertools.permutations(range(3)):
        ch = [chords[p] for p in perm]
        for flips in itertools.product((0, 1), repeat=3):
            for config in ("U", "D"):
                first = {"U": {0: (0, 1), 1: (0, 1), 2: (0, 2)},
                         "D": {0: (0, 2), 1: (1, 2), 2: (1, 2)}}[config]
                # crossing shared by chords i and j
                cross = {}
                ok = True
                for i, j in ((0, 1), (0, 2), (1, 2)):
                    common = set(ch[i]["ks"]) & set(ch[j]["ks"])
                    if len(common) != 1:
                        ok = False
                        break
                    cross[(i, j)] = common.pop()
                if not ok:
                    continue
                ext = []
                for i in range(3):
                    ka, kb = ch[i]["ks"] if not flips[i] else ch[i]["ks"][::-1]
                    # ka must be the crossing met first from p_i
                    if cross[first[i]] != ka:
                        ok = False
                        break
                    ext.append((ch[i]["ends"][ka], ch[i]["ends"][kb]))
                if not ok:
                    continue
                mid = [c["mid"] for c in ch]
                for unders in itertools.product((0, 1), repeat=3):
                    under_of = {p: p[u] for p, u in zip(((0, 1), (0, 2), (1, 2)), unders)}
                    local = _triangle_local(config, ext, mid, under_of)
                    if all(_canon_crossing(local[p]) == target[cross[p]] for p in local):
                        # R3 needs one chord over both others (no cyclic overs)
                        over_count = [0, 0, 0]
                        for p, u in under_of.items():
                            over_count[p[0] if u == p[1] else p[1]] += 1
                        if sorted(over_count) != [0, 1, 2]:
                            return None
                        return config, ext, mid, under_of, cross
    return None


def r3(d: LinkDiagram, face: int) -> LinkDiagram:
    """Reidemeister III across triangular face ``face``."""
    fm = faces(d)
    m = _r3_match(d, fm, face) if 0 <= face < len(fm) else None
    if m is None:
        raise MoveError(f"face {face} is not an R3 triangle")
    config, ext, mid, under_of, cross = m
    other = "D" if config == "U" else "U"
    local = _triangle_local(other, ext, mid, under_of)
    xs = list(d.crossings)
    for p, k in cross.items():
        xs[k] = local[p]
    return LinkDiagram(tuple(xs), d.loops)


def transform(d: LinkDiagram, move: str, *args, **kwargs) -> LinkDiagram:
    """Dispatch ``move`` in {mirror, disjoint_union, r1_add, r2_add, r3}."""
    fns = {"mirror": mirror, "disjoint_union": disjoint_union, "r1_add": r1_add,
           "r2_add": r2_add, "r3": r3}
    if move not in fns:
        raise MoveError(f"unknown move {move!r}")
    out = fns[move](d, *args, **kwargs)
    validate_diagram(out)
    return out


def braid_closure(word: Sequence[int], strands: int) -> LinkDiagram:
    """Closure of a braid word (``+i`` / ``-i`` for sigma_i^{+-1}).

    A test and corpus helper; braids are not an input format of the CLI.
    """
    label = itertools.count(1)
    start = [next(label) for _ in range(strands)]
    cur = list(start)
    xs = []
    for g in word:
        i = abs(g) - 1
        if not (0 <= i < strands - 1):
            raise ValueError(f"generator {g} out of range")
        n1, n2 = next(label), next(label)
        if g > 0:
            xs.append([cur[i], cur[i + 1], n2, n1])
        else:
            xs.append([cur[i + 1], n2, n1, cur[i]])
        cur[i], cur[i + 1] = n1, n2
    ident = {c: s for c, s in zip(cur, start)}
    xs = [tuple(ident.get(a, a) for a in x) for x in xs]
    loops = 0
    used = {a for x in xs for a in x}
    loops = sum(1 for s in start if s not in used)
    return LinkDiagram(tuple(xs), loops).relabeled()


CORPUS = {
    "unknot": "U",
    "curl": "X[1,1,2,2]",
    "hopf": "X[1,3,2,4] X[3,1,4,2]",
    "trefoil": "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]",
    "figure-eight": "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]",
}


def corpus() -> Dict[str, LinkDiagram]:
    return {name: parse_pd(text) for name, text in CORPUS.items()}
