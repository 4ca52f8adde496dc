"""PG(2,4), the Steiner system S(3,6,22), the Higman-Sims graph and the
pentagon, with exact strong-regularity, spectral and k-point checks.

Integer matrices are numpy int64 arrays.  The 4-element field is
{0, 1, w, w+1} encoded as 0, 1, 2, 3 with addition by xor and w^2 = w + 1.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import ResourceLimitError
from .exact import GoldenNumber

__all__ = [
    "GF4",
    "SimpleGraph",
    "ProjectivePlane4",
    "Steiner22",
    "ConstructionError",
    "SRG",
    "KPointReport",
    "build_pg24",
    "hyperovals",
    "hyperoval_classes",
    "build_steiner22",
    "verify_steiner",
    "build_higman_sims",
    "higman_sims",
    "pentagon",
    "complete_graph",
    "path_graph",
    "srg_check",
    "spectrum_check",
    "k_point_regularity",
    "export_adjacency",
    "parse_adjacency",
    "export_blocks",
]


class ConstructionError(RuntimeError):
    pass


class GF4:
    """Arithmetic on {0, 1, w, w+1} as ints 0..3."""

    # w^0, w^1, w^2 = 1, 2, 3
    _exp = (1, 2, 3)
    _log = {1: 0, 2: 1, 3: 2}

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    @classmethod
    def mul(cls, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return cls._exp[(cls._log[a] + cls._log[b]) % 3]

    @classmethod
    def inv(cls, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(4)")
        return cls._exp[(-cls._log[a]) % 3]

    @classmethod
    def dot(cls, u: Sequence[int], v: Sequence[int]) -> int:
        s = 0
        for a, b in zip(u, v):
            s ^= cls.mul(a, b)
        return s


@dataclass
class SimpleGraph:
    adj: np.ndarray  # symmetric 0/1 int64, zero diagonal
    name: str = ""
    labels: Optional[List] = None

    def __post_init__(self):
        a = np.asarray(self.adj, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if np.any(np.diag(a)) or np.any((a != 0) & (a != 1)):
            raise ValueError("adjacency must be 0/1 with zero diagonal")
        self.adj = a

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    def n_edges(self) -> int:
        return int(self.adj.sum()) // 2

    def triangles(self) -> int:
        a = self.adj
        return int(np.trace(a @ a @ a)) // 6

    def complement(self) -> "SimpleGraph":
        n = self.n
        return SimpleGraph(np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64) - self.adj,
                           name=self.name + "-complement")

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i, j])


@dataclass
class ProjectivePlane4:
    points: List[Tuple[int, int, int]]
    lines: List[frozenset]  # lines as sets of point indices

    def collinear(self, i: int, j: int, k: int) -> bool:
        return any(i in l and j in l and k in l for l in self.lines)


@dataclass
class Steiner22:
    n_points: int
    blocks: List[Tuple[int, ...]]  # sorted point indices; point 21 is the extra point
    plane: ProjectivePlane4 = field(repr=False)


def _normalized_triples() -> List[Tuple[int, int, int]]:
    out = []
    for t in itertools.product(range(4), repeat=3):
        if t == (0, 0, 0):
            continue
        lead = next(x for x in t if x)
        if lead == 1:
            out.append(t)
    return out


def build_pg24() -> ProjectivePlane4:
    pts = _normalized_triples()
    lines = []
    for l in pts:
        lines.append(frozenset(i for i, p in enumerate(pts) if GF4.dot(p, l) == 0))
    plane = ProjectivePlane4(pts, lines)
    if len(pts) != 21 or len(lines) != 21 or any(len(l) != 5 for l in lines):
        raise ConstructionError("PG(2,4) has the wrong size")
    for i, j in itertools.combinations(range(21), 2):
        if sum(1 for l in lines if i in l and j in l) != 1:
            raise ConstructionError("points %d, %d are not on exactly one line" % (i, j))
    for i in range(21):
        if sum(1 for l in lines if i in l) != 5:
            raise ConstructionError("point %d is not on 5 lines" % i)
    return plane


def hyperovals(plane: ProjectivePlane4) -> List[frozenset]:
    """All 6-point sets with no three collinear."""
    n = len(plane.points)
    coll = set()
    for l in plane.lines:
        for t in itertools.combinations(sorted(l), 3):
            coll.add(t)
    out = []

    def extend(cur: List[int], start: int):
        if len(cur) == 6:
            out.append(frozenset(cur))
            return
        for p in range(start, n):
            if all((a, b, p) not in coll for a, b in itertools.combinations(cur, 2)):
                cur.append(p)
                extend(cur, p + 1)
                cur.pop()

    extend([], 0)
    return out


def hyperoval_classes(ovals: Sequence[frozenset]) -> List[List[frozenset]]:
    """Classes under 'meet in an even number of points', as a checked partition."""
    parent = list(range(len(ovals)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in itertools.combinations(range(len(ovals)), 2):
        if len(ovals[i] & ovals[j]) % 2 == 0:
            parent[find(i)] = find(j)
    groups: Dict[int, List[frozenset]] = {}
    for i, o in enumerate(ovals):
        groups.setdefault(find(i), []).append(o)
    classes = sorted(groups.values(), key=lambda g: min(tuple(sorted(o)) for o in g))
    for g in classes:
        for a, b in itertools.combinations(g, 2):
            if len(a & b) % 2:
                raise ConstructionError("even-intersection relation is not an equivalence")
    return classes


def build_steiner22(plane: Optional[ProjectivePlane4] = None) -> Steiner22:
    plane = plane or build_pg24()
    ovals = hyperovals(plane)
    if len(ovals) != 168:
        raise ConstructionError("expected 168 hyperovals, found %d" % len(ovals))
    classes = hyperoval_classes(ovals)
    if sorted(len(c) for c in classes) != [56, 56, 56]:
        raise ConstructionError("hyperovals do not split into three classes of 56")
    inf = 21
    blocks = [tuple(sorted(l | {inf})) for l in plane.lines]
    blocks += sorted(tuple(sorted(o)) for o in classes[0])
    _verify_steiner(22, blocks)
    return Steiner22(22, blocks, plane)


def _verify_steiner(npts: int, blocks: Sequence[Tuple[int, ...]]) -> None:
    if len(blocks) != 77 or any(len(b) != 6 for b in blocks):
        raise ConstructionError("S(3,6,22) needs 77 blocks of size 6")
    if len(blocks) * 20 != 1540:  # C(6,3) per block against C(22,3)
        raise ConstructionError("triple double count fails")
    cover: Dict[Tuple[int, int, int], int] = {}
    for b in blocks:
        for t in itertools.combinations(b, 3):
            cover[t] = cover.get(t, 0) + 1
    if len(cover) != 1540 or any(v != 1 for v in cover.values()):
        raise ConstructionError("some triple is not in exactly one block")
    for p in range(npts):
        if sum(1 for b in blocks if p in b) != 21:
            raise ConstructionError("point %d is not in 21 blocks" % p)


def verify_steiner(st: Steiner22) -> bool:
    """True if every 3-set of points lies in exactly one block."""
    try:
        _verify_steiner(st.n_points, st.blocks)
    except ConstructionError:
        return False
    return True


def build_higman_sims(steiner: Optional[Steiner22] = None) -> SimpleGraph:
    """Vertex 0 is the extra vertex, 1..22 the points, 23..99 the blocks."""
    st = steiner or build_steiner22()
    n = 1 + st.n_points + len(st.blocks)
    a = np.zeros((n, n), dtype=np.int64)
    offp, offb = 1, 1 + st.n_points
    for p in range(st.n_points):
        a[0, offp + p] = a[offp + p, 0] = 1
    sets = [frozenset(b) for b in st.blocks]
    for i, b in enumerate(sets):
        for p in b:
            a[offp + p, offb + i] = a[offb + i, offp + p] = 1
        for j in range(i + 1, len(sets)):
            if not (b & sets[j]):
                a[offb + i, offb + j] = a[offb + j, offb + i] = 1
    labels = ["*"] + ["p%d" % p for p in range(st.n_points)] + ["B%d" % i for i in range(len(sets))]
    g = SimpleGraph(a, name="higman-sims", labels=labels)
    if g.n != 100 or np.any(g.degrees() != 22) or g.triangles() != 0:
        raise ConstructionError("constructed graph is not 22-regular triangle-free on 100 vertices")
    return g


_HS_CACHE: Dict[str, SimpleGraph] = {}


def higman_sims() -> SimpleGraph:
    if "hs" not in _HS_CACHE:
        _HS_CACHE["hs"] = build_higman_sims()
    g = _HS_CACHE["hs"]
    return SimpleGraph(g.adj.copy(), g.name, g.labels)


def pentagon() -> SimpleGraph:
    a = np.zeros((5, 5), dtype=np.int64)
    for i in range(5):
        a[i, (i + 1) % 5] = a[(i + 1) % 5, i] = 1
    return SimpleGraph(a, name="pentagon")


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64), name="k%d" % n)


def path_graph(n: int) -> SimpleGraph:
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        a[i, i + 1] = a[i + 1, i] = 1
    return SimpleGraph(a, name="p%d" % n)


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SRG:
    n: int
    k: int
    lam: int
    mu: int

    def astuple(self):
        return (self.n, self.k, self.lam, self.mu)


def srg_check(g: SimpleGraph) -> Optional[SRG]:
    """Parameters if ``A^2 = kI + lam A + mu (J - I - A)`` exactly, else None."""
    a = g.adj
    n = g.n
    deg = g.degrees()
    if n == 0 or np.any(deg != deg[0]):
        return None
    k = int(deg[0])
    a2 = a @ a
    I = np.eye(n, dtype=np.int64)
    D = np.ones((n, n), dtype=np.int64) - I - a
    lam_vals = set(a2[a == 1].tolist())
    mu_vals = set(a2[D == 1].tolist())
    if len(lam_vals) > 1 or len(mu_vals) > 1:
        return None
    lam = lam_vals.pop() if lam_vals else 0
    mu = mu_vals.pop() if mu_vals else 0
    if not np.array_equal(a2, k * I + lam * a + mu * D):
        return None
    return SRG(n, k, int(lam), int(mu))


def _golden_matrix(a: np.ndarray) -> np.ndarray:
    out = np.empty(a.shape, dtype=object)
    for idx, v in np.ndenumerate(a):
        out[idx] = GoldenNumber(int(v))
    return out


def spectrum_check(g: SimpleGraph, spectrum: Mapping) -> bool:
    """Check that ``prod (A - t I) = 0`` and the trace equations hold.

    Eigenvalues may be ints or GoldenNumbers.  The trace equations used are
    ``sum m = n``, ``sum m t = tr A`` and ``sum m t^2 = tr A^2``.
    """
    items = list(spectrum.items())
    golden = any(isinstance(t, GoldenNumber) for t, _ in items)
    n = g.n
    if sum(m for _, m in items) != n:
        return False
    tr1 = sum((GoldenNumber.coerce(t) * m for t, m in items), GoldenNumber(0))
    tr2 = sum((GoldenNumber.coerce(t) ** 2 * m for t, m in items), GoldenNumber(0))
    if tr1 != int(np.trace(g.adj)) or tr2 != int(np.trace(g.adj @ g.adj)):
        return False
    if golden:
        a = _golden_matrix(g.adj)
        eye = _golden_matrix(np.eye(n, dtype=np.int64))
        prod = eye
        for t, _ in items:
            prod = prod.dot(a - eye * GoldenNumber.coerce(t))
        return all(x == 0 for x in prod.flat)
    prod = np.eye(n, dtype=object)
    a = g.adj.astype(object)
    for t, _ in items:
        prod = prod.dot(a - int(t) * np.eye(n, dtype=object))
    return not np.any(prod != 0)


@dataclass
class KPointReport:
    k: int
    passed: bool
    # (tuple size, placed shape, extension pattern) -> completion count
    constants: Dict[Tuple, int]
    violations: List[Tuple]
    placements: int

    def lines(self) -> List[str]:
        out = ["%d-point regularity: %s over %d placements"
               % (self.k, "PASS" if self.passed else "FAIL", self.placements)]
        for key in sorted(self.constants):
            out.append("  size %d shape %d extension %s -> %d" % (key + (self.constants[key],)))
        for v in self.violations[:5]:
            out.append("  violation: %r" % (v,))
        return out


def k_point_regularity(g: SimpleGraph, k: int = 3, max_vertices: int = 200) -> KPointReport:
    """Check that extension counts depend only on the placed shape.

    For each ordered tuple of m = 1..k distinct vertices and each adjacency
    pattern of one more vertex against the tuple, count the vertices with
    that pattern.  The count must depend only on the induced shape of the
    tuple.  Shapes are the adjacency bits of the tuple (pairs in
    lexicographic order, read as a binary number).  Keys of ``constants``
    are ``(m, shape, pattern)``.
    """
    if g.n > max_vertices:
        raise ResourceLimitError("k-point check limited to %d vertices" % max_vertices)
    if not 1 <= k <= 3:
        raise ValueError("k must be 1, 2 or 3")
    a = g.adj
    n = g.n
    B = {1: a, 0: np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64) - a}
    constants: Dict[Tuple, int] = {}
    violations: List[Tuple] = []
    placements = 0

    def record(shape_arr, pattern, counts, mask):
        m = len(pattern)
        for shape in np.unique(shape_arr[mask]):
            sel = mask & (shape_arr == shape)
            vals = np.unique(counts[sel])
            key = (m, int(shape), pattern)
            if len(vals) == 1:
                constants[key] = int(vals[0])
            else:
                violations.append((key, vals.tolist()))

    for m in range(1, k + 1):
        if m == 1:
            shape = np.zeros(n, dtype=np.int64)
            mask = np.ones(n, dtype=bool)
            placements += n
            for pa in (0, 1):
                counts = B[pa].sum(axis=1)
                record(shape, (pa,), counts, mask)
        elif m == 2:
            shape = a.copy()
            mask = ~np.eye(n, dtype=bool)
            placements += int(mask.sum())
            for pa, pb in itertools.product((0, 1), repeat=2):
                counts = B[pa] @ B[pb].T
                record(shape, (pa, pb), counts, mask)
        else:
            idx = np.arange(n)
            distinct = (idx[:, None, None] != idx[None, :, None]) & \
                       (idx[:, None, None] != idx[None, None, :]) & \
                       (idx[None, :, None] != idx[None, None, :])
            shape = 4 * a[:, :, None] + 2 * a[:, None, :] + a[None, :, :]
            placements += int(distinct.sum())
            for pa, pb, pc in itertools.product((0, 1), repeat=3):
                pairs = (B[pa][:, None, :] * B[pb][None, :, :]).reshape(n * n, n)
                counts = (pairs @ B[pc].T).reshape(n, n, n)
                record(shape, (pa, pb, pc), counts, distinct)
    return KPointReport(k, not violations, constants, violations, placements)


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------


def export_adjacency(g: SimpleGraph) -> str:
    rows = ["".join(str(int(x)) for x in row) for row in g.adj]
    body = "\n".join(rows) + "\n"
    digest = hashlib.sha256(body.encode()).hexdigest()
    return body + "sha256 " + digest + "\n"


def parse_adjacency(text: str) -> SimpleGraph:
    lines = [l.strip() for l in text.splitlines() if l.strip()]
    digest = None
    if lines and lines[-1].startswith("sha256 "):
        digest = lines.pop().split()[1]
    body = "\n".join(lines) + "\n"
    if digest is not None and hashlib.sha256(body.encode()).hexdigest() != digest:
        raise ValueError("adjacency hash mismatch")
    a = np.array([[int(c) for c in l] for l in lines], dtype=np.int64)
    return SimpleGraph(a)


def export_blocks(st: Steiner22) -> str:
    return "".join(" ".join(map(str, b)) + "\n" for b in st.blocks)
