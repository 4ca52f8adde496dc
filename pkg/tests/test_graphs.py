import itertools
from pathlib import Path

import numpy as np
import pytest

from hsspider.errors import ResourceLimitError
from hsspider.exact import GoldenNumber, TAU
from hsspider.graphs import (GF4, SimpleGraph, build_higman_sims, build_pg24, build_steiner22,
                             complete_graph, export_adjacency, export_blocks, higman_sims, hyperoval_classes,
                             hyperovals, k_point_regularity, parse_adjacency, path_graph, pentagon,
                             spectrum_check, srg_check, verify_steiner)

DATA = Path(__file__).parent / "data"
S5 = GoldenNumber(0, 1)


@pytest.fixture(scope="module")
def plane():
    return build_pg24()


@pytest.fixture(scope="module")
def hs():
    return higman_sims()


def test_gf4_field():
    els = list(range(4))
    for a, b in itertools.product(els, repeat=2):
        assert GF4.mul(a, b) == GF4.mul(b, a)
    # w^2 = w + 1
    assert GF4.mul(2, 2) == GF4.add(2, 1)
    for a in els[1:]:
        assert any(GF4.mul(a, b) == 1 for b in els)


def test_plane_axioms(plane):
    assert len(plane.points) == 21 and len(plane.lines) == 21
    assert all(len(l) == 5 for l in plane.lines)
    for i, j in itertools.combinations(range(21), 2):
        assert sum(1 for l in plane.lines if i in l and j in l) == 1
    for p in range(21):
        assert sum(1 for l in plane.lines if p in l) == 5


def test_hyperovals(plane):
    ov = hyperovals(plane)
    assert len(ov) == 168
    classes = hyperoval_classes(ov)
    assert sorted(len(c) for c in classes) == [56, 56, 56]
    # no three points of a hyperoval are collinear
    o = next(iter(ov))
    assert not any(plane.collinear(*t) for t in itertools.combinations(sorted(o), 3))


def test_steiner(plane):
    st = build_steiner22(plane)
    assert len(st.blocks) == 77 == 21 + 56
    assert verify_steiner(st)
    assert 77 * 20 == 1540  # C(6,3) blocks against C(22,3) triples
    bad = type(st)(22, st.blocks[:-1] + [st.blocks[0]], st.plane)
    assert not verify_steiner(bad)


def test_higman_sims_basic(hs):
    assert hs.n == 100
    assert set(hs.degrees().tolist()) == {22}
    assert hs.triangles() == 0
    assert np.array_equal(hs.adj, hs.adj.T) and not np.any(np.diag(hs.adj))


def test_srg(hs):
    assert srg_check(hs).astuple() == (100, 22, 0, 6)
    assert srg_check(hs.complement()).astuple() == (100, 77, 60, 56)
    assert srg_check(pentagon()).astuple() == (5, 2, 0, 1)
    assert srg_check(path_graph(3)) is None


def test_spectrum(hs):
    assert spectrum_check(hs, {22: 1, 2: 77, -8: 22})
    assert not spectrum_check(hs, {22: 1, 2: 76, -8: 23})
    golden = {2: 1, (S5 - 1) / 2: 2, -(S5 + 1) / 2: 2}
    assert spectrum_check(pentagon(), golden)
    # 2 cos(2 pi / 5) = tau - 1
    assert (S5 - 1) / 2 == TAU - 1


def test_k_point(hs):
    r2 = k_point_regularity(hs, 2)
    assert r2.passed
    assert r2.constants[(2, 1, (1, 1))] == 0  # edge: no common neighbours
    assert r2.constants[(2, 0, (1, 1))] == 6  # non-edge: six
    r3 = k_point_regularity(hs, 3)
    assert r3.passed and r3.placements == 100 + 100 * 99 + 100 * 99 * 98
    # the k=3 report contains the k=2 constants
    for key, val in r2.constants.items():
        assert r3.constants[key] == val


def test_k_point_small():
    assert k_point_regularity(pentagon(), 3).passed
    assert not k_point_regularity(path_graph(4), 2).passed


def test_k_point_guard():
    with pytest.raises(ResourceLimitError):
        k_point_regularity(complete_graph(201), 2)


def test_construction_deterministic(hs):
    assert np.array_equal(build_higman_sims().adj, hs.adj)


def test_golden_adjacency_file(hs):
    text = (DATA / "higman_sims_adjacency.txt").read_text()
    assert export_adjacency(hs) == text
    assert np.array_equal(parse_adjacency(text).adj, hs.adj)


def test_golden_blocks_file():
    assert export_blocks(build_steiner22()) == (DATA / "steiner_22_blocks.txt").read_text()


def test_adjacency_hash_checked(hs):
    text = export_adjacency(hs)
    flipped = ("1" if text[1] == "0" else "0")
    with pytest.raises(ValueError):
        parse_adjacency(text[:1] + flipped + text[2:])
