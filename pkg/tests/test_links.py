import random

import pytest
from hypothesis import given, settings, strategies as st

from hsspider.links import (ArcCountError, LinkDiagram, MoveError, PDSyntaxError, black_euler,
                            braid_closure, checkerboard, corpus, disjoint_union, faces, mirror,
                            parse_pd, r1_add, r2_add, r2_sites, r3, r3_sites, split, traverse)

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
HOPF = "X[1,3,2,4] X[3,1,4,2]"

CORPUS = corpus()


def test_parse_examples():
    t = parse_pd(TREFOIL)
    assert t.n_crossings == 3
    u = parse_pd("U")
    assert u.n_crossings == 0 and u.loops == 1
    c = parse_pd("X[1,1,2,2]")
    assert c.n_crossings == 1 and len(faces(c)) == 3


def test_parse_errors():
    with pytest.raises(PDSyntaxError):
        parse_pd("X[1,2,3]")
    with pytest.raises(ArcCountError):
        parse_pd("X[1,2,3,4]")


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_pd_roundtrip(name):
    d = CORPUS[name]
    assert parse_pd(d.to_pd()) == d
    assert parse_pd(parse_pd(d.to_pd()).to_pd()).to_pd() == d.to_pd()


@pytest.mark.parametrize("text, n_faces", [(TREFOIL, 5), ("X[1,1,2,2]", 3), (HOPF, 4)])
def test_face_counts(text, n_faces):
    assert len(faces(parse_pd(text))) == n_faces


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_euler_formula(name):
    d = CORPUS[name]
    for p in split(d):
        if p.n_crossings:
            assert len(faces(p)) == p.n_crossings + 2


@pytest.mark.parametrize("text, sizes", [(TREFOIL, {2, 3}), ("U", {1}), (HOPF, {2})])
def test_coloring_sizes(text, sizes):
    c0, c1 = checkerboard(parse_pd(text))
    assert {c0.n_black, c1.n_black} == sizes


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_colorings_complementary(name):
    for p in split(CORPUS[name]):
        c0, c1 = checkerboard(p)
        assert c0.black.isdisjoint(c1.black)
        assert len(c0.black | c1.black) == c0.n_faces
        if p.n_crossings:
            assert all(s0 == -s1 for s0, s1 in zip(c0.signs, c1.signs))
            # adjacent faces get opposite colors
            for a, b in faces(p).adjacency:
                assert (a in c0.black) != (b in c0.black)


def _black_corners(d, c):
    fm = faces(d)
    return {(k, i) for k in range(d.n_crossings) for i in range(4) if fm.face_of(k, i) in c.black}


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_signs_flip_under_mirror(name):
    d = CORPUS[name]
    if not d.n_crossings or len(split(d)) > 1:
        return
    m = mirror(d)
    # corner i of a mirrored crossing is corner i + 1 of the original
    for c in checkerboard(d):
        want = {(k, (i - 1) % 4) for k, i in _black_corners(d, c)}
        cm = [x for x in checkerboard(m) if _black_corners(m, x) == want]
        assert len(cm) == 1
        assert all(s == -t for s, t in zip(c.signs, cm[0].signs))


def test_black_euler_counts_faces():
    c0, c1 = checkerboard(parse_pd(TREFOIL))
    assert sorted([black_euler(None, c0), black_euler(None, c1)]) == [2, 3]
    u0, _ = checkerboard(parse_pd("U"))
    assert black_euler(None, u0) == 1


def test_traverse_components():
    assert len(traverse(parse_pd(TREFOIL))) == 1
    assert len(traverse(parse_pd(HOPF))) == 2


def test_r2_on_two_loops():
    d = r2_add(parse_pd("U U"), ("U", 0), ("U", 1), over=True)
    assert d.n_crossings == 2 and d.loops == 0
    assert len(traverse(d)) == 2


def test_mirror_involution():
    t = parse_pd(TREFOIL)
    # mirroring twice rotates each crossing by two slots, the same crossing
    rot = LinkDiagram(tuple(x[2:] + x[:2] for x in t.crossings), t.loops)
    assert mirror(mirror(t)) == rot
    assert mirror(t) != t


def test_r3_on_braid_closure():
    d = braid_closure([1, 2, 1], 3)
    sites = r3_sites(d)
    assert sites
    e = r3(d, sites[0])
    assert e.n_crossings == d.n_crossings
    with pytest.raises(MoveError):
        r3(d, 10 ** 6)


def test_split_and_union():
    d = disjoint_union(parse_pd(TREFOIL), parse_pd(HOPF))
    parts = split(d)
    assert sorted(p.n_crossings for p in parts) == [2, 3]


def _random_diagram(rng, steps):
    d = parse_pd("U")
    d = r1_add(d, ("U", 0), rng.choice((1, -1)))
    for _ in range(steps):
        kind = rng.random()
        if kind < 0.3:
            d = r1_add(d, rng.choice(d.arcs()), rng.choice((1, -1)), rng.randrange(2))
        else:
            sites = r2_sites(d)
            if sites:
                a1, a2 = rng.choice(sites)
                d = r2_add(d, a1, a2, rng.random() < 0.5)
    return d


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(0, 3))
def test_moves_keep_diagrams_valid(seed, steps):
    d = _random_diagram(random.Random(seed), steps)
    assert parse_pd(d.to_pd()) == d  # validation runs in parse_pd
    assert len(faces(d)) == d.n_crossings + 2
    c0, c1 = checkerboard(d)
    assert c0.n_black + c1.n_black == c0.n_faces
