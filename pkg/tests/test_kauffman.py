import random

import pytest
from hypothesis import given, settings, strategies as st

from hsspider.errors import ResourceLimitError
from hsspider.exact import BiLaurent, Frac, LaurentPoly, TAU
from hsspider.kauffman import bracket, kauffman, loop_value, specialize_kauffman
from hsspider.links import (braid_closure, corpus, disjoint_union, mirror, parse_pd, r1_add, r2_add,
                            r2_sites, r3, r3_sites)
from hsspider.webs import evaluate_link_b2

Q = LaurentPoly.gen("Q")
Qb, A = BiLaurent.Q(), BiLaurent.A()
DELTA = Frac(A + Qb - Qb ** -1 - A ** -1) / Frac(Qb - Qb ** -1)
CORPUS = corpus()


def test_unknot_is_delta():
    assert kauffman(parse_pd("U")) == DELTA
    assert loop_value() == DELTA


def test_empty_diagram_is_one():
    assert kauffman(parse_pd("")) == Frac(BiLaurent.constant(1))


def test_curls():
    u = parse_pd("U")
    assert kauffman(r1_add(u, ("U", 0), 1)) == DELTA * A
    assert kauffman(r1_add(u, ("U", 0), -1)) == DELTA * A ** -1
    # the corpus curl is the a^-1 curl
    assert kauffman(parse_pd("X[1,1,2,2]")) == DELTA * A ** -1


def test_split_union_multiplies():
    assert kauffman(parse_pd("U U")) == DELTA * DELTA
    t, h = CORPUS["trefoil"], CORPUS["hopf"]
    assert kauffman(disjoint_union(t, h)) == kauffman(t) * kauffman(h)


def test_bracket_examples():
    loop = -(Q ** 2 + Q ** -2)
    assert bracket(parse_pd("U")) == loop
    assert bracket(r1_add(parse_pd("U"), ("U", 0), 1)) == Q ** -3 * loop


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_slice_coherence_with_bracket(name):
    d = CORPUS[name]
    assert specialize_kauffman(kauffman(d), -2).cleared() == bracket(d)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_mirror_inverts_variables(name):
    d = CORPUS[name]
    k, km = kauffman(d), kauffman(mirror(d))
    assert km == k.map_parts(lambda p: p.invert_variables())


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_clears_after_d_slices(name):
    k = kauffman(CORPUS[name])
    for d in (-2, -4, 5):
        assert specialize_kauffman(k, d).cleared() is not None


def test_hopf_against_b2():
    h = CORPUS["hopf"]
    want = evaluate_link_b2(h).cleared().with_var("Q")
    assert specialize_kauffman(kauffman(h), -4).cleared() == want


def test_delta_numeric_at_tau():
    assert specialize_kauffman(DELTA, (TAU, -4)) == -10


def test_pole_raises():
    # Q = 1 makes Q - 1/Q vanish
    with pytest.raises(ZeroDivisionError):
        specialize_kauffman(DELTA, (1, -4))


def test_crossing_guard():
    d = braid_closure([1] * 11, 2)
    with pytest.raises(ResourceLimitError):
        kauffman(d)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_r2_r3_invariance(name):
    d = CORPUS[name]
    k0, b0 = kauffman(d), bracket(d)
    for a1, a2 in r2_sites(d)[:4]:
        for over in (True, False):
            e = r2_add(d, a1, a2, over)
            assert kauffman(e) == k0
            assert bracket(e) == b0
    for f in r3_sites(d):
        e = r3(d, f)
        assert kauffman(e) == k0 and bracket(e) == b0


def test_r3_on_braid():
    d = braid_closure([1, 2, 1, -2], 3)
    k0 = kauffman(d)
    for f in r3_sites(d):
        assert kauffman(r3(d, f)) == k0


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_r1_covariance_random(seed):
    rng = random.Random(seed)
    names = sorted(CORPUS)
    d = CORPUS[rng.choice(names)]
    arcs = d.arcs() or [("U", 0)]
    sign = rng.choice((1, -1))
    e = r1_add(d, rng.choice(arcs), sign, rng.randrange(2))
    assert kauffman(e) == kauffman(d) * A ** sign


@settings(max_examples=20, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=5))
def test_braid_r2_invariance(word):
    d = braid_closure(word, 3)
    k0 = kauffman(d)
    sites = r2_sites(d)
    if sites and d.n_crossings <= 5:
        a1, a2 = sites[0]
        assert kauffman(r2_add(d, a1, a2, True)) == k0
