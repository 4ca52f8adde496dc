import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from hsspider.exact import LaurentPoly, TAU
from hsspider.kauffman import kauffman, specialize_kauffman
from hsspider.links import corpus, parse_pd, r1_add, r2_add, r2_sites, r3, r3_sites
from hsspider.webs import (UnsupportedWebError, WebError, _link_web, canonical_web, checkerboard_web,
                           dashed_loop_web, evaluate_double_link, evaluate_link_b2, expand_dashed,
                           expand_link, format_web, loop_web, parse_web, random_web, reduce_web,
                           tadpole_web, theta_web, triangle_web, validate_web, web_faces)

q = LaurentPoly.gen("q")
L1 = -(q ** 2 + q + q ** -1 + q ** -2)
L2 = q ** 3 + q + 1 + q ** -1 + q ** -3
H = -(q + 2 + q ** -1)
DASHED = q ** 4 + q ** 3 + q ** 2 + q + 2 + q ** -1 + q ** -2 + q ** -3 + q ** -4
CORPUS = corpus()


def relabel(w, perm):
    """Rename half-edges through ``perm`` using the text format."""
    out = []
    for line in format_web(w).splitlines():
        head, _, body = line.partition(":")
        if head.startswith(("V", "E", "D")):
            body = " ".join(str(perm[int(t)]) for t in body.split())
            out.append(head + ": " + body)
        else:
            out.append(line)
    return parse_web("\n".join(out))


def dashed_value(w):
    return expand_dashed(w).evaluate().cleared().with_var("q")


# --- structure ---------------------------------------------------------------


def test_loop_faces():
    faces = validate_web(loop_web(1))
    assert sum(f.chi for f in faces) == 2


def test_theta_faces():
    faces = web_faces(theta_web())
    assert len(faces) == 3
    assert sum(f.chi for f in faces) == 2
    assert all((4 * f.chi).denominator == 1 for f in faces)


@pytest.mark.parametrize("make", [theta_web, tadpole_web, triangle_web])
def test_formal_chi_sums_to_two(make):
    assert sum(f.chi for f in validate_web(make())) == 2


def test_bad_vertex_rejected():
    text = "V0: 0 1 2\nV1: 3 4 5\nE0(1): 0 3\nE1(1): 1 5\nE2(1): 2 4\n"
    with pytest.raises(WebError):
        parse_web(text)


def test_bad_pairing_rejected():
    text = "V0: 0 1 2\nV1: 3 4 5\nE0(2): 0 3\nE1(1): 1 5\n"
    with pytest.raises(WebError):
        parse_web(text)


@pytest.mark.parametrize("make", [theta_web, tadpole_web, triangle_web, lambda: dashed_loop_web(2)])
def test_text_roundtrip(make):
    w = make()
    assert canonical_web(parse_web(format_web(w))) == canonical_web(w)


def test_canonical_key_relabel_invariant():
    w = triangle_web()
    labels = sorted(w.typ)
    rng = random.Random(3)
    for _ in range(3):
        img = labels[:]
        rng.shuffle(img)
        assert canonical_web(relabel(w, dict(zip(labels, img)))) == canonical_web(w)


def test_canonical_keys_differ():
    assert canonical_web(theta_web()) != canonical_web(triangle_web())


def test_coloring_of_theta():
    c0, c1 = checkerboard_web(theta_web())
    faces = web_faces(theta_web())
    assert c0.black.isdisjoint(c1.black) and len(c0.black | c1.black) == len(faces)
    # the two faces along the double edge share a color
    w = theta_web()
    fo = {h: f.face for f in faces for h in f.cycle}
    d1 = next(h for h in w.typ if w.typ[h] == 2)
    for c in (c0, c1):
        assert (fo[d1] in c.black) == (fo[w.pair[d1]] in c.black)


def test_coloring_unsupported():
    with pytest.raises(UnsupportedWebError):
        checkerboard_web(loop_web(2))


# --- reduction ---------------------------------------------------------------


def test_closed_web_scalars():
    assert reduce_web(loop_web(1)) == L1
    assert reduce_web(loop_web(2)) == L2
    assert reduce_web(theta_web()) == H * L2
    assert reduce_web(triangle_web()).is_zero()
    assert reduce_web(tadpole_web()).is_zero()


def test_dashed_loop():
    v = dashed_value(dashed_loop_web())
    assert v == DASHED and len(v) == 9
    assert v.evaluate(TAU ** 2) == 77
    assert dashed_value(dashed_loop_web(2)).evaluate(TAU ** 2) == 77 ** 2


def test_dashed_degenerate_h():
    # h = -(q + 2 + 1/q) vanishes at q = -1
    with pytest.raises(ZeroDivisionError):
        expand_dashed(dashed_loop_web(), at=-1)


def test_dashed_unreduced_rejected():
    with pytest.raises(WebError):
        reduce_web(dashed_loop_web())


def test_reduction_with_checks():
    rng = random.Random(11)
    for _ in range(10):
        w = random_web(rng, 8)
        assert reduce_web(w, check=True) == reduce_web(w)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 9), st.integers(0, 10 ** 9))
def test_confluence(seed, sched):
    w = random_web(random.Random(seed), 8)
    assert reduce_web(w, seed=sched) == reduce_web(w, seed=sched + 1) == reduce_web(w)


# --- links through webs -----------------------------------------------------


def test_link_web_term_counts():
    assert len(expand_link(CORPUS["curl"])) <= 3
    t = CORPUS["trefoil"]
    webs = [_link_web(t, ch) for ch in itertools.product("ABI", repeat=3)]
    assert len(webs) == 27
    for w in webs:
        validate_web(w)
    assert len(expand_link(t)) <= 27


def test_unknot_is_loop():
    ws = expand_link(parse_pd("U"))
    assert len(ws) == 1
    # values of links are in v = q^(1/2)
    assert evaluate_link_b2(parse_pd("U")).cleared() == L1.substitute_power(2).with_var("v")


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_b2_matches_kauffman_slice(name):
    d = CORPUS[name]
    b2 = evaluate_link_b2(d).cleared()
    kf = specialize_kauffman(kauffman(d), -4).cleared()
    assert b2.with_var("Q") == kf


def test_positive_curl_b2():
    d = r1_add(parse_pd("U"), ("U", 0), 1)
    v = LaurentPoly.gen("v")
    want = (v ** -5) * -(v ** 4 + v ** 2 + v ** -2 + v ** -4)
    assert evaluate_link_b2(d).cleared().with_var("v") == want


@pytest.mark.parametrize("name", ["curl", "hopf", "trefoil"])
def test_b2_r2_r3(name):
    d = CORPUS[name]
    v0 = evaluate_link_b2(d)
    for a1, a2 in r2_sites(d)[:3]:
        assert evaluate_link_b2(r2_add(d, a1, a2, True)) == v0
    for f in r3_sites(d):
        assert evaluate_link_b2(r3(d, f)) == v0


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_double_strands_match_kauffman_d5(name):
    d = CORPUS[name]
    got = evaluate_double_link(d).cleared()
    assert got.with_var("Q") == specialize_kauffman(kauffman(d), 5).cleared()


@pytest.mark.parametrize("name", ["curl", "hopf"])
def test_double_strand_r2(name):
    d = CORPUS[name]
    v0 = evaluate_double_link(d)
    for a1, a2 in r2_sites(d):
        for over in (True, False):
            assert evaluate_double_link(r2_add(d, a1, a2, over)) == v0
