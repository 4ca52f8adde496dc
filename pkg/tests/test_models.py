import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hsspider import models
from hsspider.errors import ResourceLimitError
from hsspider.exact import GoldenNumber, LaurentPoly, TAU
from hsspider.graphs import complete_graph, higman_sims, path_graph, pentagon
from hsspider.kauffman import bracket, kauffman, specialize_kauffman
from hsspider.links import braid_closure, checkerboard, corpus, parse_pd, r1_add, r2_add, r2_sites
from hsspider.webs import (checkerboard_web, evaluate_link_b2, loop_web, random_web, reduce_web,
                           tadpole_web, theta_web, triangle_web)

CORPUS = corpus()
S5 = GoldenNumber(0, 1)


@pytest.fixture(scope="module")
def hs_models():
    return models.higman_sims_model()


def test_potts_small_table():
    m = models.potts_model(4, 1)
    assert all(m.W_plus[i, j] == (1 if i == j else -1) for i in range(4) for j in range(4))
    assert np.array_equal(m.W_plus, m.W_minus)
    assert m.x == -2


def test_potts_symbolic_weights():
    u = LaurentPoly.gen("u")
    m = models.potts_model(2, u)
    assert m.W_plus[0, 0] == u ** 3 and m.W_minus[0, 0] == u ** -3
    assert m.x * m.x == u ** 4 + 2 + u ** -4


def test_hs_weights(hs_models):
    web, lm = hs_models
    A = higman_sims().adj
    n = 100
    want = -5 * A + np.ones((n, n), dtype=np.int64) + 10 * np.eye(n, dtype=np.int64)
    assert all(web.W_I[i, j] == int(want[i, j]) for i in range(0, n, 7) for j in range(n))
    assert all(lm.W_plus[i, j] == lm.W_plus[j, i] for i in range(0, n, 11) for j in range(n))


def test_graph_model_w_h():
    web, _ = models.graph_model(path_graph(3), -5, -10)
    assert web.W_H[0, 1] == -5 and web.W_H[0, 0] == 0 and web.W_H[0, 2] == 0


def test_degenerate_q():
    # q^(1/2) = 0 has no inverse
    with pytest.raises(ZeroDivisionError):
        models.graph_model(pentagon(), -1, -1, 0)


def test_unknot_any_model(hs_models):
    _, lm = hs_models
    u = parse_pd("U")
    Z, chi = models.link_state_sum(lm, u, checkerboard(u)[0])
    assert Z == 100 and chi == 1
    assert models.normalized_link_value(lm, u) == -10


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_hs_equals_b2(hs_models, name):
    _, lm = hs_models
    d = CORPUS[name]
    ref = evaluate_link_b2(d).evaluate(TAU)
    assert ref == specialize_kauffman(kauffman(d), (TAU, -4))
    for col in (0, 1):
        assert models.normalized_link_value(lm, d, col) == ref


@pytest.mark.parametrize("name", ["unknot", "curl", "hopf", "trefoil"])
def test_elimination_equals_naive(hs_models, name):
    _, lm = hs_models
    d = CORPUS[name]
    for c in checkerboard(d) if d.n_crossings else []:
        assert models.elimination_order_sum(lm, d, c) == models.link_state_sum(lm, d, c)


def test_elimination_equals_naive_potts():
    m = models.potts_model(9, TAU)
    d = CORPUS["figure-eight"]
    for c in checkerboard(d):
        assert models.elimination_order_sum(m, d, c) == models.link_state_sum(m, d, c)


def test_naive_guard(hs_models):
    _, lm = hs_models
    d7 = braid_closure([1, -2] * 4, 3)
    c = max(checkerboard(d7), key=lambda c: c.n_black)
    assert c.n_black >= 5
    with pytest.raises(ResourceLimitError):
        models.link_state_sum(lm, d7, c)


def test_positive_curl_scales_by_tau_minus_five(hs_models):
    _, lm = hs_models
    for name in ("unknot", "hopf", "trefoil"):
        d = CORPUS[name]
        arcs = d.arcs() or [("U", 0)]
        e = r1_add(d, arcs[0], 1)
        assert models.normalized_link_value(lm, e) == models.normalized_link_value(lm, d) * (TAU * 5 - 8)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_potts_identity(name):
    assert models.potts_symbolic_identity(CORPUS[name])


def test_potts_identity_r2_unknot():
    d = r1_add(parse_pd("U"), ("U", 0), 1)
    a1, a2 = r2_sites(d)[0]
    assert models.potts_symbolic_identity(r2_add(d, a1, a2, True))


def test_potts_numeric_oracle():
    # n = 4 at u = 1: the normalized value is the bracket at Q = 1
    m = models.potts_model(4, 1)
    for name in ("unknot", "hopf", "trefoil"):
        d = CORPUS[name]
        assert models.normalized_link_value(m, d) == bracket(d).evaluate(1)


# --- webs ----------------------------------------------------------------------


@pytest.mark.parametrize("make, want", [(lambda: loop_web(1), -10), (theta_web, -110),
                                        (tadpole_web, 0), (triangle_web, 0)])
def test_web_state_sums(hs_models, make, want):
    web, _ = hs_models
    w = make()
    for col in (0, 1):
        assert models.normalized_web_value(web, w, col) == want
        assert models.normalized_web_value(web, w, col, "naive") == want


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_web_state_sum_matches_reduction(seed):
    web, _ = models.higman_sims_model()
    w = random_web(random.Random(seed), 6)
    if w.loops[1] and w.typ:
        w.loops[1] = 0
    ref = reduce_web(w).evaluate(TAU ** 2)
    for col in (0, 1):
        assert models.normalized_web_value(web, w, col) == ref


def test_pentagon_web_values():
    pm = models.pentagon_model()
    # loop: n/x = 5/(-sqrt5) = l
    assert models.normalized_web_value(pm, loop_web(1)) == -S5
    # theta = h * L2 with L2 = c^3 - 2c + 1 at c = tau
    c = TAU
    L2 = c ** 3 - c * 2 + 1
    assert models.normalized_web_value(pm, theta_web()) == pm.h * L2
    assert models.normalized_web_value(pm, triangle_web()) == 0


# --- constraint reports -----------------------------------------------------


def test_verify_hs():
    rows = models.verify_model_constraints(higman_sims(), 3)
    assert all(r.passed for r in rows)
    by = {r.name: r for r in rows}
    assert "xh = 50" in by["W_I^2 = xh W_I"].detail
    assert "-110 + 100 + 10 = 0" in by["W_I N = 0"].detail
    assert "+ 10 = 50" in by["W_I eigenvalues in {0, xh}"].detail


def test_verify_pentagon():
    rows = models.verify_model_constraints(pentagon(), TAU)
    assert all(r.passed for r in rows)


def test_verify_k4_fails_triangle_free():
    rows = {r.name: r for r in models.verify_model_constraints(complete_graph(4), 3)}
    assert not rows["triangle-free"].passed


def test_colored_skein_hs(hs_models):
    web, _ = hs_models
    assert all(r.passed for r in models.colored_skein_report(web))


def test_triangle_identity_two_ways(hs_models):
    web, _ = hs_models
    ok, count = models.triangle_identity_exhaustive(web)
    assert ok and count == 10 ** 6
    ok2, res = models.triangle_identity_by_types(web, higman_sims())
    assert ok2 and res


def test_triangle_identity_fails_off_model():
    web, _ = models.graph_model(path_graph(4), -5, -10)
    assert not models.triangle_identity_exhaustive(web)[0]


def test_model_json_roundtrip(hs_models):
    web, lm = hs_models
    pm = models.pentagon_model()
    for m in (pm, lm):
        back = models.model_from_json(models.model_to_json(m))
        assert back.n == m.n and back.x == m.x
        if hasattr(m, "W_plus"):
            assert all(a == b for a, b in zip(back.W_plus.flat, m.W_plus.flat))
        else:
            assert all(a == b for a, b in zip(back.W_I.flat, m.W_I.flat))
