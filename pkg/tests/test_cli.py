import json

import pytest

from hsspider.cli import main, symmetric_to_c
from hsspider.exact import LaurentPoly, TAU, parse_golden, parse_laurent
from hsspider.kauffman import kauffman, specialize_kauffman
from hsspider.links import braid_closure, parse_pd
from hsspider.webs import format_web, theta_web, triangle_web

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariant_hs_trefoil(capsys):
    code, out, _ = run(capsys, "invariant", "--model", "higman-sims", "--pd", TREFOIL)
    assert code == 0
    value = parse_golden(out.splitlines()[0].split(": ", 1)[1])
    assert value == specialize_kauffman(kauffman(parse_pd(TREFOIL)), (TAU, -4))
    assert "chi = 3" in out and "chi = 2" in out


def test_invariant_bracket_unknot(capsys):
    code, out, _ = run(capsys, "invariant", "--model", "bracket", "--pd", "U")
    assert code == 0
    assert out.strip() == "bracket: -1*Q^2 - 1*Q^-2"


def test_invariant_kauffman_unknot(capsys):
    code, out, _ = run(capsys, "invariant", "--model", "kauffman", "--pd", "U")
    assert code == 0
    assert " / " in out and "a^1" in out and "a^-1" in out


def test_invariant_b2_is_laurent(capsys):
    code, out, _ = run(capsys, "invariant", "--model", "b2", "--pd", TREFOIL)
    assert code == 0
    p = parse_laurent(out.split(": ", 1)[1].strip())
    assert p.with_var("Q") == specialize_kauffman(kauffman(parse_pd(TREFOIL)), -4).cleared()


def test_invariant_potts(capsys):
    code, out, _ = run(capsys, "invariant", "--model", "potts", "--pd", "X[1,1,2,2]", "--format", "json")
    assert code == 0
    res = json.loads(out)
    assert res["identity"] is True
    assert len(res["colorings"][0]) == 2


def test_json_and_text_agree(capsys):
    _, text, _ = run(capsys, "invariant", "--model", "higman-sims", "--pd", TREFOIL)
    _, js, _ = run(capsys, "invariant", "--model", "higman-sims", "--pd", TREFOIL, "--format", "json")
    assert parse_golden(text.splitlines()[0].split(": ", 1)[1]) == parse_golden(json.loads(js)["value"])


def test_workers_same_output(capsys):
    _, one, _ = run(capsys, "invariant", "--model", "higman-sims", "--pd", TREFOIL)
    _, two, _ = run(capsys, "invariant", "--model", "higman-sims", "--pd", TREFOIL, "--workers", "2")
    assert one == two


def test_web_file(tmp_path, capsys):
    f = tmp_path / "theta.web"
    f.write_text(format_web(theta_web()))
    for model, want in (("higman-sims", "-110"), ("pentagon-verify", None), ("b2", None)):
        code, out, _ = run(capsys, "invariant", "--model", model, "--web-file", str(f))
        assert code == 0
        if want:
            assert out.splitlines()[0] == "higman-sims: " + want
    f.write_text(format_web(triangle_web()))
    code, out, _ = run(capsys, "invariant", "--model", "pentagon-verify", "--web-file", str(f))
    assert code == 0 and "check: PASS" in out


def test_symmetric_to_c():
    q = LaurentPoly.gen("q")
    p = symmetric_to_c(q ** 2 + 2 + q ** -2)
    c = LaurentPoly.gen("c")
    assert p == c ** 2
    assert symmetric_to_c(q) is None


@pytest.mark.parametrize("argv", [
    ["invariant", "--model", "b2", "--pd", "X[1,2,3]"],
    ["invariant", "--model", "b2", "--pd", "X[1,2,3,4]"],
    ["invariant", "--model", "b2"],
    ["invariant", "--model", "nope", "--pd", "U"],
    ["invariant", "--model", "pentagon-verify", "--pd", "U"],
    ["invariant", "--model", "b2", "--web-file", "/nonexistent/file"],
    ["graph-verify", "--graph", "dodecahedron"],
    ["paper-suite", "--only", "no-such-check"],
    ["invariant", "--model", "b2", "--pd", "U", "--workers", "0"],
])
def test_input_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_resource_guard(capsys):
    big = braid_closure([1] * 11, 2).to_pd()
    code, _, err = run(capsys, "invariant", "--model", "kauffman", "--pd", big)
    assert code == 3 and "resource" in err


def test_graph_verify_default(capsys):
    code, out, _ = run(capsys, "graph-verify")
    assert code == 0
    assert "W_I^2 = xh W_I               PASS  (xh = 50)" in out
    assert "FAIL" not in out


def test_graph_verify_pentagon(capsys):
    code, _, _ = run(capsys, "graph-verify", "--graph", "pentagon")
    assert code == 0


def test_graph_verify_k4(capsys):
    code, out, err = run(capsys, "graph-verify", "--graph", "k4")
    assert code == 1
    assert "triangle-free" in err


def test_suite_numerology(capsys):
    code, out, _ = run(capsys, "paper-suite", "--only", "numerology")
    assert code == 0
    for token in ("= 10", "= 22", "= 77", "= -10", "= -5"):
        assert token in out


def test_suite_confluence_seeded_deterministic(capsys):
    code, a, _ = run(capsys, "paper-suite", "--seed", "7", "--only", "confluence", "--format", "json")
    _, b, _ = run(capsys, "paper-suite", "--seed", "7", "--only", "confluence", "--format", "json")
    assert code == 0
    ra, rb = json.loads(a), json.loads(b)
    for r in ra + rb:
        r.pop("seconds")
    assert ra == rb and ra[0]["passed"]
