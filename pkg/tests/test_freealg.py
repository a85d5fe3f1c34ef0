from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from ncgb.ajts import eta_symbol_map
from ncgb.arith import GR, ONE
from ncgb.freealg import Alphabet, NcPoly, apply_antihom, deglex_cmp, deglex_key, parse_poly, poly_mul, render_poly, render_word
from ncgb.reference import groebner_families
from strategies import polys, words

A2 = Alphabet.matrix(2)
A3 = Alphabet.matrix(3)
e2, e3 = A2.e, A3.e


def P(text, alpha=A3):
    return parse_poly(text, alpha)


def test_symbol_layout():
    assert [e2(1, 1), e2(1, 2), e2(2, 1), e2(2, 2)] == [0, 1, 2, 3]
    assert A2.row_col(2) == (2, 1)
    assert A2.name(1) == "e[1,2]"


def test_deglex_examples():
    assert deglex_cmp((e2(1, 1),), (e2(1, 2),)) == -1
    assert deglex_cmp((e2(2, 2),), (e2(1, 1), e2(1, 1))) == -1
    assert deglex_cmp((e2(1, 2), e2(2, 1)), (e2(1, 2), e2(1, 1))) == 1
    assert deglex_cmp((1, 2), (1, 2)) == 0


@settings(max_examples=500, deadline=None)
@given(words(3), words(3), words(3))
def test_deglex_is_monomial_order(u, v, w):
    c = deglex_cmp(u, v)
    assert c == -deglex_cmp(v, u)
    assert (c == 0) == (u == v)
    if c < 0:
        assert deglex_cmp(w + u, w + v) < 0
        assert deglex_cmp(u + w, v + w) < 0
    assert deglex_cmp((), u) <= 0


@settings(max_examples=300, deadline=None)
@given(words(3), words(3), words(3))
def test_deglex_transitive(u, v, w):
    if deglex_cmp(u, v) <= 0 and deglex_cmp(v, w) <= 0:
        assert deglex_cmp(u, w) <= 0


def test_poly_mul_examples():
    f = P("e[1,1] + e[1,2]")
    assert poly_mul(NcPoly.constant(1), f) == f
    assert poly_mul(P("e[1,2]"), P("e[2,1]")) == NcPoly.monomial((e3(1, 2), e3(2, 1)))
    got = poly_mul(f, P("e[1,1] - e[1,2]"))
    assert got == P("e[1,1]^2 - e[1,1]*e[1,2] + e[1,2]*e[1,1] - e[1,2]^2")
    assert len(got) == 4


@settings(max_examples=300, deadline=None)
@given(polys(3), polys(3), polys(3))
def test_poly_mul_associative_bilinear(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert (f * GR(2, 1)) * g == f * (g * GR(2, 1))


def test_leading_monomial():
    f = P("e[1,2]*e[2,3]*e[3,1] - e[3,1]*e[2,3]*e[1,2] - e[1,1]")
    w, c = f.leading()
    assert w == (e3(3, 1), e3(2, 3), e3(1, 2)) and c == -ONE
    m = NcPoly.monomial((e3(2, 2), e3(1, 1)), GR(3))
    assert m.leading() == ((e3(2, 2), e3(1, 1)), GR(3))
    assert NcPoly.constant(GR(0, 5)).leading() == ((), GR(0, 5))


def test_terms_descending_and_zero_free():
    f = NcPoly({(0,): 1, (1, 0): 2, (): 3, (0, 0): 0})
    assert list(f.support()) == [(1, 0), (0,), ()]
    assert not (f - f)


def test_eta_examples():
    eta = eta_symbol_map(2)
    f = NcPoly.monomial((e2(1, 2), e2(2, 1)))
    assert apply_antihom(f, eta) == f
    fams = groebner_families(3)["G0"]
    # G0 is listed over (i, j) in product order 2..n
    idx = [(i, j) for i in (2, 3) for j in (2, 3)]
    eta3 = eta_symbol_map(3)
    for (i, j), g in zip(idx, fams):
        assert apply_antihom(g, eta3) == fams[idx.index((j, i))]


@settings(max_examples=300, deadline=None)
@given(polys(4), polys(4))
def test_eta_antihom_laws(f, g):
    eta = eta_symbol_map(2)
    assert apply_antihom(f * g, eta) == apply_antihom(g, eta) * apply_antihom(f, eta)
    assert apply_antihom(apply_antihom(f, eta), eta) == f
    assert apply_antihom(f + g, eta) == apply_antihom(f, eta) + apply_antihom(g, eta)


@pytest.mark.parametrize(
    "text,canon",
    [
        ("e[1,1]*e[1,1]*e[1,1]", "e[1,1]^3"),
        ("0", "0"),
        ("-e[1,2] + 1/2", "-e[1,2] + 1/2"),
        ("(1+i)*e[2,1]*e[1,2] - 2*i", "(1+i)*e[2,1]*e[1,2] - 2*i"),
        ("(1/2-i)*e[1,2] + i", "(1/2-i)*e[1,2] + i"),
        ("i*e[1,1]", "i*e[1,1]"),
        ("e[1,1]^0", "1"),
    ],
)
def test_render_canonical(text, canon):
    assert render_poly(P(text, A2), A2) == canon


@settings(max_examples=500, deadline=None)
@given(polys(4, max_len=5))
def test_render_parse_roundtrip(f):
    assert parse_poly(render_poly(f, A2), A2) == f


def test_render_word_runs():
    assert render_word((), A2) == "1"
    assert render_word((0, 0, 1, 0), A2) == "e[1,1]^2*e[1,2]*e[1,1]"


@pytest.mark.parametrize("bad", ["", "e[1,1", "e[1,1]^", "e[3,1]", "(1+i", "e[1,1] e[1,2]"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_poly(bad, A2)
