import itertools
import json

import pytest

from ncgb.ajts import (
    TripleSystem,
    check_axioms,
    envelope_relations,
    eta_symbol_map,
    matrix_ajts,
    matrix_triple_oracle,
    zero_system,
)
from ncgb.arith import ONE
from ncgb.freealg import Alphabet, NcPoly, parse_poly
from conftest import DATA


def E(n, i, j):
    return Alphabet.matrix(n).e(i, j)


def test_matrix_triple_examples():
    T = matrix_ajts(2)
    assert T.triple(E(2, 1, 2), E(2, 2, 1), E(2, 1, 1)) == {E(2, 1, 1): ONE}
    assert T.triple(E(2, 1, 1), E(2, 1, 1), E(2, 1, 1)) == {}
    assert T.triple(E(2, 1, 2), E(2, 2, 1), E(2, 2, 2)) == matrix_triple_oracle(2, E(2, 1, 2), E(2, 2, 1), E(2, 2, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matrix_triple_against_matrix_products(n):
    T = matrix_ajts(n)
    for a, b, c in itertools.product(range(n * n), repeat=3):
        assert T.triple(a, b, c) == matrix_triple_oracle(n, a, b, c)


@pytest.mark.parametrize("n", [2, 3])
def test_axioms_hold(n):
    rep = check_axioms(matrix_ajts(n))
    assert rep.ok and rep.exhaustive and rep.checked == (n * n) ** 5


def test_axioms_zero_system():
    assert check_axioms(zero_system(2)).ok
    assert check_axioms(TripleSystem.load(DATA / "zero2.json")).ok


def test_axioms_sampled_when_large():
    rep = check_axioms(matrix_ajts(4), samples=500)
    assert rep.ok and not rep.exhaustive and rep.checked == 500


def test_negated_entry_is_caught():
    T = matrix_ajts(2)
    key = (E(2, 1, 1), E(2, 1, 1), E(2, 1, 2))
    T.gamma[key] = {d: -c for d, c in T.gamma[key].items()}
    rep = check_axioms(T)
    assert not rep.ok and rep.violation.axiom == "antisymmetry"
    assert "fails at" in rep.violation.describe(T)


def test_identity_violation_caught():
    # scale one antisymmetric pair: antisymmetry survives, the identity does not
    T = matrix_ajts(2)
    k1 = (E(2, 1, 2), E(2, 2, 1), E(2, 1, 1))
    k2 = (E(2, 1, 1), E(2, 2, 1), E(2, 1, 2))
    for k in (k1, k2):
        T.gamma[k] = {d: c * 2 for d, c in T.gamma[k].items()}
    rep = check_axioms(T)
    assert not rep.ok and rep.violation.axiom == "identity"


def test_corrupted_fixture():
    assert not check_axioms(TripleSystem.load(DATA / "corrupted.json")).ok


def test_json_roundtrip():
    T = matrix_ajts(3)
    U = TripleSystem.from_json(json.loads(json.dumps(T.to_json())))
    assert U.gamma == T.gamma and U.n == 3 and U.dim == 9


@pytest.mark.parametrize(
    "data",
    [
        {"dim": 2, "gamma": [[1, 1, 1, 3, "1"]]},
        {"dim": 2, "gamma": [[1, 1, 1, "1"]]},
        {"dim": 2, "gamma": [[1, 1, 1, 1, "x"]]},
    ],
)
def test_json_rejects(data):
    with pytest.raises(ValueError):
        TripleSystem.from_json(data)


def test_duplicate_entries_accumulate():
    T = TripleSystem.from_json({"dim": 1, "gamma": [[1, 1, 1, 1, "1/2"], [1, 1, 1, 1, "-1/2"]]})
    assert T.gamma == {}


def test_downup_relations():
    rel = envelope_relations(zero_system(2))
    a, b = 0, 1
    gens = {g.monic() for g in rel.generators}
    assert NcPoly({(b, a, a): 1, (a, a, b): -1}) in gens
    assert NcPoly({(b, b, a): 1, (a, b, b): -1}) in gens


def test_reduced_mode_instance():
    A = Alphabet.matrix(2)
    want = parse_poly("e[1,2]*e[2,1]*e[1,1] - e[1,1]*e[2,1]*e[1,2] - e[1,1]", A)
    assert want in envelope_relations(matrix_ajts(2), "paper").generators


@pytest.mark.parametrize("n", [2, 3])
def test_reduced_mode_covers_each_reversed_triple_once(n):
    # leading words are the words x_a x_b x_c with c < a, each exactly once
    gens = envelope_relations(matrix_ajts(n), "paper").generators
    lms = [g.lm for g in gens]
    m = n * n
    want = [(a, b, c) for a, b, c in itertools.product(range(m), repeat=3) if c < a]
    assert sorted(lms) == sorted(want)
    T = matrix_ajts(n)
    for g in gens:
        a, b, c = g.lm
        expect = NcPoly({(a, b, c): 1, (c, b, a): -1}) - NcPoly({(d,): x for d, x in T.triple(a, b, c).items()})
        assert g == expect


def test_full_mode_aba_terms():
    # <a b a> vanishes for the matrix system, so no degree-1 generators appear
    gens = envelope_relations(matrix_ajts(2)).generators
    assert all(g.degree == 3 for g in gens)
    T = TripleSystem(1, {(0, 0, 0): {0: ONE}})
    assert envelope_relations(T).generators == [-NcPoly({(0,): 1})]


def test_reduced_mode_needs_matrix():
    with pytest.raises(ValueError):
        envelope_relations(zero_system(2), "paper")
    with pytest.raises(ValueError):
        envelope_relations(zero_system(2), "other")


def test_eta_symbol_map():
    eta = eta_symbol_map(3)
    assert eta[E(3, 1, 2)] == E(3, 2, 1)
    assert eta[E(3, 1, 1)] == E(3, 1, 1)
    assert eta[E(3, 3, 2)] == E(3, 2, 3)
    assert sorted(eta) == list(range(9))
