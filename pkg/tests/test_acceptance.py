"""The eight acceptance criteria, each at its stated tolerance (all exact).

A summary line per criterion is printed at the end of the run by the hook in
conftest.py.
"""

import itertools
import json
import random
import time

import pytest

from ncgb.ajts import envelope_relations, eta_symbol_map, matrix_ajts, zero_system
from ncgb.arith import GR
from ncgb.center import center_basis, in_span, is_central, rank
from ncgb.cli import main
from ncgb.decomp import (
    check_inequivalence,
    check_representation,
    matrix_units,
    representation,
    resolution_of_identity,
    unit_rank,
    verify_unit_relations,
    wedderburn_summary,
)
from ncgb.envelope import build_envelope, check_associativity
from ncgb.freealg import NcPoly, apply_antihom, deglex_cmp
from ncgb.groebner import complete, is_closed, normal_form, normal_words
from ncgb.reference import explicit_basis, groebner_families, closed_form_center


def test_criterion_1_groebner_basis_reproduction(capsys):
    t = time.perf_counter()
    outs = {}
    for mode in ("full", "paper"):
        assert main(["gb", "--matrix-n", "2", "--mode", mode, "--format", "json", "--quiet"]) == 0
        outs[mode] = json.loads(capsys.readouterr().out)["elements"]
    assert outs["full"] == outs["paper"]
    got = set(complete(envelope_relations(matrix_ajts(2)).generators).elements)
    want = {p.monic() for fam in groebner_families(2).values() for p in fam}
    assert got == want and len(got) == len(outs["full"])
    assert time.perf_counter() - t < 10


@pytest.mark.parametrize("n,limit", [(2, 10), (3, 120), (4, 900)])
def test_criterion_2_dimension(n, limit):
    t = time.perf_counter()
    A = build_envelope(n)
    assert A.dim == 4 * n * n + 1
    if n <= 3:
        want = {w for ws in explicit_basis(n).values() for w in ws}
        assert set(A.basis) == want
    assert time.perf_counter() - t < limit


@pytest.mark.parametrize("n", [2, 3])
def test_criterion_3_oracle_equivalence(n, capsys):
    # literal closed forms; see the ledger for the two entries that disagree
    code = main(["oracle-diff", "--matrix-n", str(n), "--format", "json", "--quiet"])
    data = json.loads(capsys.readouterr().out)
    assert data["pairs"] == (4 * n * n + 1) ** 2
    assert data["uncovered"] == 0
    assert data["mismatches"] == 0, [(d["left"], d["right"]) for d in data["details"]]
    assert code == 0


@pytest.mark.parametrize("n", [2, 3])
def test_criterion_4_center(n):
    A = build_envelope(n)
    Z = [z.vector() for z in center_basis(A)]
    assert len(Z) == 5
    P = [A.from_poly(p) for p in closed_form_center(n)]
    assert all(is_central(A, z) for z in P)
    Pv = [p.vector() for p in P]
    assert all(in_span(Z, v, A.dim) for v in Pv)
    assert all(in_span(Pv, v, A.dim) for v in Z)


@pytest.mark.parametrize("n", [2, 3])
def test_criterion_5_decomposition(n):
    A = build_envelope(n)
    fams = matrix_units(A)
    assert verify_unit_relations(fams).ok
    a11 = next(F for F in fams if F.kind == "A").units[(1, 1)]
    assert a11 * a11 == a11
    assert resolution_of_identity(fams).ok
    assert unit_rank(fams) == 4 * n * n + 1
    assert wedderburn_summary(A, fams) == [1, n, n, n, n]


@pytest.mark.parametrize("n", [2, 3])
def test_criterion_6_representations(n):
    T = matrix_ajts(n)
    reps = [representation(n, k) for k in (1, 2, 3, 4)]
    for r in reps:
        assert check_representation(T, r) == (True, n**6)
    pairs = list(itertools.combinations(reps, 2))
    assert len(pairs) == 6
    for r1, r2 in pairs:
        w = check_inequivalence(r1, r2)
        assert w is not None and w[1] != w[2]


def test_criterion_7_infinite_counterexample():
    G = complete(envelope_relations(zero_system(2)).generators)
    assert is_closed(G) == []
    rep = normal_words(G, 2, max_degree=10)
    assert not rep.finite and rep.cycle
    brute = []
    lms = G.leading_words
    for d in range(11):
        brute.append(
            sum(
                1
                for w in itertools.product(range(2), repeat=d)
                if not any(w[i : i + len(m)] == m for m in lms for i in range(d - len(m) + 1))
            )
        )
    assert rep.counts == brute


def test_criterion_8_property_suites():
    rnd = random.Random(8)
    A2, A3 = build_envelope(2), build_envelope(3)
    G = A2.gb

    def rand_poly(size, max_len):
        return NcPoly(
            {tuple(rnd.randrange(size) for _ in range(rnd.randint(0, max_len))): GR(rnd.randint(-4, 4), rnd.randint(-1, 1)) for _ in range(rnd.randint(1, 4))}
        )

    # normal form: idempotent, strategy independent
    for _ in range(1000):
        f = rand_poly(4, 6)
        r = normal_form(f, G)
        assert normal_form(r, G) == r
        assert normal_form(f, G, rng=rnd) == r

    # deglex laws
    for _ in range(2000):
        u, v, w = (tuple(rnd.randrange(3) for _ in range(rnd.randint(0, 4))) for _ in range(3))
        c = deglex_cmp(u, v)
        assert c == -deglex_cmp(v, u)
        if c < 0:
            assert deglex_cmp(w + u, w + v) < 0 and deglex_cmp(u + w, v + w) < 0

    # eta laws
    eta = eta_symbol_map(2)
    for _ in range(500):
        f, g = rand_poly(4, 4), rand_poly(4, 4)
        assert apply_antihom(f * g, eta) == apply_antihom(g, eta) * apply_antihom(f, eta)
        assert apply_antihom(apply_antihom(f, eta), eta) == f

    # associativity
    assert check_associativity(A2).ok
    rep = check_associativity(A3, exhaustive=False, samples=100_000, seed=3)
    assert rep.ok and rep.checked == 100_000

    # envelope property
    for n, A in ((2, A2), (3, A3)):
        T = matrix_ajts(n)
        g = [A.word((s,)) for s in range(n * n)]
        for a, b, c in itertools.product(range(n * n), repeat=3):
            rhs = A.element({A.index[(d,)]: x for d, x in T.triple(a, b, c).items()})
            assert g[a] * g[b] * g[c] - g[c] * g[b] * g[a] == rhs
