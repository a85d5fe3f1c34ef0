"""Triple systems, the anti-Jordan axioms, the matrix system on n x n
matrices, and the relations defining a universal associative envelope."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Iterator

from .arith import ZERO, GaussianRational, as_scalar, parse_scalar, render_scalar
from .freealg import Alphabet, NcPoly

__all__ = [
    "TripleSystem",
    "AxiomViolation",
    "EnvelopeRelations",
    "matrix_ajts",
    "zero_system",
    "check_axioms",
    "envelope_relations",
    "eta_symbol_map",
    "matrix_triple_oracle",
]

Vec = dict  # basis index -> GaussianRational, no zeros


def _vadd(acc: dict, v: dict, c=None) -> None:
    for k, x in v.items():
        x = x if c is None else x * c
        s = acc.get(k)
        s = x if s is None else s + x
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


@dataclass
class TripleSystem:
    """Structure constants gamma[(a, b, c)] = {d: coeff} (0-based indices)."""

    dim: int
    gamma: dict = field(default_factory=dict)
    labels: list[str] | None = None
    n: int | None = None  # set for the matrix system

    def triple(self, a: int, b: int, c: int) -> Vec:
        return self.gamma.get((a, b, c), {})

    def triple_vec(self, x: Vec, y: Vec, z: Vec) -> Vec:
        """Trilinear extension to coordinate vectors."""
        out: dict = {}
        for a, ca in x.items():
            for b, cb in y.items():
                cab = ca * cb
                for c, cc in z.items():
                    t = self.gamma.get((a, b, c))
                    if t:
                        _vadd(out, t, cab * cc)
        return out

    @property
    def alphabet(self) -> Alphabet:
        if self.n is not None:
            return Alphabet.matrix(self.n)
        return Alphabet.generic(self.dim)

    def is_matrix(self) -> bool:
        return self.n is not None

    # -- JSON ------------------------------------------------------------------------

    def to_json(self) -> dict:
        rows = []
        for (a, b, c) in sorted(self.gamma):
            for d in sorted(self.gamma[(a, b, c)]):
                rows.append([a + 1, b + 1, c + 1, d + 1, render_scalar(self.gamma[(a, b, c)][d])])
        out = {"dim": self.dim, "labels": self.labels or [self.alphabet.name(s) for s in range(self.dim)], "gamma": rows}
        if self.n is not None:
            out["matrix_n"] = self.n
        return out

    @classmethod
    def from_json(cls, data: dict) -> "TripleSystem":
        dim = int(data["dim"])
        gamma: dict = {}
        for row in data.get("gamma", []):
            if len(row) != 5:
                raise ValueError(f"gamma entry needs 5 fields: {row!r}")
            a, b, c, d = (int(v) - 1 for v in row[:4])
            for v in (a, b, c, d):
                if not 0 <= v < dim:
                    raise ValueError(f"index out of range in {row!r}")
            coeff = parse_scalar(str(row[4]))
            slot = gamma.setdefault((a, b, c), {})
            s = slot.get(d, ZERO) + coeff
            if s:
                slot[d] = s
            else:
                slot.pop(d, None)
        gamma = {k: v for k, v in gamma.items() if v}
        n = data.get("matrix_n")
        return cls(dim, gamma, data.get("labels"), int(n) if n is not None else None)

    @classmethod
    def load(cls, path) -> "TripleSystem":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def matrix_ajts(n: int) -> TripleSystem:
    """<E_ij, E_kl, E_mt> = d_jk d_lm E_it - d_tk d_li E_mj on n x n matrices."""
    if n < 1:
        raise ValueError("n must be positive")
    alpha = Alphabet.matrix(n)
    e = alpha.e
    gamma: dict = {}
    one = as_scalar(1)
    rng = range(1, n + 1)
    for i, j, k, l, m, t in itertools.product(rng, repeat=6):
        vec: dict = {}
        if j == k and l == m:
            vec[e(i, t)] = vec.get(e(i, t), ZERO) + one
        if t == k and l == i:
            vec[e(m, j)] = vec.get(e(m, j), ZERO) - one
        vec = {d: c for d, c in vec.items() if c}
        if vec:
            gamma[(e(i, j), e(k, l), e(m, t))] = vec
    return TripleSystem(n * n, gamma, None, n)


def zero_system(dim: int) -> TripleSystem:
    return TripleSystem(dim, {}, None, None)


def matrix_triple_oracle(n: int, a: int, b: int, c: int) -> Vec:
    """abc - cba by literal matrix multiplication of elementary matrices."""
    def unit(s):
        M = [[0] * n for _ in range(n)]
        M[s // n][s % n] = 1
        return M

    def mul(X, Y):
        return [[sum(X[r][q] * Y[q][col] for q in range(n)) for col in range(n)] for r in range(n)]

    A, B, C = unit(a), unit(b), unit(c)
    P = mul(mul(A, B), C)
    Q = mul(mul(C, B), A)
    out = {}
    for r in range(n):
        for col in range(n):
            v = P[r][col] - Q[r][col]
            if v:
                out[r * n + col] = as_scalar(v)
    return out


# -- axioms ---------------------------------------------------------------------------


@dataclass
class AxiomViolation:
    axiom: str  # "antisymmetry" | "identity"
    indices: tuple
    lhs: dict
    rhs: dict

    def describe(self, T: TripleSystem) -> str:
        name = T.alphabet.name
        idx = ", ".join(name(i) for i in self.indices)
        return f"{self.axiom} fails at ({idx}): lhs={_render_vec(self.lhs, T)} rhs={_render_vec(self.rhs, T)}"


def _render_vec(v: dict, T: TripleSystem) -> str:
    if not v:
        return "0"
    name = T.alphabet.name
    return " + ".join(f"({render_scalar(c)})*{name(d)}" for d, c in sorted(v.items()))


@dataclass
class AxiomReport:
    ok: bool
    exhaustive: bool
    checked: int
    threshold: int
    violation: AxiomViolation | None = None


EXHAUSTIVE_LIMIT = 10**5


def _unit(a: int) -> dict:
    return {a: as_scalar(1)}


def _five_term(T: TripleSystem, a, b, c, d, e_):
    A, B, C, D, E = (_unit(x) for x in (a, b, c, d, e_))
    lhs = T.triple_vec(A, B, T.triple(c, d, e_))
    rhs: dict = {}
    _vadd(rhs, T.triple_vec(T.triple(a, b, c), D, E))
    _vadd(rhs, T.triple_vec(C, T.triple(b, a, d), E))
    _vadd(rhs, T.triple_vec(C, D, T.triple(a, b, e_)))
    return lhs, rhs


def check_axioms(T: TripleSystem, limit: int = EXHAUSTIVE_LIMIT, samples: int = 20000, seed: int = 0) -> AxiomReport:
    """Antisymmetry on all triples, then the five-term identity.

    The identity is checked on every quintuple when there are at most
    ``limit`` of them, otherwise on ``samples`` random ones.  The first
    violation in lexicographic order (or sampling order) is reported.
    """
    m = T.dim
    for a, b, c in itertools.product(range(m), repeat=3):
        x, y = T.triple(a, b, c), T.triple(c, b, a)
        neg = {k: -v for k, v in y.items()}
        if x != neg:
            return AxiomReport(False, True, 0, limit, AxiomViolation("antisymmetry", (a, b, c), x, neg))
    total = m**5
    if total <= limit:
        it: Iterator = itertools.product(range(m), repeat=5)
        exhaustive = True
    else:
        rnd = random.Random(seed)
        it = (tuple(rnd.randrange(m) for _ in range(5)) for _ in range(samples))
        exhaustive = False
    count = 0
    for q in it:
        count += 1
        lhs, rhs = _five_term(T, *q)
        if lhs != rhs:
            return AxiomReport(False, exhaustive, count, limit, AxiomViolation("identity", q, lhs, rhs))
    return AxiomReport(True, exhaustive, count, limit)


# -- envelope relations -----------------------------------------------------------------


@dataclass
class EnvelopeRelations:
    generators: list[NcPoly]
    mode: str
    alphabet: Alphabet


def _phi(v: dict) -> NcPoly:
    return NcPoly({(d,): c for d, c in v.items()})


def envelope_relations(T: TripleSystem, mode: str = "full") -> EnvelopeRelations:
    """Generators of the ideal whose quotient is the universal envelope.

    ``full`` works for any system: x_a x_b x_c - x_c x_b x_a - <abc> for
    a < c, plus -<aba> when that is nonzero (the triple (c, b, a) would only
    repeat the negated relation).  ``paper`` (the name is fixed by the
    command line) lists the six reduced families for the matrix system.
    """
    if mode == "full":
        gens = []
        m = T.dim
        for a in range(m):
            for b in range(m):
                for c in range(a, m):
                    t = T.triple(a, b, c)
                    if a == c:
                        if t:
                            gens.append(-_phi(t))
                        continue
                    f = NcPoly({(a, b, c): 1, (c, b, a): -1}) - _phi(t)
                    gens.append(f)
        return EnvelopeRelations(gens, "full", T.alphabet)
    if mode == "paper":
        if not T.is_matrix():
            raise ValueError("paper mode needs the matrix triple system")
        return EnvelopeRelations(_reduced_families(T.n), "paper", T.alphabet)
    raise ValueError(f"unknown mode {mode!r}")


def _reduced_families(n: int) -> list[NcPoly]:
    """The six reduced relation families for the n x n matrix system.

    Together they cover each triple (a, b, c) with c < a exactly once.  In
    the two zero-product families a listed pair of inequalities "x or y"
    guards one delta term each, so both guards must hold.
    """
    e = Alphabet.matrix(n).e
    O = range(1, n + 1)

    def rel(p, q, r, const=None, sign=-1):
        f = {(e(*p), e(*q), e(*r)): 1, (e(*r), e(*q), e(*p)): -1}
        if const is not None:
            f[(e(*const),)] = sign
        return NcPoly(f)

    out = []
    for i, j, k, t in itertools.product(O, repeat=4):
        if k < i:  # R1
            out.append(rel((i, j), (j, k), (k, t), (i, t), -1))
    for i, j, t in itertools.product(O, repeat=3):
        if t < j:  # R2
            out.append(rel((i, j), (j, i), (i, t), (i, t), -1))
    for i, j, k, t in itertools.product(O, repeat=4):
        if t < i:  # R3
            out.append(rel((i, j), (k, i), (t, k), (t, j), 1))
    for i, j, k in itertools.product(O, repeat=3):
        if k < j:  # R4
            out.append(rel((i, j), (k, i), (i, k), (i, j), 1))
    for i, j, k, t, r, s in itertools.product(O, repeat=6):
        if r < i and (j != k or t != r) and (s != k or t != i):  # R5
            out.append(rel((i, j), (k, t), (r, s)))
    for i, j, k, t, s in itertools.product(O, repeat=5):
        if s < j and (j != k or t != i) and (s != k or t != i):  # R6
            out.append(rel((i, j), (k, t), (i, s)))
    return out


def eta_symbol_map(n: int) -> list[int]:
    """Transposition e_ij -> e_ji as a list indexed by symbol."""
    A = Alphabet.matrix(n)
    return [A.e(j, i) for i in range(1, n + 1) for j in range(1, n + 1)]
