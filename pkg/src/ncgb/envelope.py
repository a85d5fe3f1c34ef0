"""The finite-dimensional quotient F<X>/I of a triple system's envelope.

An :class:`EnvelopeAlgebra` holds the completed rewrite system, the normal
words (ascending deglex) as a basis, and a lazily filled multiplication
table.  Elements are :class:`AlgElement` objects with sparse coordinates.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .ajts import TripleSystem, envelope_relations, eta_symbol_map, matrix_ajts
from .arith import ONE, ZERO, GaussianRational, as_scalar, render_scalar
from .freealg import Alphabet, NcPoly, Word, apply_antihom, render_poly, render_word
from .groebner import NormalWordReport, RewriteSystem, complete, normal_form, normal_words

__all__ = [
    "EnvelopeAlgebra",
    "AlgElement",
    "InfiniteEnvelope",
    "build_envelope",
    "envelope_of",
    "check_associativity",
]


class InfiniteEnvelope(Exception):
    def __init__(self, report: NormalWordReport):
        super().__init__("the quotient has infinitely many normal words")
        self.report = report


def _vec_add(acc: dict, v: dict, c=None) -> None:
    for k, x in v.items():
        if c is not None:
            x = x * c
        s = acc.get(k)
        s = x if s is None else s + x
        if s:
            acc[k] = s
        else:
            del acc[k]


class EnvelopeAlgebra:
    def __init__(self, gb: RewriteSystem, alphabet: Alphabet, basis: list[Word], mode: str = "full"):
        self.gb = gb
        self.alphabet = alphabet
        self.basis = list(basis)
        self.index = {w: k for k, w in enumerate(self.basis)}
        self.mode = mode
        self.n = alphabet.n
        self._table: dict = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    # -- table ---------------------------------------------------------------------------

    def coords_of_poly(self, f: NcPoly) -> dict:
        """Coordinates of the class of ``f`` (reduces first)."""
        r = normal_form(f, self.gb)
        index = self.index
        return {index[w]: c for w, c in r.items()}

    def product(self, i: int, j: int) -> dict:
        """Coordinates of basis[i] * basis[j]; memoized."""
        key = (i, j)
        hit = self._table.get(key)
        if hit is None:
            hit = self.coords_of_poly(NcPoly._from_dict({self.basis[i] + self.basis[j]: ONE}))
            self._table[key] = hit
        return hit

    def fill_table(self, jobs: int = 1) -> None:
        """Compute every entry; with ``jobs > 1`` rows go to worker processes.

        Results are merged in row-major order so the table is identical
        whatever the number of workers.
        """
        d = self.dim
        if jobs <= 1:
            for i in range(d):
                for j in range(d):
                    self.product(i, j)
            return
        elems = self.gb.elements
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = ex.map(_table_row, itertools.repeat(elems), itertools.repeat(self.basis), range(d))
            for i, row in enumerate(rows):
                for j, coords in enumerate(row):
                    self._table.setdefault((i, j), coords)

    @property
    def table(self) -> dict:
        self.fill_table()
        return self._table

    # -- elements ----------------------------------------------------------------------------

    def element(self, coords: dict | None = None) -> "AlgElement":
        return AlgElement(self, {k: as_scalar(v) for k, v in (coords or {}).items() if v})

    def from_poly(self, f: NcPoly) -> "AlgElement":
        return AlgElement(self, self.coords_of_poly(f))

    def basis_element(self, k: int) -> "AlgElement":
        return AlgElement(self, {k: ONE})

    def word(self, w: Word) -> "AlgElement":
        return self.from_poly(NcPoly.monomial(w))

    def one(self) -> "AlgElement":
        return self.word(())

    def gen(self, *idx) -> "AlgElement":
        """Generator e[i,j] (matrix alphabet) or x[k] (generic)."""
        if self.alphabet.kind == "matrix":
            return self.word((self.alphabet.e(*idx),))
        return self.word((self.alphabet.x(*idx),))

    def parse(self, text: str) -> "AlgElement":
        from .freealg import parse_poly

        return self.from_poly(parse_poly(text, self.alphabet))

    def multiply(self, x: "AlgElement", y: "AlgElement") -> "AlgElement":
        if x.algebra is not self or y.algebra is not self:
            raise ValueError("elements belong to different algebras")
        out: dict = {}
        for i, a in x.coords.items():
            for j, b in y.coords.items():
                _vec_add(out, self.product(i, j), a * b)
        return AlgElement(self, out)

    def eta(self, x: "AlgElement") -> "AlgElement":
        """Transpose-and-reverse anti-automorphism (matrix alphabet only)."""
        sigma = eta_symbol_map(self.n)
        return self.from_poly(apply_antihom(x.to_poly(), sigma))

    # -- export ----------------------------------------------------------------------------

    def to_json(self) -> dict:
        self.fill_table()
        entries = []
        for i in range(self.dim):
            for j in range(self.dim):
                row = self._table[(i, j)]
                entries.append([i, j, [[k, render_scalar(row[k])] for k in sorted(row)]])
        return {
            "n": self.n,
            "dim": self.dim,
            "basis": [render_word(w, self.alphabet) for w in self.basis],
            "entries": entries,
        }

    def to_text(self) -> str:
        self.fill_table()
        names = [render_word(w, self.alphabet) for w in self.basis]
        lines = [f"# dim {self.dim}"]
        for k, nm in enumerate(names):
            lines.append(f"b{k} = {nm}")
        for i in range(self.dim):
            for j in range(self.dim):
                lines.append(f"{names[i]} . {names[j]} = {self.render_coords(self._table[(i, j)])}")
        return "\n".join(lines) + "\n"

    def coords_to_poly(self, coords: dict) -> NcPoly:
        return NcPoly._from_dict({self.basis[k]: c for k, c in coords.items()})

    def render_coords(self, coords: dict) -> str:
        return render_poly(self.coords_to_poly(coords), self.alphabet)


def _table_row(elems, basis, i):
    R = RewriteSystem(elems)
    index = {w: k for k, w in enumerate(basis)}
    row = []
    for v in basis:
        r = normal_form(NcPoly._from_dict({basis[i] + v: ONE}), R)
        row.append({index[w]: c for w, c in r.items()})
    return row


class AlgElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: EnvelopeAlgebra, coords: dict):
        self.algebra = algebra
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, AlgElement):
            return other
        return self.algebra.one() * as_scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coords)
        _vec_add(out, other.coords)
        return AlgElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgElement(self.algebra, {k: -v for k, v in self.coords.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return self.algebra.multiply(self, other)
        c = as_scalar(other)
        if not c:
            return AlgElement(self.algebra, {})
        return AlgElement(self.algebra, {k: v * c for k, v in self.coords.items()})

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, AlgElement):
            return self.algebra is other.algebra and self.coords == other.coords
        try:
            return self == self._coerce(other)
        except TypeError:
            return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.coords)

    def is_zero(self) -> bool:
        return not self.coords

    def coeff(self, k: int) -> GaussianRational:
        return self.coords.get(k, ZERO)

    def to_poly(self) -> NcPoly:
        b = self.algebra.basis
        return NcPoly._from_dict({b[k]: c for k, c in self.coords.items()})

    def vector(self) -> list:
        return [self.coords.get(k, ZERO) for k in range(self.algebra.dim)]

    def __str__(self):
        return self.algebra.render_coords(self.coords)

    def __repr__(self):
        return f"AlgElement({self})"


# -- construction ---------------------------------------------------------------------------


def envelope_of(T: TripleSystem, mode: str = "full", max_degree: int | None = None, progress=None) -> EnvelopeAlgebra:
    """Complete the envelope relations of ``T`` and set up the quotient."""
    rel = envelope_relations(T, mode)
    gb = complete(rel.generators, max_degree, progress=progress)
    report = normal_words(gb, T.dim)
    if not report.finite:
        raise InfiniteEnvelope(report)
    return EnvelopeAlgebra(gb, rel.alphabet, report.basis, mode)


def build_envelope(n: int, mode: str = "full", max_degree: int | None = None, progress=None) -> EnvelopeAlgebra:
    if n < 2:
        raise ValueError("n must be at least 2")
    return envelope_of(matrix_ajts(n), mode, max_degree, progress)


# -- associativity --------------------------------------------------------------------------


@dataclass
class AssociativityReport:
    ok: bool
    checked: int
    counterexample: tuple | None = None
    left: dict | None = None
    right: dict | None = None


def _assoc_triple(A: EnvelopeAlgebra, i, j, k):
    left: dict = {}
    for p, c in A.product(i, j).items():
        _vec_add(left, A.product(p, k), c)
    right: dict = {}
    for p, c in A.product(j, k).items():
        _vec_add(right, A.product(i, p), c)
    return left, right


def check_associativity(A: EnvelopeAlgebra, exhaustive: bool = True, samples: int = 10**5, seed: int = 0) -> AssociativityReport:
    """(uv)w = u(vw) on basis triples, all of them or ``samples`` random ones."""
    d = A.dim
    if exhaustive:
        it = itertools.product(range(d), repeat=3)
    else:
        rnd = random.Random(seed)
        it = ((rnd.randrange(d), rnd.randrange(d), rnd.randrange(d)) for _ in range(samples))
    count = 0
    for t in it:
        count += 1
        left, right = _assoc_triple(A, *t)
        if left != right:
            return AssociativityReport(False, count, t, left, right)
    return AssociativityReport(True, count)
