"""Words and noncommutative polynomials of the free unital algebra F<X>.

A word is a plain ``tuple`` of symbol indices; the empty tuple is the unit
monomial.  Symbols are ordered by their integer index, and an
:class:`Alphabet` maps indices to printable names.  For the matrix alphabet
``e[i,j]`` the index is ``(i-1)*n + (j-1)``, which makes integer order agree
with the row-then-column order on the ``e[i,j]``.

Polynomials keep their terms in descending deglex order, so the leading
monomial is the first key.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .arith import ONE, ZERO, GaussianRational, as_scalar, parse_scalar, render_scalar

Word = tuple  # tuple[int, ...]

__all__ = [
    "Word",
    "Alphabet",
    "deglex_key",
    "deglex_cmp",
    "NcPoly",
    "apply_antihom",
    "parse_poly",
    "render_poly",
    "render_word",
]


def deglex_key(w: Word):
    """Sort key realising deglex: degree first, then left-to-right symbols."""
    return (len(w), w)


def deglex_cmp(u: Word, v: Word) -> int:
    """-1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    ku, kv = (len(u), u), (len(v), v)
    if ku < kv:
        return -1
    if ku > kv:
        return 1
    return 0


@dataclass(frozen=True)
class Alphabet:
    """Either the matrix alphabet ``e[i,j]`` (1 <= i, j <= n) or ``x[1..m]``."""

    kind: str  # "matrix" | "generic"
    size: int
    n: int | None = None

    @classmethod
    def matrix(cls, n: int) -> "Alphabet":
        if n < 1:
            raise ValueError("n must be positive")
        return cls("matrix", n * n, n)

    @classmethod
    def generic(cls, m: int) -> "Alphabet":
        if m < 0:
            raise ValueError("alphabet size must be non-negative")
        return cls("generic", m)

    def e(self, i: int, j: int) -> int:
        """Index of the matrix symbol e[i,j] (1-based row and column)."""
        if self.kind != "matrix":
            raise ValueError("e[i,j] symbols need the matrix alphabet")
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"e[{i},{j}] is outside the {n}x{n} alphabet")
        return (i - 1) * n + (j - 1)

    def x(self, k: int) -> int:
        if self.kind != "generic":
            raise ValueError("x[k] symbols need the generic alphabet")
        if not 1 <= k <= self.size:
            raise ValueError(f"x[{k}] is outside the alphabet of size {self.size}")
        return k - 1

    def row_col(self, s: int) -> tuple[int, int]:
        return divmod(s, self.n)[0] + 1, s % self.n + 1

    def name(self, s: int) -> str:
        if self.kind == "matrix":
            i, j = self.row_col(s)
            return f"e[{i},{j}]"
        return f"x[{s + 1}]"

    def symbols(self) -> range:
        return range(self.size)

    def to_json(self) -> dict:
        if self.kind == "matrix":
            return {"kind": "matrix", "n": self.n}
        return {"kind": "generic", "size": self.size}

    @classmethod
    def from_json(cls, data: Mapping) -> "Alphabet":
        if data["kind"] == "matrix":
            return cls.matrix(int(data["n"]))
        return cls.generic(int(data["size"]))


class NcPoly:
    """Finitely supported map Word -> GaussianRational.  Immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for w, c in items:
            c = as_scalar(c)
            w = tuple(w)
            if w in acc:
                acc[w] = acc[w] + c
            else:
                acc[w] = c
        self._terms = {w: acc[w] for w in sorted(acc, key=deglex_key, reverse=True) if acc[w]}
        self._hash = None

    @classmethod
    def _from_dict(cls, d: dict) -> "NcPoly":
        """Wrap a dict whose values are already nonzero GaussianRationals."""
        obj = object.__new__(cls)
        obj._terms = {w: d[w] for w in sorted(d, key=deglex_key, reverse=True)}
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, word: Sequence[int], coeff=ONE) -> "NcPoly":
        return cls({tuple(word): coeff})

    @classmethod
    def constant(cls, c) -> "NcPoly":
        return cls({(): c})

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls()

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Word, GaussianRational]:
        return self._terms

    def items(self):
        return self._terms.items()

    def support(self) -> list[Word]:
        return list(self._terms)

    def __iter__(self) -> Iterator[tuple[Word, GaussianRational]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, w: Word) -> GaussianRational:
        return self._terms.get(tuple(w), ZERO)

    def leading(self) -> tuple[Word, GaussianRational]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        w = next(iter(self._terms))
        return w, self._terms[w]

    @property
    def lm(self) -> Word:
        return self.leading()[0]

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return len(next(iter(self._terms)))

    def is_monic(self) -> bool:
        return bool(self._terms) and self.leading()[1] == ONE

    def monic(self) -> "NcPoly":
        _, c = self.leading()
        if c == ONE:
            return self
        inv = c.inverse()
        return NcPoly._from_dict({w: v * inv for w, v in self._terms.items()})

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            try:
                other = NcPoly.constant(other)
            except TypeError:
                return NotImplemented
        d = dict(self._terms)
        for w, c in other._terms.items():
            v = d.get(w)
            v = c if v is None else v + c
            if v:
                d[w] = v
            else:
                d.pop(w, None)
        return NcPoly._from_dict(d)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._from_dict({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            try:
                other = NcPoly.constant(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "NcPoly":
        c = as_scalar(c)
        if not c:
            return NcPoly()
        return NcPoly._from_dict({w: v * c for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return poly_mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def lmul_word(self, u: Word) -> "NcPoly":
        return NcPoly._from_dict({u + w: c for w, c in self._terms.items()})

    def rmul_word(self, v: Word) -> "NcPoly":
        return NcPoly._from_dict({w + v: c for w, c in self._terms.items()})

    def __pow__(self, k: int):
        result = NcPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"NcPoly({render_poly(self)!r})"

    def render(self, alphabet: Alphabet) -> str:
        return render_poly(self, alphabet)


def poly_mul(f: NcPoly, g: NcPoly) -> NcPoly:
    """Bilinear extension of word concatenation."""
    d: dict = {}
    for u, a in f._terms.items():
        for v, b in g._terms.items():
            w = u + v
            c = a * b
            old = d.get(w)
            if old is not None:
                c = old + c
            if c:
                d[w] = c
            else:
                d.pop(w, None)
    return NcPoly._from_dict(d)


def apply_antihom(f: NcPoly, sigma: Sequence[int] | Mapping[int, int]) -> NcPoly:
    """Reverse every word and relabel its symbols through ``sigma``."""
    d: dict = {}
    for w, c in f.items():
        d[tuple(sigma[s] for s in reversed(w))] = c
    return NcPoly._from_dict(d)


# -- text form ----------------------------------------------------------------


def render_word(w: Word, alphabet: Alphabet | None = None) -> str:
    if not w:
        return "1"
    name = alphabet.name if alphabet is not None else (lambda s: f"x[{s + 1}]")
    parts = []
    k = 0
    while k < len(w):
        r = k
        while r + 1 < len(w) and w[r + 1] == w[k]:
            r += 1
        run = r - k + 1
        parts.append(name(w[k]) if run == 1 else f"{name(w[k])}^{run}")
        k = r + 1
    return "*".join(parts)


def render_poly(f: NcPoly, alphabet: Alphabet | None = None) -> str:
    """Canonical text: descending deglex, ``1*`` suppressed, ``0`` for zero."""
    if not f:
        return "0"
    out = []
    for idx, (w, c) in enumerate(f.items()):
        neg = False
        if not c.im and c.re < 0:
            neg, c = True, -c
        elif not c.re and c.im < 0:
            neg, c = True, -c
        if not w:
            body = render_scalar(c) if (not c.re or not c.im) else f"({render_scalar(c)})"
        else:
            ws = render_word(w, alphabet)
            if c == ONE:
                body = ws
            elif c.re and c.im:
                body = f"({render_scalar(c)})*{ws}"
            else:
                body = f"{render_scalar(c)}*{ws}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<sym>e\[\s*\d+\s*,\s*\d+\s*\]|x\[\s*\d+\s*\])"
    r"|(?P<num>\d+(?:/\d+)?)"
    r"|(?P<i>i)\b"
    r"|(?P<op>[-+*^()])"
    r")"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, toks = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected input at {text[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup
        toks.append((kind, m.group(kind)))
    return toks


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.toks = _tokenize(text)
        self.k = 0
        self.alphabet = alphabet

    def peek(self):
        return self.toks[self.k] if self.k < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.k += 1
        return tok

    def parse(self) -> NcPoly:
        if not self.toks:
            raise ValueError("empty polynomial")
        terms: list[tuple[Word, GaussianRational]] = []
        sign = ONE
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -ONE if val == "-" else ONE
        while True:
            w, c = self.term()
            terms.append((w, sign * c))
            kind, val = self.peek()
            if kind is None:
                break
            if kind == "op" and val in "+-":
                self.take()
                sign = -ONE if val == "-" else ONE
                continue
            raise ValueError(f"unexpected token {val!r}")
        return NcPoly(terms)

    def term(self) -> tuple[Word, GaussianRational]:
        coeff, word = ONE, ()
        while True:
            kind, val = self.take()
            if kind == "num":
                coeff = coeff * parse_scalar(val)
            elif kind == "i":
                coeff = coeff * GaussianRational(0, 1)
            elif kind == "sym":
                s = self.symbol(val)
                rep = 1
                if self.peek() == ("op", "^"):
                    self.take()
                    k2, v2 = self.take()
                    if k2 != "num" or "/" in v2:
                        raise ValueError("exponent must be a non-negative integer")
                    rep = int(v2)
                word = word + (s,) * rep
            elif kind == "op" and val == "(":
                depth_start = self.k
                inner = []
                while self.peek() != ("op", ")"):
                    if self.peek()[0] is None:
                        raise ValueError("unbalanced parenthesis")
                    inner.append(self.take()[1])
                self.take()
                if self.k - 1 == depth_start:
                    raise ValueError("empty parentheses")
                coeff = coeff * parse_scalar("".join(inner))
            else:
                raise ValueError(f"unexpected token {val!r}")
            if self.peek() == ("op", "*"):
                self.take()
                continue
            return word, coeff

    def symbol(self, text: str) -> int:
        inner = text[text.index("[") + 1 : -1]
        if text.startswith("e"):
            i, j = (int(p) for p in inner.split(","))
            return self.alphabet.e(i, j)
        return self.alphabet.x(int(inner))


def parse_poly(text: str, alphabet: Alphabet) -> NcPoly:
    """Parse the polynomial text grammar (``e[i,j]`` or ``x[k]`` symbols)."""
    return _Parser(text, alphabet).parse()
