"""Normal forms, compositions, self-reduction and completion for two-sided
ideals of F<X>, plus normal-word enumeration and growth analysis.

Everything here works over deglex.  A :class:`RewriteSystem` is a set of
monic polynomials keyed by leading word; it is mutable while a completion is
running and is treated as frozen afterwards.
"""

from __future__ import annotations

import heapq
import random
from collections import Counter
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Sequence

from .arith import ONE, as_scalar
from .freealg import Alphabet, NcPoly, Word, deglex_key, parse_poly, render_poly

__all__ = [
    "RewriteSystem",
    "NormalWordReport",
    "DegreeBoundExceeded",
    "UnitIdeal",
    "normal_form",
    "compositions",
    "overlaps",
    "self_reduce",
    "complete",
    "normal_words",
    "ideal_contains",
    "ideals_equal",
    "is_closed",
    "is_factor",
]


class UnitIdeal(Exception):
    """A nonzero constant turned up: the ideal is the whole algebra."""


class DegreeBoundExceeded(Exception):
    def __init__(self, partial: "RewriteSystem", composition: NcPoly, degree: int, bound: int):
        super().__init__(
            f"composition of degree {degree} does not reduce to zero and exceeds the bound {bound}"
        )
        self.partial = partial
        self.composition = composition
        self.degree = degree
        self.bound = bound


def is_factor(small: Word, big: Word) -> bool:
    """True if ``small`` occurs as a contiguous factor of ``big``."""
    ls, lb = len(small), len(big)
    if ls > lb:
        return False
    if ls == 0:
        return True
    first = small[0]
    for p in range(lb - ls + 1):
        if big[p] == first and big[p : p + ls] == small:
            return True
    return False


def _max_key(w: Word):
    # heapq is a min-heap; this key makes the deglex-greatest word pop first
    return (-len(w), tuple(-s for s in w))


class RewriteSystem:
    """Monic polynomials indexed by their (pairwise distinct) leading words."""

    def __init__(self, elements: Iterable[NcPoly] = (), self_reduced: bool = False):
        self._rules: dict = {}
        self._lengths: Counter = Counter()
        self._sorted_lengths: list[int] = []
        self.self_reduced = self_reduced
        for g in elements:
            self.add(g)

    # -- mutation (used while completing) -------------------------------------

    def add(self, g: NcPoly) -> None:
        if not g:
            raise ValueError("cannot add the zero polynomial")
        g = g.monic()
        lm = g.lm
        if lm in self._rules:
            raise ValueError(f"leading word {lm} already present")
        tails = tuple((w, -c) for w, c in g.items() if w != lm)
        self._rules[lm] = (g, tails)
        self._lengths[len(lm)] += 1
        if self._lengths[len(lm)] == 1:
            self._sorted_lengths = sorted(self._lengths)

    def remove(self, lm: Word) -> NcPoly:
        g, _ = self._rules.pop(lm)
        self._lengths[len(lm)] -= 1
        if not self._lengths[len(lm)]:
            del self._lengths[len(lm)]
            self._sorted_lengths = sorted(self._lengths)
        return g

    def replace(self, g: NcPoly) -> None:
        self.remove(g.lm)
        self.add(g)

    # -- inspection -------------------------------------------------------------

    @property
    def elements(self) -> list[NcPoly]:
        """Elements in ascending order of leading word."""
        return [self._rules[lm][0] for lm in sorted(self._rules, key=deglex_key)]

    @property
    def leading_words(self) -> list[Word]:
        return sorted(self._rules, key=deglex_key)

    def get(self, lm: Word) -> NcPoly | None:
        r = self._rules.get(lm)
        return None if r is None else r[0]

    def __contains__(self, lm: Word) -> bool:
        return lm in self._rules

    def __len__(self) -> int:
        return len(self._rules)

    def __iter__(self):
        return iter(self.elements)

    def max_lm_length(self) -> int:
        return max(self._lengths) if self._lengths else 0

    def copy(self) -> "RewriteSystem":
        out = RewriteSystem()
        out._rules = dict(self._rules)
        out._lengths = Counter(self._lengths)
        out._sorted_lengths = list(self._sorted_lengths)
        out.self_reduced = self.self_reduced
        return out

    def find_reducer(self, w: Word):
        """(lm, position) of the smallest leading word dividing ``w``, leftmost."""
        rules = self._rules
        n = len(w)
        for L in self._sorted_lengths:
            if L > n:
                return None
            best = None
            best_pos = -1
            for p in range(n - L + 1):
                sub = w[p : p + L]
                if sub in rules and (best is None or sub < best):
                    best, best_pos = sub, p
            if best is not None:
                return best, best_pos
        return None

    def is_normal(self, w: Word) -> bool:
        return self.find_reducer(w) is None

    # -- serialisation ----------------------------------------------------------

    def to_text(self, alphabet: Alphabet) -> str:
        return "".join(render_poly(g, alphabet) + "\n" for g in self.elements)

    def to_json(self, alphabet: Alphabet) -> dict:
        return {
            "alphabet": alphabet.to_json(),
            "order": "deglex",
            "elements": [render_poly(g, alphabet) for g in self.elements],
        }

    @classmethod
    def from_text(cls, text: str, alphabet: Alphabet) -> "RewriteSystem":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        return cls((parse_poly(ln, alphabet) for ln in lines), self_reduced=True)

    @classmethod
    def from_json(cls, data: dict) -> tuple["RewriteSystem", Alphabet]:
        alphabet = Alphabet.from_json(data["alphabet"])
        if data.get("order", "deglex") != "deglex":
            raise ValueError("only the deglex order is supported")
        gens = (parse_poly(s, alphabet) for s in data["elements"])
        return cls(gens, self_reduced=True), alphabet

    def __eq__(self, other):
        if not isinstance(other, RewriteSystem):
            return NotImplemented
        return {lm: r[0] for lm, r in self._rules.items()} == {
            lm: r[0] for lm, r in other._rules.items()
        }

    def __repr__(self):
        return f"RewriteSystem({len(self)} elements)"


def _as_system(G) -> RewriteSystem:
    if isinstance(G, RewriteSystem):
        return G
    return RewriteSystem(G)


# -- normal form ------------------------------------------------------------------


def normal_form(f: NcPoly, G, certificate: list | None = None, rng: random.Random | None = None) -> NcPoly:
    """Reduce ``f`` until no support word contains a leading word of ``G``.

    The default strategy always rewrites the deglex-greatest reducible word
    with the smallest applicable leading word at its leftmost occurrence.
    Passing ``rng`` switches to uniformly random choices of word, rule and
    occurrence, which is only useful for testing strategy independence.

    If ``certificate`` is a list, it receives tuples ``(c, u, g, v)`` such
    that ``f - NF(f) = sum(c * u*g*v)``.
    """
    G = _as_system(G)
    if rng is not None:
        return _normal_form_random(f, G, certificate, rng)
    rules = G._rules
    if not rules or not f:
        return f
    coeffs = dict(f.terms)
    heap = [(_max_key(w), w) for w in coeffs]
    heapq.heapify(heap)
    result: dict = {}
    find = G.find_reducer
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        _, w = pop(heap)
        c = coeffs.pop(w, None)
        if c is None:
            continue
        hit = find(w)
        if hit is None:
            result[w] = c
            continue
        lm, p = hit
        g, tails = rules[lm]
        u, v = w[:p], w[p + len(lm) :]
        if certificate is not None:
            certificate.append((c, u, g, v))
        for t, nc in tails:
            word = u + t + v
            add = c * nc
            old = coeffs.get(word)
            if old is None:
                coeffs[word] = add
                push(heap, (_max_key(word), word))
            else:
                s = old + add
                if s:
                    coeffs[word] = s
                else:
                    del coeffs[word]
    return NcPoly._from_dict(result)


def _normal_form_random(f: NcPoly, G: RewriteSystem, certificate, rng: random.Random) -> NcPoly:
    rules = G._rules
    lms = list(rules)
    coeffs = dict(f.terms)
    while True:
        options = []
        for w in coeffs:
            for lm in lms:
                L = len(lm)
                for p in range(len(w) - L + 1):
                    if w[p : p + L] == lm:
                        options.append((w, lm, p))
        if not options:
            return NcPoly(coeffs)
        w, lm, p = rng.choice(options)
        c = coeffs.pop(w)
        g, tails = rules[lm]
        u, v = w[:p], w[p + len(lm) :]
        if certificate is not None:
            certificate.append((c, u, g, v))
        for t, nc in tails:
            word = u + t + v
            s = coeffs.get(word, 0) + c * nc
            if s:
                coeffs[word] = as_scalar(s)
            else:
                coeffs.pop(word, None)


def verify_certificate(f: NcPoly, nf: NcPoly, certificate) -> bool:
    """Expand ``sum c*u*g*v`` and compare it with ``f - nf``."""
    total: dict = {}
    for c, u, g, v in certificate:
        for w, a in g.items():
            word = u + w + v
            total[word] = total.get(word, 0) + c * a
    return NcPoly(total) == f - nf


# -- compositions -------------------------------------------------------------------


def overlaps(a: Word, b: Word) -> list[int]:
    """Lengths k with a[-k:] == b[:k] and 0 < k < min(len(a), len(b))."""
    out = []
    for k in range(1, min(len(a), len(b))):
        if a[-k:] == b[:k]:
            out.append(k)
    return out


def compositions(g: NcPoly, h: NcPoly) -> list[NcPoly]:
    """All g*u - v*h with LM(g)*u = v*LM(h) for a proper overlap.

    Zero results are kept so the list has one entry per overlap.
    """
    g, h = g.monic(), h.monic()
    a, b = g.lm, h.lm
    out = []
    for k in overlaps(a, b):
        u, v = b[k:], a[:-k]
        out.append(g.rmul_word(u) - h.lmul_word(v))
    return out


# -- self-reduction -------------------------------------------------------------------


def _insert(R: RewriteSystem, new: Iterable[NcPoly], on_add=None, on_remove=None) -> bool:
    """Add ``new`` to the (self-reduced) system, keeping LMs pairwise non-dividing.

    Elements displaced because the new leading word divides theirs are
    reduced again and re-queued.  Returns True if anything changed.
    """
    queue = [(deglex_key(p.lm), k, p) for k, p in enumerate(x for x in new if x)]
    heapq.heapify(queue)
    counter = len(queue)
    changed = False
    while queue:
        _, _, p = heapq.heappop(queue)
        p = normal_form(p, R)
        if not p:
            continue
        lm, c = p.leading()
        if not lm:
            raise UnitIdeal("the ideal contains a nonzero constant")
        p = p.monic()
        displaced = [q for q in R._rules if len(q) >= len(lm) and is_factor(lm, q)]
        for q in displaced:
            old = R.remove(q)
            if on_remove:
                on_remove(q)
            heapq.heappush(queue, (deglex_key(old.lm), counter, old))
            counter += 1
        R.add(p)
        if on_add:
            on_add(p)
        changed = True
    return changed


def _tail_reduce(R: RewriteSystem) -> list[Word]:
    """Bring every tail into normal form; returns the LMs whose element changed."""
    changed = []
    for lm in R.leading_words:
        g = R.get(lm)
        tail = NcPoly._from_dict({w: c for w, c in g.items() if w != lm})
        red = normal_form(tail, R)
        if red != tail:
            R.replace(red + NcPoly.monomial(lm))
            changed.append(lm)
    return changed


def self_reduce(G: Iterable[NcPoly]) -> RewriteSystem:
    """Monic, inter-reduced generating set of the same ideal."""
    R = RewriteSystem()
    _insert(R, list(G))
    _tail_reduce(R)
    R.self_reduced = True
    return R


# -- completion --------------------------------------------------------------------------


class _OverlapIndex:
    """Prefix and suffix tables over the leading words of a system."""

    def __init__(self):
        self.by_prefix: dict = {}
        self.by_suffix: dict = {}

    def add(self, lm: Word) -> None:
        for k in range(1, len(lm)):
            self.by_prefix.setdefault(lm[:k], set()).add(lm)
            self.by_suffix.setdefault(lm[-k:], set()).add(lm)

    def remove(self, lm: Word) -> None:
        for k in range(1, len(lm)):
            for table, key in ((self.by_prefix, lm[:k]), (self.by_suffix, lm[-k:])):
                s = table.get(key)
                if s is not None:
                    s.discard(lm)
                    if not s:
                        del table[key]

    def pairs_with(self, lm: Word):
        """Yield (left lm, right lm, k) for every overlap involving ``lm``."""
        for k in range(1, len(lm)):
            # lm on the left
            for other in self.by_prefix.get(lm[-k:], ()):
                if k < len(other):
                    yield lm, other, k
            # lm on the right (self-overlaps were already produced above)
            for other in self.by_suffix.get(lm[:k], ()):
                if k < len(other) and other != lm:
                    yield other, lm, k


@dataclass
class CompletionStats:
    batches: int = 0
    compositions: int = 0
    added: int = 0
    max_size: int = 0
    degrees: list = field(default_factory=list)


def complete(
    gens: Sequence[NcPoly],
    max_degree: int | None = None,
    progress=None,
    stats: CompletionStats | None = None,
) -> RewriteSystem:
    """Run completion until every composition reduces to zero.

    Pending compositions are handled in batches of equal overlap degree,
    smallest first, with full inter-reduction after each batch.  Raises
    :class:`DegreeBoundExceeded` if a composition above ``max_degree``
    survives reduction.
    """
    gens = [g for g in gens if g]
    if max_degree is None:
        max_degree = 3 * max((g.degree for g in gens), default=1)
    if stats is None:
        stats = CompletionStats()

    R = RewriteSystem()
    index = _OverlapIndex()
    pending: list = []
    queued: set = set()

    def enqueue(lm: Word) -> None:
        for a, b, k in index.pairs_with(lm):
            key = (a, b, k)
            if key in queued:
                continue
            queued.add(key)
            w = a + b[k:]
            heapq.heappush(pending, (len(w), w, a, b, k))

    def on_add(p: NcPoly) -> None:
        index.add(p.lm)

    def on_remove(lm: Word) -> None:
        index.remove(lm)

    def insert(polys) -> None:
        before = set(R._rules)
        _insert(R, polys, on_add, on_remove)
        _tail_reduce(R)
        for lm in R.leading_words:
            if lm not in before:
                enqueue(lm)

    insert(gens)
    done: set = set()  # value-level (g, h, k) already reduced to zero or absorbed

    while True:
        while pending and pending[0][0] <= max_degree:
            d = pending[0][0]
            batch = []
            while pending and pending[0][0] == d:
                batch.append(heapq.heappop(pending))
            new = []
            for _, _, a, b, k in batch:
                g, h = R.get(a), R.get(b)
                if g is None or h is None:
                    continue
                c = g.rmul_word(b[k:]) - h.lmul_word(a[:-k])
                done.add((g, h, k))
                stats.compositions += 1
                r = normal_form(c, R)
                if r:
                    new.append(r)
            stats.batches += 1
            if new:
                stats.added += len(new)
                stats.degrees.append(d)
                insert(new)
            stats.max_size = max(stats.max_size, len(R))
            if progress:
                progress(f"degree {d}: {len(batch)} compositions, {len(new)} new, basis size {len(R)}")

        # closure pass over the current elements; only triples not yet seen
        # at the value level need work
        survivors = []
        for a in R.leading_words:
            for b, k in _right_partners(a, index, R):
                g, h = R.get(a), R.get(b)
                if (g, h, k) in done:
                    continue
                c = g.rmul_word(b[k:]) - h.lmul_word(a[:-k])
                stats.compositions += 1
                r = normal_form(c, R)
                if not r:
                    done.add((g, h, k))
                    continue
                deg = len(a) + len(b) - k
                if deg > max_degree:
                    raise DegreeBoundExceeded(R.copy(), c, deg, max_degree)
                survivors.append(r)
        if not survivors:
            break
        insert(survivors)

    R.self_reduced = True
    return R


def _right_partners(a: Word, index: _OverlapIndex, R: RewriteSystem):
    for k in range(1, len(a)):
        for b in sorted(index.by_prefix.get(a[-k:], ()), key=deglex_key):
            if k < len(b) and b in R:
                yield b, k


def is_closed(R: RewriteSystem) -> list[NcPoly]:
    """Exhaustive composition check; returns the nonzero normal forms found."""
    bad = []
    elems = R.elements
    for g in elems:
        for h in elems:
            for c in compositions(g, h):
                r = normal_form(c, R)
                if r:
                    bad.append(r)
    return bad


def ideal_contains(R: RewriteSystem, polys: Iterable[NcPoly]) -> bool:
    """Membership of every polynomial, given a Gröbner basis ``R``."""
    return all(not normal_form(p, R) for p in polys)


def ideals_equal(gens_a: Sequence[NcPoly], gens_b: Sequence[NcPoly], max_degree: int | None = None) -> bool:
    """Mutual normal-form vanishing after completing both sides."""
    ra = complete(gens_a, max_degree)
    rb = complete(gens_b, max_degree)
    return ideal_contains(ra, gens_b) and ideal_contains(rb, gens_a)


# -- normal words ------------------------------------------------------------------------


@dataclass
class NormalWordReport:
    finite: bool
    counts: list[int]
    basis: list[Word] | None = None
    cycle: list[Word] | None = None

    @property
    def total(self) -> int | None:
        return sum(self.counts) if self.finite else None


def _avoidance_graph(obstructions: set, symbols: Sequence[int], L: int):
    """Vertices: normal words of length L-1; edge u -> (u+s)[1:] if u+s is normal."""
    level = [()]
    for _ in range(L - 1):
        level = [w + (s,) for w in level for s in symbols if _extends_normal(w, s, obstructions, L)]
    graph = {}
    for u in level:
        succ = []
        for s in symbols:
            if _extends_normal(u, s, obstructions, L):
                succ.append((u + (s,))[1:] if L > 1 else ())
        graph[u] = succ
    return graph


def _extends_normal(w: Word, s: int, obstructions: set, L: int) -> bool:
    # w is normal, so only suffixes of w+s need checking
    x = w + (s,)
    n = len(x)
    for k in range(1, min(L, n) + 1):
        if x[n - k :] in obstructions:
            return False
    return True


def _find_cycle(graph: dict) -> list | None:
    # TopologicalSorter expects predecessor sets; orientation does not matter
    # for cycle existence
    ts = TopologicalSorter({v: set(succ) for v, succ in graph.items()})
    try:
        ts.prepare()
    except CycleError as exc:
        return list(exc.args[1])
    return None


def normal_words(G, alphabet_size: int, max_degree: int = 12) -> NormalWordReport:
    """Count (and, when finitely many, list) the words avoiding every LM."""
    G = _as_system(G)
    obstructions = set(G._rules)
    symbols = list(range(alphabet_size))
    if () in obstructions:
        return NormalWordReport(True, [], [])
    L = max((len(w) for w in obstructions), default=1)
    graph = _avoidance_graph(obstructions, symbols, max(L, 1))
    cycle = _find_cycle(graph)
    finite = cycle is None

    counts = []
    basis: list[Word] = []
    level = [()]
    d = 0
    while level:
        counts.append(len(level))
        if finite:
            basis.extend(level)
        elif d >= max_degree:
            break
        level = [w + (s,) for w in level for s in symbols if _extends_normal(w, s, obstructions, L)]
        d += 1
    return NormalWordReport(finite, counts, basis if finite else None, cycle)
