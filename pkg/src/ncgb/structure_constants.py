"""Closed-form products of basis words in the matrix envelope.

Each product of two basis words is given by an explicit Kronecker-delta
expression.  Nothing here calls into the rewriting engine: the only inputs
are the index patterns of the two words, and the output is a dict mapping
basis words to coefficients.  Comparing that dict with the engine's normal
form of the concatenation is the point of the module.

Shapes (see :mod:`ncgb.reference`): gen e_ij, down e_i1 e_1j, up e_1i e_j1,
wedge e_1i e_11 e_j1, cube e_11^2 e_1j, quartic e_11^4, unit 1.
"""

from __future__ import annotations

from gmpy2 import mpq

from .arith import as_scalar
from .freealg import Alphabet, NcPoly, Word
from .reference import basis_shape

__all__ = ["Uncovered", "ERRATA", "oracle_product", "oracle_poly"]


class Uncovered(Exception):
    """No closed form is available for this pair of words."""


H = mpq(1, 2)


def d(a, b) -> int:
    return 1 if a == b else 0


def dh(a, b) -> int:
    return 0 if a == b else 1


class _Acc:
    """Word -> rational accumulator; words are written as lists of (row, col)."""

    def __init__(self, n: int):
        self.e = Alphabet.matrix(n).e
        self.terms: dict = {}

    def add(self, c, *pairs) -> None:
        if not c:
            return
        w = tuple(self.e(*p) for p in pairs)
        self.terms[w] = self.terms.get(w, 0) + mpq(c)


E11 = (1, 1)


# -- gen . x -----------------------------------------------------------------------------


def _gen_gen(A, i, j, k, l):
    A.add(d(j, k) * d(i, l) * (d(i, 1) + dh(i, 1) * dh(j, 1)), (1, j), (j, 1))
    A.add(d(j, k) * d(i, l) * (d(j, 1) * dh(i, 1) + dh(i, 1) * dh(j, 1)), (i, 1), (1, i))
    A.add(-d(j, k) * d(i, l) * dh(i, 1) * dh(j, 1), E11, E11)
    A.add(d(j, k) * dh(i, l), (i, 1), (1, l))
    A.add(dh(j, k) * d(i, l), (1, j), (k, 1))


def _gen_down(A, i, j, k, l):
    # e_ij . e_k1 e_1l
    c3 = d(j, k) * d(l, 1) * (d(l, j) + H * dh(l, j)) + H * dh(j, k) * d(k, l) * d(j, 1)
    A.add(d(i, 1) * c3, E11, E11, E11)
    A.add(d(i, 1) * dh(j, k) * d(k, l) * dh(j, 1), E11, E11, (1, j))
    c2 = d(j, k) * (2 * d(l, j) * dh(l, 1) + dh(l, j) * (d(j, 1) + dh(j, 1) * dh(l, 1)))
    A.add(d(i, 1) * c2, E11, E11, (1, l))
    A.add(d(i, 1) * H * (d(l, 1) * d(j, k) * dh(l, j) - dh(j, k) * d(k, l) * d(j, 1)), E11)
    A.add(-d(i, 1) * (d(j, k) * d(l, j) * dh(l, 1) + dh(j, k) * d(k, l) * dh(j, 1)), (1, j))
    A.add(dh(i, 1) * d(j, k), (1, l), E11, (i, 1))
    A.add(dh(i, 1) * d(j, k), (i, l))


def _down_gen(A, l, k, j, i):
    # e_l1 e_1k . e_ji
    c3 = d(j, k) * d(l, 1) * (d(l, j) + H * dh(l, j)) + H * dh(j, k) * d(k, l) * d(j, 1)
    A.add(d(i, 1) * c3, E11, E11, E11)
    A.add(d(i, 1) * dh(j, k) * d(k, l) * dh(j, 1), E11, E11, (j, 1))
    c2 = d(j, k) * (2 * d(l, j) * dh(l, 1) + dh(l, j) * (d(j, 1) + dh(j, 1) * dh(l, 1)))
    A.add(d(i, 1) * c2, E11, E11, (l, 1))
    A.add(d(i, 1) * c2, (l, 1))
    A.add(d(i, 1) * H * (d(l, 1) * d(j, k) * dh(l, j) - dh(j, k) * d(k, l) * d(j, 1)), E11)
    A.add(-d(i, 1) * d(j, k) * d(l, j) * dh(l, 1), (j, 1))
    A.add(dh(i, 1) * d(j, k) * d(l, 1), E11, E11, (1, i))
    A.add(dh(i, 1) * d(j, k) * dh(l, 1), (1, i), E11, (l, 1))
    A.add(dh(i, 1) * d(j, k) * dh(l, 1), (l, i))


def _gen_up(A, i, j, k, l):
    # e_ij . e_1k e_l1, (k,l) != (1,1)
    A.add(d(j, 1) * H * (d(i, k) * d(l, 1) * dh(i, 1) + dh(i, k) * dh(l, 1) * d(k, l) * d(i, 1)), E11, E11, E11)
    A.add(d(j, 1) * dh(i, k) * d(k, l) * dh(i, 1) * dh(l, 1), E11, E11, (i, 1))
    A.add(d(j, 1) * d(i, k) * (d(i, 1) + dh(i, 1) * dh(l, 1) * (2 * d(i, l) + dh(i, l))), E11, E11, (l, 1))
    A.add(d(j, 1) * H * (dh(i, k) * dh(l, 1) * d(k, l) * d(i, 1) - d(i, k) * d(l, 1) * dh(i, 1)), E11)
    A.add(d(j, 1) * dh(i, 1) * dh(l, 1) * (d(i, k) * d(i, l) + dh(i, k) * d(k, l)), (i, 1))
    A.add(dh(j, 1) * d(i, k) * d(l, 1), E11, E11, (1, j))
    A.add(-dh(j, 1) * d(i, k) * d(l, 1), (1, j))
    A.add(dh(j, 1) * d(i, k) * dh(l, 1), (1, j), E11, (l, 1))


def _up_gen(A, l, k, j, i):
    # e_1l e_k1 . e_ji, (k,l) != (1,1)
    A.add(d(j, 1) * H * (d(i, k) * d(l, 1) * dh(i, 1) + dh(i, k) * dh(l, 1) * d(k, l) * d(i, 1)), E11, E11, E11)
    A.add(d(j, 1) * dh(i, k) * d(k, l) * dh(i, 1) * dh(l, 1), E11, E11, (1, i))
    c = d(j, 1) * d(i, k) * (d(i, 1) + dh(i, 1) * dh(l, 1) * (2 * d(i, l) + dh(i, l)))
    A.add(c, E11, E11, (1, l))
    A.add(-c, (1, l))
    A.add(d(j, 1) * H * (dh(i, k) * dh(l, 1) * d(k, l) * d(i, 1) - d(i, k) * d(l, 1) * dh(i, 1)), E11)
    A.add(d(j, 1) * dh(i, 1) * dh(l, 1) * d(i, k) * d(i, l), (1, i))
    A.add(dh(j, 1) * d(i, k) * d(l, 1), E11, E11, (j, 1))
    A.add(dh(j, 1) * d(i, k) * dh(l, 1), (1, l), E11, (j, 1))


def _gen_wedge(A, i, j, k, l):
    # e_ij . e_1k e_11 e_l1, l != 1
    A.add(-d(i, k), (1, j), (l, 1))
    A.add(d(i, k) * dh(j, 1) * d(j, l) * H, E11, E11, E11, E11)
    A.add(d(i, k) * dh(j, 1) * d(j, l) * H, E11, E11)


def _gen_cube(A, i, j, k):
    # e_ij . e_11^2 e_1k
    A.add(d(j, 1) * d(i, 1) * d(k, 1), E11, E11, E11, E11)
    A.add(d(j, 1) * d(i, 1) * dh(k, 1), E11, (1, k))
    A.add(d(j, 1) * dh(i, 1) * d(i, k) * H, E11, E11, E11, E11)
    A.add(-d(j, 1) * dh(i, 1) * d(i, k) * H, E11, E11)
    A.add(d(j, 1) * dh(i, 1), (i, 1), (1, k))
    A.add(-dh(j, 1) * d(i, 1) * d(k, 1), (1, j), E11)


def _gen_quartic(A, i, j):
    # e_ij . e_11^4
    A.add(d(j, 1) * d(i, 1), E11)
    A.add(d(j, 1) * dh(i, 1), E11, E11, (i, 1))
    A.add(d(j, 1) * dh(i, 1), (i, 1))
    A.add(-dh(j, 1) * d(i, 1), E11, E11, (1, j))
    A.add(dh(j, 1) * d(i, 1), (1, j))


# -- down . x ----------------------------------------------------------------------------


def _down_down(A, i, j, k, l):
    # e_i1 e_1j . e_k1 e_1l
    c = d(j, k) * d(l, 1) * d(i, 1) * (d(l, j) + H * dh(l, j))
    A.add(c, E11, E11, E11, E11)
    A.add(d(j, k) * d(l, 1) * H * dh(l, j) * d(i, 1), E11, E11)
    b = H * (
        d(j, k) * dh(i, 1) * d(i, l) * (2 * d(l, j) * dh(l, 1) + dh(l, j) * (d(j, 1) + dh(j, 1) * dh(l, 1)))
        + dh(j, k) * d(k, l) * (dh(j, 1) * dh(i, 1) * d(i, j) + d(j, 1) * d(i, 1))
    )
    A.add(b, E11, E11, E11, E11)
    A.add(-b, E11, E11)
    c2 = d(j, k) * (d(l, 1) * dh(i, 1) + d(l, j) * dh(l, 1) + dh(l, j) * (d(j, 1) + dh(j, 1) * dh(l, 1)))
    A.add(c2, (i, 1), (1, l))


def _down_up(A, i, j, k, l):
    # e_i1 e_1j . e_1k e_l1, (k,l) != (1,1)
    c = d(j, 1) * dh(k, 1) * d(k, l) * H
    A.add(c * d(i, 1), E11, E11, E11, E11)
    A.add(c * d(i, 1), E11, E11)
    A.add(c * 2 * dh(i, 1), (i, 1), E11)
    A.add(-d(k, 1) * (d(j, 1) * d(i, 1) + dh(j, 1) * dh(l, 1) * d(i, j)), E11, (l, 1))


def _down_wedge(A, i, j, k, l):
    # e_i1 e_1j . e_1k e_11 e_l1, l != 1
    A.add(-d(k, 1) * (d(i, 1) * d(j, 1) + dh(j, 1) * d(i, j)), E11, E11, (l, 1))


def _down_cube(A, i, j, k):
    # e_i1 e_1j . e_11^2 e_1k
    A.add(d(j, 1) * d(k, 1) * d(i, 1), E11)
    A.add(d(j, 1) * d(k, 1) * dh(i, 1), E11, E11, (i, 1))
    A.add(d(j, 1) * d(k, 1) * dh(i, 1), (i, 1))
    A.add(d(j, 1) * dh(k, 1) * d(i, 1), E11, E11, (1, k))
    A.add(d(j, 1) * dh(k, 1) * dh(i, 1), (1, k), E11, (i, 1))
    A.add(d(j, 1) * dh(k, 1) * dh(i, 1), (i, k))
    A.add(-dh(j, 1) * d(k, 1) * d(i, j) * H, E11, E11, E11)
    A.add(dh(j, 1) * d(k, 1) * d(i, j) * H, E11)


def _down_quartic(A, i, j):
    # e_i1 e_1j . e_11^4
    A.add(d(j, 1), (i, 1), E11)
    A.add(dh(j, 1) * d(j, i) * H, E11, E11)
    A.add(-dh(j, 1) * d(j, i) * H, E11, E11, E11, E11)


# -- up . x ------------------------------------------------------------------------------


def _up_up(A, i, j, k, l):
    # e_1i e_j1 . e_1k e_l1, (i,j) != (1,1), (k,l) != (1,1)
    a = d(i, 1) * d(j, k) * d(l, 1) * dh(j, 1)
    A.add(H * a, E11, E11, E11, E11)
    A.add(-H * a, E11, E11)
    b = d(j, k) * dh(i, 1) * d(i, l) * (d(j, 1) + dh(j, 1) * dh(l, 1) * (2 * d(j, l) + dh(j, l))) + dh(j, k) * dh(
        l, 1
    ) * d(k, l) * (dh(j, 1) * dh(j, l) * d(i, j) + d(i, 1) * d(j, 1))
    A.add(H * b, E11, E11, E11, E11)
    A.add(H * b, E11, E11)
    A.add(-d(j, k) * (d(j, 1) + dh(j, 1) * (d(l, 1) * dh(i, 1) + dh(l, 1))), (1, i), (l, 1))


def _up_cube(A, i, j, k):
    # e_1i e_j1 . e_11^2 e_1k
    A.add(-d(j, 1) * dh(i, 1) * d(k, 1) + dh(j, 1) * d(i, j) * d(k, i), E11, E11, (1, i))
    A.add(d(j, 1) * d(k, 1) * dh(i, 1), (1, i))
    A.add(d(i, j) * dh(j, 1) * H * d(k, 1), E11, E11, E11)
    A.add(d(i, j) * dh(j, 1) * H * d(k, 1), E11)
    A.add(d(i, j) * dh(j, 1) * dh(k, i) * dh(k, 1), E11, E11, (1, k))


def _up_quartic(A, i, j):
    # e_1i e_j1 . e_11^4
    A.add(d(j, 1), (1, i), E11)
    A.add(dh(j, 1) * dh(i, 1) * d(i, j) * H, E11, E11, E11, E11)
    A.add(dh(j, 1) * dh(i, 1) * d(i, j) * H, E11, E11)


def _up_wedge(A, i, j, k, l):
    # e_1i e_j1 . e_1k e_11 e_l1, l != 1
    A.add(-d(j, k), (1, i), E11, (l, 1))


# -- cube . x ------------------------------------------------------------------------------


def _cube_gen(A, k, i, j):
    # e_11^2 e_1k . e_ij
    A.add(d(k, i) * d(j, 1) * (d(k, 1) + H * dh(k, 1)), E11, E11, E11, E11)
    A.add(d(k, i) * d(j, 1) * H * dh(k, 1), E11, E11)
    A.add(d(k, i) * dh(j, 1), E11, (1, j))
    A.add(-dh(k, i) * d(j, 1) * d(k, 1), E11, (i, 1))


def _cube_down(A, k, i, j, errata=False):
    # e_11^2 e_1k . e_i1 e_1j
    A.add(d(k, i) * d(j, 1) * (d(k, 1) + H * dh(k, 1)) + H * dh(k, i) * d(k, 1) * dh(i, 1) * d(i, j), E11)
    A.add(H * (d(k, i) * dh(k, 1) * d(j, 1) - dh(k, i) * d(k, 1) * dh(i, 1) * d(i, j)), E11, E11, E11)
    last = dh(k, 1) * dh(j, 1)
    if errata:
        # for k != 1, k != i the middle factor e_1k e_i1 e_1j already vanishes
        last *= d(k, i)
    A.add(d(k, 1) * (d(k, i) * dh(j, 1) - dh(k, i) * d(i, 1)) + last, E11, E11, (1, j))


def _cube_up(A, k, i, j):
    # e_11^2 e_1k . e_1i e_j1, (i,j) != (1,1)
    A.add(-d(k, 1) * d(i, 1), E11, E11, (j, 1))
    A.add(d(k, 1) * dh(i, 1) * d(i, j) * H, E11, E11, E11)
    A.add(d(k, 1) * dh(i, 1) * d(i, j) * H, E11)


def _cube_wedge(A, k, j, l):
    # e_11^2 e_1k . e_1j e_11 e_l1, l != 1
    A.add(d(k, 1) * d(j, 1), E11, (l, 1))


def _cube_cube(A, k, j):
    # e_11^2 e_1k . e_11^2 e_1j
    A.add(d(k, 1), E11, (1, j))


def _cube_quartic(A, j):
    # e_11^2 e_1j . e_11^4
    A.add(d(j, 1), E11, E11, E11)


# -- wedge . x ------------------------------------------------------------------------------


def _wedge_gen(A, k, l, i, j):
    # e_1k e_11 e_l1 . e_ij, l != 1
    A.add(d(j, l) * H * (d(k, 1) * dh(j, 1) * d(i, 1) + dh(i, 1) * d(i, k)), E11, E11, E11, E11)
    A.add(d(j, l) * H * (dh(i, 1) * d(i, k) - d(k, 1) * dh(j, 1) * d(i, 1)), E11, E11)
    A.add(-d(j, l) * dh(i, 1) * d(k, 1), E11, (i, 1))
    A.add(-d(j, l) * dh(k, 1), (1, k), (i, 1))


def _wedge_up(A, k, l, i, j):
    # e_1k e_11 e_l1 . e_1i e_j1, l != 1, (i,j) != (1,1)
    A.add(d(i, l) * d(k, 1) * d(j, 1) * H, E11)
    A.add(-d(i, l) * d(k, 1) * d(j, 1) * H, E11, E11, E11)
    A.add(-d(i, l) * d(k, 1) * dh(j, 1), E11, E11, (j, 1))
    A.add(-d(i, l) * dh(k, 1) * dh(j, 1), (1, k), E11, (j, 1))
    A.add(-d(i, l) * dh(k, 1) * d(j, 1), E11, E11, (1, k))
    A.add(d(i, l) * dh(k, 1) * d(j, 1), (1, k))


def _wedge_wedge(A, i, j, k, l):
    # e_1i e_11 e_j1 . e_1k e_11 e_l1, j != 1, l != 1
    A.add(d(j, k), (1, i), (l, 1))
    A.add(-d(j, k) * dh(i, 1) * d(i, l) * H, E11, E11, E11, E11)
    A.add(-d(j, k) * dh(i, 1) * d(i, l) * H, E11, E11)


# -- quartic . x ----------------------------------------------------------------------------


def _quartic_gen(A, i, j, errata=False):
    A.add(d(i, 1) * d(j, 1), E11)
    A.add(d(i, 1) * dh(j, 1), E11, E11, (1, j))
    # the literal form has e_11^2 e_j1 here, which the delta turns into e_11^3;
    # e_11^4 e_i1 = -e_11^2 e_i1 needs the row index i instead
    A.add(-dh(i, 1) * d(j, 1), E11, E11, (i, 1) if errata else (j, 1))


def _quartic_up(A, i, j):
    # e_11^4 . e_1i e_j1, (i,j) != (1,1)
    A.add(d(i, 1), E11, (j, 1))
    A.add(dh(i, 1) * dh(j, 1) * d(i, j) * H, E11, E11, E11, E11)
    A.add(dh(i, 1) * dh(j, 1) * d(i, j) * H, E11, E11)


def _quartic_down(A, i, j):
    # e_11^4 . e_i1 e_1j
    A.add(d(i, 1), E11, (1, j))
    A.add(dh(i, 1) * d(i, j) * H, E11, E11)
    A.add(-dh(i, 1) * d(i, j) * H, E11, E11, E11, E11)


def _quartic_cube(A, j):
    A.add(1, E11, E11, (1, j))


def _quartic_wedge(A, i, j):
    # e_11^4 . e_1i e_11 e_j1, j != 1
    A.add(d(i, 1), E11, E11, (j, 1))


def _quartic_quartic(A):
    A.add(1, E11, E11, E11, E11)


# -- dispatch ---------------------------------------------------------------------------------


def _eta_word(n: int, w: Word) -> Word:
    return tuple((s % n) * n + s // n for s in reversed(w))


ERRATA = {
    "quartic.gen": "e_11^4 . e_ij: last term is -(1-d_i1) d_j1 e_11^2 e_i1 (literal form has e_j1)",
    "cube.down": "e_11^2 e_1k . e_i1 e_1j: the (1-d_k1)(1-d_j1) coefficient of e_11^2 e_1j needs a factor d_ki",
}


def oracle_product(n: int, u: Word, v: Word, errata: bool = False) -> dict:
    """Closed-form coefficients of u*v, as {basis word: rational}.

    The formulas are literal transcriptions.  ``errata=True`` applies the
    two corrections listed in :data:`ERRATA`.  Raises :class:`Uncovered`
    when either word is not in the explicit basis or the pair has no
    formula.
    """
    su, sv = basis_shape(n, u), basis_shape(n, v)
    if su is None or sv is None:
        raise Uncovered(f"not a basis word: {u if su is None else v}")
    (ku, iu), (kv, iv) = su, sv
    A = _Acc(n)
    if ku == "unit":
        A.add(1, *_pairs(n, v))
    elif kv == "unit":
        A.add(1, *_pairs(n, u))
    elif ku == "gen":
        i, j = iu
        if kv == "gen":
            _gen_gen(A, i, j, *iv)
        elif kv == "down":
            _gen_down(A, i, j, *iv)
        elif kv == "up":
            _gen_up(A, i, j, *iv)
        elif kv == "wedge":
            _gen_wedge(A, i, j, *iv)
        elif kv == "cube":
            _gen_cube(A, i, j, *iv)
        elif kv == "quartic":
            _gen_quartic(A, i, j)
    elif ku == "down":
        i, j = iu
        if kv == "gen":
            r, c = iv
            _down_gen(A, i, j, r, c)
        elif kv == "down":
            _down_down(A, i, j, *iv)
        elif kv == "up":
            _down_up(A, i, j, *iv)
        elif kv == "wedge":
            _down_wedge(A, i, j, *iv)
        elif kv == "cube":
            _down_cube(A, i, j, *iv)
        elif kv == "quartic":
            _down_quartic(A, i, j)
    elif ku == "up":
        i, j = iu
        if kv == "gen":
            r, c = iv
            _up_gen(A, i, j, r, c)
        elif kv == "up":
            _up_up(A, i, j, *iv)
        elif kv == "cube":
            _up_cube(A, i, j, *iv)
        elif kv == "quartic":
            _up_quartic(A, i, j)
        elif kv == "wedge":
            _up_wedge(A, i, j, *iv)
        elif kv == "down":
            return _via_eta(n, u, v, errata)
    elif ku == "cube":
        (k,) = iu
        if kv == "gen":
            _cube_gen(A, k, *iv)
        elif kv == "down":
            _cube_down(A, k, *iv, errata=errata)
        elif kv == "up":
            _cube_up(A, k, *iv)
        elif kv == "wedge":
            _cube_wedge(A, k, *iv)
        elif kv == "cube":
            _cube_cube(A, k, *iv)
        elif kv == "quartic":
            _cube_quartic(A, k)
    elif ku == "wedge":
        k, l = iu
        if kv == "gen":
            _wedge_gen(A, k, l, *iv)
        elif kv == "up":
            _wedge_up(A, k, l, *iv)
        elif kv == "wedge":
            _wedge_wedge(A, k, l, *iv)
        # wedge . {down, cube, quartic} = 0
    elif ku == "quartic":
        if kv == "gen":
            _quartic_gen(A, *iv, errata=errata)
        elif kv == "up":
            _quartic_up(A, *iv)
        elif kv == "down":
            _quartic_down(A, *iv)
        elif kv == "cube":
            _quartic_cube(A, *iv)
        elif kv == "wedge":
            _quartic_wedge(A, *iv)
        elif kv == "quartic":
            _quartic_quartic(A)
    return {w: c for w, c in A.terms.items() if c}


def _pairs(n: int, w: Word):
    return [(s // n + 1, s % n + 1) for s in w]


def _via_eta(n: int, u: Word, v: Word, errata: bool) -> dict:
    # u*v = eta(eta(v) * eta(u)); the up.down products are only reachable this way
    inner = oracle_product(n, _eta_word(n, v), _eta_word(n, u), errata)
    out = {}
    for w, c in inner.items():
        ew = _eta_word(n, w)
        if basis_shape(n, ew) is None:
            raise Uncovered(f"reflected word {ew} is not a basis word")
        out[ew] = c
    return out


def oracle_poly(n: int, u: Word, v: Word, errata: bool = False) -> NcPoly:
    return NcPoly({w: as_scalar(c) for w, c in oracle_product(n, u, v, errata).items()})
