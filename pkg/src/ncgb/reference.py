"""Closed-form reference data for the n x n matrix envelope.

These are hand-transcribed families used purely as fixtures: the engine
never reads them while computing.  Tests compare them with what completion,
normal-word enumeration and the center computation produce independently.
"""

from __future__ import annotations

import itertools

from .arith import GR, ONE
from .freealg import Alphabet, NcPoly, Word

__all__ = ["groebner_families", "explicit_basis", "basis_shape", "closed_form_center"]


def _half():
    from gmpy2 import mpq

    return GR(mpq(1, 2))


def groebner_families(n: int) -> dict[str, list[NcPoly]]:
    """The twenty families G0..G19 keyed by name, instantiated at ``n``."""
    e = Alphabet.matrix(n).e
    O = list(range(1, n + 1))
    O1 = O[1:]
    h = _half()

    def P(*terms):
        # terms: (coeff, [(i, j), ...])
        return NcPoly({tuple(e(*p) for p in w): c for c, w in terms})

    e11 = (1, 1)
    F: dict[str, list[NcPoly]] = {f"G{k}": [] for k in range(20)}
    for i, j in itertools.product(O1, O1):
        F["G0"].append(P((1, [(i, 1), e11, (1, j)]), (-1, [(1, j), e11, (i, 1)]), (-1, [(i, j)])))
    for i, j, k in itertools.product(O, O, O):
        if k != i and j != 1:
            F["G1"].append(P((1, [(i, j), (j, k)]), (-1, [(i, 1), (1, k)])))
        if j != k and i != 1:
            F["G2"].append(P((1, [(i, j), (k, i)]), (-1, [(1, j), (k, 1)])))
    for i, j, k, l in itertools.product(O, repeat=4):
        if i != l and j != k:
            F["G3"].append(P((1, [(i, j), (k, l)])))
    for i, j in itertools.product(O1, O1):
        F["G4"].append(P((1, [(i, j), (j, i)]), (-1, [(i, 1), (1, i)]), (-1, [(1, j), (j, 1)]), (1, [e11, e11])))
    for i, j in itertools.product(O, O):
        if i != 1 and j != i:
            F["G5"].append(P((1, [(i, 1), (1, j), (j, 1)]), (-1, [e11, e11, (i, 1)]), (-1, [(i, 1)])))
        if i != 1 and j != 1 and i != j:
            F["G6"].append(P((1, [(j, 1), (1, j), (i, 1)]), (-1, [e11, e11, (i, 1)])))
            F["G7"].append(P((1, [(1, i), (i, 1), (1, j)]), (-1, [e11, e11, (1, j)])))
        if i != j and i != 1:
            F["G8"].append(P((1, [(1, i), (j, 1), (1, j)]), (-1, [e11, e11, (1, i)]), (1, [(1, i)])))
    for i in O1:
        F["G9"].append(P((1, [(i, 1), (1, i), (i, 1)]), (-2, [e11, e11, (i, 1)]), (-1, [(i, 1)])))
        F["G10"].append(P((1, [(1, i), (i, 1), (1, i)]), (-2, [e11, e11, (1, i)]), (1, [(1, i)])))
    for i, j, k in itertools.product(O, O, O):
        if k != j and i != j:
            F["G11"].append(P((1, [(i, 1), (1, j), (k, 1)])))
            F["G12"].append(P((1, [(1, i), (j, 1), (1, k)])))
    for i in O1:
        F["G13"].append(P((1, [e11, (1, i), (i, 1)]), (-h, [e11] * 3), (-h, [e11])))
        F["G14"].append(P((1, [e11, (i, 1), (1, i)]), (-h, [e11] * 3), (h, [e11])))
        F["G15"].append(P((1, [(1, i), (i, 1), e11]), (-h, [e11] * 3), (-h, [e11])))
        F["G16"].append(P((1, [(i, 1), (1, i), e11]), (-h, [e11] * 3), (h, [e11])))
        F["G17"].append(P((1, [e11, e11, e11, (1, i)]), (-1, [e11, (1, i)])))
        F["G18"].append(P((1, [e11, e11, e11, (i, 1)]), (1, [e11, (i, 1)])))
    F["G19"].append(P((1, [e11] * 5), (-1, [e11])))
    return F


def explicit_basis(n: int) -> dict[str, list[Word]]:
    """The 4n^2+1 normal words grouped by shape.

    gen: e_ij; down: e_i1 e_1j; up: e_1i e_j1 with (i,j) != (1,1);
    wedge: e_1i e_11 e_j1 with j != 1; cube: e_11^2 e_1j; quartic: e_11^4.
    """
    e = Alphabet.matrix(n).e
    O = range(1, n + 1)
    a = e(1, 1)
    return {
        "unit": [()],
        "gen": [(e(i, j),) for i in O for j in O],
        "down": [(e(i, 1), e(1, j)) for i in O for j in O],
        "up": [(e(1, i), e(j, 1)) for i in O for j in O if (i, j) != (1, 1)],
        "wedge": [(e(1, i), a, e(j, 1)) for i in O for j in O if j != 1],
        "cube": [(a, a, e(1, j)) for j in O],
        "quartic": [(a, a, a, a)],
    }


def basis_shape(n: int, w: Word):
    """(shape, indices) for a word of the explicit basis, else None."""
    A = Alphabet.matrix(n)
    rc = [A.row_col(s) for s in w]
    if len(w) == 0:
        return "unit", ()
    if len(w) == 1:
        return "gen", rc[0]
    if len(w) == 2:
        (p, q), (r, s) = rc
        if q == 1 and r == 1:
            return "down", (p, s)
        if p == 1 and s == 1:
            return "up", (q, r)
        return None
    if len(w) == 3:
        (p, q), (r, s), (t, u) = rc
        if p == 1 and (r, s) == (1, 1) and u == 1 and t != 1:
            return "wedge", (q, t)
        if (p, q) == (1, 1) and (r, s) == (1, 1) and t == 1:
            return "cube", (u,)
        return None
    if len(w) == 4 and all(x == (1, 1) for x in rc):
        return "quartic", ()
    return None


def closed_form_center(n: int) -> list[NcPoly]:
    """z1..z5 as polynomials in the generators."""
    from gmpy2 import mpq

    e = Alphabet.matrix(n).e
    a = e(1, 1)
    O1 = range(2, n + 1)
    h = _half()
    z1 = {(a, a): GR(mpq(n - 2, n)), (a, a, a, a): ONE}
    for i in O1:
        z1[(e(1, i), e(i, 1))] = GR(mpq(-2, n))
    z2 = {(a, a): GR(2 - n)}
    for i in O1:
        z2[(e(1, i), e(i, 1))] = ONE
        z2[(e(i, 1), e(1, i))] = ONE
    z3 = {(a,): -h, (a, a, a): h}
    for i in O1:
        z3[(e(1, i), a, e(i, 1))] = ONE
    z4 = {(e(i, i),): ONE for i in range(1, n + 1)}
    z5 = {(): ONE}
    return [NcPoly(z) for z in (z1, z2, z3, z4, z5)]
