"""Explicit matrix units of the matrix envelope and its four degree-n representations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from gmpy2 import mpq

from .ajts import TripleSystem
from .arith import I, ONE, ZERO, GR, as_scalar
from .center import rank
from .envelope import AlgElement, EnvelopeAlgebra

__all__ = [
    "MatrixUnitFamily",
    "UnitCheck",
    "matrix_units",
    "verify_unit_relations",
    "resolution_of_identity",
    "block_idempotents",
    "unit_rank",
    "Representation",
    "representation",
    "transpose_rep",
    "check_representation",
    "check_inequivalence",
    "envelope_image",
    "wedderburn_summary",
]

KINDS = ("B0", "B1", "D0", "D1", "A")


@dataclass
class MatrixUnitFamily:
    kind: str
    units: dict  # (i, j) -> AlgElement, 1-based

    @property
    def size(self) -> int:
        return max(i for i, _ in self.units)


@dataclass
class UnitCheck:
    ok: bool
    checked: int = 0
    where: tuple | None = None
    lhs: AlgElement | None = None
    rhs: AlgElement | None = None


def matrix_units(A: EnvelopeAlgebra) -> list[MatrixUnitFamily]:
    """B0, B1, D0, D1 (n x n each) and the single unit A."""
    n = A.n
    if A.alphabet.kind != "matrix":
        raise ValueError("matrix units need the matrix envelope")
    e = A.gen
    one = A.one()
    a = e(1, 1)
    a2, a3, a4 = a * a, a * a * a, a * a * a * a
    q, h = GR(mpq(1, 4)), GR(mpq(1, 2))
    O1 = range(2, n + 1)

    fams = []
    for k in (0, 1):
        s = ONE if k == 0 else -ONE
        U = {(1, 1): (a4 + a2 + (a3 + a) * s) * q}
        for i in O1:
            U[(1, i)] = a * e(1, i) + a2 * e(1, i) * s
            U[(i, 1)] = (e(i, 1) * a + (a2 * e(i, 1) + e(i, 1)) * s) * q
            for j in O1:
                if i == j:
                    U[(i, i)] = ((a4 - a2) * h + e(i, 1) * e(1, i) + (e(1, i) * a * e(i, 1) + e(i, i)) * s) * h
                else:
                    U[(i, j)] = (e(i, 1) * e(1, j) + (e(1, j) * a * e(i, 1) + e(i, j)) * s) * h
        fams.append(MatrixUnitFamily(f"B{k}", U))
    for k in (0, 1):
        s = I if k == 0 else -I
        U = {(1, 1): (a4 - a2 + (a - a3) * s) * q}
        for i in O1:
            U[(1, i)] = (e(1, 1) * e(i, 1) + a2 * e(i, 1) * s) * (-h)
            U[(i, 1)] = (e(1, i) * a + (a2 * e(1, i) - e(1, i)) * s) * (-h)
            for j in O1:
                if i == j:
                    U[(i, i)] = ((a4 + a2) * h - e(1, i) * e(i, 1) - e(1, i) * a * e(i, 1) * s) * h
                else:
                    U[(i, j)] = (e(1, i) * e(j, 1) + e(1, i) * a * e(j, 1) * s) * (-h)
        fams.append(MatrixUnitFamily(f"D{k}", U))
    A11 = one - a4 * n
    for i in O1:
        A11 = A11 + e(1, i) * e(i, 1) - e(i, 1) * e(1, i)
    fams.append(MatrixUnitFamily("A", {(1, 1): A11}))
    return fams


def _all_units(families):
    for F in families:
        for key in sorted(F.units):
            yield F, key, F.units[key]


def verify_unit_relations(families: list[MatrixUnitFamily]) -> UnitCheck:
    """U_ij U_tl = d_jt U_il inside a family, 0 across families; first failure in order."""
    units = list(_all_units(families))
    if not units:
        return UnitCheck(True)
    zero = units[0][2] * 0
    count = 0
    for (F, (i, j), u), (G, (t, l), v) in itertools.product(units, repeat=2):
        count += 1
        got = u * v
        if F is G:
            want = F.units[(i, l)] if j == t else zero
        else:
            want = zero
        if got != want:
            return UnitCheck(False, count, (F.kind, (i, j), G.kind, (t, l)), got, want)
    return UnitCheck(True, count)


def _fam(families, kind) -> dict:
    return next(F.units for F in families if F.kind == kind)


def resolution_of_identity(families: list[MatrixUnitFamily]) -> UnitCheck:
    """1 as the sum of the diagonal units, and each generator rebuilt from the units."""
    B0, B1, D0, D1, Au = (_fam(families, k) for k in KINDS)
    A = Au[(1, 1)].algebra
    n = A.n
    total = Au[(1, 1)]
    for U in (B0, B1, D0, D1):
        for i in range(1, n + 1):
            total = total + U[(i, i)]
    if total != A.one():
        return UnitCheck(False, 1, ("identity",), total - A.one(), A.one() * 0)
    h = GR(mpq(1, 2))
    count = 1
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        if i == 1 and j == 1:
            r = B0[(1, 1)] - B1[(1, 1)] - D0[(1, 1)] * I + D1[(1, 1)] * I
        elif i == 1:
            r = (B0[(1, j)] - B1[(1, j)]) * h - D0[(j, 1)] * I + D1[(j, 1)] * I
        elif j == 1:
            r = (B0[(i, 1)] - B1[(i, 1)]) * 2 - D0[(1, i)] * I + D1[(1, i)] * I
        else:
            r = B0[(i, j)] - B1[(i, j)] - D0[(j, i)] * I + D1[(j, i)] * I
        count += 1
        g = A.gen(i, j)
        if r != g:
            return UnitCheck(False, count, ("generator", (i, j)), r, g)
    return UnitCheck(True, count)


def block_idempotents(families: list[MatrixUnitFamily]) -> list[AlgElement]:
    """A_11 followed by the diagonal sums of B0, B1, D0, D1."""
    out = []
    for k in ("A", "B0", "B1", "D0", "D1"):
        U = _fam(families, k)
        m = max(i for i, _ in U)
        s = U[(1, 1)]
        for i in range(2, m + 1):
            s = s + U[(i, i)]
        out.append(s)
    return out


def unit_rank(families: list[MatrixUnitFamily]) -> int:
    """Rank of the coordinate matrix of all units."""
    rows = [u.vector() for _, _, u in _all_units(families)]
    return rank(rows, len(rows[0]))


# -- representations ---------------------------------------------------------------------


@dataclass
class Representation:
    index: int
    n: int
    images: list = field(default_factory=list)  # symbol -> n x n object array

    def image(self, s: int):
        return self.images[s]


def _zeros(n):
    return np.full((n, n), ZERO, dtype=object)


def _elem(n, i, j, c=ONE):
    M = _zeros(n)
    M[i, j] = as_scalar(c)
    return M


def representation(n: int, k: int) -> Representation:
    """rho_1: E, rho_2: -E, rho_3: I E^T, rho_4: -I E^T (on the units E_ij)."""
    if k not in (1, 2, 3, 4):
        raise ValueError("k must be 1..4")
    coeff = {1: ONE, 2: -ONE, 3: I, 4: -I}[k]
    imgs = []
    for s in range(n * n):
        i, j = divmod(s, n)
        imgs.append(_elem(n, j, i, coeff) if k >= 3 else _elem(n, i, j, coeff))
    return Representation(k, n, imgs)


def transpose_rep(n: int) -> Representation:
    """E -> E^T without the I factor; not a representation."""
    return Representation(0, n, [_elem(n, s % n, s // n) for s in range(n * n)])


def _apply(rho: Representation, vec: dict):
    M = _zeros(rho.n)
    for d, c in vec.items():
        M = M + rho.images[d] * c
    return M


def _same(X, Y) -> bool:
    return all(x == y for x, y in zip(X.flat, Y.flat))


def check_representation(T: TripleSystem, rho: Representation):
    """rho<abc> == rho(a)rho(b)rho(c) - rho(c)rho(b)rho(a) on every basis triple.

    Returns (True, count) or (False, (a, b, c)).
    """
    m = T.dim
    R = rho.images
    count = 0
    for a, b, c in itertools.product(range(m), repeat=3):
        count += 1
        lhs = _apply(rho, T.triple(a, b, c))
        rhs = R[a] @ R[b] @ R[c] - R[c] @ R[b] @ R[a]
        if not _same(lhs, rhs):
            return False, (a, b, c)
    return True, count


def _trace(M):
    t = ZERO
    for k in range(M.shape[0]):
        t = t + M[k, k]
    return t


def check_inequivalence(r1: Representation, r2: Representation):
    """First basis symbol whose images have different traces, or None."""
    if r1.index == r2.index:
        raise ValueError("inequivalence needs two different representations")
    for s in range(len(r1.images)):
        t1, t2 = _trace(r1.images[s]), _trace(r2.images[s])
        if t1 != t2:
            return s, t1, t2
    return None


def envelope_image(rho: Representation, x: AlgElement):
    """Image of an envelope element: each basis word maps to the product of its letters."""
    A = x.algebra
    out = _zeros(rho.n)
    for k, c in x.coords.items():
        M = np.identity(rho.n, dtype=object)
        M = np.vectorize(as_scalar, otypes=[object])(M)
        for s in A.basis[k]:
            M = M @ rho.images[s]
        out = out + M * c
    return out


def wedderburn_summary(A: EnvelopeAlgebra, families: list[MatrixUnitFamily] | None = None) -> list[int]:
    """Block sizes [1, n, n, n, n] after the unit checks pass."""
    families = families or matrix_units(A)
    rel = verify_unit_relations(families)
    if not rel.ok:
        raise AssertionError(f"unit relation fails at {rel.where}")
    res = resolution_of_identity(families)
    if not res.ok:
        raise AssertionError(f"resolution of identity fails at {res.where}")
    r = unit_rank(families)
    if r != A.dim:
        raise AssertionError(f"units span rank {r}, algebra has dimension {A.dim}")
    blocks = [F.size for F in families if F.kind == "A"] + [F.size for F in families if F.kind != "A"]
    if sum(b * b for b in blocks) != A.dim:
        raise AssertionError("block dimensions do not add up")
    return blocks
