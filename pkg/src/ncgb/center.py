"""Exact linear algebra over Q(i) and the center of an envelope algebra."""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import ONE, ZERO, as_scalar
from .envelope import AlgElement, EnvelopeAlgebra

__all__ = ["LinearSystem", "rref", "nullspace", "rank", "in_span", "center_basis", "is_central", "commutator_system"]


def rref(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivot choice: the first column with a nonzero entry among the remaining
    rows, taking the lowest-index such row.  Inputs are not modified.
    """
    M = [[as_scalar(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        p = next((k for k in range(r, len(M)) if M[k][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = M[r][c].inverse()
        if inv != ONE:
            M[r] = [x * inv for x in M[r]]
        piv = M[r]
        for k in range(len(M)):
            if k != r and M[k][c]:
                f = M[k][c]
                M[k] = [a - f * b if b else a for a, b in zip(M[k], piv)]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def nullspace(rows: list[list], ncols: int) -> list[list]:
    """Basis of {x : rows . x = 0}, one vector per free column, in column order."""
    R, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(R, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def rank(rows: list[list], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def in_span(vectors: list[list], v: list, ncols: int) -> bool:
    return rank(vectors + [v], ncols) == rank(vectors, ncols)


@dataclass
class LinearSystem:
    rows: list = field(default_factory=list)
    unknowns: int = 0

    def rank(self) -> int:
        return rank(self.rows, self.unknowns)

    def nullspace(self) -> list[list]:
        return nullspace(self.rows, self.unknowns)


def commutator_system(A: EnvelopeAlgebra, all_basis: bool = False) -> LinearSystem:
    """Rows of x*u - u*x = 0 for u running over generators (or the whole basis)."""
    d = A.dim
    if all_basis:
        probes = list(range(d))
    else:
        probes = [A.index[(s,)] for s in A.alphabet.symbols()]
    rows = []
    for u in probes:
        # column k holds the coordinates of b_k u - u b_k
        cols = []
        for k in range(d):
            diff = dict(A.product(k, u))
            for m, c in A.product(u, k).items():
                s = diff.get(m, ZERO) - c
                if s:
                    diff[m] = s
                else:
                    diff.pop(m, None)
            cols.append(diff)
        touched = sorted({m for col in cols for m in col})
        for m in touched:
            rows.append([cols[k].get(m, ZERO) for k in range(d)])
    return LinearSystem(rows, d)


def center_basis(A: EnvelopeAlgebra, all_basis: bool = False) -> list[AlgElement]:
    """Exact basis of Z(A) from the commutator equations."""
    S = commutator_system(A, all_basis)
    return [A.element({k: c for k, c in enumerate(v) if c}) for v in S.nullspace()]


def is_central(A: EnvelopeAlgebra, x: AlgElement) -> bool:
    for s in A.alphabet.symbols():
        g = A.word((s,))
        if x * g != g * x:
            return False
    return True
