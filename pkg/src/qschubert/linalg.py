"""Exact linear algebra over the rationals (lists of Fractions)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list  # list of rows, each a list of Fraction


def to_fractions(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    A = to_fractions(rows)
    if ncols is None:
        ncols = len(A[0]) if A else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        lead = A[r][c]
        if lead != 1:
            A[r] = [x / lead for x in A[r]]
        row = A[r]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], row)]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(rows) -> int:
    rows = list(rows)
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None) -> Matrix:
    """Basis of {v : A v = 0}, one basis vector per free column."""
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0])
    R, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(A, b) -> list[Fraction]:
    """Unique solution of a square nonsingular system A x = b."""
    n = len(A)
    aug = [list(row) + [bi] for row, bi in zip(to_fractions(A), b)]
    R, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [R[i][n] for i in range(n)]


def matvec(A, v: Sequence) -> list:
    return [sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in A]


def in_span(basis_rref: Matrix, pivots: list[int], v: Sequence) -> bool:
    """Membership test against a basis already in RREF."""
    w = [Fraction(x) for x in v]
    for row, p in zip(basis_rref, pivots):
        if w[p] != 0:
            f = w[p]
            w = [x - f * y for x, y in zip(w, row)]
    return not any(w)
