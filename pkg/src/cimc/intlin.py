"""Exact integer linear algebra on small matrices.

Matrices are lists of rows of Python ints, so nothing can overflow.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Sequence

IntMatrix = Sequence[Sequence[int]]


def _as_matrix(M: IntMatrix) -> list:
    rows = [[int(x) for x in row] for row in M]
    if not rows or not rows[0]:
        raise ValueError("matrix must have at least one row and one column")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def transpose(M: IntMatrix) -> list:
    return [list(col) for col in zip(*M)]


def determinant(M: IntMatrix) -> int:
    """Fraction-free Bareiss elimination."""
    A = _as_matrix(M)
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def minors_gcd(M: IntMatrix, k: int) -> int:
    """gcd of all nonzero k x k minors of M (0 if every such minor vanishes)."""
    A = _as_matrix(M)
    if k <= 0:
        raise ValueError("minor size must be positive")
    r, c = len(A), len(A[0])
    if k > min(r, c):
        raise ValueError(f"no {k}x{k} minors in a {r}x{c} matrix")
    g = 0
    for rows in combinations(range(r), k):
        for cols in combinations(range(c), k):
            d = determinant([[A[i][j] for j in cols] for i in rows])
            if d:
                g = math.gcd(g, d)
                if g == 1:
                    return 1
    return g


def rank(M: IntMatrix) -> int:
    A = _as_matrix(M)
    for k in range(min(len(A), len(A[0])), 0, -1):
        if minors_gcd(A, k):
            return k
    return 0


def _smith_diagonal(A: list) -> list:
    """Diagonalize A in place by unimodular row/column operations; return the diagonal."""
    r, c = len(A), len(A[0])
    diag = []
    t = 0
    while t < min(r, c):
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, r) for j in range(t, c) if A[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, r):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, c):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    dirty = True
            if dirty:
                # a smaller remainder exists in the pivot row/column; move it to the pivot
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, r) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, c) if A[t][j]]
                _, pi, pj = min(cand)
                A[t], A[pi] = A[pi], A[t]
                for row in A:
                    row[t], row[pj] = row[pj], row[t]
                continue
            # pivot must divide the remaining block, otherwise fold a row in
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def smith_invariant_factors(M: IntMatrix) -> list:
    """Invariant factors d1 | d2 | ... | dm of a nonzero integer matrix, m = rank."""
    A = _as_matrix(M)
    if all(x == 0 for row in A for x in row):
        raise ValueError("zero matrix has no invariant factors")
    factors = _smith_diagonal(A)
    prod = math.prod(factors)
    check = minors_gcd(M, len(factors))
    if prod != check:
        raise ArithmeticError(
            f"invariant factors {factors} have product {prod} but the "
            f"{len(factors)}x{len(factors)} minors have gcd {check}"
        )
    return factors


def _row_mixed(row) -> bool:
    return any(x > 0 for x in row) and any(x < 0 for x in row)


def is_mixed_dominating(P: IntMatrix) -> bool:
    """Every row of P has entries of both signs and no square submatrix does."""
    A = _as_matrix(P)
    if not all(_row_mixed(row) for row in A):
        return False
    r, c = len(A), len(A[0])
    for k in range(2, min(r, c) + 1):
        for rows in combinations(range(r), k):
            sub = [A[i] for i in rows]
            for cols in combinations(range(c), k):
                if all(_row_mixed([row[j] for j in cols]) for row in sub):
                    return False
    return True
