"""Exact integer linear algebra and finite abelian groups.

Matrices are plain lists of lists of Python ints and act on row vectors
from the right: a vector ``x`` maps to ``x @ A``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Iterator, Sequence

Matrix = list[list[int]]


def identity_matrix(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if not A:
        return []
    cols = len(B[0]) if B else 0
    return [
        [sum(a * B[k][j] for k, a in enumerate(row) if a) for j in range(cols)]
        for row in A
    ]


def vec_mat(x: Sequence[int], A: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    n = len(A[0]) if A else (ncols or 0)
    out = [0] * n
    for i, xi in enumerate(x):
        if xi:
            row = A[i]
            for j in range(n):
                out[j] += xi * row[j]
    return out


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_pow(A: Matrix, k: int) -> Matrix:
    out = identity_matrix(len(A))
    for _ in range(k):
        out = mat_mul(out, A)
    return out


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def lattice_basis(rows: Iterable[Sequence[int]], ncols: int) -> Matrix:
    """Hermite-style echelon basis of the lattice spanned by ``rows``.

    Rows are inserted one at a time; the basis stays upper triangular with
    positive pivots and off-pivot entries reduced modulo lower pivots.
    """
    basis: dict[int, list[int]] = {}
    for r in rows:
        r = list(r)
        if len(r) != ncols:
            raise ValueError("row length mismatch")
        for c in range(ncols):
            if r[c] == 0:
                continue
            b = basis.get(c)
            if b is None:
                if r[c] < 0:
                    r = [-v for v in r]
                basis[c] = r
                _reduce_above(basis, c, ncols)
                break
            g, x, y = _xgcd(b[c], r[c])
            bc, rc = b[c] // g, r[c] // g
            new_b = [x * u + y * v for u, v in zip(b, r)]
            r = [bc * v - rc * u for u, v in zip(b, r)]
            if new_b[c] < 0:
                new_b = [-v for v in new_b]
            basis[c] = new_b
            _reduce_above(basis, c, ncols)
    return [basis[c] for c in sorted(basis)]


def _reduce_above(basis: dict[int, list[int]], c: int, ncols: int) -> None:
    pivot_row = basis[c]
    # reduce this row by lower pivots, then higher rows by this pivot
    for c2 in range(c + 1, ncols):
        b2 = basis.get(c2)
        if b2 is not None and pivot_row[c2]:
            q = pivot_row[c2] // b2[c2]
            if q:
                pivot_row[:] = [u - q * v for u, v in zip(pivot_row, b2)]
    for c1, b1 in basis.items():
        if c1 < c and b1[c]:
            q = b1[c] // pivot_row[c]
            if q:
                b1[:] = [u - q * v for u, v in zip(b1, pivot_row)]


@dataclass
class SmithForm:
    diagonal: list[int]
    U: Matrix | None
    V: Matrix
    V_inv: Matrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def smith_normal_form(A: Sequence[Sequence[int]], ncols: int | None = None,
                      left: bool = False) -> SmithForm:
    """Return ``U, V`` unimodular with ``U @ A @ V`` diagonal, d1 | d2 | ...

    ``U`` is tracked only when ``left`` is set.
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    S = [list(map(int, r)) for r in A]
    U = identity_matrix(m) if left else None
    V = identity_matrix(n)
    Vi = identity_matrix(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in S:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        S[dst] = [a + q * b for a, b in zip(S[dst], S[src])]
        if U is not None:
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for r in S:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]
        # inverse: row_src -= q * row_dst
        Vi[src] = [a - q * b for a, b in zip(Vi[src], Vi[dst])]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if S[i][j] and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = S[t][t]
            dirty = False
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
                    dirty = dirty or S[i][t] != 0
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
                    dirty = dirty or S[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if S[t][t] < 0:
            S[t] = [-v for v in S[t]]
            if U is not None:
                U[t] = [-v for v in U[t]]
    diag = [S[i][i] for i in range(min(m, n))]
    return SmithForm(diag, U, V, Vi)


def left_kernel(B: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Integer basis of ``{z : z @ B = 0}``."""
    if not B:
        return []
    snf = smith_normal_form(B, ncols, left=True)
    assert snf.U is not None
    return [snf.U[i] for i in range(snf.rank, len(B))]


def solve_in_basis(x: Sequence[int], basis: Matrix) -> list[int]:
    """Coordinates ``c`` with ``c @ basis = x`` for a square nonsingular basis."""
    n = len(basis)
    # c @ basis = x  <=>  basis^T c^T = x^T
    T = [[Fraction(basis[j][i]) for j in range(n)] + [Fraction(x[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if T[r][col] != 0)
        T[col], T[piv] = T[piv], T[col]
        pv = T[col][col]
        T[col] = [v / pv for v in T[col]]
        for r in range(n):
            if r != col and T[r][col] != 0:
                f = T[r][col]
                T[r] = [a - f * b for a, b in zip(T[r], T[col])]
    c = [T[i][n] for i in range(n)]
    if any(v.denominator != 1 for v in c):
        raise ValueError("vector not in lattice")
    return [int(v) for v in c]


class FinAbGroup:
    """Finite abelian group ``Z^rank / <relations>``.

    Elements are integer vectors of length ``rank``; ``canonical`` maps them
    to reduced Smith coordinates, one per nontrivial invariant factor.
    """

    def __init__(self, rank: int, relations: Iterable[Sequence[int]] = ()):
        self.rank = rank
        self.relations = lattice_basis(relations, rank)
        if len(self.relations) < rank:
            raise ValueError("relation lattice is not of full rank: group is infinite")
        snf = smith_normal_form(self.relations, rank) if rank else SmithForm([], None, [], [])
        self._V = snf.V
        self._V_inv = snf.V_inv
        self._slots = [i for i, d in enumerate(snf.diagonal) if d != 1]
        self.invariant_factors = tuple(snf.diagonal[i] for i in self._slots)

    def __repr__(self):
        return f"FinAbGroup(invariants={list(self.invariant_factors)})"

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def canonical(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.rank:
            raise ValueError("vector length mismatch")
        y = vec_mat(x, self._V, self.rank)
        return tuple(y[i] % d for i, d in zip(self._slots, self.invariant_factors))

    def lift(self, c: Sequence[int]) -> list[int]:
        full = [0] * self.rank
        for i, v in zip(self._slots, c):
            full[i] = v
        return vec_mat(full, self._V_inv, self.rank)

    def is_zero(self, x: Sequence[int]) -> bool:
        return not any(self.canonical(x))

    def add(self, x, y) -> list[int]:
        return [a + b for a, b in zip(x, y)]

    def neg(self, x) -> list[int]:
        return [-a for a in x]

    def zero(self) -> list[int]:
        return [0] * self.rank

    def elements(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(d) for d in self.invariant_factors))

    def order_of(self, x: Sequence[int]) -> int:
        c = self.canonical(x)
        o = 1
        for v, d in zip(c, self.invariant_factors):
            o = o * (d // gcd(v, d)) // gcd(o, d // gcd(v, d))
        return o

    def isomorphic(self, other: "FinAbGroup") -> bool:
        return self.invariant_factors == other.invariant_factors


def cyclic_invariants(orders: Sequence[int]) -> tuple[int, ...]:
    """Invariant factors of a direct sum of cyclic groups of the given orders."""
    return FinAbGroup(len(orders), [[d if i == j else 0 for j in range(len(orders))]
                                    for i, d in enumerate(orders)]).invariant_factors
