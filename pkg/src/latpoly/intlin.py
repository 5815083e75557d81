"""Exact integer and rational linear algebra.

Vectors are tuples of Python ints and matrices are tuples of row tuples.
Nothing in here touches floating point.

Normalization convention (used everywhere, in particular by ``canon``):
``hnf_column`` returns the column-style Hermite normal form ``H = M @ U``
with ``U`` unimodular.  ``H`` is a lower staircase: row ``i`` either has no
pivot, or its pivot is the first column not used by an earlier pivot; the
pivot is positive, entries to the right of it are zero, and entries of that
row in earlier pivot columns lie in ``[0, pivot)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

IntVec = tuple
IntMat = tuple


def vec(v) -> IntVec:
    return tuple(int(x) for x in v)


def mat(rows) -> IntMat:
    return tuple(tuple(int(x) for x in r) for r in rows)


def identity(d: int) -> IntMat:
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def transpose(M: IntMat) -> IntMat:
    return tuple(zip(*M)) if M else ()


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def add(u, v) -> IntVec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> IntVec:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v) -> IntVec:
    return tuple(c * a for a in v)


def matmul(A: IntMat, B: IntMat) -> IntMat:
    Bt = transpose(B)
    return tuple(tuple(dot(r, c) for c in Bt) for r in A)


def matvec(A: IntMat, v) -> IntVec:
    return tuple(dot(r, v) for r in A)


def vecmat(v, A: IntMat) -> IntVec:
    """Row vector times matrix."""
    return tuple(dot(v, c) for c in transpose(A))


def content(v) -> int:
    return reduce(gcd, (abs(x) for x in v), 0)


def make_primitive(v) -> IntVec:
    """Divide ``v`` by the gcd of its entries, keeping its direction."""
    g = content(v)
    if g == 0:
        raise ValueError("cannot make the zero vector primitive")
    return tuple(x // g for x in v)


def is_primitive(v) -> bool:
    return content(v) == 1


def first_nonzero_positive(v) -> bool:
    for x in v:
        if x:
            return x > 0
    return False


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def determinant(M: IntMat) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return 1
    if any(len(r) != n for r in M):
        raise ValueError("determinant of a non-square matrix")
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
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


def rank(M: IntMat) -> int:
    if not M:
        return 0
    A = [[Fraction(x) for x in r] for r in M]
    rows, cols = len(A), len(A[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, rows):
            if A[i][c]:
                f = A[i][c] / A[r][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r


def solve_rational(A: IntMat, b) -> tuple[Fraction, ...] | None:
    """Solve the square system ``A x = b`` exactly; None if singular."""
    n = len(A)
    M = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * bb for a, bb in zip(M[i], M[c])]
    return tuple(M[i][n] for i in range(n))


def inverse_rational(A: IntMat) -> tuple[tuple[Fraction, ...], ...] | None:
    n = len(A)
    M = [[Fraction(x) for x in A[i]] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * bb for a, bb in zip(M[i], M[c])]
    return tuple(tuple(r[n:]) for r in M)


def inverse_unimodular(U: IntMat) -> IntMat:
    inv = inverse_rational(U)
    if inv is None or any(x.denominator != 1 for r in inv for x in r):
        raise ValueError("matrix is not unimodular")
    return tuple(tuple(int(x) for x in r) for r in inv)


class ColumnHNF:
    """Incremental column-style HNF.

    Rows are fed one at a time; each fed row comes back in final reduced
    form, and rows already returned are never changed by later rows.  The
    accumulated column transform is kept in ``U`` so that
    ``hnf_rows == fed_rows @ U`` at every step.
    """

    __slots__ = ("d", "U", "pivots")

    def __init__(self, d: int, U=None, pivots=()):
        self.d = d
        self.U = [list(r) for r in (U if U is not None else identity(d))]
        # (column, pivot value) for each pivot placed so far
        self.pivots = list(pivots)

    def copy(self) -> "ColumnHNF":
        return ColumnHNF(self.d, self.U, self.pivots)

    def _colop(self, row, i, j, a, b, c, e):
        """Replace columns (i, j) by (a*ci + b*cj, c*ci + e*cj)."""
        for r in self.U:
            x, y = r[i], r[j]
            r[i], r[j] = a * x + b * y, c * x + e * y
        x, y = row[i], row[j]
        row[i], row[j] = a * x + b * y, c * x + e * y

    def push(self, v) -> IntVec:
        d = self.d
        row = [dot(v, [self.U[k][c] for k in range(d)]) for c in range(d)]
        j = len(self.pivots)
        if j == d or all(x == 0 for x in row[j:]):
            return tuple(row)
        for k in range(j + 1, d):
            if row[k] == 0:
                continue
            a, b = row[j], row[k]
            g, x, y = xgcd(a, b)
            # [a b] [[x, -b/g], [y, a/g]] = [g 0]; the 2x2 block has det 1
            self._colop(row, j, k, x, y, -b // g, a // g)
        if row[j] < 0:
            for r in self.U:
                r[j] = -r[j]
            row[j] = -row[j]
        p = row[j]
        for ci, _ in self.pivots:
            q = row[ci] // p
            if q:
                for r in self.U:
                    r[ci] -= q * r[j]
                row[ci] -= q * p
        self.pivots.append((j, p))
        return tuple(row)

    @property
    def transform(self) -> IntMat:
        return tuple(tuple(r) for r in self.U)


def hnf_column_with_transform(M: IntMat) -> tuple[IntMat, IntMat]:
    """Return ``(H, U)`` with ``H == M @ U``, ``U`` unimodular, ``H`` in HNF."""
    if not M:
        return (), ()
    h = ColumnHNF(len(M[0]))
    rows = [h.push(r) for r in M]
    U = h.transform
    # earlier rows are final, but recompute for clarity of the contract
    return matmul(M, U), U


def hnf_column(M: IntMat) -> IntMat:
    return hnf_column_with_transform(M)[0]


def elementary_divisors(M: IntMat) -> tuple[int, ...]:
    """Nonzero Smith invariants of an integer matrix, in divisibility order."""
    A = [list(r) for r in M]
    if not A or not A[0]:
        return ()
    rows, cols = len(A), len(A[0])
    out = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(A[i][j]), i, j) for i in range(t, rows) for j in range(t, cols)
              if A[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        A[t], A[pi] = A[pi], A[t]
        for r in A:
            r[t], r[pj] = r[pj], r[t]
        while True:
            done = True
            p = A[t][t]
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    for r in A:
                        r[j] -= q * r[t]
                if A[t][j]:
                    done = False
            if done:
                bad = next(((i, j) for i in range(t + 1, rows)
                            for j in range(t + 1, cols) if A[i][j] % p), None)
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                continue
            nz = [(abs(A[i][t]), i, t) for i in range(t, rows) if A[i][t]]
            nz += [(abs(A[t][j]), t, j) for j in range(t, cols) if A[t][j]]
            _, pi, pj = min(nz)
            A[t], A[pi] = A[pi], A[t]
            for r in A:
                r[t], r[pj] = r[pj], r[t]
        out.append(abs(A[t][t]))
        t += 1
    return tuple(out)


def integer_kernel_normal(vectors) -> IntVec:
    """Primitive integer normal to ``d-1`` independent vectors in Z^d.

    Uses signed maximal minors (generalized cross product); returns the zero
    vector when the vectors are dependent.
    """
    vs = [tuple(v) for v in vectors]
    d = len(vs[0]) if vs else 1
    if d == 1:
        return (1,)
    if d == 2:
        n = (-vs[0][1], vs[0][0])
    elif d == 3:
        a, b = vs
        n = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0])
    else:
        n = tuple((-1) ** k * determinant(tuple(tuple(v[:k] + v[k + 1:]) for v in vs))
                  for k in range(d))
    g = content(n)
    if g == 0:
        return n
    return tuple(x // g for x in n)


@dataclass(frozen=True)
class AffUnimodMap:
    """``x -> linear @ x + translation`` on column vectors."""

    linear: IntMat
    translation: IntVec

    def __post_init__(self):
        if abs(determinant(self.linear)) != 1:
            raise ValueError("linear part is not unimodular")

    def __call__(self, p) -> IntVec:
        return apply(self, p)

    def inverse(self) -> "AffUnimodMap":
        inv = inverse_unimodular(self.linear)
        return AffUnimodMap(inv, tuple(-x for x in matvec(inv, self.translation)))


def apply(m: AffUnimodMap, p) -> IntVec:
    return add(matvec(m.linear, p), m.translation)


def random_unimodular(d: int, seed: int, steps: int = 12,
                      coeff: int = 3, shift: int = 5) -> AffUnimodMap:
    """Random affine unimodular map built from elementary row operations."""
    rng = random.Random(seed)
    A = [list(r) for r in identity(d)]
    for _ in range(steps):
        kind = rng.random()
        if d > 1 and kind < 0.7:
            i, j = rng.sample(range(d), 2)
            c = rng.randint(-coeff, coeff)
            A[i] = [a + c * b for a, b in zip(A[i], A[j])]
        elif d > 1 and kind < 0.85:
            i, j = rng.sample(range(d), 2)
            A[i], A[j] = A[j], A[i]
        else:
            i = rng.randrange(d)
            A[i] = [-a for a in A[i]]
    t = tuple(rng.randint(-shift, shift) for _ in range(d))
    return AffUnimodMap(mat(A), t)


def complete_to_basis(u) -> IntMat:
    """Unimodular matrix whose first column is the primitive vector ``u``."""
    if not is_primitive(u):
        raise ValueError("vector is not primitive")
    h = ColumnHNF(len(u))
    row = h.push(u)
    # row == u @ U == (1, 0, ..., 0), so inv(U) has u as its first row
    assert row[0] == 1 and not any(row[1:])
    return transpose(inverse_unimodular(h.transform))


def solve_integer(A: IntMat, b) -> IntVec | None:
    """One integer solution of ``A x = b``, or None if there is none."""
    rows = len(A)
    if rows == 0:
        return ()
    n = len(A[0])
    H, U = hnf_column_with_transform(A)
    y = [0] * n
    j = 0
    for i in range(rows):
        acc = b[i] - sum(H[i][k] * y[k] for k in range(j))
        if j < n and H[i][j] != 0:
            if acc % H[i][j]:
                return None
            y[j] = acc // H[i][j]
            j += 1
        elif acc != 0:
            return None
    return matvec(U, y)
