"""Brute-force reference computations.

These deliberately avoid the HNF, facet and canonical-form machinery so
they can cross-check it.  Only suitable for tiny inputs.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd
from functools import reduce


def cofactor_det(M) -> int:
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * cofactor_det([r[:j] + r[j + 1:] for r in M[1:]])
               for j in range(n) if M[0][j])


def _solve(A, b):
    n = len(A)
    M = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        M[c] = [x / M[c][c] for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * bb for a, bb in zip(M[i], M[c])]
    return [M[i][n] for i in range(n)]


def in_hull(points, x) -> bool:
    """Caratheodory: x lies in some full-dimensional simplex of the points."""
    d = len(x)
    for S in combinations(points, d + 1):
        A = [[S[j][i] - S[0][i] for j in range(1, d + 1)] for i in range(d)]
        lam = _solve(A, [x[i] - S[0][i] for i in range(d)])
        if lam is not None and all(t >= 0 for t in lam) and sum(lam) <= 1:
            return True
    return False


def lattice_points(points):
    """Lattice points of a full-dimensional hull by box sweep + Caratheodory."""
    d = len(points[0])
    lo = [min(p[i] for p in points) for i in range(d)]
    hi = [max(p[i] for p in points) for i in range(d)]
    return {x for x in product(*(range(a, b + 1) for a, b in zip(lo, hi)))
            if in_hull(points, x)}


def width(points, bound: int) -> int:
    """Minimum width over primitive functionals with entries in [-bound, bound]."""
    d = len(points[0])
    best = None
    for ell in product(range(-bound, bound + 1), repeat=d):
        if reduce(gcd, ell, 0) != 1:
            continue
        vals = [sum(a * b for a, b in zip(ell, p)) for p in points]
        w = max(vals) - min(vals)
        if best is None or w < best:
            best = w
    return best


def equivalent(verts1, verts2) -> bool:
    """Search every affine map sending an affine basis of ``verts1`` to an
    ordered tuple of ``verts2``; full-dimensional inputs only."""
    v1, v2 = sorted(set(map(tuple, verts1))), sorted(set(map(tuple, verts2)))
    if len(v1) != len(v2):
        return False
    d = len(v1[0])
    basis = None
    for S in combinations(v1, d + 1):
        D = [[S[j][i] - S[0][i] for j in range(1, d + 1)] for i in range(d)]
        if cofactor_det(D) != 0:
            basis = S
            break
    if basis is None:
        raise ValueError("inputs must be full-dimensional")
    B = [[basis[j][i] - basis[0][i] for j in range(1, d + 1)] for i in range(d)]
    target = set(v2)
    for T in permutations(v2, d + 1):
        C = [[T[j][i] - T[0][i] for j in range(1, d + 1)] for i in range(d)]
        # L @ B = C  <=>  B^T L^T = C^T, solved row by row
        Bt = [list(r) for r in zip(*B)]
        L = []
        ok = True
        for i in range(d):
            row = _solve(Bt, [C[i][j] for j in range(d)])
            if row is None or any(x.denominator != 1 for x in row):
                ok = False
                break
            L.append([int(x) for x in row])
        if not ok or abs(cofactor_det(L)) != 1:
            continue
        t = [T[0][i] - sum(L[i][k] * basis[0][k] for k in range(d)) for i in range(d)]
        image = {tuple(sum(L[i][k] * p[k] for k in range(d)) + t[i] for i in range(d))
                 for p in v1}
        if image == target:
            return True
    return False
