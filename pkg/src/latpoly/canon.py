"""Canonical forms and unimodular equivalence.

For an anchor vertex ``v0`` and an ordering ``v1..vk`` of the remaining
vertices, stack the differences ``vi - v0`` as rows and take the column HNF.
Column operations are exactly changes of lattice basis, so the result does
not depend on the embedding; minimizing lexicographically over anchors and
orderings removes the dependence on labels.  Because the column HNF of a
row prefix is the prefix of the column HNF, the search extends an ordering
only with vertices that produce the smallest next row (ties branch).
"""
from __future__ import annotations

from dataclasses import dataclass

from . import intlin
from .intlin import AffUnimodMap, ColumnHNF, sub
from .polytope import Polytope, hull


@dataclass(frozen=True)
class CanonicalForm:
    key: bytes

    def hex(self) -> str:
        return self.key.hex()

    def __lt__(self, other):
        return self.key < other.key


@dataclass
class _Search:
    rows: list | None = None
    anchor: tuple | None = None
    order: tuple | None = None
    U: tuple | None = None


def _search(P: Polytope) -> _Search:
    verts = P.vertices
    d = P.ambient_dim
    best = _Search()

    def dfs(anchor, state, prefix, order, remaining):
        if not remaining:
            if best.rows is None or prefix < best.rows:
                best.rows = list(prefix)
                best.anchor = anchor
                best.order = tuple(order)
                best.U = state.transform
            return
        k = len(prefix)
        options = []
        for w in remaining:
            st = state.copy()
            options.append((st.push(sub(w, anchor)), w, st))
        m = min(o[0] for o in options)
        if best.rows is not None and prefix + [m] > best.rows[:k + 1]:
            return
        for row, w, st in options:
            if row == m:
                dfs(anchor, st, prefix + [row], order + [w],
                    [x for x in remaining if x != w])

    for anchor in verts:
        dfs(anchor, ColumnHNF(d), [], [], [v for v in verts if v != anchor])
    return best


def _encode(P: Polytope, rows) -> bytes:
    head = f"{P.intrinsic_dim}:{P.ambient_dim}:{len(P.vertices)}:{len(P.lattice_points)}:"
    body = ";".join(",".join(str(x) for x in r) for r in rows)
    return (head + body).encode("ascii")


def canonical_form(P: Polytope) -> CanonicalForm:
    return CanonicalForm(_encode(P, _search(P).rows))


def _witness(P1: Polytope, P2: Polytope, s1: _Search, s2: _Search) -> AffUnimodMap:
    # rows: (w_i - a2) = (v_i - a1) @ V  with  V = U1 @ U2^-1
    V = intlin.matmul(s1.U, intlin.inverse_unimodular(s2.U))
    L = intlin.transpose(V)
    t = sub(s2.anchor, intlin.matvec(L, s1.anchor))
    return AffUnimodMap(L, t)


def verify_map(m: AffUnimodMap, P1: Polytope, P2: Polytope) -> bool:
    """Check that ``m`` maps vertices and lattice points of P1 onto those of P2."""
    imv = {m(v) for v in P1.vertices}
    if imv != set(P2.vertices):
        return False
    return {m(x) for x in P1.lattice_points} == set(P2.lattice_points)


def equivalent(P1: Polytope, P2: Polytope):
    """Return ``(True, witness)`` if P1 and P2 are unimodularly equivalent,
    else ``(False, None)``.  Witnesses are always verified."""
    if (P1.ambient_dim != P2.ambient_dim or len(P1.vertices) != len(P2.vertices)
            or len(P1.lattice_points) != len(P2.lattice_points)
            or P1.intrinsic_dim != P2.intrinsic_dim):
        return False, None
    s1, s2 = _search(P1), _search(P2)
    if s1.rows != s2.rows:
        return False, None
    m = _witness(P1, P2, s1, s2)
    if not verify_map(m, P1, P2):
        raise AssertionError("canonical forms agree but the witness map fails")
    return True, m


def _fibers(L):
    """``{base vertex: (lowest, highest)}`` last coordinate of the lift over it."""
    out = {}
    for v in L.total.vertices:
        b, y = v[:-1], v[-1]
        lo, hi = out.get(b, (y, y))
        out[b] = (min(lo, y), max(hi, y))
    return {b: out[b] for b in L.base.vertices}


def lift_map(eps: int, a, c: int):
    """The lift automorphism ``(x, y) -> (x, eps*y + a.x + c)``."""
    def f(p):
        x, y = p[:-1], p[-1]
        return x + (eps * y + intlin.dot(a, x) + c,)
    return f


def find_lift_equivalence(L1, L2):
    """``(eps, a, c)`` with ``(x, y) -> (x, eps*y + a.x + c)`` mapping L1 onto L2,
    or None."""
    if set(L1.base.vertices) != set(L2.base.vertices):
        raise ValueError("lifts of different bases")
    f1, f2 = _fibers(L1), _fibers(L2)
    base = sorted(f1)
    A = tuple(b + (1,) for b in base)
    target2 = set(L2.total.vertices)
    points2 = set(L2.total.lattice_points)
    for eps in (1, -1):
        if eps == 1:
            rhs = [f2[b][0] - f1[b][0] for b in base]
        else:
            rhs = [f2[b][0] + f1[b][1] for b in base]
        sol = intlin.solve_integer(A, rhs)
        if sol is None:
            continue
        a, c = sol[:-1], sol[-1]
        f = lift_map(eps, a, c)
        if ({f(v) for v in L1.total.vertices} == target2
                and {f(p) for p in L1.total.lattice_points} == points2):
            return eps, a, c
    return None


def lift_equivalent(L1, L2) -> bool:
    return find_lift_equivalence(L1, L2) is not None


def canonical_key_of_points(points) -> CanonicalForm:
    return canonical_form(hull(points))
