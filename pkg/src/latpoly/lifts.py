"""Lifts of lattice polytopes along the last coordinate.

A lift of a ``(d-1)``-polytope ``Q`` is a ``d``-polytope projecting onto it
when the last coordinate is forgotten.  Tight lifts are determined by one
integer height per vertex of ``Q``; heights are always listed in the order
of ``Q.vertices`` (lexicographic).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, lcm

from . import intlin
from .canon import find_lift_equivalence
from .hollowlab import is_hollow
from .polytope import (Polytope, centroid, face_lattice, hull, is_pyramid_with_apex,
                       normalized_volume)
from .width import lattice_width, width_along


class HypothesisError(ValueError):
    """A construction was called outside the range where it is defined."""


@dataclass(frozen=True)
class Lift:
    total: Polytope
    base: Polytope
    heights: tuple | None = None

    @property
    def is_tight(self) -> bool:
        return len(self.total.vertices) == len(self.base.vertices)


def project_last(P: Polytope) -> Polytope:
    if P.ambient_dim < 2:
        raise ValueError("cannot project a 1-dimensional ambient space")
    return hull(v[:-1] for v in P.vertices)


def as_lift(P: Polytope) -> Lift:
    return Lift(P, project_last(P))


def _heights_vector(Q: Polytope, heights):
    if isinstance(heights, dict):
        return tuple(int(heights[v]) for v in Q.vertices)
    h = tuple(int(x) for x in heights)
    if len(h) != len(Q.vertices):
        raise ValueError(f"expected {len(Q.vertices)} heights, got {len(h)}")
    return h


def tight_lift(Q: Polytope, heights) -> Lift:
    h = _heights_vector(Q, heights)
    P = hull(v + (hv,) for v, hv in zip(Q.vertices, h))
    return Lift(P, Q, h)


def apex_distances(Q: Polytope, v):
    """Lattice distance from ``v`` to the base of every proper face of ``Q``
    that is a pyramid with apex ``v`` (faces of dimension >= 1)."""
    out = []
    for F in face_lattice(Q):
        if F.dim == 0 or F.dim == Q.intrinsic_dim or v not in F.vertices:
            continue
        ok, _, dist = is_pyramid_with_apex(F, v)
        if ok:
            out.append((F, dist))
    return out


def apex_distance_lcm(Q: Polytope, v) -> int:
    return lcm(1, *(d for _, d in apex_distances(Q, v)))


def check_P_h_hypotheses(Q: Polytope, v) -> None:
    """Raise HypothesisError unless ``(Q, v)`` admits the one-vertex lift family."""
    v = intlin.vec(v)
    if v not in Q.vertices:
        raise HypothesisError(f"{v} is not a vertex of Q")
    if not Q.is_full_dimensional:
        raise HypothesisError("Q must be full-dimensional")
    if not is_hollow(Q):
        raise HypothesisError("Q is not hollow")
    rest = [w for w in Q.vertices if w != v]
    if not rest or hull(rest).intrinsic_dim < Q.intrinsic_dim:
        raise HypothesisError(f"Q is a pyramid with apex {v}")
    for F in face_lattice(Q):
        if F.dim == 0 or F.dim == Q.intrinsic_dim or v not in F.vertices:
            continue
        FP = F.as_polytope()
        if is_hollow(FP) or is_pyramid_with_apex(FP, v)[0]:
            continue
        raise HypothesisError(
            f"face {list(F.vertices)} contains {v} but is neither hollow nor a "
            f"pyramid with that apex")


def construct_P_h(Q: Polytope, v, h: int) -> Lift:
    """Tight lift keeping every vertex of ``Q`` at height 0 except ``v`` at ``h``."""
    v = intlin.vec(v)
    check_P_h_hypotheses(Q, v)
    if h == 0:
        raise HypothesisError("h must be nonzero")
    L = tight_lift(Q, {w: (h if w == v else 0) for w in Q.vertices})
    if len(L.total.lattice_points) > len(Q.lattice_points):
        raise AssertionError("P(h) has more lattice points than Q")
    return L


def pyramid_lift(base_lift: Lift, apex, h: int) -> Lift:
    """``conv(F~ u {(apex, h)})`` for a lift ``F~`` of the base of a pyramid."""
    apex = intlin.vec(apex)
    P = hull(list(base_lift.total.vertices) + [apex + (h,)])
    return Lift(P, hull(list(base_lift.base.vertices) + [apex]))


def family_reeve(r: int) -> Polytope:
    if r < 1:
        raise ValueError("Reeve tetrahedra need r >= 1")
    return hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, r)])


def family_hz_base() -> Polytope:
    return hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 2, 3)])


def family_bbk(N: int, a: int) -> Polytope:
    """Empty 4-simplex with vertices e1..e4 and (2, N/2 - 1, a, N/2 - a)."""
    if N <= 0 or N % 4:
        raise ValueError("N must be a positive multiple of 4")
    if gcd(a, N) != 1:
        raise ValueError("a must be coprime to N")
    e = [tuple(int(i == j) for j in range(4)) for i in range(4)]
    return hull(e + [(2, N // 2 - 1, a, N // 2 - a)])


def product_with_segment(P: Polytope, W: int) -> Polytope:
    if W < 1:
        raise ValueError("segment length must be >= 1")
    return hull([v + (0,) for v in P.vertices] + [v + (W,) for v in P.vertices])


def bipyramid_lift(Q: Polytope, u, v, h: int) -> Polytope:
    """``conv(Q x {0} u {(u, h), (v, -h)})``."""
    u, v = intlin.vec(u), intlin.vec(v)
    if u not in Q.lattice_points or v not in Q.lattice_points:
        raise ValueError("u and v must be lattice points of Q")
    if u == v:
        raise ValueError("u and v must differ")
    for n, b in Q.facets:
        if intlin.dot(n, u) == b and intlin.dot(n, v) == b:
            raise ValueError(f"u and v share the facet {n}.x <= {b}")
    if h < 1:
        raise ValueError("h must be positive")
    pts = [w + (0,) for w in Q.vertices] + [u + (h,), v + (-h,)]
    return hull(pts)


def extend_by_one_point(P: Polytope, ell) -> Polytope:
    """A polytope containing ``P`` with exactly one more lattice point and the
    same range of ``ell``."""
    ell = intlin.vec(ell)
    vals = [intlin.dot(ell, v) for v in P.vertices]
    lo, hi = min(vals), max(vals)
    d = P.ambient_dim
    box_lo = [min(v[i] for v in P.vertices) for i in range(d)]
    box_hi = [max(v[i] for v in P.vertices) for i in range(d)]
    q = None
    for k in range(1, 64):
        cands = [x for x in product(*(range(a - k, b + k + 1)
                                      for a, b in zip(box_lo, box_hi)))
                 if lo <= intlin.dot(ell, x) <= hi and x not in P.lattice_points]
        if cands:
            cands.sort(key=lambda x: (sum(max(a - xi, xi - b, 0) for xi, a, b
                                          in zip(x, box_lo, box_hi)), x))
            q = cands[0]
            break
    if q is None:
        raise ValueError("no lattice point found in the slab")
    Q = hull(list(P.vertices) + [q])
    while len(Q.lattice_points) - len(P.lattice_points) > 1:
        v = min(w for w in Q.vertices if w not in P.lattice_points)
        Q = hull(Q.lattice_points - {v})
    return Q


def _affine_reducer(Q: Polytope):
    """Canonical representative of a height vector modulo affine integer
    functions on the vertices of ``Q``."""
    V = tuple(v + (1,) for v in Q.vertices)
    H = intlin.hnf_column(V)
    pivots = []
    j = 0
    for i, row in enumerate(H):
        if j < len(row) and row[j] != 0:
            pivots.append((i, j))
            j += 1

    def reduce(h):
        h = list(h)
        for i, j in pivots:
            p = H[i][j]
            q = h[i] // p
            if q:
                for r in range(len(h)):
                    h[r] -= q * H[r][j]
        return tuple(h)

    return reduce


def lift_class_key(Q: Polytope, heights) -> tuple:
    """Key of a tight lift modulo the lift automorphisms
    ``(x, y) -> (x, +-y + a.x + c)``."""
    reduce = _affine_reducer(Q)
    h = _heights_vector(Q, heights)
    return max(reduce(h), reduce(tuple(-x for x in h)))


@dataclass(frozen=True)
class LiftClass:
    lift: Lift
    size: int
    width: int
    dim: int
    heights: tuple

    def as_record(self) -> dict:
        return {"heights": list(self.heights), "size": self.size,
                "width": self.width, "dim": self.dim,
                "vertices": [list(v) for v in self.lift.total.vertices]}


def enumerate_tight_lifts(Q: Polytope, height_bound: int, size_bound: int,
                          verify: bool = True):
    """Classes of tight lifts with heights in ``[-H, H]`` (first vertex at 0)
    and at most ``size_bound`` lattice points.

    Completeness is only up to the height bound: no cutoff is derived.
    Each class is represented by its reduced height vector (see
    :func:`lift_class_key`).  With ``verify`` every collapsed height vector
    is checked against its representative with an explicit lift map.
    """
    if height_bound < 1:
        raise ValueError("height bound must be >= 1")
    reduce = _affine_reducer(Q)
    k = len(Q.vertices)
    seen = {}
    for tail in product(range(-height_bound, height_bound + 1), repeat=k - 1):
        h = (0,) + tail
        key = max(reduce(h), reduce(tuple(-x for x in h)))
        if key in seen:
            if verify:
                rep = tight_lift(Q, key)
                if find_lift_equivalence(tight_lift(Q, h), rep) is None:
                    raise AssertionError(f"heights {h} and {key} share a key but "
                                         f"are not lift-equivalent")
            continue
        L = tight_lift(Q, key)
        s = len(L.total.lattice_points)
        seen[key] = None
        if s > size_bound:
            continue
        seen[key] = LiftClass(L, s, lattice_width(L.total).value,
                              L.total.intrinsic_dim, key)
    out = [c for c in seen.values() if c is not None]
    out.sort(key=lambda c: (c.size, c.dim, c.heights))
    return out


def same_dimensional_lift_count(T: Polytope) -> int:
    """Index of the lattice spanned by the vertices of the simplex ``T`` in
    the lattice of its affine hull."""
    if len(T.vertices) != T.intrinsic_dim + 1:
        raise ValueError("input is not a simplex")
    if T.intrinsic_dim == 0:
        return 1
    iv = T.intrinsic_vertices()
    M = tuple(intlin.sub(w, iv[0]) for w in iv[1:])
    out = 1
    for e in intlin.elementary_divisors(M):
        out *= e
    return out


def fiber_interval(P: Polytope, q):
    """``(lo, hi)`` of the last coordinate on ``P`` over base point ``q``, or None."""
    q = tuple(q)
    lo, hi = None, None
    for n, b in P.facets:
        c = n[-1]
        slack = Fraction(b) - sum(Fraction(x) * y for x, y in zip(n[:-1], q))
        if c > 0:
            hi = slack / c if hi is None else min(hi, slack / c)
        elif c < 0:
            lo = slack / c if lo is None else max(lo, slack / c)
        elif slack < 0:
            return None
    if lo is None or hi is None or lo > hi:
        return None
    return lo, hi


def fiber_length(P: Polytope, q) -> Fraction:
    iv = fiber_interval(P, q)
    return Fraction(0) if iv is None else iv[1] - iv[0]


def fiber_volume_constant(Q: Polytope, q) -> Fraction:
    """``C`` with ``normalized_volume(P) <= C * fiber_length(P, q)`` for every
    full-dimensional lift ``P`` of ``Q``; ``q`` must be interior to ``Q``.

    After moving ``q`` to the origin, ``P`` sits between two supporting
    hyperplanes through the ends of the fiber, and the volume of that region
    is the integral of ``length * (1 - g)`` over ``Q`` for some ``g`` in the
    polar of ``Q``.  The integral is linear in ``g``, so its maximum is at a
    polar vertex ``n / (b - n.q)`` and evaluates through the centroid.
    """
    if not Q.is_full_dimensional:
        raise ValueError("base must be full-dimensional")
    q = tuple(Fraction(x) for x in q)
    slacks = [b - sum(x * y for x, y in zip(n, q)) for n, b in Q.facets]
    if any(s <= 0 for s in slacks):
        raise ValueError("q must lie in the interior of Q")
    c = centroid(Q)
    worst = min(sum(x * (ci - qi) for x, ci, qi in zip(n, c, q)) / s
                for (n, _), s in zip(Q.facets, slacks))
    d = Q.ambient_dim + 1
    return d * normalized_volume(Q) * (1 - worst)
