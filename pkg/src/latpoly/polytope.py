"""Lattice polytopes in low dimension.

A :class:`Polytope` is built with :func:`hull` from any finite set of integer
points.  Internally every polytope carries an *intrinsic frame*: a lattice
basis of its affine hull, obtained from the column HNF of the vertex
differences.  Facets, lattice points, interiors and volumes are computed in
intrinsic coordinates, where the polytope is full-dimensional, and mapped
back.  For lower-dimensional polytopes "interior" therefore means relative
interior.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import ceil, floor

from . import intlin
from .intlin import IntVec, dot, sub

MAX_AMBIENT_DIM = 5


@dataclass(frozen=True)
class Frame:
    """Affine lattice chart ``y -> origin + (y, 0..0) @ Uinv`` of an affine hull."""

    origin: IntVec
    U: tuple
    Uinv: tuple
    dim: int

    def to_intrinsic(self, x) -> IntVec:
        return intlin.vecmat(sub(x, self.origin), self.U)[:self.dim]

    def to_ambient(self, y) -> IntVec:
        full = tuple(y) + (0,) * (len(self.origin) - self.dim)
        return intlin.add(self.origin, intlin.vecmat(full, self.Uinv))


def _frame(points) -> Frame:
    d = len(points[0])
    p0 = points[0]
    diffs = tuple(sub(p, p0) for p in points[1:])
    r = intlin.rank(diffs) if diffs else 0
    if r == d:
        return Frame((0,) * d, intlin.identity(d), intlin.identity(d), d)
    if r == 0:
        U = intlin.identity(d)
    else:
        _, U = intlin.hnf_column_with_transform(diffs)
    return Frame(p0, U, intlin.inverse_unimodular(U), r)


def _full_dim_facets(pts, r):
    """Facets of the full-dimensional hull of ``pts`` in Z^r."""
    if r == 0:
        return ()
    if r == 1:
        xs = [p[0] for p in pts]
        return (((-1,), -min(xs)), ((1,), max(xs)))
    seen = set()
    facets = []
    for sub_ in combinations(pts, r):
        base = sub_[0]
        n = intlin.integer_kernel_normal([sub(q, base) for q in sub_[1:]])
        if not any(n):
            continue
        off = dot(n, base)
        if (n, off) in seen:
            continue
        seen.add((n, off))
        seen.add((tuple(-x for x in n), -off))
        lo = hi = False
        for p in pts:
            v = dot(n, p)
            if v > off:
                hi = True
            elif v < off:
                lo = True
            if lo and hi:
                break
        if lo and hi:
            continue
        if hi:
            n, off = tuple(-x for x in n), -off
        facets.append((n, off))
    facets.sort()
    return tuple(facets)


def _points_in(facets, lo, hi):
    """Integer points of ``{y : n.y <= b}`` inside the box ``[lo, hi]``."""
    r = len(lo)
    if r == 0:
        return [()]
    last = [(n, b) for n, b in facets if n[-1] != 0]
    rest = [(n, b) for n, b in facets if n[-1] == 0]
    out = []

    def rec(prefix, k):
        if k == r - 1:
            for n, b in rest:
                if dot(n[:-1], prefix) > b:
                    return
            a, z = lo[-1], hi[-1]
            for n, b in last:
                slack = b - dot(n[:-1], prefix)
                c = n[-1]
                if c > 0:
                    z = min(z, floor(Fraction(slack, c)))
                else:
                    a = max(a, ceil(Fraction(slack, c)))
                if a > z:
                    return
            for t in range(a, z + 1):
                out.append(prefix + (t,))
            return
        for t in range(lo[k], hi[k] + 1):
            rec(prefix + (t,), k + 1)

    rec((), 0)
    return out


@dataclass(frozen=True, eq=False)
class Polytope:
    """A lattice polytope given by its vertices.

    ``facets`` are ambient inequalities ``normal . x <= offset`` with
    primitive outward normals; for lower-dimensional polytopes they are
    completed by ``equations`` (``normal . x == value``) cutting out the
    affine hull.  Facet data in intrinsic coordinates lives in
    ``intrinsic_facets``.
    """

    vertices: tuple
    ambient_dim: int
    intrinsic_dim: int
    frame: Frame = field(repr=False)
    intrinsic_facets: tuple = field(repr=False)
    facets: tuple = field(repr=False)
    equations: tuple = field(repr=False)
    lattice_points: frozenset = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @property
    def dim(self) -> int:
        return self.intrinsic_dim

    @property
    def is_full_dimensional(self) -> bool:
        return self.intrinsic_dim == self.ambient_dim

    def contains(self, x) -> bool:
        return (all(dot(n, x) <= b for n, b in self.facets)
                and all(dot(n, x) == b for n, b in self.equations))

    def intrinsic_vertices(self) -> tuple:
        return tuple(self.frame.to_intrinsic(v) for v in self.vertices)

    def tight_facets(self, x) -> tuple:
        return tuple(i for i, (n, b) in enumerate(self.facets) if dot(n, x) == b)


def hull(points) -> Polytope:
    pts = sorted({intlin.vec(p) for p in points})
    if not pts:
        raise ValueError("hull of an empty point set")
    d = len(pts[0])
    if d == 0 or d > MAX_AMBIENT_DIM or any(len(p) != d for p in pts):
        raise ValueError(f"points must share an ambient dimension in 1..{MAX_AMBIENT_DIM}")
    fr = _frame(pts)
    r = fr.dim
    ipts = [fr.to_intrinsic(p) for p in pts]
    ifacets = _full_dim_facets(ipts, r)
    if r == 0:
        verts = [pts[0]]
    elif r == 1:
        xs = [y[0] for y in ipts]
        verts = [pts[xs.index(min(xs))], pts[xs.index(max(xs))]]
    else:
        verts = []
        for p, y in zip(pts, ipts):
            normals = [n for n, b in ifacets if dot(n, y) == b]
            if len(normals) >= r and intlin.rank(tuple(normals)) == r:
                verts.append(p)
    verts = tuple(sorted(set(verts)))
    ivs = [fr.to_intrinsic(v) for v in verts]
    # ambient normal of an intrinsic inequality: U[:, :r] @ n
    Ur = tuple(row[:r] for row in fr.U)
    facets = []
    for n, b in ifacets:
        an = intlin.matvec(Ur, n)
        facets.append((an, b + dot(an, fr.origin)))
    equations = []
    for k in range(r, d):
        col = tuple(row[k] for row in fr.U)
        equations.append((col, dot(col, fr.origin)))
    lo = tuple(min(y[k] for y in ivs) for k in range(r))
    hi = tuple(max(y[k] for y in ivs) for k in range(r))
    lp = frozenset(fr.to_ambient(y) for y in _points_in(ifacets, lo, hi))
    return Polytope(verts, d, r, fr, ifacets, tuple(facets), tuple(equations), lp)


def lattice_points(P: Polytope) -> frozenset:
    return P.lattice_points


def interior_lattice_points(P: Polytope) -> frozenset:
    """Lattice points in the (relative) interior of ``P``.

    A point polytope is its own relative interior.
    """
    if P.intrinsic_dim == 0:
        return P.lattice_points
    return frozenset(x for x in P.lattice_points
                     if all(dot(n, x) < b for n, b in P.facets))


def boundary_lattice_points(P: Polytope) -> frozenset:
    return P.lattice_points - interior_lattice_points(P)


def size(P: Polytope) -> int:
    return len(P.lattice_points)


def _fan_simplices(verts, r):
    """Triangulate the full-dim polytope conv(verts) in Z^r by recursive fans."""
    if r == 0:
        return [(verts[0],)]
    if r == 1:
        return [(min(verts), max(verts))]
    facets = _full_dim_facets(verts, r)
    apex = min(verts)
    out = []
    for n, b in facets:
        if dot(n, apex) == b:
            continue
        fv = [v for v in verts if dot(n, v) == b]
        F = hull(fv)
        for s in _fan_simplices(list(F.intrinsic_vertices()), r - 1):
            out.append((apex,) + tuple(F.frame.to_ambient(y) for y in s))
    return out


def triangulation(P: Polytope) -> list:
    """Fan triangulation from the lexicographically first vertex.

    Simplices are returned in intrinsic coordinates of ``P``.
    """
    return _fan_simplices(list(P.intrinsic_vertices()), P.intrinsic_dim)


def normalized_volume(P: Polytope) -> int:
    """``dim! * volume`` measured in the lattice of the affine hull."""
    r = P.intrinsic_dim
    if r == 0:
        return 1
    total = 0
    for s in triangulation(P):
        total += abs(intlin.determinant(tuple(sub(q, s[0]) for q in s[1:])))
    return total


def centroid(P: Polytope) -> tuple:
    """Exact barycenter (of the solid polytope), ambient coordinates."""
    r = P.intrinsic_dim
    if r == 0:
        return tuple(Fraction(x) for x in P.vertices[0])
    acc = [Fraction(0)] * r
    total = 0
    for s in triangulation(P):
        w = abs(intlin.determinant(tuple(sub(q, s[0]) for q in s[1:])))
        total += w
        for k in range(r):
            acc[k] += Fraction(w * sum(q[k] for q in s), r + 1)
    y = [a / total for a in acc]
    full = y + [0] * (P.ambient_dim - r)
    return tuple(P.frame.origin[i] + sum(full[k] * P.frame.Uinv[k][i]
                                         for k in range(P.ambient_dim))
                 for i in range(P.ambient_dim))


@dataclass(frozen=True)
class Face:
    polytope: Polytope = field(repr=False, compare=False)
    tight: frozenset
    vertices: tuple
    dim: int

    def as_polytope(self) -> Polytope:
        return hull(self.vertices)


def _affine_rank(points) -> int:
    if len(points) <= 1:
        return 0
    return intlin.rank(tuple(sub(p, points[0]) for p in points[1:]))


def face_lattice(P: Polytope) -> list:
    """All nonempty proper faces, plus ``P`` itself, as Face objects."""
    nf = len(P.facets)
    vsets = {}
    for i in range(nf):
        n, b = P.facets[i]
        vsets[i] = frozenset(v for v in P.vertices if dot(n, v) == b)
    faces = {frozenset(vsets[i]) for i in range(nf)}
    frontier = set(faces)
    while frontier:
        new = set()
        for a in frontier:
            for i in range(nf):
                c = a & vsets[i]
                if c and c not in faces:
                    new.add(c)
        faces |= new
        frontier = new
    out = []
    for vs in faces:
        tight = frozenset(i for i in range(nf) if vs <= vsets[i])
        vt = tuple(sorted(vs))
        out.append(Face(P, tight, vt, _affine_rank(vt)))
    out.append(Face(P, frozenset(), P.vertices, P.intrinsic_dim))
    out.sort(key=lambda f: (f.dim, f.vertices))
    return out


def faces(P: Polytope, k: int) -> list:
    if not 0 <= k < P.intrinsic_dim:
        raise ValueError(f"face dimension must be in [0, {P.intrinsic_dim})")
    return [f for f in face_lattice(P) if f.dim == k]


def lattice_distance(P: Polytope, facet_index: int, x) -> int:
    n, b = P.facets[facet_index]
    return b - dot(n, x)


def is_pyramid_with_apex(P, v):
    """Check whether ``P`` (a Polytope or Face) is a pyramid with apex ``v``.

    Returns ``(True, base_face, distance)`` or ``(False, None, None)``, where
    ``distance`` is the lattice distance from ``v`` to the base hyperplane.
    """
    if isinstance(P, Face):
        P = P.as_polytope()
    v = intlin.vec(v)
    if v not in P.vertices:
        raise ValueError(f"{v} is not a vertex")
    if P.intrinsic_dim == 0:
        return False, None, None
    rest = frozenset(P.vertices) - {v}
    for i, (n, b) in enumerate(P.facets):
        on = frozenset(w for w in P.vertices if dot(n, w) == b)
        if on == rest:
            base = Face(P, frozenset({i}), tuple(sorted(on)), P.intrinsic_dim - 1)
            return True, base, b - dot(n, v)
    return False, None, None


def restrict_to_affine_hull(P: Polytope) -> Polytope:
    """Rewrite ``P`` in a lattice basis of its affine hull."""
    if P.is_full_dimensional:
        raise ValueError("polytope is already full-dimensional")
    if P.intrinsic_dim == 0:
        raise ValueError("a point has no positive-dimensional affine hull")
    return hull(P.intrinsic_vertices())


def translate(P: Polytope, t) -> Polytope:
    return hull(intlin.add(v, t) for v in P.vertices)


def transform(P: Polytope, m: intlin.AffUnimodMap) -> Polytope:
    return hull(intlin.apply(m, v) for v in P.vertices)


def from_columns(matrix) -> Polytope:
    """Polytope whose vertices are the columns of ``matrix``."""
    return hull(intlin.transpose(intlin.mat(matrix)))


def unit_cube(d: int) -> Polytope:
    from itertools import product
    return hull(product((0, 1), repeat=d))


def dilated_simplex(d: int, k: int = 1) -> Polytope:
    pts = [(0,) * d] + [tuple(k * int(i == j) for j in range(d)) for i in range(d)]
    return hull(pts)
