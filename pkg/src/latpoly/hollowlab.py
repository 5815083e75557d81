"""Hollow and empty polytopes, the maximal hollow 3-polytope catalog, and the
subpolytope census."""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations

from . import intlin
from .canon import canonical_form
from .polytope import Polytope, from_columns, hull, interior_lattice_points
from .width import lattice_width

# Vertices are the columns, exactly as printed in the classification of
# maximal hollow lattice 3-polytopes.
CATALOG_MATRICES = {
    "M1": ((0, 2, 0, 0), (0, 0, 3, 0), (0, 0, 0, 6)),
    "M2": ((0, 2, 0, 0), (0, 0, 4, 0), (0, 0, 0, 4)),
    "M3": ((0, 3, 0, 0), (0, 0, 3, 0), (0, 0, 0, 3)),
    "M4": ((0, 1, 2, 3), (0, 0, 4, 0), (0, 0, 0, 4)),
    "M5": ((0, 1, 2, 3), (0, 0, 5, 0), (0, 0, 0, 5)),
    "M6": ((0, 3, 1, 2), (0, 0, 3, 0), (0, 0, 0, 3)),
    "M7": ((0, 4, 1, 2), (0, 0, 2, 0), (0, 0, 0, 4)),
    "M8": ((2, -2, 0, 0, 1), (0, 0, 2, -2, 1), (0, 0, 0, 0, 2)),
    "M9": ((-1, 2, 0, 0, 1), (0, 0, -1, 2, 1), (0, 0, 0, 0, 3)),
    "M10": ((1, 0, -1, 2, 1, 0), (0, 1, -1, 2, 3, 1), (0, 0, 0, 3, 3, 3)),
    "M11": ((1, -1, 0, 2, 0, 1), (0, 0, 2, 0, 0, 2), (0, 0, 0, 2, 2, 2)),
    "M12": ((0, -1, 1, 0, 1, 0, 2, 1), (0, 1, 1, 2, 1, 2, 2, 3),
            (0, 0, 0, 0, 2, 2, 2, 2)),
}
CATALOG_WIDTHS = {"M1": 2, "M2": 2, "M3": 3, "M4": 2, "M5": 3, "M6": 3,
                  "M7": 2, "M8": 2, "M9": 3, "M10": 3, "M11": 2, "M12": 2}
WIDTH_THREE = ("M3", "M5", "M6", "M9", "M10")


def catalog(name: str) -> Polytope:
    try:
        return from_columns(CATALOG_MATRICES[name])
    except KeyError:
        raise KeyError(f"unknown catalog polytope {name!r}; expected M1..M12") from None


def is_hollow(P: Polytope) -> bool:
    return not interior_lattice_points(P)


def is_empty(P: Polytope) -> bool:
    return len(P.lattice_points) == len(P.vertices)


def check_catalog():
    """Return the list of catalog entries failing hollowness or their width."""
    bad = []
    for name in CATALOG_MATRICES:
        P = catalog(name)
        if not is_hollow(P) or lattice_width(P).value != CATALOG_WIDTHS[name]:
            bad.append(name)
    return bad


@dataclass(frozen=True)
class CensusRecord:
    key: str
    size: int
    width: int
    dim: int
    parent: str | None
    vertices: tuple = field(compare=False)

    def to_json(self) -> str:
        d = asdict(self)
        d["vertices"] = [list(v) for v in self.vertices]
        return json.dumps(d, separators=(",", ":"))


class CensusInvariantError(AssertionError):
    pass


def _children(points, include_degenerate=False):
    """Point sets obtained by deleting one vertex of ``hull(points)``."""
    P = hull(points)
    out = []
    for v in P.vertices:
        rest = points - {v}
        if not rest:
            continue
        out.append(rest)
    return P, out


def _expand(job):
    """Worker: evaluate every child of one node."""
    points, parent_width, parent_hollow, min_width, include_degenerate = job
    P, kids = _children(points)
    results = []
    for rest in kids:
        C = hull(rest)
        if C.lattice_points != rest:
            raise CensusInvariantError("deleting a vertex changed other lattice points")
        w = lattice_width(C).value
        if w > parent_width:
            raise CensusInvariantError(f"child width {w} exceeds parent width {parent_width}")
        # relative interiors of lower-dimensional children may contain points
        if parent_hollow and C.is_full_dimensional and not is_hollow(C):
            raise CensusInvariantError("child of a hollow polytope is not hollow")
        if not C.is_full_dimensional and not include_degenerate:
            results.append((rest, None, w, None))
            continue
        if w < min_width:
            results.append((rest, None, w, None))
            continue
        results.append((rest, canonical_form(C).hex(), w, C.vertices))
    return results


def census_subpolytopes(seed: Polytope, min_width: int, include_degenerate=False,
                        threads: int = 1):
    """All subpolytopes of ``seed`` of width at least ``min_width``, up to
    unimodular equivalence, ordered by size (descending) then key.

    The walk is breadth-first by size: children of a node delete one vertex
    of its lattice point set.  Width cannot grow along the walk, so nodes of
    smaller width are pruned.
    """
    root_pts = frozenset(seed.lattice_points)
    root = hull(root_pts)
    w0 = lattice_width(root).value
    if w0 < min_width:
        return []
    root_key = canonical_form(root).hex()
    records = {root_key: CensusRecord(root_key, len(root_pts), w0, root.intrinsic_dim,
                                      None, root.vertices)}
    level = [(root_key, root_pts, w0, is_hollow(root))]
    visited_sets = {root_pts}
    pool = ProcessPoolExecutor(threads) if threads > 1 else None
    try:
        while level:
            jobs = [(pts, w, hol, min_width, include_degenerate)
                    for _, pts, w, hol in level]
            if pool is None:
                results = [_expand(j) for j in jobs]
            else:
                results = list(pool.map(_expand, jobs, chunksize=4))
            nxt = []
            for (pkey, _, _, _), res in zip(level, results):
                for rest, key, w, verts in res:
                    if rest in visited_sets:
                        continue
                    visited_sets.add(rest)
                    if key is None or key in records:
                        continue
                    C = hull(verts)
                    records[key] = CensusRecord(key, len(rest), w, C.intrinsic_dim,
                                                pkey, verts)
                    nxt.append((key, rest, w, is_hollow(C)))
            nxt.sort(key=lambda t: t[0])
            level = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    return sorted(records.values(), key=lambda r: (-r.size, r.key))


def write_census(records, path):
    with open(path, "w") as fh:
        for r in records:
            fh.write(r.to_json() + "\n")


def default_threads() -> int:
    return int(os.environ.get("LATPOLY_THREADS", "1"))


def vertex_removal_widths(P: Polytope):
    """Width of ``hull(lattice_points(P) - {v})`` for each vertex ``v``."""
    out = []
    for v in P.vertices:
        rest = P.lattice_points - {v}
        out.append((v, lattice_width(hull(rest)).value if rest else 0))
    return out


def project_along(P: Polytope, u) -> tuple:
    """Project ``P`` onto ``Z^d / Z u`` for a primitive ``u``.

    Returns ``(projected polytope, matrix B)`` where the projection of ``x``
    is ``(B^-1 x)[1:]`` and ``B`` is unimodular with first column ``u``.
    """
    B = intlin.complete_to_basis(u)
    Binv = intlin.inverse_unimodular(B)
    Q = hull(intlin.matvec(Binv, v)[1:] for v in P.vertices)
    return Q, B


def hollow_projection_directions(P: Polytope):
    """Lattice projections of ``P`` along primitive ``u`` in ``P - P`` whose
    image is a hollow full-dimensional polytope.

    The candidate directions (primitive lattice points of the difference
    body) are a heuristic set; they are not proven to catch every hollow
    projection.
    """
    if not P.is_full_dimensional:
        raise ValueError("projection directions need a full-dimensional polytope")
    diff = hull({intlin.sub(a, b) for a, b in combinations(P.vertices, 2)}
                | {intlin.sub(b, a) for a, b in combinations(P.vertices, 2)})
    dirs = sorted(u for u in diff.lattice_points
                  if any(u) and intlin.first_nonzero_positive(u) and intlin.is_primitive(u))
    out = []
    for u in dirs:
        Q, _ = project_along(P, u)
        if Q.is_full_dimensional and is_hollow(Q):
            out.append((u, Q))
    return out
