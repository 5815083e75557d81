"""Reproduction checks run by ``latpoly verify`` and the acceptance tests.

Each check returns a :class:`CheckResult`; ``run_all`` runs them in order.
Runtime budgets are part of the check.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import gcd

from . import intlin, oracles
from .canon import canonical_form, equivalent, lift_equivalent
from .hollowlab import (CATALOG_MATRICES, CATALOG_WIDTHS, WIDTH_THREE, catalog,
                        census_subpolytopes, is_empty, is_hollow, vertex_removal_widths)
from .lifts import (Lift, family_bbk, family_hz_base, family_reeve, product_with_segment,
                    project_last, pyramid_lift, tight_lift)
from .polytope import (Polytope, dilated_simplex, hull, interior_lattice_points,
                       is_pyramid_with_apex, normalized_volume, size, transform, unit_cube)
from .width import lattice_width

TRIALS = 100


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    budget: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} [{self.number:2d}] {self.title}: {self.detail} "
                f"({self.seconds:.2f}s / {self.budget:g}s)")


def _timed(number, title, budget):
    def deco(fn):
        def run() -> CheckResult:
            t = time.perf_counter()
            try:
                ok, detail = fn()
            except Exception as e:  # reported, not raised: verify must print every line
                ok, detail = False, f"error: {type(e).__name__}: {e}"
            dt = time.perf_counter() - t
            if ok and dt > budget:
                ok, detail = False, detail + f"; over time budget"
            return CheckResult(number, title, ok, detail, dt, budget)
        run.number = number
        run.title = title
        return run
    return deco


@_timed(1, "catalog widths", 5)
def check_catalog_widths():
    got = tuple(lattice_width(catalog(n)).value for n in CATALOG_MATRICES)
    want = (2, 2, 3, 2, 3, 3, 2, 2, 3, 3, 2, 2)
    return got == want, f"widths {got}"


@_timed(2, "catalog hollow and pairwise inequivalent", 5)
def check_catalog_hollow():
    polys = [catalog(n) for n in CATALOG_MATRICES]
    hollow = all(is_hollow(P) for P in polys)
    keys = {canonical_form(P).key for P in polys}
    return hollow and len(keys) == 12, f"hollow={hollow}, distinct keys={len(keys)}"


@_timed(3, "single-vertex removals of width-3 polytopes have width <= 2", 30)
def check_vertex_removals():
    worst = {}
    for n in WIDTH_THREE:
        worst[n] = max(w for _, w in vertex_removal_widths(catalog(n)))
    return all(w <= 2 for w in worst.values()), f"max removal width {worst}"


@_timed(4, "width-3 census: each width-3 seed is its only width-3 subpolytope", 1800)
def check_census_width3():
    counts = {}
    ok = True
    for n in WIDTH_THREE:
        seed = catalog(n)
        recs = census_subpolytopes(seed, 3)
        counts[n] = len(recs)
        ok &= len(recs) == 1 and recs[0].key == canonical_form(seed).hex()
    return ok, f"classes {counts}"


@_timed(5, "M9 is a pyramid over a polygon with 3 interior points", 1)
def check_m9():
    M9 = catalog("M9")
    apex = next(v for v in M9.vertices if v[2] == 3)
    ok, base, dist = is_pyramid_with_apex(M9, apex)
    if not ok:
        return False, "no pyramid structure found"
    inner = interior_lattice_points(base.as_polytope())
    return len(inner) == 3, f"apex {apex}, height {dist}, base interior points {len(inner)}"


@_timed(6, "hollow polygons: square width 1, 2D2 width 2 and alone in its census", 1)
def check_polygons():
    sq = lattice_width(unit_cube(2)).value
    T = dilated_simplex(2, 2)
    w = lattice_width(T).value
    recs = census_subpolytopes(T, 2)
    alone = len(recs) == 1 and recs[0].key == canonical_form(T).hex()
    return sq == 1 and w == 2 and alone, f"square {sq}, 2D2 {w}, census classes {len(recs)}"


@_timed(7, "Reeve tetrahedra r=1..20", 10)
def check_reeve():
    square = unit_cube(2)
    bad = []
    polys = {}
    for r in range(1, 21):
        T = family_reeve(r)
        pts = oracles.lattice_points(T.vertices)
        vol = abs(oracles.cofactor_det([list(intlin.sub(v, T.vertices[0]))
                                        for v in T.vertices[1:]]))
        if not (size(T) == 4 == len(pts) and is_empty(T) and normalized_volume(T) == r == vol
                and lattice_width(T).value == 1 and project_last(T) == square):
            bad.append(r)
        polys[r] = T
    keys = {canonical_form(polys[r]).key for r in range(2, 21)}
    distinct = len(keys) == 19
    for r, s in combinations(range(2, 21), 2):
        if equivalent(polys[r], polys[s])[0]:
            distinct = False
    return not bad and distinct, f"failures {bad}, pairwise inequivalent={distinct}"


@_timed(8, "HZ base is hollow of width 2", 1)
def check_hz():
    Q = family_hz_base()
    w = lattice_width(Q).value
    return is_hollow(Q) and w == 2, f"hollow={is_hollow(Q)}, width {w}, size {size(Q)}"


def bbk_parameters():
    for N in range(4, 41, 4):
        for a in range(1, N):
            if gcd(a, N) == 1:
                yield N, a


@_timed(9, "BBK empty 4-simplices, N = 4..40", 30)
def check_bbk():
    bad = []
    widths = {}
    keys_by_N = {}
    for N, a in bbk_parameters():
        S = family_bbk(N, a)
        w = lattice_width(S).value
        widths.setdefault(N, set()).add(w)
        if not (len(S.vertices) == 5 and size(S) == 5 and normalized_volume(S) == N
                and 1 <= w <= 3):
            bad.append((N, a))
        keys_by_N.setdefault(N, set()).add(canonical_form(S).key)
    clash = any(keys_by_N[M] & keys_by_N[N] for M, N in combinations(sorted(keys_by_N), 2))
    wsum = {N: sorted(v) for N, v in widths.items()}
    return not bad and not clash, f"failures {bad}, cross-N clash={clash}, widths {wsum}"


def random_polytope(rng, d, lo=-2, hi=2, npts=(4, 7)):
    """Random full-dimensional lattice polytope with coordinates in [lo, hi]."""
    while True:
        pts = {tuple(rng.randint(lo, hi) for _ in range(d))
               for _ in range(rng.randint(*npts))}
        if len(pts) > d:
            P = hull(pts)
            if P.is_full_dimensional:
                return P


def _prop_invariance(rng):
    P = random_polytope(rng, rng.choice((2, 3)))
    m = intlin.random_unimodular(P.ambient_dim, rng.randrange(10**9))
    Q = transform(P, m)
    return (lattice_width(P).value == lattice_width(Q).value and size(P) == size(Q)
            and normalized_volume(P) == normalized_volume(Q))


def _prop_monotone(rng):
    P = random_polytope(rng, 3)
    pts = sorted(P.lattice_points)
    while True:
        sub = rng.sample(pts, rng.randint(4, len(pts)))
        C = hull(sub)
        if C.is_full_dimensional:
            break
    wp = lattice_width(P).value
    return (lattice_width(C).value <= wp
            and wp <= lattice_width(project_last(P)).value)


def _prop_product(rng):
    P = random_polytope(rng, rng.choice((1, 2, 3)), npts=(2, 6))
    W = rng.randint(1, 4)
    return lattice_width(product_with_segment(P, W)).value == min(lattice_width(P).value, W)


def _prop_pyramid_period(rng):
    # base F in the plane x3 = 0 of Z^3, apex at height m, F lifted to Z^4
    while True:
        F = random_polytope(rng, 2, npts=(3, 5))
        m = rng.randint(1, 3) * rng.choice((1, -1))
        apex = (rng.randint(-2, 2), rng.randint(-2, 2), m)
        Fz = hull(v + (0,) for v in F.vertices)
        if len(Fz.vertices) >= 3:
            break
    Ft = tight_lift(Fz, [rng.randint(-3, 3) for _ in Fz.vertices])
    h = rng.randint(-4, 4)
    return lift_equivalent(pyramid_lift(Ft, apex, h), pyramid_lift(Ft, apex, h + abs(m)))


def _prop_canon_vs_bruteforce(rng):
    d = rng.choice((2, 3))
    P = random_polytope(rng, d, npts=(d + 1, 6))
    if len(P.vertices) > 6:
        P = hull(P.vertices[:6]) if hull(P.vertices[:6]).is_full_dimensional else P
    if rng.random() < 0.5:
        Q = transform(P, intlin.random_unimodular(d, rng.randrange(10**9), steps=4,
                                                  coeff=1, shift=2))
    else:
        Q = random_polytope(rng, d, npts=(len(P.vertices), len(P.vertices)))
    if len(P.vertices) > 6 or len(Q.vertices) > 6:
        return True
    fast = canonical_form(P) == canonical_form(Q)
    return fast == oracles.equivalent(P.vertices, Q.vertices)


def _prop_width_vs_bruteforce(rng):
    P = random_polytope(rng, 3, lo=-3, hi=3)
    return lattice_width(P).value == oracles.width(P.vertices, 6)


PROPERTIES = {
    "unimodular invariance of width/size/volume": _prop_invariance,
    "width monotone under subpolytopes and projection": _prop_monotone,
    "product law width(P x [0,W]) = min(width P, W)": _prop_product,
    "pyramid lift periodicity": _prop_pyramid_period,
    "canonical form agrees with brute-force equivalence": _prop_canon_vs_bruteforce,
    "lattice width agrees with exhaustive functional search": _prop_width_vs_bruteforce,
}


def run_property(name, trials=TRIALS, seed=0):
    fn = PROPERTIES[name]
    rng = random.Random(f"{seed}:{name}")
    failures = [t for t in range(trials) if not fn(rng)]
    return failures


@_timed(10, "property suites (100 trials each)", 300)
def check_properties():
    failed = {}
    for name in PROPERTIES:
        f = run_property(name)
        if f:
            failed[name] = f
    return not failed, ("all hold" if not failed else f"failing trials {failed}")


CHECKS = (check_catalog_widths, check_catalog_hollow, check_vertex_removals,
          check_census_width3, check_m9, check_polygons, check_reeve, check_hz,
          check_bbk, check_properties)


def run_all(only=None):
    return [c() for c in CHECKS if only is None or c.number in only]
