import random
from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from latpoly import intlin, oracles
from latpoly.hollowlab import catalog
from latpoly.lifts import family_reeve
from latpoly.polytope import (boundary_lattice_points, centroid, dilated_simplex, faces,
                              hull, interior_lattice_points, is_pyramid_with_apex,
                              lattice_points, normalized_volume, restrict_to_affine_hull,
                              size, transform, triangulation, unit_cube)

coord = st.integers(-2, 2)


def point_sets(d, lo=4, hi=7):
    return st.lists(st.tuples(*[coord] * d), min_size=lo, max_size=hi)


def test_hull_square():
    P = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert P.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert len(P.facets) == 4 and P.is_full_dimensional


def test_hull_m3():
    P = catalog("M3")
    assert len(P.vertices) == 4 and len(P.facets) == 4


def test_hull_segment_with_midpoint():
    P = hull([(0, 0), (1, 0), (2, 0)])
    assert P.vertices == ((0, 0), (2, 0))
    assert P.intrinsic_dim == 1 and P.ambient_dim == 2


def test_lattice_point_counts():
    assert size(unit_cube(3)) == 8
    T = dilated_simplex(2, 2)
    box = {x for x in product(range(3), repeat=2) if x[0] + x[1] <= 2}
    assert lattice_points(T) == box
    assert size(catalog("M3")) == comb(6, 3) == 20


def test_interior_points():
    assert not interior_lattice_points(unit_cube(3))
    base = hull([(-1, 0), (2, 0), (0, -1), (0, 2)])
    assert len(interior_lattice_points(base)) == 3
    T3 = dilated_simplex(2, 3)
    brute = {x for x in product(range(4), repeat=2) if x[0] > 0 and x[1] > 0 and sum(x) < 3}
    assert interior_lattice_points(T3) == brute == {(1, 1)}


def test_relative_interior_of_lower_dimensional():
    seg = hull([(0, 0, 0), (2, 2, 0)])
    assert interior_lattice_points(seg) == {(1, 1, 0)}
    assert boundary_lattice_points(seg) == {(0, 0, 0), (2, 2, 0)}


def test_sizes_and_volumes():
    D3 = dilated_simplex(3)
    assert size(D3) == 4 and normalized_volume(D3) == 1
    T7 = family_reeve(7)
    assert size(T7) == 4 and normalized_volume(T7) == 7
    assert normalized_volume(catalog("M1")) == 2 * 3 * 6


def test_faces():
    assert len(faces(unit_cube(2), 1)) == 4
    F = faces(catalog("M10"), 2)
    assert sorted(len(f.vertices) for f in F) == [3, 3, 4, 4, 4]
    assert len(faces(dilated_simplex(4), 0)) == 5
    with pytest.raises(ValueError):
        faces(unit_cube(2), 2)


def test_pyramid():
    D3 = dilated_simplex(3)
    for v in D3.vertices:
        ok, base, dist = is_pyramid_with_apex(D3, v)
        assert ok and dist == 1 and v not in base.vertices and len(base.vertices) == 3
    ok, base, dist = is_pyramid_with_apex(catalog("M9"), (1, 1, 3))
    assert ok and dist == 3
    for v in unit_cube(2).vertices:
        assert not is_pyramid_with_apex(unit_cube(2), v)[0]
    with pytest.raises(ValueError):
        is_pyramid_with_apex(D3, (5, 5, 5))


def test_restrict_to_affine_hull():
    S = restrict_to_affine_hull(hull([(0, 0), (2, 2)]))
    assert S.ambient_dim == 1 and size(S) == 3
    assert len({x for x in product(range(3), repeat=2) if x[0] == x[1]}) == 3
    S = restrict_to_affine_hull(hull([(0, 0), (1, 2)]))
    assert S.ambient_dim == 1 and size(S) == 2
    T = restrict_to_affine_hull(hull([(0, 0, 0), (1, 0, 0), (0, 1, 0)]))
    assert T.ambient_dim == 2 and normalized_volume(T) == 1 and size(T) == 3


def test_centroid_exact():
    c = centroid(dilated_simplex(2, 3))
    assert c == (1, 1)
    assert centroid(unit_cube(2)) == (Fraction(1, 2), Fraction(1, 2))


def test_volume_additivity_cube_plus_apex():
    # the apex lies beyond the top facet only, so the hull is cube + pyramid
    C = unit_cube(3)
    top = hull(v for v in C.vertices if v[2] == 1)
    P = hull(C.vertices + ((0, 0, 2),))
    assert normalized_volume(P) == normalized_volume(C) + normalized_volume(
        restrict_to_affine_hull(top)) == 8


@given(point_sets(2) | point_sets(3))
def test_lattice_points_match_oracle(pts):
    P = hull(pts)
    if not P.is_full_dimensional:
        return
    assert lattice_points(P) == oracles.lattice_points(list(P.vertices))


@given(point_sets(2) | point_sets(3))
def test_vertex_facet_duality(pts):
    P = hull(pts)
    assert hull(P.lattice_points) == P
    for n, b in P.facets:
        on = [v for v in P.vertices if intlin.dot(n, v) == b]
        assert all(intlin.dot(n, v) <= b for v in P.vertices)
        assert intlin.rank(tuple(intlin.sub(v, on[0]) for v in on[1:])) == P.intrinsic_dim - 1 \
            if len(on) > 1 else P.intrinsic_dim == 1


@given(point_sets(2) | point_sets(3), st.integers(0, 10**6))
def test_unimodular_invariance(pts, seed):
    P = hull(pts)
    Q = transform(P, intlin.random_unimodular(P.ambient_dim, seed))
    assert size(Q) == size(P)
    assert normalized_volume(Q) == normalized_volume(P)
    assert len(interior_lattice_points(Q)) == len(interior_lattice_points(P))


@given(point_sets(2) | point_sets(3))
def test_interior_subset_and_volume_oracle(pts):
    P = hull(pts)
    assert interior_lattice_points(P) <= lattice_points(P)
    if P.is_full_dimensional:
        d = P.ambient_dim
        vol = sum(abs(oracles.cofactor_det([list(intlin.sub(v, S[0])) for v in S[1:]]))
                  for S in triangulation(P))
        assert normalized_volume(P) == vol


@pytest.mark.parametrize("seed", range(15))
def test_volume_additivity_of_unit_pyramid(seed):
    rng = random.Random(seed)
    P = hull([tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(6)])
    if not P.is_full_dimensional:
        P = dilated_simplex(3, 2)
    n, b = P.facets[0]
    F = hull(v for v in P.vertices if intlin.dot(n, v) == b)
    # an apex at lattice distance one beyond the facet
    target = [x for x in product(range(-6, 7), repeat=3) if intlin.dot(n, x) == b + 1]
    apex = min(target, key=lambda x: sum(abs(c) for c in x))
    Pyr = hull(F.vertices + (apex,))
    assert normalized_volume(Pyr) == normalized_volume(restrict_to_affine_hull(F))
