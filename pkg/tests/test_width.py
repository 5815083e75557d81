from itertools import product

import pytest
from hypothesis import given, strategies as st

from latpoly import intlin, oracles
from latpoly.hollowlab import CATALOG_MATRICES, CATALOG_WIDTHS, catalog
from latpoly.lifts import family_hz_base, family_reeve, product_with_segment, project_last
from latpoly.polytope import dilated_simplex, hull, transform, unit_cube
from latpoly.width import (check_certificate, difference_body_polar_box, lattice_width,
                           width_along)

coord3 = st.integers(-3, 3)


def polys3():
    return st.lists(st.tuples(coord3, coord3, coord3), min_size=4, max_size=7).map(hull) \
        .filter(lambda P: P.is_full_dimensional)


def test_width_along_examples():
    assert width_along(unit_cube(3), (0, 0, 1)) == 1
    assert width_along(catalog("M3"), (1, 0, 0)) == 3
    for r in (1, 4, 9):
        assert width_along(family_reeve(r), (0, 0, 1)) == r


def test_polar_box_square():
    box = difference_body_polar_box(unit_cube(2), 1)
    assert box.lo == (-1, -1) and box.hi == (1, 1)
    pts = set(box.points())
    assert pts == {(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)}


def test_polar_box_triangle():
    box = difference_body_polar_box(dilated_simplex(2), 1)
    brute = {l for l in product(range(-2, 3), repeat=2)
             if max(l[0], l[1], 0) - min(l[0], l[1], 0) <= 1}
    assert set(box.points()) == brute
    assert brute - {(0, 0)} == {(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)}


def test_polar_box_zero_bound():
    assert list(difference_body_polar_box(catalog("M1"), 0).points()) == [(0, 0, 0)]
    with pytest.raises(ValueError):
        difference_body_polar_box(hull([(0, 0), (1, 1)]), 1)


@pytest.mark.parametrize("name", list(CATALOG_MATRICES))
def test_catalog_width(name):
    P = catalog(name)
    c = lattice_width(P)
    assert c.value == CATALOG_WIDTHS[name]
    assert lattice_width(P, method="polar").value == c.value
    assert check_certificate(P, c)
    assert oracles.width(P.vertices, 3) == c.value


def test_small_widths():
    assert lattice_width(family_hz_base()).value == 2
    assert lattice_width(unit_cube(2)).value == 1
    assert lattice_width(dilated_simplex(2, 2)).value == 2


def test_reeve_widths_exhaustive():
    for r in range(1, 21):
        T = family_reeve(r)
        assert lattice_width(T).value == 1
    for r in (1, 2, 5):
        assert oracles.width(family_reeve(r).vertices, r + 1) == 1


def test_degenerate_width():
    c = lattice_width(hull([(0, 0, 0), (1, 0, 0), (0, 1, 0)]))
    assert c.value == 0 and c.minimizer == (0, 0, 1)
    assert lattice_width(hull([(1, 2)])).value == 0


def test_record_shape():
    rec = lattice_width(catalog("M3")).as_record()
    assert set(rec) == {"width", "functional", "candidates_examined", "upper_bound"}
    assert rec["width"] == 3 and rec["functional"] == [0, 0, 1]


def test_unknown_method():
    with pytest.raises(ValueError):
        lattice_width(unit_cube(2), method="nope")


@given(polys3())
def test_matches_exhaustive_oracle(P):
    c = lattice_width(P)
    assert c.value == oracles.width(P.vertices, 6)
    assert width_along(P, c.minimizer) == c.value
    assert intlin.is_primitive(c.minimizer) and intlin.first_nonzero_positive(c.minimizer)


@given(polys3())
def test_methods_agree(P):
    a, b = lattice_width(P), lattice_width(P, method="polar")
    assert (a.value, a.minimizer) == (b.value, b.minimizer)


@given(polys3(), st.integers(0, 10**6))
def test_unimodular_invariance(P, seed):
    Q = transform(P, intlin.random_unimodular(3, seed))
    assert lattice_width(Q).value == lattice_width(P).value


@pytest.mark.parametrize("name", list(CATALOG_MATRICES))
def test_catalog_invariance(name):
    P = catalog(name)
    w = CATALOG_WIDTHS[name]
    for s in range(100):
        Q = transform(P, intlin.random_unimodular(3, s))
        assert lattice_width(Q).value == w


@given(polys3())
def test_projection_does_not_decrease_width(P):
    assert lattice_width(P).value <= lattice_width(project_last(P)).value


@given(st.integers(1, 3).flatmap(
    lambda d: st.lists(st.tuples(*[st.integers(-2, 2)] * d), min_size=d + 1, max_size=6)),
    st.integers(1, 4))
def test_product_law(pts, W):
    P = hull(pts)
    if not P.is_full_dimensional:
        return
    assert lattice_width(product_with_segment(P, W)).value == min(lattice_width(P).value, W)
