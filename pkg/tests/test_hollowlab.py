import json
import os
from itertools import combinations

import pytest

from latpoly import oracles
from latpoly.canon import canonical_form, equivalent
from latpoly.hollowlab import (CATALOG_MATRICES, WIDTH_THREE, CensusRecord, catalog,
                               census_subpolytopes, check_catalog, hollow_projection_directions,
                               is_empty, is_hollow, project_along, vertex_removal_widths)
from latpoly.lifts import family_hz_base, family_reeve
from latpoly.polytope import dilated_simplex, hull, normalized_volume, unit_cube
from latpoly.width import lattice_width, width_along

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def test_catalog_embedded_exactly():
    assert CATALOG_MATRICES["M1"] == ((0, 2, 0, 0), (0, 0, 3, 0), (0, 0, 0, 6))
    assert catalog("M12").vertices[0] == (-1, 1, 0)
    with pytest.raises(KeyError):
        catalog("M13")


def test_catalog_check_passes():
    assert check_catalog() == []


def test_hollow_and_empty():
    assert all(is_hollow(catalog(n)) for n in CATALOG_MATRICES)
    for r in range(1, 21):
        assert is_empty(family_reeve(r))
    assert not is_hollow(dilated_simplex(2, 3))
    assert not is_empty(catalog("M3"))


def test_vertex_removals():
    for n in ("M5", "M10"):
        assert all(w <= 2 for _, w in vertex_removal_widths(catalog(n)))
    assert all(w == 1 for _, w in vertex_removal_widths(dilated_simplex(2, 2)))


def test_census_2simplex():
    recs = census_subpolytopes(dilated_simplex(2, 2), 2)
    assert [(r.size, r.width) for r in recs] == [(6, 2)]
    # exhaustive check over all subsets of the six lattice points
    pts = sorted(dilated_simplex(2, 2).lattice_points)
    for k in range(3, 6):
        for S in combinations(pts, k):
            P = hull(S)
            if P.is_full_dimensional and P != dilated_simplex(2, 2):
                assert oracles.width(P.vertices, 3) <= 1


def test_census_square():
    recs = census_subpolytopes(unit_cube(2), 1)
    assert [(r.size, r.width) for r in recs] == [(4, 1), (3, 1)]


@pytest.mark.parametrize("name", WIDTH_THREE)
def test_census_width3_is_seed_only(name):
    recs = census_subpolytopes(catalog(name), 3)
    assert len(recs) == 1 and recs[0].key == canonical_form(catalog(name)).hex()
    assert recs[0].parent is None


def _bruteforce_classes(seed, min_width):
    """Classes of full-dimensional subpolytopes by exhaustive subset search,
    deduplicated with the brute-force equivalence oracle.

    Widths come from certificates whose minimizer is re-evaluated directly;
    an exhaustive box search would only give an upper bound.
    """
    pts = sorted(seed.lattice_points)
    polys = {}
    d = seed.ambient_dim
    for k in range(d + 1, len(pts) + 1):
        for S in combinations(pts, k):
            P = hull(S)
            if not P.is_full_dimensional or P.lattice_points != frozenset(S):
                continue
            polys[P.vertices] = P
    reps = []
    for P in polys.values():
        cert = lattice_width(P)
        assert width_along(P, cert.minimizer) == cert.value
        if cert.value < min_width:
            continue
        inv = (len(P.lattice_points), len(P.vertices), normalized_volume(P))
        if not any(i == inv and oracles.equivalent(Q.vertices, P.vertices) for i, Q in reps):
            reps.append((inv, P))
    return reps


def test_census_matches_bruteforce_m5():
    recs = census_subpolytopes(catalog("M5"), 2)
    reps = _bruteforce_classes(catalog("M5"), 2)
    assert len(recs) == len(reps) == 34
    assert sorted(r.size for r in recs) == sorted(i[0] for i, _ in reps)


def _golden(name):
    with open(os.path.join(GOLDEN, f"census_{name}_w2.jsonl")) as fh:
        return fh.read()


@pytest.mark.parametrize("name", ["M5", "M6", "M9", "M10"])
def test_census_golden(name):
    recs = census_subpolytopes(catalog(name), 2)
    text = "".join(r.to_json() + "\n" for r in recs)
    assert text == _golden(name)


@pytest.mark.slow
def test_census_golden_m3():
    recs = census_subpolytopes(catalog("M3"), 2)
    assert "".join(r.to_json() + "\n" for r in recs) == _golden("M3")


def test_golden_counts():
    with open(os.path.join(GOLDEN, "census_counts_w2.json")) as fh:
        counts = json.load(fh)
    assert counts == {"M3": 602, "M5": 34, "M6": 131, "M9": 183, "M10": 75}
    for name, n in counts.items():
        lines = _golden(name).splitlines()
        assert len(lines) == n
        recs = [json.loads(l) for l in lines]
        assert all(r["width"] >= 2 and r["dim"] == 3 for r in recs)
        assert sum(r["parent"] is None for r in recs) == 1
        keys = {r["key"] for r in recs}
        assert all(r["parent"] in keys for r in recs if r["parent"])


def test_census_threads_deterministic():
    a = census_subpolytopes(catalog("M10"), 2, threads=1)
    b = census_subpolytopes(catalog("M10"), 2, threads=2)
    assert [r.to_json() for r in a] == [r.to_json() for r in b]


def test_census_records_are_hollow_and_monotone():
    for line in _golden("M6").splitlines():
        r = json.loads(line)
        P = hull(tuple(v) for v in r["vertices"])
        assert is_hollow(P)
        assert lattice_width(P).value == r["width"] <= 3
        assert canonical_form(P).hex() == r["key"]


def test_census_include_degenerate():
    recs = census_subpolytopes(unit_cube(2), 0, include_degenerate=True)
    assert {r.dim for r in recs} == {0, 1, 2}


def test_record_json():
    r = CensusRecord("ab", 4, 1, 2, None, ((0, 0), (1, 0)))
    assert json.loads(r.to_json()) == {"key": "ab", "size": 4, "width": 1, "dim": 2,
                                       "parent": None, "vertices": [[0, 0], [1, 0]]}


def test_projections():
    for r in (1, 5):
        Q, _ = project_along(family_reeve(r), (0, 0, 1))
        assert equivalent(Q, unit_cube(2))[0]
    Q, B = project_along(unit_cube(3), (0, 0, 1))
    assert equivalent(Q, unit_cube(2))[0]
    assert [row[0] for row in B] == [0, 0, 1]


def test_hz_projections_golden():
    got = [(u, Q.vertices) for u, Q in hollow_projection_directions(family_hz_base())]
    assert got == [((0, 1, 1), ((-2, 1), (0, -1), (0, 1))),
                   ((1, 0, 1), ((0, -1), (0, 1), (2, 1)))]
    for _, Q in hollow_projection_directions(family_hz_base()):
        assert lattice_width(Q).value == 2 and is_hollow(Q)
