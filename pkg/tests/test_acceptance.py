"""Reproduction criteria, one test each.

Every test prints a single PASS/FAIL line (visible with ``pytest -s`` or
in the ``-v`` captured output on failure).  Time budgets are enforced by
the checks themselves and listed next to each line.
"""
import time

import pytest

from latpoly import checks


def _run(check):
    r = check()
    print(r.line())
    assert r.passed, r.line()


def test_01_catalog_widths():
    _run(checks.check_catalog_widths)


def test_02_catalog_hollow_and_distinct():
    _run(checks.check_catalog_hollow)


def test_03_vertex_removals_drop_width():
    _run(checks.check_vertex_removals)


def test_04_width_three_census_wH3_is_3():
    _run(checks.check_census_width3)


def test_05_m9_pyramid_base():
    _run(checks.check_m9)


def test_06_polygons_wE2_is_1_wH2_is_2():
    _run(checks.check_polygons)


def test_07_reeve_tetrahedra():
    _run(checks.check_reeve)


def test_08_hz_base():
    _run(checks.check_hz)


def test_09_bbk_empty_simplices():
    _run(checks.check_bbk)


@pytest.mark.parametrize("name", list(checks.PROPERTIES))
def test_10_property_suites(name):
    t = time.perf_counter()
    failures = checks.run_property(name)
    _PROPERTY_SECONDS[name] = time.perf_counter() - t
    status = "PASS" if not failures else "FAIL"
    print(f"{status} [10] {name}: {checks.TRIALS} trials, failing {failures}")
    assert not failures


def test_10_property_suites_time_budget():
    total = sum(_PROPERTY_SECONDS.values())
    ok = len(_PROPERTY_SECONDS) == len(checks.PROPERTIES) and total < 300
    print(f"{'PASS' if ok else 'FAIL'} [10] property suites total time {total:.1f}s / 300s")
    assert ok


_PROPERTY_SECONDS = {}
