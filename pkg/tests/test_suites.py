import pytest

from qchar.suites import SUITE_NAMES, build_cases, run_suite


def test_suite_names():
    assert "all" in SUITE_NAMES
    assert set(SUITE_NAMES) >= {"identities", "pbw", "natrep", "cross"}


def test_unknown_suite():
    with pytest.raises(ValueError):
        build_cases("everything")


def test_case_ids_unique():
    cases = build_cases("all")
    ids = [cid for cid, _ in cases]
    assert len(ids) == len(set(ids))
    assert len(ids) > 0


def test_cross_suite_passes():
    report = run_suite("cross")
    assert report.ok
    assert report.suite == "cross"
    assert all(c.ok for c in report.cases)
    assert "suite cross: PASS" in report.render()


def test_parallel_run_is_deterministic():
    small = dict(N=2, max_m=2)
    one = run_suite("cross", **small, jobs=1)
    two = run_suite("cross", **small, jobs=2)
    assert one.render() == two.render()


def test_reduced_bounds_shrink_case_list():
    full = build_cases("identities")
    small = build_cases("identities", N=1, max_n=2)
    assert len(small) < len(full)
