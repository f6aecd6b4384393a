"""End-to-end acceptance gate.

One test per acceptance criterion, in order. Every check is an exact
identity (Fraction arithmetic, zero tolerance); the time assertions use the
stated wall-clock budgets.
"""

import itertools
import os
import random
import subprocess
import sys
import time

from qchar.characters import (
    chi_closed_numeric,
    chi_cn_recurrence,
    chi_polynomial,
    chi_series,
    random_admissible_point,
)
from qchar.free_algebra import (
    build_cn,
    verify_entry_recurrence,
    verify_index_symmetry,
)
from qchar.natural_rep import scalar_check, verify_representation_property
from qchar.pbw import hc_of_cn, verify_centrality, verify_propositions
from qchar.poly import MultiPoly
from qchar.structure import all_generators, jacobi_defect


def test_criterion_01_recurrence_equals_series():
    started = time.monotonic()
    for N in (1, 2, 3, 4):
        from_series = chi_series(6, N)
        for m in range(7):
            assert from_series[m].poly == chi_cn_recurrence(m, N).poly, (m, N)
    assert time.monotonic() - started < 10.0


def test_criterion_02_closed_form_is_polynomial():
    started = time.monotonic()
    rng = random.Random("acceptance-closed-form")
    points = 0
    for N in (1, 2, 3):
        for m in range(5):
            poly = chi_polynomial(m, N).poly
            for _ in range(3):
                pt = random_admissible_point(rng, N)
                assert chi_closed_numeric(m, pt) == poly.eval(pt), (m, N, pt)
                points += 1
    assert points >= 20
    assert time.monotonic() - started < 5.0


def test_criterion_03_pbw_oracle_equivalence():
    started = time.monotonic()
    for m, N in itertools.product((0, 1, 2), (1, 2)):
        assert hc_of_cn(2 * m + 1, N) == chi_polynomial(m, N).poly, (m, N)
    assert time.monotonic() - started < 120.0


def test_criterion_04_free_algebra_identities():
    started = time.monotonic()
    for m, N in itertools.product((1, 2, 3), (1, 2, 3)):
        assert build_cn(2 * m, N).is_zero(), (2 * m, N)
    for N in (1, 2, 3):
        for n in range(1, 7):
            assert verify_index_symmetry(n, N), (n, N)
    for N in (1, 2):
        for n in range(1, 5):
            assert verify_entry_recurrence(n, N), (n, N)
    assert time.monotonic() - started < 30.0


def test_criterion_05_centrality():
    started = time.monotonic()
    ns = [1, 3]
    if os.environ.get("QCHAR_LONG_TESTS"):
        ns.append(5)
    for n in ns:
        res = verify_centrality(n, 2)
        assert res.ok, res.offenders
    assert time.monotonic() - started < 120.0


def test_criterion_06_propositions():
    for m, N in itertools.product((1, 2), (1, 2)):
        report = verify_propositions(m, N)
        assert report.ok, report.summary()


def test_criterion_07_natural_rep_scalars():
    started = time.monotonic()
    for N in (1, 2, 3):
        r = scalar_check(1, N)
        assert r.is_scalar and r.scalar == 2, (1, N)
        for n in (3, 5, 7):
            r = scalar_check(n, N)
            assert r.is_scalar and r.scalar == 0, (n, N)
        for n in (2, 4, 6):
            r = scalar_check(n, N)
            assert r.is_scalar and r.scalar == 0, (n, N)
    assert time.monotonic() - started < 30.0


def test_criterion_08_structural_properties():
    for N in (1, 2, 3, 4):
        for m in range(7):
            p = chi_polynomial(m, N).poly
            for c in p.terms.values():
                assert c.denominator == 1, (m, N)
            swapped = list(range(N))
            for k in range(N - 1):
                perm = swapped.copy()
                perm[k], perm[k + 1] = perm[k + 1], perm[k]
                assert p.permuted(perm) == p, (m, N, perm)
            if N > 1:
                reduced = p.subs_var(N - 1, MultiPoly.zero(N)).drop_last_var()
                assert reduced == chi_polynomial(m, N - 1).poly, (m, N)
            if N == 2:
                neg = MultiPoly.var(0, 2).scaled(-1)
                assert p.subs_var(1, neg).is_zero(), (m, N)


def test_criterion_09_jacobi_and_rep_property():
    for N in (1, 2):
        gens = all_generators(N)
        for a, b, c in itertools.product(gens, repeat=3):
            assert jacobi_defect(a, b, c) == [], (a, b, c)
    for N in (1, 2, 3):
        assert verify_representation_property(N)


def test_criterion_10_cli_determinism():
    cmd = [sys.executable, "-m", "qchar.cli", "verify", "--suite", "all"]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    parallel = subprocess.run(cmd + ["--jobs", "2"], capture_output=True, text=True)
    assert first.returncode == 0
    assert second.returncode == 0
    assert parallel.returncode == 0
    assert first.stdout == second.stdout == parallel.stdout
    assert "suite all: PASS" in first.stdout
