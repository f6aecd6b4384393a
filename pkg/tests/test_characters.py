import itertools
import random
from fractions import Fraction

import pytest

from qchar.characters import (
    SingularPointError,
    chi_closed_numeric,
    chi_cn_recurrence,
    chi_entry_recurrence,
    chi_polynomial,
    chi_series,
    matrix_A,
    pi_factor_series,
    random_admissible_point,
)
from qchar.poly import MultiPoly, TruncatedSeries, geometric_series


def _lam(i: int, N: int) -> MultiPoly:
    return MultiPoly.var(i - 1, N)


def test_matrix_entries():
    for N in (1, 2, 3):
        A = matrix_A(N).entries
        for r in range(N):
            lam = _lam(r + 1, N)
            assert A[r][r] == lam * lam - lam
            for c in range(N):
                if c < r:
                    assert A[r][c].is_zero()
                elif c > r:
                    assert A[r][c] == lam.scaled(-2)


def test_entry_base_case():
    for N in (1, 2, 3):
        for i in range(1, N + 1):
            assert chi_entry_recurrence(0, i, N) == _lam(i, N)


def test_entry_first_step():
    lam1, lam2 = _lam(1, 2), _lam(2, 2)
    assert chi_entry_recurrence(1, 1, 2) == (
        lam1 ** 3 - lam1 ** 2 - (lam1 * lam2).scaled(2)
    )
    assert chi_entry_recurrence(1, 2, 2) == lam2 ** 3 - lam2 ** 2


def test_recurrence_engine_values():
    r = chi_cn_recurrence(0, 2)
    assert r.engine == "recurrence"
    assert (r.N, r.m) == (2, 0)
    assert r.poly == (_lam(1, 2) + _lam(2, 2)).scaled(2)

    lam = _lam(1, 1)
    assert chi_cn_recurrence(1, 1).poly == (lam ** 3 - lam ** 2).scaled(2)
    assert chi_cn_recurrence(2, 1).poly == (lam ** 5 - lam ** 4 * 2 + lam ** 3).scaled(2)


def test_pi_factor_linear_coefficient():
    for N in (1, 2, 3):
        for i in range(1, N + 1):
            s = pi_factor_series(i, 4, N)
            assert s.coeffs[0] == MultiPoly.one(N)
            assert s.coeffs[1] == _lam(i, N).scaled(-2)


def test_pi_factor_is_ratio():
    # factor_i * (1 - l_i(l_i-1) z) should return the plain numerator
    N, order = 2, 5
    lam = _lam(1, N)
    x = lam * lam - lam
    denom = TruncatedSeries.from_dict({0: MultiPoly.one(N), 1: x.scaled(-1)}, order, N)
    numer = TruncatedSeries.from_dict(
        {0: MultiPoly.one(N), 1: (lam * lam + lam).scaled(-1)}, order, N
    )
    assert pi_factor_series(1, order, N) * denom == numer
    assert denom * geometric_series(x, order) == TruncatedSeries.one(order, N)


def test_series_engine_matches_recurrence():
    for N in (1, 2, 3, 4):
        results = chi_series(6, N)
        assert [r.m for r in results] == list(range(7))
        for r in results:
            assert r.engine == "series"
            assert r.poly == chi_cn_recurrence(r.m, N).poly


def test_series_rank_one_closed_shape():
    lam = _lam(1, 1)
    for r in chi_series(4, 1):
        expected = (lam ** (r.m + 1) * (lam - MultiPoly.one(1)) ** r.m).scaled(2)
        assert r.poly == expected


def test_closed_numeric_values():
    assert chi_closed_numeric(1, [Fraction(3)]) == 36
    assert chi_closed_numeric(1, [Fraction(3), Fraction(1)]) == 24
    assert chi_closed_numeric(0, [Fraction(3), Fraction(1)]) == 8
    for m in range(5):
        assert chi_closed_numeric(m, [Fraction(5), Fraction(-5)]) == 0


def test_closed_numeric_singular_point():
    with pytest.raises(SingularPointError) as exc:
        chi_closed_numeric(1, [Fraction(0), Fraction(1)])
    assert "positions 1 and 2" in str(exc.value)


def test_closed_numeric_matches_polynomial():
    rng = random.Random("chars-spot")
    for N in (1, 2, 3):
        poly = chi_polynomial(2, N).poly
        for _ in range(8):
            pt = random_admissible_point(rng, N)
            assert chi_closed_numeric(2, pt) == poly.eval(pt)


def test_admissible_points_are_admissible():
    rng = random.Random("chars-points")
    for _ in range(10):
        pt = random_admissible_point(rng, 4)
        xs = [v * (v - 1) for v in pt]
        assert len(set(xs)) == len(xs)


def test_polynomial_engine_tag_and_values():
    r = chi_polynomial(1, 2)
    assert r.engine == "series"
    lam1, lam2 = _lam(1, 2), _lam(2, 2)
    expected = (
        lam1 ** 3 + lam2 ** 3 - lam1 ** 2 - (lam1 * lam2).scaled(2) - lam2 ** 2
    ).scaled(2)
    assert r.poly == expected


def test_polynomial_integrality():
    for N in (1, 2, 3):
        for m in range(4):
            for c in chi_polynomial(m, N).poly.terms.values():
                assert c.denominator == 1


def test_polynomial_symmetric():
    for N in (2, 3):
        for m in (1, 2, 3):
            p = chi_polynomial(m, N).poly
            for perm in itertools.permutations(range(N)):
                assert p.permuted(list(perm)) == p


def test_polynomial_stability():
    # setting the last variable to zero recovers the rank N-1 character
    for N in (2, 3, 4):
        for m in (1, 2):
            p = chi_polynomial(m, N).poly
            reduced = p.subs_var(N - 1, MultiPoly.zero(N)).drop_last_var()
            assert reduced == chi_polynomial(m, N - 1).poly


def test_polynomial_vanishes_on_opposite_pair():
    lam1 = _lam(1, 2)
    for m in range(4):
        p = chi_polynomial(m, 2).poly
        assert p.subs_var(1, lam1.scaled(-1)).is_zero()


def test_highest_weight_evaluations():
    assert chi_polynomial(0, 3).poly.eval([1, 0, 0]) == 2
    for m in (1, 2, 3):
        assert chi_polynomial(m, 3).poly.eval([1, 0, 0]) == 0


def test_polynomial_matches_rewriting_oracle():
    from qchar.pbw import hc_of_cn

    for N in (1, 2):
        for m in (0, 1, 2):
            assert chi_polynomial(m, N).poly == hc_of_cn(2 * m + 1, N)
