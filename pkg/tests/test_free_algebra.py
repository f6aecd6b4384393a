from fractions import Fraction

import pytest

from qchar.free_algebra import (
    AlgebraElement,
    bracket_with,
    build_casimir_entry,
    build_cn,
    casimir_entry_words,
    verify_entry_recurrence,
    verify_index_symmetry,
    word_parity,
)
from qchar.structure import gen


def test_construction_and_canonical_form():
    a = AlgebraElement(1, {(gen(1, 1),): Fraction(2), (gen(1, -1),): 0})
    assert a.terms == {(gen(1, 1),): Fraction(2)}
    assert AlgebraElement.zero(2).is_zero()
    assert AlgebraElement.unit(2).terms == {(): Fraction(1)}
    with pytest.raises(ValueError):
        AlgebraElement.from_word((gen(1, 3),), 2)


def test_product_is_concatenation():
    f = AlgebraElement.from_generator(gen(1, 2), 2)
    g = AlgebraElement.from_generator(gen(2, 1), 2)
    prod = f * g
    assert prod.terms == {(gen(1, 2), gen(2, 1)): Fraction(1)}
    assert (f * AlgebraElement.unit(2)) == f
    assert (f * 3).terms == {(gen(1, 2),): Fraction(3)}
    assert (Fraction(1, 2) * f).terms == {(gen(1, 2),): Fraction(1, 2)}


def test_addition_cancels():
    f = AlgebraElement.from_generator(gen(1, 2), 2)
    assert (f - f).is_zero()
    assert f + f == f * 2


def test_rank_mismatch_rejected():
    with pytest.raises(ValueError):
        AlgebraElement.unit(1) + AlgebraElement.unit(2)


def test_word_parity():
    assert word_parity((gen(1, 2), gen(2, 1))) == 0
    assert word_parity((gen(1, -2),)) == 1
    assert word_parity((gen(1, -2), gen(-2, 1))) == 0


def test_bracket_with_signs():
    g = gen(1, -1)
    w = AlgebraElement.from_word((gen(2, -2),), 2)
    out = bracket_with(g, w)
    assert out.terms == {
        (gen(1, -1), gen(2, -2)): Fraction(1),
        (gen(2, -2), gen(1, -1)): Fraction(1),
    }
    even = AlgebraElement.from_word((gen(1, 1),), 2)
    out2 = bracket_with(g, even)
    assert out2.terms == {
        (gen(1, -1), gen(1, 1)): Fraction(1),
        (gen(1, 1), gen(1, -1)): Fraction(-1),
    }


def test_casimir_word_count_and_signs():
    words = list(casimir_entry_words(3, 1, 1, 2))
    assert len(words) == 16
    assert all(s in (-1, 1) for _, s in words)
    assert sum(1 for _, s in words if s == -1) == 8
    assert list(casimir_entry_words(1, 2, -1, 2)) == [((gen(2, -1),), 1)]


def test_c1_and_c2_shape():
    c1 = build_cn(1, 2)
    assert c1.terms == {
        (gen(1, 1),): Fraction(2),
        (gen(2, 2),): Fraction(2),
    }
    assert build_cn(2, 1).is_zero()
    assert build_cn(2, 3).is_zero()


def test_even_cn_vanish():
    for N in (1, 2):
        for n in (2, 4):
            assert build_cn(n, N).is_zero()


def test_index_symmetry_small():
    for N in (1, 2):
        for n in (1, 2, 3, 4):
            assert verify_index_symmetry(n, N)


def test_entry_recurrence_small():
    for N in (1, 2):
        for n in (1, 2, 3):
            assert verify_entry_recurrence(n, N)


def test_entry_matches_direct_product():
    # C^(2)_11 at N=1: k=1 gives F11*F11, k=-1 gives -F(1,-1)*F(-1,1),
    # and F(-1,1) is the same letter as G1 = F(1,-1) after normalization
    f11 = AlgebraElement.from_generator(gen(1, 1), 1)
    g1 = AlgebraElement.from_generator(gen(1, -1), 1)
    assert gen(-1, 1) == gen(1, -1)
    assert build_casimir_entry(2, 1, 1, 1) == f11 * f11 - g1 * g1
