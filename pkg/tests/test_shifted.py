import random
from fractions import Fraction

import pytest

from snchar.characters import (factorization_character,
                               normalized_character_class,
                               schur_principal_specialization)
from snchar.errors import SingularMatrixError
from snchar.partitions import MultiRect, expand_shape, make_partition, partitions_of
from snchar.shifted import (falling_factorial, p_sharp,
                            rectangle_character_via_shift_schur,
                            reverse_tableaux, shift_schur, shift_schur_det,
                            shift_schur_rect, shift_schur_tableaux)

P = make_partition


def test_falling_factorial_numbers():
    assert falling_factorial(Fraction(5), 0) == 1
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(Fraction(1, 2), 2) == Fraction(-1, 4)
    with pytest.raises(ValueError):
        falling_factorial(3, -1)


def test_falling_factorial_on_polynomials():
    from snchar.algebra import MultiPoly
    (x,) = MultiPoly.ring("x")
    assert falling_factorial(x, 2) == x * (x - 1)


def test_falling_factorial_theorem_value():
    # (k+m-1)_k at k = m = 2 is the coefficient sum of the positive expansion
    assert falling_factorial(3, 2) == 6
    from snchar.stanley import negate_q, stanley_polynomial
    values = {"p1": 1, "p2": 1, "q1": 1, "q2": 1}
    assert negate_q(stanley_polynomial(2, 2), 2).evaluate(values) == 6


def test_shift_schur_single_box_is_sum():
    for n in (2, 3):
        xs = [Fraction(9), Fraction(4), Fraction(1)][:n]
        assert shift_schur_det(P([1]), xs) == sum(xs)


def test_shift_schur_empty_shape():
    assert shift_schur_det(P([]), [Fraction(4), Fraction(9)]) == 1
    assert shift_schur_tableaux(P([]), [Fraction(4)]) == 1


def test_shift_schur_det_matches_tableaux_at_equal_points():
    assert shift_schur_det(P([2]), [Fraction(3), Fraction(3)]) == \
        shift_schur_tableaux(P([2]), [Fraction(3), Fraction(3)])


@pytest.mark.parametrize("seed", range(4))
def test_shift_schur_det_matches_tableaux_random(seed):
    rng = random.Random(seed)
    for lam in (P([1]), P([2]), P([1, 1]), P([2, 1]), P([3, 2]), P([2, 2, 1])):
        xs = [Fraction(rng.randint(-4, 9), rng.choice([1, 1, 2]))
              for _ in range(max(len(lam), 3))]
        try:
            det_value = shift_schur_det(lam, xs)
        except SingularMatrixError:
            continue
        assert det_value == shift_schur_tableaux(lam, xs)


def test_shift_schur_singular_fallback():
    # points engineered so x_i + n - i collide: x = (1, 2) gives 2, 2
    xs = [Fraction(1), Fraction(2)]
    with pytest.raises(SingularMatrixError):
        shift_schur_det(P([1]), xs)
    assert shift_schur(P([1]), xs) == shift_schur_tableaux(P([1]), xs) == 3


def test_shift_schur_needs_enough_points():
    with pytest.raises(ValueError):
        shift_schur_det(P([1, 1]), [Fraction(1)])


def test_tableau_budget():
    with pytest.raises(ValueError):
        shift_schur_tableaux(P([5, 4]), [Fraction(1)] * 3)


def test_reverse_tableaux_count_is_bounded_entry_ssyt():
    # reversing entries maps these fillings onto semistandard tableaux
    from oracles import ssyt_count_brute
    for lam in (P([2]), P([2, 1]), P([2, 2]), P([3, 1])):
        for bound in (1, 2, 3):
            count = sum(1 for _ in reverse_tableaux(lam, bound))
            assert count == ssyt_count_brute(lam, bound)


def test_shift_schur_rect_examples():
    assert shift_schur_rect(P([1]), 2, 3) == 6
    assert shift_schur_rect(P([2, 2]), 2, 2) == \
        shift_schur_tableaux(P([2, 2]), [Fraction(2), Fraction(2)])
    assert shift_schur_rect(P([1, 1, 1]), 2, 9) == 0  # more rows than p


@pytest.mark.parametrize("p,q", [(2, 2), (3, 2), (2, 3), (4, 3)])
def test_shift_schur_rect_matches_tableaux(p, q):
    for k in range(1, 5):
        for lam in partitions_of(k):
            xs = [Fraction(q)] * p
            assert shift_schur_rect(lam, p, q) == shift_schur_tableaux(lam, xs)


def test_rect_all_ones_relates_to_schur_specialization():
    # at q = content offset 0 ... the tableau count at x = (1,...,1) recovers
    # the principal specialization through the hook content formula
    for p in (1, 2, 3):
        for lam in (P([1]), P([2]), P([2, 1]), P([2, 2])):
            lhs = sum(1 for _ in reverse_tableaux(lam, p))
            assert lhs == schur_principal_specialization(lam, p)


def test_p_sharp_k1_is_box_count():
    for lam in (P([3, 1]), P([2, 2, 2]), P([4])):
        assert p_sharp(P([1]), lam) == lam.n


def test_p_sharp_examples():
    assert p_sharp(P([2]), P([2, 2])) == 0
    assert p_sharp(P([2, 1]), P([3, 1])) == \
        normalized_character_class(P([3, 1]), P([2, 1])) == 8


def test_p_sharp_size_guard():
    with pytest.raises(ValueError):
        p_sharp(P([3]), P([2]))


@pytest.mark.parametrize("n", range(1, 9))
def test_p_sharp_identity_full_sweep(n):
    for lam in partitions_of(n):
        for k in range(1, n + 1):
            for mu in partitions_of(k):
                assert p_sharp(mu, lam, check_stability=False) == \
                    normalized_character_class(lam, mu)


def test_p_sharp_stability_in_padding():
    # run a few cases with the stability double-check enabled
    for lam, mu in ((P([3, 1]), P([2])), (P([4, 2, 1]), P([3, 1])),
                    (P([2, 2]), P([2, 2]))):
        assert p_sharp(mu, lam, check_stability=True) == \
            normalized_character_class(lam, mu)


@pytest.mark.parametrize("k", range(1, 6))
def test_rectangle_chain_reproves_factorization(k):
    for mu in partitions_of(k):
        for p in range(1, 5):
            for q in range(1, 5):
                if p * q < k:
                    continue
                via_shift = rectangle_character_via_shift_schur(p, q, mu)
                brute = factorization_character(p, q, mu)
                rect = expand_shape(MultiRect((p,), (q,)))
                assert via_shift == brute == normalized_character_class(rect, mu)
