from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from flagbott.weights import (
    Character,
    WeightSample,
    elementary_symmetric,
    eval_character,
    sample_weights,
)

W = WeightSample(Fraction(10), (Fraction(0), Fraction(1)))


def test_eval_examples():
    assert eval_character(Character.make(1, {2: 1, 1: -1}), W) == 11
    assert eval_character(Character.make(0, {}), W) == 0
    assert eval_character(Character.make(-1, {}), W) == -10


def test_eval_index_out_of_range():
    with pytest.raises(IndexError):
        eval_character(Character.make(0, {3: 1}), W)


def test_elementary_symmetric_examples():
    assert elementary_symmetric([Fraction(2), Fraction(3)], 1) == 5
    assert elementary_symmetric([Fraction(2), Fraction(3)], 2) == 6
    assert elementary_symmetric([Fraction(5), Fraction(-7), Fraction(9)], 0) == 1
    with pytest.raises(ValueError):
        elementary_symmetric([Fraction(1)], 2)


def test_sampler_deterministic_and_distinct():
    a = sample_weights(2, 17, 0)
    b = sample_weights(2, 17, 0)
    assert a == b
    assert a != sample_weights(2, 17, 1)
    for attempt in range(5):
        w = sample_weights(6, 3, attempt)
        assert w.hbar != 0
        assert len(set(w.lam)) == 6


small_ints = st.integers(min_value=-9, max_value=9)


def char_strategy():
    return st.builds(
        lambda h, d: Character.make(h, d),
        small_ints,
        st.dictionaries(st.integers(min_value=1, max_value=4), small_ints, max_size=4),
    )


@given(char_strategy(), char_strategy(), st.integers(min_value=0, max_value=100))
def test_eval_is_linear(c1, c2, attempt):
    w = sample_weights(4, 99, attempt)
    assert eval_character(c1 + c2, w) == eval_character(c1, w) + eval_character(c2, w)


@given(st.lists(st.fractions(max_denominator=8), min_size=1, max_size=6))
def test_newton_recurrence(values):
    # k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i  against power sums
    for k in range(1, len(values) + 1):
        rhs = sum(
            (-1) ** (i - 1)
            * elementary_symmetric(values, k - i)
            * sum(v ** i for v in values)
            for i in range(1, k + 1)
        )
        assert k * elementary_symmetric(values, k) == rhs


@given(st.lists(st.fractions(max_denominator=8), min_size=0, max_size=5),
       st.integers(min_value=0, max_value=100))
def test_generating_polynomial_identity(values, attempt):
    # prod_k (t + v_k) = sum_k e_k t^(len-k), at 3 pseudorandom rational t
    m = len(values)
    w = sample_weights(3, 123, attempt)
    for t in w.lam:
        t = t / 1000  # keep magnitudes tame
        lhs = Fraction(1)
        for v in values:
            lhs *= t + v
        rhs = sum(elementary_symmetric(values, k) * t ** (m - k) for k in range(m + 1))
        assert lhs == rhs


def test_weight_sample_invariants():
    with pytest.raises(ValueError):
        WeightSample(Fraction(0), (Fraction(1),))
    with pytest.raises(ValueError):
        WeightSample(Fraction(1), (Fraction(2), Fraction(2)))


def test_scaled_and_permuted():
    w = WeightSample(Fraction(2), (Fraction(3), Fraction(5)))
    assert w.scaled(7).hbar == 14
    assert w.scaled(7).lam == (21, 35)
    assert w.permuted((2, 1)).lam == (5, 3)
