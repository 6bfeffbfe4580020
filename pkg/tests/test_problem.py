from itertools import combinations

import pytest

from flagbott.errors import BetaOutOfRange, DimensionMismatch, ShapeInvalid
from flagbott.problem import FlagShape, dim_fquot, validate_problem


def all_shapes(n):
    for l in range(1, n):
        for s in combinations(range(1, n), l):
            yield FlagShape(n, s)


def test_dim_examples():
    assert dim_fquot(FlagShape(4, (2,)), (1,)) == 8
    for d in range(6):
        assert dim_fquot(FlagShape(2, (1,)), (d,)) == 1 + 2 * d
    assert dim_fquot(FlagShape(3, (1, 2)), (0, 0)) == 3


def test_dim_at_zero_is_flag_manifold_dimension():
    for n in range(2, 9):
        for shape in all_shapes(n):
            expected = sum(
                shape.s_ext(i) * (shape.s_ext(i + 1) - shape.s_ext(i))
                for i in range(1, shape.l + 1)
            )
            assert dim_fquot(shape, (0,) * shape.l) == expected


def test_dim_affine_linear_in_each_degree():
    for n in range(2, 6):
        for shape in all_shapes(n):
            zero = [0] * shape.l
            base = dim_fquot(shape, zero)
            for i in range(shape.l):
                slope = shape.s_ext(i + 2) - shape.s_ext(i)
                for di in (1, 2, 5):
                    d = list(zero)
                    d[i] = di
                    assert dim_fquot(shape, d) == base + di * slope


def test_grassmannian_closed_form():
    for n in range(2, 7):
        for s1 in range(1, n):
            for d in range(4):
                assert dim_fquot(FlagShape(n, (s1,)), (d,)) == s1 * (n - s1) + n * d


def test_validate_accepts_gr24():
    p = validate_problem(FlagShape(4, (2,)), (1,), [(1, 1)] * 8)
    assert p.dimension == 8
    assert len(p.insertions) == 8


def test_validate_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        validate_problem(FlagShape(3, (1,)), (1,), [(1, 1)] * 4)


def test_validate_beta_bound_and_override():
    shape = FlagShape(3, (1, 2))
    with pytest.raises(BetaOutOfRange):
        validate_problem(shape, (0, 1), [(1, 2), (2, 1), (2, 1), (2, 1)])
    # with the override the structural beta <= s_alpha rule still applies,
    # but the paper bound is waived
    with pytest.raises(BetaOutOfRange):
        validate_problem(FlagShape(4, (1,)), (0,), [(1, 2), (1, 1)],
                         allow_beta_overflow=True)


def test_override_waives_paper_bound():
    # F(2,3;4): bound for alpha=2 is s_3 - s_1 = 2, while s_2 = 3
    shape = FlagShape(4, (2, 3))
    ins = [(2, 2), (2, 2), (1, 1)]
    with pytest.raises(BetaOutOfRange):
        validate_problem(shape, (0, 0), ins)
    p = validate_problem(shape, (0, 0), ins, allow_beta_overflow=True)
    assert p.allow_beta_overflow


def test_shape_invalid():
    with pytest.raises(ShapeInvalid):
        FlagShape(3, (2, 1))
    with pytest.raises(ShapeInvalid):
        FlagShape(3, (3,))
    with pytest.raises(ShapeInvalid):
        validate_problem(FlagShape(3, (1,)), (1, 1), [(1, 1)])
    with pytest.raises(ShapeInvalid):
        validate_problem(FlagShape(3, (1,)), (-1,), [(1, 1)])
