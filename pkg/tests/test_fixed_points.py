from itertools import combinations, product
from math import comb

from flagbott.fixed_points import (
    count_fixed_points,
    enumerate_chains,
    enumerate_fixed_points,
    enumerate_weight_matrices,
)
from flagbott.problem import FlagShape


def test_chain_examples():
    assert list(enumerate_chains(FlagShape(2, (1,)))) == [((1,),), ((2,),)]
    assert len(list(enumerate_chains(FlagShape(4, (2,))))) == comb(4, 2)
    assert len(list(enumerate_chains(FlagShape(3, (1, 2))))) == 6


def test_chain_count_multinomial():
    for n in range(2, 6):
        for l in range(1, n):
            for s in combinations(range(1, n), l):
                shape = FlagShape(n, s)
                chains = list(enumerate_chains(shape))
                expected = 1
                for i in range(1, shape.l + 2):
                    expected *= comb(
                        n - shape.s_ext(i - 1), shape.s_ext(i) - shape.s_ext(i - 1)
                    )
                assert len(chains) == expected
                assert len(set(chains)) == len(chains)


def test_weight_matrix_examples():
    shape = FlagShape(2, (1,))
    pts = list(enumerate_weight_matrices(shape, (2,), ((1,),)))
    assert sorted((fp.a[0][1], fp.b[0][1]) for fp in pts) == [(0, 2), (1, 1), (2, 0)]

    shape = FlagShape(3, (1, 2))
    pts = list(enumerate_weight_matrices(shape, (1, 0), ((1,), (1, 2))))
    assert len(pts) == 2
    for fp in pts:
        assert fp.a[1] == {1: 0, 2: 0} and fp.b[1] == {1: 0, 2: 0}
    assert sorted((fp.a[0][1], fp.b[0][1]) for fp in pts) == [(0, 1), (1, 0)]


def test_zero_degree_one_point_per_chain():
    for n, s in [(3, (1,)), (4, (2,)), (4, (1, 3)), (4, (1, 2, 3))]:
        shape = FlagShape(n, s)
        zero = (0,) * shape.l
        chains = list(enumerate_chains(shape))
        assert count_fixed_points(shape, zero) == len(chains)


def test_count_examples():
    assert count_fixed_points(FlagShape(2, (1,)), (1,)) == 4
    assert count_fixed_points(FlagShape(4, (2,)), (1,)) == 24
    assert count_fixed_points(FlagShape(2, (1,)), (0,)) == 2


def test_count_line_in_pn():
    # l=1, s1=1: n choices of line times d+1 splittings a+b=d
    for n in range(2, 6):
        for d in range(4):
            assert count_fixed_points(FlagShape(n, (1,)), (d,)) == n * (d + 1)


def test_streams_deterministic_and_valid():
    for n in range(2, 5):
        for l in range(1, n):
            for s in combinations(range(1, n), l):
                shape = FlagShape(n, s)
                for d in product(range(3), repeat=l):
                    if sum(d) > 3:
                        continue
                    first = list(enumerate_fixed_points(shape, d))
                    second = list(enumerate_fixed_points(shape, d))
                    assert first == second
                    seen = set()
                    for fp in first:
                        fp.check(shape, d)
                        key = (fp.chain,
                               tuple(tuple(sorted(r.items())) for r in fp.a),
                               tuple(tuple(sorted(r.items())) for r in fp.b))
                        assert key not in seen
                        seen.add(key)
