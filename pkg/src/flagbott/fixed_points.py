"""Torus fixed points of the flag Quot scheme.

A fixed point is a nested chain of coordinate subsets J_1 <= ... <= J_l
(|J_i| = s_i) decorated with nonnegative weight matrices a, b on the slots
(i, j in J_i), subject to

    a[i][j] >= a[i+1][j],  b[i][j] >= b[i+1][j]   for j in J_i, i < l,
    sum_{j in J_i} (a[i][j] + b[i][j]) = d_i.

Enumeration is lazy and deterministic; nothing is materialized globally.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

__all__ = [
    "FixedPoint",
    "enumerate_chains",
    "enumerate_weight_matrices",
    "enumerate_fixed_points",
    "count_fixed_points",
]


@dataclass(frozen=True)
class FixedPoint:
    chain: tuple  # tuple of l sorted tuples of 1-based indices
    a: tuple  # tuple of l dicts {j: a_ij}
    b: tuple  # tuple of l dicts {j: b_ij}

    def d(self, i, j):
        """Derived degree d_{i,j} = a_{i,j} + b_{i,j} (1-based level i)."""
        return self.a[i - 1][j] + self.b[i - 1][j]

    def check(self, shape, degrees):
        """Assert all type invariants; used by tests over full enumerations."""
        assert len(self.chain) == shape.l
        prev = ()
        for i, J in enumerate(self.chain, start=1):
            assert len(J) == shape.s_ext(i)
            assert set(prev) <= set(J) <= set(range(1, shape.n + 1))
            assert tuple(sorted(J)) == J
            assert sum(self.d(i, j) for j in J) == degrees[i - 1]
            for j in J:
                assert self.a[i - 1][j] >= 0 and self.b[i - 1][j] >= 0
            prev = J
        for i in range(1, shape.l):
            for j in self.chain[i - 1]:
                assert self.a[i - 1][j] >= self.a[i][j]
                assert self.b[i - 1][j] >= self.b[i][j]


def enumerate_chains(shape):
    """Yield every nested chain J_1 <= ... <= J_l with |J_i| = s_i, each
    exactly once, in a fixed order."""

    def extend(prefix, pool, level):
        if level > shape.l:
            yield tuple(prefix)
            return
        need = shape.s_ext(level) - shape.s_ext(level - 1)
        base = prefix[-1] if prefix else ()
        for extra in combinations(pool, need):
            J = tuple(sorted(base + extra))
            rest = tuple(x for x in pool if x not in extra)
            yield from extend(prefix + [J], rest, level + 1)

    yield from extend([], tuple(range(1, shape.n + 1)), 1)


def count_chains(shape):
    """Multinomial n! / (s_1! (s_2-s_1)! ... (n-s_l)!), via binomials."""
    total = 1
    for i in range(1, shape.l + 2):
        total *= comb(shape.n - shape.s_ext(i - 1), shape.s_ext(i) - shape.s_ext(i - 1))
    return total


def _level_rows(slots, total, low_a, low_b):
    """All (a, b) dicts over ``slots`` with a[j] >= low_a[j], b[j] >= low_b[j]
    and sum(a) + sum(b) == total."""

    def rec(idx, remaining, acc_a, acc_b):
        if idx == len(slots):
            if remaining == 0:
                yield dict(acc_a), dict(acc_b)
            return
        j = slots[idx]
        floor = low_a[j] + low_b[j]
        # leave enough budget for the floors of the remaining slots
        tail = sum(low_a[k] + low_b[k] for k in slots[idx + 1:])
        for dij in range(floor, remaining - tail + 1):
            for aij in range(low_a[j], dij - low_b[j] + 1):
                acc_a[j] = aij
                acc_b[j] = dij - aij
                yield from rec(idx + 1, remaining - dij, acc_a, acc_b)
            del acc_a[j], acc_b[j]

    yield from rec(0, total, {}, {})


def enumerate_weight_matrices(shape, degrees, chain):
    """Yield every FixedPoint decorating ``chain``, exactly once.

    Levels are filled from l up to 1 so the monotonicity constraints
    a[i] >= a[i+1], b[i] >= b[i+1] prune as early as possible.
    """

    def rec(level, above):  # ``above`` holds rows for levels level+1..l
        if level == 0:
            rows = list(reversed(above))
            yield FixedPoint(
                chain,
                tuple(r[0] for r in rows),
                tuple(r[1] for r in rows),
            )
            return
        slots = chain[level - 1]
        if above:
            next_a, next_b = above[-1]
            low_a = {j: next_a[j] for j in slots}
            low_b = {j: next_b[j] for j in slots}
        else:
            low_a = {j: 0 for j in slots}
            low_b = {j: 0 for j in slots}
        for a_row, b_row in _level_rows(slots, degrees[level - 1], low_a, low_b):
            yield from rec(level - 1, above + [(a_row, b_row)])

    yield from rec(shape.l, [])


def enumerate_fixed_points(shape, degrees):
    for chain in enumerate_chains(shape):
        yield from enumerate_weight_matrices(shape, degrees, chain)


def count_fixed_points(shape, degrees):
    return sum(1 for _ in enumerate_fixed_points(shape, degrees))
