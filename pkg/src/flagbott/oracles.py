"""Independent verification paths for the localization engine.

Three routes, none of which share code with the engine's tangent-character
machinery:

* ``pn_localization_sum`` -- the residue-style double sum for projective
  space, which collapses to 1 for every (n, d);
* ``classical_flag_integral`` -- the d = 0 flag-manifold integral, summed
  over coordinate chains with the classical tangent denominator;
* ``grassmannian_quantum_integral`` -- iterated quantum Pieri products in
  the Grassmannian, with rim-hook reduction over the integers.
"""

from fractions import Fraction
from itertools import combinations

from .errors import DimensionMismatch, ZeroDenominator
from .fixed_points import enumerate_chains
from .weights import elementary_symmetric

__all__ = [
    "pn_localization_sum",
    "classical_flag_integral",
    "grassmannian_quantum_integral",
]


def pn_localization_sum(n, d, w):
    """Localization sum for P^n in degree d at a sample with n+1 lambdas.

    Sums, over the (n+1)(d+1) nodes x_{i,k} = lambda_i + k hbar, the terms
    x^{(n+1)d+n} / prod_{other nodes y} (x - y).  By residue calculus this
    equals the coefficient of x^{(n+1)(d+1)-1} in x^{(n+1)d+n}, i.e. 1.
    """
    if w.n != n + 1:
        raise ValueError(f"need n+1={n + 1} lambdas, got {w.n}")
    power = (n + 1) * d + n
    nodes = [(i, k) for i in range(n + 1) for k in range(d + 1)]
    total = Fraction(0)
    for i, k in nodes:
        x = w.lam[i] + k * w.hbar
        den = Fraction(1)
        for j, q in nodes:
            if (j, q) == (i, k):
                continue
            factor = x - (w.lam[j] + q * w.hbar)
            if factor == 0:
                raise ZeroDenominator("coincident localization nodes; resample")
            den *= factor
        total += x ** power / den
    return total


def classical_flag_integral(shape, insertions, w):
    """The d = 0 integral over the flag manifold by classical Bott
    localization at the coordinate flags.

    Each chain contributes prod_k e_{beta_k}({-lambda_j : j in J_alpha_k})
    over the product of the tangent weights lambda_m - lambda_j, j in J_i,
    m in J_{i+1} \\ J_i (with J_{l+1} the full index set).
    """
    insertions = [
        (it.alpha, it.beta) if hasattr(it, "alpha") else (it[0], it[1])
        for it in insertions
    ]
    dim = sum(
        shape.s_ext(i) * (shape.s_ext(i + 1) - shape.s_ext(i))
        for i in range(1, shape.l + 1)
    )
    if sum(beta for _, beta in insertions) != dim:
        raise DimensionMismatch(
            f"sum of betas must equal dim Fl = {dim} for the classical integral"
        )
    full = tuple(range(1, shape.n + 1))
    total = Fraction(0)
    for chain in enumerate_chains(shape):
        levels = list(chain) + [full]
        den = Fraction(1)
        for i in range(shape.l):
            upper = set(levels[i + 1]) - set(levels[i])
            for j in levels[i]:
                for m in upper:
                    factor = w.lam[m - 1] - w.lam[j - 1]
                    if factor == 0:
                        raise ZeroDenominator("repeated lambda values; resample")
                    den *= factor
        num = Fraction(1)
        for alpha, beta in insertions:
            values = [-w.lam[j - 1] for j in chain[alpha - 1]]
            num *= elementary_symmetric(values, beta)
        total += num / den
    return total


def _vertical_strips(lam, beta):
    """Partitions obtained from lam (fixed-length tuple, zeros padded) by
    adding beta boxes, no two in the same row."""
    rows = len(lam)
    for picked in combinations(range(rows), beta):
        new = list(lam)
        for i in picked:
            new[i] += 1
        if all(new[i] >= new[i + 1] for i in range(rows - 1)):
            yield tuple(new)


def _rim_hook_reduce(lam, rows, hook):
    """Reduce an over-wide partition by removing ``hook``-box rim hooks.

    Works on first-column hook lengths: removing a rim hook subtracts
    ``hook`` from one of them; a collision means no such hook exists and
    the class vanishes.  Each removal contributes q * (-1)^(rows - h),
    h = number of rows the hook occupies.  Returns (partition, q_exponent,
    sign) or None if the class is zero.
    """
    width = hook - rows
    qexp = 0
    sign = 1
    while lam[0] > width:
        betas = [lam[i] + rows - 1 - i for i in range(rows)]
        removed = None
        for idx, bi in enumerate(betas):
            new = bi - hook
            if new >= 0 and new not in betas:
                h = 1 + sum(1 for bj in betas if new < bj < bi)
                removed = (idx, new, h)
                break
        if removed is None:
            return None
        idx, new, h = removed
        betas[idx] = new
        betas.sort(reverse=True)
        sign *= (-1) ** (rows - h)
        qexp += 1
        lam = tuple(betas[i] - (rows - 1 - i) for i in range(rows))
    return lam, qexp, sign


def grassmannian_quantum_integral(n, s1, d1, betas):
    """Gromov invariant of Gr(s1 subspaces of C^n) in degree d1 for the
    special classes e_{beta}: the q^{d1} coefficient, on the point class,
    of the iterated small-quantum Pieri product.
    """
    r1 = n - s1
    if not 0 < s1 < n:
        raise ValueError(f"need 0 < s1 < n, got s1={s1}, n={n}")
    if any(not 1 <= beta <= s1 for beta in betas):
        raise ValueError(f"betas must lie in 1..s1={s1}, got {list(betas)}")
    if sum(betas) != s1 * r1 + n * d1:
        raise DimensionMismatch(
            f"sum of betas must equal s1*r1 + n*d1 = {s1 * r1 + n * d1}"
        )
    zero = (0,) * s1
    state = {(zero, 0): 1}
    for beta in betas:
        new_state = {}
        for (lam, qexp), coeff in state.items():
            for strip in _vertical_strips(lam, beta):
                reduced = _rim_hook_reduce(strip, s1, n)
                if reduced is None:
                    continue
                mu, dq, sign = reduced
                key = (mu, qexp + dq)
                new_state[key] = new_state.get(key, 0) + coeff * sign
        state = {k: v for k, v in new_state.items() if v != 0}
    point = (r1,) * s1
    return state.get((point, d1), 0)
