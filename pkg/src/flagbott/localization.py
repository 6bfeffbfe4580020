"""The Bott localization sum over torus fixed points of the flag Quot scheme.

Each fixed point contributes

    prod_k sigma(fp, alpha_k, beta_k)  *  prod(tang2) / prod(tang1),

where tang1 lists the tangent characters of the ambient product of Quot
schemes, tang2 the characters of the quotient sum Hom(S_i, Q_{i+1}) (so the
equivariant Euler class of the flag Quot tangent space sits in the
denominator), and sigma is the elementary symmetric function of the negated
fiber characters of the tautological subsheaf at 0.  When the dimension
condition holds the total is a constant integer, independent of the sample.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NonIntegerResult,
    ResampleExhausted,
    SampleDisagreement,
    ZeroDenominator,
)
from .fixed_points import enumerate_chains, enumerate_weight_matrices
from .problem import dim_fquot
from .weights import Character, elementary_symmetric, eval_character, sample_weights

__all__ = [
    "TangentData",
    "InvariantResult",
    "tangent_characters",
    "sigma",
    "contribution",
    "invariant",
]

MAX_RESAMPLE_ATTEMPTS = 64


@dataclass(frozen=True)
class TangentData:
    tang1: tuple
    tang2: tuple


@dataclass(frozen=True)
class InvariantResult:
    value: Fraction
    is_integer: bool
    fixed_point_count: int
    dimension: int
    samples_used: int
    seed: int


def _lam(jp, j):
    """Coefficient dict for lambda_{jp} - lambda_{j}."""
    if jp == j:
        return {}
    return {jp: 1, j: -1}


def _hom_characters(a_row, b_row, d_row, src, a_bound, b_bound, tgt, outside, out):
    """Characters of Hom(S-summand over ``src``, quotient over ``tgt``).

    a_bound/b_bound give the p-ranges (exclusive upper bounds per target
    slot); ``outside`` lists the indices m with a free O_m summand.
    """
    for j in src:
        aij, bij = a_row[j], b_row[j]
        for jp in tgt:
            for p in range(a_bound[jp]):
                out.append(Character.make(p - aij, _lam(jp, j)))
            for p in range(b_bound[jp]):
                out.append(Character.make(bij - p, _lam(jp, j)))
        for m in outside:
            for p in range(d_row[j] + 1):
                out.append(Character.make(p - aij, _lam(m, j)))


def tangent_characters(fp, shape):
    """The character lists (tang1, tang2) at a fixed point.

    tang1 collects, for every level i, the characters of Hom(S_i, Q_i) in
    the ambient Quot product; tang2 those of Hom(S_i, Q_{i+1}) for i < l.
    Multiplicities are preserved.
    """
    everyone = range(1, shape.n + 1)
    tang1, tang2 = [], []
    for i in range(1, shape.l + 1):
        J = fp.chain[i - 1]
        a_row, b_row = fp.a[i - 1], fp.b[i - 1]
        d_row = {j: a_row[j] + b_row[j] for j in J}
        _hom_characters(
            a_row, b_row, d_row, J,
            {jp: a_row[jp] for jp in J}, {jp: b_row[jp] for jp in J},
            J, [m for m in everyone if m not in J], tang1,
        )
        if i < shape.l:
            K = fp.chain[i]
            a_next, b_next = fp.a[i], fp.b[i]
            _hom_characters(
                a_row, b_row, d_row, J,
                {jp: a_next[jp] for jp in K}, {jp: b_next[jp] for jp in K},
                K, [m for m in everyone if m not in K], tang2,
            )
    return TangentData(tuple(tang1), tuple(tang2))


def sigma(fp, alpha, beta, w):
    """e_beta of the negated (dual) fiber characters -(a_{alpha,j} hbar +
    lambda_j), j in J_alpha, evaluated at w."""
    J = fp.chain[alpha - 1]
    a_row = fp.a[alpha - 1]
    values = [-(a_row[j] * w.hbar + w.lam[j - 1]) for j in J]
    return elementary_symmetric(values, beta)


def contribution(fp, problem, w):
    """One fixed point's exact term of the localization sum.

    Raises ZeroDenominator if any tang1 character vanishes at w; the
    caller resamples.
    """
    data = tangent_characters(fp, problem.shape)
    den = Fraction(1)
    for ch in data.tang1:
        v = eval_character(ch, w)
        if v == 0:
            raise ZeroDenominator(f"character {ch} vanished at the sample")
        den *= v
    num = Fraction(1)
    for it in problem.insertions:
        num *= sigma(fp, it.alpha, it.beta, w)
        if num == 0:
            return Fraction(0)
    for ch in data.tang2:
        num *= eval_character(ch, w)
    return num / den


def _chain_block_sum(problem, chains, w):
    """Partial localization sum over the fixed points of a chain block.

    Returns (sum, fixed point count); pure, so any partition of the chain
    stream across workers reduces to the same exact total.
    """
    total = Fraction(0)
    count = 0
    for chain in chains:
        for fp in enumerate_weight_matrices(problem.shape, problem.degrees, chain):
            total += contribution(fp, problem, w)
            count += 1
    return total, count


def _sum_over_fixed_points(problem, w, workers):
    chains = list(enumerate_chains(problem.shape))
    if workers <= 1 or len(chains) <= 1:
        return _chain_block_sum(problem, chains, w)
    blocks = [chains[k::workers] for k in range(workers)]
    blocks = [blk for blk in blocks if blk]
    with ProcessPoolExecutor(max_workers=len(blocks)) as pool:
        results = list(pool.map(_chain_block_sum,
                                [problem] * len(blocks), blocks, [w] * len(blocks)))
    total = Fraction(0)
    count = 0
    for part, c in results:
        total += part
        count += c
    return total, count


def invariant(problem, seed=0, num_samples=2, workers=1):
    """Run the localization sum at ``num_samples`` independent admissible
    samples and certify the common integer value.

    Raises SampleDisagreement or NonIntegerResult when the cross-checks
    fail (both indicate a bug, never a bad sample), and ResampleExhausted
    when no admissible sample is found within the retry budget.
    """
    if num_samples < 1:
        raise ValueError("num_samples must be >= 1")
    n = problem.shape.n
    totals = []
    count = 0
    attempt = 0
    for _ in range(num_samples):
        for _ in range(MAX_RESAMPLE_ATTEMPTS):
            w = sample_weights(n, seed, attempt)
            attempt += 1
            try:
                total, count = _sum_over_fixed_points(problem, w, workers)
            except ZeroDenominator:
                continue
            totals.append(total)
            break
        else:
            raise ResampleExhausted(
                f"no admissible sample after {MAX_RESAMPLE_ATTEMPTS} attempts"
            )
    if any(t != totals[0] for t in totals[1:]):
        raise SampleDisagreement(f"sample totals differ: {totals}")
    value = totals[0]
    if value.denominator != 1:
        raise NonIntegerResult(f"total {value} is not an integer")
    return InvariantResult(
        value=value,
        is_integer=True,
        fixed_point_count=count,
        dimension=dim_fquot(problem.shape, problem.degrees),
        samples_used=num_samples,
        seed=seed,
    )
