"""Exact arithmetic kernel: integer linear forms in (hbar, lambda_1..lambda_n),
their evaluation at exact rational samples, and elementary symmetric functions.

Everything here is pure and immutable; all arithmetic is done with
`fractions.Fraction`, so there is no rounding anywhere in the pipeline.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Character",
    "WeightSample",
    "eval_character",
    "elementary_symmetric",
    "sample_weights",
]

# Default half-width of the integer window the sampler draws from.
DEFAULT_MAGNITUDE = 2 ** 31


@dataclass(frozen=True)
class Character:
    """An integer linear form  c*hbar + sum_j coeff_j * lambda_j.

    ``lam`` maps 1-based lambda indices to integer coefficients; zero
    coefficients are never stored.
    """

    hbar: int = 0
    lam: tuple = ()  # sorted tuple of (index, coeff) pairs

    @staticmethod
    def make(hbar=0, lam=None):
        items = tuple(sorted((j, c) for j, c in (lam or {}).items() if c != 0))
        return Character(hbar, items)

    def __add__(self, other):
        acc = dict(self.lam)
        for j, c in other.lam:
            acc[j] = acc.get(j, 0) + c
        return Character.make(self.hbar + other.hbar, acc)

    def is_zero(self):
        return self.hbar == 0 and not self.lam

    def __str__(self):
        parts = []
        if self.hbar:
            parts.append(f"{self.hbar}*h" if self.hbar != 1 else "h")
        for j, c in self.lam:
            if c == 1:
                parts.append(f"l{j}")
            elif c == -1:
                parts.append(f"-l{j}")
            else:
                parts.append(f"{c}*l{j}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


@dataclass(frozen=True)
class WeightSample:
    """An exact rational assignment to hbar and lambda_1..lambda_n.

    hbar is nonzero and the lambda values are pairwise distinct.  A sample
    is admissible for a problem when no tang1 character of any fixed point
    evaluates to zero; admissibility is discovered by evaluation and
    handled by the engine's resampling loop.
    """

    hbar: Fraction
    lam: tuple  # Fractions, 1-based indexing via lam[j-1]

    def __post_init__(self):
        if self.hbar == 0:
            raise ValueError("hbar must be nonzero")
        if len(set(self.lam)) != len(self.lam):
            raise ValueError("lambda values must be pairwise distinct")

    @property
    def n(self):
        return len(self.lam)

    def scaled(self, t):
        """The sample (t*hbar, t*lambda); t must be a nonzero rational."""
        t = Fraction(t)
        return WeightSample(t * self.hbar, tuple(t * x for x in self.lam))

    def permuted(self, perm):
        """Relabel lambdas by a permutation given as a tuple of 1-based
        images: new lambda_j = old lambda_{perm[j-1]}."""
        return WeightSample(self.hbar, tuple(self.lam[p - 1] for p in perm))


def eval_character(ch, w):
    """Evaluate a character at a weight sample, exactly."""
    total = ch.hbar * w.hbar
    for j, c in ch.lam:
        if not 1 <= j <= w.n:
            raise IndexError(f"lambda index {j} out of range 1..{w.n}")
        total += c * w.lam[j - 1]
    return total


def elementary_symmetric(values, k):
    """e_k of a list of rationals; e_0 = 1.

    Computed by the usual one-pass recurrence e <- e + v * shift(e).
    """
    values = list(values)
    if not 0 <= k <= len(values):
        raise ValueError(f"k={k} out of range 0..{len(values)}")
    e = [Fraction(1)] + [Fraction(0)] * k
    for m, v in enumerate(values, start=1):
        for i in range(min(m, k), 0, -1):
            e[i] += e[i - 1] * v
    return e[k]


def sample_weights(n, seed, attempt, magnitude=DEFAULT_MAGNITUDE):
    """Deterministic generic sample: nonzero hbar and n pairwise-distinct
    lambdas, integers in [-magnitude, magnitude].

    A pure function of (n, seed, attempt); the engine bumps ``attempt``
    whenever a sample turns out inadmissible.
    """
    rng = random.Random(f"flagbott:{n}:{seed}:{attempt}")
    hbar = 0
    while hbar == 0:
        hbar = rng.randint(-magnitude, magnitude)
    lam = []
    seen = set()
    while len(lam) < n:
        x = rng.randint(-magnitude, magnitude)
        if x not in seen:
            seen.add(x)
            lam.append(x)
    return WeightSample(Fraction(hbar), tuple(Fraction(x) for x in lam))
