"""Problem statement: which flag variety, which multidegree, which special
Schubert-class insertions; plus the dimension bookkeeping that decides
whether the localization sum is a well-defined integer."""

from dataclasses import dataclass

from .errors import BetaOutOfRange, DimensionMismatch, ShapeInvalid

__all__ = [
    "FlagShape",
    "Insertion",
    "ProblemSpec",
    "dim_fquot",
    "validate_problem",
]


@dataclass(frozen=True)
class FlagShape:
    """The flag variety F(s_1,...,s_l; n) of nested subspaces of C^n.

    Conventions: s_0 = 0 and s_{l+1} = n; quotient ranks r_i = n - s_i.
    """

    n: int
    s: tuple

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))
        if self.n < 1:
            raise ShapeInvalid(f"n must be positive, got {self.n}")
        if not self.s:
            raise ShapeInvalid("s must be nonempty")
        prev = 0
        for si in self.s:
            if not prev < si < self.n:
                raise ShapeInvalid(
                    f"s must be strictly increasing inside (0, n); got s={self.s}, n={self.n}"
                )
            prev = si

    @property
    def l(self):
        return len(self.s)

    def s_ext(self, i):
        """s_i with the boundary conventions s_0 = 0, s_{l+1} = n."""
        if i == 0:
            return 0
        if i == self.l + 1:
            return self.n
        return self.s[i - 1]

    def r(self, i):
        """Quotient rank r_i = n - s_i, with r_0 = n and r_{l+1} = 0."""
        return self.n - self.s_ext(i)


@dataclass(frozen=True)
class Insertion:
    """One special Schubert class c_beta of the dual tautological bundle at
    flag step alpha."""

    alpha: int
    beta: int


@dataclass(frozen=True)
class ProblemSpec:
    shape: FlagShape
    degrees: tuple
    insertions: tuple
    allow_beta_overflow: bool = False

    @property
    def dimension(self):
        return dim_fquot(self.shape, self.degrees)


def dim_fquot(shape, degrees):
    """Dimension of the flag Quot scheme:
    sum_i r_i (r_{i-1} - r_i)  +  sum_i d_i (s_{i+1} - s_{i-1}).

    At d = 0 this is the dimension of the flag manifold itself.
    """
    total = 0
    for i in range(1, shape.l + 1):
        total += shape.r(i) * (shape.r(i - 1) - shape.r(i))
        total += degrees[i - 1] * (shape.s_ext(i + 1) - shape.s_ext(i - 1))
    return total


def validate_problem(shape, degrees, insertions, allow_beta_overflow=False):
    """Check a problem statement and return a ProblemSpec.

    Raises ShapeInvalid for structural defects, BetaOutOfRange when an
    insertion violates beta <= s_alpha or (without the override) the bound
    beta < s_{alpha+1} - s_{alpha-1}, and DimensionMismatch when the
    quasi-homogeneous degree condition sum(beta) = dim fQuot fails.
    """
    if not isinstance(shape, FlagShape):
        shape = FlagShape(shape[0], tuple(shape[1]))
    degrees = tuple(degrees)
    if len(degrees) != shape.l:
        raise ShapeInvalid(
            f"degree vector has length {len(degrees)}, expected l={shape.l}"
        )
    if any(d < 0 for d in degrees):
        raise ShapeInvalid(f"degrees must be nonnegative, got {degrees}")

    ins = tuple(
        i if isinstance(i, Insertion) else Insertion(int(i[0]), int(i[1]))
        for i in insertions
    )
    for it in ins:
        if not 1 <= it.alpha <= shape.l:
            raise ShapeInvalid(f"alpha={it.alpha} outside 1..{shape.l}")
        if it.beta < 1:
            raise ShapeInvalid(f"beta={it.beta} must be positive")
        if it.beta > shape.s_ext(it.alpha):
            raise BetaOutOfRange(
                f"beta={it.beta} exceeds rank s_{it.alpha}={shape.s_ext(it.alpha)}"
            )
        bound = shape.s_ext(it.alpha + 1) - shape.s_ext(it.alpha - 1)
        if it.beta >= bound and not allow_beta_overflow:
            raise BetaOutOfRange(
                f"beta={it.beta} not less than s_{it.alpha + 1}-s_{it.alpha - 1}={bound}"
                " (pass allow_beta_overflow to compute outside the proven regime)"
            )

    dim = dim_fquot(shape, degrees)
    total_beta = sum(it.beta for it in ins)
    if total_beta != dim:
        raise DimensionMismatch(
            f"sum of betas is {total_beta} but dim fQuot is {dim};"
            " the invariant is not a well-defined constant"
        )
    return ProblemSpec(shape, degrees, ins, allow_beta_overflow)
