"""Exact Gromov invariants of partial flag varieties by Bott localization
over flag Quot schemes, with independent combinatorial oracles."""

from .errors import (
    BetaOutOfRange,
    DimensionMismatch,
    EngineError,
    FlagbottError,
    NonIntegerResult,
    ResampleExhausted,
    SampleDisagreement,
    ShapeInvalid,
    ValidationError,
    ZeroDenominator,
)
from .fixed_points import (
    FixedPoint,
    count_fixed_points,
    enumerate_chains,
    enumerate_fixed_points,
    enumerate_weight_matrices,
)
from .localization import (
    InvariantResult,
    TangentData,
    contribution,
    invariant,
    sigma,
    tangent_characters,
)
from .oracles import (
    classical_flag_integral,
    grassmannian_quantum_integral,
    pn_localization_sum,
)
from .problem import FlagShape, Insertion, ProblemSpec, dim_fquot, validate_problem
from .weights import (
    Character,
    WeightSample,
    elementary_symmetric,
    eval_character,
    sample_weights,
)

__version__ = "0.1.0"
