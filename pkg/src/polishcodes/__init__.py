"""Computing with countable metric codes of Polish metric spaces.

Codes are rational distance oracles on the naturals; their completions are
handled through fast Cauchy index sequences. Relations between codes are
never decided, only witnessed or refuted at a finite scale.
"""

from .codes import (
    IsolatedWith,
    MetricCode,
    NotIsolated,
    baire,
    discrete,
    dist,
    dyadic_line,
    euclidean_list,
    finite_table,
    geometric,
    make_builtin,
    product,
    rational_line,
    shifted_line,
    verify_metric,
)
from .completion import (
    CauchyPoint,
    DepthExceeded,
    ModulusViolation,
    apart,
    embed,
    explicit_point,
    geometric_limit,
    make_point,
    point_dist,
    sqrt_point,
)
from .enumerations import finite_seq_enumeration, rational_enumeration
from .fixtures import parse_code_file
from .functions import (
    BallModulus,
    CdiWitness,
    FunctionCode,
    battery_check,
    check_cdi_witness,
    check_homeo_pair,
    check_modulus,
    compose,
    eval_extension,
    make_function_code,
    reify_function,
)
from .isometry import (
    CrossOracle,
    DenseIsometryWitness,
    NoneUpTo,
    PartialIsometry,
    amalgamate,
    check_dense_witness,
    check_partial_isometry,
    density_check,
    image_prefix,
    search_isometry,
)
from .topology import isolated_at, isolated_in_completion, perfect_check
from .verdict import Status, Verdict

__version__ = "0.1.0"
