"""DE-Sinc approximation with certified mesh-size and truncation selection."""

from .approximant import SincApproximant, build, evaluate, experiment_grid, sup_error
from .bounds import (
    BoundReport,
    bound_discretization,
    bound_report,
    bound_truncation,
    constant_exist,
    constant_new1,
    constant_new2,
)
from .errors import DomainError, HarnessIOError
from .function_space import (
    FunctionClass,
    IntervalFunction,
    TransformedFunction,
    builtin_f1,
    builtin_f2,
    de_endpoint_distances,
    de_transform,
    decay_envelope,
)
from .kernels import arsinh, p_func, q_func, r_func, sinc
from .selection import (
    COROLLARY,
    DEFAULT_Q,
    IDENTITY_Q,
    NEW1,
    NEW2,
    STANDARD,
    QChoice,
    SincGrid,
    Strategy,
    select,
    select_general_q,
    select_new1,
    select_new2,
    select_standard,
)

__version__ = "0.1.0"
