"""Exact computations with split parabolic bundles on the projective line."""
from .errors import ConsistencyError, InputError
from .exact import CycElem, Rational, cyc_mul, rat_floor, rat_frac, weight_multiplicities
from .parabolic import (
    MarkedCurve,
    MarkedPoint,
    ParaLine,
    SplitBundle,
    direct_sum,
    dual,
    evaluate,
    hom,
    ms_filtration,
    shift,
    tensor,
    tensor_oracle_degree,
    tensor_power,
    unit_bundle,
    validate,
)
from .orbifold import OrbBundle, OrbLine, from_parabolic, orb_root_pullback, orb_tensor, reduce_pair, to_parabolic
from .pullback import PowerMap, deloop, plain_pullback, root_pullback, root_pullback_oracle
from .cyclic import CyclicCoverParams, cyclic_bundle, kappa, kappa_j, s1, s_j, w_j
from .covers import BoundReport, CoverSpec, a_values, bound_u, can_inject, spec_from_matrices, t_values

__version__ = "0.1.0"
