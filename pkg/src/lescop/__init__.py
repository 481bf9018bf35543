"""Exact computation of the Casson-Walker-Lescop invariant.

3-manifolds enter as rational surgery on framed links in the 3-sphere;
everything is evaluated in exact rational arithmetic.  The main entry
points are :func:`lescop_lambda` on a :class:`FramedLink`, the lens-space
closed forms, the crossing-change deltas, and :func:`run_verification`,
which sweeps the closed-form families against the general formula.
"""

from .dedekind import dedekind_sum, dedekind_sum_direct, sawtooth
from .lens import (
    ChainPresentation,
    LensSpace,
    chain_lens_space,
    chain_to_lens,
    lens_lambda,
    lens_lambda_alt,
    tn_lens_condition,
    twist_chain,
)
from .linalg import (
    Inertia,
    SymMatrix,
    det_exact,
    format_rational,
    inertia,
    matrix_sign,
    parse_rational,
    signature,
)
from .links import (
    FramedLink,
    ParseError,
    chain,
    hopf,
    link_to_text,
    make_link,
    parse_link,
    subset_label,
    unknot,
)
from .moves import (
    CrossingStep,
    HomotopyPath,
    conway_a1_delta,
    crossing_matrix,
    lambda_delta,
    mirror_lambda,
    parse_path,
    path_delta,
    tn_path,
    walker_delta,
)
from .surgery import (
    PathSums,
    cycle_sum,
    h1_order,
    lescop_lambda,
    linking_weight,
    path_sum,
    reduced_matrix,
    sublink_weight,
    walker_lambda,
)
from .verify import SweepCheck, SweepRow, VerifyReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "ChainPresentation",
    "CrossingStep",
    "FramedLink",
    "HomotopyPath",
    "Inertia",
    "LensSpace",
    "ParseError",
    "PathSums",
    "SweepCheck",
    "SweepRow",
    "SymMatrix",
    "VerifyReport",
    "chain",
    "chain_lens_space",
    "chain_to_lens",
    "conway_a1_delta",
    "crossing_matrix",
    "cycle_sum",
    "dedekind_sum",
    "dedekind_sum_direct",
    "det_exact",
    "format_rational",
    "h1_order",
    "hopf",
    "inertia",
    "lambda_delta",
    "lens_lambda",
    "lens_lambda_alt",
    "lescop_lambda",
    "link_to_text",
    "linking_weight",
    "make_link",
    "matrix_sign",
    "mirror_lambda",
    "parse_link",
    "parse_path",
    "parse_rational",
    "path_delta",
    "path_sum",
    "reduced_matrix",
    "run_verification",
    "sawtooth",
    "signature",
    "sublink_weight",
    "subset_label",
    "tn_lens_condition",
    "tn_path",
    "twist_chain",
    "unknot",
    "walker_delta",
    "walker_lambda",
]
