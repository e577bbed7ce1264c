"""Exact global-irreducibility classification of quantum Weyl modules.

The package decides, for a dominant integral weight of a complex simple Lie
algebra, whether the corresponding quantum Weyl module stays irreducible at
every root of unity, and otherwise produces a concrete order together with a
machine-checkable reduction trace.  All arithmetic is exact: Laurent
polynomials over the integers, cyclotomic divisibility, and rational
arithmetic for dimension formulas.
"""

from .qarith import (
    ExactDivisionError,
    InternalCheckError,
    LaurentPoly,
    SpecOrder,
    cyclotomic,
    euler_phi,
    qbinom,
    qbinom_vanishes_fast,
    qfactorial,
    qint,
    qint_vanishes_fast,
    s_value,
    vanishes_at,
)
from .rootsystem import (
    LeviComponent,
    Root,
    RootSystem,
    build,
    coxeter_number,
    dominance_leq,
    dot_reflect_alpha0,
    format_weight,
    highest_short_root,
    in_bottom_alcove_closure,
    levi_subsystem,
    minuscule_weights,
    pairing,
    parse_type,
    parse_weight,
    weyl_dimension,
)
from .weylmods import (
    E8Certificate,
    ShortRootMatrix,
    adjoint_short_reducible_at,
    closed_form_detD,
    det_short_matrix,
    e8_certificate,
    g2_omega2_reducible_at,
    short_root_matrix,
    sl2_irreducible,
    sl2_maximal_vector_oracle,
)
from .classifier import (
    AdjointShortRoot,
    Decision,
    EndNode,
    FundWeight,
    G2Omega2,
    LeviDescent,
    Sl2Node,
    TraceError,
    classify_global,
    endnode_witness,
    find_witness,
    fundamental_weight_witness,
    trace_citations,
    trace_json,
    verify_witness,
    witness_ell,
)

__version__ = "0.1.0"

__all__ = [
    "AdjointShortRoot",
    "Decision",
    "E8Certificate",
    "EndNode",
    "ExactDivisionError",
    "FundWeight",
    "G2Omega2",
    "InternalCheckError",
    "LaurentPoly",
    "LeviComponent",
    "LeviDescent",
    "Root",
    "RootSystem",
    "ShortRootMatrix",
    "Sl2Node",
    "SpecOrder",
    "TraceError",
    "adjoint_short_reducible_at",
    "build",
    "classify_global",
    "closed_form_detD",
    "coxeter_number",
    "cyclotomic",
    "det_short_matrix",
    "dominance_leq",
    "dot_reflect_alpha0",
    "e8_certificate",
    "endnode_witness",
    "euler_phi",
    "find_witness",
    "format_weight",
    "fundamental_weight_witness",
    "g2_omega2_reducible_at",
    "highest_short_root",
    "in_bottom_alcove_closure",
    "levi_subsystem",
    "minuscule_weights",
    "pairing",
    "parse_type",
    "parse_weight",
    "qbinom",
    "qbinom_vanishes_fast",
    "qfactorial",
    "qint",
    "qint_vanishes_fast",
    "s_value",
    "short_root_matrix",
    "sl2_irreducible",
    "sl2_maximal_vector_oracle",
    "trace_citations",
    "trace_json",
    "vanishes_at",
    "verify_witness",
    "weyl_dimension",
    "witness_ell",
]
