"""Exact structure theory for Artinian monomial quotients.

Everything is computed over the rationals with exact arithmetic: staircase
bases, socles and largest reduced submodules, Macaulay inverse systems
under the apolarity action, torsion/completion functors with their Matlis
duals, and radical-formula quantities.
"""

from .diagram import (
    diagram_ascii,
    diagram_cells,
    diagram_svg,
    diagram_svg_pair,
)
from .inverse import (
    InverseSystem,
    apolarity,
    dual_corners,
    hilbert_duality_check,
    inner_span,
    inverse_system,
    perp_of_submodule,
    socle_dual,
    top_degree_check,
    truncated_dual,
    truncated_dual_report,
)
from .linalg import Subspace, kernel, rref
from .quotient import (
    HilbertSeries,
    QuotientModule,
    act,
    annihilator,
    build_quotient,
    hilbert,
    is_gorenstein,
    monomial_span,
    socle,
    staircase,
)
from .radical import (
    envelope_zero,
    jacobson_radical,
    satisfies_radical_formula,
    semiprime_bruteforce,
)
from .ring import (
    AlgebraError,
    InternalCheckError,
    MonomialIdeal,
    NotArtinianError,
    ParseError,
    Polynomial,
    VariableSet,
    minimalize,
    parse_input,
    parse_polynomial,
    render,
)
from .reduced import (
    is_coreduced_subspace,
    is_ideal_reduced,
    largest_reduced_submodule,
    outside_corners,
    reduced_membership_oracle,
)
from .suites import SUITE_NAMES, run_suite
from .torsion import (
    FiniteModule,
    TtfTag,
    adic_completion,
    classify,
    from_quotient,
    level_collapse_check,
    matlis_dual,
    torsion_part,
    verify_ttf_duality,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "FiniteModule",
    "HilbertSeries",
    "InternalCheckError",
    "InverseSystem",
    "MonomialIdeal",
    "NotArtinianError",
    "ParseError",
    "Polynomial",
    "QuotientModule",
    "SUITE_NAMES",
    "Subspace",
    "TtfTag",
    "VariableSet",
    "act",
    "adic_completion",
    "annihilator",
    "apolarity",
    "build_quotient",
    "classify",
    "diagram_ascii",
    "diagram_cells",
    "diagram_svg",
    "diagram_svg_pair",
    "dual_corners",
    "envelope_zero",
    "from_quotient",
    "hilbert",
    "hilbert_duality_check",
    "inner_span",
    "inverse_system",
    "is_coreduced_subspace",
    "is_gorenstein",
    "is_ideal_reduced",
    "jacobson_radical",
    "kernel",
    "largest_reduced_submodule",
    "level_collapse_check",
    "matlis_dual",
    "minimalize",
    "monomial_span",
    "outside_corners",
    "parse_input",
    "parse_polynomial",
    "perp_of_submodule",
    "reduced_membership_oracle",
    "render",
    "rref",
    "run_suite",
    "satisfies_radical_formula",
    "semiprime_bruteforce",
    "socle",
    "socle_dual",
    "staircase",
    "top_degree_check",
    "torsion_part",
    "truncated_dual",
    "truncated_dual_report",
    "verify_ttf_duality",
]
