"""Core numerics: states, phase-space functions, quadrature and functionals."""

from cvcomplexity.core.closedform import (
    fock_closed,
    gaussian_closed,
    optimal_gaussian_at_energy,
    s_gaussian_closed,
    search_gaussian_extrema,
)
from cvcomplexity.core.functionals import (
    complexity,
    fisher_information,
    s_complexity,
    wehrl_entropy,
)
from cvcomplexity.core.phasespace import (
    husimi_grad,
    husimi_q,
    quasiprob_s,
    s_admissible,
)
from cvcomplexity.core.quantifiers import (
    mandel_q,
    nonclassical_depth,
    nongaussianity_fock,
    quantifier_row,
    skew_info_nonclassicality,
    wigner_negativity,
)
from cvcomplexity.core.states import (
    dump_state_spec,
    mean_photon,
    parse_state_spec,
    to_fock_matrix,
    validate,
)

__all__ = [
    "complexity",
    "dump_state_spec",
    "fisher_information",
    "fock_closed",
    "gaussian_closed",
    "husimi_grad",
    "husimi_q",
    "mandel_q",
    "mean_photon",
    "nonclassical_depth",
    "nongaussianity_fock",
    "optimal_gaussian_at_energy",
    "parse_state_spec",
    "quantifier_row",
    "quasiprob_s",
    "s_admissible",
    "s_complexity",
    "s_gaussian_closed",
    "search_gaussian_extrema",
    "skew_info_nonclassicality",
    "to_fock_matrix",
    "validate",
    "wehrl_entropy",
    "wigner_negativity",
]
