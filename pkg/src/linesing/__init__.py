"""Exact counts of surfaces in P^3 that are singular along a variable line.

The package computes, for a surface degree d and a singularity order k, the
number N of degree-d surfaces singular to order k along some line and
passing through delta generic points, by exact intersection theory on the
space of lines.  Everything is rational arithmetic with no rounding; the
heavy series kernels have a compiled core with a pure Python fallback.
"""

from ._kernel import BACKEND
from .chern import (
    ChernCharacter,
    PowerSums,
    TotalChernClass,
    c4_from_power_sums,
    chern_from_power_sums,
    chern_nu,
    chern_tau_star,
    invert_total,
    power_sums_from_negated_character,
)
from .counting import (
    CountResult,
    CountWarning,
    PipelineError,
    QueryError,
    SurfaceQuery,
    character_closed_form,
    character_via_resolution,
    count_closed_form,
    count_via_pipeline,
    phi_factor,
    point_conditions,
    power_sums_closed_form,
)
from .oracles import (
    ReferenceTable,
    monomial_rank,
    planes_count_cases,
    planes_count_closed,
    reference_table,
)
from .schubert import (
    CohClass,
    SchubertBasis,
    one,
    sigma1,
    sigma11,
    sigma2,
    sigma21,
    sigma22,
    zero,
)
from .series import AdamsWeightPolynomial, RingSeries, adams_weight_series
from .sym import ch_nu, ch_sym_adams, ch_sym_direct, ch_wedge2_nu

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AdamsWeightPolynomial",
    "ChernCharacter",
    "CohClass",
    "CountResult",
    "CountWarning",
    "PipelineError",
    "PowerSums",
    "QueryError",
    "ReferenceTable",
    "RingSeries",
    "SchubertBasis",
    "SurfaceQuery",
    "TotalChernClass",
    "adams_weight_series",
    "c4_from_power_sums",
    "ch_nu",
    "ch_sym_adams",
    "ch_sym_direct",
    "ch_wedge2_nu",
    "character_closed_form",
    "character_via_resolution",
    "chern_from_power_sums",
    "chern_nu",
    "chern_tau_star",
    "count_closed_form",
    "count_via_pipeline",
    "invert_total",
    "monomial_rank",
    "one",
    "phi_factor",
    "planes_count_cases",
    "planes_count_closed",
    "point_conditions",
    "power_sums_closed_form",
    "power_sums_from_negated_character",
    "reference_table",
    "sigma1",
    "sigma11",
    "sigma2",
    "sigma21",
    "sigma22",
    "zero",
]
