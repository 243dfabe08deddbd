"""Exact computation with lower previsions and exact functionals.

The library works over finite possibility spaces with exact rational
arithmetic throughout, so every check of coherence, exactness,
n-monotonicity or comonotone additivity is a decision, never a
tolerance, and every negative verdict ships a witness that re-checks
by substitution.
"""

from .assessment import (
    Assessment,
    ExactDecomposition,
    LowerEnvelope,
    MassFunctional,
    evaluate,
)
from .choquet import (
    AdditivityGap,
    ChoquetResult,
    DecreasingDistribution,
    choquet_integral,
    decreasing_distribution,
    is_comonotone_additive,
)
from .consistency import (
    CoherenceGap,
    NormIntervalGap,
    SureLossWitness,
    UnattainableGamble,
    avoids_sure_loss,
    conjugate,
    decompose,
    find_attaining,
    is_coherent,
    is_exact,
    natural_extension_exact,
    natural_extension_prevision,
    norm,
)
from .errors import (
    ClosureBudgetError,
    DomainError,
    NotExactError,
    SpaceMismatchError,
    SureLossError,
)
from .gambles import (
    Event,
    Gamble,
    GambleLattice,
    HomomorphismTable,
    Space,
    WedgeWitness,
    check_wedge_homomorphism,
    is_comonotone,
    is_field,
    is_lattice_closed,
    join,
    lattice_closure,
    meet,
    sort_gambles,
)
from .monotone import (
    MinPreservationGap,
    MobiusTransform,
    MonotonicityReport,
    MonotonicityViolation,
    compose_homomorphism,
    inner_extension,
    inner_set_function,
    is_completely_monotone,
    is_n_alternating,
    is_n_monotone,
    minimum_preserving_check,
    minimum_table,
    mobius,
    powerset_inner,
    vacuous,
)
from .rational import format_rational, parse_rational
from .simplex import (
    Constraint,
    LinearProgram,
    LPOutcome,
    LPStatus,
    Relation,
    solve,
)
from .verdict import Verdict

__version__ = "0.1.0"

__all__ = [
    "Assessment",
    "ExactDecomposition",
    "LowerEnvelope",
    "MassFunctional",
    "evaluate",
    "AdditivityGap",
    "ChoquetResult",
    "DecreasingDistribution",
    "choquet_integral",
    "decreasing_distribution",
    "is_comonotone_additive",
    "CoherenceGap",
    "NormIntervalGap",
    "SureLossWitness",
    "UnattainableGamble",
    "avoids_sure_loss",
    "conjugate",
    "decompose",
    "find_attaining",
    "is_coherent",
    "is_exact",
    "natural_extension_exact",
    "natural_extension_prevision",
    "norm",
    "ClosureBudgetError",
    "DomainError",
    "NotExactError",
    "SpaceMismatchError",
    "SureLossError",
    "Event",
    "Gamble",
    "GambleLattice",
    "HomomorphismTable",
    "Space",
    "WedgeWitness",
    "check_wedge_homomorphism",
    "is_comonotone",
    "is_field",
    "is_lattice_closed",
    "join",
    "lattice_closure",
    "meet",
    "sort_gambles",
    "MinPreservationGap",
    "MobiusTransform",
    "MonotonicityReport",
    "MonotonicityViolation",
    "compose_homomorphism",
    "inner_extension",
    "inner_set_function",
    "is_completely_monotone",
    "is_n_alternating",
    "is_n_monotone",
    "minimum_preserving_check",
    "minimum_table",
    "mobius",
    "powerset_inner",
    "vacuous",
    "format_rational",
    "parse_rational",
    "Constraint",
    "LinearProgram",
    "LPOutcome",
    "LPStatus",
    "Relation",
    "solve",
    "Verdict",
]
