"""Numerical duplications S ⋈^b E and their Gorenstein, almost Gorenstein,
complete intersection and type classification."""

from .classify import (
    ClassificationReport,
    classify_max_ideal_dup,
    dup_canonical_model,
    dup_type_ag,
    dup_type_formula,
    full_report,
    is_ag_conditions,
    is_ag_ring_route,
    is_ci_dup,
    is_ci_semigroup,
    is_gorenstein_dup,
)
from .construct import ag_family, ideal_from_overring, intermediate_semigroups
from .duplication import (
    DuplicationSpec,
    auto_translate,
    duplicate,
    numerical_duplication,
    valid_b_values,
)
from .ideals import (
    RelativeIdeal,
    canonical_ideal,
    enumerate_normalized_ideals,
    ideal_from_generators,
    lambda_between,
    maximal_ideal,
)
from .oracle import AgreementReport, SweepSummary, sweep, verify_duplication
from .semigroup import NumericalSemigroup, enumerate_by_genus, from_generators

__all__ = [name for name in dir() if not name.startswith("_")]
