"""Analysis toolkit for binary codes of small Singleton defect.

Computes weight and distance distributions, classical size bounds,
systematic encodings, and Hamming-space isometry classes, and ships the
pruned backtracking searches that classify binary systematic AMDS codes
at desk scale.
"""

from .bounds import (
    BoundVerdict,
    amds_dimension_cap,
    bound_verdicts,
    hamming_max,
    is_amds,
    is_mds,
    mds_dimension_cap,
    plotkin_max,
    singleton_max,
)
from .classify import (
    ClassificationRecord,
    VerificationReport,
    admits_systematic_amds,
    build_witness,
    verify_all,
    verify_d1_d2_propositions,
    verify_mds_classification,
    verify_p_classification,
    verify_w_classification,
)
from .core import (
    BinaryCode,
    Codeword,
    DistributionReport,
    distance,
    distance_distribution,
    extend_parity,
    is_linear,
    min_distance,
    overlap,
    puncture_last,
    translate,
    weight,
    weight_distribution,
)
from .fileio import format_code, load_code, parse_code, save_code, span_from_rows
from .isometry import (
    Isometry,
    apply,
    are_isometric,
    are_p_equivalent,
    are_w_equivalent,
    canonical_form,
    dedupe_up_to_isometry,
)
from .systematic import (
    EncodingTable,
    EnumerationResult,
    check_d2_characterization,
    code_from_table,
    count_d1_amds,
    enumerate_systematic_amds,
    is_parity_check_function,
    is_systematic,
    table_from_code,
)

__all__ = [
    "BinaryCode",
    "BoundVerdict",
    "ClassificationRecord",
    "Codeword",
    "DistributionReport",
    "EncodingTable",
    "EnumerationResult",
    "Isometry",
    "VerificationReport",
    "admits_systematic_amds",
    "amds_dimension_cap",
    "apply",
    "are_isometric",
    "are_p_equivalent",
    "are_w_equivalent",
    "bound_verdicts",
    "build_witness",
    "canonical_form",
    "check_d2_characterization",
    "code_from_table",
    "count_d1_amds",
    "dedupe_up_to_isometry",
    "distance",
    "distance_distribution",
    "enumerate_systematic_amds",
    "extend_parity",
    "format_code",
    "hamming_max",
    "is_amds",
    "is_linear",
    "is_mds",
    "is_parity_check_function",
    "is_systematic",
    "load_code",
    "mds_dimension_cap",
    "min_distance",
    "overlap",
    "parse_code",
    "plotkin_max",
    "puncture_last",
    "save_code",
    "singleton_max",
    "span_from_rows",
    "table_from_code",
    "translate",
    "verify_all",
    "verify_d1_d2_propositions",
    "verify_mds_classification",
    "verify_p_classification",
    "verify_w_classification",
    "weight",
    "weight_distribution",
]
