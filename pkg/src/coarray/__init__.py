"""Difference-coarray robustness analysis for sparse linear arrays.

Public surface:

* array vocabulary: :func:`parse_and_normalize`, :func:`weight_table`,
  :func:`coarray_profile`, :func:`indicator_sequence`,
  :func:`weight_table_via_autocorrelation`, :func:`difference_set`
* robustness: :func:`check_ddb`, :func:`single_failure_sweep`,
  :func:`classify`, :func:`is_essential`
* family auditing: :func:`optimal_params`, :func:`generate_2fra`,
  :func:`scan_family`, :func:`periodicity_report`
* DOA demos: :class:`DOAScenario`, :func:`simulate_snapshots`,
  :func:`coarray_music`, :func:`compare_health_states`
"""

from .arrays import (
    CoarrayProfile,
    IndicatorSequence,
    SensorArray,
    WeightTable,
    coarray_profile,
    difference_set,
    indicator_sequence,
    parse_and_normalize,
    parse_positions_text,
    weight_table,
    weight_table_via_autocorrelation,
)
from .errors import CoarrayError
from .family import (
    FamilyConfig2FRA,
    PeriodicitySummary,
    ScanRow,
    generate_2fra,
    optimal_params,
    periodicity_report,
    scan_family,
)
from .music import (
    DOAResult,
    DOAScenario,
    coarray_lag_averages,
    coarray_music,
    compare_health_states,
    simulate_snapshots,
    smoothed_coarray_matrix,
    steering_vector,
)
from .robustness import (
    FailureOutcome,
    RobustnessReport,
    Verdict,
    check_ddb,
    classify,
    is_essential,
    single_failure_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "CoarrayError",
    "CoarrayProfile",
    "DOAResult",
    "DOAScenario",
    "FailureOutcome",
    "FamilyConfig2FRA",
    "IndicatorSequence",
    "PeriodicitySummary",
    "RobustnessReport",
    "ScanRow",
    "SensorArray",
    "Verdict",
    "WeightTable",
    "check_ddb",
    "classify",
    "coarray_lag_averages",
    "coarray_music",
    "coarray_profile",
    "compare_health_states",
    "difference_set",
    "generate_2fra",
    "indicator_sequence",
    "is_essential",
    "optimal_params",
    "parse_and_normalize",
    "parse_positions_text",
    "periodicity_report",
    "scan_family",
    "simulate_snapshots",
    "single_failure_sweep",
    "smoothed_coarray_matrix",
    "steering_vector",
    "weight_table",
    "weight_table_via_autocorrelation",
    "__version__",
]
