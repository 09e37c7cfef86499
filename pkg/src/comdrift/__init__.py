"""comdrift: entropy-based community evolution indices for snapshot timelines.

Quantifies, in bits, how much each community splits, shrinks, merges, or
expands between consecutive partitions of a member population, and ships the
simulation and verification machinery for the indices' provable properties.
"""

from .errors import (
    ComdriftError,
    DegenerateTransition,
    DuplicateMember,
    EmptyInput,
    InvalidDistribution,
    InvalidParameter,
    ParseError,
    SnapshotError,
    TimelineError,
)
from .indices import (
    Distribution,
    IndexBounds,
    IndexBreakdown,
    Trend,
    as_distribution,
    classify_trend,
    d_shrink_d_eta,
    d_shrink_d_m,
    d_split_d_eta,
    d_split_d_m,
    entropy,
    index_bounds,
    index_breakdown,
    max_entropy,
    shrink_index,
    sigma,
    split_index,
)
from .io import (
    MembershipRecord,
    parse_membership,
    read_report,
    report_document,
    write_membership,
    write_report,
    write_sweep,
)
from .migration import (
    MigrationProfile,
    ReportEntry,
    Snapshot,
    TransitionReport,
    analyze_timeline,
    backward_profile,
    forward_profile,
    transition_report,
)
from .simulation import (
    PropertyViolation,
    SweepRow,
    even_distribution,
    gradient_check,
    property_suite,
    random_distribution,
    single_target_distribution,
    standard_sweep,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "ComdriftError",
    "DegenerateTransition",
    "DuplicateMember",
    "EmptyInput",
    "InvalidDistribution",
    "InvalidParameter",
    "ParseError",
    "SnapshotError",
    "TimelineError",
    "Distribution",
    "IndexBounds",
    "IndexBreakdown",
    "Trend",
    "as_distribution",
    "classify_trend",
    "d_shrink_d_eta",
    "d_shrink_d_m",
    "d_split_d_eta",
    "d_split_d_m",
    "entropy",
    "index_bounds",
    "index_breakdown",
    "max_entropy",
    "shrink_index",
    "sigma",
    "split_index",
    "MembershipRecord",
    "parse_membership",
    "read_report",
    "report_document",
    "write_membership",
    "write_report",
    "write_sweep",
    "MigrationProfile",
    "ReportEntry",
    "Snapshot",
    "TransitionReport",
    "analyze_timeline",
    "backward_profile",
    "forward_profile",
    "transition_report",
    "PropertyViolation",
    "SweepRow",
    "even_distribution",
    "gradient_check",
    "property_suite",
    "random_distribution",
    "single_target_distribution",
    "standard_sweep",
    "sweep",
    "__version__",
]
