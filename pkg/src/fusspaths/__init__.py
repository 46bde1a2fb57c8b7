"""Exact enumeration of Dyck, Schroder, Fuss-Catalan and Fuss-Schroder paths.

The package provides lattice-path families keyed by type (the partition of
maximal east-run lengths), closed-form counting, the flaw add/remove
machinery that groups free paths into classes of size nk+1, the r-shift
bijection between large path families, the tracing map into sparse
noncrossing partitions, and an exhaustive verification harness.
"""

from .paths import (
    EAST,
    NORTH,
    DIAG,
    FAMILIES,
    FamilySpec,
    LatticePath,
    PathError,
    family_spec,
    is_member,
    parse_path,
    path_type,
)
from .partitions import PartitionStats, partition_stats, partitions_with_bounds
from .chung_feller import (
    AnnotatedPath,
    FlawReport,
    FlawRuleError,
    ShiftError,
    add_flaw,
    circular_shift,
    flaw_count,
    orbit,
    parse_annotated,
    remove_flaw,
)
from .bijections import shift_r
from .noncrossing import (
    NCPartition,
    arc_type,
    connected_components,
    is_noncrossing,
    is_sparse,
    nc_predicates,
    path_to_labels,
    small_partition,
    sparse_noncrossing_partitions,
    trace_to_partition,
)
from .verification import (
    VerifyReport,
    verify_chung_feller,
    verify_conjecture,
    verify_r_independence,
    verify_theorem,
)

__all__ = [
    "AnnotatedPath",
    "FlawReport",
    "FlawRuleError",
    "ShiftError",
    "add_flaw",
    "circular_shift",
    "flaw_count",
    "orbit",
    "parse_annotated",
    "remove_flaw",
    "shift_r",
    "NCPartition",
    "arc_type",
    "connected_components",
    "is_noncrossing",
    "is_sparse",
    "nc_predicates",
    "path_to_labels",
    "small_partition",
    "sparse_noncrossing_partitions",
    "trace_to_partition",
    "VerifyReport",
    "verify_chung_feller",
    "verify_conjecture",
    "verify_r_independence",
    "verify_theorem",
    "EAST",
    "NORTH",
    "DIAG",
    "FAMILIES",
    "FamilySpec",
    "LatticePath",
    "PathError",
    "family_spec",
    "is_member",
    "parse_path",
    "path_type",
    "PartitionStats",
    "partition_stats",
    "partitions_with_bounds",
]
