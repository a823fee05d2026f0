"""Mechanism mobility by the zebra-crossing method."""

from .analysis import (
    Branch,
    Comparison,
    ComparisonEntry,
    MobilityReport,
    ZebraCounts,
    analyze,
    analyze_counts,
    classify,
    compare,
    derive_counts,
    dof_general,
    dof_open,
    dof_planar_grey,
    kutzbach_planar,
    kutzbach_spatial,
    loop_count,
)
from .diagram import Patch, ZebraDiagram, build_diagram, patch_totals, render_svg, render_text
from .errors import (
    BoundsExceeded,
    CountsModeNotRenderable,
    Issue,
    LinkIsGround,
    MissingNs,
    OpenClassWithLoops,
    ParseError,
    TooLargeForExactSearch,
    ValidationError,
    ZebraError,
)
from .model import (
    Joint,
    Link,
    Mechanism,
    MergePartition,
    ValidatedMechanism,
    are_isomorphic,
    cycle_rank,
    ground_flow,
    ground_joint_count,
    merge_partition,
    validate,
)
from .textfmt import CountsRecord, parse, parse_file, serialize

__version__ = "0.1.0"
