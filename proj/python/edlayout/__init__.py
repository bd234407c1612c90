"""Emergency department layout optimization.

Thin Python view of the C++ core: scenario access, genome evaluation, seeded
optimizer runs, quality indicators and the command line.
"""

from ._edlayout import (
    Error,
    InvalidArgument,
    ParseError,
    ValidationError,
    average_fitness,
    builtin_scenario_json,
    describe,
    evaluate,
    genome_length,
    global_measures,
    hypervolume,
    optimize,
    run_cli,
    set_coverage,
    sign_test_p,
    wilcoxon_signed_rank,
)

__all__ = [
    "Error",
    "InvalidArgument",
    "ParseError",
    "ValidationError",
    "average_fitness",
    "builtin_scenario_json",
    "describe",
    "evaluate",
    "genome_length",
    "global_measures",
    "hypervolume",
    "optimize",
    "run_cli",
    "set_coverage",
    "sign_test_p",
    "wilcoxon_signed_rank",
]

__version__ = "0.1.0"
