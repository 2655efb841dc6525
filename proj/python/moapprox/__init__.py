"""Vector balancing, multi-objective MaxSAT and MaxATSP approximations."""

from ._core import (
    BudgetExceeded,
    DimensionError,
    Error,
    ParseError,
    PreconditionError,
    balance,
    certify,
    generate,
    machine_section,
    maxatsp,
    maxsat,
    maxsat_oracle,
    pareto_filter,
    run_cli,
    tsp_oracle,
)

__all__ = [
    "BudgetExceeded",
    "DimensionError",
    "Error",
    "ParseError",
    "PreconditionError",
    "balance",
    "certify",
    "generate",
    "machine_section",
    "maxatsp",
    "maxsat",
    "maxsat_oracle",
    "pareto_filter",
    "run_cli",
    "tsp_oracle",
]
