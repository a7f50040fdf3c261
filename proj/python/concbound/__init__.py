"""Concurrence lower bounds for multipartite quantum states.

Subsystem indices are 0-based; partition strings use 1-based labels
("12|3|4").
"""

from ._core import (
    avg_partition_concurrence_sq,
    bound,
    double_bell,
    enumerate_partitions,
    example_sweep_csv,
    generalized_ghz,
    ghz_sweep_csv,
    isotropic_mixture,
    partial_trace,
    partial_transpose,
    partition_concurrence,
    pure_concurrence,
    random_density,
    random_pure,
    realign,
    reference_curves,
    roof_upper,
    trace_norm,
    wootters_concurrence,
)

__all__ = [
    "avg_partition_concurrence_sq",
    "bound",
    "double_bell",
    "enumerate_partitions",
    "example_sweep_csv",
    "generalized_ghz",
    "ghz_sweep_csv",
    "isotropic_mixture",
    "partial_trace",
    "partial_transpose",
    "partition_concurrence",
    "pure_concurrence",
    "random_density",
    "random_pure",
    "realign",
    "reference_curves",
    "roof_upper",
    "trace_norm",
    "wootters_concurrence",
]
