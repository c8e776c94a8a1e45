"""Metric maximum TSP solvers: cycle covers, cycle gluing, and approximation schemes."""

from ._core import (
    Certificate,
    CycleCover,
    Instance,
    MaxTspError,
    MetricError,
    ParseError,
    SizeLimitExceeded,
    Tour,
    algorithm_a,
    asymptotic,
    brute_force_tour,
    eptas,
    estimate_doubling,
    exact,
    five_sixths,
    generate,
    held_karp_max,
    load_instance,
    max_weight_cycle_cover,
    max_weight_perfect_matching,
    minmax_transform,
    parse_instance,
    serdyukov_combine,
    validate_metric,
)

__all__ = [
    "Certificate",
    "CycleCover",
    "Instance",
    "MaxTspError",
    "MetricError",
    "ParseError",
    "SizeLimitExceeded",
    "Tour",
    "algorithm_a",
    "asymptotic",
    "brute_force_tour",
    "eptas",
    "estimate_doubling",
    "exact",
    "five_sixths",
    "generate",
    "held_karp_max",
    "load_instance",
    "max_weight_cycle_cover",
    "max_weight_perfect_matching",
    "minmax_transform",
    "parse_instance",
    "serdyukov_combine",
    "validate_metric",
]
