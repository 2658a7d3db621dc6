# Copyright 2026 The trico Authors.
# SPDX-License-Identifier: Apache-2.0
"""Finite chain ring arithmetic and classification of binomials and polycyclic codes."""

from trico._trico import (
    Binomial,
    BoundExceeded,
    Code,
    CrossDegreeRefusal,
    Element,
    InvalidArgument,
    NotAUnit,
    ParseError,
    Ring,
    RingMismatch,
    TricoError,
    class_representatives,
    count_classes_k,
    count_classes_k_bruteforce,
    count_classes_total,
    enumerate_codes,
    isometry_b1_classify,
    kernel_size,
    n_equivalent,
    omega,
    restricted_class_count,
    restricted_equivalent,
    run_cli,
    standard_form,
)

__all__ = [
    "Binomial",
    "BoundExceeded",
    "Code",
    "CrossDegreeRefusal",
    "Element",
    "InvalidArgument",
    "NotAUnit",
    "ParseError",
    "Ring",
    "RingMismatch",
    "TricoError",
    "class_representatives",
    "count_classes_k",
    "count_classes_k_bruteforce",
    "count_classes_total",
    "enumerate_codes",
    "isometry_b1_classify",
    "kernel_size",
    "n_equivalent",
    "omega",
    "restricted_class_count",
    "restricted_equivalent",
    "run_cli",
    "standard_form",
]
