# SPDX-License-Identifier: Apache-2.0

"""Constructive side: full, Star and DoubleStar solutions, and n-1 placements"""

from toeplitz_queens.construct.independent import construct_n_minus_1, n_minus_1_gaps
from toeplitz_queens.construct.solution import (
    CaseTag,
    ConstructionTrace,
    construct_double_star,
    construct_placement,
    construct_solution,
    construct_star,
)

__all__ = [
    "CaseTag",
    "ConstructionTrace",
    "construct_double_star",
    "construct_n_minus_1",
    "construct_placement",
    "construct_solution",
    "construct_star",
    "n_minus_1_gaps",
]
