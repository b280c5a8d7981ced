# SPDX-License-Identifier: Apache-2.0

"""Exhaustive search: solution enumeration, orbits, independence and domination"""

from toeplitz_queens.search.domination import DominationReport, covers_board, domination_number
from toeplitz_queens.search.enumerator import count_solutions, enumerate_solutions, naive_solutions
from toeplitz_queens.search.independence import max_independent, max_independent_search
from toeplitz_queens.search.orbits import EnumerationReport, build_report, count_fundamental, orbit_sizes

__all__ = [
    "DominationReport",
    "EnumerationReport",
    "build_report",
    "count_fundamental",
    "count_solutions",
    "covers_board",
    "domination_number",
    "enumerate_solutions",
    "max_independent",
    "max_independent_search",
    "naive_solutions",
    "orbit_sizes",
]
