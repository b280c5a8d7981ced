# SPDX-License-Identifier: Apache-2.0

"""Fundamental solutions: orbits of the solution set under the four board symmetries"""

import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from toeplitz_queens.core.board import SolutionPermutation
from toeplitz_queens.core.errors import ToeplitzQueensError
from toeplitz_queens.core.symmetry import GROUP, apply_symmetry, orbit
from toeplitz_queens.search.enumerator import count_solutions, enumerate_solutions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumerationReport:
    n: int
    total_count: int
    fundamental_count: Optional[int] = None
    representatives: tuple = ()
    elapsed: float = 0.0
    orbit_sizes: dict = field(default_factory=dict)
    solutions: tuple = ()


def partition_orbits(solutions: list) -> list:
    """Orbits of a symmetry-closed solution list, ordered by their smallest member"""
    remaining = {s.f: s for s in solutions}
    orbits = []
    for s in solutions:
        if s.f not in remaining:
            continue
        members = orbit(s)
        missing = [m for m in members if m.f not in remaining]
        if missing:
            raise ToeplitzQueensError(f"solution set of T_{s.n} is not closed under the symmetry group")
        for m in members:
            del remaining[m.f]
        orbits.append(sorted(members, key=lambda m: m.f))
    return orbits


def burnside_count(solutions: list) -> int:
    """Orbit count as the average number of solutions each group element fixes"""
    fixed = sum(1 for g in GROUP for s in solutions if apply_symmetry(g, s) == s)
    if fixed % len(GROUP):
        raise ToeplitzQueensError("fixed-point total is not divisible by the group order")
    return fixed // len(GROUP)


def count_fundamental(n: int, cap: Optional[int] = None, workers: Optional[int] = None) -> tuple[int, list]:
    """(number of orbits, lexicographically smallest member of each orbit)"""
    solutions = enumerate_solutions(n, cap=cap, workers=workers)
    orbits = partition_orbits(solutions)
    if sum(len(o) for o in orbits) != len(solutions):
        raise ToeplitzQueensError("orbit sizes do not add up to the solution count")
    if burnside_count(solutions) != len(orbits):
        raise ToeplitzQueensError("orbit partition disagrees with the Burnside count")
    return len(orbits), [o[0] for o in orbits]


def orbit_sizes(n: int, cap: Optional[int] = None, workers: Optional[int] = None) -> dict:
    """Histogram orbit size -> number of orbits of that size"""
    orbits = partition_orbits(enumerate_solutions(n, cap=cap, workers=workers))
    return dict(sorted(Counter(len(o) for o in orbits).items()))


def build_report(
    n: int,
    count_only: bool = False,
    fundamental: bool = False,
    cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> EnumerationReport:
    """Run the search in the requested mode and collect an EnumerationReport"""
    start = time.perf_counter()
    if count_only:
        total = count_solutions(n, cap=cap, workers=workers)
        return EnumerationReport(n, total, elapsed=time.perf_counter() - start)

    solutions = enumerate_solutions(n, cap=cap, workers=workers)
    if not fundamental:
        return EnumerationReport(
            n, len(solutions), elapsed=time.perf_counter() - start, solutions=tuple(solutions)
        )

    orbits = partition_orbits(solutions)
    if burnside_count(solutions) != len(orbits):
        raise ToeplitzQueensError("orbit partition disagrees with the Burnside count")
    sizes = dict(sorted(Counter(len(o) for o in orbits).items()))
    logger.info(f"T_{n}: {len(orbits)} fundamental solution(s), orbit sizes {sizes}")
    return EnumerationReport(
        n,
        len(solutions),
        fundamental_count=len(orbits),
        representatives=tuple(o[0] for o in orbits),
        elapsed=time.perf_counter() - start,
        orbit_sizes=sizes,
    )
