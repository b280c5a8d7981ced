# SPDX-License-Identifier: Apache-2.0

"""Recursive construction of full, Star and DoubleStar solutions

Write n = 3r + s. The boundary selections below take every value from r
(or r+1) up to n-1; what remains, after shifting indices, is a smaller board
of the same kind:

    s = 0: Star of order r+1, shifted by r-1
    s = 1: Full board of order r, shifted by r
    s = 2: transposed DoubleStar of order r+3, shifted by r-1

The sub-order satisfies the mod-4 condition whenever n does, so the recursion
always ends in one of the hard-coded orders 1, 4 and 5.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from toeplitz_queens.core.board import (
    BoardSpec,
    Placement,
    SolutionPermutation,
    Variant,
    cell_value,
    is_solvable,
    require_order,
)
from toeplitz_queens.core.certificate import infeasibility_certificate
from toeplitz_queens.core.errors import ConstructionInvariantError, InvalidOrderError, UnsolvableBoardError
from toeplitz_queens.core.symmetry import normalization_steps
from toeplitz_queens.core.verify import verify_solution, verify_variant_solution

logger = logging.getLogger(__name__)

# Orders the recursion bottoms out in
BASE_SOLUTIONS = {
    1: (1,),
    4: (3, 2, 4, 1),
    5: (4, 2, 5, 3, 1),
}


class CaseTag(str, Enum):
    BASE = "base"
    CASE_3R = "3r"
    CASE_3R_PLUS_1 = "3r+1"
    CASE_3R_PLUS_2 = "3r+2"


class ChildVariant(str, Enum):
    FULL = "full"
    STAR = "star"
    DOUBLE_STAR_TRANSPOSED = "double_star_transposed"


@dataclass(frozen=True)
class ConstructionTrace:
    """One level of the recursion: what was selected, and which sub-board finished the job"""

    n: int
    case_tag: CaseTag
    r: int
    boundary_cells: tuple = ()
    child: Optional["ConstructionTrace"] = None
    offset: int = 0
    child_variant: Optional[ChildVariant] = None
    child_symmetries: tuple = field(default=())

    @property
    def child_order(self) -> Optional[int]:
        return self.child.n if self.child else None

    def depth(self) -> int:
        return 1 + (self.child.depth() if self.child else 0)

    def levels(self):
        trace = self
        while trace is not None:
            yield trace
            trace = trace.child


def _check(condition: bool, message: str):
    if not condition:
        raise ConstructionInvariantError(message)


def _boundary(n: int, r: int, s: int) -> list:
    """Cells selected before recursing, with their values"""
    cells = [(n - k + 1, k) for k in range(1, r + 1)]
    upper = r - 1 if s == 0 else r
    cells += [(k, n - k) for k in range(1, upper + 1)]
    cells.append((2 * r, n) if s == 0 else (2 * r + 1, n))
    return [(i, j, cell_value(i, j)) for i, j in cells]


def _expected_boundary_values(n: int, r: int, s: int) -> set:
    return set(range(r + 1 if s == 2 else r, n))


def _expected_embedding(r: int, s: int) -> tuple[set, set]:
    if s == 0:
        return set(range(r, 2 * r)), set(range(r + 1, 2 * r + 1))
    if s == 1:
        return set(range(r + 1, 2 * r + 1)), set(range(r + 1, 2 * r + 1))
    return set(range(r + 1, 2 * r + 1)) | {2 * r + 2}, set(range(r + 1, 2 * r + 2))


def _sub_board(m: int, variant: ChildVariant) -> tuple[Placement, ConstructionTrace, tuple]:
    """Solve the sub-board of order m in its own coordinates"""
    solution, trace = _build(m)
    if variant is ChildVariant.FULL:
        return solution.cells(), trace, ()

    normalized, steps = normalization_steps(solution)
    cells = normalized.cells().without((m, 1))
    if variant is ChildVariant.STAR:
        _check(bool(verify_variant_solution(cells, BoardSpec(m, Variant.STAR))), f"Star({m}) sub-solution invalid")
        return cells, trace, tuple(steps)

    cells = cells.without((1, m - 1))
    _check(
        bool(verify_variant_solution(cells, BoardSpec(m, Variant.DOUBLE_STAR))),
        f"DoubleStar({m}) sub-solution invalid",
    )
    return cells.transpose(), trace, tuple(steps)


def _build(n: int) -> tuple[SolutionPermutation, ConstructionTrace]:
    _check(is_solvable(n), f"recursion reached unsolvable order {n}")
    r, s = divmod(n, 3)

    if n in BASE_SOLUTIONS:
        return SolutionPermutation(n, BASE_SOLUTIONS[n]), ConstructionTrace(n, CaseTag.BASE, r)
    _check(n > 5, f"order {n} is below 6 but not a base case")

    tag, child_order, offset, variant = {
        0: (CaseTag.CASE_3R, r + 1, r - 1, ChildVariant.STAR),
        1: (CaseTag.CASE_3R_PLUS_1, r, r, ChildVariant.FULL),
        2: (CaseTag.CASE_3R_PLUS_2, r + 3, r - 1, ChildVariant.DOUBLE_STAR_TRANSPOSED),
    }[s]
    _check(is_solvable(child_order), f"n = {n}: sub-order {child_order} violates the mod-4 condition")

    boundary = _boundary(n, r, s)
    _check(
        {v for _, _, v in boundary} == _expected_boundary_values(n, r, s)
        and len(boundary) == len(_expected_boundary_values(n, r, s)),
        f"n = {n}: boundary values do not match case {tag.value}",
    )

    child_cells, child_trace, steps = _sub_board(child_order, variant)
    embedded = child_cells.shift(offset, n)
    rows, columns = _expected_embedding(r, s)
    _check(
        {c[0] for c in embedded.cells} == rows and {c[1] for c in embedded.cells} == columns,
        f"n = {n}: embedded sub-board does not occupy rows {sorted(rows)} / columns {sorted(columns)}",
    )

    solution = SolutionPermutation.from_cells(n, [(i, j) for i, j, _ in boundary] + embedded.sorted_cells())
    result = verify_solution(solution)
    _check(bool(result), f"n = {n}: reassembled cells are not a solution ({result.detail})")

    trace = ConstructionTrace(
        n=n,
        case_tag=tag,
        r=r,
        boundary_cells=tuple(boundary),
        child=child_trace,
        offset=offset,
        child_variant=variant,
        child_symmetries=steps,
    )
    return solution, trace


def _require_solvable(n: int):
    require_order(n)
    if not is_solvable(n):
        raise UnsolvableBoardError(infeasibility_certificate(n))


def construct_solution(n: int) -> tuple[SolutionPermutation, ConstructionTrace]:
    """A solution of T_n for n = 0, 1 (mod 4), with the trace of how it was built"""
    _require_solvable(n)
    solution, trace = _build(n)
    logger.debug(f"constructed T_{n}: depth {trace.depth()}, cases {[t.case_tag.value for t in trace.levels()]}")
    return solution, trace


def _normalized(n: int) -> tuple[SolutionPermutation, ConstructionTrace]:
    _require_solvable(n)
    if n < 4:
        raise InvalidOrderError(f"Star and DoubleStar constructions need n >= 4, got {n}")
    solution, trace = construct_solution(n)
    return normalization_steps(solution)[0], trace


def construct_star(n: int) -> Placement:
    """Normalized solution of T_n with (n, 1) removed"""
    solution, _ = _normalized(n)
    return solution.cells().without((n, 1))


def construct_double_star(n: int) -> Placement:
    """Normalized solution of T_n with (n, 1) and (1, n-1) removed"""
    solution, _ = _normalized(n)
    return solution.cells().without((n, 1), (1, n - 1))


def construct_placement(n: int, variant: Variant = Variant.FULL) -> tuple[Placement, ConstructionTrace]:
    """Dispatch on the variant; the trace always describes the full construction"""
    variant = Variant(variant)
    if variant is Variant.FULL:
        solution, trace = construct_solution(n)
        return solution.cells(), trace
    solution, trace = _normalized(n)
    placement = solution.cells().without((n, 1))
    if variant is Variant.DOUBLE_STAR:
        placement = placement.without((1, n - 1))
    return placement, trace
