# SPDX-License-Identifier: Apache-2.0

"""Placement of n-1 nonattacking queens on T_n, for every n >= 2"""

from dataclasses import dataclass

from toeplitz_queens.core.board import Placement, require_order


@dataclass(frozen=True)
class Gaps:
    """The single row, column and value left without a queen"""

    row: int
    column: int
    value: int


def construct_n_minus_1(n: int) -> Placement:
    """(1,1); (n+1-i, i+1) for i < ceil(n/2); (j, n+3-j) for 3 <= j <= floor(n/2)+1"""
    require_order(n, 2)
    cells = [(1, 1)]
    cells += [(n + 1 - i, i + 1) for i in range(1, (n + 1) // 2)]
    cells += [(j, n + 3 - j) for j in range(3, n // 2 + 2)]
    return Placement(n, cells)


def n_minus_1_gaps(n: int) -> Gaps:
    require_order(n, 2)
    return Gaps(row=2, column=(n + 1) // 2 + 1, value=n - 1)
