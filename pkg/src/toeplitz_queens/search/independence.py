# SPDX-License-Identifier: Apache-2.0

"""Maximum number of mutually nonattacking queens on T_n"""

import logging

from toeplitz_queens.construct.independent import construct_n_minus_1
from toeplitz_queens.construct.solution import construct_solution
from toeplitz_queens.core.board import BoardSpec, Placement, is_solvable, require_order
from toeplitz_queens.core.errors import CapExceededError, ToeplitzQueensError
from toeplitz_queens.core.verify import verify_nonattacking

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 10


def max_independent_search(n: int) -> tuple[int, Placement]:
    """Branch and bound over rows: each row gets one queen or none"""
    require_order(n)
    if n > EXHAUSTIVE_LIMIT:
        raise CapExceededError("max-independent search", n, EXHAUSTIVE_LIMIT)

    best = [0, []]

    def visit(row, columns, values, chosen):
        if len(chosen) + (n - row + 1) <= best[0]:
            return
        if row > n:
            best[0], best[1] = len(chosen), list(chosen)
            return
        for j in range(1, n + 1):
            v = abs(row - j)
            if not (columns >> j) & 1 and not (values >> v) & 1:
                chosen.append((row, j))
                visit(row + 1, columns | 1 << j, values | 1 << v, chosen)
                chosen.pop()
                if best[0] == n:
                    return
        visit(row + 1, columns, values, chosen)

    visit(1, 0, 0, [])
    return best[0], Placement(n, best[1])


def max_independent(n: int) -> tuple[int, Placement]:
    """n queens when T_n is solvable, otherwise n-1; exhaustively confirmed for small n"""
    require_order(n)
    if is_solvable(n):
        k, witness = n, construct_solution(n)[0].cells()
    else:
        k, witness = n - 1, construct_n_minus_1(n)

    if not verify_nonattacking(witness, BoardSpec(n)) or len(witness) != k:
        raise ToeplitzQueensError(f"witness for n = {n} is not {k} nonattacking queens")
    if n <= EXHAUSTIVE_LIMIT:
        searched, _ = max_independent_search(n)
        if searched != k:
            raise ToeplitzQueensError(f"exhaustive search found {searched} queens on T_{n}, construction gave {k}")
        logger.debug(f"T_{n}: exhaustive search confirms {k} queens is the maximum")
    return k, witness
