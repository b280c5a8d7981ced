# SPDX-License-Identifier: Apache-2.0

"""Value-preserving symmetries of T_n and solution normalization

The four maps below keep |i - j| unchanged and form a Klein four-group:
every element is an involution and any two non-identity elements compose
to the third.
"""

from enum import Enum

from toeplitz_queens.core.board import Cell, Placement, SolutionPermutation, require_order
from toeplitz_queens.core.errors import InvalidOrderError, ToeplitzQueensError


class SymmetryElement(str, Enum):
    IDENTITY = "identity"
    TRANSPOSE = "transpose"            # (i, j) -> (j, i)
    ROTATE_180 = "rotate180"           # (i, j) -> (n+1-i, n+1-j)
    ANTI_TRANSPOSE = "anti_transpose"  # (i, j) -> (n+1-j, n+1-i)

    @property
    def swaps(self) -> bool:
        return self in (SymmetryElement.TRANSPOSE, SymmetryElement.ANTI_TRANSPOSE)

    @property
    def flips(self) -> bool:
        return self in (SymmetryElement.ROTATE_180, SymmetryElement.ANTI_TRANSPOSE)


GROUP = tuple(SymmetryElement)

_BY_FLAGS = {(g.swaps, g.flips): g for g in GROUP}


def compose(g: SymmetryElement, h: SymmetryElement) -> SymmetryElement:
    """g after h"""
    return _BY_FLAGS[(g.swaps != h.swaps, g.flips != h.flips)]


def apply_symmetry_to_cell(g: SymmetryElement, cell: Cell, n: int) -> Cell:
    i, j = cell
    if g.swaps:
        i, j = j, i
    if g.flips:
        i, j = n + 1 - i, n + 1 - j
    return i, j


def apply_symmetry_to_placement(g: SymmetryElement, p: Placement) -> Placement:
    return Placement(p.n, (apply_symmetry_to_cell(g, c, p.n) for c in p.cells))


def apply_symmetry(g: SymmetryElement, s: SolutionPermutation) -> SolutionPermutation:
    """Image of a solution; valid solutions map to valid solutions"""
    n = s.n
    f = list(s.f)
    if g.swaps:
        # the transpose of a permutation matrix is its inverse
        inverse = [0] * n
        for i, fi in enumerate(f, start=1):
            if 1 <= fi <= n:
                inverse[fi - 1] = i
        f = inverse
    if g.flips:
        f = [n + 1 - fi for fi in reversed(f)]
    return SolutionPermutation(n, tuple(f))


def orbit(s: SolutionPermutation) -> set:
    return {apply_symmetry(g, s) for g in GROUP}


def normalization_steps(s: SolutionPermutation) -> tuple[SolutionPermutation, list]:
    """Normalized solution together with the symmetries applied, in order

    Value n-1 sits only at (n, 1) or (1, n); a transpose moves it to (n, 1).
    With row n and column 1 taken, value n-2 sits at (1, n-1) or (2, n), and
    the anti-transpose fixes (n, 1) while sending (2, n) to (1, n-1).
    """
    n = s.n
    require_order(n)
    if n < 4:
        raise InvalidOrderError(f"normalization needs n >= 4, got {n}")

    steps = []
    if s(n) != 1:
        if s(1) != n:
            raise ToeplitzQueensError(f"not a solution of T_{n}: value {n - 1} is not selected")
        s = apply_symmetry(SymmetryElement.TRANSPOSE, s)
        steps.append(SymmetryElement.TRANSPOSE)
    if s(1) != n - 1:
        if s(2) != n:
            raise ToeplitzQueensError(f"not a solution of T_{n}: value {n - 2} is not selected")
        s = apply_symmetry(SymmetryElement.ANTI_TRANSPOSE, s)
        steps.append(SymmetryElement.ANTI_TRANSPOSE)
    return s, steps


def normalize_solution(s: SolutionPermutation) -> SolutionPermutation:
    """Move a solution within its orbit so it contains (n, 1) and (1, n-1)"""
    return normalization_steps(s)[0]
