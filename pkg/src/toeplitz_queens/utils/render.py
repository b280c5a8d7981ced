# SPDX-License-Identifier: Apache-2.0

"""ASCII rendering of placements on T_n"""

from dataclasses import dataclass
from typing import Optional

from toeplitz_queens.core.board import BoardSpec, Placement, Variant, cell_value
from toeplitz_queens.core.errors import OutOfRegionError, ToeplitzQueensError

EMPTY = "."
REMOVED = "-"


@dataclass(frozen=True)
class RenderOptions:
    show_values: bool = False
    queen_glyph: str = "Q"
    cell_width: int = 3

    def __post_init__(self):
        if len(self.queen_glyph) != 1:
            raise ToeplitzQueensError(f"queen glyph must be a single character, got {self.queen_glyph!r}")
        if self.cell_width < 1:
            raise ToeplitzQueensError(f"cell width must be positive, got {self.cell_width}")


def minimum_cell_width(n: int) -> int:
    return len(str(max(n - 1, 0))) + 1


def render_board(p: Placement, spec: Optional[BoardSpec] = None, options: RenderOptions = RenderOptions()) -> str:
    """n x n grid with column indices on top and row indices on the left

    Squares deleted by a Star/DoubleStar variant are drawn as '-'. Raises
    OutOfRegionError for a queen that is not on the board.
    """
    n = p.n
    spec = spec or BoardSpec(n, Variant.FULL)
    for cell in p.sorted_cells():
        if not spec.contains(cell):
            raise OutOfRegionError(cell, spec)
    w = options.cell_width
    if w < minimum_cell_width(n):
        raise ToeplitzQueensError(f"cell width {w} is too narrow for n = {n}; need {minimum_cell_width(n)}")

    lines = [" " * w + "".join(f"{j:>{w}}" for j in range(1, n + 1))]
    for i in range(1, n + 1):
        row = [f"{i:>{w}}"]
        for j in range(1, n + 1):
            if (i, j) in p.cells:
                mark = options.queen_glyph
            elif not spec.contains((i, j)):
                mark = REMOVED
            elif options.show_values:
                mark = str(cell_value(i, j))
            else:
                mark = EMPTY
            row.append(f"{mark:>{w}}")
        lines.append("".join(row))
    return "\n".join(line.rstrip() for line in lines)
