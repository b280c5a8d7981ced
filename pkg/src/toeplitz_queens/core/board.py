# SPDX-License-Identifier: Apache-2.0

"""Board model for the symmetric Toeplitz matrix T_n and its two reduced variants

All indices are 1-based. Star and DoubleStar boards keep the coordinates of
the parent T_n; only the set of valid rows and columns shrinks.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from toeplitz_queens.core.errors import InvalidOrderError

Cell = tuple[int, int]


class Variant(str, Enum):
    """Which part of T_n is in play"""

    FULL = "full"
    STAR = "star"
    DOUBLE_STAR = "double_star"

    @classmethod
    def parse(cls, text: str) -> "Variant":
        """Accept both the JSON spelling and the CLI spelling ('double-star')"""
        try:
            return cls(text.replace("-", "_"))
        except ValueError:
            choices = ", ".join(v.value for v in cls)
            raise ValueError(f"Invalid variant '{text}'. Must be one of: {choices}")


# Smallest order for which each variant has at least one row and column
_MIN_ORDER = {Variant.FULL: 1, Variant.STAR: 2, Variant.DOUBLE_STAR: 3}

# How many values each variant must cover, counted down from n
_VALUE_DEFICIT = {Variant.FULL: 0, Variant.STAR: 1, Variant.DOUBLE_STAR: 2}


def require_order(n, minimum: int = 1, what: str = "board order") -> int:
    """Reject non-integers and orders below ``minimum``"""
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidOrderError(f"{what} must be an integer, got {n!r}")
    if n < minimum:
        raise InvalidOrderError(f"{what} must be at least {minimum}, got {n}")
    return n


def cell_value(i: int, j: int) -> int:
    """Entry t_ij = |i - j| of T_n"""
    return abs(i - j)


def is_solvable(n: int) -> bool:
    """True iff T_n admits n nonattacking queens, i.e. n = 0, 1 (mod 4)"""
    require_order(n)
    return n % 4 in (0, 1)


@dataclass(frozen=True)
class BoardSpec:
    """An order together with the variant that decides which cells are valid"""

    n: int
    variant: Variant = Variant.FULL

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        require_order(self.n, _MIN_ORDER[self.variant], f"order of a {self.variant.value} board")

    @property
    def rows(self) -> range:
        if self.variant is Variant.FULL:
            return range(1, self.n + 1)
        if self.variant is Variant.STAR:
            return range(1, self.n)
        return range(2, self.n)

    @property
    def columns(self) -> tuple[int, ...]:
        if self.variant is Variant.FULL:
            return tuple(range(1, self.n + 1))
        if self.variant is Variant.STAR:
            return tuple(range(2, self.n + 1))
        return tuple(c for c in range(2, self.n + 1) if c != self.n - 1)

    @property
    def required_values(self) -> range:
        return range(self.n - _VALUE_DEFICIT[self.variant])

    @property
    def size(self) -> int:
        """Number of rows (equal to the number of columns and of required values)"""
        return self.n - _VALUE_DEFICIT[self.variant]

    def contains(self, cell: Cell) -> bool:
        row, col = cell
        if self.variant is Variant.DOUBLE_STAR and col == self.n - 1:
            return False
        return row in self.rows and col in range(2 if self.variant is not Variant.FULL else 1, self.n + 1)

    def __str__(self):
        return f"{self.variant.value} board of order {self.n}"


@dataclass(frozen=True)
class Placement:
    """Cells carrying queens on a board of order n

    Row/column distinctness is not enforced here; the verifiers check it.
    A cell listed more than once is stored once and remembered in ``repeated``.
    """

    n: int
    cells: frozenset
    repeated: tuple = field(default=(), compare=False, repr=False)

    def __init__(self, n: int, cells: Iterable[Cell] = ()):
        listed = Counter((int(r), int(c)) for r, c in cells)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "cells", frozenset(listed))
        object.__setattr__(self, "repeated", tuple(sorted(c for c, m in listed.items() if m > 1)))

    @classmethod
    def from_permutation(cls, solution: "SolutionPermutation") -> "Placement":
        return cls(solution.n, ((i, fi) for i, fi in enumerate(solution.f, start=1)))

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.sorted_cells())

    def __contains__(self, cell):
        return tuple(cell) in self.cells

    def sorted_cells(self) -> list[Cell]:
        """Cells in canonical order (ascending row, then column)"""
        return sorted(self.cells)

    def values(self) -> list[int]:
        return [cell_value(r, c) for r, c in self.sorted_cells()]

    def without(self, *cells: Cell) -> "Placement":
        drop = {tuple(c) for c in cells}
        return Placement(self.n, (c for c in self.cells if c not in drop))

    def with_cells(self, *cells: Cell) -> "Placement":
        return Placement(self.n, self.cells | {tuple(c) for c in cells})

    def transpose(self) -> "Placement":
        return Placement(self.n, ((c, r) for r, c in self.cells))

    def shift(self, offset: int, n: Optional[int] = None) -> "Placement":
        """Translate every cell by (offset, offset), optionally re-homing it on a board of order n"""
        return Placement(self.n if n is None else n, ((r + offset, c + offset) for r, c in self.cells))

    def to_permutation(self) -> Optional["SolutionPermutation"]:
        """The permutation these cells encode, or None if they are not one cell per row 1..n"""
        by_row = dict(self.cells)
        if len(by_row) != self.n or len(self.cells) != self.n or set(by_row) != set(range(1, self.n + 1)):
            return None
        return SolutionPermutation(self.n, tuple(by_row[i] for i in range(1, self.n + 1)))


@dataclass(frozen=True)
class SolutionPermutation:
    """A candidate full solution f, stored as f[i-1] = f(i)"""

    n: int
    f: tuple

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(int(x) for x in self.f))

    @classmethod
    def from_cells(cls, n: int, cells: Iterable[Cell]) -> "SolutionPermutation":
        by_row = dict(cells)
        return cls(n, tuple(by_row.get(i, 0) for i in range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.f[i - 1]

    def cells(self) -> Placement:
        return Placement.from_permutation(self)

    def displacements(self) -> list[int]:
        return [abs(fi - i) for i, fi in enumerate(self.f, start=1)]
