# SPDX-License-Identifier: Apache-2.0

"""Exceptions raised by the solver library"""


class ToeplitzQueensError(ValueError):
    """Base class for every user-facing error of the library"""


class InvalidOrderError(ToeplitzQueensError):
    """Board order outside the domain of the requested operation"""


class UnsolvableBoardError(ToeplitzQueensError):
    """Full solution requested for n = 2, 3 (mod 4)

    Carries the infeasibility certificate so callers can report it.
    """

    def __init__(self, certificate):
        self.certificate = certificate
        super().__init__(
            f"T_{certificate.n} has no solution: n = {certificate.residue_mod_4} (mod 4), "
            f"n(2n^2+9n+1) = {certificate.quantity} = {certificate.quantity_mod_12} (mod 12)"
        )


class SolvableBoardError(ToeplitzQueensError):
    """Infeasibility data requested for a solvable order"""

    def __init__(self, n):
        self.n = n
        super().__init__(f"board is solvable, no certificate exists (n = {n}, n mod 4 = {n % 4})")


class OutOfRegionError(ToeplitzQueensError):
    """A placement cell lies outside the board region it is checked against"""

    def __init__(self, cell, spec):
        self.cell = cell
        self.spec = spec
        super().__init__(f"cell {cell} lies outside the valid region of {spec}")


class CapExceededError(ToeplitzQueensError):
    """Exhaustive search requested beyond the configured cap"""

    def __init__(self, operation, n, cap):
        self.operation = operation
        self.n = n
        self.cap = cap
        hint = "use count-only mode, " if operation == "enumerate" else ""
        super().__init__(
            f"{operation}: n = {n} exceeds the cap of {cap}; "
            f"{hint}pass --cap or set TOEPLITZ_QUEENS_CAPS to override"
        )


class PlacementFormatError(ToeplitzQueensError):
    """A JSON placement document could not be decoded"""


class ConfigError(ToeplitzQueensError):
    """Malformed caps or configuration value"""


class ConstructionInvariantError(AssertionError):
    """The recursive constructor broke one of its own invariants (a bug, never a result)"""
