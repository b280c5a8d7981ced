# SPDX-License-Identifier: Apache-2.0

"""Counting-argument identities and infeasibility certificates

If f solves T_n then sum f(i)^2 = sum i^2 and sum |f(i)-i|^2 = sum_{k<n} k^2,
which forces

    sum i*f(i) = (2n(n+1)(2n+1) - (n-1)n(2n-1)) / 12 = n(2n^2+9n+1) / 12.

The numerator is an integer multiple of 12 exactly when n = 0, 1 (mod 4).
All arithmetic uses Python integers, so it is exact for any n.
"""

import logging
from dataclasses import asdict, dataclass
from enum import Enum

from toeplitz_queens.core.board import is_solvable, require_order
from toeplitz_queens.core.errors import SolvableBoardError, ToeplitzQueensError, UnsolvableBoardError

logger = logging.getLogger(__name__)


class ContradictionKind(str, Enum):
    EVEN_CASE = "EvenCase"  # n = 2 (mod 4): 2n^2+9n+1 is odd
    ODD_CASE = "OddCase"    # n = 3 (mod 4): n(2n^2+9n+1) = 2 (mod 4)


def counting_quantity(n: int) -> int:
    """n(2n^2+9n+1), which equals 2n(n+1)(2n+1) - (n-1)n(2n-1)"""
    return n * (2 * n * n + 9 * n + 1)


def square_sum_identities(n: int) -> tuple[int, int]:
    """(sum of f(i)^2, sum of |f(i)-i|^2) for any solution of T_n"""
    require_order(n)
    return n * (n + 1) * (2 * n + 1) // 6, (n - 1) * n * (2 * n - 1) // 6


def weighted_sum_identity(n: int) -> int:
    """The value sum i*f(i) every solution of T_n must take"""
    require_order(n)
    if not is_solvable(n):
        raise UnsolvableBoardError(infeasibility_certificate(n))
    numerator = 2 * n * (n + 1) * (2 * n + 1) - (n - 1) * n * (2 * n - 1)
    return numerator // 12


@dataclass(frozen=True)
class Certificate:
    """Witness that T_n has no solution"""

    n: int
    residue_mod_4: int
    quantity: int
    quantity_mod_12: int
    contradiction_kind: ContradictionKind
    factor: int            # 2n^2+9n+1
    factor_mod_4: int
    quantity_mod_4: int

    def branch_fact(self) -> str:
        if self.contradiction_kind is ContradictionKind.EVEN_CASE:
            return f"n is even, so 2n^2+9n+1 = {self.factor} is odd"
        return f"2n^2+9n+1 = {self.factor} = 2 (mod 4), so n(2n^2+9n+1) = {self.quantity_mod_4} (mod 4)"

    def is_valid(self) -> bool:
        n = self.n
        if n % 4 not in (2, 3) or self.residue_mod_4 != n % 4:
            return False
        if self.factor != 2 * n * n + 9 * n + 1 or self.quantity != n * self.factor:
            return False
        if self.quantity_mod_12 != self.quantity % 12 or self.quantity_mod_12 == 0:
            return False
        if self.contradiction_kind is ContradictionKind.EVEN_CASE:
            return n % 4 == 2 and self.factor % 2 == 1
        return n % 4 == 3 and self.factor_mod_4 == 2 and self.quantity_mod_4 == 2

    def to_dict(self) -> dict:
        data = asdict(self)
        data["contradiction_kind"] = self.contradiction_kind.value
        data["branch_fact"] = self.branch_fact()
        return data


def infeasibility_certificate(n: int) -> Certificate:
    """Build and self-check the certificate for n = 2, 3 (mod 4)"""
    require_order(n)
    if is_solvable(n):
        raise SolvableBoardError(n)

    factor = 2 * n * n + 9 * n + 1
    quantity = n * factor
    kind = ContradictionKind.EVEN_CASE if n % 4 == 2 else ContradictionKind.ODD_CASE
    certificate = Certificate(
        n=n,
        residue_mod_4=n % 4,
        quantity=quantity,
        quantity_mod_12=quantity % 12,
        contradiction_kind=kind,
        factor=factor,
        factor_mod_4=factor % 4,
        quantity_mod_4=quantity % 4,
    )
    if not certificate.is_valid():
        raise ToeplitzQueensError(f"certificate for n = {n} failed its own check: {certificate}")
    logger.debug(f"certificate n={n}: {quantity} = {certificate.quantity_mod_12} (mod 12), {kind.value}")
    return certificate


def certificate_explanation(certificate: Certificate) -> str:
    """Human-readable account of the contradiction"""
    from toeplitz_queens.utils.templates import render_template

    return render_template("certificate.txt", cert=certificate)
