# SPDX-License-Identifier: Apache-2.0

"""Verifiers for solutions and placements

Each verifier returns a VerificationResult carrying a reason code; the
boolean projection is ``bool(result)``. Only structural misuse (a cell outside
the board, a full board passed where a reduced variant is required) raises.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum

import numpy as np

from toeplitz_queens.core.board import (
    BoardSpec,
    Placement,
    SolutionPermutation,
    Variant,
    cell_value,
    require_order,
)
from toeplitz_queens.core.errors import OutOfRegionError, ToeplitzQueensError

logger = logging.getLogger(__name__)


class ReasonCode(str, Enum):
    OK = "ok"
    WRONG_LENGTH = "wrong length"
    OUT_OF_RANGE = "entry out of range"
    NOT_BIJECTION = "not bijection"
    DUPLICATE_ROW = "duplicate row"
    DUPLICATE_COLUMN = "duplicate column"
    DUPLICATE_VALUE = "duplicate value"
    OUT_OF_REGION = "out of region"
    WRONG_CARDINALITY = "wrong cardinality"
    VALUE_COVER_FAILS = "value cover fails"
    IDENTITY_FAILS = "counting identity fails"


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    reason: ReasonCode = ReasonCode.OK
    detail: str = ""

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {"ok": self.ok, "reason": self.reason.value, "detail": self.detail}


PASSED = VerificationResult(True)


def _fail(reason: ReasonCode, detail: str) -> VerificationResult:
    logger.debug(f"verification failed: {reason.value}: {detail}")
    return VerificationResult(False, reason, detail)


def _first_repeat(counts) -> int:
    return int(np.flatnonzero(counts > 1)[0])


def verify_solution(s: SolutionPermutation) -> VerificationResult:
    """f is a bijection on 1..n and |f(i) - i| takes every value 0..n-1 once"""
    n = require_order(s.n)
    if len(s.f) != n:
        return _fail(ReasonCode.WRONG_LENGTH, f"expected {n} entries, got {len(s.f)}")

    f = np.asarray(s.f, dtype=np.int64)
    bad = np.flatnonzero((f < 1) | (f > n))
    if bad.size:
        i = int(bad[0]) + 1
        return _fail(ReasonCode.OUT_OF_RANGE, f"f({i}) = {s.f[i - 1]} is outside 1..{n}")

    columns = np.bincount(f, minlength=n + 1)
    if columns.max() > 1:
        return _fail(ReasonCode.NOT_BIJECTION, f"column {_first_repeat(columns)} is used twice")

    # Bijection plus distinct displacements in 0..n-1 means every value is covered
    values = np.bincount(np.abs(f - np.arange(1, n + 1)), minlength=n)
    if values.max() > 1:
        return _fail(ReasonCode.DUPLICATE_VALUE, f"value {_first_repeat(values)} is used twice")
    return PASSED


def _check_region(p: Placement, spec: BoardSpec):
    if p.n != spec.n:
        raise ToeplitzQueensError(f"placement has order {p.n} but the board has order {spec.n}")
    for cell in p.sorted_cells():
        if not spec.contains(cell):
            raise OutOfRegionError(cell, spec)


def _repeated_cell(p: Placement) -> VerificationResult:
    row, col = p.repeated[0]
    return _fail(ReasonCode.DUPLICATE_ROW, f"cell ({row}, {col}) is listed more than once")


def _duplicates(p: Placement) -> VerificationResult:
    """Rows, columns, then values pairwise distinct"""
    if p.repeated:
        return _repeated_cell(p)
    for reason, key in (
        (ReasonCode.DUPLICATE_ROW, lambda c: c[0]),
        (ReasonCode.DUPLICATE_COLUMN, lambda c: c[1]),
        (ReasonCode.DUPLICATE_VALUE, lambda c: cell_value(*c)),
    ):
        counts = Counter(key(c) for c in p.cells)
        repeated = sorted(k for k, m in counts.items() if m > 1)
        if repeated:
            label = reason.value.split()[-1]
            return _fail(reason, f"{label} {repeated[0]} carries more than one queen")
    return PASSED


def verify_nonattacking(p: Placement, spec: BoardSpec) -> VerificationResult:
    """No two queens share a row, a column, or a cell value

    Raises OutOfRegionError if a cell is not on the board.
    """
    _check_region(p, spec)
    return _duplicates(p)


def _verify_cover(p: Placement, spec: BoardSpec) -> VerificationResult:
    if p.repeated:
        return _repeated_cell(p)
    if len(p) != spec.size:
        return _fail(ReasonCode.WRONG_CARDINALITY, f"expected {spec.size} cells, got {len(p)}")
    try:
        _check_region(p, spec)
    except OutOfRegionError as e:
        return _fail(ReasonCode.OUT_OF_REGION, str(e))
    for reason, key in ((ReasonCode.DUPLICATE_ROW, 0), (ReasonCode.DUPLICATE_COLUMN, 1)):
        counts = Counter(c[key] for c in p.cells)
        repeated = sorted(k for k, m in counts.items() if m > 1)
        if repeated:
            return _fail(reason, f"{reason.value.split()[-1]} {repeated[0]} carries more than one queen")
    values = sorted(p.values())
    if values != list(spec.required_values):
        missing = sorted(set(spec.required_values) - set(values))
        return _fail(
            ReasonCode.VALUE_COVER_FAILS,
            f"values must cover 0..{spec.size - 1} exactly once; missing {missing}",
        )
    return PASSED


def verify_variant_solution(p: Placement, spec: BoardSpec) -> VerificationResult:
    """One cell per valid row and column of a Star/DoubleStar board, values covering its required set"""
    if spec.variant is Variant.FULL:
        raise ToeplitzQueensError("verify_variant_solution expects a star or double_star board")
    return _verify_cover(p, spec)


def verify_placement(p: Placement, spec: BoardSpec) -> VerificationResult:
    """Dispatch on the variant: Full placements must encode a valid SolutionPermutation"""
    if spec.variant is not Variant.FULL:
        return verify_variant_solution(p, spec)
    structure = _verify_cover(p, spec)
    if not structure and structure.reason is not ReasonCode.VALUE_COVER_FAILS:
        return structure
    return verify_solution(p.to_permutation())


def check_counting_identities(s: SolutionPermutation) -> VerificationResult:
    """Confirm the three sums behind the counting argument on a concrete solution"""
    from toeplitz_queens.core.certificate import square_sum_identities, weighted_sum_identity

    n = s.n
    f = np.asarray(s.f, dtype=object)
    i = np.arange(1, n + 1, dtype=object)
    squares, displacement_squares = square_sum_identities(n)
    checks = (
        ("sum f(i)^2", int((f * f).sum()), squares),
        ("sum |f(i)-i|^2", int(((f - i) * (f - i)).sum()), displacement_squares),
        ("sum i*f(i)", int((i * f).sum()), weighted_sum_identity(n)),
    )
    for name, got, expected in checks:
        if got != expected:
            return _fail(ReasonCode.IDENTITY_FAILS, f"{name} = {got}, expected {expected}")
    return PASSED
