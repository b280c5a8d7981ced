#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0

"""Tests for the solution and placement verifiers"""

import sys
import os

import pytest
from hypothesis import given, strategies as st

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from toeplitz_queens.core.board import BoardSpec, Placement, SolutionPermutation, Variant
from toeplitz_queens.core.errors import OutOfRegionError, ToeplitzQueensError
from toeplitz_queens.core.verify import (
    ReasonCode,
    check_counting_identities,
    verify_nonattacking,
    verify_placement,
    verify_solution,
    verify_variant_solution,
)

S_4 = SolutionPermutation(4, (3, 2, 4, 1))
S_5 = SolutionPermutation(5, (4, 2, 5, 3, 1))


def test_base_solutions_verify():
    assert verify_solution(S_4)
    assert verify_solution(S_5)
    assert verify_solution(SolutionPermutation(1, (1,)))


@pytest.mark.parametrize("s, reason", [
    (SolutionPermutation(2, (1, 2)), ReasonCode.DUPLICATE_VALUE),
    (SolutionPermutation(4, (3, 2, 4)), ReasonCode.WRONG_LENGTH),
    (SolutionPermutation(4, (3, 2, 5, 1)), ReasonCode.OUT_OF_RANGE),
    (SolutionPermutation(4, (3, 2, 0, 1)), ReasonCode.OUT_OF_RANGE),
    (SolutionPermutation(4, (3, 3, 4, 1)), ReasonCode.NOT_BIJECTION),
])
def test_malformed_solutions_report_a_reason(s, reason):
    result = verify_solution(s)
    assert not result
    assert result.reason is reason
    assert result.detail


def test_result_to_dict():
    assert verify_solution(S_4).to_dict() == {"ok": True, "reason": "ok", "detail": ""}
    assert verify_solution(SolutionPermutation(2, (1, 2))).to_dict()["reason"] == "duplicate value"


@given(st.permutations(range(1, 7)))
def test_verify_solution_matches_definition(f):
    displacements = sorted(abs(fi - i) for i, fi in enumerate(f, start=1))
    assert bool(verify_solution(SolutionPermutation(6, tuple(f)))) == (displacements == list(range(6)))


def test_nonattacking_examples():
    full = BoardSpec(4)
    assert verify_nonattacking(Placement(4, [(1, 1), (4, 2), (3, 4)]), full)
    assert verify_nonattacking(Placement(2, [(1, 1), (2, 2)]), BoardSpec(2)).reason is ReasonCode.DUPLICATE_VALUE
    assert verify_nonattacking(Placement(4, [(1, 3), (1, 4)]), full).reason is ReasonCode.DUPLICATE_ROW
    assert verify_nonattacking(Placement(4, [(1, 3), (2, 3)]), full).reason is ReasonCode.DUPLICATE_COLUMN
    assert verify_nonattacking(Placement(4, []), full)


def test_nonattacking_out_of_region_is_an_error():
    with pytest.raises(OutOfRegionError):
        verify_nonattacking(Placement(4, [(5, 1)]), BoardSpec(4))
    with pytest.raises(OutOfRegionError):
        verify_nonattacking(Placement(4, [(4, 2)]), BoardSpec(4, Variant.STAR))


def test_variant_solution_examples():
    assert verify_variant_solution(Placement(4, [(1, 3), (2, 2), (3, 4)]), BoardSpec(4, Variant.STAR))
    assert verify_variant_solution(Placement(5, [(2, 2), (3, 5), (4, 3)]), BoardSpec(5, Variant.DOUBLE_STAR))

    empty = verify_variant_solution(Placement(4, []), BoardSpec(4, Variant.STAR))
    assert empty.reason is ReasonCode.WRONG_CARDINALITY


def test_variant_solution_failures_are_distinguishable():
    star = BoardSpec(4, Variant.STAR)
    assert verify_variant_solution(Placement(4, [(1, 3), (1, 2), (3, 4)]), star).reason is ReasonCode.DUPLICATE_ROW
    assert verify_variant_solution(Placement(4, [(1, 3), (2, 3), (3, 4)]), star).reason is ReasonCode.DUPLICATE_COLUMN
    assert verify_variant_solution(Placement(4, [(1, 2), (2, 3), (3, 4)]), star).reason is ReasonCode.VALUE_COVER_FAILS
    assert verify_variant_solution(Placement(4, [(1, 3), (2, 2), (4, 4)]), star).reason is ReasonCode.OUT_OF_REGION


def test_variant_solution_needs_a_reduced_board():
    with pytest.raises(ToeplitzQueensError):
        verify_variant_solution(S_4.cells(), BoardSpec(4))


def test_verify_placement_dispatches_on_variant():
    assert verify_placement(S_4.cells(), BoardSpec(4))
    broken = S_4.cells().without((4, 1)).with_cells((4, 2))
    assert verify_placement(broken, BoardSpec(4)).reason is ReasonCode.DUPLICATE_COLUMN
    assert verify_placement(S_4.cells().without((4, 1)), BoardSpec(4, Variant.STAR))
    assert verify_placement(SolutionPermutation(2, (1, 2)).cells(), BoardSpec(2)).reason is ReasonCode.DUPLICATE_VALUE


def test_counting_identities_hold_on_base_solutions():
    assert check_counting_identities(S_4)
    assert check_counting_identities(S_5)
    assert check_counting_identities(SolutionPermutation(4, (4, 2, 1, 3)))


def test_repeated_cell_fails_every_verifier():
    s4 = Placement(4, [(1, 3), (1, 3), (2, 2), (3, 4), (4, 1)])
    result = verify_placement(s4, BoardSpec(4))
    assert not result and result.reason is ReasonCode.DUPLICATE_ROW
    assert "(1, 3)" in result.detail
    assert verify_nonattacking(s4, BoardSpec(4)).reason is ReasonCode.DUPLICATE_ROW

    star = Placement(4, [(1, 3), (2, 2), (2, 2), (3, 4)])
    assert verify_variant_solution(star, BoardSpec(4, Variant.STAR)).reason is ReasonCode.DUPLICATE_ROW
    assert verify_placement(Placement(4, [(1, 3), (2, 2), (3, 4), (4, 1)]), BoardSpec(4))
