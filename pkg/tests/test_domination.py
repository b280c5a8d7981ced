#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0

"""Tests for the domination search and its coverage checker

Only n = 1, 2 have known values; larger results are checked for
consistency, never against hard-coded numbers.
"""

import sys
import os
from itertools import combinations

import pytest

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from toeplitz_queens.core.board import Placement
from toeplitz_queens.core.errors import CapExceededError
from toeplitz_queens.search.domination import covers_board, domination_number


def _squares(n):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


@pytest.mark.parametrize("n", [1, 2])
def test_small_orders(n):
    report = domination_number(n)
    assert report.gamma == 1
    assert report.witness == Placement(n, [(1, 1)])


def test_coverage_checker():
    assert covers_board(Placement(2, [(1, 1)]), 2)
    assert not covers_board(Placement(3, [(1, 1)]), 3)
    assert not covers_board(Placement(3, []), 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_witness_covers_and_is_minimal(n):
    report = domination_number(n)
    assert len(report.witness) == report.gamma
    assert covers_board(report.witness, n)
    if report.gamma > 1:
        # minimality re-checked by brute force over all smaller placements
        assert not any(
            covers_board(Placement(n, cells), n)
            for cells in combinations(_squares(n), report.gamma - 1)
        )


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_witness_covers_at_the_default_cap(n):
    report = domination_number(n)
    assert covers_board(report.witness, n)
    assert report.nodes > 0


def test_gamma_never_exceeds_the_row_count():
    for n in range(1, 7):
        assert domination_number(n).gamma <= n


def test_cap():
    with pytest.raises(CapExceededError):
        domination_number(9)
    assert domination_number(3, cap=3).n == 3
