#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0

"""Tests for exhaustive enumeration, counting and orbit partitioning"""

import sys
import os

import pytest

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from toeplitz_queens.construct.solution import construct_solution
from toeplitz_queens.core.certificate import weighted_sum_identity
from toeplitz_queens.core.errors import CapExceededError
from toeplitz_queens.core.symmetry import GROUP, apply_symmetry
from toeplitz_queens.search.enumerator import count_solutions, enumerate_solutions, naive_solutions
from toeplitz_queens.search.orbits import (
    build_report,
    burnside_count,
    count_fundamental,
    orbit_sizes,
    partition_orbits,
)


@pytest.mark.parametrize("n", range(1, 8))
def test_agrees_with_naive_scan(n):
    fast = enumerate_solutions(n, workers=1)
    assert fast == naive_solutions(n)


def test_order_four():
    solutions = enumerate_solutions(4, workers=1)
    assert [s.f for s in solutions] == [(2, 4, 3, 1), (3, 2, 4, 1), (4, 1, 3, 2), (4, 2, 1, 3)]
    assert enumerate_solutions(1, workers=1)[0].f == (1,)
    assert enumerate_solutions(2, workers=1) == []


def test_output_is_lexicographic():
    fs = [s.f for s in enumerate_solutions(9, workers=1)]
    assert fs == sorted(fs)
    assert len(set(fs)) == len(fs)


@pytest.mark.parametrize("n", [2, 3, 6, 7, 10, 11])
def test_no_solutions_when_unsolvable(n):
    assert count_solutions(n, workers=1) == 0


@pytest.mark.parametrize("n", [1, 4, 5, 8, 9])
def test_solutions_exist_when_solvable(n):
    assert count_solutions(n, workers=1) > 0


@pytest.mark.slow
@pytest.mark.parametrize("n, solvable", [(12, True), (13, True), (14, False)])
def test_count_only_at_desk_scale(n, solvable):
    assert (count_solutions(n) > 0) == solvable


def test_count_matches_enumeration():
    for n in range(1, 10):
        assert count_solutions(n, workers=1) == len(enumerate_solutions(n, workers=1))


def test_worker_split_does_not_change_results():
    assert enumerate_solutions(9, workers=1) == enumerate_solutions(9, workers=3)
    assert count_solutions(8, workers=1) == count_solutions(8, workers=2)


def test_constructed_solution_is_enumerated():
    for n in (1, 4, 5, 8, 9):
        assert construct_solution(n)[0] in enumerate_solutions(n, workers=1)


@pytest.mark.slow
def test_constructed_solution_is_enumerated_up_to_13():
    for n in (12, 13):
        assert construct_solution(n)[0] in enumerate_solutions(n)


@pytest.mark.parametrize("n", [
    1, 4, 5, 8, 9,
    pytest.param(12, marks=pytest.mark.slow),
    pytest.param(13, marks=pytest.mark.slow),
])
def test_weighted_sum_identity_on_every_solution(n):
    target = weighted_sum_identity(n)
    solutions = enumerate_solutions(n, workers=None if n > 9 else 1)
    assert solutions
    for s in solutions:
        assert sum(i * fi for i, fi in enumerate(s.f, start=1)) == target


def test_caps():
    with pytest.raises(CapExceededError, match="count-only"):
        enumerate_solutions(15)
    with pytest.raises(CapExceededError):
        count_solutions(17)
    with pytest.raises(CapExceededError):
        naive_solutions(10)
    assert len(enumerate_solutions(4, cap=4, workers=1)) == 4


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("TOEPLITZ_QUEENS_CAPS", '{"enumerate": 3}')
    with pytest.raises(CapExceededError):
        enumerate_solutions(4, workers=1)
    assert count_solutions(4, workers=1) == 4


def test_fundamental_order_four():
    count, representatives = count_fundamental(4, workers=1)
    assert count == 1
    assert representatives[0].f == (2, 4, 3, 1)
    assert count_fundamental(1, workers=1)[0] == 1
    assert count_fundamental(2, workers=1) == (0, [])


def test_solution_sets_are_closed_under_the_group():
    for n in (4, 5, 8, 9):
        solutions = enumerate_solutions(n, workers=1)
        members = {s.f for s in solutions}
        for s in solutions:
            for g in GROUP:
                assert apply_symmetry(g, s).f in members
        orbits = partition_orbits(solutions)
        assert sum(len(o) for o in orbits) == len(solutions)
        assert all(4 % len(o) == 0 for o in orbits)
        assert burnside_count(solutions) == len(orbits)
        assert len(orbits) <= len(solutions) <= 4 * len(orbits)
        assert all(o[0].f == min(m.f for m in o) for o in orbits)


def test_orbit_size_histogram():
    assert orbit_sizes(4, workers=1) == {4: 1}
    sizes = orbit_sizes(9, workers=1)
    assert set(sizes) <= {1, 2, 4}
    assert sum(size * count for size, count in sizes.items()) == count_solutions(9, workers=1)


def test_build_report_modes():
    counted = build_report(4, count_only=True, workers=1)
    assert counted.total_count == 4 and counted.fundamental_count is None and counted.solutions == ()

    listed = build_report(4, workers=1)
    assert len(listed.solutions) == 4 and listed.representatives == ()

    fundamental = build_report(4, fundamental=True, workers=1)
    assert fundamental.fundamental_count == 1
    assert fundamental.orbit_sizes == {4: 1}
    assert fundamental.elapsed >= 0
