# SPDX-License-Identifier: Apache-2.0

"""Serialization, narration and re-checking of construction traces"""

from toeplitz_queens.construct.solution import (
    BASE_SOLUTIONS,
    CaseTag,
    ChildVariant,
    ConstructionTrace,
)
from toeplitz_queens.core.board import cell_value, is_solvable
from toeplitz_queens.utils.templates import render_template

# case tag -> (sub-order, offset, sub-board kind), as functions of r
_CASE_RULES = {
    CaseTag.CASE_3R: (lambda r: r + 1, lambda r: r - 1, ChildVariant.STAR),
    CaseTag.CASE_3R_PLUS_1: (lambda r: r, lambda r: r, ChildVariant.FULL),
    CaseTag.CASE_3R_PLUS_2: (lambda r: r + 3, lambda r: r - 1, ChildVariant.DOUBLE_STAR_TRANSPOSED),
}

_TAG_BY_REMAINDER = {0: CaseTag.CASE_3R, 1: CaseTag.CASE_3R_PLUS_1, 2: CaseTag.CASE_3R_PLUS_2}


def trace_to_document(trace: ConstructionTrace) -> dict:
    return {
        "n": trace.n,
        "case": trace.case_tag.value,
        "r": trace.r,
        "boundary": [[i, j, v] for i, j, v in trace.boundary_cells],
        "offset": trace.offset,
        "child_variant": trace.child_variant.value if trace.child_variant else None,
        "child": trace_to_document(trace.child) if trace.child else None,
    }


def check_trace(trace: ConstructionTrace) -> list[str]:
    """Re-derive every level's claims; returns the list of violations (empty when sound)"""
    problems = []
    for level in trace.levels():
        n, r = level.n, level.r
        if r != n // 3:
            problems.append(f"n = {n}: r = {r}, expected {n // 3}")
        if not is_solvable(n):
            problems.append(f"n = {n}: order violates the mod-4 condition")

        if level.case_tag is CaseTag.BASE:
            if n not in BASE_SOLUTIONS:
                problems.append(f"n = {n}: base case outside {sorted(BASE_SOLUTIONS)}")
            if level.child is not None:
                problems.append(f"n = {n}: base case has a child")
            continue

        expected_tag = _TAG_BY_REMAINDER[n % 3]
        if level.case_tag is not expected_tag:
            problems.append(f"n = {n}: case {level.case_tag.value}, expected {expected_tag.value}")
            continue

        low = r + 1 if level.case_tag is CaseTag.CASE_3R_PLUS_2 else r
        values = sorted(v for _, _, v in level.boundary_cells)
        if values != list(range(low, n)):
            problems.append(f"n = {n}: boundary values {values} != {low}..{n - 1}")
        if any(cell_value(i, j) != v for i, j, v in level.boundary_cells):
            problems.append(f"n = {n}: a boundary cell carries the wrong value")

        order, offset, variant = _CASE_RULES[level.case_tag]
        if level.child is None or level.child.n != order(r):
            problems.append(f"n = {n}: sub-board order {level.child_order}, expected {order(r)}")
        if level.offset != offset(r):
            problems.append(f"n = {n}: offset {level.offset}, expected {offset(r)}")
        if level.child_variant is not variant:
            problems.append(f"n = {n}: sub-board kind {level.child_variant}, expected {variant.value}")
    return problems


def explain_trace(trace: ConstructionTrace) -> str:
    """Narrative of the recursion, one paragraph per level"""
    return render_template("trace.txt", levels=list(trace.levels()), root=trace)
