# SPDX-License-Identifier: Apache-2.0

"""JSON placement documents

    {"n": <int>, "variant": "full" | "star" | "double_star", "cells": [[row, col], ...]}

Cells are written in ascending row order. Unknown fields are rejected.
"""

import json

from toeplitz_queens.core.board import BoardSpec, Placement, Variant
from toeplitz_queens.core.errors import InvalidOrderError, PlacementFormatError

DOCUMENT_FIELDS = ("n", "variant", "cells")


def placement_to_document(p: Placement, variant: Variant = Variant.FULL) -> dict:
    return {
        "n": p.n,
        "variant": Variant(variant).value,
        "cells": [[r, c] for r, c in p.sorted_cells()],
    }


def _as_int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise PlacementFormatError(f"{what} must be an integer, got {value!r}")
    return value


def placement_from_document(doc) -> tuple[Placement, BoardSpec]:
    """Decode a parsed document into a placement and the board it claims to solve"""
    if not isinstance(doc, dict):
        raise PlacementFormatError("placement document must be a JSON object")
    unknown = sorted(set(doc) - set(DOCUMENT_FIELDS))
    if unknown:
        raise PlacementFormatError(f"unknown field(s): {', '.join(unknown)}")
    missing = [k for k in DOCUMENT_FIELDS if k not in doc]
    if missing:
        raise PlacementFormatError(f"missing field(s): {', '.join(missing)}")

    n = _as_int(doc["n"], "n")
    try:
        variant = Variant.parse(doc["variant"]) if isinstance(doc["variant"], str) else None
    except ValueError as e:
        raise PlacementFormatError(str(e))
    if variant is None:
        raise PlacementFormatError(f"variant must be a string, got {doc['variant']!r}")

    cells = doc["cells"]
    if not isinstance(cells, list):
        raise PlacementFormatError("cells must be a list of [row, col] pairs")
    decoded = []
    for k, cell in enumerate(cells):
        if not isinstance(cell, list) or len(cell) != 2:
            raise PlacementFormatError(f"cells[{k}] must be a [row, col] pair, got {cell!r}")
        decoded.append((_as_int(cell[0], f"cells[{k}][0]"), _as_int(cell[1], f"cells[{k}][1]")))

    try:
        spec = BoardSpec(n, variant)
    except InvalidOrderError as e:
        raise PlacementFormatError(str(e))
    return Placement(n, decoded), spec


def dumps_placement(p: Placement, variant: Variant = Variant.FULL) -> str:
    return json.dumps(placement_to_document(p, variant))


def loads_placement(text: str) -> tuple[Placement, BoardSpec]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise PlacementFormatError(f"Invalid JSON format: {e}")
    return placement_from_document(doc)
