# SPDX-License-Identifier: Apache-2.0

"""Board model, verifiers, symmetries and infeasibility certificates"""

from toeplitz_queens.core.board import (
    BoardSpec,
    Placement,
    SolutionPermutation,
    Variant,
    cell_value,
    is_solvable,
)
from toeplitz_queens.core.certificate import (
    Certificate,
    ContradictionKind,
    infeasibility_certificate,
    square_sum_identities,
    weighted_sum_identity,
)
from toeplitz_queens.core.symmetry import (
    SymmetryElement,
    apply_symmetry,
    compose,
    normalize_solution,
)
from toeplitz_queens.core.verify import (
    ReasonCode,
    VerificationResult,
    verify_nonattacking,
    verify_solution,
    verify_variant_solution,
)

__all__ = [
    "BoardSpec",
    "Certificate",
    "ContradictionKind",
    "Placement",
    "ReasonCode",
    "SolutionPermutation",
    "SymmetryElement",
    "Variant",
    "VerificationResult",
    "apply_symmetry",
    "cell_value",
    "compose",
    "infeasibility_certificate",
    "is_solvable",
    "normalize_solution",
    "square_sum_identities",
    "verify_nonattacking",
    "verify_solution",
    "verify_variant_solution",
    "weighted_sum_identity",
]
