"""Joint eigenstates of commuting observables."""

from __future__ import annotations

from typing import Sequence

from ..exactcore import ExactMatrix


class NonCommutingObservables(ValueError):
    pass


def verify_joint_eigenstates(
    observables: Sequence[ExactMatrix],
    basis: ExactMatrix,
    signs: Sequence[Sequence[int]],
) -> bool:
    """True iff ``row_r @ O_k == signs[r][k] * row_r`` for every row and observable."""
    for a in range(len(observables)):
        for b in range(a + 1, len(observables)):
            x, y = observables[a], observables[b]
            if x @ y != y @ x:
                raise NonCommutingObservables(f"observables {a} and {b} do not commute")
    n = basis.dim
    if len(signs) != n or any(len(row) != len(observables) for row in signs):
        raise ValueError("sign table must have one row per basis row and one column per observable")
    for k, obs in enumerate(observables):
        diag = ExactMatrix.diagonal([signs[r][k] for r in range(n)])
        if basis @ obs != diag @ basis:
            return False
    return True
