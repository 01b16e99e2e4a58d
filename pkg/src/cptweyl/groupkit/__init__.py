"""Finite-group machinery over exact matrix generators."""

from .eigen import NonCommutingObservables, verify_joint_eigenstates
from .fingerprint import (
    GroupFingerprint,
    Identification,
    IncompleteSet,
    fingerprint,
    identify,
    order_fingerprint,
)
from .matgroup import (
    CapExceeded,
    ElementSet,
    MatrixGroup,
    NotASubgroup,
    NotClosed,
    NotFaithful,
    contains,
    enumerate_group,
    group_order,
    is_normal,
    orbit,
    perm_action,
    to_permutations,
)
from .perm import Permutation, PermGroupBSGS, schreier_sims
from .subgroups import TooLarge, all_subgroups, small_generating_set

__all__ = [
    "CapExceeded", "ElementSet", "GroupFingerprint", "Identification", "IncompleteSet",
    "MatrixGroup", "NonCommutingObservables", "NotASubgroup", "NotClosed", "NotFaithful",
    "PermGroupBSGS", "Permutation", "TooLarge", "all_subgroups", "contains",
    "enumerate_group", "fingerprint", "group_order", "identify", "is_normal", "orbit",
    "order_fingerprint", "perm_action", "schreier_sims", "small_generating_set",
    "to_permutations", "verify_joint_eigenstates",
]
