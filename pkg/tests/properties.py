"""Per-state invariants shared by the tangle tests and the acceptance suite."""

from cptweyl.exactcore import ERRATA, DyadicGaussian, build, generator_names
from cptweyl.tangle import apply_local, profile, three_tangle

TOL = 1e-8

ROW_MATRICES = sorted(n for n in generator_names() if n not in ERRATA and build(n).dim == 8)
ROW_STATES = [(n, r) for n in ROW_MATRICES for r in range(8)]

HADAMARD = [[1, 1], [1, -1]]  # unnormalized; the ray is what matters
SIGMA_X = [[0, 1], [1, 0]]
SIGMA_Z = [[1, 0], [0, -1]]


def property_violations(s):
    """Returns a list of violations (empty when all properties hold)."""
    bad = []
    p = profile(s)
    t3 = p.tau3
    values = [t3, *p.pairwise().values(), *p.one_tangles().values()]
    if any(v < -TOL or v > 1 + TOL for v in values):
        bad.append("range")
    pw = p.pairwise()
    for pivot in "ABC":
        pair_sum = sum(v for k, v in pw.items() if pivot in k)
        if pair_sum > p.one_tangles()[pivot] + TOL:
            bad.append(f"monogamy {pivot}")
        if abs(t3 - p.residual(pivot)) > TOL:
            bad.append(f"residual {pivot}")
    r = [p.residual(q) for q in "ABC"]
    if max(r) - min(r) > TOL:
        bad.append("pivot independence")
    for c in (DyadicGaussian(3), DyadicGaussian(1, 1, 1), DyadicGaussian(0, -5, 2)):
        q = profile(s.scaled(c))
        if any(abs(a - b) > TOL for a, b in zip(
                (q.tau3, *q.pairwise().values(), *q.one_tangles().values()),
                (t3, *pw.values(), *p.one_tangles().values()))) or q.class_label != p.class_label:
            bad.append(f"scale {c}")
    for gate in (HADAMARD, SIGMA_X, SIGMA_Z):
        for qubit in "ABC":
            if abs(three_tangle(apply_local(s, gate, qubit)).tau3 - t3) > TOL:
                bad.append(f"local {qubit}")
    return bad
