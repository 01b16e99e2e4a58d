"""Concurrence, tangles, three-tangle and entanglement classification."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..exactcore import DyadicGaussian
from .exact import GaussQ, char_poly, mat_mul, poly_eval, squarefree_factors, trace
from .states import DensityMatrix, PureState3Q, reduce, reduce1

ROOT_ZERO = 1e-10
ROOT_ERROR = 1e-8
CLASS_EPS = 1e-6

CLASS_LABELS = (
    "separable", "GHZ-type", "W-type", "CPT-type",
    "chain-BAC", "chain-ABC", "chain-ACB", "biseparable", "generic",
)


class SpectrumInconsistent(ArithmeticError):
    pass


# sigma_y (x) sigma_y is real: antidiagonal (-1, 1, 1, -1)
_YY = [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]]


def spin_flip(rho: DensityMatrix) -> DensityMatrix:
    """(sigma_y x sigma_y) rho* (sigma_y x sigma_y)."""
    e = rho.entries
    out = [[GaussQ() for _ in range(4)] for _ in range(4)]
    for i in range(4):
        pi = 3 - i
        si = _YY[i][pi]
        for j in range(4):
            pj = 3 - j
            out[i][j] = e[pi][pj].conjugate() * (si * _YY[pj][j])
    return DensityMatrix(out)


@dataclass(frozen=True)
class ConcurrenceSpectrum:
    """Eigenvalues of rho * rho_tilde (descending) and the exact
    characteristic polynomial ``t^4 + c1 t^3 + ... + c4``."""

    eigenvalues: tuple[float, ...]
    coefficients: tuple[Fraction, ...]

    @property
    def trace(self) -> Fraction:
        return -self.coefficients[1]

    @property
    def determinant(self) -> Fraction:
        return self.coefficients[-1]


def _real_roots(factor: list[Fraction]) -> list[float]:
    deg = len(factor) - 1
    if deg == 1:
        return [float(-factor[1] / factor[0])]
    roots = np.roots([float(c) for c in factor])
    out = []
    for r in roots:
        if abs(r.imag) > 1e-6 * max(1.0, abs(r.real)):
            raise SpectrumInconsistent(f"non-real root {r}")
        x = float(r.real)
        # Newton polish against the exact coefficients
        for _ in range(3):
            fx = poly_eval([float(c) for c in factor], x)
            dfx = poly_eval([float(c) * (deg - i) for i, c in enumerate(factor[:-1])], x)
            if dfx == 0:
                break
            step = fx / dfx
            x -= step
            if abs(step) < 1e-18:
                break
        out.append(x)
    return out


def concurrence_spectrum(rho: DensityMatrix) -> ConcurrenceSpectrum:
    """Roots of the exact characteristic polynomial of rho * spin_flip(rho)."""
    prod = mat_mul(rho.entries, spin_flip(rho).entries)
    coeffs = char_poly(prod)
    if any(c.im != 0 for c in coeffs):
        raise SpectrumInconsistent("characteristic polynomial has non-real coefficients")
    real = [c.re for c in coeffs]
    # exact zero roots come off first
    zeros = 0
    while len(real) - zeros > 1 and real[len(real) - 1 - zeros] == 0:
        zeros += 1
    core = real[: len(real) - zeros]
    roots = [0.0] * zeros
    if len(core) > 1:
        for factor, mult in squarefree_factors(core):
            roots.extend(_real_roots(factor) * mult)
    if any(r < -ROOT_ERROR for r in roots):
        raise SpectrumInconsistent(f"negative eigenvalue in {roots}")
    roots = [0.0 if r < ROOT_ZERO else r for r in roots]
    tr = float(trace(prod).re)
    if abs(sum(roots) - tr) > ROOT_ERROR:
        raise SpectrumInconsistent(f"eigenvalue sum {sum(roots)} differs from trace {tr}")
    return ConcurrenceSpectrum(tuple(sorted(roots, reverse=True)), tuple(real))


def concurrence(rho: DensityMatrix) -> float:
    lam = concurrence_spectrum(rho).eigenvalues
    s = [math.sqrt(v) for v in lam]
    c = s[0] - s[1] - s[2] - s[3]
    return min(max(c, 0.0), 1.0)


def concurrence_pure2q(alpha, beta, gamma, delta) -> float:
    """2 |alpha delta - beta gamma| for the normalized two-qubit state."""
    a, b, c, d = (GaussQ.of(DyadicGaussian.coerce(v)) for v in (alpha, beta, gamma, delta))
    n2 = a.abs2() + b.abs2() + c.abs2() + d.abs2()
    if n2 == 0:
        raise ValueError("zero state")
    cross = a * d - b * c
    return 2 * math.sqrt(cross.abs2()) / float(n2)


def tangle(rho: DensityMatrix) -> float:
    return concurrence(rho) ** 2


@dataclass(frozen=True)
class ThreeTangleBreakdown:
    d1: DyadicGaussian
    d2: DyadicGaussian
    d3: DyadicGaussian
    tau3_sq: Fraction
    tau3: float


def three_tangle(state: PureState3Q) -> ThreeTangleBreakdown:
    """Cayley hyperdeterminant form 4 |d1 - 2 d2 + 4 d3| / norm_sq^2."""
    p = state.amp
    d1 = (p("000") * p("000") * p("111") * p("111")
          + p("001") * p("001") * p("110") * p("110")
          + p("010") * p("010") * p("101") * p("101")
          + p("100") * p("100") * p("011") * p("011"))
    d2 = (p("000") * p("111") * (p("011") * p("100") + p("101") * p("010") + p("110") * p("001"))
          + p("011") * p("100") * (p("101") * p("010") + p("110") * p("001"))
          + p("101") * p("010") * p("110") * p("001"))
    d3 = (p("000") * p("110") * p("101") * p("011")
          + p("111") * p("001") * p("010") * p("100"))
    hyper = d1 - d2 * 2 + d3 * 4
    tau_sq = 16 * hyper.abs2() / state.norm_sq**4
    return ThreeTangleBreakdown(d1, d2, d3, tau_sq, math.sqrt(tau_sq))


def one_tangle_exact(state: PureState3Q, pivot: str) -> Fraction:
    d = reduce1(state, pivot).det()
    if d.im != 0:
        raise ArithmeticError("determinant of a Hermitian matrix has an imaginary part")
    return 4 * d.re


def one_tangle(state: PureState3Q, pivot: str) -> float:
    """Linear entropy 4 det(rho_pivot)."""
    return float(one_tangle_exact(state, pivot))


def entropy_of_formation(rho2: DensityMatrix) -> float:
    """Von Neumann entropy (base 2) of a single-qubit density matrix."""
    if rho2.dim != 2:
        raise ValueError("need a 2x2 density matrix")
    t = float(rho2.trace().re)
    d = float(rho2.det().re)
    disc = max(t * t - 4 * d, 0.0)
    mus = ((t + math.sqrt(disc)) / 2, (t - math.sqrt(disc)) / 2)
    return -sum(m * math.log2(m) for m in mus if m > 0)


@dataclass(frozen=True)
class EntanglementProfile:
    tau3: float
    tau_ab: float
    tau_ac: float
    tau_bc: float
    tau_a_bc: float
    tau_b_ac: float
    tau_c_ab: float
    class_label: str

    def pairwise(self) -> dict[str, float]:
        return {"AB": self.tau_ab, "AC": self.tau_ac, "BC": self.tau_bc}

    def one_tangles(self) -> dict[str, float]:
        return {"A": self.tau_a_bc, "B": self.tau_b_ac, "C": self.tau_c_ab}

    def residual(self, pivot: str) -> float:
        """tau_pivot(rest) minus the two pairwise tangles involving the pivot."""
        pw = self.pairwise()
        pair_terms = [v for k, v in pw.items() if pivot in k]
        return self.one_tangles()[pivot] - sum(pair_terms)


def classify(tau3: float, pairwise: dict[str, float], one: dict[str, float],
             eps: float = CLASS_EPS) -> str:
    """Decision table; the order of the checks is significant."""
    ab, ac, bc = pairwise["AB"], pairwise["AC"], pairwise["BC"]
    small = [k for k, v in pairwise.items() if v < eps]
    if all(v < eps for v in one.values()):
        return "separable"
    if tau3 > eps and len(small) == 3:
        return "GHZ-type"
    if tau3 < eps and not small:
        return "W-type"
    if tau3 > eps and abs(ab - ac) < eps and abs(ab - bc) < eps and abs(ac - bc) < eps:
        return "CPT-type"
    if len(small) == 1:
        # the middle qubit is the one shared by both non-vanishing pairs
        middle = {"BC": "A", "AC": "B", "AB": "C"}[small[0]]
        return {"A": "chain-BAC", "B": "chain-ABC", "C": "chain-ACB"}[middle]
    if sum(1 for v in one.values() if v < eps) == 1:
        return "biseparable"
    return "generic"


def profile(state: PureState3Q) -> EntanglementProfile:
    t3 = three_tangle(state).tau3
    pw = {k: tangle(reduce(state, k)) for k in ("AB", "AC", "BC")}
    one = {q: one_tangle(state, q) for q in "ABC"}
    return EntanglementProfile(
        tau3=t3,
        tau_ab=pw["AB"], tau_ac=pw["AC"], tau_bc=pw["BC"],
        tau_a_bc=one["A"], tau_b_ac=one["B"], tau_c_ab=one["C"],
        class_label=classify(t3, pw, one),
    )


def _r12(v: float) -> float:
    out = float(f"{v:.12g}")
    return 0.0 if out == 0 else out


def profile_to_json(state: PureState3Q, prof: EntanglementProfile,
                    source: dict | None = None) -> dict:
    return {
        "state_source": source or {},
        "amplitudes": state.to_vector().to_json(),
        "tau3": _r12(prof.tau3),
        "tau_ab": _r12(prof.tau_ab),
        "tau_ac": _r12(prof.tau_ac),
        "tau_bc": _r12(prof.tau_bc),
        "tau_a_bc": _r12(prof.tau_a_bc),
        "tau_b_ac": _r12(prof.tau_b_ac),
        "tau_c_ab": _r12(prof.tau_c_ab),
        "class": prof.class_label,
    }


def apply_local(state: PureState3Q, gate: Sequence[Sequence], qubit: str) -> PureState3Q:
    """Apply a 2x2 matrix of exact scalars to one qubit of an unnormalized state."""
    pos = {"A": 2, "B": 1, "C": 0}[qubit]
    g = [[DyadicGaussian.coerce(v) for v in row] for row in gate]
    amps = list(state.amplitudes)
    out = [DyadicGaussian(0)] * 8
    for k in range(8):
        bit = (k >> pos) & 1
        k0 = k & ~(1 << pos)
        k1 = k0 | (1 << pos)
        out[k] = g[bit][0] * amps[k0] + g[bit][1] * amps[k1]
    return PureState3Q.from_amplitudes(out)
