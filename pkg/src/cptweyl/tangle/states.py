"""Pure three-qubit states and their reduced density matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..exactcore import DimensionMismatch, DyadicGaussian, ExactMatrix, ExactVector
from .exact import GaussQ, Matrix, det

QUBITS = "ABC"
PAIRS = ("AB", "AC", "BC")


@dataclass(frozen=True)
class PureState3Q:
    """Unnormalized amplitudes psi_abc (index 4a + 2b + c) and their squared norm."""

    amplitudes: tuple[DyadicGaussian, ...]
    norm_sq: Fraction

    def __post_init__(self):
        if len(self.amplitudes) != 8:
            raise DimensionMismatch("a three-qubit state has 8 amplitudes")
        total = sum((a.abs2() for a in self.amplitudes), Fraction(0))
        if total != self.norm_sq:
            raise ValueError("norm_sq does not match the amplitudes")
        if total <= 0:
            raise ValueError("state has zero norm")

    @classmethod
    def from_amplitudes(cls, values: Sequence) -> "PureState3Q":
        amps = tuple(DyadicGaussian.coerce(v) for v in values)
        return cls(amps, sum((a.abs2() for a in amps), Fraction(0)))

    @classmethod
    def from_vector(cls, v: ExactVector) -> "PureState3Q":
        # a global 1/sqrt(2) factor only rescales the ray
        return cls.from_amplitudes(v.scalars())

    def amp(self, bits: str) -> DyadicGaussian:
        return self.amplitudes[int(bits, 2)]

    def scaled(self, c) -> "PureState3Q":
        return PureState3Q.from_amplitudes([a * DyadicGaussian.coerce(c) for a in self.amplitudes])

    def to_vector(self) -> ExactVector:
        return ExactVector.from_scalars(self.amplitudes)

    def __str__(self):
        terms = []
        for k, a in enumerate(self.amplitudes):
            if not a.is_zero():
                terms.append(f"({a})|{k:03b}>")
        return " + ".join(terms) + f"   [norm^2 = {self.norm_sq}]"


def state_from_row(m: ExactMatrix, row: int) -> PureState3Q:
    if m.dim != 8:
        raise DimensionMismatch(f"need an 8x8 matrix, got {m.dim}x{m.dim}")
    if not 0 <= row < 8:
        raise IndexError(f"row {row} out of range")
    return PureState3Q.from_vector(m.row(row))


def ghz_state() -> PureState3Q:
    return PureState3Q.from_amplitudes([1, 0, 0, 0, 0, 0, 0, 1])


def w_state() -> PureState3Q:
    return PureState3Q.from_amplitudes([0, 1, 1, 0, 1, 0, 0, 0])


def _tensor_index(bits: dict[str, int]) -> int:
    return 4 * bits["A"] + 2 * bits["B"] + bits["C"]


class DensityMatrix:
    """Exact Hermitian density matrix with unit trace (2x2 or 4x4)."""

    def __init__(self, entries: Matrix):
        self.entries = entries
        self.dim = len(entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, DensityMatrix):
            return NotImplemented
        return self.entries == other.entries

    def trace(self) -> GaussQ:
        return sum((self.entries[i][i] for i in range(self.dim)), GaussQ())

    def det(self) -> GaussQ:
        return det(self.entries)

    def is_hermitian(self) -> bool:
        e = self.entries
        return all(e[i][j] == e[j][i].conjugate() for i in range(self.dim) for j in range(self.dim))

    def is_psd(self) -> bool:
        """All principal minors non-negative (exact test for Hermitian matrices)."""
        for k in range(1, self.dim + 1):
            for idx in combinations(range(self.dim), k):
                minor = det([[self.entries[i][j] for j in idx] for i in idx])
                if minor.im != 0 or minor.re < 0:
                    return False
        return True

    def is_valid(self) -> bool:
        return self.is_hermitian() and self.trace() == 1 and self.is_psd()

    def to_complex(self) -> list[list[complex]]:
        return [[complex(v) for v in row] for row in self.entries]

    @classmethod
    def from_rationals(cls, rows, scale=1) -> "DensityMatrix":
        s = Fraction(scale)
        return cls([[GaussQ.of(v) * GaussQ(s) for v in row] for row in rows])

    def __repr__(self):
        return f"DensityMatrix({[[complex(v) for v in r] for r in self.entries]})"


def reduce(state: PureState3Q, keep: str) -> DensityMatrix:
    """Partial trace over the qubit not named in ``keep`` (one of AB, AC, BC)."""
    if keep not in PAIRS:
        raise ValueError(f"keep must be one of {PAIRS}")
    traced = next(q for q in QUBITS if q not in keep)
    psi = [GaussQ.of(a) for a in state.amplitudes]
    out = [[GaussQ() for _ in range(4)] for _ in range(4)]
    for i in range(4):
        for j in range(4):
            acc = GaussQ()
            for t in (0, 1):
                bi = {keep[0]: i >> 1, keep[1]: i & 1, traced: t}
                bj = {keep[0]: j >> 1, keep[1]: j & 1, traced: t}
                acc = acc + psi[_tensor_index(bi)] * psi[_tensor_index(bj)].conjugate()
            out[i][j] = acc / state.norm_sq
    return DensityMatrix(out)


def reduce1(state: PureState3Q, keep: str) -> DensityMatrix:
    """Single-qubit reduced density matrix."""
    if keep not in QUBITS:
        raise ValueError("keep must be A, B or C")
    others = [q for q in QUBITS if q != keep]
    psi = [GaussQ.of(a) for a in state.amplitudes]
    out = [[GaussQ() for _ in range(2)] for _ in range(2)]
    for i in (0, 1):
        for j in (0, 1):
            acc = GaussQ()
            for s in (0, 1):
                for t in (0, 1):
                    bi = {keep: i, others[0]: s, others[1]: t}
                    bj = {keep: j, others[0]: s, others[1]: t}
                    acc = acc + psi[_tensor_index(bi)] * psi[_tensor_index(bj)].conjugate()
            out[i][j] = acc / state.norm_sq
    return DensityMatrix(out)


def pure_density(amplitudes: Sequence) -> DensityMatrix:
    """|psi><psi| / <psi|psi> for an arbitrary exact amplitude list."""
    psi = [GaussQ.of(DyadicGaussian.coerce(a)) for a in amplitudes]
    n2 = sum((a.abs2() for a in psi), Fraction(0))
    if n2 == 0:
        raise ValueError("zero vector")
    return DensityMatrix([[a * b.conjugate() / n2 for b in psi] for a in psi])
