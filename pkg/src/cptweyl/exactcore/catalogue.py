"""Named matrices: Pauli and Dirac matrices, two-qubit gates, and the
three-qubit generators of the CPT, SL(2,5), E32 and Dirac-group embeddings.

The eight-dimensional generators are stored verbatim as printed (numerators
over 2).  Two printed tables are not orthogonal; ``build`` refuses them and
names the failing entries.  Their minimal orthogonal repairs are exposed
under separate names ending in ``_corrected`` together with an explicit
erratum record, so a repair is never applied behind the caller's back.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache

from .matrix import ExactMatrix, mat_mul, tensor
from .scalar import DyadicGaussian


class UnknownMatrix(KeyError):
    pass


class TranscriptionNotUnitary(ValueError):
    def __init__(self, name: str, defects: list[tuple[int, int, str]]):
        self.name = name
        self.defects = defects
        shown = ", ".join(f"(row {i}, col {j}): {v}" for i, j, v in defects[:12])
        more = f" ... {len(defects) - 12} more" if len(defects) > 12 else ""
        super().__init__(f"matrix {name!r} fails M*M^dagger = I at {shown}{more}")

    def __str__(self):
        return self.args[0]


def _parse(block: str) -> list[list[int]]:
    return [[int(v) for v in line.split()] for line in block.strip().splitlines()]


# Eight-dimensional tables, entries are numerators over 2.
_HALF_TABLES: dict[str, str] = {
    "i3": """
         0 -1  1  0  0  0 -1 -1
         1  0  0 -1  1  1  0  0
        -1  0  0 -1 -1  1  0  0
         0  1  1  0  0  0  1 -1
         0 -1  1  0  0  0  1  1
         0 -1 -1  0  0  0  1 -1
         1  0  0 -1 -1 -1  0  0
         1  0  0  1 -1  1  0  0""",
    "j3": """
         0  1  1  1  1  0  0  0
        -1  0  0  0  0  1  1 -1
        -1  0  0  0  0 -1 -1 -1
        -1  0  0  0  0 -1  1  1
        -1  0  0  0  0  1 -1  1
         0 -1  1  1 -1  0  0  0
         0 -1  1 -1  1  0  0  0
         0  1  1 -1 -1  0  0  0""",
    "K3": """
         1  0  0  0  0  1  1  1
         0 -1  1  1 -1  0  0  0
         0  1  1  1  1  0  0  0
         0  1  1 -1 -1  0  0  0
         0 -1  1 -1  1  0  0  0
         1  0  0  0  0 -1 -1  1
         1  0  0  0  0 -1  1 -1
         1  0  0  0  0  1 -1 -1""",
    "x": """
         1 -1  0  0  0  0  1  1
         1  1  0  0  0  0 -1  1
         0  0  1  1 -1  1  0  0
         0  0 -1  1 -1 -1  0  0
         0  0  1  1  1 -1  0  0
         0  0 -1  1  1  1  0  0
        -1  1  0  0  0  0  1  1
        -1 -1  0  0  0  0 -1  1""",
    "y": """
         1  0 -1  0  0 -1  0 -1
         0  1  0  1  1  0 -1  0
         1  0  1  0  0 -1  0  1
         0 -1  0  1 -1  0 -1  0
         0 -1  0  1  1  0  0  1
         1  0  1  0  0  1  0 -1
         0  1  0  1 -1  0  0  1
         1  0 -1  0  1  0  0  1""",
    "W": """
         0  0  0 -1  0  1 -1  1
         0  0  0 -1  0 -1  1  1
         0  0  0 -1  0  1  1 -1
         1  1  1  0  1  0  0  0
         0  0  0 -1  0 -1 -1 -1
        -1  1 -1  0  1  0  0  0
         1 -1 -1  0  1  0  0  0
        -1 -1  1  0  1  0  0  0""",
    "Z": """
         0 -1  0 -1  1 -1  0  0
         1  0  1  0  0  0  1 -1
         0 -1  0  1  1  1  0  0
         1  0 -1  0  0  0 -1 -1
        -1  0 -1  0  0  0  1 -1
         1  0 -1  0  0  0  1  1
         0 -1  0  1 -1 -1  0  0
         0  1  0  1  1 -1  0  0""",
    "c": """
         1  0 -1 -1  0  1  0  0
         0 -1  0  0 -1  0 -1 -1
        -1  0  1 -1  0  1  0  0
        -1  0 -1  1  0  1  0  0
         0 -1  0  0 -1  0  1  1
         1  0  1  1  0  1  0  0
         0 -1  0  0  1  0 -1  1
         0 -1  0  0  1  0  1 -1""",
    "Zprime": """
         0  0 -1  0 -1 -1 -1  0
         0  0  1  0  1 -1 -1  0
         1 -1  0 -1  0  0  0 -1
         0  0  1  0 -1  1 -1  0
         1 -1  0  1  0  0  0 -1
         1  1  0 -1  0  0  0 -1
         1  1  0  1  0  0  0  1
         0  0 -1  0  1  1 -1  0""",
    "c1": """
         0  1  0 -1 -1 -1  0  0
        -1  0  1  0  0  0  1  1
         0 -1  0  1 -1 -1  0  0
         1  0 -1  0  0  0  1  1
         1  0  1  0  0  0 -1  1
         1  0  1  0  0  0  1 -1
         0 -1  0 -1  1 -1  0  0
         0 -1  0 -1 -1  1  0  0""",
    "c2": """
         0  1  0  1  0  0 -1  1
        -1  0 -1  0  1 -1  0  0
         0  1  0  1  0  0  1 -1
        -1  0 -1  0 -1  1  0  0
         0 -1  0  1  0  0  1  1
         0  1  0 -1  0  0  1  1
         1  0 -1  0 -1 -1  0  0
        -1  0  1  0 -1 -1  0  0""",
}

# 4x4 blocks of g1, g2 (numerators over 2) and u (integer).
_R1 = _parse("""
    -1  0  0  1
     0  1 -1  0
     0 -1  1  0
     1  0  0 -1""")
_R2 = _parse("""
     1  0  0  1
     0 -1 -1  0
     0 -1 -1  0
     1  0  0  1""")
_U1 = _parse("""
     0  1  0  0
     1  0  0  0
     0  0  0  1
     0  0  1  0""")
_U2 = _parse("""
     0  0  1  0
     0  0  0  1
     1  0  0  0
     0  1  0  0""")


@dataclass(frozen=True)
class Erratum:
    """A minimal entry-level correction of a printed, non-orthogonal table.

    ``changes`` lists ``(row, col, printed, corrected)`` numerators.
    """

    name: str
    corrected_name: str
    changes: tuple[tuple[int, int, int, int], ...]
    rationale: str


ERRATA: dict[str, Erratum] = {
    "y": Erratum(
        "y", "y_corrected",
        ((4, 6, 0, 1), (4, 7, 1, 0), (6, 6, 0, 1), (6, 7, 1, 0), (7, 4, 1, 0), (7, 5, 0, 1)),
        "rows 4, 6, 7 each carry one entry in a neighbouring column; this is the "
        "unique orthogonal completion of the five consistent rows closest to the "
        "printed table, and it leaves the first row unchanged",
    ),
    "Zprime": Erratum(
        "Zprime", "Zprime_corrected",
        ((2, 7, -1, 1),),
        "single sign flip restores orthogonality of row 2 with rows 4, 5, 6",
    ),
}


def _block(blocks: list[list[list[list[int]]]]) -> list[list[int]]:
    rows = []
    for brow in blocks:
        for r in range(len(brow[0])):
            rows.append([v for b in brow for v in b[r]])
    return rows


def _neg(m):
    return [[-v for v in r] for r in m]


def _zeros(n):
    return [[0] * n for _ in range(n)]


def _raw_tables() -> dict[str, list[list[int]]]:
    """All eight-dimensional numerator tables (over 2, except u which is integer)."""
    tables = {k: _parse(v) for k, v in _HALF_TABLES.items()}
    tables["g1"] = _block([[_R1, _R2], [_R2, _R1]])
    tables["g2"] = _block([[_R1, _neg(_R2)], [_neg(_R2), _R1]])
    return tables


def _corrected(name: str) -> list[list[int]]:
    table = [list(r) for r in _raw_tables()[name]]
    for i, j, printed, fixed in ERRATA[name].changes:
        if table[i][j] != printed:
            raise AssertionError(f"erratum for {name} does not match table at ({i},{j})")
        table[i][j] = fixed
    return table


def catalogue_checksum() -> str:
    """SHA-256 over the canonical serialization of every verbatim table."""
    h = hashlib.sha256()
    tables = _raw_tables()
    for name in sorted(tables):
        h.update(name.encode())
        h.update(repr(tables[name]).encode())
    for name, blk in (("U1", _U1), ("U2", _U2)):
        h.update(name.encode())
        h.update(repr(blk).encode())
    return h.hexdigest()


CATALOGUE_SHA256 = "5b017da26f67fc186a9c07ff2fe3c54c9df73628800beb17c1523bd36a463736"


# -- small matrices -------------------------------------------------------

def _small() -> dict[str, ExactMatrix]:
    i = DyadicGaussian(0, 1)
    m: dict[str, ExactMatrix] = {}
    m["1"] = ExactMatrix.identity(2, "1")
    m["I2"] = ExactMatrix.identity(2, "I2")
    m["I4"] = ExactMatrix.identity(4, "I4")
    m["I8"] = ExactMatrix.identity(8, "I8")
    m["sigma_x"] = ExactMatrix([[0, 1], [1, 0]], name="sigma_x")
    m["sigma_y"] = ExactMatrix.from_entries([[0, -i], [i, 0]], name="sigma_y")
    m["sigma_z"] = ExactMatrix([[1, 0], [0, -1]], name="sigma_z")
    iy = ExactMatrix([[0, 1], [-1, 0]])  # block pattern [[0, s], [-s, 0]]
    m["gamma_0"] = tensor(m["sigma_z"], m["1"]).renamed("gamma_0")
    m["gamma_1"] = tensor(iy, m["sigma_x"]).renamed("gamma_1")
    m["gamma_2"] = tensor(iy, m["sigma_y"]).renamed("gamma_2")
    m["gamma_3"] = tensor(iy, m["sigma_z"]).renamed("gamma_3")
    m["gamma_5"] = tensor(m["sigma_x"], m["1"]).renamed("gamma_5")
    m["P"] = m["gamma_0"].scale(i).renamed("P")
    m["C"] = mat_mul(m["gamma_2"], m["gamma_0"]).scale(i).renamed("C")
    m["T_timereversal"] = mat_mul(m["gamma_3"], m["gamma_1"]).renamed("T_timereversal")
    m["H"] = ExactMatrix([[1, 1], [1, -1]], root2=True, name="H")
    m["R"] = ExactMatrix([[1, 0, 0, 1], [0, 1, -1, 0], [0, 1, 1, 0], [-1, 0, 0, 1]],
                         root2=True, name="R")
    m["S"] = ExactMatrix([[1, -1, 1, 1], [1, 1, -1, 1], [1, -1, -1, -1], [1, 1, 1, -1]],
                         den_pow=1, name="S")
    m["swap"] = ExactMatrix.permutation([0, 2, 1, 3], "swap")
    m["CZ"] = ExactMatrix.diagonal([1, 1, 1, -1], "CZ")
    m["CNOT"] = ExactMatrix.permutation([0, 1, 3, 2], "CNOT")
    m["TOF"] = ExactMatrix.permutation([0, 1, 2, 3, 4, 5, 7, 6], "TOF")
    m["Fredkin"] = ExactMatrix.permutation([0, 1, 2, 3, 4, 6, 5, 7], "Fredkin")
    return m


_SMALL_NAMES = (
    "1", "I2", "I4", "I8", "sigma_x", "sigma_y", "sigma_z",
    "gamma_0", "gamma_1", "gamma_2", "gamma_3", "gamma_5", "P", "C", "T_timereversal",
    "H", "R", "S", "swap", "CZ", "CNOT", "TOF", "Fredkin",
)
_EIGHT_NAMES = ("i3", "j3", "K3", "x", "y", "W", "Z", "c", "Zprime",
                "g1", "g2", "c1", "c2", "u", "y_corrected", "Zprime_corrected")
LIFTED_EXAMPLES = ("1⊗CZ", "1⊗S", "S⊗1", "1⊗swap", "swap⊗1")


def catalogue_names() -> list[str]:
    return list(_SMALL_NAMES) + list(_EIGHT_NAMES) + list(LIFTED_EXAMPLES)


def generator_names() -> list[str]:
    """Catalogue entries that are group generators (everything except identities)."""
    return [n for n in catalogue_names() if n not in ("1", "I2", "I4", "I8")]


def unitarity_defects(m: ExactMatrix) -> list[tuple[int, int, str]]:
    """Positions where ``m @ m^dagger`` differs from the identity."""
    prod = mat_mul(m, m.dagger())
    n = m.dim
    out = []
    for i in range(n):
        for j in range(n):
            k = i * n + j
            target = 1 if i == j else 0
            if prod.root2:
                out.append((i, j, "irrational"))
                continue
            v = prod.scalar_at(k)
            if v != DyadicGaussian(target):
                out.append((i, j, str(v)))
    return out


def _eight(name: str) -> ExactMatrix:
    if name == "u":
        z = _zeros(4)
        return ExactMatrix(_block([[_neg(_U1), z], [z, _neg(_U2)]]), name="u")
    if name.endswith("_corrected"):
        base = name[: -len("_corrected")]
        return ExactMatrix(_corrected(base), den_pow=1, name=name)
    return ExactMatrix(_raw_tables()[name], den_pow=1, name=name)


def raw(name: str) -> ExactMatrix:
    """Verbatim transcription without the unitarity gate (for reporting)."""
    return _eight(name) if name in _EIGHT_NAMES else _small()[name]


@lru_cache(maxsize=None)
def build(name: str) -> ExactMatrix:
    """Return the catalogue matrix ``name``.

    Tensor-lifted names join factors with ``⊗`` (ASCII ``(x)`` also accepted);
    the factor ``1`` is the 2x2 identity.  Raises ``UnknownMatrix`` for an
    unrecognised name and ``TranscriptionNotUnitary`` when the stored table
    fails ``M @ M^dagger == I``.
    """
    if "⊗" in name or "(x)" in name:
        parts = [p.strip() for p in name.replace("(x)", "⊗").split("⊗")]
        mats = [build(p) for p in parts]
        out = mats[0]
        for f in mats[1:]:
            out = tensor(out, f)
        return out.renamed(name)
    small = _small()
    if name in small:
        m = small[name]
    elif name in _EIGHT_NAMES:
        m = _eight(name)
    else:
        raise UnknownMatrix(name)
    defects = unitarity_defects(m)
    if defects:
        raise TranscriptionNotUnitary(name, defects)
    return m


def verify_checksum() -> None:
    actual = catalogue_checksum()
    if actual != CATALOGUE_SHA256:
        raise RuntimeError(f"catalogue tables changed: checksum {actual}")
