"""The built-in claim registry."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import partial
from typing import Any, Callable

from ..exactcore import ERRATA, generator_names
from ..exactcore.catalogue import CATALOGUE_SHA256
from . import computations as comp

ASSERT = "assert"
INFORMATIONAL = "informational"

EXACT = "exact"
REAL = "real"

STATED = "stated"      # value asserted outright
DERIVED = "derived"    # value fixed by an independent calculation
HARNESS = "harness"    # plumbing self-check


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    computation: Callable[[], Any]
    expected: Any
    provenance: str = STATED
    severity: str = ASSERT
    comparison: str = EXACT


# generator sets, by catalogue name
PAULI1 = ("sigma_x", "sigma_y", "sigma_z")
CPT2 = ("P", "C", "T_timereversal")
PAULI2 = ("sigma_x⊗1", "sigma_y⊗1", "sigma_z⊗1", "1⊗sigma_x", "1⊗sigma_y", "1⊗sigma_z")
GAMMA4 = ("gamma_0", "gamma_1", "gamma_2", "gamma_3")
GAMMA5 = GAMMA4 + ("gamma_5",)
MERMIN1 = ("sigma_x⊗sigma_x", "sigma_y⊗sigma_y", "sigma_z⊗sigma_z")
MERMIN2 = ("sigma_x⊗sigma_z", "sigma_z⊗sigma_x", "sigma_y⊗sigma_y")
MERMIN6 = MERMIN1 + MERMIN2[:2]
RS = ("R", "S")
H120 = ("x", "y_corrected")
C3PLUS = ("1⊗S", "S⊗1", "1⊗swap", "swap⊗1")
CPT3 = ("i3", "j3", "K3")
WZ = ("W", "Z")
WZC = ("W", "Z", "c")
WZZP = ("W", "Z", "Zprime_corrected")
WZCZP = ("W", "Z", "c", "Zprime_corrected")
DIRAC3 = ("g1", "g2", "c1", "c2", "u")
E32M3 = ("g2", "c1", "c2", "u")

W_E8 = comp.W_E8_ORDER


def _order(cid, names, expected, desc, severity=ASSERT, provenance=STATED, dim=None):
    return Claim(cid, desc, partial(comp.order, names, dim), expected, provenance, severity)


def _label(cid, names, expected, desc, severity=ASSERT, dim=None):
    return Claim(cid, desc, partial(comp.label, names, dim), expected, STATED, severity)


def _rows(cid, names, field, expected, desc, severity=ASSERT, comparison=REAL):
    return Claim(cid, desc, partial(comp.row_values, names, field), expected, STATED, severity,
                 comparison)


def _group_claims() -> list[Claim]:
    return [
        _order("G1.ORDER.PAULI", PAULI1, 16, "<sigma_x, sigma_y, sigma_z> has 16 elements"),
        _label("G1.ID.PAULI", PAULI1, "[16,13]", "single-qubit Pauli group is [16,13]"),
        _order("G2.ORDER.CPT", CPT2, 16, "<P, C, T> built from gamma matrices has 16 elements"),
        _label("G2.ID.CPT", CPT2, "[16,13]", "<P, C, T> is [16,13]"),
        _order("G2.ORDER.PAULI2", PAULI2, 64, "two-qubit Pauli group has 64 elements"),
        _label("G2.ID.PAULI2", PAULI2, "[64,66]", "two-qubit Pauli group is [64,66]"),
        _order("G2.ORDER.GAMMA5", GAMMA5, 64, "<gamma_0..gamma_3, gamma_5> has 64 elements"),
        _label("G2.ID.GAMMA5", GAMMA5, "[64,66]", "<gamma_0..gamma_3, gamma_5> is [64,66]"),
        _order("G2.ORDER.GAMMA4", GAMMA4, 32, "<gamma_0..gamma_3> has 32 elements"),
        _label("G2.ID.GAMMA4", GAMMA4, "[32,50]", "<gamma_0..gamma_3> is E32- = [32,50]"),
        _order("G2.ORDER.RS", RS, 96, "<R, S> has 96 elements"),
        _label("G2.ID.RS", RS, "Unknown",
               "<R, S> (order 96) lies outside the reference table", INFORMATIONAL),
        _order("G2.ORDER.MERMIN1", MERMIN1, 8, "first Mermin triple generates 8 elements"),
        _label("G2.ID.MERMIN1", MERMIN1, "Z2^3", "first Mermin triple generates Z2^3"),
        _order("G2.ORDER.MERMIN2", MERMIN2, 4, "second Mermin triple generates 4 elements"),
        _label("G2.ID.MERMIN2", MERMIN2, "Z2^2", "second Mermin triple generates Z2^2"),
        _order("G2.ORDER.MERMIN6", MERMIN6, 16, "the six Mermin observables generate 16 elements"),
        _label("G2.ID.MERMIN6", MERMIN6, "[16,11]", "the six Mermin observables generate [16,11]"),
        _order("G3.ORDER.H120", H120, 120, "<x, y> has 120 elements"),
        _label("G3.ID.H120", H120, "SL(2,5)", "<x, y> is SL(2,5)"),
        _order("G3.ORDER.C3PLUS", H120 + ("1⊗CZ",), 2_580_480,
               "<x, y, 1(x)CZ> is the real Clifford group of order 2,580,480"),
        _order("G3.ORDER.C3PLUS_GENS", C3PLUS, 2_580_480,
               "<1(x)S, S(x)1, 1(x)swap, swap(x)1> has order 2,580,480"),
        _order("G3.ORDER.WE8", H120 + ("TOF",), W_E8, "<x, y, TOF> has the order of W(E8)"),
        _order("G3.ORDER.C3PLUS_TOF", C3PLUS + ("TOF",), W_E8,
               "the real Clifford group inflated by TOF has the order of W(E8)"),
        _order("G3.ORDER.CPT_TOF", CPT3 + ("TOF",), W_E8,
               "<i, j, K, TOF> has the order of W(E8)"),
        _order("G3.ORDER.CPT_FREDKIN", CPT3 + ("Fredkin",), W_E8,
               "<i, j, K, Fredkin> has the order of W(E8)"),
        _order("G3.ORDER.F7", H120 + ("K3",), 2_903_040, "<x, y, K> has order 2,903,040"),
        _order("G3.ORDER.H120_J", H120 + ("j3",), 51_840,
               "<x, y, j> has order 51,840 (Z2.W'(E6))", INFORMATIONAL),
        _order("G3.ORDER.H120_I", H120 + ("i3",), 3840,
               "<x, y, i> read as order 3840; the text leaves 3840 versus 7680 open",
               INFORMATIONAL),
        Claim("G3.WE8.HAS_REFLECTION",
              "<x, y, TOF> has a generator of determinant -1, so it is not inside the "
              "rotation subgroup W'(E8)",
              partial(comp.generator_determinants, H120 + ("TOF",)), [-1, 1], DERIVED,
              INFORMATIONAL),
        _order("G3.ORDER.CPT", CPT3, 16, "<i, j, K> has 16 elements"),
        _label("G3.ID.CPT", CPT3, "[16,13]", "<i, j, K> is [16,13]"),
        _label("G3.ID.IJ", ("i3", "j3"), "Q8", "<i, j> is the quaternion group"),
        _label("G3.ID.KI", ("K3", "i3"), "D4", "<K, i> is the dihedral group D4"),
        _order("G3.ORDER.WZ", WZ, 8, "<W, Z> has 8 elements"),
        _label("G3.ID.WZ", WZ, "Q8", "<W, Z> is the quaternion group"),
        _order("G3.ORDER.WZC", WZC, 16, "<W, Z, c> has 16 elements"),
        _label("G3.ID.WZC", WZC, "[16,13]", "<W, Z, c> is [16,13]"),
        _order("G3.ORDER.WZZP", WZZP, 16, "<W, Z, Z'> has 16 elements (corrected Z')"),
        _label("G3.ID.WZZP", WZZP, "[16,12]", "<W, Z, Z'> is [16,12] (corrected Z')"),
        _order("G3.ORDER.WZCZP", WZCZP, 32, "<W, Z, c, Z'> has 32 elements (corrected Z')"),
        _label("G3.ID.WZCZP", WZCZP, "[32,50]", "<W, Z, c, Z'> is E32- = [32,50]"),
        _order("G3.ORDER.DIRAC", DIRAC3, 64, "<g1, g2, c1, c2, u> has 64 elements"),
        _label("G3.ID.DIRAC", DIRAC3, "[64,66]", "<g1, g2, c1, c2, u> is [64,66]"),
        _label("G3.ID.G1G2", ("g1", "g2"), "Z2^2", "<g1, g2> is the Klein four group"),
        _label("G3.ID.C1C2", ("c1", "c2"), "Q8", "<c1, c2> is the quaternion group"),
        _label("G3.ID.G1C1C2", ("g1", "c1", "c2"), "[16,13]", "<g1, c1, c2> is [16,13]"),
        _label("G3.ID.G2C1C2", ("g2", "c1", "c2"), "[16,12]", "<g2, c1, c2> is [16,12]"),
        _label("G3.ID.G1G2C1", ("g1", "g2", "c1"), "[16,11]", "<g1, g2, c1> is [16,11]"),
        _label("G3.ID.G1G2C2", ("g1", "g2", "c2"), "[16,11]", "<g1, g2, c2> is [16,11]"),
        _label("G3.ID.DIRAC_NO_G1", E32M3, "[32,50]",
               "removing g1 from <g1, g2, c1, c2, u> leaves E32-", INFORMATIONAL),
        _label("G3.ID.DIRAC_NO_G2", ("g1", "c1", "c2", "u"), "[32,49]",
               "removing g2 leaves E32+", INFORMATIONAL),
        _label("G3.ID.DIRAC_NO_C1", ("g1", "g2", "c2", "u"), "[32,49]",
               "removing c1 leaves E32+", INFORMATIONAL),
        _label("G3.ID.DIRAC_NO_C2", ("g1", "g2", "c1", "u"), "[32,49]",
               "removing c2 leaves E32+", INFORMATIONAL),
        _label("G3.ID.DIRAC_NO_U", ("g1", "g2", "c1", "c2"), "[32,49]",
               "removing u leaves E32+", INFORMATIONAL),
        Claim("ID.TRIVIAL", "the group with no generators has order 1",
              partial(comp.order, (), 8), 1, HARNESS),
        Claim("ID.TRIVIAL.LABEL", "the group with no generators identifies as trivial",
              partial(comp.label, (), 8), "trivial", HARNESS),
    ]


def _cross_claims() -> list[Claim]:
    return [
        Claim("FP.CROSS.CPT",
              "Pauli, gamma-matrix CPT, three-qubit CPT and <W, Z, c> share one fingerprint",
              partial(comp.fingerprints_agree, (PAULI1, CPT2, CPT3, WZC)), True),
        Claim("FP.CROSS.E32",
              "<gamma_0..gamma_3> and <W, Z, c, Z'> share one fingerprint",
              partial(comp.fingerprints_agree, (GAMMA4, WZCZP)), True),
    ]


def _series_claims() -> list[Claim]:
    p3 = ("g1", "c1", "c2")
    return [
        Claim("SERIES.Q_NORMAL_P", "<c1, c2> is normal in <g1, c1, c2>",
              partial(comp.normal, ("c1", "c2"), p3), True),
        Claim("SERIES.P_NORMAL_P2", "<g1, c1, c2> is normal in <g1, g2, c1, c2, u>",
              partial(comp.normal, p3, DIRAC3), True),
        Claim("SERIES.E32_NORMAL_P2", "<g2, c1, c2, u> is normal in <g1, g2, c1, c2, u>",
              partial(comp.normal, E32M3, DIRAC3), True),
        Claim("SERIES.P_SUB_E32",
              "g1 lies in <g2, c1, c2, u>, as the series P < E32- requires",
              partial(comp.member, E32M3, "g1"), True, STATED, INFORMATIONAL),
        Claim("SERIES.P_NORMAL_E32", "<g1, c1, c2> is normal in <g2, c1, c2, u>",
              partial(comp.normal, p3, E32M3), True, STATED, INFORMATIONAL),
        Claim("SERIES.P_NORMAL_E32PLUS", "<g1, c1, c2> is normal in <g1, c1, c2, u>",
              partial(comp.normal, p3, ("g1", "c1", "c2", "u")), True, DERIVED, INFORMATIONAL),
        Claim("SERIES.CONTAINS.I_UNIT", "the Pauli group contains sigma_x sigma_y sigma_z = i I",
              partial(comp.member_product, PAULI1, PAULI1), True, DERIVED),
    ]


def _matrix_claims() -> list[Claim]:
    out = [
        Claim("MATRIX.RS_EQ_HI", "R S equals H tensor the 2x2 identity", comp.rs_identity, True),
        Claim("MATRIX.EIGEN.R",
              "rows of R are joint eigenstates of (ZZ, XX, YY) with the printed sign table",
              partial(comp.joint_eigenstates,
                      ("sigma_z⊗sigma_z", "sigma_x⊗sigma_x", "sigma_y⊗sigma_y"), "R",
                      comp.R_SIGNS), True),
        Claim("MATRIX.EIGEN.R_LITERAL",
              "rows of R with the printed signs read in triple order (XX, YY, ZZ)",
              partial(comp.joint_eigenstates, MERMIN1, "R", comp.R_SIGNS), True, STATED,
              INFORMATIONAL),
        Claim("MATRIX.EIGEN.S",
              "rows of S are joint eigenstates of (XZ, ZX, YY) with the printed sign table",
              partial(comp.joint_eigenstates, MERMIN2, "S", comp.S_SIGNS), True),
        Claim("MATRIX.CATALOGUE.CHECKSUM", "verbatim matrix tables are unchanged",
              comp.catalogue_checksum, CATALOGUE_SHA256, HARNESS),
    ]
    for name in generator_names():
        if "⊗" in name:
            continue
        severity = INFORMATIONAL if name in ERRATA else ASSERT
        out.append(Claim(f"MATRIX.UNITARY.{name}", f"{name} as printed is exactly unitary",
                         partial(comp.unitary, name), True, STATED, severity))
    for name in sorted(ERRATA):
        out.append(Claim(f"MATRIX.ERRATUM.{name}",
                         f"{ERRATA[name].corrected_name} is unitary and differs from {name} "
                         "only at the recorded cells",
                         partial(comp.erratum_consistent, name), True, DERIVED))
    return out


def _tangle_claims() -> list[Claim]:
    cpt = ("K3", "i3", "j3")
    s2 = 2 * math.sqrt(2)
    spectrum = [[(3 + s2) / 16, (3 - s2) / 16, 0.0, 0.0]]
    return [
        Claim("TANGLE.CPT.STATE", "first row of K is (|000> + |101> + |110> + |111>)/2",
              partial(comp.row_amplitudes, "K3", 0),
              ["1/2", "0", "0", "0", "0", "1/2", "1/2", "1/2"]),
        Claim("TANGLE.CPT.RHO_AB", "4 rho_AB of the CPT state",
              partial(comp.reduced_times4, "K3", 0, "AB"),
              [["1", "0", "0", "1"], ["0", "0", "0", "0"], ["0", "0", "1", "1"],
               ["1", "0", "1", "2"]]),
        Claim("TANGLE.CPT.RHO_AC", "4 rho_AC of the CPT state",
              partial(comp.reduced_times4, "K3", 0, "AC"),
              [["1", "0", "0", "1"], ["0", "0", "0", "0"], ["0", "0", "1", "1"],
               ["1", "0", "1", "2"]]),
        Claim("TANGLE.CPT.RHO_BC", "4 rho_BC of the CPT state",
              partial(comp.reduced_times4, "K3", 0, "BC"),
              [["1", "0", "0", "0"], ["0", "1", "1", "1"], ["0", "1", "1", "1"],
               ["0", "1", "1", "1"]]),
        _rows("TANGLE.CPT.TAU3", cpt, "tau3", [0.25], "rows of K, i, j have tau3 = 1/4"),
        _rows("TANGLE.CPT.TAU_AB", cpt, "tau_ab", [0.25], "rows of K, i, j have tau_AB = 1/4"),
        _rows("TANGLE.CPT.TAU_AC", cpt, "tau_ac", [0.25], "rows of K, i, j have tau_AC = 1/4"),
        _rows("TANGLE.CPT.TAU_BC", cpt, "tau_bc", [0.25], "rows of K, i, j have tau_BC = 1/4"),
        _rows("TANGLE.CPT.ONE", cpt, "tau_a_bc", [0.75],
              "rows of K, i, j have one-tangle tau_A(BC) = 3/4"),
        Claim("TANGLE.CPT.SPECTRUM",
              "every pair of every K, i, j row has rho rho~ spectrum {(3+-2 sqrt2)/16, 0, 0}",
              partial(comp.row_spectra, cpt), spectrum, STATED, ASSERT, REAL),
        _rows("TANGLE.CPT.CLASS", cpt, "class_label", ["CPT-type"],
              "rows of K, i, j are CPT-type", comparison=EXACT),
        _rows("TANGLE.GHZ.TAU3", H120, "tau3", [1.0], "rows of x, y have tau3 = 1"),
        _rows("TANGLE.GHZ.PAIRWISE", H120, "tau_ab", [0.0], "rows of x, y have tau_AB = 0"),
        _rows("TANGLE.GHZ.PAIRWISE_AC", H120, "tau_ac", [0.0], "rows of x, y have tau_AC = 0"),
        _rows("TANGLE.GHZ.PAIRWISE_BC", H120, "tau_bc", [0.0], "rows of x, y have tau_BC = 0"),
        _rows("TANGLE.GHZ.CLASS", H120, "class_label", ["GHZ-type"],
              "rows of x, y are GHZ-type", comparison=EXACT),
        _rows("TANGLE.W.TAU3", ("W",), "tau3", [0.0], "rows of W have tau3 = 0"),
        Claim("TANGLE.W.CONCURRENCE", "rows of W have all pairwise concurrences 1/2",
              partial(comp.row_concurrences, ("W",)), [0.5], STATED, ASSERT, REAL),
        _rows("TANGLE.W.ONE", ("W",), "tau_a_bc", [1.0],
              "rows of W have one-tangle 1", INFORMATIONAL),
        _rows("TANGLE.W.CLASS", ("W",), "class_label", ["W-type"], "rows of W are W-type",
              comparison=EXACT),
        _rows("TANGLE.Z.TAU3", ("Z",), "tau3", [0.25], "rows of Z have tau3 = 1/4"),
        _rows("TANGLE.Z.TAU_AB", ("Z",), "tau_ab", [0.25], "rows of Z have tau_AB = 1/4"),
        _rows("TANGLE.Z.TAU_AC", ("Z",), "tau_ac", [0.25], "rows of Z have tau_AC = 1/4"),
        _rows("TANGLE.Z.TAU_BC", ("Z",), "tau_bc", [0.0], "rows of Z have tau_BC = 0"),
        _rows("TANGLE.Z.CLASS", ("Z",), "class_label", ["chain-BAC"],
              "rows of Z are chain-type B-A-C", comparison=EXACT),
        _rows("TANGLE.ZPRIME.CLASS", ("Zprime_corrected",), "class_label", ["chain-ABC"],
              "rows of Z' (corrected) are chain-type A-B-C", INFORMATIONAL, EXACT),
        _rows("TANGLE.DIRAC.G_CLASS", ("g1", "g2"), "class_label", ["GHZ-type"],
              "rows of g1, g2 are GHZ-type", comparison=EXACT),
        _rows("TANGLE.DIRAC.C_CLASS", ("c1", "c2"), "class_label", ["chain-BAC"],
              "rows of c1, c2 are chain-type B-A-C", comparison=EXACT),
        _rows("TANGLE.DIRAC.U_CLASS", ("u",), "class_label", ["separable"],
              "rows of u are unentangled", comparison=EXACT),
        Claim("TANGLE.CANON.GHZ", "the GHZ state has tau3 = 1",
              partial(comp.canonical_tau3, "ghz"), 1.0, DERIVED, ASSERT, REAL),
        Claim("TANGLE.CANON.W", "the W state has tau3 = 0",
              partial(comp.canonical_tau3, "w"), 0.0, DERIVED, ASSERT, REAL),
    ]


def _kernel_claims() -> list[Claim]:
    return [
        Claim("KERNEL.PROPER.TOF",
              "no proper subgroup of <i, j, K> reaches |W(E8)| when TOF is adjoined",
              partial(comp.kernel_experiment, CPT3, "TOF"), 0, STATED, INFORMATIONAL),
        Claim("KERNEL.PROPER.FREDKIN",
              "no proper subgroup of <i, j, K> reaches |W(E8)| when Fredkin is adjoined",
              partial(comp.kernel_experiment, CPT3, "Fredkin"), 0, DERIVED, INFORMATIONAL),
    ]


# every group whose closure is small enough to enumerate
ORACLE_GROUPS = {
    "PAULI1": PAULI1, "CPT2": CPT2, "PAULI2": PAULI2, "GAMMA4": GAMMA4, "GAMMA5": GAMMA5,
    "RS": RS, "MERMIN1": MERMIN1, "MERMIN2": MERMIN2, "MERMIN6": MERMIN6, "H120": H120,
    "CPT3": CPT3, "WZ": WZ, "WZC": WZC, "WZZP": WZZP, "WZCZP": WZCZP, "DIRAC3": DIRAC3,
    "E32M3": E32M3, "H120_I": H120 + ("i3",),
}


def _oracle_claims() -> list[Claim]:
    return [
        Claim(f"ORACLE.{key}", f"BFS count equals Schreier-Sims order for <{', '.join(names)}>",
              partial(comp.oracle_equivalence, names), True, HARNESS)
        for key, names in ORACLE_GROUPS.items()
    ]


def builtin_claims() -> list[Claim]:
    claims = (_group_claims() + _cross_claims() + _series_claims() + _matrix_claims()
              + _tangle_claims() + _kernel_claims() + _oracle_claims())
    ids = [c.id for c in claims]
    if len(ids) != len(set(ids)):
        raise RuntimeError("duplicate claim ids in the registry")
    return sorted(claims, key=lambda c: c.id)
