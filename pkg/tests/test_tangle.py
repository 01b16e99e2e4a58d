import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cptweyl.exactcore import DimensionMismatch, DyadicGaussian, ExactMatrix, build
from cptweyl.exactcore.scalar import I_UNIT
from cptweyl.tangle import (
    DensityMatrix,
    PureState3Q,
    SpectrumInconsistent,
    apply_local,
    classify,
    concurrence,
    concurrence_pure2q,
    concurrence_spectrum,
    entropy_of_formation,
    ghz_state,
    one_tangle,
    profile,
    profile_to_json,
    pure_density,
    reduce,
    reduce1,
    spin_flip,
    state_from_row,
    tangle,
    three_tangle,
    w_state,
)

from oracles import numpy_concurrence, numpy_one_tangle, numpy_three_tangle
from properties import HADAMARD, ROW_STATES, SIGMA_X, SIGMA_Z, TOL, property_violations

small = st.integers(-3, 3)
scalars = st.builds(DyadicGaussian, small, small, st.integers(0, 1))
states = st.lists(scalars, min_size=8, max_size=8).filter(
    lambda a: any(not x.is_zero() for x in a)).map(PureState3Q.from_amplitudes)
real_states = st.lists(small, min_size=8, max_size=8).filter(any).map(PureState3Q.from_amplitudes)


def cpt_state():
    return state_from_row(build("K3"), 0)


def rationals(rho):
    return [[v.re for v in row] for row in rho.entries]


# -- states and reductions -----------------------------------------------------

def test_state_from_row_examples():
    half = DyadicGaussian(1, 0, 1)
    assert cpt_state().amplitudes == tuple(half if k in (0, 5, 6, 7) else DyadicGaussian(0)
                                           for k in range(8))
    x0 = state_from_row(build("x"), 0)
    assert [str(a) for a in x0.amplitudes] == ["1/2", "-1/2", "0", "0", "0", "0", "1/2", "1/2"]
    e = state_from_row(ExactMatrix.identity(8), 0)
    assert e.norm_sq == 1 and e.amp("000") == DyadicGaussian(1)
    with pytest.raises(DimensionMismatch):
        state_from_row(build("S"), 0)
    with pytest.raises(ValueError):
        PureState3Q.from_amplitudes([0] * 8)


def test_reduce_examples():
    q = Fraction(1, 4)
    assert rationals(reduce(cpt_state(), "BC")) == [
        [q, 0, 0, 0], [0, q, q, q], [0, q, q, q], [0, q, q, q]]
    basis = state_from_row(ExactMatrix.identity(8), 0)
    assert rationals(reduce(basis, "AB")) == [[1, 0, 0, 0], [0] * 4, [0] * 4, [0] * 4]
    h = Fraction(1, 2)
    assert rationals(reduce(ghz_state(), "AB")) == [[h, 0, 0, 0], [0] * 4, [0] * 4, [0, 0, 0, h]]


def test_reduce1_examples():
    assert rationals(reduce1(cpt_state(), "A")) == [[Fraction(1, 4), 0], [0, Fraction(3, 4)]]
    assert rationals(reduce1(state_from_row(ExactMatrix.identity(8), 0), "A")) == [[1, 0], [0, 0]]
    assert rationals(reduce1(ghz_state(), "A")) == [[Fraction(1, 2), 0], [0, Fraction(1, 2)]]


@given(states)
def test_reductions_are_valid_density_matrices(s):
    for k in ("AB", "AC", "BC"):
        assert reduce(s, k).is_valid()
    for q in "ABC":
        assert reduce1(s, q).is_valid()


def test_psd_check_rejects_negative_matrix():
    bad = DensityMatrix.from_rationals([[2, 0], [0, -1]])
    assert bad.is_hermitian() and bad.trace() == 1 and not bad.is_psd()


# -- spin flip and concurrence ---------------------------------------------------

def test_spin_flip_examples():
    mixed = DensityMatrix.from_rationals([[1 if i == j else 0 for j in range(4)] for i in range(4)],
                                         Fraction(1, 4))
    assert spin_flip(mixed) == mixed
    bell = pure_density([1, 0, 0, 1])
    assert spin_flip(bell) == bell
    rho = reduce(cpt_state(), "AB")
    assert spin_flip(spin_flip(rho)) == rho


def test_cpt_concurrence_and_spectrum():
    rho = reduce(cpt_state(), "AB")
    spec = concurrence_spectrum(rho)
    r2 = math.sqrt(2)
    expected = [(3 + 2 * r2) / 16, (3 - 2 * r2) / 16, 0.0, 0.0]
    assert all(abs(a - b) <= TOL for a, b in zip(spec.eigenvalues, expected))
    assert abs(concurrence(rho) - 0.5) <= TOL
    assert abs(tangle(rho) - 0.25) <= TOL


def test_concurrence_examples():
    mixed = DensityMatrix.from_rationals([[1 if i == j else 0 for j in range(4)] for i in range(4)],
                                         Fraction(1, 4))
    assert concurrence(mixed) == 0
    assert abs(concurrence(pure_density([1, 0, 0, 1])) - 1) <= TOL
    assert abs(concurrence(pure_density([1, 0, 0, I_UNIT])) - 1) <= TOL


def test_concurrence_pure2q_examples():
    assert abs(concurrence_pure2q(1, 0, 0, 1) - 1) <= TOL
    assert concurrence_pure2q(1, 0, 0, 0) == 0
    r0 = build("R").row(0).scalars()
    assert abs(concurrence_pure2q(*r0) - 1) <= TOL


@given(st.lists(scalars, min_size=4, max_size=4).filter(lambda a: any(not x.is_zero() for x in a)))
def test_wootters_matches_pure_formula(amps):
    """A product state |0>_A (x) |phi>_BC reduces to the pure pair on BC."""
    s = PureState3Q.from_amplitudes(amps + [0, 0, 0, 0])
    assert abs(concurrence(reduce(s, "BC")) - concurrence_pure2q(*amps)) <= TOL


@given(states)
def test_spectrum_sanity(s):
    for k in ("AB", "AC", "BC"):
        spec = concurrence_spectrum(reduce(s, k))
        lam = spec.eigenvalues
        assert all(v >= -TOL for v in lam)
        assert abs(sum(lam) - float(spec.trace)) <= TOL
        assert abs(math.prod(lam) - float(spec.determinant)) <= TOL
        # rank(rho_pair) <= 2 for a pure three-qubit state
        assert sum(1 for v in lam if v > TOL) <= 2


@given(states)
def test_concurrence_matches_floating_oracle(s):
    for k in ("AB", "AC", "BC"):
        assert abs(concurrence(reduce(s, k)) - numpy_concurrence(s.amplitudes, k)) <= 1e-6


def test_spectrum_inconsistent_is_raised_for_non_states():
    bad = DensityMatrix.from_rationals([[2, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1]])
    with pytest.raises(SpectrumInconsistent):
        concurrence_spectrum(bad)


# -- three-tangle, one-tangle, entropy --------------------------------------------

def test_three_tangle_examples():
    assert three_tangle(ghz_state()).tau3 == 1
    assert three_tangle(w_state()).tau3 == 0
    b = three_tangle(cpt_state())
    assert b.d1 == DyadicGaussian(1, 0, 4)
    assert b.d2.is_zero() and b.d3.is_zero()
    assert b.tau3 == 0.25


def test_one_tangle_examples():
    assert one_tangle(cpt_state(), "A") == 0.75
    assert one_tangle(state_from_row(ExactMatrix.identity(8), 0), "A") == 0
    assert one_tangle(ghz_state(), "A") == 1


def test_entropy_of_formation_examples():
    f = Fraction
    assert entropy_of_formation(DensityMatrix.from_rationals([[f(1, 2), 0], [0, f(1, 2)]])) == 1
    assert entropy_of_formation(DensityMatrix.from_rationals([[1, 0], [0, 0]])) == 0
    v = entropy_of_formation(reduce1(cpt_state(), "A"))
    assert abs(v - (2 - 0.75 * math.log2(3))) <= TOL


@given(states)
def test_three_tangle_matches_floating_residual_oracle(s):
    assert abs(three_tangle(s).tau3 - numpy_three_tangle(s.amplitudes)) <= 1e-6


@given(states)
def test_one_tangle_matches_floating_oracle(s):
    for q in "ABC":
        assert abs(one_tangle(s, q) - numpy_one_tangle(s.amplitudes, q)) <= 1e-9


# -- profiles and classification -----------------------------------------------------

def test_profile_examples():
    x = profile(state_from_row(build("x"), 0))
    assert x.class_label == "GHZ-type" and abs(x.tau3 - 1) <= TOL
    assert all(v <= TOL for v in x.pairwise().values())
    z = profile(state_from_row(build("Z"), 0))
    assert z.class_label == "chain-BAC"
    assert abs(z.tau3 - 0.25) <= TOL and abs(z.tau_ab - 0.25) <= TOL
    assert abs(z.tau_ac - 0.25) <= TOL and z.tau_bc <= TOL
    k = profile(cpt_state())
    assert k.class_label == "CPT-type"
    assert all(abs(v - 0.25) <= TOL for v in k.pairwise().values())


def test_classification_table_order():
    one = {"A": 1.0, "B": 1.0, "C": 1.0}
    zero = {"A": 0.0, "B": 0.0, "C": 0.0}
    assert classify(0.0, {"AB": 0.0, "AC": 0.0, "BC": 0.0}, zero) == "separable"
    assert classify(1.0, {"AB": 0.0, "AC": 0.0, "BC": 0.0}, one) == "GHZ-type"
    assert classify(0.0, {"AB": 0.4, "AC": 0.4, "BC": 0.4}, one) == "W-type"
    assert classify(0.25, {"AB": 0.25, "AC": 0.25, "BC": 0.25}, one) == "CPT-type"
    assert classify(0.25, {"AB": 0.25, "AC": 0.25, "BC": 0.0}, one) == "chain-BAC"
    assert classify(0.25, {"AB": 0.25, "AC": 0.0, "BC": 0.25}, one) == "chain-ABC"
    assert classify(0.25, {"AB": 0.0, "AC": 0.25, "BC": 0.25}, one) == "chain-ACB"
    assert classify(0.0, {"AB": 1.0, "AC": 0.0, "BC": 0.0}, {"A": 1.0, "B": 1.0, "C": 0.0}) \
        == "biseparable"
    assert classify(0.1, {"AB": 0.1, "AC": 0.2, "BC": 0.0}, one) == "chain-BAC"
    assert classify(0.1, {"AB": 0.1, "AC": 0.2, "BC": 0.3}, one) == "generic"


def test_profile_json_shape():
    s = cpt_state()
    doc = profile_to_json(s, profile(s), {"matrix": "K3", "row": 0})
    assert set(doc) == {"state_source", "amplitudes", "tau3", "tau_ab", "tau_ac", "tau_bc",
                        "tau_a_bc", "tau_b_ac", "tau_c_ab", "class"}
    assert doc["tau3"] == 0.25 and doc["class"] == "CPT-type"


# -- property suites over every catalogue row state ---------------------------------

@pytest.mark.parametrize("name,row", ROW_STATES, ids=[f"{n}-{r}" for n, r in ROW_STATES])
def test_row_state_properties(name, row):
    assert property_violations(state_from_row(build(name), row)) == []


@given(states)
def test_random_state_properties(s):
    assert property_violations(s) == []


@given(real_states, st.sampled_from("ABC"))
def test_local_gates_preserve_one_tangle_of_that_qubit(s, q):
    for gate in (HADAMARD, SIGMA_X, SIGMA_Z):
        moved = apply_local(s, gate, q)
        assert abs(one_tangle(moved, q) - one_tangle(s, q)) <= TOL


def test_product_state_is_separable():
    s = PureState3Q.from_amplitudes([1, 1, 1, 1, 1, 1, 1, 1])
    assert profile(s).class_label == "separable"
