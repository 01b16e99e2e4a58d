import dataclasses
import json
import os

import pytest

from cptweyl.claims import (
    ASSERT,
    CACHE_ENV,
    DISCREPANCY,
    FAIL,
    INFORMATIONAL,
    PASS,
    REAL,
    Claim,
    OrderCache,
    Outcome,
    builtin_claims,
    default_cache_dir,
    execute,
    matches,
    run,
    select,
)
from cptweyl.claims.computations import W_E8_ORDER, bsgs_order

# Every checkable statement the registry must cover, grouped by where it
# lives in the source.  A missing id here means a silently dropped claim.
REQUIRED_IDS = {
    "single-qubit CPT and Pauli groups": [
        "G1.ORDER.PAULI", "G1.ID.PAULI", "G2.ORDER.CPT", "G2.ID.CPT", "FP.CROSS.CPT",
    ],
    "Mermin observables and R, S": [
        "G2.ORDER.MERMIN1", "G2.ID.MERMIN1", "G2.ORDER.MERMIN2", "G2.ID.MERMIN2",
        "G2.ORDER.MERMIN6", "G2.ID.MERMIN6", "G2.ORDER.RS", "MATRIX.RS_EQ_HI",
        "MATRIX.EIGEN.R", "MATRIX.EIGEN.S",
    ],
    "gamma and two-qubit Pauli groups": [
        "G2.ORDER.GAMMA4", "G2.ID.GAMMA4", "G2.ORDER.GAMMA5", "G2.ORDER.PAULI2",
        "FP.CROSS.E32",
    ],
    "Clifford group and inflation": [
        "G3.ORDER.C3PLUS", "G3.ORDER.WE8", "G3.ORDER.CPT_TOF", "G3.ORDER.CPT_FREDKIN",
        "G3.ORDER.F7", "KERNEL.PROPER.TOF", "KERNEL.PROPER.FREDKIN",
    ],
    "three-qubit CPT group": ["G3.ORDER.CPT", "G3.ID.CPT", "G3.ID.IJ", "G3.ID.KI"],
    "entanglement of the CPT state": [
        "TANGLE.CPT.TAU3", "TANGLE.CPT.TAU_AB", "TANGLE.CPT.TAU_AC", "TANGLE.CPT.TAU_BC",
        "TANGLE.CPT.ONE", "TANGLE.CPT.SPECTRUM", "TANGLE.CPT.RHO_BC", "TANGLE.CANON.GHZ",
        "TANGLE.CANON.W",
    ],
    "binary icosahedral group and its extensions": [
        "G3.ORDER.H120", "G3.ID.H120", "G3.ORDER.H120_I", "G3.ORDER.H120_J",
        "TANGLE.GHZ.TAU3", "TANGLE.GHZ.PAIRWISE",
    ],
    "W, Z, c, Z' generators": [
        "G3.ORDER.WZ", "G3.ID.WZ", "G3.ORDER.WZC", "G3.ID.WZC", "G3.ORDER.WZZP", "G3.ID.WZZP",
        "G3.ORDER.WZCZP", "G3.ID.WZCZP", "TANGLE.W.TAU3", "TANGLE.W.CONCURRENCE", "TANGLE.W.ONE",
        "TANGLE.Z.TAU3", "TANGLE.Z.TAU_BC", "TANGLE.Z.CLASS", "TANGLE.ZPRIME.CLASS",
    ],
    "Dirac representation": [
        "G3.ORDER.DIRAC", "G3.ID.G1G2", "G3.ID.C1C2", "G3.ID.G1C1C2", "G3.ID.G2C1C2",
        "G3.ID.G1G2C1", "G3.ID.G1G2C2", "SERIES.Q_NORMAL_P", "SERIES.P_NORMAL_P2",
        "SERIES.E32_NORMAL_P2", "TANGLE.DIRAC.G_CLASS", "TANGLE.DIRAC.C_CLASS",
        "TANGLE.DIRAC.U_CLASS",
    ],
    "harness": ["ID.TRIVIAL", "ID.TRIVIAL.LABEL", "MATRIX.CATALOGUE.CHECKSUM"],
}

# statements that are ambiguous or do not hold as printed
INFORMATIONAL_IDS = {
    "G2.ID.RS", "G3.ORDER.H120_I", "G3.ORDER.H120_J", "G3.WE8.HAS_REFLECTION",
    "G3.ID.DIRAC_NO_C1", "G3.ID.DIRAC_NO_C2", "G3.ID.DIRAC_NO_G1", "G3.ID.DIRAC_NO_G2",
    "G3.ID.DIRAC_NO_U", "KERNEL.PROPER.FREDKIN", "KERNEL.PROPER.TOF", "MATRIX.EIGEN.R_LITERAL",
    "MATRIX.UNITARY.Zprime", "MATRIX.UNITARY.y", "SERIES.P_NORMAL_E32",
    "SERIES.P_NORMAL_E32PLUS", "SERIES.P_SUB_E32", "TANGLE.W.ONE", "TANGLE.ZPRIME.CLASS",
}

EXPECTED_DISCREPANCIES = {
    "G3.ID.DIRAC_NO_U", "MATRIX.EIGEN.R_LITERAL", "MATRIX.UNITARY.Zprime", "MATRIX.UNITARY.y",
    "SERIES.P_NORMAL_E32", "SERIES.P_SUB_E32", "TANGLE.W.ONE",
}


def by_id():
    return {c.id: c for c in builtin_claims()}


def strip_timing(doc):
    if isinstance(doc, dict):
        return {k: strip_timing(v) for k, v in doc.items() if k != "timing"}
    if isinstance(doc, list):
        return [strip_timing(v) for v in doc]
    return doc


# -- registry ----------------------------------------------------------------------

def test_ids_unique_and_sorted():
    ids = [c.id for c in builtin_claims()]
    assert len(ids) == len(set(ids))
    assert ids == sorted(ids)


@pytest.mark.parametrize("topic", sorted(REQUIRED_IDS))
def test_registry_completeness(topic):
    missing = [i for i in REQUIRED_IDS[topic] if i not in by_id()]
    assert missing == []


def test_registry_examples():
    claims = by_id()
    assert claims["G3.ORDER.WE8"].expected == 696_729_600
    assert claims["TANGLE.CPT.TAU3"].expected == [0.25]
    assert claims["TANGLE.CPT.TAU3"].comparison == REAL
    assert claims["ID.TRIVIAL"].expected == 1


def test_severities():
    claims = by_id()
    informational = {i for i, c in claims.items() if c.severity == INFORMATIONAL}
    assert informational == INFORMATIONAL_IDS
    assert all(c.severity in (ASSERT, INFORMATIONAL) for c in claims.values())
    assert all(c.provenance in ("stated", "derived", "harness") for c in claims.values())


def test_claims_are_picklable():
    import pickle
    for c in builtin_claims():
        pickle.loads(pickle.dumps(c))


# -- comparison rules ----------------------------------------------------------------

def test_matches():
    assert matches(0.25 + 5e-9, 0.25, REAL)
    assert not matches(0.25 + 5e-8, 0.25, REAL)
    assert not matches(0.25 + 5e-9, 0.25)
    assert matches([[0.1, 0.2]], [[0.1 + 1e-10, 0.2]], REAL)
    assert not matches([0.1], [0.1, 0.2], REAL)
    assert not matches(True, 1)
    assert not matches(1, True)
    assert matches({"a": 1}, {"a": 1}) and not matches({"a": 1}, {"b": 1})
    assert matches("[16,13]", "[16,13]")


# -- harness -------------------------------------------------------------------------

def _const(v):
    return v


def _boom():
    raise RuntimeError("kaboom")


def _outcome():
    return Outcome(3, {"why": "because"})


def test_execute_statuses():
    from functools import partial
    ok = execute(Claim("A", "", partial(_const, 2), 2))
    assert ok.status == PASS
    bad = execute(Claim("B", "", partial(_const, 2), 3))
    assert bad.status == FAIL
    info = execute(Claim("C", "", partial(_const, 2), 3, severity=INFORMATIONAL))
    assert info.status == DISCREPANCY
    err = execute(Claim("D", "", _boom, 3))
    assert err.status == FAIL and "kaboom" in err.message
    err_info = execute(Claim("E", "", _boom, 3, severity=INFORMATIONAL))
    assert err_info.status == DISCREPANCY
    out = execute(Claim("F", "", _outcome, 3))
    assert out.status == PASS and out.details == {"why": "because"}
    tup = execute(Claim("G", "", partial(_const, (1, 2)), [1, 2]))
    assert tup.status == PASS and tup.computed == [1, 2]


def test_filter_selects_only_matching():
    chosen = select(builtin_claims(), "TANGLE.*")
    assert chosen and all(c.id.startswith("TANGLE.") for c in chosen)
    report = run(builtin_claims(), filter="TANGLE.W.*")
    assert [r.id for r in report.results] == [
        "TANGLE.W.CLASS", "TANGLE.W.CONCURRENCE", "TANGLE.W.ONE", "TANGLE.W.TAU3"]
    assert [c.id for c in select(builtin_claims(), None)] == [c.id for c in builtin_claims()]


def test_corrupted_expected_gives_exactly_one_fail():
    claims = select(builtin_claims(), "G1.*")
    corrupted = [dataclasses.replace(claims[0], expected=17)] + claims[1:]
    report = run(corrupted)
    assert report.totals[FAIL] == 1
    assert not report.ok
    assert report.result(claims[0].id).status == FAIL


def test_informational_mismatch_keeps_run_ok():
    report = run(builtin_claims(), filter="TANGLE.W.*")
    assert report.result("TANGLE.W.ONE").status == DISCREPANCY
    assert report.ok


def test_report_determinism_and_workers(tmp_path):
    pattern = "G2.*"
    a = run(builtin_claims(), filter=pattern, cache_dir=str(tmp_path))
    b = run(builtin_claims(), filter=pattern, cache_dir=str(tmp_path))
    c = run(builtin_claims(), filter=pattern, workers=2, cache_dir=str(tmp_path))
    docs = [strip_timing(json.loads(r.dumps())) for r in (a, b, c)]
    assert docs[0] == docs[1] == docs[2]
    assert [r.id for r in c.results] == sorted(r.id for r in c.results)


def test_report_json_shape(full_report):
    doc = json.loads(full_report.dumps())
    assert set(doc) == {"tool", "version", "environment", "notes", "totals", "results", "timing"}
    assert doc["totals"]["total"] == len(builtin_claims())
    assert any("46,080" in n for n in doc["notes"])
    first = doc["results"][0]
    assert set(first) == {"id", "description", "severity", "provenance", "comparison", "status",
                          "computed", "expected", "details", "message", "timing"}


# -- the full registry ----------------------------------------------------------------

def test_no_assert_claim_fails(full_report):
    failed = [r.id for r in full_report.results if r.status == FAIL]
    assert failed == []
    assert full_report.ok


def test_discrepancies_are_the_known_ones(full_report):
    found = {r.id for r in full_report.results if r.status == DISCREPANCY}
    assert found == EXPECTED_DISCREPANCIES


def test_discrepancy_details(full_report):
    y = full_report.result("MATRIX.UNITARY.y")
    assert any("(row " in s for s in y.computed)
    kernel = full_report.result("KERNEL.PROPER.TOF")
    assert kernel.computed == 0 and kernel.details["proper_subgroups"] == 22
    assert all(n < W_E8_ORDER for _, n in kernel.details["inflated_orders"])


# -- cache -----------------------------------------------------------------------------

def test_order_cache_round_trip(tmp_path):
    cache = OrderCache(tmp_path)
    assert cache.get("ab" * 32) is None
    cache.put("ab" * 32, {"order": 5})
    assert cache.get("ab" * 32) == {"order": 5}
    assert (tmp_path / "ab" / ("ab" * 32 + ".json")).exists()
    assert not [p for p in tmp_path.rglob("*") if p.name.startswith(".") or p.suffix == ".tmp"]


def test_cache_env_override(monkeypatch, tmp_path):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path / "elsewhere"))
    assert str(default_cache_dir()) == str(tmp_path / "elsewhere")


def test_cached_order_is_reused(tmp_path):
    from cptweyl.claims import set_cache
    from cptweyl.claims.computations import group_of
    set_cache(str(tmp_path))
    try:
        names = ("i3", "j3")
        assert bsgs_order(names) == 8
        key = group_of(names).key()
        path = tmp_path / key[:2] / f"{key}.json"
        assert json.loads(path.read_text())["order"] == 8
        # a planted value proves the second call reads the cache
        path.write_text(json.dumps({"order": 999}))
        assert bsgs_order(names) == 999
    finally:
        set_cache(None)
    assert os.environ[CACHE_ENV]
