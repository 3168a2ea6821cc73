import json
import shutil

import pytest

from liepoisson.catalog import (
    CatalogError,
    catalog_bundled,
    catalog_load,
    check_manifest,
    entry_seed,
    find_entries,
    verify_all,
    verify_entry,
    write_manifest,
)
from liepoisson.catalog.entry import DATA_DIR
from liepoisson.catalog.verify import CLAIM_OF_FIELD, FAIL, PASS, SKIPPED
from liepoisson.invariants import homogeneous_invariants

from _alg import P, entry


def test_bundled_count_and_manifest():
    entries = catalog_bundled()
    assert len(entries) >= 83
    assert check_manifest() == []
    ids = {e.id for e in entries if e.id is not None}
    assert set(range(83, 160)) <= ids
    assert {7, 21, 22, 28, 69, 77} <= ids


def test_entry_7_y():
    e = entry("7")
    L = e.build()
    assert e.polys("Y", L.ring) == [P(L, "x4"), P(L, "x5"), P(L, "x3^2 + 2*x1*x5 - 2*x2*x4")]


def test_entry_157_relation():
    e = entry("157")
    assert e.expected["relations"] == ["x7^2*f1 + x6^2*f2 - f3^2 + 2*x6*x7*f4"]


def test_family_variants():
    e = entry("84")
    assert [lab for lab, _ in e.variants()] == ["lam=0", "lam=2", "lam=-1"]
    L = e.build({"lam": 2})
    assert L.n == 7


def test_empty_file(tmp_path):
    f = tmp_path / "empty.json"
    f.write_text("")
    assert catalog_load(f) == []


def test_find_entries():
    entries = catalog_bundled()
    assert [e.key for e in find_entries(entries, ["#101", "007", "diamond"])] == ["101", "7", "diamond"]
    with pytest.raises(KeyError):
        find_entries(entries, ["9999"])


def _entry_json(key):
    return json.loads((DATA_DIR / f"{int(key):03d}.json").read_text())


def test_parse_error_names_entry_and_field(tmp_path):
    d = _entry_json("101")
    d["expected"]["M"][0] = "x4 +* x5"
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(d))
    with pytest.raises(CatalogError) as info:
        catalog_load(f)
    assert info.value.key == "101" and info.value.field == "M"
    assert "entry 101, field M" in str(info.value)


def test_dependent_basis_rejected(tmp_path):
    d = _entry_json("154")
    d["expected"]["cpi"] = ["x2", "x4", "x2 + x4", "x6", "x7"]
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(d))
    with pytest.raises(CatalogError, match="field cpi"):
        catalog_load(f)


def test_missing_field_rejected(tmp_path):
    d = _entry_json("154")
    del d["expected"]
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(d))
    with pytest.raises(CatalogError, match="field expected"):
        catalog_load(f)


def test_duplicate_keys(tmp_path):
    d = _entry_json("154")
    (tmp_path / "a.json").write_text(json.dumps(d))
    (tmp_path / "b.json").write_text(json.dumps(d))
    with pytest.raises(CatalogError, match="duplicate"):
        catalog_load(tmp_path)


def test_manifest_mismatch_detected(tmp_path):
    copy = tmp_path / "data"
    shutil.copytree(DATA_DIR, copy)
    assert check_manifest(copy) == []
    d = json.loads((copy / "101.json").read_text())
    d["expected"]["i"] = 4
    (copy / "101.json").write_text(json.dumps(d))
    assert check_manifest(copy) == ["101.json"]
    (copy / "extra.json").write_text((copy / "154.json").read_text())
    assert check_manifest(copy) == ["101.json", "extra.json"]
    write_manifest(copy)
    assert check_manifest(copy) == []


def test_corrupted_bracket_fails_only_that_entry(tmp_path):
    keys = ["100", "101", "102"]
    for k in keys:
        d = _entry_json(k)
        if k == "101":
            d["brackets"][-1] = [3, 4, "x6"]
        (tmp_path / f"{k}.json").write_text(json.dumps(d))
    entries = catalog_load(tmp_path)
    summary = verify_all(entries, seed=42)
    bad = [r.key for r in summary.reports if r.failures]
    assert bad == ["101"]
    assert summary.cross == []


def test_broken_jacobi_skips_remaining_claims(tmp_path):
    d = _entry_json("101")
    d["brackets"].append([2, 3, "x2"])
    (tmp_path / "x.json").write_text(json.dumps(d))
    (e,) = catalog_load(tmp_path)
    rep = verify_entry(e)
    assert rep.claims[0].claim == "jacobi" and rep.claims[0].status == FAIL
    assert all(c.status == SKIPPED for c in rep.claims[1:])


def test_entry_101_all_claims_pass():
    rep = verify_entry(entry("101"))
    assert rep.ok
    statuses = {c.claim: c.status for c in rep.claims}
    for name in ("i", "c", "p", "cod", "F", "no_cp", "coregular", "yxi(x7*)", "vergne.jacobian_codim"):
        assert statuses[name] == PASS, name
    assert statuses["r"] == SKIPPED


def test_entry_155_no_cp_reason():
    rep = verify_entry(entry("155"))
    row = next(c for c in rep.claims if c.claim == "no_cp")
    assert row.status == PASS
    assert "not commutative" in row.detail or "non-commutative" in row.detail


def test_entry_136_milovanov_via_m1():
    rep = verify_entry(entry("136"))
    row = next(c for c in rep.claims if c.claim == "milovanov")
    assert row.status == PASS and "M1" in row.detail


def test_every_expected_field_has_a_claim():
    for e in catalog_bundled():
        rep = verify_entry(e) if e.key in ("101", "84", "150", "solvable8", "diamond") else None
        for name in e.expected:
            assert name in CLAIM_OF_FIELD, (e.key, name)
        if rep is None:
            continue
        claims = [c.claim.split("] ")[-1] for c in rep.claims]
        for name in e.expected:
            prefix = CLAIM_OF_FIELD[name]
            assert any(c == prefix or c.startswith(prefix + ".") or c.startswith(prefix + "(")
                       for c in claims), (e.key, name)


def test_isomorphic_y_group_shape():
    shapes = set()
    for key in ("83", "84", "85", "86", "87"):
        e = entry(key)
        for _, env in e.variants():
            L = e.build(env)
            shapes.add(tuple(len(homogeneous_invariants(L, d)) for d in (1, 2, 3)))
    assert shapes == {(1, 1, 1)}


def test_seeds_are_deterministic():
    e = entry("150")
    assert entry_seed(42, e) == entry_seed(42, e) == (42 * 1_000_003 + 150) % 2**32
    a = verify_entry(e, seed=7).to_dict()
    b = verify_entry(e, seed=7).to_dict()
    assert a == b and a["claims"][0]["elapsed_ms"] is None


def test_report_keys():
    rep = verify_entry(entry("diamond"))
    row = rep.to_dict()["claims"][0]
    assert set(row) == {"claim", "status", "detail", "elapsed_ms"}
    assert rep.to_dict(timings=True)["claims"][0]["elapsed_ms"] is not None
