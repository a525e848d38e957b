from __future__ import annotations

import shutil

import pytest

from edgeprim.catalog import (FAIL, PASS, CatalogEntry, ManifestError, OutOfScope,
                              find_entry, format_report, format_summary, from_machine,
                              load_catalog, parse_manifest, to_machine, verify_all,
                              verify_entry, verify_family_psl2, verify_triple)
from edgeprim.catalog.manifest import DATA_DIR
from edgeprim.catalog.verify import load_triple
from edgeprim.groups import PermGroup, symmetric_group
from edgeprim.perm import parse_permutation

MINIMAL = """id: X
tier: 1
group_file: g.gen
h_file: h.gen
k_file: k.gen
"""


def copy_entry(entry_id, dest):
    for p in DATA_DIR.glob(f"{entry_id}.*"):
        shutil.copy(p, dest / p.name)
    return dest / f"{entry_id}.txt"


def test_catalog_loads_every_manifest():
    entries = load_catalog()
    assert len(entries) == len(list(DATA_DIR.glob("*.txt")))
    assert len({e.id for e in entries}) == len(entries)
    for e in entries:
        if e.runnable:
            for which in ("group", "h", "k"):
                assert e.path(which).exists(), (e.id, which)


def test_runnable_rows_have_valency_at_least_six():
    flagged = [e.id for e in load_catalog() if e.runnable and not e.valency_at_least_six]
    assert flagged == []


def test_tier_one_edge_budget():
    for e in load_catalog():
        if e.tier == "1":
            assert e.expected_edge_count <= 5 * 10**5


def test_parse_minimal_and_notes():
    e = parse_manifest(MINIMAL + "notes: one\nnotes: two\nexpected_edge_count: 1_000\n")
    assert e.id == "X" and e.notes == "one two" and e.expected_edge_count == 1000
    assert e.expected_s_min == 2 and e.expected_edge_stab_soluble


@pytest.mark.parametrize("extra, message", [
    ("colour: red\n", "unknown key"),
    ("id: Y\n", "duplicate"),
    ("expected_valency_d: six\n", "integer"),
    ("expected_bipartite: maybe\n", "true or false"),
    ("expected_shape: star(4)\n", "unknown shape"),
    ("no colon here\n", "key: value"),
])
def test_parse_errors(extra, message):
    with pytest.raises(ManifestError, match=message):
        parse_manifest(MINIMAL + extra)


def test_parse_requires_files_for_runnable_tiers():
    with pytest.raises(ManifestError, match="h_file"):
        parse_manifest("id: X\ntier: 2\ngroup_file: g\nk_file: k\n")
    e = parse_manifest("id: X\ntier: out-of-scope\n")
    assert not e.runnable
    with pytest.raises(ManifestError, match="tier"):
        parse_manifest("id: X\ntier: 3\n")


def test_tier_one_edge_limit_enforced():
    with pytest.raises(ManifestError, match="5e5"):
        parse_manifest(MINIMAL + "expected_edge_count: 500001\n")


def test_out_of_scope_entry_refused():
    with pytest.raises(OutOfScope):
        verify_entry(find_entry("F42"))


def test_corrupted_k_file_fails_index2(tmp_path):
    copy_entry("S7-PSL27", tmp_path)
    copy_entry("M11-K11", tmp_path)
    shutil.copy(tmp_path / "S7-PSL27.g.gen", tmp_path / "S7-PSL27.k.gen")
    reports = {r.entry_id: r for r in verify_all(1, entries=load_catalog(tmp_path))}
    assert reports["M11-K11"].verdict == "pass"
    bad = reports["S7-PSL27"]
    assert bad.verdict == "fail"
    assert bad.checks["index2"].status == FAIL
    assert "index2" in bad.failed


def test_missing_file_is_an_error(tmp_path):
    copy_entry("S7-PSL27", tmp_path)
    (tmp_path / "S7-PSL27.h.gen").unlink()
    (report,) = verify_all(1, entries=load_catalog(tmp_path), family=False)
    assert report.verdict == "error" and report.error


def test_empty_catalog_gives_empty_summary(tmp_path):
    reports = verify_all(1, entries=load_catalog(tmp_path))
    assert reports == []
    assert format_summary(reports).splitlines()[-1] == "0/0 passed"


def test_checks_are_independent():
    # swapped H and K: index2 fails, later checks still report
    S7 = find_entry("S7-PSL27")
    G, H, K = load_triple(S7)
    r = verify_triple(G, K, H, S7)
    assert r.checks["index2"].status == FAIL
    assert r.checks["orders"].status == FAIL
    assert r.checks["connected"].status == "blocked"
    assert r.verdict == "fail"


def test_toy_triple_report():
    S4 = symmetric_group(4)
    S3 = PermGroup([parse_permutation("(1 2)", 4), parse_permutation("(1 2 3)", 4)], 4)
    K = PermGroup([parse_permutation("(1 2)", 4), parse_permutation("(3 4)", 4)], 4)
    entry = CatalogEntry(id="K4", tier="1", expected_valency_d=3, expected_vertex_count=4,
                         expected_edge_count=6, expected_shape="complete(4)")
    r = verify_triple(S4, S3, K, entry)
    assert r.checks["index2"].status == PASS
    assert r.checks["shape"].status == PASS
    # S_4 is imprimitive on the edges of K_4
    assert r.checks["edge_primitive"].status == FAIL


def test_machine_round_trip():
    reports = [verify_entry(find_entry(i)) for i in ("M10-K10", "PGL29-K66")]
    text = to_machine(reports)
    back = from_machine(text)
    assert [r.without_timings() for r in back] == [r.without_timings() for r in reports]
    assert to_machine(back) == text
    with pytest.raises(ValueError):
        from_machine('{"format": "other", "version": 1, "reports": []}')


def test_human_report_lists_every_check():
    r = verify_entry(find_entry("M11-K11"))
    text = format_report(r)
    assert text.startswith("M11-K11: pass")
    for k in r.checks:
        assert k in text


def test_jobs_do_not_change_output():
    entries = [find_entry(i) for i in ("S7-PSL27", "M10-K10", "PGL2(11)-D20", "Sz8")]
    one = [r.without_timings() for r in verify_all(1, jobs=1, entries=entries, family=False)]
    two = [r.without_timings() for r in verify_all(1, jobs=2, entries=entries, family=False)]
    assert one == two
    assert [r.entry_id for r in one] == [e.id for e in entries]


def test_family_reports_ids_and_shapes():
    reports = verify_family_psl2([7, 8, 9])
    assert [r.entry_id for r in reports] == [f"PSL2({q})-family" for q in (7, 8, 9)]
    for q, r in zip((7, 8, 9), reports):
        assert r.verdict == "pass"
        assert r.values["shape"] == f"complete({q + 1})"
        assert r.values["valency"] == q
