"""Verification suites, records, and report emission."""

import csv
import io
import json

import pytest

from zdalliance import SuiteConfig, run_suite, summarize
from zdalliance.verify import (CSV_COLUMNS, emit_report, parse_config_file,
                               apply_config, records_from_dicts,
                               _records_to_dicts)


def _strip_timing(text: str) -> list[list[str]]:
    rows = list(csv.reader(io.StringIO(text)))
    return [row[:-2] for row in rows]


def test_tables_suite_all_match():
    records = run_suite(SuiteConfig(suite="tables"))
    assert len(records) == 18
    assert all(r.status == "MATCH" for r in records)
    rings = {r.ring for r in records}
    assert rings == {"Z12", "Z2 x Z4", "Z9", "Z8"}


def test_zpn_suite_grid_override():
    records = run_suite(SuiteConfig(suite="zpn", grid="2,3"))
    assert [r.k for r in records] == [-2, -1, 0, 1]
    assert all(r.ring == "Z8" and r.status == "MATCH" for r in records)


def test_bounds_suite_headline_values():
    records = run_suite(SuiteConfig(suite="bounds"))
    assert all(r.status == "WITHIN_BOUNDS" for r in records)
    by = {(r.ring, r.params.split(";")[0]): r for r in records}
    assert by[("Z12", "check=A-min")].predicted_hi == 9
    assert by[("Z2 x Z4", "check=A-min")].predicted_hi == 7
    assert by[("Z9", "check=BC-max-min")].predicted_hi == 3
    assert by[("Z9", "check=BC-max-min")].solved == 3
    assert by[("Z8", "check=BC-max-min")].predicted_hi == 4
    assert by[("Z8", "check=BC-max-min")].solved == 4
    pinned = [r for r in records if "A-refined-pinned" in r.params]
    assert len(pinned) == 1
    assert pinned[0].ring == "Z2 x Z4"
    assert pinned[0].predicted_hi == 6
    assert pinned[0].solved == 6


def test_z2local_suite_statuses():
    records = run_suite(SuiteConfig(suite="z2local", grid="Z8"))
    # Z2 x Z8: r=8, z=4, index 3; named exact cases plus bounds gaps
    assert {r.status for r in records} <= {"MATCH", "WITHIN_BOUNDS"}
    gap = [r for r in records if r.predicted_kind == "bounds"]
    assert gap and all(r.status == "WITHIN_BOUNDS" for r in gap)
    assert sum(r.predicted_kind == "exact" for r in records) >= 6


def test_z2local_rejects_non_local_grid():
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(suite="z2local", grid="Z6"))


def test_known_graphs_oracle_cap_reported_not_dropped():
    records = run_suite(SuiteConfig(suite="known_graphs", grid="Z81"))
    assert len(records) == 1
    assert records[0].status == "SKIPPED"
    assert "oracle-cap" in records[0].reason


def test_known_graphs_small():
    records = run_suite(SuiteConfig(suite="known_graphs", grid="Z12; Z8"))
    assert all(r.status == "MATCH" for r in records)
    infeasible = [r for r in records if r.predicted_kind == "infeasible"]
    assert infeasible and all(r.solved == "INFEASIBLE" for r in infeasible)


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite(SuiteConfig(suite="nope"))


def test_summarize():
    records = run_suite(SuiteConfig(suite="tables"))
    s = summarize(records)
    assert s == {"records": 18, "MATCH": 18, "WITHIN_BOUNDS": 0,
                 "MISMATCH": 0, "SKIPPED": 0}


def test_jobs_match_sequential():
    a = run_suite(SuiteConfig(suite="tables"))
    b = run_suite(SuiteConfig(suite="tables", jobs=2))
    key = lambda r: (r.family, r.params, r.ring, r.k, r.status, r.solved)
    assert list(map(key, a)) == list(map(key, b))


def test_csv_deterministic_modulo_timing():
    records = run_suite(SuiteConfig(suite="tables"))
    again = run_suite(SuiteConfig(suite="tables"))
    a, b = emit_report(records, "csv"), emit_report(again, "csv")
    assert _strip_timing(a) == _strip_timing(b)
    header = a.splitlines()[0]
    assert header == ",".join(CSV_COLUMNS)


def test_csv_row_shape():
    records = run_suite(SuiteConfig(suite="zpn", grid="3,2"))
    rows = list(csv.reader(io.StringIO(emit_report(records, "csv"))))
    assert rows[0] == list(CSV_COLUMNS)
    assert len(rows) == len(records) + 1
    for row in rows[1:]:
        assert len(row) == len(CSV_COLUMNS)
        assert row[9] in ("MATCH", "WITHIN_BOUNDS")


def test_markdown_groups_by_ring():
    records = run_suite(SuiteConfig(suite="tables"))
    md = emit_report(records, "md")
    assert md.startswith("# verification report")
    for ring in ("Z12", "Z2 x Z4", "Z8", "Z9"):
        assert f"## {ring}" in md
    assert "| k | gamma_k_d | count_bound | predicted | status |" in md


def test_json_round_trip():
    records = run_suite(SuiteConfig(suite="tables"))
    text = emit_report(records, "json")
    rows = json.loads(text)
    back = records_from_dicts(rows)
    assert _records_to_dicts(back) == rows
    assert emit_report(back, "csv") == emit_report(records, "csv")


def test_empty_records_error():
    with pytest.raises(ValueError, match="no records"):
        emit_report([], "csv")


def test_unknown_format_error():
    records = run_suite(SuiteConfig(suite="tables"))
    with pytest.raises(ValueError, match="unknown report format"):
        emit_report(records, "xml")


def test_emit_report_writes_file(tmp_path):
    records = run_suite(SuiteConfig(suite="tables"))
    out = tmp_path / "report.csv"
    text = emit_report(records, "csv", str(out))
    assert out.read_text() == text


def test_config_file(tmp_path):
    cfg_file = tmp_path / "run.cfg"
    cfg_file.write_text(
        "# a comment\n"
        "suite = zpn\n"
        "jobs = 2\n"
        "max_vertices = 40   # trailing comment\n"
        "node_budget = 1000000\n"
        "time_budget = 60\n"
        "grid = 2,3; 3,2\n"
        "format = md\n")
    options = parse_config_file(str(cfg_file))
    cfg = apply_config(SuiteConfig(suite="tables"), options)
    assert cfg.suite == "zpn"
    assert cfg.jobs == 2
    assert cfg.max_vertices == 40
    assert cfg.node_budget == 1000000
    assert cfg.time_budget == 60.0
    assert cfg.grid == "2,3; 3,2"
    assert cfg.fmt == "md"


def test_config_file_rejects_garbage(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("this is not a key value line\n")
    with pytest.raises(ValueError, match="expected"):
        parse_config_file(str(bad))
    with pytest.raises(ValueError, match="unknown config key"):
        apply_config(SuiteConfig(suite="tables"), {"wat": "1"})


def test_formula_suites_have_zero_mismatches():
    for suite, grid in [("fields", "2,3; 3,3"), ("z2z2F", "2; 3"),
                        ("z2FK", "3,3"), ("idealizations", "2,2; 3,1")]:
        records = run_suite(SuiteConfig(suite=suite, grid=grid))
        assert records, suite
        assert all(r.status == "MATCH" for r in records), suite
