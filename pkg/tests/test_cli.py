"""Command line behavior: output shapes and exit codes."""

import json

import pytest

from zdalliance import formulas
from zdalliance.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ring_info_text(capsys):
    code, out, err = run(capsys, "ring-info", "Z2 x Z4")
    assert code == 0
    assert "ring: Z2 x Z4" in out
    assert "order: 8" in out
    assert "zero divisors (with 0): 6" in out
    assert "graph: 5 vertices" in out


def test_ring_info_json(capsys):
    code, out, _ = run(capsys, "ring-info", "Z8", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 8
    assert payload["is_local"] is True
    assert payload["nilpotency_index"] == 3
    assert payload["graph"]["vertices"] == 3


def test_ring_info_field_has_no_graph(capsys):
    code, out, _ = run(capsys, "ring-info", "GF(4)", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["is_field"] is True
    assert payload["graph"] is None


def test_graph_export_dot(capsys):
    code, out, _ = run(capsys, "graph-export", "Z8")
    assert code == 0
    assert out.startswith('graph "Z8" {')
    assert "n1 -- n2;" in out


def test_graph_export_dimacs_to_file(capsys, tmp_path):
    target = tmp_path / "z8.col"
    code, out, _ = run(capsys, "graph-export", "Z8", "--format", "dimacs",
                       "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "c Z8\np edge 3 2\ne 1 2\ne 2 3\n"


def test_solve_text_and_witness(capsys):
    code, out, _ = run(capsys, "solve", "Z12", "-k", "-1", "--witness")
    assert code == 0
    assert "gamma=3" in out
    assert "witness:" in out


def test_solve_json(capsys):
    code, out, _ = run(capsys, "solve", "Z12", "-k", "-1", "--json",
                       "--witness", "--oracle")
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 3 and payload["feasible"] is True
    assert len(payload["witness"]) == 3
    assert payload["oracle"]["agrees"] is True


def test_solve_oracle_skipped_over_cap(capsys):
    # 27 vertices; the solve result still prints, the cross-check does not
    code, out, _ = run(capsys, "solve", "Z2 x GF(4) x Z5", "-k", "1",
                       "--oracle", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 11
    assert "skipped" in payload["oracle"]
    assert "22" in payload["oracle"]["skipped"]


def test_solve_infeasible(capsys):
    code, out, _ = run(capsys, "solve", "Z8", "-k", "2")
    assert code == 0
    assert "INFEASIBLE" in out


def test_solve_budget_exhausted(capsys):
    code, out, err = run(capsys, "solve", "Z2 x Z27", "-k", "1",
                         "--budget", "5")
    assert code == 3
    assert "UNKNOWN" in out
    assert "budget" in err


def test_parse_error_exit_1_with_caret(capsys):
    code, out, err = run(capsys, "solve", "Z4 y Z2", "-k", "0")
    assert code == 1
    assert "offset 3" in err
    assert "   ^" in err


def test_semantic_error_exit_1(capsys):
    code, _, err = run(capsys, "ring-info", "GF(6)")
    assert code == 1
    assert "GF" in err


def test_order_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("ZDK_ORDER_CAP", "10")
    code, _, err = run(capsys, "ring-info", "Z100")
    assert code == 1
    assert "cap" in err
    monkeypatch.setenv("ZDK_ORDER_CAP", "200")
    code, _, _ = run(capsys, "ring-info", "Z100")
    assert code == 0


def test_unknown_subcommand_exit_1(capsys):
    assert main(["frobnicate"]) == 1
    assert main([]) == 1


def test_spectrum_text(capsys):
    code, out, _ = run(capsys, "spectrum", "Z9")
    assert code == 0
    assert "k=  -1  gamma=1" in out
    assert "k=   1  gamma=2" in out


def test_spectrum_json(capsys):
    code, out, _ = run(capsys, "spectrum", "Z12", "--json")
    assert code == 0
    payload = json.loads(out)
    got = {row["k"]: row["size"] for row in payload["spectrum"]
           if row["feasible"]}
    assert got == {-4: 2, -3: 2, -2: 2, -1: 3, 0: 4, 1: 5}
    assert any(not row["feasible"] for row in payload["spectrum"])


def test_verify_summary_and_report(capsys, tmp_path):
    out_file = tmp_path / "tables.csv"
    code, out, _ = run(capsys, "verify", "tables", "--out", str(out_file))
    assert code == 0
    assert "18 records, 18 MATCH" in out
    assert out_file.read_text().startswith("family,params,ring,")


def test_verify_json_then_report(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "zpn", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["MISMATCH"] == 0
    records_file = tmp_path / "records.json"
    records_file.write_text(json.dumps(payload["records"]))
    code, out, _ = run(capsys, "report", "--in", str(records_file),
                       "--format", "md")
    assert code == 0
    assert out.startswith("# verification report")
    assert "## Z8" in out


def test_verify_mismatch_exits_2(capsys, monkeypatch):
    # a wrong pinned prediction must surface as exit code 2
    import zdalliance.verify as V

    def bad_suite(cfg):
        return [dict(kind="formula", cfg=cfg, family="tables", params="bad",
                     expr="Z8", k=0, pred=formulas.exact(99, "pinned"))]

    monkeypatch.setitem(V.SUITES, "tables", bad_suite)
    code, out, _ = run(capsys, "verify", "tables")
    assert code == 2
    assert "1 MISMATCH" in out
    assert "MISMATCH Z8" in out


def test_verify_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("grid = 3,2\n")
    code, out, _ = run(capsys, "verify", "zpn", "--config", str(cfg))
    assert code == 0
    assert "3 records" in out
    assert "3 MATCH" in out


def test_report_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "report", "--in", str(tmp_path / "nope.json"))
    assert code == 1
    assert "error" in err
