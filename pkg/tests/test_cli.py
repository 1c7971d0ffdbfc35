"""Command-line interface: exit codes, output shapes, manifest headers."""
import json

import pytest

from hermlie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def dumped_catalog(tmp_path, capsys):
    path = tmp_path / "catalog.json"
    code, out, _ = run(capsys, "verify-catalog", "--dump", str(path))
    assert code == 0
    return path


class TestVerifyCatalog:
    def test_dump_and_reverify(self, dumped_catalog, capsys):
        code, out, _ = run(capsys, "verify-catalog", str(dumped_catalog))
        assert code == 0
        assert "0 failures" in out

    def test_mutated_example_fails(self, dumped_catalog, tmp_path, capsys):
        data = json.loads(dumped_catalog.read_text())
        victim = next(r for r in data["examples"] if r["algebra"] == "s6.25")
        victim["omega"] = "f15+f23-f46"
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(data))
        code, out, _ = run(capsys, "verify-catalog", str(bad))
        assert code == 1
        assert "FAIL" in out and "s6.25" in out

    def test_schema_error_exit_code(self, tmp_path, capsys):
        empty = tmp_path / "empty.json"
        empty.write_text("{}")
        code, _, err = run(capsys, "verify-catalog", str(empty))
        assert code == 2

    def test_json_output(self, dumped_catalog, capsys):
        code, out, _ = run(capsys, "--json", "verify-catalog",
                           str(dumped_catalog))
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert payload["manifest"]["command"] == "verify-catalog"


class TestCheck:
    def test_metric_report(self, tmp_path, capsys):
        spec = {"algebra": "s5.16+R",
                "j_images": {"1": "f2", "3": "f4", "5": "f6"},
                "omega": "f12+f34+f56"}
        path = tmp_path / "in.json"
        path.write_text(json.dumps(spec))
        code, out, _ = run(capsys, "--json", "check", str(path))
        assert code == 0
        payload = json.loads(out)
        assert payload["J_integrable"] in (True, False)

    def test_bad_file(self, tmp_path, capsys):
        path = tmp_path / "junk.json"
        path.write_text("not json")
        code, _, err = run(capsys, "check", str(path))
        assert code == 2

    def test_missing_keys(self, tmp_path, capsys):
        path = tmp_path / "in.json"
        path.write_text(json.dumps({"omega": "f12"}))
        code, _, err = run(capsys, "check", str(path))
        assert code == 2
        assert "bad input schema" in err


class TestSearch:
    def test_complex_search_json(self, capsys):
        code, out, _ = run(capsys, "--seed", "0", "--json", "search",
                           "s6.145^0", "--restarts", "5")
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "found"
        assert payload["exact_J"] is not None

    def test_metric_search(self, capsys):
        code, out, _ = run(capsys, "--json", "search", "s5.16+R",
                           "--condition", "balanced", "--restarts", "3")
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "found"

    def test_unknown_condition(self, capsys):
        code, _, err = run(capsys, "search", "s6.25",
                           "--condition", "frobnicated")
        assert code == 2

    def test_unknown_algebra(self, capsys):
        code, _, err = run(capsys, "search", "nope")
        assert code == 2


class TestObstruction:
    def test_replay(self, capsys):
        code, out, _ = run(capsys, "obstruction", "s6.145^0",
                           "first_gauduchon")
        assert code == 0
        assert "replayed exactly" in out

    def test_no_rows(self, capsys):
        code, out, _ = run(capsys, "obstruction", "s6.25", "balanced")
        assert code == 1


class TestLatticeProbe:
    def test_builtin(self, capsys):
        code, out, _ = run(capsys, "--json", "lattice-probe", "s6.147^0")
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "integral"

    def test_custom_not_integral(self, capsys):
        code, out, _ = run(capsys, "--json", "lattice-probe", "s6.154^0",
                           "--X", "f6", "--t", "1")
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] != "integral"

    def test_no_builtin_and_no_args(self, capsys):
        code, _, err = run(capsys, "lattice-probe", "s6.25")
        assert code == 2


class TestReportTable:
    def test_csv_grid(self, capsys):
        code, out, _ = run(capsys, "report-table", "--csv",
                           "--restarts", "2", "--max-iters", "25")
        assert code == 0
        lines = [l for l in out.splitlines() if l and not l.startswith("#")]
        header = lines[0].split(",")
        assert header[0] == "algebra"
        assert "skt" in header and "strongly_gauduchon" in header
        # 34 catalog rows follow the header
        assert len([l for l in lines if l.startswith("s") or
                    l.startswith("h")]) >= 34

    def test_manifest_header_present(self, capsys):
        code, out, _ = run(capsys, "--seed", "3", "obstruction",
                           "s6.162^1", "skt")
        assert code == 0
        assert out.startswith("# hermlie obstruction")
        assert "seed=3" in out
