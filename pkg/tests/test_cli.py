import json
import shutil
import subprocess
import sys
from importlib import resources
from pathlib import Path

import pytest

from evensets import cli


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def kummer_file(tmp_path):
    text = (resources.files("evensets") / "data" / "kummer.txt").read_text()
    path = tmp_path / "kummer.txt"
    path.write_text(text)
    return str(path)


class TestCodeAnalyze:
    def test_text_output(self, capsys, kummer_file):
        code, out, _ = run_cli(capsys, ["code", "analyze", kummer_file])
        assert code == 0
        assert "n: 16" in out
        assert "k: 5" in out
        assert "minimum_distance: 8" in out
        assert "doubly-even" in out

    def test_json_output(self, capsys, kummer_file):
        code, out, _ = run_cli(capsys, ["--json", "code", "analyze", kummer_file])
        assert code == 0
        doc = json.loads(out)
        payload = doc["payload"]
        assert payload["weight_distribution"] == {"0": 1, "8": 30, "16": 1}
        assert payload["self_orthogonal"] is True
        assert payload["dual_dimension"] == 11

    def test_json_flag_after_subcommand(self, capsys, kummer_file):
        _, before, _ = run_cli(capsys, ["--json", "code", "analyze", kummer_file])
        _, after, _ = run_cli(capsys, ["code", "analyze", kummer_file, "--json"])
        assert before == after

    def test_ragged_matrix_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("1100\n101\n")
        code, _, err = run_cli(capsys, ["code", "analyze", str(bad)])
        assert code == 2
        assert "error:" in err and "line 2" in err

    def test_missing_file_exits_2(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, ["code", "analyze", str(tmp_path / "nope")])
        assert code == 2
        assert "error:" in err


class TestCodeProject:
    def test_projection(self, capsys, kummer_file):
        word = "1111111100000000"
        code, out, _ = run_cli(capsys, ["--json", "code", "project",
                                        kummer_file, "--word", word])
        assert code == 0
        payload = json.loads(out)["payload"]
        assert payload["image_n"] == 8
        assert payload["image_k"] + payload["kernel_dimension"] == 5
        assert all(int(w) % 4 == 0
                   for w in payload["image_weight_distribution"])

    def test_non_codeword_exits_2(self, capsys, kummer_file):
        code, _, err = run_cli(capsys, ["code", "project", kummer_file,
                                        "--word", "1" + "0" * 15])
        assert code == 2
        assert "error:" in err


class TestCalculators:
    def test_griesmer_by_dimension(self, capsys):
        code, out, _ = run_cli(capsys, ["--json", "griesmer", "--k", "12",
                                        "--d", "32"])
        assert code == 0
        assert json.loads(out)["payload"]["n_min"] == 69

    def test_griesmer_by_length(self, capsys):
        code, out, _ = run_cli(capsys, ["--json", "griesmer", "--n", "65",
                                        "--d", "32"])
        assert code == 0
        assert json.loads(out)["payload"]["k_max"] == 8

    def test_griesmer_requires_one_of_n_k(self, capsys):
        with pytest.raises(SystemExit):
            cli.main(["griesmer", "--d", "32"])
        with pytest.raises(SystemExit):
            cli.main(["griesmer", "--n", "65", "--k", "12", "--d", "32"])

    def test_chi_integer(self, capsys):
        code, out, _ = run_cli(capsys, ["--json", "chi", "--degree", "8",
                                        "--twist", "4", "--weight", "56"])
        payload = json.loads(out)["payload"]
        assert code == 0
        assert payload["chi"] == "6"
        assert payload["is_integer"] is True
        assert payload["serre_dual_twist"] == 4

    def test_chi_fractional(self, capsys):
        _, out, _ = run_cli(capsys, ["--json", "chi", "--degree", "4",
                                     "--twist", "1", "--weight", "0"])
        payload = json.loads(out)["payload"]
        assert payload["chi"] == "5/2"
        assert payload["is_integer"] is False

    def test_emin(self, capsys):
        _, out, _ = run_cli(capsys, ["--json", "emin", "--degree", "7"])
        assert json.loads(out)["payload"]["min_weight"] == 36
        _, out, _ = run_cli(capsys, ["--json", "emin", "--degree", "8",
                                     "--weak"])
        assert json.loads(out)["payload"]["min_weight"] == 28

    def test_emin_unproven_exits_2(self, capsys):
        code, _, err = run_cli(capsys, ["emin", "--degree", "9"])
        assert code == 2
        assert "conjectural" in err

    def test_surface_bounds(self, capsys):
        _, out, _ = run_cli(capsys, ["--json", "surface", "bounds",
                                     "--degree", "6", "--nodes", "65"])
        payload = json.loads(out)["payload"]
        assert payload["b2_resolution"] == 106
        assert payload["dim_lower_bound_strict"] == 12
        assert payload["dim_lower_bound_even"] == 13
        assert payload["strict_weight_modulus"] == 8
        assert payload["weak_weight_residue"] == 3

    def test_surface_bounds_too_many_nodes_exits_2(self, capsys):
        code, _, err = run_cli(capsys, ["surface", "bounds", "--degree", "6",
                                        "--nodes", "66"])
        assert code == 2
        assert "error:" in err


class TestGaps:
    def test_gap_certificate(self, capsys):
        code, out, _ = run_cli(capsys, ["--json", "gaps", "--degree", "10",
                                        "--parity", "strict"])
        assert code == 0
        doc = json.loads(out)
        assert doc["status"] == "pass"
        assert doc["payload"]["conclusion"]["min_weight"] == 80
        assert doc["payload"]["conclusion"]["excluded_weights"] == \
            [88, 96, 104, 112]

    def test_text_lists_steps(self, capsys):
        code, out, _ = run_cli(capsys, ["gaps", "--degree", "7",
                                        "--parity", "strict"])
        assert code == 0
        assert "instability-exclusion" in out
        assert "conclusion:" in out

    def test_unproven_degree_exits_2(self, capsys):
        code, _, err = run_cli(capsys, ["gaps", "--degree", "9",
                                        "--parity", "strict"])
        assert code == 2
        assert "not established" in err


class TestVerifyPaper:
    def test_passes(self, capsys):
        code, out, _ = run_cli(capsys, ["verify", "paper"])
        assert code == 0
        assert "status: pass" in out
        assert "FAIL" not in out

    def test_json_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, ["--json", "verify", "paper"])
        _, second, _ = run_cli(capsys, ["--json", "verify", "paper"])
        assert first == second
        assert json.loads(first)["status"] == "pass"

    def test_corrupted_data_file_fails(self, capsys, tmp_path):
        data = resources.files("evensets") / "data"
        for name in ("kummer.txt", "togliatti.txt"):
            shutil.copy(str(data / name), tmp_path / name)
        rows = [l for l in (tmp_path / "kummer.txt").read_text().splitlines()]
        flip = rows.index("1111111100000000")
        rows[flip] = "0111111100000000"
        (tmp_path / "kummer.txt").write_text("\n".join(rows) + "\n")
        code, out, _ = run_cli(capsys, ["--json", "verify", "paper",
                                        "--data-dir", str(tmp_path)])
        assert code == 1
        doc = json.loads(out)
        assert doc["status"] == "fail"
        failing = [c["name"] for c in doc["payload"]["checks"] if not c["pass"]]
        assert failing == ["kummer data file round trip"]


class TestOutputHandling:
    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run_cli(capsys, ["--json", "--output", str(target),
                                        "chi", "--degree", "6", "--twist", "2",
                                        "--weight", "32"])
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["payload"]["chi"] == "0"

    def test_text_and_json_agree_numerically(self, capsys):
        argv = ["surface", "bounds", "--degree", "4", "--nodes", "16"]
        _, text, _ = run_cli(capsys, argv)
        _, raw, _ = run_cli(capsys, ["--json"] + argv)
        payload = json.loads(raw)["payload"]
        for key, value in payload.items():
            assert f"{key}: {value}" in text

    def test_installed_entry_point(self, kummer_file):
        exe = shutil.which("evensets")
        if exe is None:
            pytest.skip("console script not installed")
        proc = subprocess.run([exe, "--json", "emin", "--degree", "3"],
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["payload"]["min_weight"] == 4

    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "evensets.cli", "griesmer", "--k", "5",
             "--d", "8"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "n_min: 16" in proc.stdout
