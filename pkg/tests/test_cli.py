import json

import pytest

from fibl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestFibonomialCommand:
    def test_2_2(self, capsys):
        code, out, _ = run(capsys, "fibonomial", "2", "2")
        assert code == 0
        assert out.strip() == "[1, 2, 2, 1]"

    def test_trivial(self, capsys):
        code, out, _ = run(capsys, "fibonomial", "3", "0")
        assert code == 0
        assert out.strip() == "[1]"

    def test_eval_q1(self, capsys):
        code, out, _ = run(capsys, "fibonomial", "5", "5", "--eval-q1")
        assert code == 0
        assert out.strip() == "136136"

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "fibonomial", "2", "2", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == "fibl-report/1"
        assert doc["polynomial"]["coeffs"] == [["0", "1"], ["1", "2"], ["2", "2"], ["3", "1"]]

    def test_usage_error(self, capsys):
        code, _, err = run(capsys, "fibonomial", "-1", "2")
        assert code == 2
        assert "error" in err


class TestEnumerateCommand:
    def test_rect_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "rect", "2", "2", "--count-only")
        assert (code, out.strip()) == (0, "6")

    def test_staircase_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "staircase", "4", "2", "--count-only")
        assert (code, out.strip()) == (0, "6")

    def test_rect_4_4(self, capsys):
        code, out, _ = run(capsys, "enumerate", "rect", "4", "4", "--count-only")
        assert (code, out.strip()) == (0, "1820")

    def test_stream_is_json_lines(self, capsys):
        code, out, _ = run(capsys, "enumerate", "rect", "2", "2")
        assert code == 0
        lines = [json.loads(line) for line in out.strip().splitlines()]
        assert len(lines) == 6
        assert all(doc["model"] == "rect" for doc in lines)

    def test_cap_exit_code(self, capsys):
        code, _, err = run(capsys, "enumerate", "rect", "6", "6", "--cap", "10",
                           "--count-only")
        assert code == 3
        assert "cap" in err


class TestCatalanCommand:
    def test_coxeter_counterexample(self, capsys):
        code, out, _ = run(capsys, "catalan", "coxeter", "F4", "2")
        assert code == 0
        assert "not a polynomial" in out

    def test_rational_unit(self, capsys):
        code, out, _ = run(capsys, "catalan", "rational", "1", "1")
        assert code == 0
        assert "polynomial of degree 0" in out

    def test_sweep_csv(self, capsys):
        code, out, _ = run(capsys, "catalan", "sweep", "--max", "4", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "m,n,gcd,is_polynomial,degree,min_coeff,max_coeff"
        assert all(",true," in line for line in lines[1:])

    def test_ordinary(self, capsys):
        code, out, _ = run(capsys, "catalan", "ordinary", "3")
        assert code == 0
        assert "polynomial of degree 10" in out

    def test_bad_family(self, capsys):
        code, _, err = run(capsys, "catalan", "coxeter", "Z9", "2")
        assert code == 2


class TestSpiralCommand:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "spiral", "7")
        assert code == 0
        assert "PASS" in out and "FAIL" not in out


class TestEllipticCommand:
    def test_number(self, capsys):
        code, out, _ = run(capsys, "elliptic", "number", "1")
        assert code == 0

    def test_theta_with_explicit_params(self, capsys):
        code, out, _ = run(capsys, "elliptic", "theta", "0.5", "--p", "0",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert abs(doc["value"]["re"] - 0.5) < 1e-12   # theta(x; 0) = 1 - x


class TestVerifyCommand:
    def test_counterexample_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "counterexample")
        assert code == 0
        assert "expected: unequal" in out

    def test_theta_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "theta", "--samples", "5")
        assert code == 0
        assert "20/20 checks passed" in out

    def test_spiral_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "spiral")
        assert code == 0

    def test_bijection_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "bijection", "--max", "4")
        assert code == 0

    def test_json_output_deterministic(self, capsys, tmp_path):
        f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
        args = ["verify", "theta", "--samples", "3", "--format", "json"]
        assert main(args + ["--out", str(f1)]) == 0
        assert main(args + ["--out", str(f2)]) == 0
        capsys.readouterr()
        assert f1.read_bytes() == f2.read_bytes()
        doc = json.loads(f1.read_text())
        assert doc["schema"] == "fibl-report/1"
        assert doc["config"]["seed"] == 0x5EED

    def test_seed_changes_output(self, capsys, tmp_path):
        f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["verify", "theta", "--samples", "3", "--format", "json",
                     "--seed", "1", "--out", str(f1)]) == 0
        assert main(["verify", "theta", "--samples", "3", "--format", "json",
                     "--seed", "2", "--out", str(f2)]) == 0
        capsys.readouterr()
        assert f1.read_bytes() != f2.read_bytes()


class TestEnvPrecedence:
    def test_env_supplies_default(self, capsys, monkeypatch, tmp_path):
        f = tmp_path / "out.json"
        monkeypatch.setenv("FIBL_SEED", "99")
        assert main(["verify", "theta", "--samples", "2", "--format", "json",
                     "--out", str(f)]) == 0
        capsys.readouterr()
        assert json.loads(f.read_text())["config"]["seed"] == 99

    def test_flag_beats_env(self, capsys, monkeypatch, tmp_path):
        f = tmp_path / "out.json"
        monkeypatch.setenv("FIBL_SEED", "99")
        assert main(["verify", "theta", "--samples", "2", "--seed", "7",
                     "--format", "json", "--out", str(f)]) == 0
        capsys.readouterr()
        assert json.loads(f.read_text())["config"]["seed"] == 7


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
