import json

import pytest

from ffcs.cli import parse_and_dispatch


def run_cli(capsys, *argv):
    code = parse_and_dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFieldCommand:
    def test_extension_field_report(self, capsys):
        code, out, err = run_cli(capsys, "field", "--q", "16")
        assert code == 0 and err == ""
        obj = json.loads(out)
        assert obj["q"] == 16 and obj["p"] == 2 and obj["m"] == 4
        assert obj["reduction_poly_str"] == "x^4 + x + 1"
        assert set(obj["table_checksums"]) == {"add_table", "mul_table", "neg_table", "inv_table"}
        assert obj["meta"]["version"]

    def test_prime_field_has_no_poly(self, capsys):
        code, out, _ = run_cli(capsys, "field", "--q", "7")
        assert code == 0
        assert json.loads(out)["reduction_poly"] is None

    def test_unsupported_order_is_parameter_error(self, capsys):
        code, out, err = run_cli(capsys, "field", "--q", "12")
        assert code == 1
        assert out == ""
        assert "parameter error" in err


class TestBoundCommand:
    def test_threshold_echo(self, capsys):
        code, out, _ = run_cli(
            capsys, "bound", "--n", "1000", "--k", "200", "--m", "722", "--q", "2", "--gamma", "dense"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["sufficient_M"] == 722
        assert obj["necessary_M"] < 722
        assert obj["union_bound_log"] <= 0.0
        assert obj["union_bound_capped"] <= 1.0
        assert obj["meta"]["config"]["gamma"] == "dense"

    def test_literal_gamma(self, capsys):
        code, out, _ = run_cli(
            capsys, "bound", "--n", "12", "--k", "3", "--m", "6", "--q", "4", "--gamma", "0.3"
        )
        assert code == 0
        assert json.loads(out)["meta"]["gamma_value"] == 0.3

    def test_invalid_k_rejected(self, capsys):
        code, _, err = run_cli(capsys, "bound", "--n", "5", "--k", "9", "--m", "2", "--q", "2")
        assert code == 1 and "parameter error" in err


class TestNhCommand:
    def test_verified_table(self, capsys):
        code, out, _ = run_cli(capsys, "nh", "--n", "2", "--k", "1", "--q", "2", "--verify")
        assert code == 0
        obj = json.loads(out)
        assert obj["verified"] is True
        assert obj["all_pairs"] == {"1": 4, "2": 2}
        assert obj["restricted_pairs"] == {"1": 2, "2": 2}

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(capsys, "nh", "--n", "3", "--k", "1", "--q", "3", "--format", "csv")
        assert code == 0
        lines = [l for l in out.splitlines() if not l.startswith("#")]
        assert lines[0] == "h,all_pairs,restricted_pairs"
        assert len(lines) == 3  # h = 1, 2


class TestCurveCommand:
    def test_csv_schema_and_determinism(self, capsys, tmp_path):
        args = [
            "curve", "--n", "40", "--q", "2", "--q", "4",
            "--gamma", "dense", "--target", "1e-2", "--grid", "0.1,0.2,0.3",
        ]
        f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
        assert parse_and_dispatch(args + ["--out", str(f1)]) == 0
        assert parse_and_dispatch(args + ["--out", str(f2)]) == 0
        capsys.readouterr()
        assert f1.read_bytes() == f2.read_bytes()
        lines = [l for l in f1.read_text().splitlines() if not l.startswith("#")]
        assert lines[0] == "q,gamma_mode,K,M,sparsity_ratio,compression_ratio,achieved"
        assert len(lines) == 1 + 2 * 3  # two fields, three grid points
        first = lines[1].split(",")
        assert first[0] == "2" and first[1] == "dense" and first[6] == "true"

    def test_sparse_mode_label(self, capsys):
        code, out, _ = run_cli(
            capsys, "curve", "--n", "30", "--q", "4", "--gamma", "c=5", "--grid", "0.2"
        )
        assert code == 0
        data_line = [l for l in out.splitlines() if not l.startswith(("#", "q,"))][0]
        assert data_line.split(",")[1] == "c=5"

    def test_bad_target(self, capsys):
        code, _, err = run_cli(capsys, "curve", "--n", "30", "--q", "2", "--target", "2.0")
        assert code == 1 and "parameter error" in err


class TestSimulateCommand:
    def test_report_fields(self, capsys):
        code, out, _ = run_cli(
            capsys, "simulate", "--n", "6", "--k", "2", "--m", "3", "--q", "2",
            "--gamma", "dense", "--trials", "200", "--seed", "42",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["trials"] == 200
        assert obj["e0_errors"] <= obj["e_errors"] <= 200
        assert obj["inclusion_violations"] == 0
        assert obj["seed"] == 42
        assert 0.0 <= obj["union_bound_value"] <= 1.0
        assert obj["meta"]["config"]["trials"] == 200

    def test_dump_writes_instances(self, capsys, tmp_path):
        dump = tmp_path / "dump"
        code, out, _ = run_cli(
            capsys, "simulate", "--n", "5", "--k", "1", "--m", "2", "--q", "4",
            "--gamma", "0.5", "--trials", "3", "--seed", "1", "--dump", str(dump),
        )
        assert code == 0
        files = sorted(dump.iterdir())
        assert [f.name for f in files] == ["trial_00000.json", "trial_00001.json", "trial_00002.json"]
        inst = json.loads(files[0].read_text())
        assert inst["matrix"]["dims"] == [2, 5]
        assert inst["signal"]["dims"] == [5]
        assert inst["matrix"]["q"] == 4
        assert len(inst["y"]) == 2

    def test_enumeration_cap_is_runtime_error(self, capsys):
        # candidate count is checked before any allocation, so an
        # impossibly large instance fails fast with exit code 2
        code, _, err = run_cli(
            capsys, "simulate", "--n", "60", "--k", "30", "--m", "3", "--q", "4", "--trials", "1"
        )
        assert code == 2 and "runtime error" in err


class TestUsage:
    def test_no_subcommand_is_usage_error(self, capsys):
        code, out, err = run_cli(capsys)
        assert code == 1
        assert out == ""
        assert "usage" in err.lower()

    def test_unknown_flag(self, capsys):
        code, _, err = run_cli(capsys, "bound", "--frobnicate", "1")
        assert code == 1 and "usage" in err.lower()

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            parse_and_dispatch(["--version"])
        assert exc.value.code == 0
