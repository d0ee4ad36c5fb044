import json

import pytest

from horizon_eur.cli import main

import goldens


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_report(out):
    values = {}
    for line in out.strip().splitlines():
        key, raw = line.split(None, 1)
        try:
            values[key] = float(raw)
        except ValueError:
            values[key] = raw.strip()
    return values


class TestReport:
    def test_singlet_near_zero_temperature(self, capsys):
        code, out, _ = run_cli(
            capsys, "report", "--state", "werner", "--p", "1", "--temp", "0.0001"
        )
        assert code == 0
        values = parse_report(out)
        assert values["adabi_bound"] == pytest.approx(0.0, abs=1e-6)
        assert values["qsk_lower"] == pytest.approx(1.0, abs=1e-6)

    def test_x_state_p0_temperature_independent(self, capsys):
        _, out_cold, _ = run_cli(
            capsys, "report", "--state", "x-state", "--p", "0", "--temp", "0.0001"
        )
        _, out_hot, _ = run_cli(
            capsys, "report", "--state", "x-state", "--p", "0", "--temp", "5"
        )
        cold, hot = parse_report(out_cold), parse_report(out_hot)
        for key in cold:
            if key == "T":
                continue
            assert hot[key] == cold[key], key

    def test_mass_dilaton_parameterization(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "report", "--state", "werner", "--p", "0.5", "--mass", "1", "--dilaton", "0.5",
        )
        assert code == 0
        assert parse_report(out)["T"] == pytest.approx(goldens.HAWKING_M1_D05, abs=1e-6)

    def test_six_decimal_places(self, capsys):
        _, out, _ = run_cli(capsys, "report", "--state", "werner", "--p", "0.5", "--temp", "1")
        report_lines = [l for l in out.splitlines() if l.startswith(("c ", "mu_bound", "qsk"))]
        assert report_lines
        for line in report_lines:
            token = line.split()[-1]
            assert len(token.split(".")[-1]) == 6

    def test_requires_exactly_one_temperature_source(self, capsys):
        code, _, err = run_cli(capsys, "report", "--state", "werner", "--p", "0.5")
        assert code == 2 and "exactly one" in err
        code, _, err = run_cli(
            capsys,
            "report", "--state", "werner", "--p", "0.5", "--temp", "1", "--mass", "1",
            "--dilaton", "0",
        )
        assert code == 2

    def test_degenerate_horizon_exit_code(self, capsys):
        code, _, err = run_cli(
            capsys,
            "report", "--state", "werner", "--p", "0.5", "--mass", "1", "--dilaton", "1",
        )
        assert code == 2
        assert "dilaton" in err

    def test_invalid_p_exit_code(self, capsys):
        code, _, err = run_cli(
            capsys, "report", "--state", "werner", "--p", "1.5", "--temp", "1"
        )
        assert code == 2
        assert "[0, 1]" in err


class TestSweep:
    def test_writes_csv(self, capsys, tmp_path):
        out = tmp_path / "sweep.csv"
        code, stdout, _ = run_cli(
            capsys,
            "sweep", "--state", "bell-diagonal",
            "--p-min", "0", "--p-max", "1", "--p-step", "0.1",
            "--t-list", "0.5,1,2", "--out", str(out),
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 1 + 33
        assert "33 rows" in stdout

    def test_json_format(self, capsys, tmp_path):
        out = tmp_path / "sweep.json"
        code, _, _ = run_cli(
            capsys,
            "sweep", "--state", "werner",
            "--p-min", "0", "--p-max", "1", "--p-step", "0.5",
            "--t-min", "0", "--t-max", "2", "--t-step", "1",
            "--out", str(out), "--format", "json",
        )
        assert code == 0
        payload = json.loads(out.read_text())
        assert len(payload) == 9

    def test_agrees_with_report(self, capsys, tmp_path):
        out = tmp_path / "one.csv"
        run_cli(
            capsys,
            "sweep", "--state", "werner",
            "--p-min", "0.5", "--p-max", "0.5", "--p-step", "0.1",
            "--t-list", "1", "--out", str(out),
        )
        header, row = out.read_text().splitlines()
        sweep_values = dict(zip(header.split(","), row.split(",")))
        _, report_out, _ = run_cli(
            capsys, "report", "--state", "werner", "--p", "0.5", "--temp", "1"
        )
        report_values = parse_report(report_out)
        column_to_field = {
            "c": "c", "mu_bound": "mu_bound", "s_cond_ab": "s_cond_ab",
            "berta_bound": "berta_bound", "delta": "delta",
            "adabi_bound": "adabi_bound", "lhs": "lhs", "qsk_rate": "qsk_lower",
        }
        for column, field in column_to_field.items():
            assert float(sweep_values[column]) == pytest.approx(
                report_values[field], abs=1e-6
            ), column

    def test_unwritable_path_exit_code(self, capsys, tmp_path):
        # parent directory does not exist, so the write must fail
        code, _, err = run_cli(
            capsys,
            "sweep", "--state", "werner",
            "--p-min", "0", "--p-max", "0", "--p-step", "0.1",
            "--t-list", "1",
            "--out", str(tmp_path / "no_dir" / "deep" / "out.csv"),
        )
        assert code == 3
        assert "I/O" in err

    def test_conflicting_t_flags(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys,
            "sweep", "--state", "werner",
            "--t-list", "1", "--t-min", "0", "--t-max", "1", "--t-step", "0.5",
            "--out", str(tmp_path / "x.csv"),
        )
        assert code == 2

    def test_missing_t_grid(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "sweep", "--state", "werner", "--out", str(tmp_path / "x.csv")
        )
        assert code == 2
        assert "t-list" in err or "t-min" in err


class TestValidateCommand:
    def test_passes(self, capsys):
        code, out, _ = run_cli(capsys, "validate")
        assert code == 0
        assert "hermitian-core" in out
        assert "FAIL" not in out

    def test_seed_independence(self, capsys):
        for seed in ("7", "9"):
            code, out, _ = run_cli(capsys, "validate", "--seed", seed)
            assert code == 0, out


def test_argparse_usage_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["report", "--state", "unknown-family", "--p", "0.5", "--temp", "1"])
    assert info.value.code == 2


def test_jobs_env_default(monkeypatch):
    monkeypatch.setenv("HORIZON_EUR_JOBS", "4")
    from horizon_eur.cli import default_jobs

    assert default_jobs() == 4
    monkeypatch.setenv("HORIZON_EUR_JOBS", "not-a-number")
    assert default_jobs() == 1
