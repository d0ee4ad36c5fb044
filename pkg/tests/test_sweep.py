import json

import pytest

from horizon_eur.sweep import (
    CONTOUR_T_GRID,
    CSV_COLUMNS,
    FIGURE_P_GRID,
    FIGURE_SPECS,
    LINE_T_GRID,
    SweepConfig,
    evaluate_point,
    figure_config,
    make_observable,
    render_csv,
    render_json,
    run_sweep,
)


def small_config(**overrides):
    base = dict(
        family="bell-diagonal",
        p_grid=(0.0, 0.5, 1.0),
        t_grid=(0.0, 1.0),
    )
    base.update(overrides)
    return SweepConfig(**base)


class TestSweepConfig:
    def test_unknown_family(self):
        with pytest.raises(ValueError, match="family"):
            small_config(family="ghz")

    def test_empty_grid(self):
        with pytest.raises(ValueError, match="non-empty"):
            small_config(p_grid=())

    def test_non_increasing_grid(self):
        with pytest.raises(ValueError, match="increasing"):
            small_config(t_grid=(1.0, 1.0))

    def test_p_out_of_range(self):
        with pytest.raises(ValueError, match="p_grid"):
            small_config(p_grid=(0.0, 1.5))

    def test_negative_temperature(self):
        with pytest.raises(ValueError, match="nonnegative"):
            small_config(t_grid=(-1.0, 0.0))

    def test_bad_format(self):
        with pytest.raises(ValueError, match="format"):
            small_config(format="xml")

    def test_bad_observable(self):
        with pytest.raises(ValueError, match="observable"):
            small_config(q_axis="q")


class TestMakeObservable:
    def test_pauli_axes(self):
        for axis in ("x", "y", "z", "X", " Z "):
            make_observable(axis)

    def test_bloch_pair(self):
        obs = make_observable("0.5,1.25")
        assert obs.matrix.shape == (2, 2)

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            make_observable("a,b")


class TestRunSweep:
    def test_row_count_and_order(self):
        rows = run_sweep(small_config())
        assert len(rows) == 6
        keys = [(r.p, r.T) for r in rows]
        assert keys == sorted(keys)

    def test_matches_evaluate_point(self):
        rows = run_sweep(small_config())
        direct = evaluate_point("bell-diagonal", 0.5, 1.0, 1.0, "x", "z")
        match = [r for r in rows if (r.p, r.T) == (0.5, 1.0)]
        assert match == [direct]

    def test_parallel_rows_identical(self):
        config = small_config(p_grid=tuple(i / 5 for i in range(6)), t_grid=(0.0, 0.5, 2.0))
        assert run_sweep(config, jobs=1) == run_sweep(config, jobs=2)

    def test_adabi_monotone_in_temperature(self):
        config = SweepConfig(
            family="bell-diagonal",
            p_grid=tuple(i / 10 for i in range(11)),
            t_grid=(0.5, 1.0, 2.0),
        )
        rows = run_sweep(config)
        assert len(rows) == 33
        for p in config.p_grid:
            series = [r.adabi_bound for r in rows if r.p == p]
            assert all(b >= a - 1e-9 for a, b in zip(series, series[1:]))

    def test_werner_qsk_antitone_in_temperature(self):
        config = SweepConfig(
            family="werner",
            p_grid=tuple(i / 10 for i in range(11)),
            t_grid=(0.5, 1.0, 2.0),
        )
        rows = run_sweep(config)
        for p in config.p_grid:
            series = [r.qsk_rate for r in rows if r.p == p]
            assert all(b <= a + 1e-9 for a, b in zip(series, series[1:]))


class TestRendering:
    def test_csv_header_and_shape(self):
        rows = run_sweep(small_config())
        text = render_csv(rows)
        lines = text.splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 1 + len(rows)
        assert text.endswith("\n")
        assert "\r" not in text

    def test_csv_nine_significant_digits(self):
        row = evaluate_point("werner", 0.5, 1.0, 1.0, "x", "z")
        line = render_csv([row]).splitlines()[1]
        fields = line.split(",")
        assert fields[0] == "werner"
        assert fields[1] == "0.5"
        # significand never exceeds 9 digits
        for tok in fields[1:]:
            mantissa = tok.lstrip("-").split("e")[0].replace(".", "")
            assert len(mantissa.lstrip("0")) <= 9

    def test_csv_deterministic(self):
        config = small_config()
        assert render_csv(run_sweep(config)) == render_csv(run_sweep(config))

    def test_csv_identical_across_worker_counts(self):
        config = small_config(p_grid=tuple(i / 4 for i in range(5)))
        assert render_csv(run_sweep(config, jobs=1)) == render_csv(run_sweep(config, jobs=3))

    def test_json_round_trip(self):
        rows = run_sweep(small_config())
        payload = json.loads(render_json(rows))
        assert len(payload) == len(rows)
        assert list(payload[0]) == list(CSV_COLUMNS)
        assert payload[0]["family"] == "bell-diagonal"
        assert payload[-1]["p"] == 1.0


class TestFigureTables:
    def test_figure_specs_cover_six_files(self):
        assert sorted(FIGURE_SPECS) == [f"fig{k}" for k in range(2, 8)]
        kinds = {kind for _, kind in FIGURE_SPECS.values()}
        assert kinds == {"lines", "contour"}

    def test_grids(self):
        assert len(FIGURE_P_GRID) == 101
        assert FIGURE_P_GRID[0] == 0.0 and FIGURE_P_GRID[-1] == 1.0
        assert len(CONTOUR_T_GRID) == 101
        assert CONTOUR_T_GRID[0] == pytest.approx(0.01)
        assert CONTOUR_T_GRID[-1] == pytest.approx(10.0)
        assert LINE_T_GRID == (0.1, 0.5, 1.0, 2.0, 10.0)

    def test_figure_config_shapes(self):
        lines = figure_config("fig2")
        assert lines.family == "bell-diagonal"
        assert lines.t_grid == LINE_T_GRID
        contour = figure_config("fig5")
        assert contour.family == "werner"
        assert len(contour.t_grid) == 101
