"""Sweep experiments: closed forms, corners, and determinism."""

import math

import pytest

from openbelief import (
    DomainError,
    run_experiment,
    run_fig1_sweep,
    run_fig2_sweep,
    run_fig4_sweep,
    run_table1,
)

# Four-decimal distances for the growing-set table, verified against the
# defining quadratic form. A widely circulated copy of this table prints
# 0.7982 for the A={1,...,7} case; the definition gives 0.7892 (the two
# middle digits transposed), so the recomputed value is the one asserted.
TABLE1_DISTANCES = [
    0.7916, 0.7024, 0.6, 0.6782, 0.7211, 0.7483, 0.7892, 0.8, 0.8083, 0.8149,
    0.8202, 0.8246, 0.8283, 0.8315, 0.8343, 0.8367, 0.8388, 0.8406, 0.8423, 0.8438,
]


class TestTable1:
    def test_twenty_rows_with_constant_conflict(self):
        rows = run_table1()
        assert len(rows) == 20
        assert all(row["k"] == 0.6 for row in rows)

    def test_distances_match_reference_values(self):
        for row, expected in zip(run_table1(), TABLE1_DISTANCES):
            assert row["d_bpa"] == pytest.approx(expected, abs=5e-4), row["case"]

    def test_case_labels(self):
        rows = run_table1()
        assert rows[0]["case"] == "A={1}"
        assert rows[2]["case"] == "A={1,2,3}"
        assert rows[19]["case"] == "A={1,...,20}"

    def test_distance_varies_while_conflict_does_not(self):
        rows = run_table1()
        assert len({round(row["d_bpa"], 4) for row in rows}) == 20
        assert len({row["k"] for row in rows}) == 1


class TestFig1:
    def test_grid_shape_and_determinism(self):
        rows = run_fig1_sweep(0.1)
        assert len(rows) == 11 * 11
        assert rows == run_fig1_sweep(0.1)

    def test_closed_form(self):
        for row in run_fig1_sweep(0.1):
            assert row["k_g"] == pytest.approx(1.0 - row["s"] * row["t"], abs=1e-12)

    def test_corners(self):
        rows = {(row["s"], row["t"]): row["k_g"] for row in run_fig1_sweep(0.1)}
        assert rows[(1.0, 1.0)] == 0.0
        assert rows[(0.5, 0.5)] == pytest.approx(0.75, abs=1e-12)
        for t in (0.0, 0.3, 1.0):
            assert rows[(0.0, t)] == pytest.approx(1.0, abs=1e-12)
            assert rows[(t, 0.0)] == pytest.approx(1.0, abs=1e-12)

    def test_symmetric_in_s_and_t(self):
        rows = {(row["s"], row["t"]): row["k_g"] for row in run_fig1_sweep(0.1)}
        for (s, t), value in rows.items():
            assert rows[(t, s)] == value


class TestFig2:
    def test_closed_form_and_zero_diagonal(self):
        for row in run_fig2_sweep(0.1):
            assert row["d_gbpa"] == pytest.approx(abs(row["s"] - row["t"]), abs=1e-12)
            if row["s"] == row["t"]:
                assert row["d_gbpa"] == 0.0

    def test_extremes(self):
        rows = {(row["s"], row["t"]): row["d_gbpa"] for row in run_fig2_sweep(0.1)}
        assert rows[(1.0, 0.0)] == pytest.approx(1.0, abs=1e-12)
        assert rows[(0.7, 0.4)] == pytest.approx(0.3, abs=1e-12)

    def test_symmetric_in_s_and_t(self):
        rows = {(row["s"], row["t"]): row["d_gbpa"] for row in run_fig2_sweep(0.1)}
        for (s, t), value in rows.items():
            assert rows[(t, s)] == value


class TestFig4:
    def test_halfway_point_splits_the_two_measures(self):
        row = run_fig4_sweep(0.1)[5]
        assert row["t"] == 0.5
        assert row["d_bpa"] == 0.5
        assert row["dif_betp"] == 0.0

    def test_closed_forms(self):
        for row in run_fig4_sweep(0.1):
            t = row["t"]
            assert row["d_bpa"] == pytest.approx(
                math.sqrt(0.5 * (t * t + (1.0 - t) * (1.0 - t))), abs=1e-12
            )
            assert row["dif_betp"] == pytest.approx(abs(t - 0.5), abs=1e-12)

    def test_endpoints_agree_by_symmetry(self):
        rows = run_fig4_sweep(0.1)
        assert rows[0]["t"] == 0.0 and rows[-1]["t"] == 1.0
        assert rows[0]["d_bpa"] == pytest.approx(math.sqrt(0.5), abs=1e-12)
        assert rows[0]["dif_betp"] == pytest.approx(0.5, abs=1e-12)
        assert rows[0]["d_bpa"] == rows[-1]["d_bpa"]
        assert rows[0]["dif_betp"] == rows[-1]["dif_betp"]


class TestStepValidation:
    @pytest.mark.parametrize("step", [0.3, 0.0, -0.1, 0.6, 0.15])
    def test_bad_steps_rejected(self, step):
        with pytest.raises(DomainError):
            run_fig1_sweep(step)

    def test_finer_step_accepted(self):
        rows = run_fig2_sweep(0.05)
        assert len(rows) == 21 * 21

    def test_grid_endpoints_are_exact(self):
        values = sorted({row["s"] for row in run_fig1_sweep(0.05)})
        assert values[0] == 0.0 and values[-1] == 1.0


class TestRunExperiment:
    def test_dispatch(self):
        assert run_experiment("table1") == run_table1()
        assert run_experiment("fig4", 0.5) == run_fig4_sweep(0.5)

    def test_unknown_experiment_rejected(self):
        with pytest.raises(DomainError, match="unknown experiment"):
            run_experiment("fig9")
