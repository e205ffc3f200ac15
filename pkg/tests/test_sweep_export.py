# -*- coding: utf-8 -*-
"""
参数扫描与绘图数据导出测试
==========================
"""

import csv
import io
import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from riccati_plane.core.errors import ValidationError
from riccati_plane.core.model import State
from riccati_plane.core.registry import validate
from riccati_plane.simulation.export import (
    ORBIT_HEADER,
    orbit_csv_text,
    orbit_json_payload,
    sweep_csv_text,
    write_orbit,
    write_sweep,
)
from riccati_plane.simulation.simulate import SimOptions, iterate
from riccati_plane.simulation.sweep import SweepRow, SweepSpec, find_flips, run_sweep

FAST = SimOptions(max_iters=20000)


def _spec(**overrides):
    kwargs = dict(case=13, varying="A2", lo=0.2, hi=2.0, steps=19,
                  fixed={"alpha1": 1.0, "A1": 1.0}, ics=(State(0.5, 0.5),))
    kwargs.update(overrides)
    return SweepSpec(**kwargs)


class TestSweepSpec:
    """测试扫描参数校验"""

    def test_values(self):
        values = _spec().values()
        assert len(values) == 19
        assert values[0] == 0.2 and values[-1] == 2.0

    def test_degenerate_range(self):
        assert _spec(lo=1.5, hi=1.5, steps=1).values() == [1.5]

    @pytest.mark.parametrize("overrides", [
        {"varying": "beta2"},
        {"lo": 0.0},
        {"lo": 2.0, "hi": 1.0},
        {"steps": 1},
        {"fixed": {"alpha1": 1.0}},
        {"ics": ()},
    ])
    def test_rejected(self, overrides):
        with pytest.raises(ValidationError):
            _spec(**overrides)

    def test_params_at(self):
        cp = _spec().params_at(0.7)
        assert cp["A2"] == 0.7
        assert cp["alpha1"] == 1.0

    def test_case_label_is_accepted(self):
        assert _spec(case="11,13").case == 13


class TestRunSweep:
    """测试结果行与行为翻转"""

    def test_single_row(self):
        rows = run_sweep(_spec(lo=1.5, hi=1.5, steps=1), FAST)
        assert len(rows) == 1
        assert rows[0].predicted == "GloballyAsymptoticallyStable"

    def test_flip_at_a2_one(self):
        spec = _spec()
        rows = run_sweep(spec, FAST, workers=4)
        assert [r.param for r in rows] == spec.values()
        flips = find_flips(rows)
        assert len(flips) == 1
        a, b, before, after = flips[0]
        assert (before, after) == ("SaddleWithManifold", "GloballyAsymptoticallyStable")
        assert a <= 1.0 + 1e-9 and b >= 1.0 - 1e-9
        assert b - a <= 0.1 + 1e-12

    def test_saddle_rows_report_interior_limit(self):
        rows = run_sweep(_spec(lo=0.5, hi=0.5, steps=1, ics=(State(0.5, 0.2),)), FAST)
        assert rows[0].observed == "Converged"
        assert rows[0].limit_y == pytest.approx(0.5, abs=1e-8)
        assert rows[0].agree is True

    def test_only_forbidden_ics_are_skipped(self):
        spec = SweepSpec(case=24, varying="alpha1", lo=2.0, hi=3.0, steps=2,
                         fixed={"A1": 1.0, "alpha2": 1.0}, ics=(State(0.0, 1.0),))
        rows = run_sweep(spec, FAST)
        assert [r.observed for r in rows] == ["Skipped", "Skipped"]

    def test_find_flips_on_other_column(self):
        rows = [SweepRow(0.1, "A", "x"), SweepRow(0.2, "A", "y"), SweepRow(0.3, "A", "y")]
        assert find_flips(rows) == []
        assert find_flips(rows, column="observed") == [(0.1, 0.2, "x", "y")]


class TestExport:
    """测试 CSV 与 JSON 输出"""

    def setup_method(self):
        self.orbit = iterate(validate(1, [1, 1, 1, 1]), State(5, 5))

    def test_orbit_csv(self):
        rows = list(csv.reader(io.StringIO(orbit_csv_text(self.orbit))))
        assert tuple(rows[0]) == ORBIT_HEADER
        assert len(rows) == len(self.orbit.states) + 1
        assert rows[3] == ["2", "0.5", "1.0"]

    def test_orbit_json_payload(self):
        payload = orbit_json_payload(self.orbit, {"kind": "FiniteTimeEquilibrium"})
        assert payload["schema"] == 1
        assert payload["kind"] == "orbit"
        assert payload["observed"]["kind"] == "FiniteTimeEquilibrium"
        assert payload["states"][2] == [2, 0.5, 1.0]

    def test_sweep_csv_blank_limits(self):
        text = sweep_csv_text([{"param": 1.0, "predicted": "A", "observed": "B",
                                "limit_x": None, "limit_y": None}])
        assert text.splitlines() == ["param,predicted,observed,limit_x,limit_y", "1.0,A,B,,"]

    def test_write_orbit_files(self, tmp_path):
        csv_path = write_orbit(self.orbit, tmp_path / "out" / "orbit.csv")
        assert csv_path.read_text(encoding="utf-8").startswith("n,x,y\n")
        json_path = write_orbit(self.orbit, tmp_path / "orbit.json", fmt="json")
        assert json.loads(json_path.read_text(encoding="utf-8"))["stop_reason"] == "Converged"

    def test_write_sweep_json_meta(self, tmp_path):
        rows = [SweepRow(1.0, "A", "B").to_dict()]
        path = write_sweep(rows, tmp_path / "sweep.json", fmt="json", meta={"case": "11,13"})
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["kind"] == "sweep"
        assert data["case"] == "11,13"
        assert data["rows"][0]["predicted"] == "A"

    def test_unknown_format(self, tmp_path):
        with pytest.raises(ValueError):
            write_orbit(self.orbit, tmp_path / "orbit.txt", fmt="xml")
