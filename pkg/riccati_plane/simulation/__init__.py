"""
轨道仿真、预测校验、参数扫描与绘图数据导出
"""

from .export import SWEEP_HEADER, ORBIT_HEADER, orbit_csv_text, sweep_csv_text, write_orbit, write_sweep
from .report import PredictionReport, SampleCheck, check_prediction, expected_limit
from .simulate import (
    ObservedBehavior,
    ObservedKind,
    Orbit,
    SimOptions,
    StopReason,
    iterate,
    observe,
)
from .sweep import SweepRow, SweepSpec, find_flips, run_sweep

__all__ = [
    'SWEEP_HEADER', 'ORBIT_HEADER', 'orbit_csv_text', 'sweep_csv_text', 'write_orbit', 'write_sweep',
    'PredictionReport', 'SampleCheck', 'check_prediction', 'expected_limit',
    'ObservedBehavior', 'ObservedKind', 'Orbit', 'SimOptions', 'StopReason', 'iterate', 'observe',
    'SweepRow', 'SweepSpec', 'find_flips', 'run_sweep',
]
