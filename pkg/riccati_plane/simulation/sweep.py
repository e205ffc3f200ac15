"""
单参数扫描：沿网格比较预测行为与观测行为
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import ValidationError
from ..core.model import REDUCED_FORM, CaseParams, State
from ..core.registry import case_spec, validate_mapping
from .report import check_prediction
from .simulate import SimOptions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepSpec:
    """固定其余参数，对单个参数取网格"""
    case: int
    varying: str
    lo: float
    hi: float
    steps: int
    fixed: Dict[str, float] = field(default_factory=dict)
    ics: Tuple[State, ...] = ()
    form: str = REDUCED_FORM

    def __post_init__(self):
        spec = case_spec(self.case, self.form)
        object.__setattr__(self, "case", spec.id)
        object.__setattr__(self, "ics", tuple(self.ics))
        if self.varying not in spec.param_names:
            raise ValidationError(
                f"{self.varying} is not a parameter of {spec.label} ({', '.join(spec.param_names)})")
        if not self.lo > 0.0:
            raise ValidationError(f"sweep lower bound must be > 0, got {self.lo}")
        if self.hi < self.lo:
            raise ValidationError(f"sweep upper bound {self.hi} is below lower bound {self.lo}")
        if self.hi != self.lo and self.steps < 2:
            raise ValidationError(f"sweep needs at least 2 steps, got {self.steps}")
        missing = [n for n in spec.param_names if n != self.varying and self.fixed.get(n) is None]
        if missing:
            raise ValidationError(f"sweep of {spec.label} is missing fixed parameter(s): {', '.join(missing)}")
        if not self.ics:
            raise ValidationError("sweep needs at least one initial condition")

    def values(self) -> List[float]:
        if self.hi == self.lo:
            return [float(self.lo)]
        return [float(v) for v in np.linspace(self.lo, self.hi, int(self.steps))]

    def params_at(self, value: float) -> CaseParams:
        names = case_spec(self.case, self.form).param_names
        params = {n: self.fixed[n] for n in names if n != self.varying}
        params[self.varying] = value
        return validate_mapping(self.case, params, self.form)


@dataclass(frozen=True)
class SweepRow:
    param: float
    predicted: str
    observed: str
    limit_x: Optional[float] = None
    limit_y: Optional[float] = None
    agree: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "param": self.param,
            "predicted": self.predicted,
            "observed": self.observed,
            "limit_x": self.limit_x,
            "limit_y": self.limit_y,
            "agree": self.agree,
        }


def _evaluate(spec: SweepSpec, value: float, opts: SimOptions) -> SweepRow:
    report = check_prediction(spec.params_at(value), spec.ics, opts)
    evaluated = report.evaluated
    predicted = report.prediction.kind.value
    if not evaluated:
        return SweepRow(value, predicted, "Skipped")
    # 该行取第一个可行初始条件的结果
    first = evaluated[0].observed
    limit = first.limit
    return SweepRow(
        value,
        predicted,
        first.kind.value,
        limit.x if limit else None,
        limit.y if limit else None,
        report.all_agree,
    )


def run_sweep(spec: SweepSpec, opts: Optional[SimOptions] = None, workers: int = 1) -> List[SweepRow]:
    """
    逐个计算网格点；结果按参数值排序
    """
    opts = opts or SimOptions()
    values = spec.values()
    logger.info(f"扫描 (11,{spec.case}) 的 {spec.varying}，共 {len(values)} 个点")
    if workers > 1 and len(values) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda v: _evaluate(spec, v, opts), values))
    return [_evaluate(spec, v, opts) for v in values]


def find_flips(rows: Sequence[SweepRow], column: str = "predicted") -> List[Tuple[float, float, str, str]]:
    """``column`` 取值变化处的 (左参数, 右参数, 左值, 右值)"""
    flips = []
    for left, right in zip(rows, rows[1:]):
        a, b = getattr(left, column), getattr(right, column)
        if a != b:
            flips.append((left.param, right.param, a, b))
    return flips
