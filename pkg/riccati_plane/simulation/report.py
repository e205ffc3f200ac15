"""
用仿真轨道交叉验证预测

每个初始条件独立迭代；``workers > 1`` 时在线程池中运行，结果保持输入顺序。
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional, Sequence

from ..analysis.behavior import BehaviorKind, BehaviorPrediction, continuum_limit, predict
from ..analysis.stability import spectrum_closed
from ..core.errors import ForbiddenInitial, NotAFixedPoint
from ..core.model import CaseParams, State
from .simulate import ObservedBehavior, ObservedKind, SimOptions, iterate, observe

logger = logging.getLogger(__name__)

# 极限在 LIMIT_FACTOR·conv_tol 内匹配，并按 1/(1−ρ) 放宽
LIMIT_FACTOR = 10.0
MIN_CONTRACTION_GAP = 1e-3

_CONVERGENT = (ObservedKind.CONVERGED, ObservedKind.FINITE_TIME_EQUILIBRIUM)


@dataclass
class SampleCheck:
    """单个初始条件的判定结果"""
    ic: State
    predicted: BehaviorKind
    observed: Optional[ObservedBehavior]
    agree: Optional[bool]
    expected_limit: Optional[State] = None
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ic": self.ic.to_dict(),
            "predicted": self.predicted.value,
            "observed": self.observed.to_dict() if self.observed else None,
            "agree": self.agree,
            "expected_limit": self.expected_limit.to_dict() if self.expected_limit else None,
            "detail": self.detail,
        }


@dataclass
class PredictionReport:
    """单个参数点的全部样本判定"""
    case_params: CaseParams
    prediction: BehaviorPrediction
    checks: List[SampleCheck] = field(default_factory=list)
    checked_at: str = field(default_factory=lambda: datetime.now().isoformat())

    @property
    def evaluated(self) -> List[SampleCheck]:
        return [c for c in self.checks if c.agree is not None]

    @property
    def undetermined(self) -> int:
        return sum(1 for c in self.evaluated
                   if c.observed.kind is ObservedKind.UNDETERMINED)

    @property
    def agreement_rate(self) -> float:
        evaluated = self.evaluated
        if not evaluated:
            return 0.0
        return sum(1 for c in evaluated if c.agree) / len(evaluated)

    @property
    def all_agree(self) -> bool:
        evaluated = self.evaluated
        return bool(evaluated) and all(c.agree for c in evaluated)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "case_params": self.case_params.to_dict(),
            "prediction": self.prediction.to_dict(),
            "checks": [c.to_dict() for c in self.checks],
            "agreement_rate": self.agreement_rate,
            "undetermined": self.undetermined,
            "all_agree": self.all_agree,
            "checked_at": self.checked_at,
        }

    def get_summary(self) -> str:
        label = f"(11,{self.case_params.case})"
        lines = [
            f"{label} prediction check",
            f"Predicted: {self.prediction.kind.value} [{self.prediction.region_note}]",
            f"Agreement: {self.agreement_rate:.0%} of {len(self.evaluated)} samples"
            f" ({self.undetermined} undetermined, {len(self.checks) - len(self.evaluated)} skipped)",
            "",
        ]
        for c in self.checks:
            mark = "✓" if c.agree else ("-" if c.agree is None else "✗")
            observed = c.observed.kind.value if c.observed else "skipped"
            lines.append(f"  {mark} ic=({c.ic.x:.6g}, {c.ic.y:.6g}) -> {observed}"
                         + (f"  {c.detail}" if c.detail else ""))
        return "\n".join(lines)


def expected_limit(cp: CaseParams, prediction: BehaviorPrediction, ic: State) -> Optional[State]:
    """从 ic 出发的轨道应收敛到的点；不应收敛时为 None"""
    kind = prediction.kind
    if kind in (BehaviorKind.GAS, BehaviorKind.FINITE_TIME_EQUILIBRIUM):
        return prediction.equilibrium
    if kind is BehaviorKind.EVENTUALLY_PERIODIC_2:
        # 只有退化周期轨会收敛
        return prediction.equilibrium
    if kind is BehaviorKind.CONTINUUM:
        return continuum_limit(cp, ic)
    if kind is BehaviorKind.SADDLE_WITH_MANIFOLD:
        return prediction.saddle if ic.y == 0.0 else prediction.interior_attractor
    return None


def limit_tolerance(cp: CaseParams, point: State, opts: SimOptions) -> float:
    """按 ‖point‖ 与收缩间隙 1 − ρ 缩放的 LIMIT_FACTOR·conv_tol"""
    try:
        rho = max(spectrum_closed(cp, point).moduli)
    except NotAFixedPoint:
        rho = 0.0
    gap = max(1.0 - rho, MIN_CONTRACTION_GAP)
    return LIMIT_FACTOR * opts.conv_tol * max(1.0, point.norm()) / gap


def _judge(cp: CaseParams, prediction: BehaviorPrediction, ic: State,
           observed: ObservedBehavior, opts: SimOptions) -> SampleCheck:
    target = expected_limit(cp, prediction, ic)
    kind = prediction.kind
    check = SampleCheck(ic, kind, observed, False, target)

    if observed.kind is ObservedKind.UNDETERMINED:
        check.detail = observed.note
        return check

    if kind is BehaviorKind.DIVERGES or (kind is BehaviorKind.SADDLE_WITH_MANIFOLD and target is None):
        check.agree = observed.kind is ObservedKind.DIVERGES
        return check

    if kind is BehaviorKind.EVENTUALLY_PERIODIC_2 and observed.kind is ObservedKind.EVENTUALLY_PERIODIC_2:
        check.agree = True
        return check

    if observed.kind not in _CONVERGENT:
        check.detail = f"expected a limit, observed {observed.kind.value}"
        return check

    if kind is BehaviorKind.FINITE_TIME_EQUILIBRIUM:
        if observed.kind is not ObservedKind.FINITE_TIME_EQUILIBRIUM \
                or observed.within_steps > prediction.within_steps:
            check.detail = f"equilibrium not reached within {prediction.within_steps} steps"
            return check

    gap = observed.limit.distance(target)
    tol = limit_tolerance(cp, target, opts)
    check.agree = gap <= tol
    if not check.agree:
        check.detail = f"limit off by {gap:.3e} (tolerance {tol:.3e})"
    return check


def check_sample(cp: CaseParams, prediction: BehaviorPrediction, ic: State,
                 opts: SimOptions) -> SampleCheck:
    """迭代并判定单个初始条件；被禁止的初始条件记为跳过"""
    try:
        orbit = iterate(cp, ic, opts)
    except ForbiddenInitial as e:
        return SampleCheck(ic, prediction.kind, None, None, detail=str(e))
    return _judge(cp, prediction, ic, observe(orbit, opts), opts)


def check_prediction(
    cp: CaseParams,
    ic_samples: Sequence[State],
    opts: Optional[SimOptions] = None,
    workers: int = 1,
) -> PredictionReport:
    """
    仿真每个样本并与 ``predict(cp)`` 比较

    鞍点区域中，y₀ = 0 的样本须到达鞍点，y₀ > 0 的样本须到达内部吸引子或无穷远。
    """
    opts = opts or SimOptions()
    prediction = predict(cp)
    report = PredictionReport(cp, prediction)

    if workers > 1 and len(ic_samples) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            report.checks = list(pool.map(lambda ic: check_sample(cp, prediction, ic, opts), ic_samples))
    else:
        report.checks = [check_sample(cp, prediction, ic, opts) for ic in ic_samples]

    if not report.all_agree:
        logger.warning(f"(11,{cp.case}) 预测 {prediction.kind.value} "
                       f"的一致率为 {report.agreement_rate:.0%}")
    return report
