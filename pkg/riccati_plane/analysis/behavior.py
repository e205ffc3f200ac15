"""
各特例按参数区域划分的全局行为

区域边界的归属：
(11,3)/(11,24) 在 α₁ ≤ α₂ 时发散，(11,19) 在 γ₂ ≥ 1 时发散，
(11,13) 在 A₂ ≥ 1 时 GAS。比较均为精确比较，不设容差带。
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

from ..core.errors import ValidationError
from ..core.model import CaseParams, State, step_case
from .equilibria import EquilibriumKind, equilibria

logger = logging.getLogger(__name__)

STABLE_MANIFOLD = "y = 0 axis"


class BehaviorKind(Enum):
    FINITE_TIME_EQUILIBRIUM = "FiniteTimeEquilibrium"
    EVENTUALLY_PERIODIC_2 = "EventuallyPeriodic2"
    GAS = "GloballyAsymptoticallyStable"
    DIVERGES = "DivergesToZeroInfinity"
    SADDLE_WITH_MANIFOLD = "SaddleWithManifold"
    CONTINUUM = "ContinuumOfEquilibria"


@dataclass(frozen=True)
class BehaviorPrediction:
    """单个参数点下所有可行轨道的预测渐近行为"""
    kind: BehaviorKind
    region_note: str
    equilibrium: Optional[State] = None
    within_steps: Optional[int] = None
    saddle: Optional[State] = None
    interior_attractor: Optional[State] = None
    manifold: Optional[str] = None

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {"kind": self.kind.value, "region": self.region_note}
        if self.equilibrium is not None:
            data["equilibrium"] = self.equilibrium.to_dict()
        if self.within_steps is not None:
            data["within_steps"] = self.within_steps
        if self.kind is BehaviorKind.SADDLE_WITH_MANIFOLD:
            data["saddle"] = self.saddle.to_dict()
            data["manifold"] = self.manifold
            data["interior_attractor"] = (
                self.interior_attractor.to_dict() if self.interior_attractor is not None else None
            )
        return data


def _gas(cp: CaseParams, note: str) -> BehaviorPrediction:
    return BehaviorPrediction(BehaviorKind.GAS, note, equilibrium=equilibria(cp).unique)


def predict(cp: CaseParams) -> BehaviorPrediction:
    """cp 所在区域的行为结论"""
    case = cp.case
    if case in (1, 5, 9):
        prediction = BehaviorPrediction(
            BehaviorKind.FINITE_TIME_EQUILIBRIUM,
            "all positive parameters",
            equilibrium=equilibria(cp).unique,
            within_steps=2,
        )
    elif case == 2:
        # 周期 2 不一定是最小周期：包含 y = √α₂ 处的不动点
        prediction = BehaviorPrediction(
            BehaviorKind.EVENTUALLY_PERIODIC_2,
            "all positive parameters",
            equilibrium=equilibria(cp).unique,
        )
    elif case in (3, 24):
        if cp["alpha1"] > cp["alpha2"]:
            prediction = _gas(cp, "α₁ > α₂")
        else:
            prediction = BehaviorPrediction(BehaviorKind.DIVERGES, "α₁ ≤ α₂")
    elif case == 4:
        gamma2 = cp["gamma2"]
        if gamma2 > 1.0:
            prediction = BehaviorPrediction(
                BehaviorKind.SADDLE_WITH_MANIFOLD,
                "γ₂ > 1",
                saddle=State(cp.x_bound, 0.0),
                manifold=STABLE_MANIFOLD,
            )
        elif gamma2 == 1.0:
            prediction = BehaviorPrediction(BehaviorKind.CONTINUUM, "γ₂ = 1")
        else:
            prediction = _gas(cp, "γ₂ < 1")
    elif case == 13:
        if cp["A2"] >= 1.0:
            prediction = _gas(cp, "A₂ ≥ 1")
        else:
            eqs = equilibria(cp)
            prediction = BehaviorPrediction(
                BehaviorKind.SADDLE_WITH_MANIFOLD,
                "A₂ < 1",
                saddle=eqs.saddle,
                interior_attractor=eqs.stable,
                manifold=STABLE_MANIFOLD,
            )
    elif case == 19:
        if cp["gamma2"] < 1.0:
            prediction = _gas(cp, "γ₂ < 1")
        else:
            prediction = BehaviorPrediction(BehaviorKind.DIVERGES, "γ₂ ≥ 1")
    else:
        prediction = _gas(cp, "all positive parameters")

    logger.debug(f"(11,{case}) 区域 '{prediction.region_note}': {prediction.kind.value}")
    return prediction


def on_stable_manifold(cp: CaseParams, s: State) -> bool:
    """
    s 是否位于鞍点区域的稳定流形 [0,∞)×{0} 上

    在 (11,4) 与 (11,13) 的鞍点区域之外恒为 False。
    """
    if predict(cp).kind is not BehaviorKind.SADDLE_WITH_MANIFOLD:
        return False
    return s.y == 0.0


def continuum_limit(cp: CaseParams, s: State) -> State:
    """
    (11,4) 在 γ₂ = 1 时初值一步到达的平衡点 (α₁/(A₁+y₀), y₀)

    Raises:
        ValidationError: cp 不在连续统区域
    """
    eqs = equilibria(cp)
    if eqs.kind is not EquilibriumKind.CONTINUUM:
        raise ValidationError(f"(11,{cp.case}) at these parameters has no continuum of equilibria")
    return step_case(cp, s)
