"""
17 个特例的闭式平衡点集

每个二次方程都用无抵消的变形求唯一正根
（平方根与一次项系数同号时乘以共轭式）。
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Optional, Tuple

from ..core.model import RAW_FORM, CaseParams, State
from ..core.registry import normalize_1122

logger = logging.getLogger(__name__)


class EquilibriumKind(Enum):
    NONE = "None"
    ONE = "One"
    TWO = "Two"
    CONTINUUM = "Continuum"


@dataclass(frozen=True)
class EquilibriumSet:
    """
    单个参数点的平衡点

    ``TWO`` 时按 (鞍点候选, 稳定点候选) 排序。
    ``CONTINUUM`` 不存点，用 ``continuum_point(v)`` 取点。
    """
    kind: EquilibriumKind
    points: Tuple[State, ...] = ()
    alpha1: float = field(default=0.0, repr=False)
    A1: float = field(default=0.0, repr=False)

    @property
    def unique(self) -> Optional[State]:
        return self.points[0] if self.kind is EquilibriumKind.ONE else None

    @property
    def saddle(self) -> Optional[State]:
        return self.points[0] if self.kind is EquilibriumKind.TWO else None

    @property
    def stable(self) -> Optional[State]:
        return self.points[1] if self.kind is EquilibriumKind.TWO else None

    def continuum_point(self, v: float) -> State:
        """平衡点连续统中的点 (α₁/(A₁+v), v)"""
        if self.kind is not EquilibriumKind.CONTINUUM:
            raise ValueError("equilibrium set is not a continuum")
        if v < 0.0:
            raise ValueError(f"continuum parameter must be >= 0, got {v}")
        return State(self.alpha1 / (self.A1 + v), v)

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {"kind": self.kind.value}
        if self.kind is EquilibriumKind.ONE:
            data["point"] = self.points[0].to_dict()
        elif self.kind is EquilibriumKind.TWO:
            data["saddle"] = self.points[0].to_dict()
            data["stable"] = self.points[1].to_dict()
        elif self.kind is EquilibriumKind.CONTINUUM:
            data["parameterization"] = "v -> (alpha1/(A1+v), v), v >= 0"
            data["alpha1"] = self.alpha1
            data["A1"] = self.A1
        return data


def positive_root(a: float, b: float, c: float) -> float:
    """
    a > 0, c > 0 时 a·t² + b·t − c = 0 的正根

    由 Descartes 符号法则，正根恰有一个。
    """
    disc = math.sqrt(b * b + 4.0 * a * c)
    if b >= 0.0:
        return 2.0 * c / (b + disc)
    return (disc - b) / (2.0 * a)


def _x_of(cp: CaseParams, y: float) -> float:
    return cp["alpha1"] / (cp["A1"] + y)


def _one(x: float, y: float) -> EquilibriumSet:
    return EquilibriumSet(EquilibriumKind.ONE, (State(x, y),))


def _none() -> EquilibriumSet:
    return EquilibriumSet(EquilibriumKind.NONE)


def _constant_y(cp: CaseParams, num: str, den: str) -> EquilibriumSet:
    y = cp[num] / cp[den]
    # 即 den*alpha1 / (den*A1 + num)
    x = cp[den] * cp["alpha1"] / (cp[den] * cp["A1"] + cp[num])
    return _one(x, y)


def _case_2(cp: CaseParams) -> EquilibriumSet:
    y = math.sqrt(cp["alpha2"])
    return _one(_x_of(cp, y), y)


def _case_3(cp: CaseParams) -> EquilibriumSet:
    a1, a2 = cp["alpha1"], cp["alpha2"]
    if a1 <= a2:
        return _none()
    y = a2 * cp["A1"] / (a1 - a2)
    return _one(_x_of(cp, y), y)


def _case_4(cp: CaseParams) -> EquilibriumSet:
    if cp["gamma2"] == 1.0:
        return EquilibriumSet(EquilibriumKind.CONTINUUM, (), cp["alpha1"], cp["A1"])
    return _one(cp.x_bound, 0.0)


def _case_7(cp: CaseParams) -> EquilibriumSet:
    # y² + A1·y − β2α1 = 0
    y = positive_root(1.0, cp["A1"], cp["beta2"] * cp["alpha1"])
    return _one(y / cp["beta2"], y)


def _case_10(cp: CaseParams) -> EquilibriumSet:
    # y² + A2·y − α2 = 0
    y = positive_root(1.0, cp["A2"], cp["alpha2"])
    return _one(_x_of(cp, y), y)


def _case_11(cp: CaseParams) -> EquilibriumSet:
    # A1·x² + (A1A2 + α2 − α1)·x − α1A2 = 0
    a1, A1, a2, A2 = cp["alpha1"], cp["A1"], cp["alpha2"], cp["A2"]
    x = positive_root(A1, A1 * A2 + a2 - a1, a1 * A2)
    return _one(x, a2 / (A2 + x))


def _case_13(cp: CaseParams) -> EquilibriumSet:
    A2 = cp["A2"]
    boundary = State(cp.x_bound, 0.0)
    if A2 >= 1.0:
        return EquilibriumSet(EquilibriumKind.ONE, (boundary,))
    y = 1.0 - A2
    interior = State(cp["alpha1"] / (cp["A1"] + y), y)
    return EquilibriumSet(EquilibriumKind.TWO, (boundary, interior))


def _case_17(cp: CaseParams) -> EquilibriumSet:
    # (A1 + 1)·x² + (A1A2 − α1)·x − α1A2 = 0
    a1, A1, A2 = cp["alpha1"], cp["A1"], cp["A2"]
    x = positive_root(A1 + 1.0, A1 * A2 - a1, a1 * A2)
    return _one(x, x / (A2 + x))


def _case_19(cp: CaseParams) -> EquilibriumSet:
    g = cp["gamma2"]
    if g >= 1.0:
        return _none()
    y = cp["alpha2"] / (1.0 - g)
    return _one(_x_of(cp, y), y)


def _case_20(cp: CaseParams) -> EquilibriumSet:
    # y² − γ2·y − α2 = 0
    y = positive_root(1.0, -cp["gamma2"], cp["alpha2"])
    return _one(_x_of(cp, y), y)


def _case_22(cp: CaseParams) -> EquilibriumSet:
    # x² + (α2 + A1)·x − α1 = 0
    x = positive_root(1.0, cp["alpha2"] + cp["A1"], cp["alpha1"])
    return _one(x, cp["alpha2"] + x)


def _case_24(cp: CaseParams) -> EquilibriumSet:
    a1, a2 = cp["alpha1"], cp["alpha2"]
    if a1 <= a2:
        return _none()
    return _one((a1 - a2) / (cp["A1"] + 1.0), (a1 + a2 * cp["A1"]) / (a1 - a2))


def _case_28(cp: CaseParams) -> EquilibriumSet:
    # y² + (A2 − γ2)·y − α2 = 0
    y = positive_root(1.0, cp["A2"] - cp["gamma2"], cp["alpha2"])
    return _one(_x_of(cp, y), y)


def _case_32(cp: CaseParams) -> EquilibriumSet:
    # (1 + A1)·x² + (A1A2 + α2 − α1)·x − α1A2 = 0
    a1, A1, a2, A2 = cp["alpha1"], cp["A1"], cp["alpha2"], cp["A2"]
    x = positive_root(1.0 + A1, A1 * A2 + a2 - a1, a1 * A2)
    return _one(x, (a2 + x) / (A2 + x))


_SOLVERS: Dict[int, Callable[[CaseParams], EquilibriumSet]] = {
    1: lambda cp: _constant_y(cp, "alpha2", "A2"),
    2: _case_2,
    3: _case_3,
    4: _case_4,
    5: lambda cp: _constant_y(cp, "beta2", "B2"),
    7: _case_7,
    9: lambda cp: _constant_y(cp, "gamma2", "C2"),
    10: _case_10,
    11: _case_11,
    13: _case_13,
    17: _case_17,
    19: _case_19,
    20: _case_20,
    22: _case_22,
    24: _case_24,
    28: _case_28,
    32: _case_32,
}


def equilibria(cp: CaseParams) -> EquilibriumSet:
    """由特例闭式公式求 ``cp`` 的平衡点集"""
    if cp.form == RAW_FORM:
        reduced = equilibria(normalize_1122(cp))
        point = reduced.points[0]
        return _one(point.x / cp["beta2"], point.y)
    result = _SOLVERS[cp.case](cp)
    logger.debug(f"(11,{cp.case}) 平衡点: {result.kind.value}")
    return result


