"""
带停止判定的轨道迭代

每一步后按以下顺序检查停止条件：
    converged   连续 3 步 ‖s_{n+1} − s_n‖∞ ≤ conv_tol
    diverged    y > diverge_y 且 x < diverge_x
    periodic    连续 3 个完整周期 ‖s_k − s_{k−p}‖∞ ≤ period_tol，p 取 [2, window] 中最小者
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from ..core.config import DEFAULT_CONFIG
from ..core.errors import ForbiddenInitial, ValidationError
from ..core.model import CaseParams, State, step_case
from ..core.registry import spec_for

logger = logging.getLogger(__name__)

CONVERGENCE_STREAK = 3
PERIOD_CYCLES = 3
# 常数尾部起点不超过该下标时视为有限步到达
FINITE_TIME_HORIZON = 2


@dataclass(frozen=True)
class SimOptions:
    """迭代上限与判定容差"""
    max_iters: int = 100000
    conv_tol: float = 1e-9
    period_tol: float = 1e-9
    diverge_y: float = 1e10
    diverge_x: float = 1e-10
    window: int = 8
    # 周期轨的宽度须超过其残差的该倍数
    cycle_separation: float = 1e-6

    def __post_init__(self):
        for name in ("max_iters", "conv_tol", "period_tol", "diverge_y", "diverge_x",
                     "window", "cycle_separation"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not value > 0:
                raise ValidationError(f"SimOptions.{name} must be positive, got {value!r}")
        if int(self.window) < 2:
            raise ValidationError(f"SimOptions.window must be >= 2, got {self.window}")
        object.__setattr__(self, "max_iters", int(self.max_iters))
        object.__setattr__(self, "window", int(self.window))

    @classmethod
    def from_config(cls, config: Optional[Dict[str, Any]] = None, **overrides) -> "SimOptions":
        """由 ``simulation`` 配置节构建；值为 ``None`` 的覆盖项忽略"""
        section = dict(DEFAULT_CONFIG["simulation"])
        if config:
            section.update(config.get("simulation", {}))
        section.update({k: v for k, v in overrides.items() if v is not None})
        known = {k: section[k] for k in cls.__dataclass_fields__ if k in section}
        return cls(**known)

    def with_overrides(self, **overrides) -> "SimOptions":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name) for name in self.__dataclass_fields__}


class StopReason(Enum):
    CONVERGED = "Converged"
    PERIODIC = "Periodic"
    DIVERGED = "Diverged"
    MAX_ITERS = "MaxIters"
    HIT_FORBIDDEN_SET = "HitForbiddenSet"


@dataclass
class Orbit:
    """
    单条轨道的状态 s_0..s_N 及停止原因

    CONVERGED 时设置 ``limit``，PERIODIC 时设置 ``period``/``cycle``。
    """
    case_params: CaseParams
    states: List[State]
    stop_reason: StopReason
    limit: Optional[State] = None
    period: Optional[int] = None
    cycle: Tuple[State, ...] = ()

    @property
    def steps(self) -> int:
        return len(self.states) - 1

    @property
    def last(self) -> State:
        return self.states[-1]

    def summary(self) -> str:
        if self.stop_reason is StopReason.CONVERGED:
            return f"Converged({self.limit.x:.12g}, {self.limit.y:.12g})"
        if self.stop_reason is StopReason.PERIODIC:
            return f"Periodic({self.period})"
        return self.stop_reason.value

    def to_dict(self, include_states: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "case_params": self.case_params.to_dict(),
            "stop_reason": self.stop_reason.value,
            "steps": self.steps,
            "limit": self.limit.to_dict() if self.limit else None,
            "period": self.period,
            "cycle": [s.to_dict() for s in self.cycle],
        }
        if include_states:
            data["states"] = [[n, s.x, s.y] for n, s in enumerate(self.states)]
        return data


def _detect_period(states: List[State], opts: SimOptions) -> Optional[int]:
    m = len(states) - 1
    for p in range(2, opts.window + 1):
        if m < PERIOD_CYCLES * p:
            break
        if states[m].distance(states[m - p]) > opts.period_tol:
            continue
        residual = max(states[k].distance(states[k - p]) for k in range(m - 2 * p, m + 1))
        if residual > opts.period_tol:
            continue
        anchor = states[m]
        spread = max(anchor.distance(states[m - j]) for j in range(1, p))
        # 收缩振荡每个周期移动其宽度的固定比例
        if spread > opts.conv_tol and residual <= opts.cycle_separation * spread:
            return p
    return None


def iterate(cp: CaseParams, ic: State, opts: Optional[SimOptions] = None) -> Orbit:
    """
    从 ic 出发迭代 step_case，直到触发停止条件

    Raises:
        ForbiddenInitial: ic 使第一步无定义
        ZeroDenominator: 由映射抛出
    """
    opts = opts or SimOptions()
    forbidden = spec_for(cp).is_forbidden
    if forbidden(ic):
        raise ForbiddenInitial(f"({ic.x}, {ic.y}) is a forbidden initial condition for (11,{cp.case})")

    states = [ic]
    streak = 0
    for _ in range(opts.max_iters):
        current = states[-1]
        if len(states) > 1 and forbidden(current):
            logger.debug(f"(11,{cp.case}) 轨道在 n={len(states) - 1} 处进入禁止集")
            return Orbit(cp, states, StopReason.HIT_FORBIDDEN_SET)
        nxt = step_case(cp, current)
        states.append(nxt)

        streak = streak + 1 if nxt.distance(current) <= opts.conv_tol else 0
        if streak >= CONVERGENCE_STREAK:
            logger.debug(f"(11,{cp.case}) {len(states) - 1} 步后收敛")
            return Orbit(cp, states, StopReason.CONVERGED, limit=nxt)

        if nxt.y > opts.diverge_y and nxt.x < opts.diverge_x:
            logger.debug(f"(11,{cp.case}) {len(states) - 1} 步后发散")
            return Orbit(cp, states, StopReason.DIVERGED)

        if streak == 0:
            period = _detect_period(states, opts)
            if period is not None:
                logger.debug(f"(11,{cp.case}) {len(states) - 1} 步后检测到周期 {period}")
                return Orbit(cp, states, StopReason.PERIODIC, period=period,
                             cycle=tuple(states[-period:]))

    logger.debug(f"(11,{cp.case}) {opts.max_iters} 步后仍无结论")
    return Orbit(cp, states, StopReason.MAX_ITERS)


class ObservedKind(Enum):
    """从单条轨道读出的行为；命名与预测类别一致"""
    FINITE_TIME_EQUILIBRIUM = "FiniteTimeEquilibrium"
    CONVERGED = "Converged"
    EVENTUALLY_PERIODIC_2 = "EventuallyPeriodic2"
    PERIODIC = "Periodic"
    DIVERGES = "DivergesToZeroInfinity"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class ObservedBehavior:
    kind: ObservedKind
    limit: Optional[State] = None
    period: Optional[int] = None
    within_steps: Optional[int] = None
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "limit": self.limit.to_dict() if self.limit else None,
            "period": self.period,
            "within_steps": self.within_steps,
            "note": self.note,
        }


def _constant_from(states: List[State]) -> int:
    """此后所有状态都与最后一个状态严格相等的首个下标"""
    last = states[-1]
    index = len(states) - 1
    while index > 0 and states[index - 1] == last:
        index -= 1
    return index


def observe(o: Orbit, opts: Optional[SimOptions] = None) -> ObservedBehavior:
    """把停止原因转换为观测行为"""
    if o.stop_reason is StopReason.CONVERGED:
        reached = _constant_from(o.states)
        if reached <= FINITE_TIME_HORIZON:
            return ObservedBehavior(ObservedKind.FINITE_TIME_EQUILIBRIUM, limit=o.limit,
                                    within_steps=reached)
        return ObservedBehavior(ObservedKind.CONVERGED, limit=o.limit)
    if o.stop_reason is StopReason.PERIODIC:
        kind = ObservedKind.EVENTUALLY_PERIODIC_2 if o.period == 2 else ObservedKind.PERIODIC
        return ObservedBehavior(kind, period=o.period)
    if o.stop_reason is StopReason.DIVERGED:
        return ObservedBehavior(ObservedKind.DIVERGES)
    note = "orbit hit the forbidden set" if o.stop_reason is StopReason.HIT_FORBIDDEN_SET \
        else f"no decision within {o.steps} steps"
    return ObservedBehavior(ObservedKind.UNDETERMINED, note=note)
