"""
系统 #11 的 17 个 Riccati 可约特例静态表

每一项记录参数签名、y 映射类型、约化形式文本，
以及使第一步无定义的初始条件。表是封闭的，运行时不可扩展。
"""

import json
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import ArityMismatch, NonPositiveParameter, UnknownCase, ValidationError
from .model import RAW_FORM, REDUCED_FORM, CaseParams, State

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

DISPLAY_NAMES = {
    "alpha1": "α₁",
    "A1": "A₁",
    "alpha2": "α₂",
    "beta2": "β₂",
    "gamma2": "γ₂",
    "A2": "A₂",
    "B2": "B₂",
    "C2": "C₂",
}

X_EQUATION = "x_{n+1} = α₁/(A₁ + y_n)"


class YMapKind(Enum):
    """特例 y 方程的形状"""
    CONSTANT = "Constant"
    RECIPROCAL_Y = "ReciprocalY"
    RECIPROCAL_X = "ReciprocalX"
    LINEAR_Y = "LinearY"
    LINEAR_X = "LinearX"
    RICCATI_Y = "RiccatiY"
    RICCATI_Y_FULL = "RiccatiYfull"
    RICCATI_X_NUM = "RiccatiXnum"
    RICCATI_X_FULL = "RiccatiXfull"
    AFFINE_Y = "AffineY"
    AFFINE_X = "AffineX"
    RATIO_Y = "RatioY"
    RATIO_X = "RatioX"
    SATURATING_Y = "SaturatingY"
    SATURATING_X = "SaturatingX"

    @property
    def depends_on_x(self) -> bool:
        return self in _READS_X

    @property
    def depends_on_y(self) -> bool:
        return self in _READS_Y


_READS_X = frozenset({
    YMapKind.RECIPROCAL_X, YMapKind.LINEAR_X, YMapKind.RICCATI_X_NUM,
    YMapKind.RICCATI_X_FULL, YMapKind.AFFINE_X, YMapKind.RATIO_X,
    YMapKind.SATURATING_X,
})
_READS_Y = frozenset({
    YMapKind.RECIPROCAL_Y, YMapKind.LINEAR_Y, YMapKind.RICCATI_Y,
    YMapKind.RICCATI_Y_FULL, YMapKind.AFFINE_Y, YMapKind.RATIO_Y,
    YMapKind.SATURATING_Y,
})


class ForbiddenAxis(Enum):
    """第一步无定义的坐标轴"""
    NONE = "none"
    Y_ZERO = "y=0"
    X_ZERO = "x=0"


@dataclass(frozen=True)
class CaseSpec:
    """单个特例的静态描述"""
    id: int
    param_names: Tuple[str, ...]
    y_map_kind: YMapKind
    y_equation: str
    forbidden: ForbiddenAxis = ForbiddenAxis.NONE
    regions: str = ""
    form: str = REDUCED_FORM

    @property
    def label(self) -> str:
        return f"(11,{self.id})"

    @property
    def arity(self) -> int:
        return len(self.param_names)

    @property
    def reduction_lag(self) -> int:
        """u_{n+1} 依赖 u_{n-1}（y 映射读取 x）时为 2，否则为 1"""
        return 2 if self.y_map_kind.depends_on_x else 1

    def is_forbidden(self, s: State) -> bool:
        """s 是否使该特例第一步无定义"""
        if self.forbidden is ForbiddenAxis.Y_ZERO:
            return s.y == 0.0
        if self.forbidden is ForbiddenAxis.X_ZERO:
            return s.x == 0.0
        return False

    def to_dict(self) -> Dict[str, object]:
        return {
            "id": f"11,{self.id}",
            "form": self.form,
            "param_names": list(self.param_names),
            "display_names": [DISPLAY_NAMES[n] for n in self.param_names],
            "y_map_kind": self.y_map_kind.value,
            "reduced_form": [X_EQUATION, self.y_equation],
            "forbidden_initials": self.forbidden.value,
            "regions": self.regions,
        }


_SPECS: Tuple[CaseSpec, ...] = (
    CaseSpec(1, ("alpha1", "A1", "alpha2", "A2"), YMapKind.CONSTANT,
             "y_{n+1} = α₂/A₂",
             regions="equilibrium reached after at most two steps"),
    CaseSpec(2, ("alpha1", "A1", "alpha2"), YMapKind.RECIPROCAL_Y,
             "y_{n+1} = α₂/y_n", ForbiddenAxis.Y_ZERO,
             regions="every solution eventually periodic with period 2"),
    CaseSpec(3, ("alpha1", "A1", "alpha2"), YMapKind.RECIPROCAL_X,
             "y_{n+1} = α₂/x_n", ForbiddenAxis.X_ZERO,
             regions="α₁ > α₂: GAS; α₁ ≤ α₂: (x_n, y_n) → (0, ∞)"),
    CaseSpec(4, ("alpha1", "A1", "gamma2"), YMapKind.LINEAR_Y,
             "y_{n+1} = γ₂y_n",
             regions="γ₂ > 1: saddle with stable manifold y = 0; "
                     "γ₂ = 1: continuum of equilibria; γ₂ < 1: GAS"),
    CaseSpec(5, ("alpha1", "A1", "beta2", "B2"), YMapKind.CONSTANT,
             "y_{n+1} = β₂/B₂",
             regions="equilibrium reached after at most two steps"),
    CaseSpec(7, ("alpha1", "A1", "beta2"), YMapKind.LINEAR_X,
             "y_{n+1} = β₂x_n", regions="GAS"),
    CaseSpec(9, ("alpha1", "A1", "gamma2", "C2"), YMapKind.CONSTANT,
             "y_{n+1} = γ₂/C₂",
             regions="equilibrium reached after at most two steps"),
    CaseSpec(10, ("alpha1", "A1", "alpha2", "A2"), YMapKind.RICCATI_Y,
             "y_{n+1} = α₂/(A₂ + y_n)", regions="GAS"),
    CaseSpec(11, ("alpha1", "A1", "alpha2", "A2"), YMapKind.RICCATI_X_NUM,
             "y_{n+1} = α₂/(A₂ + x_n)", regions="GAS"),
    CaseSpec(13, ("alpha1", "A1", "A2"), YMapKind.SATURATING_Y,
             "y_{n+1} = y_n/(A₂ + y_n)",
             regions="A₂ ≥ 1: GAS at (α₁/A₁, 0); A₂ < 1: saddle on y = 0 "
                     "plus interior attractor"),
    CaseSpec(17, ("alpha1", "A1", "A2"), YMapKind.SATURATING_X,
             "y_{n+1} = x_n/(A₂ + x_n)", regions="GAS"),
    CaseSpec(19, ("alpha1", "A1", "alpha2", "gamma2"), YMapKind.AFFINE_Y,
             "y_{n+1} = α₂ + γ₂y_n",
             regions="γ₂ < 1: GAS; γ₂ ≥ 1: (x_n, y_n) → (0, ∞)"),
    CaseSpec(20, ("alpha1", "A1", "alpha2", "gamma2"), YMapKind.RATIO_Y,
             "y_{n+1} = (α₂ + γ₂y_n)/y_n", ForbiddenAxis.Y_ZERO, regions="GAS"),
    CaseSpec(22, ("alpha1", "A1", "alpha2"), YMapKind.AFFINE_X,
             "y_{n+1} = α₂ + x_n", regions="GAS"),
    CaseSpec(24, ("alpha1", "A1", "alpha2"), YMapKind.RATIO_X,
             "y_{n+1} = (α₂ + x_n)/x_n", ForbiddenAxis.X_ZERO,
             regions="α₁ > α₂: GAS; α₁ ≤ α₂: (x_n, y_n) → (0, ∞)"),
    CaseSpec(28, ("alpha1", "A1", "alpha2", "gamma2", "A2"), YMapKind.RICCATI_Y_FULL,
             "y_{n+1} = (α₂ + γ₂y_n)/(A₂ + y_n)", regions="GAS"),
    CaseSpec(32, ("alpha1", "A1", "alpha2", "A2"), YMapKind.RICCATI_X_FULL,
             "y_{n+1} = (α₂ + x_n)/(A₂ + x_n)", regions="GAS"),
)

# 变量替换 x* = β₂x 之前的四参数 (11,22)
RAW_1122 = CaseSpec(22, ("alpha1", "A1", "alpha2", "beta2"), YMapKind.AFFINE_X,
                    "y_{n+1} = α₂ + β₂x_n", regions="GAS", form=RAW_FORM)

CASE_TABLE: Dict[int, CaseSpec] = {spec.id: spec for spec in _SPECS}
CASE_IDS: Tuple[int, ...] = tuple(sorted(CASE_TABLE))


def parse_case_id(text) -> int:
    """
    接受 ``7``、``"7"``、``"11,7"`` 或 ``"(11,7)"``，返回 7

    Raises:
        UnknownCase: 不在 17 个编号之中
    """
    if isinstance(text, int):
        index = text
    else:
        cleaned = str(text).strip().strip("()").replace(" ", "")
        if cleaned.startswith("11,"):
            cleaned = cleaned[3:]
        try:
            index = int(cleaned)
        except ValueError:
            raise UnknownCase(text) from None
    if index not in CASE_TABLE:
        raise UnknownCase(index)
    return index


def case_spec(case_id, form: str = REDUCED_FORM) -> CaseSpec:
    """
    获取特例的静态描述

    Args:
        case_id: 特例编号（可接受的写法见 ``parse_case_id``）
        form: ``"raw"`` 选择四参数 (11,22) 签名

    Raises:
        UnknownCase: 编号不在 17 个特例之中
    """
    index = parse_case_id(case_id)
    if form == RAW_FORM:
        if index != 22:
            raise UnknownCase(f"{index} (raw form exists only for 11,22)")
        return RAW_1122
    return CASE_TABLE[index]


def spec_for(cp: CaseParams) -> CaseSpec:
    return case_spec(cp.case, cp.form)


def validate(case_id, values: Sequence[float], form: str = REDUCED_FORM) -> CaseParams:
    """
    检查参数个数与正性，构建 CaseParams

    Raises:
        ArityMismatch: 参数个数不符
        NonPositiveParameter: 某个值不大于 0（报出符号名）
    """
    spec = case_spec(case_id, form)
    values = list(values)
    if len(values) != spec.arity:
        raise ArityMismatch(spec.id, spec.arity, len(values))
    checked: List[float] = []
    for name, raw in zip(spec.param_names, values):
        try:
            value = float(raw)
        except (TypeError, ValueError):
            raise ValidationError(f"Parameter {name} is not a number: {raw!r}") from None
        # NaN 同样不满足该比较
        if not value > 0.0 or value == float("inf"):
            raise NonPositiveParameter(name, value)
        checked.append(value)
    return CaseParams(spec.id, tuple(checked), spec.param_names, spec.form)


def validate_mapping(case_id, params: Dict[str, float], form: str = REDUCED_FORM) -> CaseParams:
    """
    同 ``validate``，但接受 ``{symbol: value}``

    Raises:
        ArityMismatch: 缺少签名中的符号
    """
    spec = case_spec(case_id, form)
    missing = [n for n in spec.param_names if params.get(n) is None]
    if missing:
        raise ArityMismatch(spec.id, spec.arity, spec.arity - len(missing))
    extra = sorted(set(k for k, v in params.items() if v is not None) - set(spec.param_names))
    if extra:
        raise ValidationError(f"Case {spec.label} does not use parameter(s): {', '.join(extra)}")
    return validate(spec.id, [params[n] for n in spec.param_names], form)


def missing_symbols(case_id, params: Dict[str, Optional[float]], form: str = REDUCED_FORM) -> List[str]:
    """签名中在 ``params`` 里没有取值的符号"""
    spec = case_spec(case_id, form)
    return [n for n in spec.param_names if params.get(n) is None]


def forbidden_initials(cp: CaseParams) -> Callable[[State], bool]:
    """判定初始条件是否被该特例禁止的谓词"""
    return spec_for(cp).is_forbidden


def normalize_1122(cp: CaseParams) -> CaseParams:
    """
    (11,22) 的变量替换 x* = β₂x, y* = y

    输入原始形式 (α₁, A₁, α₂, β₂)，返回约化形式 (α₁β₂, A₁, α₂)，
    其轨道即原始轨道的 x 乘以 β₂。
    """
    if cp.case != 22 or cp.form != RAW_FORM:
        raise ValidationError("normalize_1122 expects the raw (11,22) parameters (α₁, A₁, α₂, β₂)")
    beta2 = cp["beta2"]
    logger.debug(f"归一化 (11,22)，β₂={beta2}")
    return validate(22, [cp["alpha1"] * beta2, cp["A1"], cp["alpha2"]])


def scale_state_1122(cp: CaseParams, s: State) -> State:
    """把原始 (11,22) 状态映射到归一化坐标"""
    return State(cp["beta2"] * s.x, s.y)


def dump_table(include_raw: bool = True) -> str:
    """以 JSON 输出特例表，供文档工具使用"""
    cases = [spec.to_dict() for spec in _SPECS]
    if include_raw:
        cases.append(RAW_1122.to_dict())
    return json.dumps(
        {"schema": SCHEMA_VERSION, "system": "11", "x_equation": X_EQUATION, "cases": cases},
        indent=2,
        ensure_ascii=False,
    )
