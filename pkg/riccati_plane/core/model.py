"""
状态、参数、正向映射及其 Jacobian

系统 #11 是平面有理映射

    x' = alpha1 / (A1 + y)
    y' = (alpha2 + beta2*x + gamma2*y) / (A2 + B2*x + C2*y)

每个特例固定大部分系数；其约化形式由 ``step_case`` 直接求值，
经 ``embed`` 嵌入后与 ``step_general`` 一致。
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, Mapping, Tuple

from .errors import InvalidState, NonPositiveParameter, ValidationError, ZeroDenominator

# 一般系统的规范符号顺序
FULL_SYMBOLS = ("alpha1", "A1", "alpha2", "beta2", "gamma2", "A2", "B2", "C2")

RAW_FORM = "raw"
REDUCED_FORM = "reduced"


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise InvalidState(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class State:
    """闭非负象限中的点 (x, y)"""
    x: float
    y: float

    def __post_init__(self):
        x = _check_finite("x", self.x)
        y = _check_finite("y", self.y)
        if x < 0.0 or y < 0.0:
            raise InvalidState(f"State must be nonnegative, got ({x!r}, {y!r})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y

    def as_tuple(self) -> Tuple[float, float]:
        return (self.x, self.y)

    def norm(self) -> float:
        """上确界范数"""
        return max(abs(self.x), abs(self.y))

    def distance(self, other: "State") -> float:
        """与另一状态的上确界范数距离"""
        return max(abs(self.x - other.x), abs(self.y - other.y))

    def to_dict(self) -> Dict[str, float]:
        return {"x": self.x, "y": self.y}

    @classmethod
    def from_dict(cls, data: Mapping[str, float]) -> "State":
        return cls(data["x"], data["y"])


@dataclass(frozen=True)
class FullParams:
    """一般系统 #11 的系数"""
    alpha1: float
    A1: float
    alpha2: float = 0.0
    beta2: float = 0.0
    gamma2: float = 0.0
    A2: float = 0.0
    B2: float = 0.0
    C2: float = 0.0

    def __post_init__(self):
        for name in FULL_SYMBOLS:
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValidationError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        for name in ("alpha1", "A1"):
            if getattr(self, name) <= 0.0:
                raise NonPositiveParameter(name, getattr(self, name))
        for name in FULL_SYMBOLS[2:]:
            if getattr(self, name) < 0.0:
                raise ValidationError(f"{name} must be >= 0, got {getattr(self, name)!r}")
        if self.alpha2 + self.beta2 + self.gamma2 <= 0.0:
            raise ValidationError("alpha2 + beta2 + gamma2 must be > 0")
        if self.A2 + self.B2 + self.C2 <= 0.0:
            raise ValidationError("A2 + B2 + C2 must be > 0")

    def to_dict(self) -> Dict[str, float]:
        return {name: getattr(self, name) for name in FULL_SYMBOLS}


@dataclass(frozen=True)
class CaseParams:
    """
    单个特例的正系数，按特例签名顺序排列

    由 ``registry.validate`` 构建；``names`` 与特例签名一致。
    ``form`` 默认为 ``"reduced"``，仅 ``registry.normalize_1122``
    接受的四参数 (11,22) 输入为 ``"raw"``。
    """
    case: int
    values: Tuple[float, ...]
    names: Tuple[str, ...]
    form: str = REDUCED_FORM
    _lookup: Dict[str, float] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "_lookup", dict(zip(self.names, self.values)))

    def __getitem__(self, symbol: str) -> float:
        return self._lookup[symbol]

    def get(self, symbol: str, default: float = 0.0) -> float:
        return self._lookup.get(symbol, default)

    @property
    def key(self) -> Tuple[int, str]:
        return (self.case, self.form)

    @property
    def x_bound(self) -> float:
        """第一步之后所有 x 迭代值的上确界 alpha1/A1"""
        return self["alpha1"] / self["A1"]

    def to_dict(self) -> Dict[str, object]:
        return {
            "case": f"11,{self.case}",
            "form": self.form,
            "params": dict(self._lookup),
        }


@dataclass(frozen=True)
class Jacobian2:
    """按行存储的 2x2 Jacobian"""
    a11: float
    a12: float
    a21: float
    a22: float

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22"):
            if not math.isfinite(getattr(self, name)):
                raise ValidationError(f"Jacobian entry {name} is not finite")

    @property
    def trace(self) -> float:
        return self.a11 + self.a22

    @property
    def det(self) -> float:
        return self.a11 * self.a22 - self.a12 * self.a21

    def rows(self) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        return ((self.a11, self.a12), (self.a21, self.a22))


def _div(num: float, den: float, what: str) -> float:
    if den == 0.0:
        raise ZeroDenominator(f"{what} denominator vanished")
    return num / den


def step_general(p: FullParams, s: State) -> State:
    """一般系统 #11 迭代一步"""
    den = p.A2 + p.B2 * s.x + p.C2 * s.y
    y_next = _div(p.alpha2 + p.beta2 * s.x + p.gamma2 * s.y, den, "y-equation")
    return State(p.alpha1 / (p.A1 + s.y), y_next)


# 约化形式的 y 映射: (params, x, y) -> y'
YMap = Callable[[CaseParams, float, float], float]

_Y_MAPS: Dict[Tuple[int, str], YMap] = {
    (1, REDUCED_FORM): lambda p, x, y: p["alpha2"] / p["A2"],
    (2, REDUCED_FORM): lambda p, x, y: _div(p["alpha2"], y, "y_n"),
    (3, REDUCED_FORM): lambda p, x, y: _div(p["alpha2"], x, "x_n"),
    (4, REDUCED_FORM): lambda p, x, y: p["gamma2"] * y,
    (5, REDUCED_FORM): lambda p, x, y: p["beta2"] / p["B2"],
    (7, REDUCED_FORM): lambda p, x, y: p["beta2"] * x,
    (9, REDUCED_FORM): lambda p, x, y: p["gamma2"] / p["C2"],
    (10, REDUCED_FORM): lambda p, x, y: p["alpha2"] / (p["A2"] + y),
    (11, REDUCED_FORM): lambda p, x, y: p["alpha2"] / (p["A2"] + x),
    (13, REDUCED_FORM): lambda p, x, y: y / (p["A2"] + y),
    (17, REDUCED_FORM): lambda p, x, y: x / (p["A2"] + x),
    (19, REDUCED_FORM): lambda p, x, y: p["alpha2"] + p["gamma2"] * y,
    (20, REDUCED_FORM): lambda p, x, y: _div(p["alpha2"] + p["gamma2"] * y, y, "y_n"),
    (22, REDUCED_FORM): lambda p, x, y: p["alpha2"] + x,
    (22, RAW_FORM): lambda p, x, y: p["alpha2"] + p["beta2"] * x,
    (24, REDUCED_FORM): lambda p, x, y: _div(p["alpha2"] + x, x, "x_n"),
    (28, REDUCED_FORM): lambda p, x, y: (p["alpha2"] + p["gamma2"] * y) / (p["A2"] + y),
    (32, REDUCED_FORM): lambda p, x, y: (p["alpha2"] + x) / (p["A2"] + x),
}


def _reciprocal_slope(num: float, den: float, what: str) -> float:
    if den == 0.0:
        raise ZeroDenominator(f"{what} denominator vanished")
    return -num / (den * den)


# 各约化形式的 (dy'/dx, dy'/dy)
_Y_PARTIALS: Dict[Tuple[int, str], Callable[[CaseParams, float, float], Tuple[float, float]]] = {
    (1, REDUCED_FORM): lambda p, x, y: (0.0, 0.0),
    (2, REDUCED_FORM): lambda p, x, y: (0.0, _reciprocal_slope(p["alpha2"], y, "y_n")),
    (3, REDUCED_FORM): lambda p, x, y: (_reciprocal_slope(p["alpha2"], x, "x_n"), 0.0),
    (4, REDUCED_FORM): lambda p, x, y: (0.0, p["gamma2"]),
    (5, REDUCED_FORM): lambda p, x, y: (0.0, 0.0),
    (7, REDUCED_FORM): lambda p, x, y: (p["beta2"], 0.0),
    (9, REDUCED_FORM): lambda p, x, y: (0.0, 0.0),
    (10, REDUCED_FORM): lambda p, x, y: (0.0, -p["alpha2"] / (p["A2"] + y) ** 2),
    (11, REDUCED_FORM): lambda p, x, y: (-p["alpha2"] / (p["A2"] + x) ** 2, 0.0),
    (13, REDUCED_FORM): lambda p, x, y: (0.0, p["A2"] / (p["A2"] + y) ** 2),
    (17, REDUCED_FORM): lambda p, x, y: (p["A2"] / (p["A2"] + x) ** 2, 0.0),
    (19, REDUCED_FORM): lambda p, x, y: (0.0, p["gamma2"]),
    (20, REDUCED_FORM): lambda p, x, y: (0.0, _reciprocal_slope(p["alpha2"], y, "y_n")),
    (22, REDUCED_FORM): lambda p, x, y: (1.0, 0.0),
    (22, RAW_FORM): lambda p, x, y: (p["beta2"], 0.0),
    (24, REDUCED_FORM): lambda p, x, y: (_reciprocal_slope(p["alpha2"], x, "x_n"), 0.0),
    (28, REDUCED_FORM): lambda p, x, y: (
        0.0, (p["gamma2"] * p["A2"] - p["alpha2"]) / (p["A2"] + y) ** 2),
    (32, REDUCED_FORM): lambda p, x, y: ((p["A2"] - p["alpha2"]) / (p["A2"] + x) ** 2, 0.0),
}

# 各约化形式对应的 FullParams 系数；取值为符号名或字面常数
# （分母中单独出现的变量记为 1.0）
_EMBEDDINGS: Dict[Tuple[int, str], Dict[str, object]] = {
    (1, REDUCED_FORM): {"alpha2": "alpha2", "A2": "A2"},
    (2, REDUCED_FORM): {"alpha2": "alpha2", "C2": 1.0},
    (3, REDUCED_FORM): {"alpha2": "alpha2", "B2": 1.0},
    (4, REDUCED_FORM): {"gamma2": "gamma2", "A2": 1.0},
    # 即常数 beta2/B2
    (5, REDUCED_FORM): {"alpha2": "beta2", "A2": "B2"},
    (7, REDUCED_FORM): {"beta2": "beta2", "A2": 1.0},
    # 即常数 gamma2/C2
    (9, REDUCED_FORM): {"alpha2": "gamma2", "A2": "C2"},
    (10, REDUCED_FORM): {"alpha2": "alpha2", "A2": "A2", "C2": 1.0},
    (11, REDUCED_FORM): {"alpha2": "alpha2", "A2": "A2", "B2": 1.0},
    (13, REDUCED_FORM): {"gamma2": 1.0, "A2": "A2", "C2": 1.0},
    (17, REDUCED_FORM): {"beta2": 1.0, "A2": "A2", "B2": 1.0},
    (19, REDUCED_FORM): {"alpha2": "alpha2", "gamma2": "gamma2", "A2": 1.0},
    (20, REDUCED_FORM): {"alpha2": "alpha2", "gamma2": "gamma2", "C2": 1.0},
    (22, REDUCED_FORM): {"alpha2": "alpha2", "beta2": 1.0, "A2": 1.0},
    (22, RAW_FORM): {"alpha2": "alpha2", "beta2": "beta2", "A2": 1.0},
    (24, REDUCED_FORM): {"alpha2": "alpha2", "beta2": 1.0, "B2": 1.0},
    (28, REDUCED_FORM): {"alpha2": "alpha2", "gamma2": "gamma2", "A2": "A2", "C2": 1.0},
    (32, REDUCED_FORM): {"alpha2": "alpha2", "beta2": 1.0, "A2": "A2", "B2": 1.0},
}


def embed(cp: CaseParams) -> FullParams:
    """把特例系数放入一般 8 参数系统"""
    coeffs = {"alpha1": cp["alpha1"], "A1": cp["A1"]}
    for target, source in _EMBEDDINGS[cp.key].items():
        coeffs[target] = cp[source] if isinstance(source, str) else source
    return FullParams(**coeffs)


def y_map(cp: CaseParams, x: float, y: float) -> float:
    """在 (x, y) 处求特例的 y 方程"""
    return _Y_MAPS[cp.key](cp, x, y)


def step_case(cp: CaseParams, s: State) -> State:
    """特例约化形式迭代一步"""
    return State(cp["alpha1"] / (cp["A1"] + s.y), y_map(cp, s.x, s.y))


def jacobian(cp: CaseParams, s: State) -> Jacobian2:
    """``step_case`` 在 s 处的 Jacobian；a11 恒为 0"""
    a21, a22 = _Y_PARTIALS[cp.key](cp, s.x, s.y)
    a12 = -cp["alpha1"] / (cp["A1"] + s.y) ** 2
    return Jacobian2(0.0, a12, float(a21), float(a22))
