"""
平衡点处的线性化稳定性

x' 不依赖 x，故 a11 = 0，所有特例的特征多项式都化为 λ² − a22·λ − a12·a21。
"""

import cmath
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

from ..core.errors import NotAFixedPoint
from ..core.model import RAW_FORM, CaseParams, State, jacobian, step_case
from ..core.registry import normalize_1122, scale_state_1122
from .equilibria import EquilibriumKind, EquilibriumSet, equilibria

logger = logging.getLogger(__name__)

NONHYPERBOLIC_TOL = 1e-9
FIXED_POINT_TOL = 1e-8

# 平衡点连续统上的 v 采样值
CONTINUUM_SAMPLES = (0.0, 0.5, 1.0, 2.0, 10.0)


class LocalClass(Enum):
    LAS = "LocallyAsymptoticallyStable"
    SADDLE = "Saddle"
    NONHYPERBOLIC = "Nonhyperbolic"
    UNSTABLE = "Unstable"


@dataclass(frozen=True)
class Spectrum:
    """特征值对，按 |lambda1| <= |lambda2| 排序"""
    lambda1: complex
    lambda2: complex

    def __post_init__(self):
        l1, l2 = complex(self.lambda1), complex(self.lambda2)
        if not (cmath.isfinite(l1) and cmath.isfinite(l2)):
            raise ValueError(f"non-finite eigenvalue in ({l1}, {l2})")
        if abs(l2) < abs(l1):
            l1, l2 = l2, l1
        object.__setattr__(self, "lambda1", l1)
        object.__setattr__(self, "lambda2", l2)

    @property
    def moduli(self) -> Tuple[float, float]:
        return (abs(self.lambda1), abs(self.lambda2))

    def distance(self, other: "Spectrum") -> float:
        """两种配对方式中较优者的最大特征值差"""
        straight = max(abs(self.lambda1 - other.lambda1), abs(self.lambda2 - other.lambda2))
        crossed = max(abs(self.lambda1 - other.lambda2), abs(self.lambda2 - other.lambda1))
        return min(straight, crossed)

    def to_dict(self) -> Dict[str, object]:
        return {
            "lambda1": [self.lambda1.real, self.lambda1.imag],
            "lambda2": [self.lambda2.real, self.lambda2.imag],
            "moduli": list(self.moduli),
        }


def fixed_point_residual(cp: CaseParams, s: State) -> float:
    return step_case(cp, s).distance(s) / max(1.0, s.norm())


def _require_fixed_point(cp: CaseParams, s: State, tol: float) -> None:
    residual = fixed_point_residual(cp, s)
    if residual > tol:
        raise NotAFixedPoint(f"({s.x}, {s.y}) is not a fixed point of (11,{cp.case}): residual {residual:.3e}")


def _from_square(q: float) -> Spectrum:
    # λ² = q 的根
    r = cmath.sqrt(q)
    return Spectrum(r, -r)


def _from_zero(lam: float) -> Spectrum:
    return Spectrum(0.0, lam)


def characteristic_coefficients(cp: CaseParams, eq: State) -> Tuple[float, float]:
    """eq 处 λ² + c1·λ + c0 的 (c1, c0)，即 (−a22, −a12·a21)"""
    j = jacobian(cp, eq)
    return (-j.a22, -j.a12 * j.a21)


def spectrum_numeric(cp: CaseParams, eq: State, fixed_point_tol: float = FIXED_POINT_TOL) -> Spectrum:
    """
    由迹和行列式求 eq 处 Jacobian 的特征值

    Raises:
        NotAFixedPoint: eq 不是特例映射的不动点
    """
    _require_fixed_point(cp, eq, fixed_point_tol)
    j = jacobian(cp, eq)
    half_trace = j.trace / 2.0
    root = cmath.sqrt(half_trace * half_trace - j.det)
    return Spectrum(half_trace + root, half_trace - root)


# 闭式谱，在已校验的平衡点处求值
_CLOSED: Dict[int, Callable[[CaseParams, float, float], Spectrum]] = {
    1: lambda p, x, y: Spectrum(0.0, 0.0),
    2: lambda p, x, y: _from_zero(-1.0),
    3: lambda p, x, y: _from_square(p["alpha2"] / p["alpha1"]),
    4: lambda p, x, y: _from_zero(p["gamma2"]),
    5: lambda p, x, y: Spectrum(0.0, 0.0),
    7: lambda p, x, y: _from_square(-y / (p["A1"] + y)),
    9: lambda p, x, y: Spectrum(0.0, 0.0),
    10: lambda p, x, y: _from_zero(-y / (p["A2"] + y)),
    11: lambda p, x, y: _from_square(x * y / ((p["A1"] + y) * (p["A2"] + x))),
    13: lambda p, x, y: _from_zero((1.0 - y) / (p["A2"] + y)),
    17: lambda p, x, y: _from_square(-p["A2"] * y / ((p["A1"] + y) * (p["A2"] + x))),
    19: lambda p, x, y: _from_zero(p["gamma2"]),
    20: lambda p, x, y: _from_zero((p["gamma2"] - y) / y),
    22: lambda p, x, y: _from_square(-x / (p["A1"] + y)),
    24: lambda p, x, y: _from_square((y - 1.0) / (p["A1"] + y)),
    28: lambda p, x, y: _from_zero((p["gamma2"] - y) / (p["A2"] + y)),
    # 由 (11,11) 与 (11,17) 的行列式形式推出
    32: lambda p, x, y: _from_square(-x * (1.0 - y) / ((p["A1"] + y) * (p["A2"] + x))),
}


def spectrum_closed(cp: CaseParams, eq: State, fixed_point_tol: float = FIXED_POINT_TOL) -> Spectrum:
    """
    特例在 eq 处的闭式特征值

    原始 (11,22) 形式与约化形式线性共轭，谱在约化形式上计算。

    Raises:
        NotAFixedPoint: eq 不是特例映射的不动点
    """
    _require_fixed_point(cp, eq, fixed_point_tol)
    if cp.form == RAW_FORM:
        return spectrum_closed(normalize_1122(cp), scale_state_1122(cp, eq), fixed_point_tol)
    return _CLOSED[cp.case](cp, eq.x, eq.y)


def classify_local(s: Spectrum, tol: float = NONHYPERBOLIC_TOL) -> LocalClass:
    m1, m2 = s.moduli
    if abs(m1 - 1.0) <= tol or abs(m2 - 1.0) <= tol:
        return LocalClass.NONHYPERBOLIC
    if m2 < 1.0:
        return LocalClass.LAS
    if m1 < 1.0:
        return LocalClass.SADDLE
    return LocalClass.UNSTABLE


@dataclass(frozen=True)
class LocalAnalysis:
    """单个平衡点的谱与分类"""
    role: str
    point: State
    spectrum: Spectrum
    local_class: LocalClass

    def to_dict(self) -> Dict[str, object]:
        return {
            "role": self.role,
            "point": self.point.to_dict(),
            "spectrum": self.spectrum.to_dict(),
            "class": self.local_class.value,
        }


def classify_equilibria(
    cp: CaseParams,
    eqs: Optional[EquilibriumSet] = None,
    tol: float = NONHYPERBOLIC_TOL,
) -> List[LocalAnalysis]:
    """
    对 cp 的每个平衡点分类

    ``Two`` 集合的两个点都分析；连续统在 ``CONTINUUM_SAMPLES`` 处采样。
    """
    eqs = eqs if eqs is not None else equilibria(cp)
    if eqs.kind is EquilibriumKind.NONE:
        return []
    if eqs.kind is EquilibriumKind.ONE:
        labelled = [("unique", eqs.points[0])]
    elif eqs.kind is EquilibriumKind.TWO:
        labelled = [("saddle", eqs.saddle), ("stable", eqs.stable)]
    else:
        labelled = [("continuum", eqs.continuum_point(v)) for v in CONTINUUM_SAMPLES]

    results = []
    for role, point in labelled:
        spectrum = spectrum_closed(cp, point)
        local_class = classify_local(spectrum, tol)
        logger.debug(f"(11,{cp.case}) {role} ({point.x:.6g}, {point.y:.6g}): {local_class.value}")
        results.append(LocalAnalysis(role, point, spectrum, local_class))
    return results
