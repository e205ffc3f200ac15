"""
变量替换 h(x, y) = (y, α₁/x − A₁) 与提升映射 g

h 把开矩形 (0, α₁/A₁) × (0, ∞) 映满 (0, ∞)²。记 u_n = y_n，
则 h(x_n, y_n) = (u_n, u_{n-1})，g 即 u 的二阶递推写成的数对一阶映射。
y 方程读取 x 时递推形如 u_{n+1} = φ(u_{n-1})，
其奇偶子列分别是 Riccati（或线性）映射 φ 的轨道。
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import DomainViolation, NotConjugateCase, ZeroDenominator
from ..core.model import RAW_FORM, CaseParams, State, step_case, y_map
from .equilibria import positive_root

logger = logging.getLogger(__name__)

# 具有 (h, g) 共轭对的特例
CONJUGATE_CASES = frozenset({3, 7, 10, 11, 13, 17, 19, 22, 24, 32})


def _check_conjugate(cp: CaseParams) -> None:
    if cp.case not in CONJUGATE_CASES:
        raise NotConjugateCase(cp.case)


def h_map(cp: CaseParams, s: State) -> State:
    """
    h(x, y) = (y, α₁/x − A₁)

    Raises:
        DomainViolation: s 不在 (0, α₁/A₁) × (0, ∞) 内
    """
    if not (0.0 < s.x < cp.x_bound) or s.y <= 0.0:
        raise DomainViolation(
            f"h is defined on (0, {cp.x_bound:.6g}) x (0, inf); got ({s.x!r}, {s.y!r})"
        )
    return State(s.y, cp["alpha1"] / s.x - cp["A1"])


def h_inv_map(cp: CaseParams, t: State) -> State:
    """
    h⁻¹(u, v) = (α₁/(A₁ + v), u)

    Raises:
        DomainViolation: t 不在 (0, ∞)² 内
    """
    if t.x <= 0.0 or t.y <= 0.0:
        raise DomainViolation(f"h_inv is defined on (0, inf)^2; got ({t.x!r}, {t.y!r})")
    return State(cp["alpha1"] / (cp["A1"] + t.y), t.x)


def g_map(cp: CaseParams, t: State) -> State:
    """
    数对上的提升映射 (u_n, u_{n-1}) -> (u_{n+1}, u_n)

    Raises:
        NotConjugateCase: 该特例没有共轭
        DomainViolation: t 不在 (0, ∞)² 内
    """
    _check_conjugate(cp)
    pre = h_inv_map(cp, t)
    return State(y_map(cp, pre.x, pre.y), t.x)


def _scaled_residual(a: State, b: State, *scales: State) -> float:
    scale = max([1.0] + [s.norm() for s in scales])
    return a.distance(b) / scale


def verify_conjugacy(cp: CaseParams, grid: Iterable[State]) -> float:
    """
    网格上 ‖h⁻¹(g(h(s))) − f(s)‖∞ 的最大值，相对于 max(1, ‖s‖∞, ‖f(s)‖∞)

    Raises:
        NotConjugateCase: 该特例没有共轭
        DomainViolation: 有网格点不在 h 的定义域内
    """
    _check_conjugate(cp)
    worst = 0.0
    count = 0
    for s in grid:
        image = step_case(cp, s)
        lifted = h_inv_map(cp, g_map(cp, h_map(cp, s)))
        worst = max(worst, _scaled_residual(lifted, image, s, image))
        count += 1
    logger.debug(f"(11,{cp.case}) 共轭残差 {worst:.3e}，共 {count} 个点")
    return worst


def default_grid(cp: CaseParams, size: int = 20) -> List[State]:
    """(0, α₁/A₁) × (0, ∞) 内 size × size 的对数间隔网格"""
    xs = cp.x_bound * np.geomspace(1e-3, 0.999, size)
    ys = np.geomspace(1e-3, 1e3, size)
    return [State(float(x), float(y)) for x in xs for y in ys]


def transport_residual(cp: CaseParams, s: State, steps: int = 30) -> float:
    """
    n ≤ steps 时 ‖h(fⁿ(s)) − gⁿ(h(s))‖∞ 的最大值（相对误差）

    Raises:
        NotConjugateCase: 该特例没有共轭
        DomainViolation: s 不在 h 的定义域内
    """
    _check_conjugate(cp)
    f_state = s
    g_state = h_map(cp, s)
    worst = 0.0
    for _ in range(steps):
        f_state = step_case(cp, f_state)
        g_state = g_map(cp, g_state)
        mapped = h_map(cp, f_state)
        worst = max(worst, _scaled_residual(mapped, g_state, mapped, g_state))
    return worst


@dataclass(frozen=True)
class RiccatiCoeffs:
    """
    一阶映射 φ(u) = (a + b·u)/(c + d·u)

    约化为 u_{n+1} = φ(u_n) 时 ``lag`` 为 1，为 u_{n+1} = φ(u_{n-1}) 时为 2。
    d = 0 即线性（仿射）情形。
    """
    a: float
    b: float
    c: float
    d: float
    lag: int = 1

    def __post_init__(self):
        if self.a == 0.0 and self.b == 0.0 and self.c == 0.0 and self.d == 0.0:
            raise ValueError("Riccati coefficients must not all vanish")
        if self.lag not in (1, 2):
            raise ValueError(f"lag must be 1 or 2, got {self.lag}")

    @property
    def is_linear(self) -> bool:
        return self.d == 0.0

    @property
    def riccati_number(self) -> Optional[float]:
        """(bc − ad)/(b + c)²，仅供参考；b + c = 0 时为 None"""
        total = self.b + self.c
        if total == 0.0:
            return None
        return (self.b * self.c - self.a * self.d) / (total * total)

    def apply(self, u: float) -> float:
        den = self.c + self.d * u
        if den == 0.0:
            raise ZeroDenominator(f"Riccati denominator vanished at u={u!r}")
        return (self.a + self.b * u) / den

    def iterate(self, u0: float, n: int) -> List[float]:
        """[u0, φ(u0), ..., φⁿ(u0)]"""
        values = [float(u0)]
        for _ in range(n):
            values.append(self.apply(values[-1]))
        return values

    def fixed_points(self) -> List[float]:
        """u = φ(u) 的非负解，升序"""
        # d·u² + (c − b)·u − a = 0
        linear = self.c - self.b
        if self.is_linear:
            if linear == 0.0:
                return []
            u = self.a / linear
            return [u] if u >= 0.0 else []
        if self.a == 0.0:
            roots = [0.0, -linear / self.d]
            return sorted(r for r in set(roots) if r >= 0.0)
        if self.a > 0.0 and self.d > 0.0:
            return [positive_root(self.d, linear, self.a)]
        disc = linear * linear + 4.0 * self.d * self.a
        if disc < 0.0:
            return []
        root = math.sqrt(disc)
        roots = {(-linear + root) / (2.0 * self.d), (-linear - root) / (2.0 * self.d)}
        return sorted(r for r in roots if r >= 0.0)

    def to_dict(self) -> Dict[str, object]:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "d": self.d,
            "lag": self.lag,
            "linear": self.is_linear,
            "riccati_number": self.riccati_number,
        }


def riccati_coeffs(cp: CaseParams) -> RiccatiCoeffs:
    """
    共轭特例解耦后一步映射 φ 的系数

    Raises:
        NotConjugateCase: 该特例没有共轭
    """
    _check_conjugate(cp)
    a1, A1 = cp["alpha1"], cp["A1"]
    a2, A2 = cp.get("alpha2"), cp.get("A2")
    case = cp.case
    if case == 3:
        return RiccatiCoeffs(a2 * A1, a2, a1, 0.0, lag=2)
    if case == 7:
        return RiccatiCoeffs(cp["beta2"] * a1, 0.0, A1, 1.0, lag=2)
    if case == 10:
        return RiccatiCoeffs(a2, 0.0, A2, 1.0, lag=1)
    if case == 11:
        return RiccatiCoeffs(a2 * A1, a2, A1 * A2 + a1, A2, lag=2)
    if case == 13:
        return RiccatiCoeffs(0.0, 1.0, A2, 1.0, lag=1)
    if case == 17:
        return RiccatiCoeffs(a1, 0.0, A1 * A2 + a1, A2, lag=2)
    if case == 19:
        return RiccatiCoeffs(a2, cp["gamma2"], 1.0, 0.0, lag=1)
    if case == 22:
        beta2 = cp["beta2"] if cp.form == RAW_FORM else 1.0
        return RiccatiCoeffs(a2 * A1 + beta2 * a1, a2, A1, 1.0, lag=2)
    if case == 24:
        return RiccatiCoeffs(a2 * A1 + a1, a2, a1, 0.0, lag=2)
    # 32
    return RiccatiCoeffs(a2 * A1 + a1, a2, A2 * A1 + a1, A2, lag=2)


def reduction_orbit(cp: CaseParams, s: State, n: int) -> List[float]:
    """沿 s 的 f 轨道取 u_0..u_n，u_k = y_k"""
    values = [s.y]
    state = s
    for _ in range(n):
        state = step_case(cp, state)
        values.append(state.y)
    return values


def riccati_split(u_orbit: Sequence[float]) -> Tuple[List[float], List[float]]:
    """偶数下标与奇数下标子列"""
    return list(u_orbit[0::2]), list(u_orbit[1::2])


def _subsequence_residual(coeffs: RiccatiCoeffs, seq: Sequence[float]) -> float:
    worst = 0.0
    for prev, cur in zip(seq, seq[1:]):
        worst = max(worst, abs(cur - coeffs.apply(prev)) / max(1.0, abs(cur)))
    return worst


def decoupling_residual(cp: CaseParams, s: State, n: int = 40) -> float:
    """
    s 的 u 序列偏离 φ 生成序列的程度

    lag 为 2 时奇偶子列分别检查。u_1 依赖自由初值 x_0，只作为奇子列的起点。
    """
    coeffs = riccati_coeffs(cp)
    u = reduction_orbit(cp, s, n)
    if coeffs.lag == 1:
        return _subsequence_residual(coeffs, u)
    even, odd = riccati_split(u)
    return max(_subsequence_residual(coeffs, even), _subsequence_residual(coeffs, odd))
