"""
闭式结果的暴力交叉校验

这里不复用任何平衡点或谱公式：不动点由直接迭代求得，
特征值由中心差分 Jacobian 求得。
"""

import logging

import numpy as np

from ..analysis.stability import Spectrum
from ..core.errors import NoConvergence
from ..core.model import CaseParams, State, step_case, y_map

logger = logging.getLogger(__name__)

ORACLE_TOL = 1e-13
ORACLE_MAX_ITERS = 1_000_000
# 范数超过此值的轨道视为逃逸
ESCAPE_NORM = 1e100


def fixed_point_by_iteration(
    cp: CaseParams,
    ic: State,
    tol: float = ORACLE_TOL,
    max_iters: int = ORACLE_MAX_ITERS,
) -> State:
    """
    ic 轨道的极限，相对步长容差为 ``tol``

    Raises:
        NoConvergence: max_iters 步内未收敛，或轨道逃逸
    """
    s = ic
    streak = 0
    for n in range(max_iters):
        nxt = step_case(cp, s)
        if nxt.norm() > ESCAPE_NORM:
            raise NoConvergence(f"(11,{cp.case}) orbit escaped after {n + 1} steps")
        if nxt.distance(s) <= tol * max(1.0, nxt.norm()):
            streak += 1
            if streak >= 3:
                logger.debug(f"(11,{cp.case}) 迭代 {n + 1} 步得到不动点")
                return nxt
        else:
            streak = 0
        s = nxt
    raise NoConvergence(f"(11,{cp.case}) orbit did not settle within {max_iters} steps")


def _map_vector(cp: CaseParams, v: np.ndarray) -> np.ndarray:
    # 不构造 State：差分模板可能略越过坐标轴
    x, y = float(v[0]), float(v[1])
    return np.array([cp["alpha1"] / (cp["A1"] + y), y_map(cp, x, y)])


def finite_difference_jacobian(cp: CaseParams, point: State, h: float = 1e-6) -> np.ndarray:
    """特例映射在 point 处的中心差分 Jacobian"""
    x0 = np.array(point.as_tuple(), dtype=float)
    steps = h * np.maximum(1.0, np.abs(x0))
    jac = np.zeros((2, 2))
    for j in range(2):
        e = np.zeros(2)
        e[j] = steps[j]
        jac[:, j] = (_map_vector(cp, x0 + e) - _map_vector(cp, x0 - e)) / (2.0 * steps[j])
    return jac


def eigen_by_finite_difference(cp: CaseParams, eq: State, h: float = 1e-6) -> Spectrum:
    """eq 处有限差分 Jacobian 的特征值"""
    eigvals = np.linalg.eigvals(finite_difference_jacobian(cp, eq, h))
    return Spectrum(complex(eigvals[0]), complex(eigvals[1]))
