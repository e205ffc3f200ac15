"""
各测试模块共用的带种子参数与初始条件抽样

区域抽样器让参数与区域边界至少相差 1.1 倍。
"""

import sys
from pathlib import Path
from typing import Callable, Dict, List, Tuple

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

from riccati_plane.core.model import CaseParams, State
from riccati_plane.core.registry import CASE_IDS, case_spec, validate

LOW, HIGH = 0.5, 3.0

Sampler = Callable[[np.random.Generator], List[float]]


def _uniform(rng: np.random.Generator, n: int, low: float = LOW, high: float = HIGH) -> List[float]:
    return [float(v) for v in rng.uniform(low, high, n)]


def any_params(case: int) -> Sampler:
    arity = case_spec(case).arity

    def sample(rng):
        return _uniform(rng, arity)
    return sample


def _case_3_24_gas(rng):
    a1, a2 = _uniform(rng, 2)
    return [a2 * float(rng.uniform(1.2, 3.0)), a1, a2]


def _case_3_24_diverge(rng):
    a1, A1 = _uniform(rng, 2)
    return [a1, A1, a1 * float(rng.uniform(1.1, 3.0))]


def _case_19_gas(rng):
    a1, A1, a2 = _uniform(rng, 3)
    return [a1, A1, a2, float(rng.uniform(0.1, 0.9))]


def _case_19_diverge(rng):
    a1, A1, a2 = _uniform(rng, 3)
    return [a1, A1, a2, float(rng.uniform(1.1, 3.0))]


def _case_13_gas(rng):
    a1, A1 = _uniform(rng, 2)
    return [a1, A1, float(rng.uniform(1.1, 3.0))]


def _case_13_saddle(rng):
    a1, A1 = _uniform(rng, 2)
    return [a1, A1, float(rng.uniform(0.1, 0.9))]


def _case_4(low, high):
    def sample(rng):
        a1, A1 = _uniform(rng, 2)
        return [a1, A1, float(rng.uniform(low, high))]
    return sample


def _case_4_continuum(rng):
    a1, A1 = _uniform(rng, 2)
    return [a1, A1, 1.0]


GAS_SAMPLERS: Dict[int, Sampler] = {
    3: _case_3_24_gas,
    7: any_params(7),
    10: any_params(10),
    11: any_params(11),
    13: _case_13_gas,
    17: any_params(17),
    19: _case_19_gas,
    20: any_params(20),
    22: any_params(22),
    24: _case_3_24_gas,
    28: any_params(28),
    32: any_params(32),
}

DIVERGE_SAMPLERS: Dict[int, Sampler] = {
    3: _case_3_24_diverge,
    19: _case_19_diverge,
    24: _case_3_24_diverge,
}

SADDLE_SAMPLERS: Dict[int, Sampler] = {
    4: _case_4(1.1, 3.0),
    13: _case_13_saddle,
}

CONTINUUM_SAMPLER: Sampler = _case_4_continuum
CASE_4_GAS_SAMPLER: Sampler = _case_4(0.1, 0.9)

# 全部特例的全部区域，用于全表性质测试
ALL_REGIONS: List[Tuple[int, Sampler]] = (
    [(case, any_params(case)) for case in (1, 2, 5, 9)]
    + list(GAS_SAMPLERS.items())
    + list(DIVERGE_SAMPLERS.items())
    + list(SADDLE_SAMPLERS.items())
    + [(4, CONTINUUM_SAMPLER), (4, CASE_4_GAS_SAMPLER)]
)


def draw(case: int, sampler: Sampler, rng: np.random.Generator) -> CaseParams:
    return validate(case, sampler(rng))


def draw_ic(rng: np.random.Generator, low: float = 0.01, high: float = 5.0) -> State:
    x, y = rng.uniform(low, high, 2)
    return State(float(x), float(y))


def draw_domain_state(cp: CaseParams, rng: np.random.Generator) -> State:
    """(0, α₁/A₁) × (0, ∞) 内的状态"""
    x = cp.x_bound * float(rng.uniform(0.01, 0.99))
    y = float(rng.uniform(0.01, 5.0))
    return State(x, y)


__all__ = [
    'CASE_IDS', 'GAS_SAMPLERS', 'DIVERGE_SAMPLERS', 'SADDLE_SAMPLERS', 'CONTINUUM_SAMPLER',
    'CASE_4_GAS_SAMPLER', 'ALL_REGIONS', 'any_params', 'draw', 'draw_ic', 'draw_domain_state',
]
