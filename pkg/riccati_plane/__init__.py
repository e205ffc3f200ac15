"""
riccati-plane - 平面有理系统 #11 的 Riccati 可约特例
17 个特例（外加 (11,22) 的原始四参数形式）

    x_{n+1} = α₁/(A₁ + y_n)
    y_{n+1} = (α₂ + β₂x_n + γ₂y_n)/(A₂ + B₂x_n + C₂y_n)

提供闭式平衡点、线性化稳定性、参数区域预测、共轭校验与轨道仿真。
"""

__version__ = "0.1.0"

from .api import (
    build_case_params,
    classify_case,
    describe_case,
    simulate_case,
    sweep_case,
    verify_case,
)

__all__ = [
    '__version__',
    'build_case_params',
    'classify_case',
    'describe_case',
    'simulate_case',
    'sweep_case',
    'verify_case',
]
