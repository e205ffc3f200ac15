"""
测试用的独立数值校验
"""

from .brute_force import (
    eigen_by_finite_difference,
    finite_difference_jacobian,
    fixed_point_by_iteration,
)

__all__ = ['eigen_by_finite_difference', 'finite_difference_jacobian', 'fixed_point_by_iteration']
