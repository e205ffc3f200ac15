# -*- coding: utf-8 -*-
"""
共轭与 Riccati 解耦测试
======================

- h / h⁻¹ / g 的手算点
- 网格上 h⁻¹∘g∘h = f，轨道传递
- 一阶映射系数与奇偶拆分
"""

import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from riccati_plane.analysis.conjugacy import (
    CONJUGATE_CASES,
    RiccatiCoeffs,
    decoupling_residual,
    default_grid,
    g_map,
    h_inv_map,
    h_map,
    reduction_orbit,
    riccati_coeffs,
    riccati_split,
    transport_residual,
    verify_conjugacy,
)
from riccati_plane.analysis.equilibria import equilibria
from riccati_plane.core.errors import DomainViolation, NotConjugateCase, ZeroDenominator
from riccati_plane.core.model import RAW_FORM, State
from riccati_plane.core.registry import case_spec, validate

from tests.sampling import DIVERGE_SAMPLERS, GAS_SAMPLERS, SADDLE_SAMPLERS, draw, draw_domain_state


def _conjugate_samplers():
    """每个共轭特例的 GAS 抽样，外加 (11,13) 的鞍点区域"""
    samplers = [(case, GAS_SAMPLERS[case]) for case in sorted(CONJUGATE_CASES)]
    samplers.append((13, SADDLE_SAMPLERS[13]))
    return samplers


def _transport_samplers():
    # (11,13) 的 GAS 抽样会把 y 压到 A1 + y 的分辨率以下，x 落在边界上
    return [(case, sampler) for case, sampler in _conjugate_samplers()
            if sampler is not GAS_SAMPLERS[13]]


class TestMaps:
    """测试 h、h⁻¹ 与 g"""

    def test_h_example(self):
        cp = validate(3, [2, 1, 1])
        assert h_map(cp, State(1, 3)) == State(3.0, 1.0)

    def test_h_second_coordinate_vanishes_at_bound(self):
        cp = validate(3, [2, 1, 1])
        near = h_map(cp, State(2.0 - 1e-9, 1.0))
        assert 0.0 < near.y < 1e-8

    @pytest.mark.parametrize("point", [(2.0, 1.0), (2.5, 1.0), (1.0, 0.0)])
    def test_h_domain(self, point):
        with pytest.raises(DomainViolation):
            h_map(validate(3, [2, 1, 1]), State(*point))

    def test_h_inv_example(self):
        cp = validate(3, [2, 1, 1])
        assert h_inv_map(cp, State(3, 1)) == State(1.0, 3.0)
        with pytest.raises(DomainViolation):
            h_inv_map(cp, State(0.0, 1.0))

    def test_h_inv_inverts_h(self):
        cp = validate(11, [2, 1, 1, 1])
        rng = np.random.default_rng(11)
        for _ in range(200):
            s = draw_domain_state(cp, rng)
            back = h_inv_map(cp, h_map(cp, s))
            assert back.x == pytest.approx(s.x, rel=1e-12)
            assert back.y == s.y

    def test_g_case_10(self):
        assert g_map(validate(10, [1, 1, 4, 1]), State(1, 7)) == State(2.0, 1.0)

    def test_g_case_3(self):
        t = g_map(validate(3, [2, 1, 1]), State(3, 5))
        assert t.x == pytest.approx(3.0, rel=1e-15)
        assert t.y == 3.0

    def test_g_case_19(self):
        cp = validate(19, [1, 1, 1, 0.5])
        assert g_map(cp, State(4.0, 9.0)) == State(3.0, 4.0)

    @pytest.mark.parametrize("case", [1, 2, 4, 5, 9, 20, 28])
    def test_non_conjugate_cases(self, case):
        cp = validate(case, [1.5] * case_spec(case).arity)
        with pytest.raises(NotConjugateCase):
            verify_conjugacy(cp, [State(0.5, 1.0)])
        with pytest.raises(NotConjugateCase):
            riccati_coeffs(cp)


class TestConjugacyIdentity:
    """h⁻¹(g(h(s))) = f(s)"""

    @pytest.mark.parametrize("case,sampler", _conjugate_samplers())
    def test_grid_residual(self, case, sampler):
        rng = np.random.default_rng(6000 + case)
        for _ in range(10):
            cp = draw(case, sampler, rng)
            assert verify_conjugacy(cp, default_grid(cp, 10)) <= 1e-12

    @pytest.mark.parametrize("case", sorted(DIVERGE_SAMPLERS))
    def test_grid_residual_in_divergent_regions(self, case):
        rng = np.random.default_rng(6100 + case)
        cp = draw(case, DIVERGE_SAMPLERS[case], rng)
        assert verify_conjugacy(cp, default_grid(cp, 10)) <= 1e-12

    def test_single_point(self):
        cp = validate(11, [2, 1, 1, 1])
        assert verify_conjugacy(cp, [State(1.0, 1.0)]) <= 1e-14

    def test_default_grid_inside_domain(self):
        cp = validate(7, [3, 2, 1])
        grid = default_grid(cp, 5)
        assert len(grid) == 25
        assert all(0.0 < s.x < cp.x_bound and s.y > 0.0 for s in grid)

    def test_grid_outside_domain_raises(self):
        cp = validate(7, [3, 2, 1])
        with pytest.raises(DomainViolation):
            verify_conjugacy(cp, [State(cp.x_bound, 1.0)])

    @pytest.mark.parametrize("case,sampler", _transport_samplers())
    def test_transport(self, case, sampler):
        rng = np.random.default_rng(6200 + case)
        for _ in range(100):
            cp = draw(case, sampler, rng)
            assert transport_residual(cp, draw_domain_state(cp, rng), steps=30) <= 1e-10

    @pytest.mark.parametrize("case,sampler", _conjugate_samplers())
    def test_equilibrium_lifts_to_fixed_pair(self, case, sampler):
        rng = np.random.default_rng(6250 + case)
        lifted = 0
        for _ in range(50):
            cp = draw(case, sampler, rng)
            for point in equilibria(cp).points:
                # 边界平衡点（y = 0 或 x = α₁/A₁）不在 h 的定义域内
                if not (0.0 < point.x < cp.x_bound and point.y > 0.0):
                    continue
                t = h_map(cp, point)
                assert abs(t.x - t.y) <= 1e-10
                assert g_map(cp, t).distance(t) <= 1e-10
                lifted += 1
        assert lifted > 0 or sampler is GAS_SAMPLERS[13]


class TestRiccatiCoeffs:
    """测试解耦后的一阶映射"""

    def test_case_10(self):
        coeffs = riccati_coeffs(validate(10, [1, 1, 4, 2]))
        assert (coeffs.a, coeffs.b, coeffs.c, coeffs.d, coeffs.lag) == (4.0, 0.0, 2.0, 1.0, 1)

    def test_case_24_is_affine(self):
        coeffs = riccati_coeffs(validate(24, [3, 1, 1]))
        assert coeffs.is_linear
        assert coeffs.lag == 2
        assert coeffs.apply(0.0) == pytest.approx(4.0 / 3.0)
        assert coeffs.apply(3.0) == pytest.approx(7.0 / 3.0)

    def test_case_22(self):
        coeffs = riccati_coeffs(validate(22, [2, 1, 1]))
        assert (coeffs.a, coeffs.b, coeffs.c, coeffs.d) == (3.0, 1.0, 1.0, 1.0)
        assert coeffs.fixed_points() == [pytest.approx(math.sqrt(3.0))]

    def test_raw_22_keeps_beta2(self):
        coeffs = riccati_coeffs(validate(22, [2, 1, 1, 3], RAW_FORM))
        assert coeffs.a == 7.0

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            RiccatiCoeffs(1.0, 0.0, 1.0, -1.0).apply(1.0)

    def test_iterate(self):
        assert RiccatiCoeffs(1.0, 0.5, 1.0, 0.0).iterate(0.0, 3) == [0.0, 1.0, 1.5, 1.75]

    def test_riccati_number_is_informational(self):
        assert RiccatiCoeffs(0.0, 1.0, 1.0, 1.0).riccati_number == pytest.approx(0.25)
        assert RiccatiCoeffs(1.0, 0.0, 0.0, 1.0).riccati_number is None

    @pytest.mark.parametrize("case", sorted(CONJUGATE_CASES))
    def test_fixed_point_is_equilibrium_height(self, case):
        rng = np.random.default_rng(6300 + case)
        for _ in range(50):
            cp = draw(case, GAS_SAMPLERS[case], rng)
            y_bar = equilibria(cp).unique.y
            fixed = riccati_coeffs(cp).fixed_points()
            assert any(abs(u - y_bar) <= 1e-9 * max(1.0, y_bar) for u in fixed)


class TestDecoupling:
    """奇偶子列服从 φ"""

    def test_split(self):
        assert riccati_split([0, 1, 2, 3, 4]) == ([0, 2, 4], [1, 3])

    def test_case_7_subsequences(self):
        cp = validate(7, [2, 1, 1])
        assert decoupling_residual(cp, State(0.3, 2.5)) <= 1e-12

    def test_constant_orbit(self):
        cp = validate(22, [2, 1, 1])
        point = equilibria(cp).unique
        even, odd = riccati_split(reduction_orbit(cp, point, 10))
        assert max(even) - min(even) <= 1e-14
        assert max(odd) - min(odd) <= 1e-14

    @pytest.mark.parametrize("case,sampler", _conjugate_samplers())
    def test_every_conjugate_case(self, case, sampler):
        rng = np.random.default_rng(6400 + case)
        for _ in range(20):
            cp = draw(case, sampler, rng)
            assert decoupling_residual(cp, draw_domain_state(cp, rng)) <= 1e-12
