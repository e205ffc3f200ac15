"""
riccati-plane API
供 CLI 调用的字典返回接口：classify_case、simulate_case、
verify_case、sweep_case、describe_case

所有函数返回 {"success": bool, "msg": str, "data": dict}；
库错误时另带 "error"（异常类名）与 "exit_code"。
"""
import logging
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple, Union

from .analysis.behavior import predict
from .analysis.conjugacy import (
    CONJUGATE_CASES,
    decoupling_residual,
    default_grid,
    riccati_coeffs,
    verify_conjugacy,
)
from .analysis.equilibria import equilibria
from .analysis.stability import classify_equilibria, spectrum_numeric
from .core.config import DEFAULT_CONFIG
from .core.errors import RiccatiPlaneError, ValidationError
from .core.model import REDUCED_FORM, CaseParams, State
from .core.registry import case_spec, missing_symbols, parse_case_id, validate_mapping
from .simulation.simulate import SimOptions, iterate, observe
from .simulation.sweep import SweepSpec, find_flips, run_sweep

logger = logging.getLogger(__name__)

StateLike = Union[State, Sequence[float]]


def _error_result(e: RiccatiPlaneError) -> Dict[str, Any]:
    return {
        "success": False,
        "msg": str(e),
        "error": type(e).__name__,
        "exit_code": e.exit_code,
        "data": {},
    }


def _as_state(value: StateLike) -> State:
    if isinstance(value, State):
        return value
    x, y = value
    return State(x, y)


def _section(config: Optional[Dict[str, Any]], name: str) -> Dict[str, Any]:
    merged = dict(DEFAULT_CONFIG[name])
    if config:
        merged.update(config.get(name, {}))
    return merged


def build_case_params(case, params: Dict[str, Optional[float]], form: str = REDUCED_FORM) -> CaseParams:
    """
    校验特例的 ``{symbol: value}``；值为 ``None`` 视为缺失

    Raises:
        ValidationError: 未知特例、缺少或多余符号、非正值
    """
    index = parse_case_id(case)
    missing = missing_symbols(index, params, form)
    if missing:
        spec = case_spec(index, form)
        flags = ", ".join(f"{name} (--{name})" for name in missing)
        raise ValidationError(f"Case {spec.label} is missing parameter(s): {flags}")
    present = {k: v for k, v in params.items() if v is not None}
    return validate_mapping(index, present, form)


def describe_case(case, form: str = REDUCED_FORM) -> Dict[str, Any]:
    """单个特例的静态描述"""
    try:
        spec = case_spec(case, form)
    except RiccatiPlaneError as e:
        return _error_result(e)
    data = spec.to_dict()
    data["conjugate"] = spec.id in CONJUGATE_CASES
    data["reduction_lag"] = spec.reduction_lag
    return {"success": True, "msg": f"{spec.label}", "data": data}


def classify_case(case, params: Dict[str, Optional[float]], form: str = REDUCED_FORM,
                  config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """单个参数点的预测、平衡点与局部分类"""
    try:
        cp = build_case_params(case, params, form)
        tol = _section(config, "verification")["nonhyperbolic_tol"]
        eqs = equilibria(cp)
        prediction = predict(cp)
        local = classify_equilibria(cp, eqs, tol)
    except RiccatiPlaneError as e:
        return _error_result(e)
    return {
        "success": True,
        "msg": f"(11,{cp.case}): {prediction.kind.value}",
        "data": {
            "case_params": cp.to_dict(),
            "prediction": prediction.to_dict(),
            "equilibria": eqs.to_dict(),
            "stability": [entry.to_dict() for entry in local],
        },
    }


def simulate_case(case, params: Dict[str, Optional[float]], ic: StateLike,
                  form: str = REDUCED_FORM, config: Optional[Dict[str, Any]] = None,
                  **overrides) -> Dict[str, Any]:
    """
    迭代一条轨道

    ``data["orbit"]`` 即 ``Orbit`` 对象本身，调用方可直接导出。
    """
    try:
        cp = build_case_params(case, params, form)
        opts = SimOptions.from_config(config, **overrides)
        orbit = iterate(cp, _as_state(ic), opts)
    except RiccatiPlaneError as e:
        return _error_result(e)
    observed = observe(orbit, opts)
    return {
        "success": True,
        "msg": orbit.summary(),
        "data": {
            "orbit": orbit,
            "observed": observed.to_dict(),
            "summary": orbit.summary(),
            "options": opts.to_dict(),
        },
    }


def _eigen_report(cp: CaseParams, tol: float, eigen_threshold: float) -> Tuple[list, bool]:
    entries = []
    ok = True
    for entry in classify_equilibria(cp, tol=tol):
        numeric = spectrum_numeric(cp, entry.point)
        gap = numeric.distance(entry.spectrum)
        ok = ok and gap <= eigen_threshold
        item = entry.to_dict()
        item["numeric"] = numeric.to_dict()
        item["gap"] = gap
        entries.append(item)
    return entries, ok


def verify_case(case, params: Dict[str, Optional[float]], form: str = REDUCED_FORM,
                config: Optional[Dict[str, Any]] = None, grid_size: Optional[int] = None) -> Dict[str, Any]:
    """
    共轭残差，以及闭式谱与数值谱的比较

    任一检查超过阈值时 ``data["passed"]`` 为 False；
    自治 Riccati 特例只报告谱。
    """
    section = _section(config, "verification")
    size = int(grid_size or section["grid_size"])
    try:
        cp = build_case_params(case, params, form)
        eigen, eigen_ok = _eigen_report(cp, section["nonhyperbolic_tol"], section["eigen_threshold"])
        data: Dict[str, Any] = {
            "case_params": cp.to_dict(),
            "eigen": eigen,
            "eigen_ok": eigen_ok,
            "eigen_threshold": section["eigen_threshold"],
        }
        if cp.case in CONJUGATE_CASES:
            residual = verify_conjugacy(cp, default_grid(cp, size))
            sample_state = State(cp.x_bound / 2.0, 1.0)
            data.update({
                "conjugate": True,
                "grid_size": size,
                "residual": residual,
                "threshold": section["conjugacy_threshold"],
                "conjugacy_ok": residual <= section["conjugacy_threshold"],
                "riccati": riccati_coeffs(cp).to_dict(),
                "decoupling_residual": decoupling_residual(cp, sample_state),
            })
        else:
            data.update({
                "conjugate": False,
                "note": "autonomous Riccati; conjugacy check not applicable",
                "conjugacy_ok": True,
            })
    except RiccatiPlaneError as e:
        return _error_result(e)

    data["passed"] = bool(data["eigen_ok"] and data["conjugacy_ok"])
    msg = "verification passed" if data["passed"] else "verification failed"
    if not data["passed"]:
        logger.warning(f"(11,{cp.case}) 校验未通过")
    return {"success": True, "msg": msg, "data": data}


def sweep_case(case, varying: str, lo: float, hi: float, steps: int,
               fixed: Dict[str, Optional[float]], ics: Optional[Iterable[StateLike]] = None,
               form: str = REDUCED_FORM, config: Optional[Dict[str, Any]] = None,
               workers: Optional[int] = None, **overrides) -> Dict[str, Any]:
    """单参数扫描，结果按参数值排序"""
    section = _section(config, "sweep")
    try:
        ic_list = [_as_state(ic) for ic in (ics if ics is not None else section["ics"])]
        spec = SweepSpec(
            case=parse_case_id(case),
            varying=varying,
            lo=float(lo),
            hi=float(hi),
            steps=int(steps),
            fixed={k: v for k, v in fixed.items() if v is not None},
            ics=tuple(ic_list),
            form=form,
        )
        opts = SimOptions.from_config(config, **overrides)
        rows = run_sweep(spec, opts, int(workers or section["workers"]))
    except RiccatiPlaneError as e:
        return _error_result(e)
    return {
        "success": True,
        "msg": f"{len(rows)} row(s)",
        "data": {
            "case": f"11,{spec.case}",
            "varying": spec.varying,
            "rows": [row.to_dict() for row in rows],
            "flips": [
                {"between": [a, b], "from": before, "to": after}
                for a, b, before, after in find_flips(rows)
            ],
        },
    }
