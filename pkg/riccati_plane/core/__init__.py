"""
riccati_plane.core - 状态、参数、映射、特例表与配置
"""
from .errors import (
    RiccatiPlaneError,
    ValidationError,
    UnknownCase,
    ArityMismatch,
    NonPositiveParameter,
    InvalidState,
    ConfigError,
    ZeroDenominator,
    ForbiddenInitial,
    DomainViolation,
    NotConjugateCase,
    NotAFixedPoint,
    NoConvergence,
)
from .model import (
    State,
    FullParams,
    CaseParams,
    Jacobian2,
    step_general,
    step_case,
    jacobian,
    embed,
    y_map,
)
from .registry import (
    CASE_IDS,
    CaseSpec,
    YMapKind,
    case_spec,
    validate,
    validate_mapping,
    normalize_1122,
    dump_table,
)
from .config import ConfigManager

__all__ = [
    'RiccatiPlaneError', 'ValidationError', 'UnknownCase', 'ArityMismatch',
    'NonPositiveParameter', 'InvalidState', 'ConfigError', 'ZeroDenominator',
    'ForbiddenInitial', 'DomainViolation', 'NotConjugateCase', 'NotAFixedPoint',
    'NoConvergence',
    'State', 'FullParams', 'CaseParams', 'Jacobian2',
    'step_general', 'step_case', 'jacobian', 'embed', 'y_map',
    'CASE_IDS', 'CaseSpec', 'YMapKind', 'case_spec', 'validate',
    'validate_mapping', 'normalize_1122', 'dump_table',
    'ConfigManager',
]
