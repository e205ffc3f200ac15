"""通用工具"""
from .json_utils import relaxed_json_loads  # noqa: F401
