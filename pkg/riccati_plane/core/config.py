"""
ConfigManager - 配置加载
读取 JSON 配置，合并到内置默认值之上，并初始化日志
"""
import copy
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from ..utils.json_utils import relaxed_json_loads
from .errors import ConfigError

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "plane_config.json"

LOG_FORMAT = '[%(asctime)s] [%(levelname)s] %(message)s'
LOG_DATEFMT = '%H:%M:%S'

DEFAULT_CONFIG: Dict[str, Dict[str, Any]] = {
    "simulation": {
        "max_iters": 100000,
        "conv_tol": 1e-9,
        "period_tol": 1e-9,
        "diverge_y": 1e10,
        "diverge_x": 1e-10,
        "window": 8,
        "cycle_separation": 1e-6,
    },
    "verification": {
        "grid_size": 20,
        "conjugacy_threshold": 1e-12,
        "eigen_threshold": 1e-9,
        "nonhyperbolic_tol": 1e-9,
    },
    "sweep": {
        "workers": 4,
        "ics": [[0.5, 0.5], [1.0, 0.0], [2.0, 3.0]],
    },
    "logging": {
        "level": "INFO",
        "file": None,
        "format": LOG_FORMAT,
    },
}


class ConfigManager:
    """配置管理器"""

    def __init__(self, config_path: Optional[str] = None):
        """
        初始化配置管理器

        Args:
            config_path: JSON 配置路径，默认为随包的 plane_config.json
        """
        self.config_file = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
        self.logger = logging.getLogger(f"{__name__}.ConfigManager")

    def load_config(self) -> Dict[str, Any]:
        """
        加载配置文件并合并到默认值之上

        Returns:
            dict: {"success": bool, "msg": str, "config": dict}
        """
        if not self.config_file.exists():
            self.logger.warning(f"配置文件不存在: {self.config_file}，使用默认配置")
            return {
                "success": True,
                "msg": "using default configuration",
                "config": self.default_config(),
            }

        try:
            text = self.config_file.read_text(encoding='utf-8')
            loaded = relaxed_json_loads(text)
        except (OSError, json.JSONDecodeError) as e:
            self.logger.error(f"读取配置失败: {e}")
            return {
                "success": False,
                "msg": f"failed to read configuration {self.config_file}: {e}",
                "config": {},
            }

        try:
            config = merge_config(self.default_config(), loaded)
        except ConfigError as e:
            return {"success": False, "msg": str(e), "config": {}}

        return {
            "success": True,
            "msg": f"configuration loaded from {self.config_file}",
            "config": config,
        }

    def require_config(self) -> Dict[str, Any]:
        """
        同 ``load_config``，失败时抛出异常

        Raises:
            ConfigError: 文件不可读或格式错误
        """
        result = self.load_config()
        if not result["success"]:
            raise ConfigError(result["msg"])
        return result["config"]

    @staticmethod
    def default_config() -> Dict[str, Dict[str, Any]]:
        return copy.deepcopy(DEFAULT_CONFIG)


def merge_config(base: Dict[str, Dict[str, Any]], loaded: Any) -> Dict[str, Dict[str, Any]]:
    """
    按节把 ``loaded`` 覆盖到 ``base`` 上

    名为 ``description`` 的键仅作说明，直接丢弃；
    未知的节原样保留，供其他工具携带自己的设置。
    """
    if not isinstance(loaded, dict):
        raise ConfigError("configuration root must be a JSON object")
    merged = copy.deepcopy(base)
    for section, values in loaded.items():
        if section in ("version", "description"):
            continue
        if not isinstance(values, dict):
            raise ConfigError(f"section '{section}' must be an object")
        target = merged.setdefault(section, {})
        for key, value in values.items():
            if key == "description":
                continue
            target[key] = value
    _check_simulation_section(merged["simulation"])
    return merged


def _check_simulation_section(section: Dict[str, Any]) -> None:
    for key in ("max_iters", "conv_tol", "period_tol", "diverge_y", "diverge_x", "window"):
        value = section.get(key)
        if not isinstance(value, (int, float)) or isinstance(value, bool) or value <= 0:
            raise ConfigError(f"simulation.{key} must be a positive number, got {value!r}")
    if section["window"] < 2:
        raise ConfigError("simulation.window must be >= 2")


def configure_logging(config: Dict[str, Any], verbose: bool = False) -> None:
    """根据 ``logging`` 节配置根日志（仅供 CLI 入口调用）"""
    section = config.get("logging", {})
    level_name = "DEBUG" if verbose else str(section.get("level", "INFO")).upper()
    level = getattr(logging, level_name, logging.INFO)

    handlers = [logging.StreamHandler()]
    log_file = section.get("file")
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))

    logging.basicConfig(
        level=level,
        format=section.get("format", LOG_FORMAT),
        datefmt=LOG_DATEFMT,
        handlers=handlers,
        force=True,
    )
