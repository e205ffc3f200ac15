"""
绘图数据输出：轨道与扫描结果导出为 CSV 或带版本号的 JSON

写文件时持有同目录的 ``.lock``，并行扫描写同一路径时行不会交错。
"""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, Union

from filelock import FileLock

from .simulate import Orbit

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
ORBIT_HEADER = ("n", "x", "y")
SWEEP_HEADER = ("param", "predicted", "observed", "limit_x", "limit_y")

PathLike = Union[str, Path]


def _format_float(value) -> str:
    if value is None or value == "":
        return ""
    return repr(float(value))


def orbit_csv_text(orbit: Orbit) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(ORBIT_HEADER)
    for n, s in enumerate(orbit.states):
        writer.writerow((n, repr(s.x), repr(s.y)))
    return buffer.getvalue()


def orbit_json_payload(orbit: Orbit, observed: Dict[str, Any] = None) -> Dict[str, Any]:
    payload = {"schema": SCHEMA_VERSION, "kind": "orbit"}
    payload.update(orbit.to_dict())
    if observed is not None:
        payload["observed"] = observed
    return payload


def sweep_csv_text(rows: Iterable[Dict[str, Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        writer.writerow((
            _format_float(row["param"]),
            row["predicted"],
            row["observed"],
            _format_float(row.get("limit_x")),
            _format_float(row.get("limit_y")),
        ))
    return buffer.getvalue()


def write_text_locked(path: PathLike, text: str) -> Path:
    """持有 ``path.lock`` 时把 ``text`` 写入 ``path``"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with FileLock(str(path) + ".lock"):
        path.write_text(text, encoding="utf-8")
    logger.info(f"已写入 {path}")
    return path


def write_orbit(orbit: Orbit, path: PathLike, fmt: str = "csv", observed: Dict[str, Any] = None) -> Path:
    """把轨道写为 ``csv`` (n,x,y) 或 ``json`` (schema 1)"""
    if fmt == "csv":
        return write_text_locked(path, orbit_csv_text(orbit))
    if fmt == "json":
        text = json.dumps(orbit_json_payload(orbit, observed), indent=2, ensure_ascii=False)
        return write_text_locked(path, text)
    raise ValueError(f"unknown export format: {fmt}")


def write_sweep(rows, path: PathLike, fmt: str = "csv", meta: Dict[str, Any] = None) -> Path:
    """把扫描行写为 ``csv`` 或 ``json`` (schema 1)"""
    rows = list(rows)
    if fmt == "csv":
        return write_text_locked(path, sweep_csv_text(rows))
    if fmt == "json":
        payload = {"schema": SCHEMA_VERSION, "kind": "sweep", "rows": rows}
        if meta:
            payload.update(meta)
        return write_text_locked(path, json.dumps(payload, indent=2, ensure_ascii=False))
    raise ValueError(f"unknown export format: {fmt}")
