"""
手工编辑配置文件的宽松 JSON 解析

处理手改配置中常见的问题：
- 尾随逗号                          → ,} / ,]
- 单行注释                          → // ...
- 多行注释                          → /* ... */
"""

import json
import re
from typing import Any


def relaxed_json_loads(text: str) -> Any:
    """
    解析 JSON，失败后去除注释和尾随逗号再试一次

    Args:
        text: JSON 文本，可能经过手工编辑

    Returns:
        解析得到的 Python 对象

    Raises:
        json.JSONDecodeError: 清理后仍无法解析
    """
    if not text or not text.strip():
        raise json.JSONDecodeError("empty document", text or "", 0)

    try:
        return json.loads(text)
    except json.JSONDecodeError:
        pass

    return json.loads(_clean_json_string(text))


def _clean_json_string(text: str) -> str:
    """移除字符串字面量之外的注释和尾随逗号"""
    cleaned = _strip_comments(text.strip())

    for _ in range(10):
        prev = cleaned
        cleaned = re.sub(r',\s*([}\]])', r'\1', cleaned)
        if cleaned == prev:
            break

    return cleaned


def _strip_comments(text: str) -> str:
    out = []
    i = 0
    in_string = False
    while i < len(text):
        ch = text[i]
        if in_string:
            out.append(ch)
            if ch == '\\' and i + 1 < len(text):
                out.append(text[i + 1])
                i += 2
                continue
            if ch == '"':
                in_string = False
            i += 1
            continue
        if ch == '"':
            in_string = True
            out.append(ch)
            i += 1
        elif text.startswith('//', i):
            end = text.find('\n', i)
            i = len(text) if end == -1 else end
        elif text.startswith('/*', i):
            end = text.find('*/', i + 2)
            i = len(text) if end == -1 else end + 2
        else:
            out.append(ch)
            i += 1
    return ''.join(out)
