"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: validators.py
 @DateTime: 2024/3/18 14:05
 @Docs: 命令行参数校验。每个 validate_* 返回错误信息或 None，由命令统一收集后报错
"""
import math


def parse_coefficients(text):
    """
    作用：解析逗号分隔的系数列表。
    返回：(数值列表, 错误信息列表)
    """
    values, errors = [], []
    if not text or not text.strip():
        return values, ["--f 不能为空，格式如 0,1,0,0,0"]
    for position, item in enumerate(text.split(','), start=1):
        item = item.strip()
        if not item:
            errors.append(f"--f 第 {position} 项为空")
            continue
        try:
            values.append(float(item))
        except ValueError:
            errors.append(f"--f 第 {position} 项 '{item}' 不是数字")
    return values, errors


def validate_qubit_count(q, minimum, maximum=None, even=False):
    if q < minimum:
        return f"--q 至少为 {minimum}，实际为 {q}"
    if maximum is not None and q > maximum:
        return f"--q 最多为 {maximum}，实际为 {q}"
    if even and q % 2:
        return f"--q 必须是偶数，实际为 {q}"
    return None


def validate_coefficient_count(values, q):
    if len(values) != q + 1:
        return f"--f 应有 q+1={q + 1} 个系数，实际为 {len(values)} 个"
    if not all(math.isfinite(v) for v in values):
        return "--f 含有 NaN 或 Inf"
    if not any(values):
        return "--f 不能全为 0"
    return None


def validate_positive(name, value):
    if value is None or value < 1:
        return f"{name} 必须是正整数，实际为 {value}"
    return None


def validate_non_negative(name, value):
    if value is None or value < 0:
        return f"{name} 必须是非负整数，实际为 {value}"
    return None


def validate_choice(name, value, choices):
    if value not in choices:
        return f"{name} 只能取 {', '.join(choices)}，实际为 {value}"
    return None
