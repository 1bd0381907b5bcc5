"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: conf.py
 @DateTime: 2024/3/11 11:48
 @Docs: 求解器与 oracle 参数。默认值写在 dataclass 里，settings.GEOMENT_SOLVER / GEOMENT_ORACLE 可覆盖
"""
import os
from dataclasses import dataclass, fields, replace

from django.conf import settings

from .exceptions import OutOfRange


def _settings_overrides(name):
    # 单独作为库使用时 settings 可能未配置
    if not settings.configured and not os.environ.get("DJANGO_SETTINGS_MODULE"):
        return {}
    return dict(getattr(settings, name, {}) or {})


def _build(cls, setting_name, overrides):
    values = _settings_overrides(setting_name)
    values.update({k: v for k, v in overrides.items() if v is not None})
    known = {f.name for f in fields(cls)}
    unknown = sorted(set(values) - known)
    if unknown:
        raise OutOfRange(f"{setting_name} 中存在未知参数：{', '.join(unknown)}")
    return replace(cls(), **values)


@dataclass(frozen=True)
class SolverOptions:
    """
    对称拟设求解参数。
    字段：
        n_starts - 多起点数量。
        max_iters - 每个起点的牛顿迭代上限。
        tol - 无量纲驻点残差的收敛阈值。
        max_step - 单步在 (ln r, θ, Θ) 上的最大分量（阻尼）。
        r_min, r_max - 内部解允许的 r 范围，越界视为漂向边界。
        start_r_range - 起点 r 的对数均匀分布区间。
        dedup_tol - 规范化后 (r, θ, Θ) 的去重距离。
        phase_tol - |sin θ|、|sin Θ| 小于它时视为实解。
        zero_eig_rtol - 零特征值阈值（相对最大特征值）。
        extremum_guard - Hessian 化简形式允许的最大残差。
        snap_window - 比特翻转对称的目标态，|ln r| 小于它时尝试投影到 r = 1。
        ascent_iters - 重叠上升的迭代上限。
        grid_radii, grid_phases, grid_r_range - 确定性网格起点：r 在 grid_r_range 上取 grid_radii 个对数等距点，
            θ 取 grid_phases 个 [0, 2π) 上的等分点；0 表示不用网格。
        workers - 并行进程数，1 为串行。
    """
    n_starts: int = 64
    max_iters: int = 100
    tol: float = 1e-10
    max_step: float = 1.0
    r_min: float = 1e-6
    r_max: float = 1e6
    start_r_range: tuple = (1e-2, 1e2)
    dedup_tol: float = 1e-6
    phase_tol: float = 1e-6
    zero_eig_rtol: float = 1e-7
    extremum_guard: float = 1e-8
    snap_window: float = 2e-2
    ascent_iters: int = 200
    grid_radii: int = 5
    grid_phases: int = 4
    grid_r_range: tuple = (1e-1, 1e1)
    workers: int = 1

    @classmethod
    def from_settings(cls, **overrides):
        return _build(cls, 'GEOMENT_SOLVER', overrides)


@dataclass(frozen=True)
class OracleOptions:
    """
    穷举校验参数。
    字段：
        n_starts - 随机起点数量。
        gain_tol, patience - 连续 patience 轮整体扫描的重叠增益都小于 gain_tol 即停止。
        max_sweeps - 最大扫描轮数。
        max_qubits - 稠密态矢量允许的最大比特数。
        norm_tol - 目标态归一化容差。
        distinct_tol - 统计不同最优解时的角度容差。
        workers - 并行进程数。
    """
    n_starts: int = 32
    gain_tol: float = 1e-13
    patience: int = 2
    max_sweeps: int = 500
    max_qubits: int = 10
    norm_tol: float = 1e-9
    distinct_tol: float = 1e-5
    workers: int = 1

    @classmethod
    def from_settings(cls, **overrides):
        return _build(cls, 'GEOMENT_ORACLE', overrides)
