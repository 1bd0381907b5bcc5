"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: evenodd.py
 @DateTime: 2024/3/15 9:30
 @Docs: 奇偶比特分别置换对称的 W 类态：r_a、r_b 闭式解、临界距离与 f 扫描
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import Degenerate, NonFinite, NotNormalized, OutOfRange
from .qstate import StateVector, _frozen

logger = logging.getLogger(__name__)

NORM_TOL = 1e-12


@dataclass(frozen=True)
class EvenOddSpec:
    """
    W 类态 f|100…⟩ + m|010…⟩ + f|001…⟩ + …，振幅 f、m 交替出现。
    字段：
        q - 偶数，至少为 4。
        f - 第 1、3、5… 个比特（从 0 计为偶数位）上的振幅。
        m - 其余比特上的振幅。
    """
    q: int
    f: float
    m: float

    def __post_init__(self):
        if self.q < 4 or self.q % 2:
            raise OutOfRange(f"q 必须是不小于 4 的偶数，实际为 {self.q}")
        if not (math.isfinite(self.f) and math.isfinite(self.m)):
            raise NonFinite("f、m 必须是有限数")
        total = self.q / 2 * (self.f ** 2 + self.m ** 2)
        if abs(total - 1.0) > NORM_TOL:
            raise NotNormalized(f"(q/2)(f²+m²) = {total:.15g}，应为 1")

    @classmethod
    def from_f(cls, q, f):
        """由 f 和归一化条件取 m 的正根"""
        m = math.sqrt(max(2.0 / q - f * f, 0.0))
        return cls(q, float(f), m)


@dataclass(frozen=True)
class EvenOddResult:
    spec: EvenOddSpec
    ra_sq: float
    rb_sq: float
    cos_relation: float
    d2_norm: float

    def to_dict(self):
        return {'q': self.spec.q, 'f': self.spec.f, 'm': self.spec.m, 'ra_sq': self.ra_sq,
                'rb_sq': self.rb_sq, 'cos_relation': self.cos_relation, 'd2_norm': self.d2_norm}


@dataclass(frozen=True)
class EvenOddRow:
    f: float
    m: float
    d2_norm: float
    ra_sq: float
    rb_sq: float
    is_w_point: bool


def ra_sq_closed(f, m, q):
    """
    作用：奇数位一族的振幅比平方 r_a²；r_b² = ra_sq_closed(m, f, q)。
        采用无抵消的等价写法
            r_a² = [q(f²q² + 2m²c)/(S + m²q) − c] / (4(q−2)(q−1))
            c = q² − 8q + 8，S = sqrt(f⁴q² + 2f²m²c + m⁴q²)
        f = m 时为 1/(q−1)，m = 0 时为 2/(q−2)，f = 0 时为 0，无需单独处理极限。
    """
    if f == 0 and m == 0:
        raise Degenerate("f 与 m 不能同时为 0")
    c = q * q - 8 * q + 8
    f2, m2 = f * f, m * m
    s = math.sqrt(f2 * f2 * q * q + 2.0 * f2 * m2 * c + m2 * m2 * q * q)
    value = (q * (f2 * q * q + 2.0 * m2 * c) / (s + m2 * q) - c) / (4.0 * (q - 2) * (q - 1))
    return max(value, 0.0)


def evenodd_stationarity(f, m, q, r_a, r_b):
    """两个驻点条件（已去掉公共正因子），在闭式解处应为 0"""
    s = math.copysign(1.0, f * m) if f * m else 1.0
    e1 = 2 * f * m - m * m * q * r_a * r_b * s - (q - 2) * f * m * r_a * r_a
    e2 = 2 * f * m - f * f * q * r_a * r_b * s - (q - 2) * f * m * r_b * r_b
    return e1, e2


def evenodd_distance(spec):
    """
    归一化乘积态（N_a = N_b = 1）下的临界距离平方
        D² = 2 − q(1+r_a²)^{−q/4}(1+r_b²)^{−q/4}·sqrt(2|fm|r_a r_b + f²r_a² + m²r_b²)
    """
    q, f, m = spec.q, spec.f, spec.m
    ra_sq = ra_sq_closed(f, m, q)
    rb_sq = ra_sq_closed(m, f, q)
    ra, rb = math.sqrt(ra_sq), math.sqrt(rb_sq)
    overlap = (q * (1.0 + ra_sq) ** (-q / 4) * (1.0 + rb_sq) ** (-q / 4)
               * math.sqrt(2.0 * abs(f * m) * ra * rb + f * f * ra_sq + m * m * rb_sq))
    return EvenOddResult(
        spec=spec,
        ra_sq=ra_sq,
        rb_sq=rb_sq,
        cos_relation=math.copysign(1.0, f * m) if f * m else 1.0,
        d2_norm=2.0 - overlap,
    )


def w_like_state(spec):
    """显式的 2^q 维态矢量；第 k 个比特为 1 的基矢下标是 1 << (q−1−k)"""
    q = spec.q
    amps = np.zeros(2 ** q, dtype=complex)
    for k in range(q):
        amps[1 << (q - 1 - k)] = spec.f if k % 2 == 0 else spec.m
    return StateVector(q, _frozen(amps, complex))


def evenodd_sweep(q, n_points):
    """
    f 在 (0, sqrt(2/q)) 内等距取 n_points 个内点，m 取归一化的正根；
    另加 f = m = 1/√q 一行（W 态），按 f 排序。
    """
    if n_points < 3:
        raise OutOfRange(f"n_points 至少为 3，实际为 {n_points}")
    grid = np.linspace(0.0, math.sqrt(2.0 / q), n_points + 2)[1:-1]
    points = [(float(f), False) for f in grid] + [(1.0 / math.sqrt(q), True)]
    rows = []
    for f, is_w in sorted(points):
        spec = EvenOddSpec(q, f, f) if is_w else EvenOddSpec.from_f(q, f)
        result = evenodd_distance(spec)
        rows.append(EvenOddRow(spec.f, spec.m, result.d2_norm, result.ra_sq, result.rb_sq, is_w))
    logger.debug("q=%d 奇偶扫描 %d 行", q, len(rows))
    return rows
