"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: qstate.py
 @DateTime: 2024/3/12 9:15
 @Docs: 目标态与乘积态：Dicke 叠加、稠密态矢量、重叠、f 向量统计
"""
import logging
from dataclasses import dataclass
from functools import reduce

import numpy as np
from django.db import models
from scipy.special import comb

from .exceptions import (AllZero, BadLength, DimensionMismatch, NonFinite, OutOfRange,
                         TooLarge)

logger = logging.getLogger(__name__)

# 稠密态矢量只在 oracle 一侧使用
MAX_DENSE_QUBITS = 20


def _frozen(values, dtype=float):
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


def binomials(q):
    """C(q, p)，p = 0..q"""
    return comb(q, np.arange(q + 1))


@dataclass(frozen=True, eq=False)
class FVector:
    """
    Dicke 基下的实系数 f_0..f_q，欧氏范数为 1。
    字段：
        q - 比特数。
        coeffs - 长度 q+1 的只读数组，第 p 项为 f_p（未吸收组合因子）。
    """
    q: int
    coeffs: np.ndarray

    @classmethod
    def from_weighted(cls, q, raw_weighted):
        """由吸收了组合因子的系数 f̃_p 构造（数值研究里引用的 f 向量都是这种写法）"""
        weighted = np.asarray(raw_weighted, dtype=float)
        if weighted.shape != (q + 1,):
            raise BadLength(f"f 向量长度应为 q+1={q + 1}，实际为 {weighted.size}")
        return make_fvector(q, weighted / np.sqrt(binomials(q)))

    @property
    def support(self):
        return tuple(int(p) for p in np.flatnonzero(self.coeffs))

    def as_tuple(self):
        return tuple(float(x) for x in self.coeffs)

    def __repr__(self):
        return f"FVector(q={self.q}, coeffs={np.array2string(self.coeffs, precision=6)})"


@dataclass(frozen=True, eq=False)
class WeightedFVector:
    """f̃_p = sqrt(C(q,p))·f_p，g 函数只接受这种形式"""
    q: int
    weighted: np.ndarray

    @property
    def support(self):
        scale = np.max(np.abs(self.weighted))
        return tuple(int(p) for p in np.flatnonzero(np.abs(self.weighted) > 1e-14 * scale))


@dataclass(frozen=True, eq=False)
class StateVector:
    """
    2^q 维复振幅。基矢下标按比特串 i j k… 读取，第 0 个比特是最高位。
    """
    q: int
    amplitudes: np.ndarray

    @property
    def norm(self):
        return float(np.linalg.norm(self.amplitudes))

    def tensor(self):
        return self.amplitudes.reshape((2,) * self.q)


@dataclass(frozen=True)
class ProductQubit:
    """单比特态 (cos(α/2), e^{iβ} sin(α/2))，α ∈ [0, π]，β ∈ [0, 2π)"""
    alpha: float
    beta: float

    @property
    def vector(self):
        return np.array([np.cos(self.alpha / 2), np.exp(1j * self.beta) * np.sin(self.alpha / 2)])

    @classmethod
    def from_vector(cls, vec):
        """由任意非零二维矢量得到角度，去掉整体相位"""
        a0, a1 = np.asarray(vec, dtype=complex) / np.linalg.norm(vec)
        alpha = 2 * np.arccos(np.clip(abs(a0), 0.0, 1.0))
        if abs(a0) < 1e-15 or abs(a1) < 1e-15:
            beta = 0.0
        else:
            beta = float(np.mod(np.angle(a1) - np.angle(a0), 2 * np.pi))
        return cls(float(alpha), beta)


def _check_dense(q):
    if q > MAX_DENSE_QUBITS:
        raise TooLarge(f"稠密态矢量最多支持 {MAX_DENSE_QUBITS} 个比特，实际 q={q}")


def _popcounts(q):
    idx = np.arange(2 ** q)
    return ((idx[:, None] >> np.arange(q)) & 1).sum(axis=1)


def make_fvector(q, raw):
    """
    作用：校验并归一化原始系数。
    参数：
        q - 比特数，至少为 2。
        raw - 长度 q+1 的实数序列。
    """
    if q < 2:
        raise OutOfRange(f"比特数 q 至少为 2，实际为 {q}")
    arr = np.asarray(raw, dtype=float).ravel()
    if arr.size != q + 1:
        raise BadLength(f"f 向量长度应为 q+1={q + 1}，实际为 {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise NonFinite("f 向量含有 NaN 或 Inf")
    norm = np.linalg.norm(arr)
    if norm == 0:
        raise AllZero("f 向量不能全为 0")
    return FVector(int(q), _frozen(arr / norm))


def weight_fvector(f):
    return WeightedFVector(f.q, _frozen(np.sqrt(binomials(f.q)) * f.coeffs))


def dicke_state(q, p):
    """|D_p⟩：恰有 p 个 1 的所有基矢等权叠加"""
    if not 0 <= p <= q:
        raise OutOfRange(f"p 应在 [0, {q}] 内，实际为 {p}")
    _check_dense(q)
    amps = np.where(_popcounts(q) == p, 1.0 / np.sqrt(comb(q, p)), 0.0).astype(complex)
    return StateVector(q, _frozen(amps, complex))


def superpose_dicke(f):
    """Σ_p f_p |D_p⟩"""
    _check_dense(f.q)
    weight = _popcounts(f.q)
    amps = f.coeffs[weight] / np.sqrt(binomials(f.q)[weight])
    return StateVector(f.q, _frozen(amps, complex))


def product_state(qubits, global_phase=0.0):
    """|a_0⟩⊗|a_1⟩⊗…，第 0 个比特在最高位"""
    qubits = list(qubits)
    if not qubits:
        raise BadLength("乘积态至少需要一个比特")
    _check_dense(len(qubits))
    amps = reduce(np.kron, [qb.vector for qb in qubits]) * np.exp(1j * global_phase)
    return StateVector(len(qubits), _frozen(amps, complex))


def overlap(a, b):
    """⟨a|b⟩ = Σ conj(a_i)·b_i"""
    if a.q != b.q:
        raise DimensionMismatch(f"比特数不一致：{a.q} 与 {b.q}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def fvector_stats(f):
    """
    f 向量的均值与方差：E = Σf_p/(q+1)，Var = Σ(f_p − E)²/q。
    两个除数不同，照原定义实现。
    """
    mean = float(np.sum(f.coeffs)) / (f.q + 1)
    variance = float(np.sum((f.coeffs - mean) ** 2)) / f.q
    return mean, variance


class Sampler(models.TextChoices):
    UNIFORM_SPHERE = 'UniformSphere', '单位球面均匀'
    NON_NEGATIVE_SPHERE = 'NonNegativeSphere', '非负象限'


def sample_fvector(q, seed, index, sampler=Sampler.UNIFORM_SPHERE):
    """第 index 个随机 f 向量，随机流由 (seed, index) 决定，与执行顺序无关"""
    rng = np.random.default_rng([seed, index])
    raw = rng.standard_normal(q + 1)
    if sampler == Sampler.NON_NEGATIVE_SPHERE:
        raw = np.abs(raw)
    return make_fvector(q, raw)
