"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: oracle.py
 @DateTime: 2024/3/14 10:40
 @Docs: 不做对称假设的穷举校验：在一般乘积态上交替优化单比特，求最大重叠
"""
import logging
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .conf import OracleOptions, SolverOptions
from .exceptions import NonMonotoneAscent, NotNormalized, TooLarge
from .parallel import run_ordered
from .qstate import ProductQubit, superpose_dicke
from .solver import multistart_solve
from .symmetric import TWO_PI

logger = logging.getLogger(__name__)

# 单次更新允许的重叠下降（舍入误差）
ASCENT_SLACK = 1e-12
# 统计不同最优解时，重叠与 g_max 的差距
OPTIMUM_SLACK = 1e-9
GAP_TOLERANCE = 1e-6
POLE_TOL = 1e-4


@dataclass(frozen=True)
class OracleResult:
    g_max: float
    d2_unnorm: float
    d2_norm: float
    best_product: tuple
    n_distinct_optima: int
    n_starts: int
    seed: int

    def to_dict(self):
        return {
            'g_max': self.g_max, 'd2_unnorm': self.d2_unnorm, 'd2_norm': self.d2_norm,
            'best_product': [{'alpha': qb.alpha, 'beta': qb.beta} for qb in self.best_product],
            'n_distinct_optima': self.n_distinct_optima, 'n_starts': self.n_starts, 'seed': self.seed,
        }


def _contract(tensor, vectors, k):
    """ψ 与除第 k 个以外所有比特的 conj(a_j) 收缩，得到第 k 个比特的最优方向（未归一化）"""
    others = [vectors[j].conj() for j in range(len(vectors)) if j != k]
    rows = np.moveaxis(tensor, k, 0).reshape(2, -1)
    if not others:
        return rows[:, 0]
    return rows @ reduce(np.kron, others)


def _ascend(tensor, vectors, opts):
    """交替更新直到连续 patience 轮增益都低于 gain_tol；返回 (重叠, 各比特矢量, 轮数)"""
    q = len(vectors)
    vectors = [v / np.linalg.norm(v) for v in vectors]
    overlap = abs(np.vdot(reduce(np.kron, vectors), tensor.ravel()))
    quiet = 0
    sweeps = 0
    while sweeps < opts.max_sweeps and quiet < opts.patience:
        previous = overlap
        for k in range(q):
            v = _contract(tensor, vectors, k)
            value = float(np.linalg.norm(v))
            if value < overlap - ASCENT_SLACK:
                raise NonMonotoneAscent(f"第 {k} 个比特更新后重叠从 {overlap:.15g} 降到 {value:.15g}")
            if value > 0:
                vectors[k] = v / value
            overlap = max(overlap, value)
        sweeps += 1
        quiet = quiet + 1 if overlap - previous < opts.gain_tol else 0
    return overlap, vectors, sweeps


def _oracle_start(tensor, seed, index, opts):
    rng = np.random.default_rng([seed, index])
    q = tensor.ndim
    alphas = rng.uniform(0.0, math.pi, size=q)
    betas = rng.uniform(0.0, TWO_PI, size=q)
    vectors = [ProductQubit(a, b).vector for a, b in zip(alphas, betas)]
    overlap, vectors, sweeps = _ascend(tensor, vectors, opts)
    return overlap, [ProductQubit.from_vector(v) for v in vectors], sweeps


def _gauge_fixed_angles(qubits):
    """β 相对第 0 个比特；位于极点（α≈0 或 π）的比特 β 无意义，记为 0"""
    def at_pole(qb):
        return qb.alpha < POLE_TOL or math.pi - qb.alpha < POLE_TOL

    ref = 0.0 if at_pole(qubits[0]) else qubits[0].beta
    return [(qb.alpha, 0.0 if at_pole(qb) else qb.beta - ref) for qb in qubits]


def _same_optimum(a, b, tol):
    for (alpha_a, beta_a), (alpha_b, beta_b) in zip(a, b):
        if abs(alpha_a - alpha_b) > tol:
            return False
        if abs((beta_a - beta_b + math.pi) % TWO_PI - math.pi) > tol:
            return False
    return True


def _count_distinct(products, tol):
    distinct = []
    for qubits in products:
        angles = _gauge_fixed_angles(qubits)
        if not any(_same_optimum(angles, known, tol) for known in distinct):
            distinct.append(angles)
    return len(distinct)


def oracle_min_distance(psi, n_starts=None, seed=0, opts=None):
    """
    作用：在全部 2q 个单比特角度上最大化 |⟨ψ|φ⟩|。
        固定其余比特时，最优的单比特态就是 ψ 与其余比特收缩后的归一化矢量，
        因此每一步都是精确最优，重叠单调不减。
    参数：
        psi - StateVector，需已归一化且 q ≤ max_qubits。
        n_starts - 随机起点数量，默认取 opts.n_starts。
        seed - 第 i 个起点的随机流由 (seed, i) 决定。
    """
    opts = opts or OracleOptions.from_settings()
    n_starts = opts.n_starts if n_starts is None else n_starts
    if psi.q > opts.max_qubits:
        raise TooLarge(f"oracle 最多支持 {opts.max_qubits} 个比特，实际 q={psi.q}")
    if abs(psi.norm - 1.0) > opts.norm_tol:
        raise NotNormalized(f"目标态范数为 {psi.norm:.15g}，偏离 1 超过 {opts.norm_tol:.0e}")

    tensor = psi.tensor()
    tasks = [(tensor, seed, i, opts) for i in range(n_starts)]
    outcomes = run_ordered(_oracle_start, tasks, opts.workers)

    best_index = max(range(n_starts), key=lambda i: outcomes[i][0])
    g_max = min(float(outcomes[best_index][0]), 1.0)
    optima = [qubits for overlap, qubits, _ in outcomes if overlap >= g_max - OPTIMUM_SLACK]
    logger.debug("oracle q=%d 起点 %d，g_max=%.15g，最多扫描 %d 轮", psi.q, n_starts, g_max,
                 max(sweeps for _, _, sweeps in outcomes))
    return OracleResult(
        g_max=g_max,
        d2_unnorm=1.0 - g_max * g_max,
        d2_norm=2.0 * (1.0 - g_max),
        best_product=tuple(outcomes[best_index][1]),
        n_distinct_optima=_count_distinct(optima, opts.distinct_tol),
        n_starts=n_starts,
        seed=seed,
    )


def symmetric_gap(f, n_starts=None, seed=0, solver_opts=None, oracle_opts=None):
    """对称拟设求解与穷举校验的 d2_norm 之差"""
    solver_opts = solver_opts or SolverOptions.from_settings()
    oracle_opts = oracle_opts or OracleOptions.from_settings()
    if f.q > oracle_opts.max_qubits:
        raise TooLarge(f"oracle 最多支持 {oracle_opts.max_qubits} 个比特，实际 q={f.q}")
    summary = multistart_solve(f, n_starts, seed, solver_opts)
    oracle = oracle_min_distance(superpose_dicke(f), None, seed, oracle_opts)
    gap = abs(summary.winner.d2_norm - oracle.d2_norm)
    if gap > GAP_TOLERANCE:
        logger.warning("%r 对称拟设与 oracle 相差 %.3e（求解 %.12g，oracle %.12g）",
                       f, gap, summary.winner.d2_norm, oracle.d2_norm)
    return gap
