"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: solver.py
 @DateTime: 2024/3/13 15:20
 @Docs: 驻点方程的多起点牛顿求解、Hessian 分类、内部/边界候选的胜者以及五类统计
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass, field, replace

import numpy as np
from django.db import models

from .conf import SolverOptions
from .exceptions import (NoInteriorSolution, NonPositiveOverlap, NotAtExtremum, OutOfRange, TotalFailure)
from .parallel import run_ordered
from .qstate import FVector, Sampler, make_fvector, sample_fvector, weight_fvector
from .symmetric import (TWO_PI, SymParams, boundary_distances, canonical_phases, distance_sq,
                        eliminate_N, gauge_direction, hessian_at, is_flip_symmetric, phase_period,
                        stationarity_residuals)

logger = logging.getLogger(__name__)

POLISH_STEPS = 3
MIN_BACKTRACK = 2.0 ** -20
# 重叠上升的梯度阈值与特征值下限（相对最大 |λ|）
ASCENT_GTOL = 1e-8
ASCENT_FLOOR = 1e-8
# 对称模式与零特征值的本征矢对齐判据
ALIGNMENT = 0.999


class ExtremumKind(models.TextChoices):
    MINIMUM = 'Minimum', '极小值'
    DEGENERATE_MINIMUM = 'DegenerateMinimum', '退化极小值'
    SADDLE = 'Saddle', '鞍点'
    MAXIMUM = 'Maximum', '极大值'


class CensusClass(models.TextChoices):
    REAL_INTERIOR = 'RealInterior', '实内部解'
    REAL_INTERIOR_ZERO_EIG = 'RealInteriorZeroEig', '带零特征值的实内部解'
    COMPLEX_INTERIOR = 'ComplexInterior', '复内部解'
    BOUNDARY_R0 = 'BoundaryR0', 'r=0 边界'
    BOUNDARY_RINF = 'BoundaryRInf', 'r→∞ 边界'


class FailureReason(models.TextChoices):
    MAX_ITERS = 'max_iters', '超过最大迭代次数'
    SINGULAR_JACOBIAN = 'singular_jacobian', '雅可比矩阵奇异'
    LINE_SEARCH = 'line_search', '回溯步长失败'
    BOUNDARY_DRIFT = 'boundary_drift', '漂向 r=0 或 r→∞'
    NON_POSITIVE_OVERLAP = 'non_positive_overlap', 'g_R(q,0) 为 0'
    NOT_AT_EXTREMUM = 'not_at_extremum', '不满足 Hessian 的驻点条件'
    NON_FINITE = 'non_finite', '出现 NaN 或 Inf'


class WinnerSource(models.TextChoices):
    INTERIOR = 'interior', '内部极小值'
    R0 = 'r0', 'r=0 边界'
    RINF = 'rinf', 'r→∞ 边界'


@dataclass(frozen=True)
class NoConvergence:
    """单个起点失败的记录，属于数据而非异常"""
    start: tuple
    reason: str
    residual_norm: float
    iterations: int

    def to_dict(self):
        return {'start': list(self.start), 'reason': str(self.reason),
                'residual_norm': self.residual_norm, 'iterations': self.iterations}


@dataclass(frozen=True)
class ExtremumReport:
    """
    一个收敛的内部极值点。
    字段：
        params - N 由 eliminate_N 得到，相位已规范化到 [0, 2π)。
        residual_norm - 无量纲驻点残差的范数。
        zero_mode - 第一个非对称零模的本征矢 (N, r, θ, Θ)，没有则为 None。
        symmetry_modes - 被识别为相位规范对称而剔除的零特征值个数。
    """
    params: SymParams
    residual_norm: float
    distances: object
    hessian: object
    kind: str
    starts_converged: int = 1
    zero_mode: tuple = None
    symmetry_modes: int = 0

    def is_real(self, phase_tol):
        return abs(math.sin(self.params.theta)) < phase_tol and abs(math.sin(self.params.Theta)) < phase_tol

    def to_dict(self):
        return {
            'params': self.params.to_dict(),
            'residual_norm': self.residual_norm,
            'distances': self.distances.to_dict(),
            'hessian': self.hessian.to_dict(),
            'kind': str(self.kind),
            'starts_converged': self.starts_converged,
            'zero_mode': list(self.zero_mode) if self.zero_mode is not None else None,
            'symmetry_modes': self.symmetry_modes,
        }


@dataclass(frozen=True)
class Winner:
    source: str
    distances: object
    extremum: ExtremumReport = None

    @property
    def d2_unnorm(self):
        return self.distances.d2_unnorm

    @property
    def d2_norm(self):
        return self.distances.d2_norm

    @property
    def r_opt(self):
        if self.source == WinnerSource.R0:
            return 0.0
        if self.source == WinnerSource.RINF:
            return math.inf
        return self.extremum.params.r

    def to_dict(self):
        return {
            'source': str(self.source),
            'r_opt': self.r_opt,
            **self.distances.to_dict(),
            'params': self.extremum.params.to_dict() if self.extremum is not None else None,
        }


@dataclass(frozen=True)
class SolveSummary:
    f: FVector
    winner: Winner
    interior: list
    boundary: object
    census_class: str
    n_starts: int
    seed: int
    failures: dict = field(default_factory=dict)
    no_interior: bool = False

    @property
    def global_(self):
        return self.winner

    def to_dict(self):
        return {
            'q': self.f.q,
            'f': list(self.f.as_tuple()),
            'n_starts': self.n_starts,
            'seed': self.seed,
            'global': self.winner.to_dict(),
            'census_class': str(self.census_class),
            'interior': [rep.to_dict() for rep in self.interior],
            'boundary': self.boundary.to_dict(),
            'failures': dict(self.failures),
            'no_interior': self.no_interior,
        }


@dataclass(frozen=True)
class CensusReport:
    q: int
    n_states: int
    seed: int
    sampler: str
    counts: dict
    failures: int = 0

    @property
    def fractions(self):
        return {name: count / self.n_states for name, count in self.counts.items()}

    def to_dict(self):
        return {'q': self.q, 'n_states': self.n_states, 'seed': self.seed, 'sampler': str(self.sampler),
                'counts': dict(self.counts), 'fractions': self.fractions, 'failures': self.failures}


@dataclass(frozen=True)
class DickeRow:
    p: int
    d2_norm: float
    d2_unnorm: float
    r_opt: float


def classify_hessian(hessian, symmetry_direction=None, zero_rtol=1e-7):
    """
    作用：按本征值符号给驻点分类。
        N 方向的本征值 A 恒为正且与其余方向解耦，不参与判断；
        与 symmetry_direction 对齐的零本征值是精确对称，剔除；
        其余：全正为 Minimum，有零无负为 DegenerateMinimum，全负为 Maximum，有负有正为 Saddle。
    返回：(kind, zero_mode, 剔除的对称模式个数)
    """
    # N 与 (r, θ, Θ) 解耦，只对后者对角化
    eigenvalues, block_vectors = np.linalg.eigh(hessian.matrix()[1:, 1:])
    eigenvectors = np.vstack([np.zeros(3), block_vectors])
    threshold = zero_rtol * max(abs(hessian.A), np.max(np.abs(eigenvalues)))
    negatives = positives = symmetry_modes = 0
    zero_modes = []
    for value, vector in zip(eigenvalues, eigenvectors.T):
        if abs(value) <= threshold:
            if symmetry_direction is not None and abs(vector @ symmetry_direction) > ALIGNMENT:
                symmetry_modes += 1
            else:
                zero_modes.append(vector)
        elif value < 0:
            negatives += 1
        else:
            positives += 1

    if negatives and not positives and not zero_modes:
        kind = ExtremumKind.MAXIMUM
    elif negatives:
        kind = ExtremumKind.SADDLE
    elif zero_modes:
        kind = ExtremumKind.DEGENERATE_MINIMUM
    else:
        kind = ExtremumKind.MINIMUM

    zero_mode = None
    if zero_modes:
        vec = zero_modes[0]
        vec = vec if vec[np.argmax(np.abs(vec))] > 0 else -vec
        zero_mode = tuple(float(x) for x in vec)
    return kind, zero_mode, symmetry_modes


def _evaluate(wf, x):
    res, jac = stationarity_residuals(wf, math.exp(x[0]), x[1], x[2])
    return res, jac, float(np.linalg.norm(res))


def _newton_direction(jac, res, max_step):
    # 单 Dicke 目标的雅可比处处秩 2，取最小范数解
    step, _, rank, _ = np.linalg.lstsq(jac, -res, rcond=None)
    if rank == 0 or not np.all(np.isfinite(step)):
        return None
    biggest = np.max(np.abs(step))
    if biggest > max_step:
        step = step * (max_step / biggest)
    return step


def _iterate(wf, x, opts, free=slice(None)):
    """
    在 (ln r, θ, Θ) 上做阻尼牛顿迭代，free 指定参与更新的坐标。
    返回 (x, 残差范数, 失败原因或 None, 迭代次数)。
    """
    res, jac, norm = _evaluate(wf, x)
    if not np.isfinite(norm):
        return x, norm, FailureReason.NON_FINITE, 0
    lo, hi = math.log(opts.r_min), math.log(opts.r_max)
    converged_at = None
    iteration = 0
    for iteration in range(opts.max_iters):
        if norm <= opts.tol:
            converged_at = iteration if converged_at is None else converged_at
            if iteration - converged_at >= POLISH_STEPS:
                break
        direction = _newton_direction(jac[:, free], res, opts.max_step)
        if direction is None:
            if norm <= opts.tol:
                break
            return x, norm, FailureReason.SINGULAR_JACOBIAN, iteration
        step = np.zeros(3)
        step[free] = direction

        alpha = 1.0
        while alpha >= MIN_BACKTRACK:
            trial = x + alpha * step
            t_res, t_jac, t_norm = _evaluate(wf, trial)
            if t_norm <= (1.0 - 1e-4 * alpha) * norm:
                break
            alpha /= 2.0
        else:
            if norm <= opts.tol:
                break
            return x, norm, FailureReason.LINE_SEARCH, iteration

        x, res, jac, norm = trial, t_res, t_jac, t_norm
        if not lo <= x[0] <= hi:
            return x, norm, FailureReason.BOUNDARY_DRIFT, iteration + 1
    if norm > opts.tol:
        return x, norm, FailureReason.MAX_ITERS, opts.max_iters
    return x, norm, None, iteration


def _unit_ratio_snap(wf, x, opts):
    """
    比特翻转对称的目标态在 r = 1 处的退化极小值是 R1 的三重根，
    双精度下牛顿法只能逼近到 |ln r| ~ 1e-4。固定 r = 1 重新求相位，
    残差和距离都不变时采用。
    """
    trial, norm, reason, _ = _iterate(wf, np.array([0.0, x[1], x[2]]), opts, free=slice(1, 3))
    if reason is not None or norm > opts.tol:
        return None
    if abs(_overlap(wf, x) - _overlap(wf, trial)) > 1e-10:
        return None
    return trial


def _overlap(wf, x):
    """½(1+r²)^{−q/2}|g(q,0)|，极值点处等于 cosθ_c"""
    r = math.exp(x[0])
    p = np.arange(wf.q + 1)
    g0 = 2.0 * np.sum(wf.weighted * np.exp(1j * (x[2] + p * x[1])) * np.power(r, p))
    return 0.5 * abs(g0) * (1.0 + r * r) ** (-wf.q / 2)


def _near_boundary(q, t, opts):
    # 残差已无法区分该点与边界
    return q * math.exp(-2.0 * abs(t)) <= 1e3 * opts.tol


def _finish(wf, x, norm, iterations, start, opts):
    r, theta, Theta = math.exp(x[0]), float(x[1]), float(x[2])
    q = wf.q
    if _near_boundary(q, x[0], opts):
        return NoConvergence(start, FailureReason.BOUNDARY_DRIFT, norm, iterations)

    p = np.arange(q + 1)
    scale = 2.0 * np.sum(np.abs(wf.weighted) * np.power(r, p))
    g0_real = 2.0 * np.sum(wf.weighted * np.cos(Theta + p * theta) * np.power(r, p))
    if abs(g0_real) <= 1e-12 * scale:
        return NoConvergence(start, FailureReason.NON_POSITIVE_OVERLAP, norm, iterations)
    if g0_real < 0:
        Theta += math.pi

    theta, Theta = canonical_phases(wf, theta, Theta)
    params = SymParams(eliminate_N(wf, r, theta, Theta), r, theta, Theta)
    residual, _ = stationarity_residuals(wf, r, theta, Theta)
    try:
        hessian = hessian_at(wf, params, guard=opts.extremum_guard)
    except (NotAtExtremum, NonPositiveOverlap):
        return NoConvergence(start, FailureReason.NOT_AT_EXTREMUM, norm, iterations)
    kind, zero_mode, symmetry_modes = classify_hessian(hessian, gauge_direction(wf), opts.zero_eig_rtol)
    return ExtremumReport(
        params=params,
        residual_norm=float(np.linalg.norm(residual)),
        distances=distance_sq(wf, params),
        hessian=hessian,
        kind=kind,
        zero_mode=zero_mode,
        symmetry_modes=symmetry_modes,
    )


def _settle(wf, x, opts, start, spent=0):
    """牛顿收敛、r = 1 投影、符号修正与 Hessian 分类，两种起点处理共用"""
    x, norm, reason, iterations = _iterate(wf, x, opts)
    iterations += spent
    if reason is not None:
        return NoConvergence(start, reason, norm, iterations)
    if 0.0 < abs(x[0]) < opts.snap_window and is_flip_symmetric(wf):
        snapped = _unit_ratio_snap(wf, x, opts)
        if snapped is not None:
            x = snapped
    return _finish(wf, x, norm, iterations, start, opts)


def _checked_start(start):
    r, theta, Theta = start
    if not (np.isfinite(r) and r > 0):
        raise OutOfRange(f"起点 r 必须为正，实际为 {r}")
    return np.array([math.log(r), float(theta), float(Theta)])


def solve_from_start(wf, start, opts=None):
    """
    作用：从一个起点 (r, θ, Θ) 直接求解驻点方程。
        能收敛到任意类型的驻点，包括鞍点与极大值。
    返回：ExtremumReport，或者带失败原因的 NoConvergence。
    """
    opts = opts or SolverOptions.from_settings()
    x = _checked_start(start)
    return _settle(wf, x, opts, tuple(start))


def log_overlap(wf, t, theta):
    """
    作用：Φ(t, θ) = ln|P(z)| − (q/2) ln(1 + r²)，z = r e^{iθ}，r = e^t，P(z) = Σ f̃_p z^p。
        Θ 取 −arg P 时 Φ 就是乘积态重叠的对数，Φ 的局部极大值即距离的局部极小值。
    返回：(Φ, 梯度, Hessian, P)，P = 0 时前三项为 None。
    """
    q = wf.q
    p = np.arange(q + 1)
    terms = wf.weighted * np.exp(p * (t + 1j * theta))
    big_p = terms.sum()
    if big_p == 0 or not np.isfinite(big_p):
        return None, None, None, big_p
    s = (p * terms).sum() / big_p
    curvature = (p * p * terms).sum() / big_p - s * s
    r2 = math.exp(2.0 * t)
    value = math.log(abs(big_p)) - 0.5 * q * math.log1p(r2)
    grad = np.array([s.real - q * r2 / (1.0 + r2), -s.imag])
    hess = np.array([
        [curvature.real - 2.0 * q * r2 / (1.0 + r2) ** 2, -curvature.imag],
        [-curvature.imag, -curvature.real],
    ])
    return value, grad, hess, big_p


def _ascent_direction(grad, hess, max_step):
    # 取 |λ| 的无鞍点牛顿方向，鞍点附近也保证是上升方向
    eigenvalues, vectors = np.linalg.eigh(hess)
    floor = ASCENT_FLOOR * max(1.0, float(np.max(np.abs(eigenvalues))))
    scale = np.maximum(np.abs(eigenvalues), floor)
    step = vectors @ ((vectors.T @ grad) / scale)
    biggest = np.max(np.abs(step))
    if biggest > max_step:
        step = step * (max_step / biggest)
    return step


def ascend_overlap(wf, start, opts=None):
    """
    作用：在 (ln r, θ) 上对 Φ 做带 Armijo 回溯的无鞍点牛顿上升，只会停在重叠的局部极大值
        （距离的局部极小值）或漂向边界；随后交给牛顿迭代收敛到驻点并分类。
        实系数目标态的 θ ∈ {0, π} 在上升中保持不变。
    返回：ExtremumReport，或者带失败原因的 NoConvergence。
    """
    opts = opts or SolverOptions.from_settings()
    x = _checked_start(start)
    start = tuple(start)
    t, theta = x[0], x[1]
    lo, hi = math.log(opts.r_min), math.log(opts.r_max)
    value, grad, hess, big_p = log_overlap(wf, t, theta)
    if value is None:
        return NoConvergence(start, FailureReason.NON_FINITE, math.inf, 0)
    iteration = 0
    for iteration in range(opts.ascent_iters):
        if np.linalg.norm(grad) <= ASCENT_GTOL:
            break
        step = _ascent_direction(grad, hess, opts.max_step)
        slope = float(grad @ step)
        alpha = 1.0
        while alpha >= MIN_BACKTRACK:
            trial = log_overlap(wf, t + alpha * step[0], theta + alpha * step[1])
            if trial[0] is not None and trial[0] >= value + 1e-4 * alpha * slope:
                break
            alpha /= 2.0
        else:
            # 上升已停滞，剩下的交给牛顿迭代
            break
        t, theta = t + alpha * step[0], theta + alpha * step[1]
        value, grad, hess, big_p = trial
        if not lo <= t <= hi or _near_boundary(wf.q, t, opts):
            return NoConvergence(start, FailureReason.BOUNDARY_DRIFT, float(np.linalg.norm(grad)), iteration + 1)
    x = np.array([t, theta, -math.atan2(big_p.imag, big_p.real)])
    return _settle(wf, x, opts, start, spent=iteration)


def draw_start(seed, index, opts):
    """第 index 个起点：r 在 start_r_range 上对数均匀，θ、Θ 在 [0, 2π) 上均匀"""
    rng = np.random.default_rng([seed, index])
    lo, hi = opts.start_r_range
    r = math.exp(rng.uniform(math.log(lo), math.log(hi)))
    theta, Theta = rng.uniform(0.0, TWO_PI, size=2)
    return r, float(theta), float(Theta)


def _circular(delta):
    return abs((delta + math.pi) % TWO_PI - math.pi)


def _same_extremum(wf, a, b, tol):
    pa, pb = a.params, b.params
    if abs(pa.r - pb.r) > tol * max(1.0, pa.r):
        return False
    period = phase_period(wf)
    if period is None:
        return _circular(pa.Theta - pb.Theta) <= tol
    base = wf.support[0]
    return any(
        _circular(pa.theta - pb.theta - k * period) <= tol
        and _circular(pa.Theta - pb.Theta + k * period * base) <= tol
        for k in (-1, 0, 1)
    )


def _deduplicate(wf, reports, tol):
    distinct = []
    for rep in reports:
        for i, known in enumerate(distinct):
            if _same_extremum(wf, known, rep, tol):
                distinct[i] = replace(known, starts_converged=known.starts_converged + 1)
                break
        else:
            distinct.append(rep)
    return distinct


def _pick_winner(interior, boundary):
    candidates = [Winner(WinnerSource.INTERIOR, rep.distances, rep) for rep in interior
                  if rep.kind in (ExtremumKind.MINIMUM, ExtremumKind.DEGENERATE_MINIMUM)]
    candidates.sort(key=lambda w: w.d2_unnorm)
    if boundary.r0_valid:
        candidates.append(Winner(WinnerSource.R0, boundary.at_r0))
    if boundary.rinf_valid:
        candidates.append(Winner(WinnerSource.RINF, boundary.at_rinf))
    if not candidates:
        return None
    best = candidates[0]
    for cand in candidates[1:]:
        if cand.d2_unnorm < best.d2_unnorm:
            best = cand
    return best


def _census_class(winner, phase_tol):
    if winner.source == WinnerSource.R0:
        return CensusClass.BOUNDARY_R0
    if winner.source == WinnerSource.RINF:
        return CensusClass.BOUNDARY_RINF
    if not winner.extremum.is_real(phase_tol):
        return CensusClass.COMPLEX_INTERIOR
    if winner.extremum.kind == ExtremumKind.DEGENERATE_MINIMUM:
        return CensusClass.REAL_INTERIOR_ZERO_EIG
    return CensusClass.REAL_INTERIOR


def grid_starts(opts):
    """确定性网格起点：grid_radii 个对数等距的 r 乘以 grid_phases 个等分的 θ，Θ 取 0（上升时重新确定）"""
    if opts.grid_radii < 1 or opts.grid_phases < 1:
        return []
    radii = np.geomspace(*opts.grid_r_range, num=opts.grid_radii)
    phases = TWO_PI * np.arange(opts.grid_phases) / opts.grid_phases
    return [(float(r), float(theta), 0.0) for r in radii for theta in phases]


def _run_start(wf, start, opts, ascend):
    if ascend:
        return ascend_overlap(wf, start, opts)
    return solve_from_start(wf, start, opts)


def multistart_solve(f, n_starts=None, seed=0, opts=None, strict=False):
    """
    作用：多起点求解并在内部极小值与两个边界候选中选出距离最小者。
        每个随机起点各跑一次直接牛顿（找出全部类型的驻点）和一次重叠上升（只找极小值），
        再加上确定性网格起点上的重叠上升。
    参数：
        f - FVector。
        n_starts - 随机起点数，默认取 opts.n_starts。
        seed - 非负整数；第 i 个起点的随机流由 (seed, i) 决定，结果与并行调度无关。
        opts - SolverOptions，默认读取 settings。
        strict - 为 True 时，所有起点都未收敛（只能取边界）会抛出 NoInteriorSolution。
    """
    opts = opts or SolverOptions.from_settings()
    n_starts = opts.n_starts if n_starts is None else n_starts
    if n_starts < 1:
        raise OutOfRange(f"n_starts 至少为 1，实际为 {n_starts}")
    if seed < 0:
        raise OutOfRange(f"seed 必须为非负整数，实际为 {seed}")

    wf = weight_fvector(f)
    logger.debug("开始求解 %r，起点数 %d，seed=%d", f, n_starts, seed)
    random_starts = [draw_start(seed, i, opts) for i in range(n_starts)]
    tasks = [(wf, start, opts, False) for start in random_starts]
    tasks += [(wf, start, opts, True) for start in random_starts + grid_starts(opts)]
    outcomes = run_ordered(_run_start, tasks, opts.workers)

    converged = [item for item in outcomes if isinstance(item, ExtremumReport)]
    failures = Counter(str(item.reason) for item in outcomes if isinstance(item, NoConvergence))
    if failures:
        logger.debug("未收敛起点：%s", dict(failures))
    interior = _deduplicate(wf, converged, opts.dedup_tol)
    boundary = boundary_distances(f)

    winner = _pick_winner(interior, boundary)
    if winner is None:
        raise TotalFailure(f"{f!r} 没有任何内部极小值，且 f_0 = f_q = 0")
    summary = SolveSummary(
        f=f, winner=winner, interior=interior, boundary=boundary,
        census_class=_census_class(winner, opts.phase_tol),
        n_starts=n_starts, seed=seed, failures=dict(sorted(failures.items())),
        no_interior=not converged,
    )
    if not converged:
        message = f"{f!r} 的 {len(tasks)} 个起点全部未收敛，取边界解 {winner.source}"
        if strict:
            raise NoInteriorSolution(message, summary)
        logger.warning(message)
    logger.info("%r 胜者 %s，d2_norm=%.12g，类别 %s", f, winner.source, winner.d2_norm, summary.census_class)
    return summary


def _census_task(q, seed, index, sampler, n_starts, opts):
    f = sample_fvector(q, seed, index, sampler)
    try:
        return str(multistart_solve(f, n_starts, seed, opts).census_class)
    except TotalFailure:
        logger.warning("census 第 %d 个态求解失败", index)
        return None


def census(q, n_states, seed=0, sampler=Sampler.UNIFORM_SPHERE, n_starts=None, opts=None):
    """
    作用：随机抽取 n_states 个 f 向量，统计五类结果。
        每个态内部串行求解，进程池按态分配。
    """
    if n_states < 1:
        raise OutOfRange(f"n_states 至少为 1，实际为 {n_states}")
    if q < 2:
        raise OutOfRange(f"比特数 q 至少为 2，实际为 {q}")
    opts = opts or SolverOptions.from_settings()
    inner = replace(opts, workers=1)
    tasks = [(q, seed, i, sampler, n_starts, inner) for i in range(n_states)]
    labels = run_ordered(_census_task, tasks, opts.workers)
    tally = Counter(label for label in labels if label is not None)
    counts = {str(choice): tally.get(str(choice), 0) for choice in CensusClass}
    return CensusReport(q=q, n_states=n_states, seed=seed, sampler=sampler, counts=counts,
                        failures=sum(1 for label in labels if label is None))


def dicke_sweep(q, n_starts=None, seed=0, opts=None):
    """p = 0..q 的单 Dicke 态；p = 0、q 为乘积态，距离为 0"""
    if q < 2:
        raise OutOfRange(f"比特数 q 至少为 2，实际为 {q}")
    rows = []
    for p in range(q + 1):
        raw = np.zeros(q + 1)
        raw[p] = 1.0
        winner = multistart_solve(make_fvector(q, raw), n_starts, seed, opts).winner
        rows.append(DickeRow(p, winner.d2_norm, winner.d2_unnorm, winner.r_opt))
    return rows
