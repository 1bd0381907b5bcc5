"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: experiments.py
 @DateTime: 2024/3/15 16:10
 @Docs: 方差研究：随机 f 向量与三类构造族（钟形、倒钟形、半高斯）的纠缠度随方差的分布
"""
import logging
from dataclasses import dataclass, replace

import numpy as np
from django.db import models

from .conf import SolverOptions
from .exceptions import OutOfRange
from .parallel import run_ordered
from .qstate import Sampler, fvector_stats, make_fvector, sample_fvector
from .solver import multistart_solve

logger = logging.getLogger(__name__)

WEDGE_SLACK = 1e-9


class Family(models.TextChoices):
    RANDOM = 'Random', '随机'
    GAUSSIAN_PEAK = 'GaussianPeak', '钟形'
    INVERTED_GAUSSIAN = 'InvertedGaussian', '倒钟形'
    HALF_GAUSSIAN = 'HalfGaussian', '半高斯'


CONSTRUCTED_FAMILIES = (Family.GAUSSIAN_PEAK, Family.INVERTED_GAUSSIAN, Family.HALF_GAUSSIAN)


@dataclass(frozen=True)
class FamilyMember:
    family: str
    width: float
    mirrored: bool
    f: object


@dataclass(frozen=True)
class VarianceRow:
    f: object
    variance: float
    d2_norm: float
    family: str
    width: float = float('nan')
    mirrored: bool = False

    def to_record(self):
        record = {'family': str(self.family), 'width': self.width, 'mirrored': self.mirrored,
                  'variance': self.variance, 'd2_norm': self.d2_norm}
        record.update({f'f{p}': value for p, value in enumerate(self.f.as_tuple())})
        return record


@dataclass(frozen=True)
class WedgeBin:
    lo: float
    hi: float
    n_random: int
    n_peak: int
    random_max: float
    peak_max: float

    @property
    def violated(self):
        return bool(self.n_random and self.n_peak and self.peak_max < self.random_max - WEDGE_SLACK)

    def to_dict(self):
        return {'lo': self.lo, 'hi': self.hi, 'n_random': self.n_random, 'n_peak': self.n_peak,
                'random_max': self.random_max, 'peak_max': self.peak_max, 'violated': self.violated}


def default_widths():
    """0 宽度（单个 Dicke 态或其补）加上 [0.2, 20] 上 19 个对数等距点"""
    return [0.0] + [float(w) for w in np.geomspace(0.2, 20.0, 19)]


def _gaussian(p, center, width):
    if width == 0:
        distance = np.abs(p - center)
        return (distance == distance.min()).astype(float)
    return np.exp(-(p - center) ** 2 / (2.0 * width * width))


def fvector_families(q, widths=None, families=CONSTRUCTED_FAMILIES):
    """
    作用：生成构造族的 f 向量。
        GaussianPeak：以 q/2 为中心的钟形，宽度为 0 时是中间的 Dicke 态；
        InvertedGaussian：钟形的最大值减去钟形；
        HalfGaussian：以 p = 0 为中心的半边高斯，及其左右镜像。
    """
    widths = default_widths() if widths is None else list(widths)
    p = np.arange(q + 1, dtype=float)
    members = []
    for family in families:
        for width in widths:
            if width < 0:
                raise OutOfRange(f"宽度不能为负，实际为 {width}")
            if family == Family.GAUSSIAN_PEAK:
                members.append(FamilyMember(family, width, False, make_fvector(q, _gaussian(p, q / 2, width))))
            elif family == Family.INVERTED_GAUSSIAN:
                bell = _gaussian(p, q / 2, width)
                members.append(FamilyMember(family, width, False, make_fvector(q, bell.max() - bell)))
            elif family == Family.HALF_GAUSSIAN:
                half = _gaussian(p, 0.0, width)
                members.append(FamilyMember(family, width, False, make_fvector(q, half)))
                members.append(FamilyMember(family, width, True, make_fvector(q, half[::-1])))
            else:
                raise OutOfRange(f"不支持的构造族：{family}")
    return members


def random_fvectors(q, n, seed=0, sampler=Sampler.NON_NEGATIVE_SPHERE):
    return [sample_fvector(q, seed, i, sampler) for i in range(n)]


def _variance_task(f, family, width, mirrored, n_starts, seed, opts):
    winner = multistart_solve(f, n_starts, seed, opts).winner
    return VarianceRow(f, fvector_stats(f)[1], winner.d2_norm, family, width, mirrored)


def variance_study(q=4, n_random=200, families=CONSTRUCTED_FAMILIES, widths=None, seed=0,
                   sampler=Sampler.NON_NEGATIVE_SPHERE, n_starts=None, opts=None):
    """随机行在前、构造族在后；每个 f 向量一个求解任务，进程池按行分配"""
    opts = opts or SolverOptions.from_settings()
    inner = replace(opts, workers=1)
    tasks = [(f, Family.RANDOM, float('nan'), False, n_starts, seed, inner)
             for f in random_fvectors(q, n_random, seed, sampler)]
    tasks += [(m.f, m.family, m.width, m.mirrored, n_starts, seed, inner)
              for m in fvector_families(q, widths, families)]
    rows = run_ordered(_variance_task, tasks, opts.workers)
    logger.info("q=%d 方差研究完成：随机 %d 行，构造族 %d 行", q, n_random, len(rows) - n_random)
    return rows


def wedge_report(rows, n_bins=10):
    """
    把方差区间等分成 n_bins 段，比较每段里钟形族与随机行的最大 d2_norm。
    钟形族是楔形上边界只是经验规律，这里只报告不满足的分段，不做断言。
    """
    if n_bins < 1:
        raise OutOfRange(f"n_bins 至少为 1，实际为 {n_bins}")
    variances = np.array([row.variance for row in rows])
    edges = np.linspace(variances.min(), variances.max(), n_bins + 1)
    index = np.clip(np.searchsorted(edges, variances, side='right') - 1, 0, n_bins - 1)
    bins = []
    for b in range(n_bins):
        members = [row for row, i in zip(rows, index) if i == b]
        random_vals = [row.d2_norm for row in members if row.family == Family.RANDOM]
        peak_vals = [row.d2_norm for row in members if row.family == Family.GAUSSIAN_PEAK]
        bins.append(WedgeBin(
            lo=float(edges[b]), hi=float(edges[b + 1]),
            n_random=len(random_vals), n_peak=len(peak_vals),
            random_max=max(random_vals, default=float('nan')),
            peak_max=max(peak_vals, default=float('nan')),
        ))
    violated = [b for b in bins if b.violated]
    if violated:
        logger.info("%d 个方差分段里随机行超过了钟形族", len(violated))
    return bins
