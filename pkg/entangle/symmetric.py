"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: symmetric.py
 @DateTime: 2024/3/12 14:30
 @Docs: 对称拟设下的距离：g 函数、D²(N, r, θ, Θ)、驻点方程、消去 N、Hessian、r=0 与 r→∞ 边界
"""
import logging
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .exceptions import NonPositiveOverlap, NotAtExtremum, OutOfRange

logger = logging.getLogger(__name__)

G_ORDERS = (0, 1, 2)
TWO_PI = 2 * np.pi


@dataclass(frozen=True)
class SymParams:
    """
    对称乘积态参数。
    字段：
        N - 单比特范数。
        r - 振幅比 a_2/a_1。
        theta - 相对相位 θ。
        Theta - 整体相位 Θ。
    """
    N: float
    r: float
    theta: float
    Theta: float

    def __post_init__(self):
        if not (np.isfinite(self.N) and self.N > 0):
            raise OutOfRange(f"N 必须是正的有限数，实际为 {self.N}")
        if not (np.isfinite(self.r) and self.r > 0):
            raise OutOfRange(f"r 必须是正的有限数（r=0、r→∞ 属于边界情形），实际为 {self.r}")

    def to_dict(self):
        return {'N': self.N, 'r': self.r, 'theta': self.theta, 'Theta': self.Theta}


@dataclass(frozen=True)
class DistancePair:
    """非归一化/归一化距离平方与临界角余弦；在极值点 d2_unnorm = 1 − cos²，d2_norm = 2(1 − cos)"""
    d2_unnorm: float
    d2_norm: float
    cos_theta_c: float

    @classmethod
    def from_cos(cls, cos_theta_c):
        c = float(cos_theta_c)
        return cls(1.0 - c * c, 2.0 * (1.0 - c), c)

    def to_dict(self):
        return {'d2_unnorm': self.d2_unnorm, 'd2_norm': self.d2_norm, 'cos_theta_c': self.cos_theta_c}


@dataclass(frozen=True)
class HessianParts:
    """
    驻点处 (N, r, θ, Θ) 的 Hessian，按原推导去掉了正因子 scale = (N/R)^{q/2}。
    Y 恒为 0。eigenvalues 的前两项是 A、B（X = 0 时为闭式解）。
    """
    A: float
    B: float
    C: float
    D: float
    X: float
    W: float
    scale: float
    eigenvalues: tuple
    closed_form: bool

    Y = 0.0

    def matrix(self):
        return np.array([
            [self.A, 0.0, 0.0, 0.0],
            [0.0, self.B, self.X, self.Y],
            [0.0, self.X, self.C, self.W],
            [0.0, self.Y, self.W, self.D],
        ])

    def physical_matrix(self):
        """D² 真正的二阶导数矩阵"""
        return self.scale * self.matrix()

    @property
    def physical_eigenvalues(self):
        return tuple(self.scale * lam for lam in self.eigenvalues)

    def to_dict(self):
        return {
            'A': self.A, 'B': self.B, 'C': self.C, 'D': self.D, 'X': self.X, 'W': self.W, 'Y': self.Y,
            'scale': self.scale, 'eigenvalues': list(self.eigenvalues), 'closed_form': self.closed_form,
        }


@dataclass(frozen=True)
class BoundaryReport:
    """r = 0 用 f_0，r → ∞ 用 f_q；对应系数为 0 时该边界不是候选"""
    at_r0: DistancePair
    at_rinf: DistancePair
    r0_valid: bool
    rinf_valid: bool

    def to_dict(self):
        return {
            'at_r0': self.at_r0.to_dict(), 'at_rinf': self.at_rinf.to_dict(),
            'r0_valid': self.r0_valid, 'rinf_valid': self.rinf_valid,
        }


def _gsum(wf, weights, r, theta, Theta, drop=0):
    """2 Σ_{p ≥ drop} weights_p f̃_p e^{i(Θ+pθ)} r^{p−drop}"""
    p = np.arange(wf.q + 1)
    powers = np.where(p >= drop, np.power(float(r), np.clip(p - drop, 0, None)), 0.0)
    phase = np.exp(1j * (Theta + p * theta))
    return complex(2.0 * np.sum(weights * wf.weighted * phase * powers))


def _g(wf, m, r, theta, Theta):
    # 整数数组的 0**0 == 1，p=0 项在 m=0 时保留
    return _gsum(wf, np.arange(wf.q + 1) ** m, r, theta, Theta)


def _g_over_r(wf, m, r, theta, Theta):
    """(1/r)·g(q, m)，m ≥ 1 时 p=0 项为零，少乘一次 r 即可，r → 0 无奇点"""
    return _gsum(wf, np.arange(wf.q + 1) ** m, r, theta, Theta, drop=1)


def g_fn(wf, m, r, theta, Theta):
    """
    作用：g_R(q,m) = 2Σ p^m f̃_p cos(Θ+pθ) r^p，g_I(q,m) 同理取 sin。
    参数：
        wf - WeightedFVector。
        m - 阶数，只用到 0、1、2。
        r - 非负有限数。
    """
    if m not in G_ORDERS:
        raise OutOfRange(f"m 只能取 {G_ORDERS}，实际为 {m}")
    if not (np.isfinite(r) and r >= 0):
        raise OutOfRange(f"r 必须是非负有限数，实际为 {r}")
    g = _g(wf, m, r, theta, Theta)
    return g.real, g.imag


def distance_sq(wf, params):
    """
    D² = 1 + N^q − [N/(1+r²)]^{q/2} g_R(q,0)，
    cosθ_c = ½(1+r²)^{−q/2}·|g(q,0)|（模的形式，极值点处 g_I(q,0)=0）。
    只有在极值点 d2_unnorm 才等于 1 − cos²θ_c。
    """
    q, N, r = wf.q, params.N, params.r
    R = 1.0 + r * r
    g0 = _g(wf, 0, r, params.theta, params.Theta)
    d2_unnorm = 1.0 + N ** q - (N / R) ** (q / 2) * g0.real
    cos_theta_c = 0.5 * R ** (-q / 2) * abs(g0)
    return DistancePair(float(d2_unnorm), float(2.0 * (1.0 - cos_theta_c)), float(cos_theta_c))


def eliminate_N(wf, r, theta, Theta):
    """由 g_R(q,0) = 2[N(1+r²)]^{q/2} 解出唯一正根 N"""
    g_r = _g(wf, 0, r, theta, Theta).real
    if g_r <= 0:
        raise NonPositiveOverlap(f"g_R(q,0)={g_r:.3e} ≤ 0，需要把 Θ 平移 π")
    return float((g_r / 2.0) ** (2.0 / wf.q) / (1.0 + r * r))


def _raw_residuals(wf, r, theta, Theta):
    q = wf.q
    g0 = _g(wf, 0, r, theta, Theta)
    g1_over_r = _g_over_r(wf, 1, r, theta, Theta)
    g1 = _g(wf, 1, r, theta, Theta)
    r1 = g1_over_r.real - q * r / (1.0 + r * r) * g0.real
    return np.array([r1, g1.imag, g0.imag]), g0


def extremal_residuals(wf, r, theta, Theta):
    """
    去掉公共正因子并消去 N 后的三个驻点方程：
        R1 = (1/r)g_R(q,1) − q r/(1+r²)·g_R(q,0)
        R2 = g_I(q,1)
        R3 = g_I(q,0)
    """
    res, g0 = _raw_residuals(wf, r, theta, Theta)
    if g0.real <= 0:
        raise NonPositiveOverlap(f"g_R(q,0)={g0.real:.3e} ≤ 0，需要把 Θ 平移 π")
    return res


def distance_gradient(wf, params):
    """D² 对 (N, r, θ, Θ) 的解析梯度，恢复了被去掉的正因子"""
    q, N, r = wf.q, params.N, params.r
    R = 1.0 + r * r
    factor = (N / R) ** (q / 2)
    res, g0 = _raw_residuals(wf, r, params.theta, params.Theta)
    d_n = q * N ** (q - 1) - 0.5 * q * N ** (q / 2 - 1) * R ** (-q / 2) * g0.real
    return np.array([d_n, -factor * res[0], factor * res[1], factor * res[2]])


def stationarity_residuals(wf, r, theta, Theta):
    """
    牛顿迭代使用的无量纲残差 U/h 及其对 (ln r, θ, Θ) 的雅可比。
    U = (r·R1, R2, R3)，h = 2Σ|f̃_p| r^p；利用 ∂g(q,m)/∂ln r = g(q,m+1)，
    全程没有 1/r。
    """
    q = wf.q
    g0 = _g(wf, 0, r, theta, Theta)
    g1 = _g(wf, 1, r, theta, Theta)
    g2 = _g(wf, 2, r, theta, Theta)
    R = 1.0 + r * r
    rho = q * r * r / R

    u = np.array([g1.real - rho * g0.real, g1.imag, g0.imag])
    jac = np.array([
        [g2.real - 2.0 * rho / R * g0.real - rho * g1.real, -g2.imag + rho * g1.imag, -g1.imag + rho * g0.imag],
        [g2.imag, g2.real, g1.real],
        [g1.imag, g1.real, g0.real],
    ])

    p = np.arange(q + 1)
    envelope = np.abs(wf.weighted) * np.power(float(r), p)
    h = 2.0 * np.sum(envelope)
    h_t = 2.0 * np.sum(p * envelope)
    jac = jac / h
    jac[:, 0] -= u * h_t / (h * h)
    return u / h, jac


def hessian_at(wf, params, guard=1e-8):
    """
    作用：驻点处的 Hessian（化简形式用到了驻点关系）。
        A = (q²/2) N^{q/2−2} R^{q/2}
        r²B = (2qr²/R²)(NR)^{q/2}(2+qr²) − g_R(q,2)
        C = g_R(q,2)，D = 2(NR)^{q/2}，rX = g_I(q,2)，W = (2qr²/R)(NR)^{q/2}，Y = 0
    特征值 λ = A、B、(C+D−X)/2 ± sqrt((C−D−X)²+4W²)/2；该因式分解要求 X = 0，
    X 不可忽略时对 (r, θ, Θ) 块做数值对角化。
    """
    q, N, r, theta, Theta = wf.q, params.N, params.r, params.theta, params.Theta
    residual, _ = stationarity_residuals(wf, r, theta, Theta)
    residual_norm = float(np.linalg.norm(residual))
    if residual_norm > guard:
        raise NotAtExtremum(f"驻点残差 {residual_norm:.3e} 超过 {guard:.1e}，化简后的 Hessian 不成立")
    if _g(wf, 0, r, theta, Theta).real <= 0:
        raise NonPositiveOverlap("Hessian 要求 g_R(q,0) > 0")

    R = 1.0 + r * r
    K = (N * R) ** (q / 2)
    g2 = _g(wf, 2, r, theta, Theta)
    A = 0.5 * q * q * N ** (q / 2 - 2) * R ** (q / 2)
    B = (2.0 * q * r * r / R ** 2 * K * (2.0 + q * r * r) - g2.real) / (r * r)
    C = g2.real
    D = 2.0 * K
    X = g2.imag / r
    W = 2.0 * q * r * r / R * K

    size = max(abs(B), abs(C), abs(D), abs(W), 1e-300)
    closed_form = abs(X) <= 1e-12 * size
    if closed_form:
        mid = 0.5 * (C + D - X)
        half = 0.5 * math.sqrt((C - D - X) ** 2 + 4.0 * W * W)
        eigenvalues = (A, B, mid + half, mid - half)
    else:
        block = np.array([[B, X, 0.0], [X, C, W], [0.0, W, D]])
        eigenvalues = (A, *np.linalg.eigvalsh(block)[::-1])
    return HessianParts(
        A=float(A), B=float(B), C=float(C), D=float(D), X=float(X), W=float(W),
        scale=float((N / R) ** (q / 2)),
        eigenvalues=tuple(float(x) for x in eigenvalues),
        closed_form=closed_form,
    )


def boundary_distances(f):
    """r = 0：D² = 1 − f_0²（归一化 2(1−|f_0|)）；r → ∞ 同理用 f_q。cosΘ = ±1 已在内部取定"""
    f0, fq = float(f.coeffs[0]), float(f.coeffs[-1])
    return BoundaryReport(
        at_r0=DistancePair.from_cos(abs(f0)),
        at_rinf=DistancePair.from_cos(abs(fq)),
        r0_valid=f0 != 0.0,
        rinf_valid=fq != 0.0,
    )


def _wrap(angle):
    value = float(np.mod(angle, TWO_PI))
    return 0.0 if TWO_PI - value < 1e-12 else value


def phase_period(wf):
    """相位规范对称的周期：支撑集为 S 时 θ 以 2π/gcd(S − min S) 为周期；单点支撑返回 None（θ 完全自由）"""
    support = wf.support
    if len(support) == 1:
        return None
    step = reduce(math.gcd, [p - support[0] for p in support[1:]])
    return TWO_PI / step


def canonical_phases(wf, theta, Theta):
    """把 (θ, Θ) 约化到规范代表元，每一项 e^{i(Θ+pθ)} 保持不变"""
    support = wf.support
    period = phase_period(wf)
    if period is None:
        return 0.0, _wrap(Theta + support[0] * theta)
    theta = _wrap(theta)
    k = math.floor(theta / period + 1e-9)
    return _wrap(theta - k * period), _wrap(Theta + k * period * support[0])


def gauge_direction(wf):
    """单点支撑 p 时，(θ, Θ) 沿 (1, −p) 平移不改变 D²；返回 (N, r, θ, Θ) 顺序的单位矢量"""
    support = wf.support
    if len(support) != 1:
        return None
    p = support[0]
    vec = np.array([0.0, 0.0, 1.0, -float(p)])
    return vec / np.linalg.norm(vec)


def is_flip_symmetric(wf, tol=1e-12):
    """比特翻转 |D_p⟩ ↔ |D_{q−p}⟩ 下目标态只差一个符号（可带 (−1)^p），此时 r = 1 是对称不动点"""
    w = wf.weighted
    scale = np.max(np.abs(w))
    alternating = (-1.0) ** np.arange(wf.q + 1)
    for sign in (1.0, -1.0):
        for pattern in (1.0, alternating):
            if np.max(np.abs(w[::-1] - sign * pattern * w)) <= tol * scale:
                return True
    return False
