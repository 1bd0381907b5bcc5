"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: exceptions.py
 @DateTime: 2024/3/11 11:20
 @Docs: 异常定义。输入类错误同时是 ValueError，命令行统一映射到退出码 2
"""


class GeomentError(Exception):
    """所有 geoment 异常的基类"""


class InvalidInput(GeomentError, ValueError):
    """输入不合法（命令行退出码 2）"""


class AllZero(InvalidInput):
    pass


class BadLength(InvalidInput):
    pass


class NonFinite(InvalidInput):
    pass


class OutOfRange(InvalidInput):
    pass


class DimensionMismatch(InvalidInput):
    pass


class NotNormalized(InvalidInput):
    pass


class TooLarge(InvalidInput):
    pass


class Degenerate(InvalidInput):
    pass


class SolverError(GeomentError):
    """求解过程中的错误"""


class NonPositiveOverlap(SolverError):
    """g_R(q,0) <= 0：需要把 Θ 平移 π 后再消去 N"""


class NotAtExtremum(SolverError):
    """Hessian 的化简形式只在驻点成立"""


class NoInteriorSolution(SolverError):
    """所有起点都未收敛，胜者只能取边界；summary 保留这份边界结果"""

    def __init__(self, message, summary=None):
        super().__init__(message)
        self.summary = summary


class TotalFailure(SolverError):
    """既没有内部极小值，也没有可用的边界候选（命令行退出码 3）"""


class NonMonotoneAscent(GeomentError):
    """交替更新使重叠变小，说明收缩计算有误"""
