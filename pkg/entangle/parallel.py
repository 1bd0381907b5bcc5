"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: parallel.py
 @DateTime: 2024/3/13 10:05
 @Docs: 把互不相关的任务分给进程池，结果按提交顺序返回
"""
import logging
from multiprocessing import Pool

logger = logging.getLogger(__name__)


def run_ordered(func, tasks, workers=1):
    """
    作用：对 tasks 逐个调用 func，返回与 tasks 同序的结果列表。
    参数：
        func - 模块级函数（需要能被 pickle）。
        tasks - 参数元组列表，每个元组按位置参数展开。
        workers - 进程数，<= 1 或任务数 <= 1 时串行执行。
    """
    tasks = list(tasks)
    if workers is None or workers <= 1 or len(tasks) <= 1:
        return [func(*args) for args in tasks]
    logger.debug("并行执行 %d 个任务，进程数 %d", len(tasks), workers)
    with Pool(processes=min(workers, len(tasks))) as pool:
        jobs = [pool.apply_async(func, args) for args in tasks]
        return [job.get() for job in jobs]
