"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: export.py
 @DateTime: 2024/3/18 10:20
 @Docs: 实验结果导出：CSV(pandas)、JSON(simplejson)、SVG 散点图(matplotlib)
"""
import io
import logging
import platform
import sys

import matplotlib

matplotlib.use("Agg")

import simplejson
from matplotlib.figure import Figure

from geoment import __version__

logger = logging.getLogger(__name__)

TOOL_NAME = "geoment"
FLOAT_FORMAT = "%.17g"


def build_metadata(command, config, seed, wall_time_s=None):
    """输出文件头部的元数据；wall_time_s 只写入 JSON，CSV 不带它以保证同配置逐字节一致"""
    meta = {
        'tool': TOOL_NAME,
        'version': __version__,
        'command': command,
        'seed': seed,
        'config': {k: config[k] for k in sorted(config)},
        'python': platform.python_version(),
    }
    if wall_time_s is not None:
        meta['wall_time_s'] = wall_time_s
    return meta


class _Target:
    """路径或已打开的文本流；路径时负责打开与关闭"""

    def __init__(self, path_or_stream):
        self.path_or_stream = path_or_stream
        self.handle = None

    def __enter__(self):
        if hasattr(self.path_or_stream, 'write'):
            return self.path_or_stream
        self.handle = open(self.path_or_stream, 'w', encoding='utf-8', newline='')
        return self.handle

    def __exit__(self, *exc):
        if self.handle is not None:
            self.handle.close()


class ExportAction:
    @staticmethod
    def export_as_csv(frame, path_or_stream, metadata):
        """
        作用：写出 CSV，前面是 `# key: value` 形式的元数据注释行。
        参数：
            frame - pandas.DataFrame，列顺序即输出顺序。
            path_or_stream - 文件路径或文本流（None 表示标准输出）。
            metadata - build_metadata 的结果，不含 wall_time_s。
        """
        body = frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
        header = ''.join(f"# {key}: {_flat(metadata[key])}\n" for key in metadata if key != 'wall_time_s')
        with _Target(path_or_stream or sys.stdout) as out:
            out.write(header)
            out.write(body)
        logger.debug("CSV 导出 %d 行", len(frame))

    @staticmethod
    def export_as_json(payload, path_or_stream, metadata):
        document = {'meta': metadata, **payload}
        with _Target(path_or_stream or sys.stdout) as out:
            # r → ∞ 的边界解会带出 inf，ignore_nan 写成 null
            simplejson.dump(document, out, ignore_nan=True, indent=2, ensure_ascii=False)
            out.write('\n')

    @staticmethod
    def export_as_svg(frame, x, y, path_or_stream, hue=None, title=None):
        """静态散点图；固定 hashsalt 并去掉日期，同样的行得到同样的 SVG"""
        matplotlib.rcParams['svg.hashsalt'] = TOOL_NAME
        fig = Figure(figsize=(6.4, 4.8))
        ax = fig.add_subplot()
        groups = [(None, frame)] if hue is None else list(frame.groupby(hue, sort=False))
        for name, group in groups:
            ax.scatter(group[x], group[y], s=12, label=None if name is None else str(name))
        ax.set_xlabel(x)
        ax.set_ylabel(y)
        if title:
            ax.set_title(title)
        if hue is not None:
            ax.legend(loc='best', fontsize='small')
        buffer = io.StringIO()
        fig.savefig(buffer, format='svg', metadata={'Date': None})
        with _Target(path_or_stream or sys.stdout) as out:
            out.write(buffer.getvalue())


def _flat(value):
    if isinstance(value, dict):
        return simplejson.dumps(value, sort_keys=True, ignore_nan=True)
    return value
