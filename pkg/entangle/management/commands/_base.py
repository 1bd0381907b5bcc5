"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: _base.py
 @DateTime: 2024/3/19 9:40
 @Docs: 实验命令的公共部分：通用参数、校验、退出码、导出
"""
import io
import logging
import time

import pandas as pd
from django.core.management.base import BaseCommand, CommandError

from entangle.conf import SolverOptions
from entangle.exceptions import InvalidInput, TotalFailure
from pub.export import ExportAction, build_metadata
from pub.validators import validate_choice, validate_non_negative, validate_positive

logger = logging.getLogger(__name__)

EXIT_USAGE = 2
EXIT_SOLVER_FAILURE = 3
EXIT_ORACLE_GAP = 4

# Django 自带的参数，不写入输出元数据
BASE_OPTIONS = {
    'verbosity', 'settings', 'pythonpath', 'traceback', 'no_color', 'force_color', 'skip_checks',
    # call_command 透传的输出流
    'stdout', 'stderr',
}


class ExperimentCommand(BaseCommand):
    formats = ('csv', 'json')
    default_format = 'csv'
    min_qubits = 2
    default_q = 4

    def add_arguments(self, parser):
        parser.add_argument('--q', type=int, default=self.default_q, help='比特数')
        parser.add_argument('--seed', type=int, default=0, help='随机种子（非负整数）')
        parser.add_argument('--n-starts', type=int, default=None, help='每个态的多起点数量，默认取 settings')
        parser.add_argument('--workers', type=int, default=None, help='并行进程数，默认取 settings')
        parser.add_argument('--format', default=self.default_format, help='/'.join(self.formats))
        parser.add_argument('--out', default=None, help='输出文件，默认标准输出')
        self.add_experiment_arguments(parser)

    def add_experiment_arguments(self, parser):
        pass

    def validate(self, options):
        """返回错误信息列表（允许包含 None）"""
        return []

    def run(self, options):
        raise NotImplementedError

    def emit(self, result, options, metadata):
        raise NotImplementedError

    def solver_options(self, options):
        return SolverOptions.from_settings(n_starts=options['n_starts'], workers=options['workers'])

    def handle(self, *args, **options):
        errors = [
            validate_non_negative('--seed', options['seed']),
            validate_choice('--format', options['format'], self.formats),
        ]
        if options['n_starts'] is not None:
            errors.append(validate_positive('--n-starts', options['n_starts']))
        if options['workers'] is not None:
            errors.append(validate_positive('--workers', options['workers']))
        errors += self.validate(options)
        errors = [e for e in errors if e]
        if errors:
            raise CommandError('\n'.join(errors), returncode=EXIT_USAGE)

        started = time.perf_counter()
        try:
            result = self.run(options)
        except InvalidInput as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)
        except TotalFailure as exc:
            raise CommandError(str(exc), returncode=EXIT_SOLVER_FAILURE)
        wall_time = time.perf_counter() - started
        logger.info("%s 完成，用时 %.3f 秒", self.command_name, wall_time)

        config = {k: v for k, v in options.items() if k not in BASE_OPTIONS and k != 'out'}
        metadata = build_metadata(self.command_name, config, options['seed'], wall_time)
        self.emit(result, options, metadata)
        self.after_emit(result, options)

    def after_emit(self, result, options):
        pass

    @property
    def command_name(self):
        return self.__module__.rsplit('.', 1)[-1].replace('_', '-')

    def _write(self, options, writer):
        """writer(目标) 负责写出内容；未指定 --out 时先写入缓冲再交给 self.stdout"""
        if options['out']:
            writer(options['out'])
            return
        buffer = io.StringIO()
        writer(buffer)
        self.stdout.write(buffer.getvalue(), ending='')

    def write_table(self, records, options, metadata, columns, x=None, y=None, hue=None, payload=None):
        frame = pd.DataFrame.from_records(records, columns=columns)
        fmt = options['format']
        if fmt == 'csv':
            csv_meta = {k: v for k, v in metadata.items() if k != 'wall_time_s'}
            self._write(options, lambda target: ExportAction.export_as_csv(frame, target, csv_meta))
        elif fmt == 'json':
            document = {'rows': records, **(payload or {})}
            self._write(options, lambda target: ExportAction.export_as_json(document, target, metadata))
        else:
            title = f"{metadata['command']} q={options['q']}"
            self._write(options, lambda target: ExportAction.export_as_svg(frame, x, y, target, hue, title))

    def write_json(self, payload, options, metadata):
        self._write(options, lambda target: ExportAction.export_as_json(payload, target, metadata))
