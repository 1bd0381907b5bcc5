"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: solve.py
 @DateTime: 2024/3/19 11:00
 @Docs: 单个目标态的求解报告
"""
from entangle.qstate import FVector, make_fvector
from entangle.solver import multistart_solve
from pub.validators import parse_coefficients, validate_coefficient_count, validate_qubit_count

from ._base import ExperimentCommand


class Command(ExperimentCommand):
    help = "求解一个对称目标态的几何纠缠度：全部内部极值、边界值、胜者与类别"
    formats = ('json',)
    default_format = 'json'

    def add_experiment_arguments(self, parser):
        parser.add_argument('--f', required=True, help='Dicke 基系数，逗号分隔，共 q+1 个')
        parser.add_argument('--weighted', action='store_true',
                            help='系数已吸收组合因子 sqrt(C(q,p))')

    def validate(self, options):
        values, errors = parse_coefficients(options['f'])
        options['coefficients'] = values
        if not errors:
            errors.append(validate_coefficient_count(values, options['q']))
        errors.append(validate_qubit_count(options['q'], self.min_qubits))
        return errors

    def run(self, options):
        q, raw = options['q'], options.pop('coefficients')
        f = FVector.from_weighted(q, raw) if options['weighted'] else make_fvector(q, raw)
        return multistart_solve(f, options['n_starts'], options['seed'], self.solver_options(options))

    def emit(self, result, options, metadata):
        self.write_json(result.to_dict(), options, metadata)
