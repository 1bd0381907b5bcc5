"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: census.py
 @DateTime: 2024/3/20 14:30
 @Docs: 随机 f 向量的五类解统计
"""
from entangle.qstate import Sampler
from entangle.solver import census
from pub.validators import validate_choice, validate_positive, validate_qubit_count

from ._base import ExperimentCommand


class Command(ExperimentCommand):
    help = "统计 RealInterior / RealInteriorZeroEig / ComplexInterior / BoundaryR0 / BoundaryRInf 的数量与比例"
    formats = ('json',)
    default_format = 'json'

    def add_experiment_arguments(self, parser):
        parser.add_argument('--n-states', type=int, default=200, help='随机 f 向量数量')
        parser.add_argument('--sampler', default=Sampler.UNIFORM_SPHERE, help='/'.join(Sampler.values))

    def validate(self, options):
        return [
            validate_qubit_count(options['q'], self.min_qubits),
            validate_positive('--n-states', options['n_states']),
            validate_choice('--sampler', options['sampler'], Sampler.values),
        ]

    def run(self, options):
        return census(options['q'], options['n_states'], options['seed'], Sampler(options['sampler']),
                      options['n_starts'], self.solver_options(options))

    def emit(self, result, options, metadata):
        self.write_json(result.to_dict(), options, metadata)
