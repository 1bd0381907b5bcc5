"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: oracle_check.py
 @DateTime: 2024/3/21 9:50
 @Docs: 对称拟设与穷举 oracle 的差距，超过阈值时以退出码 4 结束
"""
import logging

import numpy as np
from django.core.management.base import CommandError

from entangle.conf import OracleOptions
from entangle.oracle import symmetric_gap
from entangle.qstate import Sampler, make_fvector, sample_fvector
from pub.validators import validate_choice, validate_positive, validate_qubit_count

from ._base import EXIT_ORACLE_GAP, ExperimentCommand

logger = logging.getLogger(__name__)

GAP_LIMIT = 1e-5


class Command(ExperimentCommand):
    help = "随机 f 向量（或全部单 Dicke 态）上对称求解与 oracle 的最大/平均差距"
    formats = ('json',)
    default_format = 'json'
    default_q = 3

    def add_experiment_arguments(self, parser):
        parser.add_argument('--n-states', '--n-fvectors', dest='n_states', type=int, default=50,
                            help='随机 f 向量数量（--n-fvectors 为旧名）')
        parser.add_argument('--sampler', default=Sampler.UNIFORM_SPHERE, help='/'.join(Sampler.values))
        parser.add_argument('--dicke', action='store_true', help='改为检查 p = 0..q 的单 Dicke 态')

    def validate(self, options):
        return [
            validate_qubit_count(options['q'], self.min_qubits, OracleOptions().max_qubits),
            validate_positive('--n-states', options['n_states']),
            validate_choice('--sampler', options['sampler'], Sampler.values),
        ]

    def run(self, options):
        q, seed = options['q'], options['seed']
        if options['dicke']:
            fvectors = [make_fvector(q, np.eye(q + 1)[p]) for p in range(q + 1)]
        else:
            sampler = Sampler(options['sampler'])
            fvectors = [sample_fvector(q, seed, i, sampler) for i in range(options['n_states'])]
        solver_opts = self.solver_options(options)
        oracle_opts = OracleOptions.from_settings(workers=options['workers'])
        gaps = [symmetric_gap(f, options['n_starts'], seed, solver_opts, oracle_opts) for f in fvectors]
        return {
            'n_states': len(gaps),
            'max_gap': max(gaps),
            'mean_gap': float(np.mean(gaps)),
            'gap_limit': GAP_LIMIT,
            'gaps': [{'f': list(f.as_tuple()), 'gap': gap} for f, gap in zip(fvectors, gaps)],
        }

    def emit(self, result, options, metadata):
        self.write_json(result, options, metadata)

    def after_emit(self, result, options):
        if result['max_gap'] > GAP_LIMIT:
            logger.warning("oracle 最大差距 %.3e 超过 %.0e", result['max_gap'], GAP_LIMIT)
            raise CommandError(f"最大差距 {result['max_gap']:.3e} 超过 {GAP_LIMIT:.0e}", returncode=EXIT_ORACLE_GAP)
