"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: evenodd_sweep.py
 @DateTime: 2024/3/20 10:15
 @Docs: W 类奇偶对称态的 f 扫描，可选逐行 oracle 校验
"""
from dataclasses import asdict

from entangle.conf import OracleOptions
from entangle.evenodd import EvenOddSpec, evenodd_sweep, w_like_state
from entangle.oracle import oracle_min_distance
from pub.validators import validate_qubit_count

from ._base import ExperimentCommand

COLUMNS = ['f', 'm', 'd2_norm', 'ra_sq', 'rb_sq', 'is_w_point']


class Command(ExperimentCommand):
    help = "W 类态 (q/2)(f²+m²)=1 的临界距离随 f 的变化，f=m 行标记为 W 态"
    formats = ('csv', 'json', 'svg')
    min_qubits = 4

    def add_experiment_arguments(self, parser):
        parser.add_argument('--n-points', type=int, default=21, help='(0, sqrt(2/q)) 内的采样点数，至少 3')
        parser.add_argument('--with-oracle', action='store_true', help='每行附加 oracle 的 d2_norm')

    def validate(self, options):
        errors = [validate_qubit_count(options['q'], self.min_qubits, even=True)]
        if options['n_points'] < 3:
            errors.append(f"--n-points 至少为 3，实际为 {options['n_points']}")
        if options['with_oracle']:
            errors.append(validate_qubit_count(options['q'], self.min_qubits, OracleOptions().max_qubits))
        return errors

    def run(self, options):
        rows = [asdict(row) for row in evenodd_sweep(options['q'], options['n_points'])]
        if options['with_oracle']:
            opts = OracleOptions.from_settings(workers=options['workers'])
            for row in rows:
                psi = w_like_state(EvenOddSpec(options['q'], row['f'], row['m']))
                row['oracle_d2_norm'] = oracle_min_distance(psi, None, options['seed'], opts).d2_norm
        return rows

    def emit(self, result, options, metadata):
        columns = COLUMNS + (['oracle_d2_norm'] if options['with_oracle'] else [])
        self.write_table(result, options, metadata, columns, x='f', y='d2_norm')
