"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: dicke_sweep.py
 @DateTime: 2024/3/19 11:30
 @Docs: 单 Dicke 态 p = 0..q 的纠缠度
"""
from dataclasses import asdict

from entangle.solver import dicke_sweep
from pub.validators import validate_qubit_count

from ._base import ExperimentCommand

COLUMNS = ['p', 'd2_norm', 'd2_unnorm', 'r_opt']


class Command(ExperimentCommand):
    help = "Dicke 态 |D_p⟩ 的归一化/非归一化距离平方与最优 r"
    formats = ('csv', 'json', 'svg')

    def validate(self, options):
        return [validate_qubit_count(options['q'], self.min_qubits)]

    def run(self, options):
        return dicke_sweep(options['q'], options['n_starts'], options['seed'], self.solver_options(options))

    def emit(self, result, options, metadata):
        records = [asdict(row) for row in result]
        self.write_table(records, options, metadata, COLUMNS, x='p', y='d2_norm')
