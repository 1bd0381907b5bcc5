"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: variance_study.py
 @DateTime: 2024/3/19 14:10
 @Docs: f 向量方差与纠缠度的关系：随机非负 f 向量 + 三类构造族
"""
from entangle.experiments import CONSTRUCTED_FAMILIES, Family, variance_study, wedge_report
from entangle.qstate import Sampler
from pub.validators import validate_choice, validate_positive, validate_qubit_count

from ._base import ExperimentCommand


class Command(ExperimentCommand):
    help = "方差研究：每行一个 f 向量的方差与 d2_norm，JSON 另附楔形分段报告"
    formats = ('csv', 'json', 'svg')

    def add_experiment_arguments(self, parser):
        parser.add_argument('--n-random', type=int, default=200, help='随机 f 向量数量')
        parser.add_argument('--families', default=','.join(CONSTRUCTED_FAMILIES),
                            help='构造族，逗号分隔：' + ','.join(CONSTRUCTED_FAMILIES))
        parser.add_argument('--sampler', default=Sampler.NON_NEGATIVE_SPHERE, help='/'.join(Sampler.values))
        parser.add_argument('--n-bins', type=int, default=10, help='楔形报告的方差分段数')

    def validate(self, options):
        errors = [
            validate_qubit_count(options['q'], self.min_qubits),
            validate_choice('--sampler', options['sampler'], Sampler.values),
            validate_positive('--n-bins', options['n_bins']),
        ]
        if options['n_random'] < 0:
            errors.append(f"--n-random 不能为负，实际为 {options['n_random']}")
        names = [name.strip() for name in options['families'].split(',') if name.strip()]
        errors += [validate_choice('--families', name, [str(f) for f in CONSTRUCTED_FAMILIES]) for name in names]
        options['family_list'] = names
        return errors

    def run(self, options):
        rows = variance_study(
            q=options['q'],
            n_random=options['n_random'],
            families=tuple(Family(name) for name in options.pop('family_list')),
            seed=options['seed'],
            sampler=Sampler(options['sampler']),
            n_starts=options['n_starts'],
            opts=self.solver_options(options),
        )
        return rows, wedge_report(rows, options['n_bins'])

    def emit(self, result, options, metadata):
        rows, bins = result
        records = [row.to_record() for row in rows]
        columns = ['family', 'width', 'mirrored', 'variance', 'd2_norm'] + [f'f{p}' for p in range(options['q'] + 1)]
        self.write_table(records, options, metadata, columns, x='variance', y='d2_norm', hue='family',
                         payload={'wedge': [b.to_dict() for b in bins]})
