import math

import numpy as np
from django.test import SimpleTestCase, tag
from numpy.testing import assert_allclose
from scipy.special import comb

from entangle.conf import SolverOptions
from entangle.exceptions import NoInteriorSolution, OutOfRange
from entangle.qstate import FVector, Sampler, make_fvector, weight_fvector
from entangle.solver import (CensusClass, ExtremumKind, ExtremumReport, FailureReason, NoConvergence,
                             WinnerSource, ascend_overlap, census, classify_hessian, dicke_sweep, grid_starts,
                             log_overlap, multistart_solve, solve_from_start)
from entangle.symmetric import HessianParts, distance_gradient, gauge_direction

OPTS = SolverOptions()
W_D2_NORM = 2 - 2 * 0.75 ** 1.5


def _parts(B, C, D, W, X=0.0, A=1.0):
    return HessianParts(A=A, B=B, C=C, D=D, X=X, W=W, scale=1.0, eigenvalues=(), closed_form=False)


def _sin_distance(angle):
    return abs(math.sin(angle))


class ClassifyHessianTests(SimpleTestCase):
    def test_minimum(self):
        kind, zero_mode, symmetry = classify_hessian(_parts(B=2.0, C=3.0, D=1.0, W=0.5))
        self.assertEqual(kind, ExtremumKind.MINIMUM)
        self.assertIsNone(zero_mode)
        self.assertEqual(symmetry, 0)

    def test_saddle(self):
        kind, _, _ = classify_hessian(_parts(B=-2.0, C=3.0, D=1.0, W=0.5))
        self.assertEqual(kind, ExtremumKind.SADDLE)

    def test_maximum_ignores_positive_n_direction(self):
        kind, _, _ = classify_hessian(_parts(B=-2.0, C=-3.0, D=-1.0, W=0.5, A=5.0))
        self.assertEqual(kind, ExtremumKind.MAXIMUM)

    def test_degenerate_minimum_reports_r_direction(self):
        kind, zero_mode, _ = classify_hessian(_parts(B=0.0, C=3.0, D=1.0, W=0.5))
        self.assertEqual(kind, ExtremumKind.DEGENERATE_MINIMUM)
        assert_allclose(zero_mode, [0, 1, 0, 0], atol=1e-12)

    def test_symmetry_zero_mode_is_discarded(self):
        # (θ, Θ) 块 [[4, 2], [2, 1]] 沿 (1, −2) 退化，与 p = 2 的相位规范一致
        direction = np.array([0, 0, 1, -2]) / math.sqrt(5)
        kind, zero_mode, symmetry = classify_hessian(_parts(B=1.0, C=4.0, D=1.0, W=2.0), direction)
        self.assertEqual(kind, ExtremumKind.MINIMUM)
        self.assertIsNone(zero_mode)
        self.assertEqual(symmetry, 1)
        kind, _, symmetry = classify_hessian(_parts(B=1.0, C=4.0, D=1.0, W=2.0))
        self.assertEqual(kind, ExtremumKind.DEGENERATE_MINIMUM)
        self.assertEqual(symmetry, 0)


class SolveFromStartTests(SimpleTestCase):
    def test_dicke_converges_to_unit_ratio(self):
        wf = weight_fvector(make_fvector(4, [0, 0, 1, 0, 0]))
        report = solve_from_start(wf, (0.9, 0.1, -0.1), OPTS)
        self.assertIsInstance(report, ExtremumReport)
        self.assertAlmostEqual(report.params.r, 1.0, delta=1e-10)
        self.assertEqual(report.params.theta, 0.0)
        self.assertLess(_sin_distance(report.params.Theta), 1e-10)
        self.assertAlmostEqual(report.distances.d2_unnorm, 0.625, delta=1e-10)
        self.assertEqual(report.kind, ExtremumKind.MINIMUM)
        self.assertEqual(report.symmetry_modes, 1)

    def test_w_state_from_several_starts(self):
        wf = weight_fvector(make_fvector(4, [0, 1, 0, 0, 0]))
        for start in [(0.2, 1.0, 2.0), (3.0, 5.0, 0.3), (0.577, 0.0, 0.0)]:
            report = solve_from_start(wf, start, OPTS)
            self.assertIsInstance(report, ExtremumReport)
            self.assertAlmostEqual(report.distances.d2_norm, W_D2_NORM, delta=1e-9)
            self.assertAlmostEqual(report.params.r ** 2, 1 / 3, delta=1e-9)

    def test_ghz_drifts_to_boundary(self):
        wf = weight_fvector(make_fvector(4, [1, 0, 0, 0, 1]))
        outcome = solve_from_start(wf, (0.05, 0.0, 0.0), OPTS)
        self.assertIsInstance(outcome, NoConvergence)
        self.assertEqual(outcome.reason, FailureReason.BOUNDARY_DRIFT)

    def test_rejects_non_positive_start(self):
        with self.assertRaises(OutOfRange):
            solve_from_start(weight_fvector(make_fvector(2, [1, 1, 1])), (0.0, 0.0, 0.0), OPTS)


class OverlapAscentTests(SimpleTestCase):
    def test_gradient_and_hessian_match_finite_differences(self):
        wf = weight_fvector(make_fvector(4, [0.3, -0.5, 0.2, 0.7, -0.1]))
        h = 1e-5
        for t, theta in [(-0.4, 0.3), (0.2, 2.0), (1.1, -1.2)]:
            _, grad, hess, _ = log_overlap(wf, t, theta)
            numeric_grad = np.array([
                (log_overlap(wf, t + h, theta)[0] - log_overlap(wf, t - h, theta)[0]) / (2 * h),
                (log_overlap(wf, t, theta + h)[0] - log_overlap(wf, t, theta - h)[0]) / (2 * h),
            ])
            assert_allclose(grad, numeric_grad, atol=1e-7)
            numeric_hess = np.column_stack([
                (log_overlap(wf, t + h, theta)[1] - log_overlap(wf, t - h, theta)[1]) / (2 * h),
                (log_overlap(wf, t, theta + h)[1] - log_overlap(wf, t, theta - h)[1]) / (2 * h),
            ])
            assert_allclose(hess, numeric_hess, atol=1e-6)

    def test_real_target_keeps_real_axis(self):
        wf = weight_fvector(make_fvector(4, [0.3, -0.5, 0.2, 0.7, -0.1]))
        for t in (-1.0, 0.0, 0.8):
            self.assertEqual(log_overlap(wf, t, 0.0)[1][1], 0.0)
            self.assertAlmostEqual(log_overlap(wf, t, math.pi)[1][1], 0.0, delta=1e-12)

    def test_w_state_reaches_minimum(self):
        wf = weight_fvector(make_fvector(4, [0, 1, 0, 0, 0]))
        for start in [(0.05, 0.0, 0.0), (20.0, 2.5, 1.0), (1.0, 4.0, 0.0)]:
            report = ascend_overlap(wf, start, OPTS)
            self.assertIsInstance(report, ExtremumReport)
            self.assertEqual(report.kind, ExtremumKind.MINIMUM)
            self.assertAlmostEqual(report.distances.d2_norm, W_D2_NORM, delta=1e-9)

    def test_ghz_climbs_to_boundary(self):
        wf = weight_fvector(make_fvector(4, [1, 0, 0, 0, 1]))
        for start in [(0.5, 0.0, 0.0), (2.0, 0.0, 0.0)]:
            outcome = ascend_overlap(wf, start, OPTS)
            self.assertIsInstance(outcome, NoConvergence)
            self.assertEqual(outcome.reason, FailureReason.BOUNDARY_DRIFT)

    def test_grid_starts(self):
        starts = grid_starts(OPTS)
        self.assertEqual(len(starts), OPTS.grid_radii * OPTS.grid_phases)
        self.assertAlmostEqual(starts[0][0], OPTS.grid_r_range[0])
        self.assertAlmostEqual(starts[-1][0], OPTS.grid_r_range[1])
        self.assertEqual(grid_starts(SolverOptions(grid_radii=0)), [])


class MultistartTests(SimpleTestCase):
    def test_w_state(self):
        summary = multistart_solve(make_fvector(4, [0, 1, 0, 0, 0]), 16, 0, OPTS)
        self.assertEqual(summary.winner.source, WinnerSource.INTERIOR)
        self.assertAlmostEqual(summary.winner.d2_norm, W_D2_NORM, delta=1e-9)
        self.assertAlmostEqual(summary.winner.r_opt ** 2, 1 / 3, delta=1e-9)
        self.assertEqual(summary.census_class, CensusClass.REAL_INTERIOR)
        self.assertEqual(len(summary.interior), 1)

    def test_ghz_winner_is_boundary(self):
        summary = multistart_solve(make_fvector(4, [1, 0, 0, 0, 1]), 64, 0, OPTS)
        self.assertIn(summary.winner.source, (WinnerSource.R0, WinnerSource.RINF))
        self.assertIn(summary.census_class, (CensusClass.BOUNDARY_R0, CensusClass.BOUNDARY_RINF))
        self.assertAlmostEqual(summary.winner.d2_unnorm, 0.5, places=15)
        self.assertAlmostEqual(summary.winner.d2_norm, 2 - math.sqrt(2), delta=1e-9)

    def test_separable_target(self):
        summary = multistart_solve(make_fvector(4, [1, 0, 0, 0, 0]), 8, 0, OPTS)
        self.assertEqual(summary.winner.source, WinnerSource.R0)
        self.assertEqual(summary.winner.r_opt, 0.0)
        self.assertAlmostEqual(summary.winner.d2_norm, 0.0, places=15)
        self.assertTrue(summary.no_interior)
        self.assertTrue(summary.to_dict()['no_interior'])

    def test_strict_mode_reports_missing_interior(self):
        f = make_fvector(4, [1, 0, 0, 0, 0])
        with self.assertRaises(NoInteriorSolution) as ctx:
            multistart_solve(f, 8, 0, OPTS, strict=True)
        self.assertEqual(ctx.exception.summary.winner.source, WinnerSource.R0)
        self.assertFalse(multistart_solve(make_fvector(4, [0, 1, 0, 0, 0]), 8, 0, OPTS, strict=True).no_interior)

    def test_weighted_uniform_is_degenerate_minimum(self):
        f = FVector.from_weighted(4, [1, 1, 1, 1, 1])
        summary = multistart_solve(f, 32, 0, OPTS)
        self.assertEqual(summary.census_class, CensusClass.REAL_INTERIOR_ZERO_EIG)
        best = summary.winner.extremum
        self.assertAlmostEqual(best.params.r, 1.0, delta=1e-8)
        eigenvalues = np.abs(best.hessian.eigenvalues)
        self.assertEqual(int(np.sum(eigenvalues <= OPTS.zero_eig_rtol * eigenvalues.max())), 1)
        self.assertGreater(abs(best.zero_mode[1]), 0.999)

    def test_bare_uniform_is_regular_minimum(self):
        summary = multistart_solve(make_fvector(4, [1, 1, 1, 1, 1]), 32, 0, OPTS)
        self.assertEqual(summary.census_class, CensusClass.REAL_INTERIOR)
        self.assertAlmostEqual(summary.winner.r_opt, 1.0, delta=1e-8)

    def test_central_dicke(self):
        summary = multistart_solve(make_fvector(4, [0, 0, 1, 0, 0]), 16, 0, OPTS)
        self.assertEqual(summary.census_class, CensusClass.REAL_INTERIOR)
        self.assertAlmostEqual(summary.winner.d2_norm, 2 - math.sqrt(6) / 2, delta=1e-9)

    def test_two_entries_give_real_phases(self):
        for raw in ([0.6, 0.8, 0, 0, 0], [0, 0.3, -0.9, 0, 0], [0, 0, 0.5, 0, 0.5]):
            summary = multistart_solve(make_fvector(4, raw), 32, 1, OPTS)
            winner = summary.winner
            if winner.extremum is None:
                self.assertIn(winner.source, (WinnerSource.R0, WinnerSource.RINF))
                self.assertNotEqual(summary.census_class, CensusClass.COMPLEX_INTERIOR)
                at_boundary = summary.boundary.at_r0 if winner.source == WinnerSource.R0 else summary.boundary.at_rinf
                self.assertEqual(winner.d2_unnorm, at_boundary.d2_unnorm)
                continue
            self.assertLess(_sin_distance(winner.extremum.params.theta), 1e-8)
            self.assertLess(_sin_distance(winner.extremum.params.Theta), 1e-8)
            self.assertNotEqual(summary.census_class, CensusClass.COMPLEX_INTERIOR)

    def test_entries_without_boundary_give_interior_winner(self):
        summary = multistart_solve(make_fvector(4, [0, 0.3, -0.9, 0, 0]), 8, 0, OPTS)
        self.assertEqual(summary.winner.source, WinnerSource.INTERIOR)

    def test_deterministic(self):
        f = make_fvector(4, [0.3, -0.5, 0.2, 0.7, -0.1])
        first = multistart_solve(f, 12, 3, OPTS).to_dict()
        second = multistart_solve(f, 12, 3, OPTS).to_dict()
        self.assertEqual(first, second)

    def test_parallel_schedule_does_not_change_result(self):
        f = make_fvector(3, [0.5, 0.1, -0.7, 0.4])
        serial = multistart_solve(f, 8, 2, OPTS).to_dict()
        parallel = multistart_solve(f, 8, 2, SolverOptions(workers=2)).to_dict()
        self.assertEqual(serial, parallel)

    def test_rejects_bad_arguments(self):
        f = make_fvector(2, [1, 1, 0])
        with self.assertRaises(OutOfRange):
            multistart_solve(f, 0, 0, OPTS)
        with self.assertRaises(OutOfRange):
            multistart_solve(f, 4, -1, OPTS)

    def test_interior_minima_satisfy_extremal_identity(self):
        rng = np.random.default_rng(2024)
        for _ in range(10):
            f = make_fvector(4, rng.standard_normal(5))
            for report in multistart_solve(f, 16, 0, OPTS).interior:
                self.assertLessEqual(report.residual_norm, 1e-10)
                self.assertAlmostEqual(report.distances.d2_unnorm, 1 - report.params.N ** 4, delta=1e-10)


class DickeSweepTests(SimpleTestCase):
    def test_q4(self):
        rows = dicke_sweep(4, 16, 0, OPTS)
        self.assertEqual([row.p for row in rows], [0, 1, 2, 3, 4])
        for row in rows:
            p = row.p
            overlap = math.sqrt(comb(4, p)) * (p / 4) ** (p / 2) * ((4 - p) / 4) ** ((4 - p) / 2)
            self.assertAlmostEqual(row.d2_norm, 2 - 2 * overlap, delta=1e-8)
        self.assertEqual(rows[0].d2_norm, 0.0)
        self.assertEqual(rows[4].d2_norm, 0.0)
        self.assertEqual(rows[0].r_opt, 0.0)
        self.assertEqual(rows[4].r_opt, math.inf)
        self.assertEqual(max(rows, key=lambda row: row.d2_norm).p, 2)
        self.assertAlmostEqual(rows[2].d2_norm, 0.775255, delta=1e-6)
        self.assertAlmostEqual(rows[1].d2_norm, 0.700962, delta=1e-6)

    def test_bit_flip_symmetry(self):
        rows = dicke_sweep(5, 16, 0, OPTS)
        for p in range(6):
            self.assertAlmostEqual(rows[p].d2_norm, rows[5 - p].d2_norm, delta=1e-10)


class CensusTests(SimpleTestCase):
    def test_non_negative_sampling_has_no_complex_solutions(self):
        report = census(4, 12, 0, Sampler.NON_NEGATIVE_SPHERE, 16, OPTS)
        self.assertEqual(report.counts[CensusClass.COMPLEX_INTERIOR], 0)
        self.assertEqual(sum(report.counts.values()) + report.failures, 12)
        self.assertEqual(list(report.counts), list(CensusClass.values))

    def test_signed_sampling_finds_complex_winners(self):
        report = census(4, 40, 0, Sampler.UNIFORM_SPHERE, 8, OPTS)
        self.assertGreater(report.counts[CensusClass.COMPLEX_INTERIOR], 0)

    def test_reproducible(self):
        first = census(3, 4, 9, Sampler.UNIFORM_SPHERE, 8, OPTS)
        second = census(3, 4, 9, Sampler.UNIFORM_SPHERE, 8, OPTS)
        self.assertEqual(first.to_dict(), second.to_dict())

    def test_single_state(self):
        report = census(4, 1, 5, Sampler.UNIFORM_SPHERE, 8, OPTS)
        self.assertEqual(sum(report.counts.values()) + report.failures, 1)

    def test_needs_states(self):
        with self.assertRaises(OutOfRange):
            census(4, 0)


@tag("slow")
class AcceptanceTests(SimpleTestCase):
    def test_extremal_identity_on_random_states(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            f = make_fvector(4, rng.standard_normal(5))
            for report in multistart_solve(f, 32, 0, OPTS).interior:
                self.assertLessEqual(report.residual_norm, 1e-10)
                self.assertAlmostEqual(report.distances.d2_unnorm, 1 - report.params.N ** 4, delta=1e-10)

    def test_hessian_matches_finite_differences(self):
        rng = np.random.default_rng(13)
        checked = 0
        while checked < 50:
            f = make_fvector(4, rng.standard_normal(5))
            wf = weight_fvector(f)
            for report in multistart_solve(f, 16, checked, OPTS).interior:
                p = report.params
                x0 = np.array([p.N, p.r, p.theta, p.Theta])
                hess = np.zeros((4, 4))
                for i in range(4):
                    dx = np.zeros(4)
                    # N 与 r 用相对步长
                    dx[i] = 1e-5 * (x0[i] if i < 2 else 1.0)
                    plus = distance_gradient(wf, type(p)(*(x0 + dx)))
                    minus = distance_gradient(wf, type(p)(*(x0 - dx)))
                    hess[:, i] = (plus - minus) / (2 * dx[i])
                numeric = np.linalg.eigvalsh(0.5 * (hess + hess.T))
                physical = np.sort(report.hessian.physical_eigenvalues)
                assert_allclose(physical, numeric, atol=1e-4 * np.max(np.abs(numeric)))
                checked += 1

    def test_census_shapes(self):
        non_negative = census(4, 2000, 0, Sampler.NON_NEGATIVE_SPHERE, 32, OPTS)
        self.assertEqual(non_negative.counts[CensusClass.COMPLEX_INTERIOR], 0)
        signed = census(4, 2000, 0, Sampler.UNIFORM_SPHERE, 32, OPTS)
        # 球面均匀抽样下约四分之一的胜者是复解
        self.assertGreater(signed.fractions[CensusClass.COMPLEX_INTERIOR], 0.05)
        self.assertLess(signed.fractions[CensusClass.COMPLEX_INTERIOR], 0.45)
        self.assertEqual(max(signed.counts, key=signed.counts.get), CensusClass.REAL_INTERIOR)

    def test_gauge_direction_only_for_single_support(self):
        self.assertIsNone(gauge_direction(weight_fvector(make_fvector(4, [1, 1, 0, 0, 0]))))
