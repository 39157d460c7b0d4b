import math
from unittest import TestCase, skipUnless

import mpmath
import numpy as np

from capverify.errors import BudgetExhausted, CertificateFailed, DomainViolation
from capverify.interval_core import ZERO, Interval, sqrt
from capverify.quad_rigor import value_enclosure
from capverify.reporting import Status
from capverify.spectral_encloser import (
    ConstantKernel,
    IntervalMatrix,
    angular_integral,
    build_profile,
    discretize,
    flat_profile,
    kernel_I,
    kernel_T3,
    ldl_inertia,
    multiplier_range,
    real_eigenpair_certificate,
    seam_continuity,
    symmetric_spectrum_bounds,
    symmetric_split,
    verify_spectral,
)
from capverify.spectral_encloser.kernels import (
    cell_kernel_integral,
    log_bound,
    window_integral_bound,
    window_square_bound,
)
from capverify.spectral_encloser.linalg import gershgorin_lower_bound
from capverify.tests import FULL_TESTS


def second_difference(n: int) -> np.ndarray:
    """Tridiagonal [-1, 2, -1]: eigenvalues 2 - 2 cos(k pi / (n + 1))"""
    return 2 * np.eye(n) - np.eye(n, k=1) - np.eye(n, k=-1)


def second_difference_eigenvalues(n: int) -> np.ndarray:
    return 2 - 2 * np.cos(np.arange(1, n + 1) * np.pi / (n + 1))


def angular_reference(m: int, q: float):
    def integrand(x):
        return mpmath.cos(m * x) / mpmath.sqrt(1 + q * q - 2 * q * mpmath.cos(x))

    return mpmath.quad(integrand, [-mpmath.pi, 0, mpmath.pi])


def segment_distance(z: complex, segment: Interval) -> float:
    return math.hypot(max(segment.lo - z.real, z.real - segment.hi, 0.0), z.imag)


class ProfileTestCase(TestCase):
    def test_profile(self):
        profile = build_profile()
        self.assertEqual(value_enclosure(profile.f, 0.5), Interval(1, 1))
        self.assertEqual(value_enclosure(profile.f, 1.2), ZERO)
        self.assertAlmostEqual(value_enclosure(profile.f, 0.975).mid, 0.5, delta=1e-9)
        self.assertTrue(profile.f_rho_range(Interval(0.96, 0.99)).certainly_negative())
        self.assertEqual(profile.band, Interval(0.95, 1.0))
        self.assertEqual(seam_continuity(profile), {'inner': True, 'outer': True})
        with self.assertRaises(ValueError):
            build_profile(1.0, 0.95)

    def test_flat_profile(self):
        profile = flat_profile()
        self.assertEqual(profile.f_rho_range(Interval(0.96, 0.99)), ZERO)
        self.assertEqual(value_enclosure(profile.f_rho, 0.97), ZERO)


class AngularIntegralTestCase(TestCase):
    def test_against_mpmath(self):
        for m, q in ((0, 0.3), (1, 0.5), (3, 0.8), (3, 1.25)):
            expected = angular_reference(m, q)
            value = angular_integral(m, q)
            self.assertTrue(value.contains(float(expected)), f'{m=} {q=}: {value} vs {expected}')
            self.assertLess(value.width_up(), 1e-8)

    def test_errors(self):
        with self.assertRaises(ValueError):
            angular_integral(-1, 0.5)
        with self.assertRaises(DomainViolation):
            angular_integral(1, 1.0)
        with self.assertRaises(DomainViolation):
            angular_integral(1, Interval(0.9, 1.1))


def angular_closed_form(m: int, q):
    """2 pi (1/2)_m / m! q^m 2F1(1/2, m + 1/2; m + 1; q^2), reflected for q > 1"""
    if q > 1:
        return angular_closed_form(m, 1 / q) / q
    factor = 2 * mpmath.pi * mpmath.rf(mpmath.mpf(1) / 2, m) / mpmath.factorial(m)
    return factor * q**m * mpmath.hyp2f1(mpmath.mpf(1) / 2, m + mpmath.mpf(1) / 2, m + 1, q * q)


def band_slope(r):
    """f_rho of the default C^4 profile on its band [0.95, 1]"""
    s = (r - mpmath.mpf(0.95)) / (mpmath.mpf(1.0) - mpmath.mpf(0.95))
    return -630 * s**4 * (1 - s) ** 4 / (mpmath.mpf(1.0) - mpmath.mpf(0.95))


def kernel_I_reference(rho: float):
    rho = mpmath.mpf(rho)
    points = [0.95, rho, 1.0] if 0.95 < rho < 1.0 else [0.95, 1.0]
    integral = mpmath.quad(lambda r: band_slope(r) * angular_closed_form(1, rho / r), points)
    return -integral / (2 * mpmath.pi)


class KernelTestCase(TestCase):
    def test_closed_form(self):
        with mpmath.workdps(20):
            self.assertAlmostEqual(float(angular_closed_form(3, 0.5)), float(angular_reference(3, 0.5)), places=10)

    def test_kernel_T3(self):
        profile = build_profile()
        value = kernel_T3(0.5, 0.97, profile)
        self.assertTrue(value.certainly_negative())
        with mpmath.workdps(30):
            slope = band_slope(mpmath.mpf(0.97))
            q = mpmath.mpf(0.5) / mpmath.mpf(0.97)
            truth = slope * (mpmath.mpf(0.97) / mpmath.mpf(0.5)) * angular_closed_form(3, q) / (2 * mpmath.pi)
            self.assertTrue(mpmath.mpf(value.lo) <= truth <= mpmath.mpf(value.hi))
        self.assertEqual(kernel_T3(0.5, 0.97, flat_profile()), ZERO)

    def test_kernel_T3_points(self):
        profile = build_profile()
        rng = np.random.default_rng(7)
        for rho, rho_p in zip(rng.uniform(0.3, 0.9, 20), rng.uniform(0.955, 0.995, 20)):
            value = kernel_T3(float(rho), float(rho_p), profile)
            with mpmath.workdps(20):
                r, rp = mpmath.mpf(float(rho)), mpmath.mpf(float(rho_p))
                truth = band_slope(rp) * (rp / r) * angular_closed_form(3, r / rp) / (2 * mpmath.pi)
            self.assertTrue(value.contains(float(truth)), f'{rho=} {rho_p=}: {value} vs {truth}')

    def test_kernel_T3_diagonal(self):
        profile = build_profile()
        self.assertEqual(kernel_T3(0.97, 0.97, profile), Interval(-math.inf, 0.0))
        self.assertEqual(kernel_T3(Interval(0.96, 0.98), 0.97, profile), Interval(-math.inf, 0.0))
        # the integral over the touching cells stays finite
        cell = Interval(0.96, 0.98)
        integral = cell_kernel_integral(cell, cell, profile)
        self.assertTrue(integral.is_bounded)
        self.assertLessEqual(integral.hi, 0.0)

    def test_kernel_T3_symmetry(self):
        # J_m(q) sqrt(q) only depends on q + 1/q
        profile = build_profile(0.5, 1.5)
        rng = np.random.default_rng(11)

        def reduced(rho: float, rho_p: float) -> Interval:
            q = Interval.point(rho) / rho_p
            return kernel_T3(rho, rho_p, profile) * q / profile.f_rho_range(Interval.point(rho_p)) * sqrt(q)

        for rho, rho_p in zip(rng.uniform(0.55, 0.8, 10), rng.uniform(1.1, 1.45, 10)):
            a = reduced(float(rho), float(rho_p))
            b = reduced(float(rho_p), float(rho))
            self.assertIsNotNone(a.intersect(b), f'{rho=} {rho_p=}: {a} vs {b}')

    def test_kernel_I(self):
        profile = build_profile()
        for rho in (0.5, 0.9):
            value = kernel_I(rho, profile, tol=1e-4)
            with mpmath.workdps(20):
                expected = kernel_I_reference(rho)
            self.assertTrue(value.contains(float(expected)), f'{rho=}: {value} vs {expected}')
            self.assertLess(value.width_up(), 1e-3)
        self.assertAlmostEqual(kernel_I(0.5, profile, tol=1e-4).mid, 0.286891989, delta=1e-3)

    def test_window_integral_bound(self):
        rho = Interval(1.0, 1.0)
        window = Interval(0.99, 1.01)
        bound = window_integral_bound(rho, window)
        self.assertEqual(bound.lo, 0.0)
        with mpmath.workdps(20):
            truth = mpmath.quad(lambda r: angular_closed_form(1, 1 / r), [0.99, 1, 1.01])
        self.assertGreater(bound.hi, truth)
        # only the log singularity remains, no blow up of the bound:
        self.assertLess(bound.hi, 1.0)
        square = window_square_bound(rho, window)
        self.assertEqual(square.lo, 0.0)
        self.assertGreater(square.hi, 0.0)

    def test_log_bound_errors(self):
        with self.assertRaises(DomainViolation):
            log_bound(Interval(3, 3), Interval(1, 1.1))
        with self.assertRaises(DomainViolation):
            log_bound(Interval(0, 1), Interval(1, 1.1))

    def test_flat_kernels(self):
        profile = flat_profile()
        self.assertEqual(kernel_I(0.97, profile), ZERO)
        self.assertEqual(multiplier_range(Interval(0.9, 0.95), profile), ZERO)
        self.assertEqual(cell_kernel_integral(Interval(0.9, 0.95), Interval(0.95, 1.0), profile), ZERO)


class IntervalMatrixTestCase(TestCase):
    def test_basics(self):
        A = IntervalMatrix.from_array(np.diag([1.0, 2.0, 3.0]))
        self.assertEqual(A.n, 3)
        self.assertTrue(A.quadratic_form([1, 0, 0]).contains(1))
        self.assertAlmostEqual(A.spectral_norm_bound().hi, 3.0, delta=1e-12)
        self.assertEqual(gershgorin_lower_bound(A), 1.0)
        with self.assertRaises(ValueError):
            IntervalMatrix.from_rows([[1, 2]])

    def test_inertia(self):
        A = IntervalMatrix.from_array(np.diag([1.0, 2.0, 3.0]))
        self.assertEqual(ldl_inertia(A, 0.5), 0)
        self.assertEqual(ldl_inertia(A, 3.5), 3)
        with self.assertRaises(CertificateFailed):
            ldl_inertia(A, 2.0)

    def test_inertia_against_numpy(self):
        T = second_difference(6)
        eigenvalues = np.linalg.eigvalsh(T)
        A = IntervalMatrix.from_array(T)
        for sigma in (0.9, 2.8):
            self.assertEqual(ldl_inertia(A, sigma), int(np.sum(eigenvalues < sigma)))


class CertificateTestCase(TestCase):
    def test_spectrum_bounds(self):
        expected = second_difference_eigenvalues(6)
        bounds = symmetric_spectrum_bounds(IntervalMatrix.from_array(second_difference(6)))
        self.assertTrue(bounds.lambda_star.contains(expected[0]))
        self.assertTrue(bounds.second.contains(expected[1]))
        self.assertTrue(bounds.gap.contains(expected[1] - expected[0]))
        self.assertTrue(bounds.gap.certainly_positive())

    def test_near_symmetric(self):
        T = second_difference(6)
        N = np.zeros((6, 6))
        N[0, 1], N[1, 0] = 0.01, -0.01
        matrix = IntervalMatrix.from_array(T + N)

        S, anti_norm = symmetric_split(matrix)
        self.assertAlmostEqual(S[0, 1].mid, -1.0, delta=1e-12)
        self.assertAlmostEqual(anti_norm.hi, 0.01, delta=1e-6)
        bounds = symmetric_spectrum_bounds(S)
        certificate = real_eigenpair_certificate(bounds.lambda_star, bounds.gap, anti_norm)
        self.assertTrue(certificate.real_eigen_ok)

        lowest = min(np.linalg.eigvals(T + N), key=lambda z: z.real)
        self.assertLess(abs(lowest.imag), 1e-12)
        self.assertTrue(certificate.eigenvalue.contains(float(lowest.real)))

    def test_two_by_two(self):
        eps = 1e-3
        bounds = symmetric_spectrum_bounds(IntervalMatrix.from_array([[0, eps], [eps, 1]]))
        root = math.sqrt(1 + 4 * eps * eps)
        self.assertAlmostEqual(bounds.lambda_star.mid, (1 - root) / 2, delta=1e-10)
        self.assertAlmostEqual(bounds.lambda_star.mid, -eps * eps, delta=1e-10)
        self.assertAlmostEqual(bounds.gap.mid, root, delta=1e-9)
        certificate = real_eigenpair_certificate(bounds.lambda_star, bounds.gap, ZERO)
        self.assertTrue(certificate.real_eigen_ok)

    def test_random_matrices(self):
        rng = np.random.default_rng(2024)
        issued = refused = 0
        for _ in range(100):
            Q, _ = np.linalg.qr(rng.normal(size=(5, 5)))
            T = Q @ np.diag(np.sort(rng.uniform(-2, 2, 5))) @ Q.T
            B = rng.normal(size=(5, 5))
            A = (T + T.T) / 2 + 10 ** rng.uniform(-3, 0.5) * (B - B.T) / 2

            S, anti_norm = symmetric_split(IntervalMatrix.from_array(A))
            try:
                bounds = symmetric_spectrum_bounds(S)
            except CertificateFailed:
                continue
            certificate = real_eigenpair_certificate(bounds.lambda_star, bounds.gap, anti_norm)

            radius = anti_norm.hi
            segment = bounds.lambda_star
            inside = [z for z in np.linalg.eigvals(A) if segment_distance(z, segment) <= radius]
            if certificate.real_eigen_ok:
                issued += 1
                self.assertEqual(len(inside), 1)
                self.assertLess(abs(inside[0].imag), 1e-9)
                self.assertTrue(certificate.eigenvalue.contains(float(inside[0].real)))
            else:
                refused += 1
            if any(abs(z.imag) > 1e-9 for z in inside):
                self.assertFalse(certificate.real_eigen_ok)
        self.assertGreater(issued, 10)
        self.assertGreater(refused, 10)

    def test_overlapping_discs(self):
        certificate = real_eigenpair_certificate(Interval(-1, -1), Interval(1, 1), Interval(0, 0.6))
        self.assertFalse(certificate.real_eigen_ok)
        self.assertIsNone(certificate.eigenvalue)
        self.assertIn('may overlap', certificate.reason)


class DiscretizeTestCase(TestCase):
    def test_constant_kernel(self):
        operator = discretize(
            build_profile(0.5, 1.5), 4, kernel=ConstantKernel(Interval(3, 3)), multiplier=lambda cell: Interval(1, 1)
        )
        self.assertEqual(operator.M[0, 1], Interval(0.75, 0.75))
        self.assertEqual(operator.M[2, 2], Interval(1.75, 1.75))
        self.assertEqual(operator.truncation, ZERO)
        self.assertEqual(len(operator.cells), 4)
        self.assertEqual(operator.summary()['n'], 4)

        # rank one plus identity: eigenvalues 1 (three times) and 1 + 4 * 0.75
        self.assertEqual(ldl_inertia(operator.M, 2.0), 3)
        with self.assertRaises(ValueError):
            discretize(build_profile(0.5, 1.5), 1, kernel=ConstantKernel(ZERO))


@skipUnless(FULL_TESTS, 'set CAPVERIFY_FULL_TESTS=1 to run the full verifications')
class FullSpectralTestCase(TestCase):
    def test_verify_spectral(self):
        report = verify_spectral(n=8)
        self.assertIn(report.status, (Status.PASS, Status.UNKNOWN))
        self.assertEqual(report.result('seam_continuity')['inner'], True)
        self.assertIn('real_eigen_ok', report.result('certificate'))

    def test_kernel_I_points(self):
        profile = build_profile()
        rng = np.random.default_rng(3)
        for rho in (0.97, *rng.uniform(0.3, 1.3, 19)):
            value = kernel_I(float(rho), profile, tol=1e-5)
            with mpmath.workdps(20):
                expected = kernel_I_reference(float(rho))
            self.assertTrue(value.contains(float(expected)), f'{rho=}: {value} vs {expected}')

    def test_kernel_I_inclusion(self):
        profile = build_profile()
        try:
            value = kernel_I(Interval(0.9, 0.91), profile, tol=1e-4, budget=2000)
        except BudgetExhausted as err:
            # the spread of I over the radius range is wider than tol
            value = err.enclosure.value
        for rho in (0.9, 0.905, 0.91):
            with mpmath.workdps(20):
                expected = kernel_I_reference(rho)
            self.assertTrue(value.contains(float(expected)), f'{rho=}: {value} vs {expected}')
