"""Fock-space oracle: construction, partial transpose, eigensolve, negativity.

The independent third opinion used below is the analytic block structure of
the partial transpose: for the vacuum mixture, PT couples |a,b> with |b,a>
in 2x2 blocks [[0, x], [x, 0]] with x = p (1-lam^2) lam^(a+b), so the
negative eigenvalues are exactly {-x : a < b <= cutoff} and the diagonal
sector stays nonnegative.  This is used only in tests, never by the oracle.
"""

import math

import numpy as np
import pytest

from cvmix import fock_oracle as fo
from cvmix.errors import (
    InvalidParameterError,
    NumericalFailureError,
    TruncationError,
)


def pt_block_negative_sum(p, r, cutoff):
    lam = math.tanh(r)
    total = 0.0
    for a in range(cutoff + 1):
        for b in range(a + 1, cutoff + 1):
            total += p * (1.0 - lam * lam) * lam ** (a + b)
    return total


class TestAutoCutoff:
    def test_vacuum(self):
        assert fo.auto_cutoff(0.0) == 0

    @pytest.mark.parametrize("r", [0.1, 0.25, 0.5, 0.75])
    def test_is_smallest_adequate(self, r):
        lam = math.tanh(r)
        c = fo.auto_cutoff(r)
        assert lam ** (2 * (c + 1)) < fo.TAIL_TARGET
        assert lam ** (2 * c) >= fo.TAIL_TARGET

    def test_cap(self):
        assert fo.auto_cutoff(5.0) == fo.CUTOFF_CAP


class TestTmsvFockDensity:
    def test_vacuum_projector(self):
        rho = fo.tmsv_fock_density(0.0, cutoff=3)
        expected = np.zeros((16, 16))
        expected[0, 0] = 1.0
        np.testing.assert_array_equal(rho.matrix, expected)
        assert rho.trace_deficit == 0.0

    def test_entries_and_deficit(self):
        rho = fo.tmsv_fock_density(0.5, cutoff=32)
        lam = math.tanh(0.5)
        assert rho.trace_deficit == lam ** 66
        assert rho.trace_deficit < 1e-22
        idx = 1 * 33 + 1  # flat index of |1,1>
        assert rho.matrix[idx, idx] == pytest.approx((1 - lam**2) * lam**2, abs=1e-15)
        assert rho.matrix[0, idx] == pytest.approx((1 - lam**2) * lam, abs=1e-15)

    def test_truncation_error_reports_required_cutoff(self):
        with pytest.raises(TruncationError) as err:
            fo.tmsv_fock_density(1.0, cutoff=4)
        lam = math.tanh(1.0)
        needed = err.value.required_cutoff
        assert lam ** (2 * (needed + 1)) <= fo.TAIL_LIMIT
        assert lam ** (2 * needed) > fo.TAIL_LIMIT
        assert str(needed) in str(err.value)

    def test_rejects_bad_parameters(self):
        with pytest.raises(InvalidParameterError):
            fo.tmsv_fock_density(-0.2)
        with pytest.raises(InvalidParameterError):
            fo.tmsv_fock_density(0.3, cutoff=-1)

    def test_matrix_immutable(self):
        rho = fo.tmsv_fock_density(0.3)
        with pytest.raises(ValueError):
            rho.matrix[0, 0] = 0.5


class TestMixtureDensity:
    def test_weight_one_is_tmsv(self):
        np.testing.assert_array_equal(
            fo.mixture_density(1.0, 0.4, cutoff=8).matrix,
            fo.tmsv_fock_density(0.4, cutoff=8).matrix)

    def test_weight_zero_is_vacuum(self):
        rho = fo.mixture_density(0.0, 0.1, cutoff=3)
        expected = np.zeros((16, 16))
        expected[0, 0] = 1.0
        np.testing.assert_array_equal(rho.matrix, expected)

    def test_physicality_on_demand(self):
        fo.mixture_density(0.5, 0.5, cutoff=8).validate_physical()


class TestPartialTranspose:
    def test_vacuum_fixed_point(self):
        rho = fo.mixture_density(0.0, 0.1, cutoff=3)
        np.testing.assert_array_equal(fo.partial_transpose_fock(rho), rho.matrix)

    @pytest.mark.parametrize("p,r,cutoff", [(1.0, 0.5, 12), (0.4, 0.8, 18), (0.7, 0.2, 4)])
    def test_involution_and_trace(self, p, r, cutoff):
        rho = fo.mixture_density(p, r, cutoff=cutoff)
        pt = fo.partial_transpose_fock(rho)
        assert np.trace(pt) == pytest.approx(np.trace(rho.matrix), abs=0)
        np.testing.assert_array_equal(fo.partial_transpose_fock(pt), rho.matrix)
        assert np.max(np.abs(pt - pt.T)) == 0.0

    def test_minimum_eigenvalue_matches_block_formula(self):
        rho = fo.tmsv_fock_density(0.5, cutoff=32)
        lam = math.tanh(0.5)
        w = fo.hermitian_eigenvalues(fo.partial_transpose_fock(rho)).values
        assert w[0] == pytest.approx(-(1 - lam**2) * lam, abs=1e-12)

    def test_rejects_non_square_dimension(self):
        with pytest.raises(InvalidParameterError):
            fo.partial_transpose_fock(np.eye(3))


class TestHermitianEigenvalues:
    def test_swap(self):
        w = fo.hermitian_eigenvalues([[0.0, 1.0], [1.0, 0.0]]).values
        np.testing.assert_allclose(w, [-1.0, 1.0], atol=1e-12)

    def test_diagonal(self):
        w = fo.hermitian_eigenvalues(np.diag([2.0, -3.0, 0.5])).values
        np.testing.assert_allclose(w, [-3.0, 0.5, 2.0], atol=0)

    def test_block_sum_of_negatives(self):
        rho = fo.mixture_density(0.5, 0.5, cutoff=32)
        w = fo.hermitian_eigenvalues(fo.partial_transpose_fock(rho)).values
        got = float(np.sum(w[w < 0]))
        assert got == pytest.approx(-pt_block_negative_sum(0.5, 0.5, 32), abs=1e-10)

    def test_trace_identities(self):
        rng = np.random.default_rng(3)
        a = rng.standard_normal((30, 30))
        a = (a + a.T) / 2
        w = fo.hermitian_eigenvalues(a).values
        assert float(np.sum(w)) == pytest.approx(np.trace(a), abs=1e-9)
        assert float(np.sum(w * w)) == pytest.approx(np.sum(a * a), abs=1e-9)

    def test_rejects_asymmetric(self):
        with pytest.raises(InvalidParameterError, match="symmetric"):
            fo.hermitian_eigenvalues([[0.0, 1.0], [0.5, 0.0]])

    def test_budget_error_names_budget(self):
        rng = np.random.default_rng(4)
        a = rng.standard_normal((6, 6))
        a = (a + a.T) / 2
        with pytest.raises(NumericalFailureError, match="2 full sweeps"):
            fo.hermitian_eigenvalues(a, max_sweeps=2)


class TestNegativityNumeric:
    def test_vacuum_is_separable(self):
        assert fo.negativity_numeric(fo.mixture_density(0.0, 0.2, cutoff=4)) == 0.0

    def test_pure_value(self):
        got = fo.negativity_numeric(fo.tmsv_fock_density(0.25, cutoff=32))
        assert got == pytest.approx(math.expm1(0.5) / 2.0, abs=1e-8)

    def test_mixture_value(self):
        got = fo.negativity_numeric(fo.mixture_density(0.3, 0.5, cutoff=32))
        assert got == pytest.approx(0.3 * math.expm1(1.0) / 2.0, abs=1e-8)

    def test_matches_block_formula_exactly(self):
        # same truncated operator, so agreement is at eigensolver precision
        got = fo.negativity_numeric(fo.mixture_density(0.6, 0.4, cutoff=16))
        assert got == pytest.approx(pt_block_negative_sum(0.6, 0.4, 16), abs=1e-11)

    def test_refuses_large_deficit(self):
        lam2 = math.tanh(0.5) ** 2
        cutoff = 0
        while lam2 ** (cutoff + 1) >= 1e-6:
            cutoff += 1  # deficit just below the constructor limit
        rho = fo.tmsv_fock_density(0.5, cutoff=cutoff)
        assert rho.trace_deficit >= 1e-8
        with pytest.raises(TruncationError):
            fo.negativity_numeric(rho)

    @pytest.mark.parametrize("r", [0.1, 0.25, 0.5])
    @pytest.mark.parametrize("p", [0.0, 0.25, 0.5, 0.75, 1.0])
    def test_oracle_matches_closed_form(self, r, p):
        got = fo.negativity_numeric(fo.mixture_density(p, r))
        assert got == pytest.approx(p * math.expm1(2 * r) / 2.0, abs=1e-6)

    def test_mixture_linearity(self):
        base = fo.negativity_numeric(fo.tmsv_fock_density(0.5))
        for p in (0.25, 0.5, 0.75):
            got = fo.negativity_numeric(fo.mixture_density(p, 0.5))
            assert got == pytest.approx(p * base, abs=1e-8)

    def test_cutoff_monotone_tail(self):
        lam = math.tanh(0.5)
        for cutoff in (12, 20):
            low = fo.negativity_numeric(fo.tmsv_fock_density(0.5, cutoff=cutoff))
            high = fo.negativity_numeric(fo.tmsv_fock_density(0.5, cutoff=cutoff + 8))
            assert high >= low - 1e-12
            assert abs(high - low) < 10.0 * lam ** (cutoff + 1)
