"""Tests for entanglement measures and their pairwise accounting."""

import math

import numpy as np
import pytest

from gaussforge.engineering import Recipe, engineer_state, random_recipe
from gaussforge.entanglement import (
    bosonic_entropy,
    entropy_one_vs_rest,
    entropy_via_pairwise,
    full_report,
    log_negativity_pair,
    pairwise_csv,
    schmidt_parameter,
)
from gaussforge.errors import NotPureError
from gaussforge.standard_form import (
    reconstruct_diagonal,
    standard_form_to_cm,
    to_standard_form,
)
from gaussforge.symplectic import CovarianceMatrix, apply_symplectic, vacuum_cm

from conftest import random_local_symplectic

TMS = Recipe(2, np.sqrt(2.0))  # a = 1.25, c = 0.75


def thermal_shannon_entropy(a: float, terms: int = 200) -> float:
    """Independent enumeration oracle: Shannon entropy of the photon-number
    distribution p_n = (1-x) x^n with x = nbar/(nbar+1), nbar = (a-1)/2."""
    nbar = (a - 1.0) / 2.0
    if nbar == 0.0:
        return 0.0
    x = nbar / (nbar + 1.0)
    total = 0.0
    for n in range(terms):
        p = (1.0 - x) * x**n
        total -= p * math.log2(p)
    return total


class TestSchmidtParameter:
    def test_vacuum(self):
        assert schmidt_parameter(vacuum_cm(2), 1) == pytest.approx(1.0, abs=1e-14)

    def test_two_mode_squeezed(self):
        assert schmidt_parameter(engineer_state(TMS), 1) == pytest.approx(1.25, abs=1e-12)

    def test_rejects_mixed(self):
        with pytest.raises(NotPureError):
            schmidt_parameter(CovarianceMatrix(1, np.diag([2.0, 2.0])), 1)

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_matches_complementary_reduction_eigenvalue(self, n):
        from gaussforge.symplectic import reduced_cm, williamson_spectrum

        cm = engineer_state(random_recipe(n, seed=13 * n))
        for k in range(1, n + 1):
            rest = [m for m in range(1, n + 1) if m != k]
            nontrivial = max(williamson_spectrum(reduced_cm(cm, rest)).values)
            assert schmidt_parameter(cm, k) == pytest.approx(nontrivial, abs=1e-7)


class TestBosonicEntropy:
    def test_unit_eigenvalue_is_zero(self):
        assert bosonic_entropy(1.0) == 0.0
        assert bosonic_entropy(1.0 + 1e-15) == 0.0

    def test_value_at_1_25_against_enumeration(self):
        assert bosonic_entropy(1.25) == pytest.approx(thermal_shannon_entropy(1.25), abs=1e-12)
        assert bosonic_entropy(1.25) == pytest.approx(0.5662, abs=5e-4)

    def test_strictly_increasing(self):
        grid = np.linspace(1.0 + 1e-9, 8.0, 200)
        values = [bosonic_entropy(a) for a in grid]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_nats_flag(self):
        assert bosonic_entropy(1.7, nats=True) == pytest.approx(
            bosonic_entropy(1.7) * math.log(2.0), abs=1e-14
        )


class TestEntropyOneVsRest:
    def test_vacuum_zero(self):
        assert entropy_one_vs_rest(vacuum_cm(3), 2) == 0.0

    def test_two_mode_squeezed(self):
        assert entropy_one_vs_rest(engineer_state(TMS), 1) == pytest.approx(
            thermal_shannon_entropy(1.25), abs=1e-12
        )


class TestEntropyViaPairwise:
    def test_two_mode_squeezed(self):
        sf = to_standard_form(engineer_state(TMS))
        assert entropy_via_pairwise(sf, 1) == pytest.approx(
            thermal_shannon_entropy(1.25), abs=1e-10
        )

    def test_vacuum(self):
        sf = to_standard_form(vacuum_cm(3))
        assert entropy_via_pairwise(sf, 1) == 0.0

    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_agrees_with_direct_entropy(self, n):
        for seed in range(6):
            cm = engineer_state(random_recipe(n, seed=300 * n + seed))
            sf = to_standard_form(cm)
            for k in range(1, n + 1):
                direct = entropy_one_vs_rest(cm, k)
                pairwise = entropy_via_pairwise(sf, k)
                assert abs(direct - pairwise) <= 1e-8


class TestLogNegativity:
    def test_two_mode_squeezed_closed_form(self):
        """For blocks a*I and diag(c, -c) the transposed minimum is a - c."""
        cm = engineer_state(TMS)
        assert log_negativity_pair(cm, 1, 2) == pytest.approx(-math.log2(0.5), abs=1e-10)

    def test_vacuum_pair_zero(self):
        assert log_negativity_pair(vacuum_cm(3), 1, 3) == 0.0

    def test_symmetric_in_modes(self):
        cm = engineer_state(random_recipe(4, 321))
        for i, j in [(1, 2), (2, 4), (1, 3)]:
            assert log_negativity_pair(cm, i, j) == pytest.approx(
                log_negativity_pair(cm, j, i), abs=1e-10
            )

    def test_rejects_equal_modes(self):
        with pytest.raises(ValueError, match="distinct"):
            log_negativity_pair(vacuum_cm(2), 1, 1)

    def test_nats_flag(self):
        cm = engineer_state(TMS)
        assert log_negativity_pair(cm, 1, 2, nats=True) == pytest.approx(
            math.log(2.0), abs=1e-10
        )


class TestFullReport:
    def test_vacuum_all_zero(self):
        report = full_report(vacuum_cm(3))
        assert report.schmidt_parameter == pytest.approx(1.0, abs=1e-14)
        assert all(e == 0.0 for e in report.per_mode_entropy)
        np.testing.assert_array_equal(report.pairwise_logneg, np.zeros((3, 3)))
        np.testing.assert_array_equal(report.pairwise_detblocks, np.zeros((3, 3)))

    def test_three_mode_consistency(self):
        cm = engineer_state(random_recipe(3, 77))
        report = full_report(cm)
        sf = to_standard_form(cm)
        for k in range(1, 4):
            assert report.per_mode_entropy[k - 1] == pytest.approx(
                entropy_via_pairwise(sf, k), abs=1e-8
            )

    def test_two_mode_entangled_whenever_squeezed(self):
        for s in (0.5, 1.3, 2.0):
            report = full_report(engineer_state(Recipe(2, s)))
            assert report.pairwise_logneg[0, 1] > 0.0
        report = full_report(engineer_state(Recipe(2, 1.0)))
        assert report.pairwise_logneg[0, 1] == 0.0

    def test_rejects_mixed(self):
        with pytest.raises(NotPureError):
            full_report(CovarianceMatrix(1, np.diag([2.0, 2.0])))

    def test_matrices_symmetric_zero_diagonal(self):
        report = full_report(engineer_state(random_recipe(4, 9)))
        np.testing.assert_array_equal(report.pairwise_logneg, report.pairwise_logneg.T)
        np.testing.assert_array_equal(np.diag(report.pairwise_logneg), np.zeros(4))
        np.testing.assert_array_equal(report.pairwise_detblocks, report.pairwise_detblocks.T)


class TestLocalUnitaryInvariance:
    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_entropies_and_lognegs_invariant(self, n, rng):
        cm = engineer_state(random_recipe(n, seed=1000 + n))
        base = full_report(cm)
        for _ in range(5):
            moved = apply_symplectic(cm, random_local_symplectic(n, rng))
            report = full_report(moved)
            np.testing.assert_allclose(
                report.per_mode_entropy, base.per_mode_entropy, atol=1e-8
            )
            np.testing.assert_allclose(
                report.pairwise_logneg, base.pairwise_logneg, atol=1e-8
            )


class TestMonotoneResponse:
    def test_det_block_responds_to_one_correlation(self):
        """Raising one off-diagonal of V_Q strictly raises |det eps_ij| for that pair."""
        base = np.array([0.0, 0.3, 0.2])  # N=3 off-diagonals (12, 13, 23)
        dets = []
        for v in [0.0, 0.2, 0.4, 0.6, 0.8]:
            off = base.copy()
            off[0] = v
            state = standard_form_to_cm(reconstruct_diagonal(off, 3))
            dets.append(abs(np.linalg.det(state.cross_block(1, 2))))
        assert all(b > a for a, b in zip(dets, dets[1:]))


class TestCsvExport:
    def test_headers_and_shape(self):
        report = full_report(engineer_state(random_recipe(3, 4)))
        text = pairwise_csv(report.pairwise_logneg)
        lines = text.strip().split("\n")
        assert lines[0] == "mode,1,2,3"
        assert len(lines) == 4
        assert lines[1].startswith("1,")

    def test_values_round_trip(self):
        report = full_report(engineer_state(random_recipe(3, 4)))
        text = pairwise_csv(report.pairwise_logneg)
        body = [row.split(",")[1:] for row in text.strip().split("\n")[1:]]
        parsed = np.array([[float(cell) for cell in row] for row in body])
        np.testing.assert_array_equal(parsed, report.pairwise_logneg)
