import math

import pytest

from pytransdiam.fekete.pullback import log_gap, pullback_check, pullback_rhs
from pytransdiam.polycore.polymap import map_from_expressions
from pytransdiam.utils.exceptions import NonRegularMapError


def test_log_gap():
    assert log_gap(2.0, 2.0) == 0.0
    assert log_gap(1.0, math.e) == pytest.approx(1.0)
    assert log_gap(0.0, 1.0) == math.inf


def test_pullback_rhs():
    # (2 z1^2, 2 z2^2): |Res| = 16, exponent -1/8
    assert pullback_rhs(16.0, 1.0, 2, 2) == pytest.approx(2 ** -0.5)
    assert pullback_rhs(1.0, 4.0, 1, 2) == pytest.approx(2.0)


def test_identity_pullback_is_exact(identity_2d, unit_bidisc, greedy_budget):
    report = pullback_check(identity_2d, unit_bidisc, 2, greedy_budget,
                            seed=5)
    assert report.res_abs == 1
    assert report.lhs == report.rhs
    assert report.gap == 0.0
    assert report.leading_gap == 0.0
    assert len(report.base_rows) == len(report.preimage_rows) == 2


def test_non_regular_map(degenerate_quadratic, unit_bidisc, greedy_budget):
    with pytest.raises(NonRegularMapError):
        pullback_check(degenerate_quadratic, unit_bidisc, 1, greedy_budget)


def test_non_regular_map_rejected_before_search(monkeypatch,
                                                degenerate_quadratic,
                                                unit_bidisc, greedy_budget):
    def no_search(*args, **kwargs):
        raise AssertionError('diam_sequence ran for a non-regular map')

    monkeypatch.setattr('pytransdiam.fekete.pullback.diam_sequence',
                        no_search)
    with pytest.raises(NonRegularMapError):
        pullback_check(degenerate_quadratic, unit_bidisc, 3, greedy_budget)


@pytest.mark.slow
class TestFullBudget(object):

    def test_diagonal_scaling(self, unit_bidisc, full_budget):
        """
        (2 z1^2, z2^2) pulls the bidisc back to the polydisc (2^-1/2, 1),
        whose d_n is 2^-1/4 times that of the bidisc at every n.
        """
        F = map_from_expressions(['2*z1**2', 'z2**2'])
        report = pullback_check(F, unit_bidisc, 8, full_budget, seed=3)
        assert report.res_abs == pytest.approx(4.0)
        base = report.base_rows[-1].d_n
        assert log_gap(report.lhs, 4 ** (-1 / 8) * base) <= 0.05

    def test_unit_resultant(self, unit_bidisc, full_budget):
        F = map_from_expressions(['z1**2 + z2**2', 'z1*z2'])
        report = pullback_check(F, unit_bidisc, 8, full_budget, seed=3)
        assert report.res_abs == pytest.approx(1.0)
        assert report.rhs == pytest.approx(report.base_rows[-1].d_n ** 0.5)
        assert 0 < report.lhs < math.inf

    def test_leading_part_under_translation(self, unit_bidisc, full_budget):
        """
        F(z) = F_h(z1 + 1, z2): the preimages differ by a translation, which
        leaves every d_n unchanged.
        """
        F = map_from_expressions(['z1**2 + z2**2 + 2*z1 + 1', 'z1*z2 + z2'])
        report = pullback_check(F, unit_bidisc, 4, full_budget, seed=3)
        assert report.leading_gap <= 0.05
