import numpy as np
import pytest

from lemniscate.admissibility import GridSpec
from lemniscate.catalog import UnknownLemmaError
from lemniscate.thresholds import (BracketError, certified_at,
                                   closed_form_beta, find_beta_threshold)

SQRT2 = np.sqrt(2.0)

CLOSED = {
    "one0": 4 - 2 * SQRT2,
    "one1": 4 * SQRT2 - 4,
    "one2": 8 - 4 * SQRT2,
    "moebius": 2.0,
    "sq2": 2 * SQRT2,
}


class TestClosedForms:
    @pytest.mark.parametrize("lemma_id,value", sorted(CLOSED.items()))
    def test_values(self, lemma_id, value):
        assert closed_form_beta(lemma_id) == pytest.approx(value, abs=1e-15)

    def test_no_closed_form(self):
        with pytest.raises(UnknownLemmaError):
            closed_form_beta("first3")
        with pytest.raises(UnknownLemmaError):
            closed_form_beta("first0")


class TestBisection:
    @pytest.mark.parametrize("lemma_id", sorted(CLOSED))
    def test_recovers_closed_forms(self, lemma_id):
        result = find_beta_threshold(lemma_id)
        assert abs(result.beta_star - CLOSED[lemma_id]) <= max(result.tolerance, 2e-3)

    @pytest.mark.parametrize("lemma_id,ref", [("first3", 1.1874), ("first4", 3.58095)])
    def test_recovers_tabulated_decimals(self, lemma_id, ref):
        result = find_beta_threshold(lemma_id)
        assert abs(result.beta_star - ref) <= 5e-3

    def test_bracket_invariants(self):
        result = find_beta_threshold("one1", tol=1e-4)
        assert result.beta_low < result.beta_star <= result.beta_high
        assert result.beta_high - result.beta_low <= result.tolerance
        assert certified_at("one1", result.beta_high)
        assert not certified_at("one1", result.beta_low)
        assert result.closed_form == pytest.approx(4 * SQRT2 - 4)
        assert result.iterations > 0

    def test_halving_grid_spacing_is_stable(self):
        coarse = find_beta_threshold("one1", grid=GridSpec(theta_points=1001, m_points=32))
        fine = find_beta_threshold("one1", grid=GridSpec(theta_points=2001, m_points=64))
        assert abs(coarse.beta_star - fine.beta_star) < 1e-4

    def test_explicit_search_interval(self):
        result = find_beta_threshold("moebius", search=(1.5, 2.5), tol=1e-4)
        assert result.beta_star == pytest.approx(2.0, abs=2e-3)


class TestBracketErrors:
    def test_interval_entirely_certified(self):
        with pytest.raises(BracketError):
            find_beta_threshold("one0", search=(3.0, 6.0))

    def test_interval_entirely_uncertified(self):
        with pytest.raises(BracketError):
            find_beta_threshold("one0", search=(0.05, 0.5))

    def test_unconditional_lemma_has_no_threshold(self):
        with pytest.raises(BracketError):
            find_beta_threshold("first0")

    def test_bad_interval(self):
        with pytest.raises(BracketError):
            find_beta_threshold("one0", search=(2.0, 1.0))
