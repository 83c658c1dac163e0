from __future__ import annotations

import pytest

from blockverify.linalg import det, is_positive_definite
from blockverify.tame import (
    FAMILIES,
    FAMILY_IDS,
    InadmissibleParametersError,
    TameFamilySpec,
    UnknownFamilyError,
    admissibility_problems,
    admissible_specs,
    defect_orders,
    family_cartan,
    iter_family_matrices,
    sweep,
    sweep_all,
    tame_trace_check,
    uniform_bound,
)


def cartan(fid, d, **params):
    return family_cartan(TameFamilySpec(fid, params, d)).to_lists()


def test_twelve_families():
    assert len(FAMILY_IDS) == 12
    assert {f for f in FAMILY_IDS if FAMILIES[f].speculative} == {"SD3H", "SD3C2"}


class TestMatrices:
    def test_two_simple(self):
        assert cartan("TWO_SIMPLE", 16, k=2, r=4) == [[8, 4], [4, 6]]

    def test_d3k(self):
        assert cartan("D3K", 8, a=1, k=2) == [[2, 1, 1], [1, 3, 2], [1, 2, 3]]

    def test_sd3a1(self):
        assert cartan("SD3A1", 4, k=1) == [[4, 2, 2], [2, 2, 1], [2, 1, 3]]

    def test_unknown_family(self):
        with pytest.raises(UnknownFamilyError):
            TameFamilySpec("BOGUS", {}, 8)

    def test_inadmissible(self):
        with pytest.raises(InadmissibleParametersError, match="inadmissible parameters"):
            family_cartan(TameFamilySpec("D3K", {"a": 1, "k": 3}, 8))
        assert admissibility_problems(TameFamilySpec("D3K", {"a": 1, "k": 2}, 12)) == ["|D|=12 is not a power of 2"]
        assert "takes parameters" in admissibility_problems(TameFamilySpec("D3K", {"s": 2}, 8))[0]
        assert "below the minimum" in admissibility_problems(TameFamilySpec("TWO_SIMPLE", {"k": 1, "r": 1}, 4))[0]


class TestTraceCheck:
    def ids(self, vs):
        return {v.check_id: v for v in vs}

    def test_two_simple_k2_r1(self):
        vs = self.ids(tame_trace_check(TameFamilySpec("TWO_SIMPLE", {"k": 2, "r": 1}, 8)))
        assert (vs["tame.uniform_bound"].lhs, vs["tame.uniform_bound"].rhs) == (11, 12)

    def test_q3a2_equality_at_8(self):
        vs = self.ids(tame_trace_check(TameFamilySpec("Q3A2", {"a": 2, "k": 2}, 8)))
        assert vs["tame.uniform_bound"].equality and vs["tame.uniform_bound"].lhs == 16

    def test_sd3h_discrepancy_recorded(self):
        vs = self.ids(tame_trace_check(TameFamilySpec("SD3H", {"s": 2}, 8)))
        assert vs["tame.uniform_bound"].holds and vs["tame.uniform_bound"].rhs == 16
        sharp = vs["tame.sharper_bound"]
        assert (sharp.lhs, sharp.rhs, sharp.holds) == (10, 9, False)
        assert any(n.startswith("discrepancy") for n in sharp.notes)

    @pytest.mark.parametrize("d", [8, 16, 64, 1024])
    def test_sd3h_trace_formula(self, d):
        assert sum(cartan("SD3H", d, s=d // 4)[i][i] for i in range(3)) == d // 2 + 6

    def test_uniform_bound_values(self):
        assert uniform_bound(2, 8) == 12 and uniform_bound(3, 8) == 16


class TestSweep:
    def test_two_simple_choices_at_8(self):
        params = [s.parameters for s in admissible_specs("TWO_SIMPLE", 8)]
        assert params == [{"k": 1, "r": 2}, {"k": 2, "r": 1}, {"k": 2, "r": 2}]

    def test_empty_range(self):
        assert len(sweep("D3K", [])) == 0

    def test_bad_range(self):
        with pytest.raises(ValueError):
            sweep("D3K", [12])

    def test_d3k_to_64(self):
        report = sweep("D3K", defect_orders(64))
        assert len(report) == 10 and report.failures == []

    def test_speculative_excluded_by_default(self):
        ids = {row.spec.family_id for row in sweep_all(defect_orders(32)).rows}
        assert "SD3H" not in ids and "SD3C2" not in ids
        ids = {row.spec.family_id for row in sweep_all(defect_orders(32), include_speculative=True).rows}
        assert {"SD3H", "SD3C2"} <= ids

    def test_all_pd_power_of_two_det(self):
        for spec, c in iter_family_matrices(2 ** 8):
            assert c.is_symmetric() and is_positive_definite(c), spec.label()
            d = det(c)
            assert d & (d - 1) == 0, spec.label()

    def test_divisor_note_only_for_small_semidihedral(self):
        rows = sweep_all(defect_orders(2 ** 8), include_speculative=True).rows
        odd = {row.spec.label() for row in rows if not row.divisors_divide_defect}
        assert odd == {"SD3A1[|D|=4,k=1]", "SD3C2[|D|=4,k=2,s=1]", "SD3C2[|D|=4,k=1,s=2]"}
