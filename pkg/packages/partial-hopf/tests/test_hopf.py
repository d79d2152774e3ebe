import pytest

from partial_hopf import config
from partial_hopf.algebra import TensorElement
from partial_hopf.hopf import (
    antipode_of,
    check_antipode,
    check_bialgebra_compat,
    check_coalgebra,
    coproduct,
    coproduct_n,
    counit_of,
    sweedler_tensor,
)
from partial_hopf.pool import parallel_map


def legs(h4, label, n, nesting="left"):
    return [term.legs for term in coproduct_n(h4, label, n, nesting=nesting)]


class TestCoproduct:
    def test_grouplike(self, h4):
        assert legs(h4, "g", 2) == [("g", "g")]

    def test_skew_primitive(self, h4):
        assert legs(h4, "nu", 2) == [("g", "nu"), ("nu", "1")]
        assert legs(h4, "gnu", 2) == [("1", "gnu"), ("gnu", "g")]

    def test_depth_one_is_the_label(self, h4):
        assert legs(h4, "nu", 1) == [("nu",)]

    def test_three_fold(self, h4):
        assert legs(h4, "nu", 3) == [("g", "g", "nu"), ("g", "nu", "1"), ("nu", "1", "1")]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("label", ["1", "g", "nu", "gnu"])
    def test_nesting_does_not_matter(self, h4, label, n):
        left = sweedler_tensor(h4, coproduct_n(h4, label, n, nesting="left"))
        right = sweedler_tensor(h4, coproduct_n(h4, label, n, nesting="right"))
        assert left == right

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_nu_has_one_term_per_leg(self, h4, n):
        assert len(coproduct_n(h4, "nu", n)) == n

    def test_rejects_depth_zero(self, h4):
        with pytest.raises(ValueError):
            coproduct_n(h4, "g", 0)

    def test_linear_extension(self, h4):
        x = h4.algebra.element("g") + h4.algebra.element("nu").scale(2)
        expected = TensorElement(
            (h4.algebra, h4.algebra), {("g", "g"): 1, ("g", "nu"): 2, ("nu", "1"): 2}
        )
        assert coproduct(h4, x) == expected

    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("label", ["1", "g", "nu", "gnu"])
    def test_counit_on_any_leg_contracts_one_step(self, h4, label, n):
        expected = sweedler_tensor(h4, coproduct_n(h4, label, n - 1))
        terms = coproduct_n(h4, label, n)
        for leg in range(n):
            contracted = TensorElement.collect(
                (h4.algebra,) * (n - 1),
                ((t.legs[:leg] + t.legs[leg + 1 :], t.coefficient * h4.counit[t.legs[leg]]) for t in terms),
            )
            assert contracted == expected, leg

    def test_memo_is_shared_across_threads(self, h4):
        fresh = h4.with_counit("g", 1)
        jobs = [(label, n) for n in (5, 4, 3, 2) for label in fresh.basis] * 4
        config.override(workers=8)
        results = parallel_map(lambda job: coproduct_n(fresh, *job), jobs)
        for (label, n), terms in zip(jobs, results):
            assert terms == coproduct_n(h4, label, n)


def test_counit_and_antipode_on_elements(h4):
    H = h4.algebra
    x = H.element("g").scale(3) + H.element("nu")
    assert counit_of(h4, x).constant_value == 3
    assert antipode_of(h4, x) == H.element("g").scale(3) - H.element("gnu")


def test_sweedler_hopf_algebra_passes(h4):
    for report in (check_coalgebra(h4), check_bialgebra_compat(h4), check_antipode(h4)):
        assert report.passed, report.counterexamples


def test_report_sizes(h4):
    assert len(check_coalgebra(h4)) == 12
    assert len(check_bialgebra_compat(h4)) == 34
    assert len(check_antipode(h4)) == 4


class TestBrokenStructure:
    def test_primitive_nu_breaks_counit(self, h4):
        broken = h4.with_delta("nu", [(1, "nu", "nu")])
        report = check_coalgebra(broken)
        assert not report.passed
        assert {entry.law for entry in report.counterexamples} == {"left counit", "right counit"}

    def test_zero_counit_on_g(self, h4):
        broken = h4.with_counit("g", 0)
        assert not check_coalgebra(broken).passed
        assert not check_bialgebra_compat(broken).passed

    def test_wrong_antipode(self, h4):
        broken = h4.with_antipode("nu", h4.algebra.element("gnu"))
        report = check_antipode(broken)
        assert [entry.key for entry in report.counterexamples] == [("nu",)]

    def test_coproduct_no_longer_multiplicative(self, h4):
        broken = h4.with_delta("gnu", [(1, "g", "gnu"), (1, "gnu", "1")])
        report = check_bialgebra_compat(broken)
        failing = {(entry.key, entry.law) for entry in report.counterexamples}
        assert (("g", "nu"), "coproduct") in failing

    def test_mutation_leaves_original_untouched(self, h4):
        h4.with_counit("g", 0)
        assert check_coalgebra(h4).passed
