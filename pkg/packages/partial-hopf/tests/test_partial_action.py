import functools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partial_hopf import catalog
from partial_hopf.expressions import parse_polynomial
from partial_hopf.partial_action import (
    CHECKS,
    Profile,
    act,
    check_e2,
    check_e3,
    check_e4,
    check_e5,
    check_e6,
    cocycle,
    specialize,
    verify_all,
)
from partial_hopf.symbolic import Polynomial
from strategies import assignments
from support import FIXTURES, MUTATIONS, load_fixture, mutation_files

ACTIONS = ("action_hss", "action_hs", "action_h00")


@functools.lru_cache(maxsize=None)
def action(catalog_id):
    return catalog.load(catalog_id).payload


@functools.lru_cache(maxsize=None)
def core_reports(catalog_id):
    data = action(catalog_id)
    return tuple(check(data) for check in CHECKS[:4])


def entry(report, *key):
    return next(e for e in report.entries if e.key == key)


def vector(algebra, coordinates):
    return algebra.element_from({label: parse_polynomial(text) for label, text in coordinates.items()})


class TestTables:
    def test_act_on_basis(self, hss_action):
        assert str(act(hss_action, "nu", "e3")) == "k2*[e2] + k1*[e3]"
        assert act(hss_action, "g", "e1").is_zero

    def test_act_is_bilinear(self, hss_action):
        H, A = hss_action.source, hss_action.target
        h = H.element("nu") + H.element("gnu")
        value = act(hss_action, h, A.unit)
        assert value == act(hss_action, "nu", "1") + act(hss_action, "gnu", "1")

    def test_cocycle_on_basis(self, hss_action):
        assert cocycle(hss_action, "1", "1") == hss_action.target.unit
        assert str(cocycle(hss_action, "nu", "nu")) == (
            "(k1^2 + k2^2)*[1] + 2*k1*k2*[e1] + 2*k1*k3*[e2] - 2*k1*k4*[e3]"
        )
        assert cocycle(hss_action, "g", "nu").is_zero

    def test_tables_are_total(self, hss_action):
        assert len(hss_action.action) == 16
        assert len(hss_action.cocycle) == 16

    def test_parameters(self, hss_action, hs_action, h00_action):
        assert hss_action.parameters == ("k1", "k2", "k3", "k4", "l1", "l2", "l3", "l4")
        assert hs_action.parameters == ("l1", "l2", "l3", "l4")
        assert h00_action.parameters == ("k1", "k2", "k3", "l1", "l2", "l3", "l4")


class TestAxioms:
    def test_entry_counts(self, hss_action):
        suite = verify_all(hss_action, Profile.CROSSED)
        assert [len(report) for report in suite.reports] == [4, 64, 64, 16, 4, 64]
        assert [report.check for report in suite.reports] == ["e1", "e2", "e3", "e4", "e5", "e6"]

    @pytest.mark.parametrize("catalog_id", ACTIONS)
    def test_catalog_actions_satisfy_core_axioms(self, catalog_id):
        suite = verify_all(action(catalog_id), Profile.CORE)
        assert suite.passed, suite.counterexamples

    def test_hss_action_satisfies_every_axiom(self, hss_action):
        suite = verify_all(hss_action, "crossed")
        assert suite.passed
        assert not any(report.informational for report in suite.reports)

    def test_core_profile_marks_unit_and_cocycle_laws_informational(self, hss_action):
        suite = verify_all(hss_action, "core")
        assert [report.informational for report in suite.reports] == [False] * 4 + [True] * 2

    def test_product_compatibility_example(self, hss_action):
        found = entry(check_e2(hss_action), "nu", "e1", "e2")
        assert found.passed
        assert str(found.lhs) == "k2*[e2] + k1*[e3]"

    def test_twisted_module_example(self, hss_action):
        found = entry(check_e3(hss_action), "nu", "nu", "1")
        assert found.passed
        assert found.lhs == cocycle(hss_action, "nu", "nu")

    def test_cocycle_normalization_example(self, hss_action):
        found = entry(check_e4(hss_action), "nu", "gnu")
        assert found.passed
        N, L = act(hss_action, "nu", "1"), act(hss_action, "gnu", "1")
        assert found.lhs == N * L

    def test_product_compatibility_on_gnu(self, hss_action):
        found = entry(check_e2(hss_action), "gnu", "e1", "e2")
        assert found.passed
        assert [str(side) for side in found.sides] == ["-l2*[e2] + l1*[e3]"] * 2

    def test_twisted_module_mixed_example(self, hss_action):
        found = entry(check_e3(hss_action), "nu", "gnu", "e1")
        expected = vector(
            hss_action.target,
            {
                "1": "k2*l1 + k1*l2",
                "e1": "k1*l1 + k2*l2",
                "e2": "k2*l3 + k1*l4 + k4*l1 + k3*l2",
                "e3": "k2*l4 + k1*l3 - k4*l2 - k3*l1",
            },
        )
        assert found.passed
        assert list(found.sides) == [expected, expected]

    def test_cocycle_condition_example(self, hss_action):
        found = entry(check_e6(hss_action), "nu", "nu", "gnu")
        expected = vector(
            hss_action.target,
            {
                "1": "(k1^2 + k2^2)*l1 + 2*k1*k2*l2",
                "e1": "2*k1*k2*l1 + (k1^2 + k2^2)*l2",
                "e2": "2*k1*k3*l1 + 2*k1*k4*l2 + (k1^2 + k2^2)*l3 + 2*k1*k2*l4",
                "e3": "-2*k1*k4*l1 - 2*k1*k3*l2 + 2*k1*k2*l3 + (k1^2 + k2^2)*l4",
            },
        )
        assert found.passed
        assert list(found.sides) == [expected, expected]

    def test_quarter_quaternion_unit_law_on_gnu(self, h00_action):
        found = entry(check_e5(h00_action), "gnu")
        expected = vector(h00_action.target, {"1": "l1", "e1": "l2", "e2": "l3", "e3": "l4"})
        assert found.passed
        assert all(side == expected for side in found.sides)


class TestMutations:
    @pytest.mark.parametrize("path", mutation_files(), ids=lambda path: path.stem)
    def test_every_mutation_is_caught(self, path):
        suite = verify_all(load_fixture(path), Profile.CROSSED)
        assert not suite.passed

    @pytest.mark.parametrize("path", mutation_files(), ids=lambda path: path.stem)
    def test_core_outcome_ignores_unit_and_cocycle_laws(self, path):
        suite = verify_all(load_fixture(path), Profile.CORE)
        assert suite.passed == all(suite.report(check).passed for check in ("e1", "e2", "e3", "e4"))

    @pytest.mark.parametrize(
        "stem, check, key",
        [
            ("m01_identity_row", "e1", ("e2",)),
            ("m02_nu_e3", "e2", ("nu", "e1", "e2")),
            ("m03_g_row", "e2", ("g", "e1", "1")),
            ("m08_omega_g_nu", "e4", ("g", "nu")),
            ("m12_omega_unit", "e5", ("1",)),
        ],
    )
    def test_counterexample_location(self, stem, check, key):
        data = load_fixture(MUTATIONS / f"{stem}.def")
        report = verify_all(data, Profile.CROSSED).report(check)
        assert key in [e.key for e in report.counterexamples]

    @settings(max_examples=10)
    @given(
        st.sampled_from(["1", "g", "nu", "gnu"]),
        st.sampled_from(["1", "e1", "e2", "e3"]),
        st.sampled_from(["1", "e1", "e2", "e3"]),
    )
    def test_single_coefficient_bump_is_caught(self, h, a, coordinate):
        data = action("action_hss")
        A = data.target
        bumped = data.with_action(h, a, data.action[h, a] + A.element(coordinate))
        assert not verify_all(bumped, Profile.CROSSED).passed


def test_trivial_action_is_global(hss):
    data = load_fixture(FIXTURES / "trivial_hss.def")
    assert data.target == hss
    assert verify_all(data, Profile.CROSSED).passed


class TestSpecialization:
    def test_unassigned_parameters_remain(self, hss_action):
        partial = specialize(hss_action, {"k1": 2, "l1": 0})
        assert partial.parameters == ("k2", "k3", "k4", "l2", "l3", "l4")
        assert str(act(partial, "nu", "e3")) == "k2*[e2] + 2*[e3]"

    def test_specialization_keeps_axioms(self, hs_action):
        assert verify_all(specialize(hs_action, {"l1": 1, "l2": -2, "l3": 0, "l4": 5}), "core").passed

    @pytest.mark.parametrize("catalog_id", ACTIONS)
    @given(data=st.data())
    def test_numeric_sides_agree_with_symbolic_ones(self, catalog_id, data):
        symbolic = action(catalog_id)
        assignment = data.draw(assignments(symbolic.parameters))
        numeric = specialize(symbolic, assignment)
        for report, check in zip(core_reports(catalog_id), CHECKS[:4]):
            numeric_report = check(numeric)
            for symbolic_entry, numeric_entry in zip(report.entries, numeric_report.entries):
                assert symbolic_entry.key == numeric_entry.key
                evaluated = [side.specialize(assignment) for side in symbolic_entry.sides]
                assert evaluated == list(numeric_entry.sides)
                assert numeric_entry.passed
                assert all(side.parameters == frozenset() for side in evaluated)

    @pytest.mark.parametrize("catalog_id", ACTIONS)
    def test_tables_share_one_ring(self, catalog_id):
        data = action(catalog_id)
        coefficients = [
            c for table in (data.action, data.cocycle) for value in table.values() for _, c in value.nonzero_terms()
        ]
        assert {c.variables for c in coefficients if not c.is_constant} == {data.parameters}

    @pytest.mark.parametrize("catalog_id", ACTIONS)
    def test_full_specialization_leaves_constants(self, catalog_id):
        data = action(catalog_id)
        numeric = specialize(data, dict.fromkeys(data.parameters, 3))
        for table in (numeric.action, numeric.cocycle):
            for value in table.values():
                assert all(c.variables == () for c in value.coords)


def test_parameters_are_polynomials(hss_action):
    coefficient = act(hss_action, "nu", "1")["1"]
    assert coefficient == Polynomial.parameter("k1")
