import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partial_hopf import catalog, render
from partial_hopf.algebra import TensorElement
from partial_hopf.crossed_product import (
    SmashElement,
    express_in_basis,
    extract_basis,
    numeric_rank,
    sharp_label,
    smash_mul,
    smash_of,
    smash_unit,
    verify_crossed_product,
)
from partial_hopf.errors import NotInSpan
from partial_hopf.symbolic import Polynomial
from strategies import assignments, polynomials
from support import FIXTURES, GOLDEN, load_fixture

SELECTED = ("1#1", "e1#1", "e2#1", "e3#1", "1#gnu", "e1#gnu", "e2#gnu", "e3#gnu")
k1, k2 = Polynomial.parameter("k1"), Polynomial.parameter("k2")


class TestGenerators:
    def test_unit_generator(self, hss_action):
        assert str(smash_of(hss_action, "1", "1")) == "[1, 1]"
        assert smash_unit(hss_action) == smash_of(hss_action, "1", "1")

    def test_g_generators_vanish(self, hss_action):
        for a in hss_action.target.basis:
            assert smash_of(hss_action, a, "g").is_zero

    def test_nu_generator_lies_over_the_unit(self, hss_action):
        assert str(smash_of(hss_action, "1", "nu")) == "k1*[1, 1] + k2*[e1, 1] + k3*[e2, 1] - k4*[e3, 1]"

    def test_gnu_generator_keeps_a_g_tail(self, hss_action):
        l1, l2 = Polynomial.parameter("l1"), Polynomial.parameter("l2")
        expected = TensorElement(
            (hss_action.target, hss_action.source),
            {("e2", "gnu"): 1, ("e2", "g"): l1, ("e3", "g"): -l2},
        )
        assert smash_of(hss_action, "e2", "gnu").underlying == expected

    def test_unit_acts_trivially_on_every_generator(self, hss_action, hss_basis):
        unit = smash_unit(hss_action)
        for pair, element in hss_basis.generators:
            assert smash_mul(hss_action, unit, element) == element, pair
            assert smash_mul(hss_action, element, unit) == element, pair


class TestBasis:
    def test_hss_basis(self, hss_basis):
        assert hss_basis.rank == 8
        assert hss_basis.selected_labels == SELECTED
        assert len(hss_basis.generators) == 16

    @pytest.mark.parametrize("catalog_id", ["action_hs", "action_h00"])
    def test_other_actions_have_the_same_rank(self, catalog_id):
        basis = extract_basis(catalog.load(catalog_id).payload)
        assert basis.rank == 8
        assert basis.selected_labels == SELECTED

    def test_trivial_action_is_all_of_the_tensor_product(self):
        basis = extract_basis(load_fixture(FIXTURES / "trivial_hss.def"))
        assert basis.rank == 16

    def test_every_generator_is_expressible(self, hss_basis):
        for _, element in hss_basis.generators:
            coordinates = express_in_basis(hss_basis, element)
            assert len(coordinates) == 8

    def test_dependent_generator_coordinates(self, hss_basis):
        coordinates = express_in_basis(hss_basis, smash_of(hss_basis.action, "e2", "nu"))
        assert hss_basis.coordinates_text(coordinates) == "k1*[e2#1] - k2*[e3#1]"

    def test_outside_the_span(self, hss_action, hss_basis):
        stray = TensorElement((hss_action.target, hss_action.source), {("1", "g"): 1})
        with pytest.raises(NotInSpan):
            express_in_basis(hss_basis, stray)

    def test_golden_text(self, hss_basis):
        assert render.render_basis(hss_basis) == (GOLDEN / "hss_basis.txt").read_text()

    @settings(max_examples=5)
    @given(data=st.data())
    def test_numeric_rank_matches_generic_rank(self, hss_action, hss_basis, data):
        assignment = data.draw(assignments(hss_action.parameters))
        assert numeric_rank(hss_action, assignment) == hss_basis.rank


class TestProducts:
    def test_worked_product(self, hss_action, hss_basis):
        product = smash_of(hss_action, "e1", "nu") * smash_of(hss_action, "e2", "nu")
        coordinates = express_in_basis(hss_basis, product)
        assert hss_basis.coordinates_text(coordinates) == "(k1^2 - k2^2)*[e3#1]"
        assert coordinates[3] == k1**2 - k2**2

    def test_table_cells(self, hss_table):
        assert len(hss_table.entries) == 64
        assert hss_table.basis.coordinates_text(hss_table["e1#1", "e2#1"]) == "[e3#1]"
        assert hss_table.basis.coordinates_text(hss_table["e2#1", "e1#gnu"]) == "-[e3#gnu]"
        assert all(value.is_zero for value in hss_table["e1#gnu", "e2#gnu"])

    def test_crossed_product_is_associative_and_unital(self, hss_table):
        suite = verify_crossed_product(hss_table)
        assert suite.passed
        assert len(suite.report("associativity")) == 512
        assert len(suite.report("unit")) == 8

    def test_golden_text(self, hss_table):
        assert render.render_table(hss_table, True) == (GOLDEN / "hss_table.txt").read_text()

    @given(st.lists(st.tuples(st.sampled_from(SELECTED), polynomials()), max_size=3), polynomials())
    def test_multiplication_is_bilinear(self, hss_action, hss_basis, terms, scalar):
        by_label = {sharp_label(pair): element for pair, element in hss_basis.generators}
        x = SmashElement(hss_action, TensorElement((hss_action.target, hss_action.source), {}))
        for label, coefficient in terms:
            x = x + by_label[label].scale(coefficient)
        y = by_label["e1#gnu"] + by_label["e3#1"]
        z = by_label["1#gnu"]
        assert smash_mul(hss_action, x + y.scale(scalar), z) == x * z + (y * z).scale(scalar)
        assert smash_mul(hss_action, z, x + y) == z * x + z * y
