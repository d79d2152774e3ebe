from fractions import Fraction

import pytest

from partial_hopf import catalog
from partial_hopf.errors import ExpressionError
from partial_hopf.evaluate import ExpressionEvaluator, evaluate

HSS_PARAMETERS = ("k1", "k2", "k3", "k4", "l1", "l2", "l3", "l4")


def run(catalog_id, text, assignment=None):
    found = catalog.definitions(catalog_id)
    name = found.primary_name
    return evaluate(found.build(name), text, parameters=found.parameters(name), assignment=assignment)


class TestAction:
    def test_act(self):
        assert run("action_hss", "act(nu, e3)") == "k2*[e2] + k1*[e3]"

    def test_act_with_assignment(self):
        assert run("action_hss", "act(nu, e3)", {"k1": 1, "k2": 0}) == "[e3]"

    def test_omega_on_split_quaternions(self):
        assert run("action_hs", "omega(gnu, nu)") == "l4*[1] + l3*[e1] - l2*[e2] + l1*[e3]"

    def test_arithmetic_in_the_target(self):
        assert run("action_hss", "e1*e2 - 2*e3") == "-[e3]"
        assert run("action_hss", "e1^2 + 3") == "4*[1]"

    def test_scalars_act_through_the_unit(self):
        assert run("action_hss", "act(2*nu, 1)") == "2*k1*[1] + 2*k2*[e1] + 2*k3*[e2] - 2*k4*[e3]"

    def test_sharp_products_print_in_basis_coordinates(self):
        assert run("action_hss", "sharp(e1, nu) * sharp(e2, nu)") == "(k1^2 - k2^2)*[e3#1]"
        assert run("action_hss", "sharp(1, gnu) + sharp(e1, 1)") == "[e1#1] + [1#gnu]"

    def test_tensor_atoms(self):
        assert run("action_hss", "[e1, gnu] + [e1, gnu]") == "2*[e1, gnu]"

    def test_parameters_alone(self):
        assert run("action_hss", "(k1 + k2)^2") == "k1^2 + 2*k1*k2 + k2^2"
        assert run("action_hss", "(k1 + k2)^2", {"k1": Fraction(1, 2), "k2": 0}) == "1/4"


class TestHopf:
    def test_coproduct(self):
        assert run("h4", "delta(nu)") == "[g, nu] + [nu, 1]"

    def test_counit_and_antipode(self):
        assert run("h4", "counit(g + nu)") == "1"
        assert run("h4", "antipode(nu)") == "-[gnu]"

    def test_algebra_relations(self):
        assert run("h4", "g*nu + nu*g") == "0"


class TestErrors:
    def test_unknown_label(self):
        with pytest.raises(ExpressionError) as info:
            run("action_hss", "act(nu, e5)")
        assert info.value.position == 8

    def test_wrong_algebra(self):
        with pytest.raises(ExpressionError):
            run("action_hss", "act(e1, e1)")

    def test_undeclared_assignment(self):
        data = catalog.load("action_hss").payload
        with pytest.raises(ExpressionError, match="undeclared parameter"):
            ExpressionEvaluator(data, HSS_PARAMETERS, {"m1": 1})

    def test_functions_need_an_action(self):
        with pytest.raises(ExpressionError, match="needs an action"):
            run("hss", "act(1, e1)")

    def test_unknown_function(self):
        with pytest.raises(ExpressionError, match="unknown function"):
            run("action_hss", "frobnicate(nu)")

    def test_syntax(self):
        with pytest.raises(ExpressionError):
            run("action_hss", "act(nu,")

    def test_division_by_parameter(self):
        with pytest.raises(ExpressionError, match="division"):
            run("action_hss", "e1 / k1")
