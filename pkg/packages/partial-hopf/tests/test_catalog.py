import pytest

from partial_hopf import catalog
from partial_hopf.algebra import StructureAlgebra
from partial_hopf.errors import PartialHopfError, UnknownCatalogId
from partial_hopf.hopf import HopfData
from partial_hopf.partial_action import PartialActionData


@pytest.mark.parametrize(
    "catalog_id, kind, payload_type",
    [
        ("hs", "algebra", StructureAlgebra),
        ("hss", "algebra", StructureAlgebra),
        ("h00", "algebra", StructureAlgebra),
        ("h4", "hopf", HopfData),
        ("action_hss", "action", PartialActionData),
        ("action_hs", "action", PartialActionData),
        ("action_h00", "action", PartialActionData),
    ],
)
def test_entries(catalog_id, kind, payload_type):
    entry = catalog.load(catalog_id)
    assert entry.id == catalog_id
    assert entry.kind == kind
    assert isinstance(entry.payload, payload_type)
    assert entry.provenance


def test_unknown_id():
    with pytest.raises(UnknownCatalogId) as info:
        catalog.load("h8")
    assert info.value.catalog_id == "h8"
    assert "action_hss" in str(info.value)
    assert isinstance(info.value, PartialHopfError)


def test_loads_are_fresh():
    first, second = catalog.load("action_hss").payload, catalog.load("action_hss").payload
    assert first is not second
    assert first.target == second.target


def test_split_quaternion_action_row():
    data = catalog.load("action_hs").payload
    row = [str(data.action["nu", a]) for a in data.target.basis]
    assert row == ["[e3]", "[e2]", "[e1]", "[1]"]


def test_quarter_quaternion_cocycle():
    data = catalog.load("action_h00").payload
    assert str(data.cocycle["nu", "gnu"]) == "k1*l1*[e1] + k2*l1*[e2] + (k1*l3 - k2*l2 + k3*l1)*[e3]"


def test_listing_order():
    assert [entry.id for entry in catalog.list_entries()] == list(catalog.CATALOG_IDS)


def test_every_entry_ships_a_data_file():
    for catalog_id in catalog.CATALOG_IDS:
        assert (catalog.DATA_DIR / f"{catalog_id}.def").is_file()
