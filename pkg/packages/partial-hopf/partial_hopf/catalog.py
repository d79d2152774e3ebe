"""Built-in algebras, the Sweedler Hopf algebra and the three partial actions.

Entries are stored as definition files under ``data/`` and loaded through the
same parser users' files go through.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .algebra import StructureAlgebra
from .definition import DefinitionSet, FileResolver
from .errors import UnknownCatalogId
from .hopf import HopfData
from .partial_action import PartialActionData

log = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / "data"

CATALOG_IDS = ("hs", "hss", "h00", "h4", "action_hss", "action_hs", "action_h00")

Payload = Union[StructureAlgebra, HopfData, PartialActionData]


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    kind: str
    payload: Payload
    provenance: str


def resolver() -> FileResolver:
    """A resolver that only sees the catalog directory."""
    return FileResolver([DATA_DIR])


def definitions(catalog_id: str) -> DefinitionSet:
    if catalog_id not in CATALOG_IDS:
        raise UnknownCatalogId(catalog_id, CATALOG_IDS)
    return DefinitionSet(resolver()(catalog_id))


def load(catalog_id: str) -> CatalogEntry:
    """Load a fresh copy of a catalog entry."""
    found = definitions(catalog_id)
    name = found.primary_name
    log.debug("catalog %s -> %s block %s", catalog_id, found.kind(name), name)
    return CatalogEntry(catalog_id, found.kind(name), found.build(name), found.provenance(name))


def list_entries() -> list[CatalogEntry]:
    return [load(catalog_id) for catalog_id in CATALOG_IDS]
