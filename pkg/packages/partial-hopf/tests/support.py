from pathlib import Path

from partial_hopf import catalog
from partial_hopf.definition import DefinitionSet, FileResolver

FIXTURES = Path(__file__).parent / "fixtures"
MUTATIONS = FIXTURES / "mutations"
GOLDEN = Path(__file__).parent / "golden"


def load_fixture(path: Path):
    """Build the primary block of a fixture file, includes resolved against the catalog."""
    resolver = FileResolver([path.parent, catalog.DATA_DIR])
    return DefinitionSet(resolver.load(path)).primary()


def mutation_files() -> list[Path]:
    return sorted(MUTATIONS.glob("*.def"))
