"""
Shared fixtures for the lattice-mobius test suite.

The small hand-built lattices live as text files under tests/fixtures/ so the
parser is exercised by every test that uses them.
"""

from pathlib import Path

import pytest

from engines.lattice_core import FiniteLattice, load_lattice
from engines.mobius_engine import AtomOrder, read_atom_order
from shared.shared_types import CliSettings

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def seven_element_lattice() -> FiniteLattice:
    """0̂ < a, b, c < x = a ∨ b, y = b ∨ c < 1̂"""
    return load_lattice(FIXTURES / "seven_element.lattice")


@pytest.fixture
def seven_element_order(seven_element_lattice) -> AtomOrder:
    """b ⊲ a and b ⊲ c; the only bounded-below set is {a, c}"""
    text = (FIXTURES / "seven_element.order").read_text(encoding="utf-8")
    return read_atom_order(text, seven_element_lattice)


@pytest.fixture
def six_element_lattice() -> FiniteLattice:
    """∅ < 1, 2, 3; 12 covers 1 and 2; 123 covers 12 and 3"""
    return load_lattice(FIXTURES / "six_element.lattice")


@pytest.fixture
def default_settings(mocker):
    """Keep CLI runs independent of client/config.yaml and the environment"""
    settings = CliSettings()
    mocker.patch("client.lattice_cli.load_settings", return_value=settings)
    return settings
