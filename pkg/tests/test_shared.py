#!/usr/bin/env python3
"""
Tests for shared constants and utility functions
"""

import pytest

from shared.constants import Capacity, Enumeration, ExitCodes, FileFormats, Labels
from shared.utils import bits_of, catalan, load_env_var, parse_int_list, setup_logger


def test_constants():
    assert isinstance(Capacity.MAX_ENUMERATION_ATOMS, int)
    assert 0 < Capacity.MAX_SUPERSOLVABLE_ELEMENTS < Capacity.MAX_LATTICE_ELEMENTS
    assert Enumeration.DEFAULT_PERFECT_ORDER_BUDGET > 0
    assert len(Labels.SHUFFLE_X_LETTERS) == len(Labels.SHUFFLE_Y_LETTERS) == Capacity.SHUFFLE_MAX_LETTERS
    assert FileFormats.FIELD_SEPARATOR == "\t"


def test_exit_codes_are_distinct():
    codes = [ExitCodes.SUCCESS, ExitCodes.DOMAIN_ERROR, ExitCodes.USAGE_ERROR, ExitCodes.VERIFICATION_MISMATCH]
    assert codes == [0, 1, 2, 3]


def test_bits_of():
    assert bits_of(0b100101) == [0, 2, 5]
    assert bits_of(0) == []


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (3, 5), (4, 14), (8, 1430)])
def test_catalan(n, expected):
    assert catalan(n) == expected


def test_parse_int_list():
    assert parse_int_list("4, 1,0") == [4, 1, 0]
    assert parse_int_list("  ") == []
    with pytest.raises(ValueError, match="chain"):
        parse_int_list("1,x", "chain")


def test_load_env_var(monkeypatch):
    monkeypatch.setenv("LATTICE_TEST_BUDGET", "42")
    monkeypatch.setenv("LATTICE_TEST_FLAG", "yes")
    assert load_env_var("LATTICE_TEST_BUDGET", 7) == 42
    assert load_env_var("LATTICE_TEST_FLAG", False) is True
    assert load_env_var("LATTICE_TEST_ABSENT", "x") == "x"
    with pytest.raises(ValueError):
        load_env_var("LATTICE_TEST_ABSENT", required=True)


def test_logger_writes_to_stderr(capsys):
    logger = setup_logger("engines.test_logging", level="INFO")
    logger.info("sample_event", value=3)
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "sample_event" in captured.err
