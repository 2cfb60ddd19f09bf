#!/usr/bin/env python3
"""
Tests for the lattice-mobius command-line client: output formats, exit
statuses and configuration loading.
"""

import pytest

from client.lattice_cli import load_settings, main, parse_request
from engines.families import IntegerPartition, dominance_interval
from engines.mobius_engine import mobius_recursive
from engines.mobius_engine.atom_sets import AtomSubsetTables
from shared.constants import Capacity, ExitCodes
from shared.exceptions import ConfigurationError, UsageError
from shared.shared_types import CliSettings, MobiusMethod, Subcommand

A_B_C_ORDER = "rel 0 1\nrel 1 2\n"


def run_cli(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out


@pytest.fixture
def seven(fixtures_dir):
    return str(fixtures_dir / "seven_element.lattice")


@pytest.fixture
def seven_order(fixtures_dir):
    return str(fixtures_dir / "seven_element.order")


@pytest.mark.usefixtures("default_settings")
class TestMobiusCommand:
    def test_chain_output_is_exact(self, capsys):
        status, out = run_cli(capsys, "mobius", "chain:2")
        assert status == ExitCodes.SUCCESS
        assert out == "0\t0\t1\n1\t1\t-1\n2\t2\t0\n"

    def test_output_is_deterministic(self, capsys):
        first = run_cli(capsys, "mobius", "pi:4", "--method", "nbb")
        second = run_cli(capsys, "mobius", "pi:4", "--method", "nbb")
        assert first == second

    def test_canonical_nbb_on_noncrossing_partitions(self, capsys):
        status, out = run_cli(capsys, "mobius", "nc:4", "--method", "nbb", "--canonical")
        assert status == ExitCodes.SUCCESS
        rows = {line.split("\t")[1]: int(line.split("\t")[2]) for line in out.splitlines()}
        assert rows["1234"] == -5
        assert len(rows) == 14

    @pytest.mark.parametrize("method", [m.value for m in MobiusMethod])
    def test_every_method_verifies(self, capsys, seven, seven_order, method):
        status, out = run_cli(capsys, "mobius", seven, "--method", method, "--order", seven_order, "--verify")
        assert status == ExitCodes.SUCCESS
        assert [int(line.split("\t")[2]) for line in out.splitlines()] == [1, -1, -1, -1, 1, 1, 0]

    @pytest.mark.parametrize("verify", [True, False])
    def test_broken_subset_counts_exit_three(self, capsys, mocker, verify):
        original = AtomSubsetTables.signed_counts

        def skewed(tables, selected):
            counts = original(tables, selected).copy()
            counts[tables.lattice.top] += 1
            return counts

        mocker.patch.object(AtomSubsetTables, "signed_counts", skewed)
        argv = ["mobius", "nc:4", "--method", "nbb", "--canonical"] + (["--verify"] if verify else [])
        status = main(argv)
        captured = capsys.readouterr()
        assert status == ExitCodes.VERIFICATION_MISMATCH
        assert captured.out == ""
        code = "METHOD_DISAGREEMENT" if verify else "MOBIUS_INVARIANT_VIOLATED"
        assert f"lattice-mobius: [{code}]" in captured.err

    def test_unexpected_failure_is_a_domain_error(self, capsys, mocker):
        mocker.patch("client.lattice_cli.mobius_crosscut", side_effect=RuntimeError("boom"))
        status = main(["mobius", "chain:2", "--method", "crosscut"])
        assert status == ExitCodes.DOMAIN_ERROR
        assert "[LATTICE_SYSTEM_ERROR] Unexpected error in mobius: boom" in capsys.readouterr().err

    def test_nbc_needs_condition_cprime(self, capsys, seven, tmp_path):
        order_file = tmp_path / "abc.order"
        order_file.write_text(A_B_C_ORDER, encoding="utf-8")
        status, out = run_cli(capsys, "mobius", seven, "--method", "nbc", "--order", str(order_file))
        assert status == ExitCodes.DOMAIN_ERROR
        assert out == ""


@pytest.mark.usefixtures("default_settings")
class TestBasesCommand:
    def test_nbb_bases(self, capsys, seven, seven_order):
        assert run_cli(capsys, "bases", seven, "--element", "x", "--order", seven_order) == (0, "a\tb\n")

    def test_no_bases_for_the_top(self, capsys, seven, seven_order):
        assert run_cli(capsys, "bases", seven, "--element", "1̂", "--order", seven_order) == (0, "")

    def test_empty_base_of_the_bottom(self, capsys, seven, seven_order):
        assert run_cli(capsys, "bases", seven, "--element", "0̂", "--order", seven_order) == (0, "-\n")

    def test_crosscut_terms(self, capsys, seven):
        status, out = run_cli(capsys, "bases", seven, "--element", "6", "--method", "crosscut")
        assert status == ExitCodes.SUCCESS
        assert out == "a\tb\tc\na\tc\n"

    def test_unknown_element(self, capsys, seven):
        status, _ = run_cli(capsys, "bases", seven, "--element", "nowhere")
        assert status == ExitCodes.DOMAIN_ERROR


@pytest.mark.usefixtures("default_settings")
class TestCharpolyCommand:
    def test_shuffle(self, capsys):
        assert run_cli(capsys, "charpoly", "shuffle:2:1") == (0, "(t-1)^2*(t-3)\n")

    def test_explicit_chain(self, capsys):
        assert run_cli(capsys, "charpoly", "pi:3", "--chain", "4,1,0") == (0, "(t-1)*(t-2)\n")

    def test_extended_usage(self, capsys, fixtures_dir):
        status, out = run_cli(capsys, "charpoly", str(fixtures_dir / "six_element.lattice"))
        assert status == ExitCodes.SUCCESS
        assert out == "t^3-3t^2+t+1\n# extended usage\n"

    def test_unreadable_chain(self, capsys):
        status, _ = run_cli(capsys, "charpoly", "pi:3", "--chain", "a,b")
        assert status == ExitCodes.USAGE_ERROR

    def test_chain_that_is_not_maximal(self, capsys):
        status, _ = run_cli(capsys, "charpoly", "chain:3", "--chain", "0,2,3")
        assert status == ExitCodes.DOMAIN_ERROR


@pytest.mark.usefixtures("default_settings")
class TestCheckCommand:
    def test_all_properties_of_partitions(self, capsys):
        status, out = run_cli(capsys, "check", "pi:3", "--all")
        assert status == ExitCodes.SUCCESS
        rows = [line.split("\t") for line in out.splitlines()]
        assert [row[0] for row in rows] == [
            "ranked", "atomic", "semimodular", "geometric", "left-modular", "level", "ll", "supersolvable",
        ]
        assert all(row[1] == "true" for row in rows)
        assert rows[4][2] == "1/2/3 12/3 123"

    def test_single_property(self, capsys, fixtures_dir):
        status, out = run_cli(capsys, "check", str(fixtures_dir / "six_element.lattice"), "--ll", "--ranked")
        assert status == ExitCodes.SUCCESS
        assert out == "ranked\tfalse\t-\nll\tfalse\t-\n"

    def test_large_lattice_skips_supersolvability(self, capsys, mocker):
        mocker.patch.object(Capacity, "MAX_SUPERSOLVABLE_ELEMENTS", 3)
        status, out = run_cli(capsys, "check", "pi:3", "--all")
        assert status == ExitCodes.SUCCESS
        assert out.splitlines()[-1] == "supersolvable\tskipped\t-"

        status, _ = run_cli(capsys, "check", "pi:3", "--supersolvable")
        assert status == ExitCodes.DOMAIN_ERROR

    def test_needs_a_property(self, capsys):
        status, _ = run_cli(capsys, "check", "pi:3")
        assert status == ExitCodes.USAGE_ERROR


@pytest.mark.usefixtures("default_settings")
class TestOtherCommands:
    def test_build_to_stdout(self, capsys):
        status, out = run_cli(capsys, "build", "pi:3")
        assert status == ExitCodes.SUCCESS
        assert out.startswith("lattice 5\n")

    def test_build_to_file(self, capsys, tmp_path):
        target = tmp_path / "nc4.lattice"
        status, out = run_cli(capsys, "build", "nc:4", "--out", str(target))
        assert status == ExitCodes.SUCCESS
        assert out == ""
        assert target.read_text(encoding="utf-8").startswith("lattice 14\n")

    def test_perfect_order_of_a_chain(self, capsys):
        assert run_cli(capsys, "perfect-order", "chain:3") == (0, "# incomparability order\n")

    def test_perfect_order_not_found(self, capsys, mocker):
        mocker.patch("client.lattice_cli.search_perfect_order", return_value=None)
        assert run_cli(capsys, "perfect-order", "pi:3") == (0, "none (exhaustive)\n")

    def test_perfect_order_budget(self, capsys):
        status, _ = run_cli(capsys, "perfect-order", "pi:3", "--budget", "1")
        assert status == ExitCodes.DOMAIN_ERROR

    def test_dominance_mu(self, capsys):
        beta, lam = IntegerPartition((3, 1, 1, 1)), IntegerPartition((4, 2))
        host = dominance_interval(beta, lam)
        status, out = run_cli(capsys, "dominance-mu", "3,1,1,1", "4,2", "--verify")
        assert status == ExitCodes.SUCCESS
        assert out == f"{mobius_recursive(host)[host.top]}\n"

    def test_dominance_mu_disagreement(self, capsys, mocker):
        mocker.patch("client.lattice_cli.dominance_mobius", return_value=99)
        status, _ = run_cli(capsys, "dominance-mu", "2,1,1", "3,1", "--verify")
        assert status == ExitCodes.VERIFICATION_MISMATCH

    def test_dominance_mu_different_n(self, capsys):
        status, _ = run_cli(capsys, "dominance-mu", "2,2", "3,1,1")
        assert status == ExitCodes.DOMAIN_ERROR


@pytest.mark.usefixtures("default_settings")
class TestExitStatuses:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["mobius"],
            ["transform", "pi:3"],
            ["mobius", "nc:4", "--order", "x.order", "--canonical"],
            ["mobius", "no/such/file.lattice"],
            ["mobius", "pi:3:4"],
            ["mobius", "pi:3", "--method", "guess"],
            ["build", "tests/fixtures/seven_element.lattice"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        status, out = run_cli(capsys, *argv)
        assert status == ExitCodes.USAGE_ERROR
        assert out == ""

    def test_capacity(self, capsys):
        status, _ = run_cli(capsys, "mobius", "bool:17")
        assert status == ExitCodes.DOMAIN_ERROR

    def test_canonical_needs_a_family(self, capsys, seven):
        status, _ = run_cli(capsys, "mobius", seven, "--canonical")
        assert status == ExitCodes.USAGE_ERROR

    def test_missing_order_file(self, capsys, seven):
        status, _ = run_cli(capsys, "mobius", seven, "--method", "nbb", "--order", "no/such.order")
        assert status == ExitCodes.USAGE_ERROR


class TestSettings:
    def test_yaml_defaults(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("mobius:\n  default_method: crosscut\nperfect_order:\n  budget: 5\n", encoding="utf-8")
        settings = load_settings(str(path))
        assert settings.mobius.default_method == MobiusMethod.CROSSCUT
        assert settings.perfect_order.budget == 5
        assert settings.logging.level == "WARNING"

    def test_environment_path(self, tmp_path, monkeypatch):
        path = tmp_path / "env.yaml"
        path.write_text("mobius:\n  verify: true\n", encoding="utf-8")
        monkeypatch.setenv("LATTICE_CONFIG", str(path))
        assert load_settings().mobius.verify is True

    def test_invalid_value(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("mobius:\n  default_method: guess\n", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            load_settings(str(path))

    def test_missing_explicit_file(self, tmp_path):
        with pytest.raises(ConfigurationError):
            load_settings(str(tmp_path / "absent.yaml"))

    def test_configuration_error_exits_one(self, capsys, mocker):
        mocker.patch("client.lattice_cli.load_settings", side_effect=ConfigurationError("broken"))
        assert main(["mobius", "chain:2"]) == ExitCodes.DOMAIN_ERROR

    def test_settings_feed_parser_defaults(self):
        settings = CliSettings.model_validate({"mobius": {"default_method": "nbb", "verify": True}})
        request = parse_request(["mobius", "nc:4"], settings)
        assert request.subcommand == Subcommand.MOBIUS
        assert request.method == MobiusMethod.NBB
        assert request.verify is True
        assert request.budget == 10000


def test_request_defaults():
    request = parse_request(["perfect-order", "pi:3"], CliSettings())
    assert request.budget == CliSettings().perfect_order.budget
    assert request.chain == "auto"
    assert not request.canonical


def test_check_request_needs_properties():
    with pytest.raises(UsageError):
        parse_request(["check", "pi:3"], CliSettings())
