#!/usr/bin/env python3
"""
lattice-mobius command-line client

Builds lattice families, reads lattice and atom-order files, computes
Möbius functions by every method, lists NBB bases, prints characteristic
polynomials and structural check reports, searches perfect atom orders and
evaluates the dominance-order closed form.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Tuple

import pandas as pd
import yaml
from dotenv import load_dotenv
from pydantic import ValidationError as PydanticValidationError

from engines.families.dominance import IntegerPartition, dominance_interval, dominance_mobius
from engines.families.registry import FamilySpec, parse_family_spec
from engines.lattice_core.lattice import FiniteLattice
from engines.lattice_core.properties import is_atomic, is_geometric, is_ranked, is_semimodular
from engines.lattice_core.textio import load_lattice, save_lattice, write_lattice
from engines.mobius_engine.atom_order import AtomOrder, incomparability_order, read_atom_order, write_atom_order
from engines.mobius_engine.circuits import enumerate_nbc_bases, mobius_nbc_generalized
from engines.mobius_engine.coreless import enumerate_coreless_bases, mobius_coreless, selector_from_order
from engines.mobius_engine.mobius import (
    MobiusVector,
    enumerate_crosscut_terms,
    enumerate_nbb_bases,
    mobius_crosscut,
    mobius_nbb,
    mobius_recursive,
    mobius_table,
    verify_against_oracle,
)
from engines.mobius_engine.perfect import search_perfect_order
from engines.structure_analysis.chains import (
    MaximalChain,
    characteristic_polynomial,
    find_left_modular_chain,
    is_ll,
    iter_left_modular_chains,
    level_condition_holds,
    ll_factorization_check,
    ll_witness_for,
)
from engines.structure_analysis.supersolvable import is_supersolvable_with
from shared.constants import Capacity, ExitCodes, FileFormats, SystemConfig
from shared.exceptions import (
    BaseLatticeError,
    ConfigurationError,
    ErrorCategory,
    MethodDisagreementError,
    UsageError,
    ValidationError,
    handle_error,
)
from shared.shared_types import (
    CheckProperty,
    CliSettings,
    CommandRequest,
    ErrorDetail,
    MobiusMethod,
    PropertyReportRow,
    Subcommand,
)
from shared.utils import configure_log_level, load_env_var, parse_int_list, setup_logger

load_dotenv()

logger = setup_logger(__name__)

EXTENDED_USAGE_NOTE = "# extended usage"
NO_PERFECT_ORDER = "none (exhaustive)"


# =============================================================================
# Configuration
# =============================================================================


def load_settings(path: Optional[str] = None) -> CliSettings:
    """Read CLI defaults from YAML; a missing default file means built-in defaults"""
    explicit = path or load_env_var(SystemConfig.CONFIG_PATH_ENV)
    config_path = Path(explicit or SystemConfig.DEFAULT_CONFIG_PATH)
    if config_path.exists():
        try:
            with open(config_path, "r", encoding="utf-8") as f:
                raw = yaml.safe_load(f) or {}
            settings = CliSettings.model_validate(raw)
        except (yaml.YAMLError, PydanticValidationError, OSError) as e:
            raise ConfigurationError(
                f"failed to load configuration from {config_path}", details={"path": str(config_path)}, cause=e
            ) from e
    elif explicit:
        raise ConfigurationError(f"configuration file {config_path} not found", details={"path": str(config_path)})
    else:
        settings = CliSettings()

    level = load_env_var(SystemConfig.LOG_LEVEL_ENV, settings.logging.level)
    configure_log_level(level, settings.logging.file)
    logger.debug("settings_loaded", path=str(config_path), method=settings.mobius.default_method.value)
    return settings


# =============================================================================
# Argument parsing
# =============================================================================


class _ArgumentParser(argparse.ArgumentParser):
    """argparse with usage failures raised as UsageError instead of exiting"""

    def error(self, message: str):
        raise UsageError(message)


def build_parser(settings: CliSettings) -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="lattice-mobius", description=__doc__.strip().splitlines()[0])
    commands = parser.add_subparsers(dest="subcommand", required=True, parser_class=_ArgumentParser)

    methods = [m.value for m in MobiusMethod]

    def order_options(sub: argparse.ArgumentParser) -> None:
        group = sub.add_mutually_exclusive_group()
        group.add_argument("--order", dest="order_file", metavar="F", help="atom-order file of 'rel a b' lines")
        group.add_argument("--canonical", action="store_true", help="use the family's own atom order")

    build = commands.add_parser(Subcommand.BUILD.value, help="write a family lattice to a file")
    build.add_argument("source", help="family specifier, e.g. nc:4")
    build.add_argument("--out", metavar="F", help="output file (stdout when omitted)")

    mobius = commands.add_parser(Subcommand.MOBIUS.value, help="Möbius function as element/label/mu TSV")
    mobius.add_argument("source", help="family specifier or lattice file")
    mobius.add_argument("--method", choices=methods, default=settings.mobius.default_method.value)
    mobius.add_argument("--verify", action="store_true", default=settings.mobius.verify)
    order_options(mobius)

    bases = commands.add_parser(Subcommand.BASES.value, help="list the bases summed for one element")
    bases.add_argument("source")
    bases.add_argument("--element", required=True, metavar="E", help="element label or index")
    bases.add_argument("--method", choices=[m for m in methods if m != MobiusMethod.RECURSIVE.value], default="nbb")
    order_options(bases)

    charpoly = commands.add_parser(Subcommand.CHARPOLY.value, help="characteristic polynomial")
    charpoly.add_argument("source")
    charpoly.add_argument("--chain", default="auto", help="'auto' or comma-separated element indices")

    check = commands.add_parser(Subcommand.CHECK.value, help="structural property report")
    check.add_argument("source")
    check.add_argument("--all", action="store_true", help="every property")
    for prop in CheckProperty:
        check.add_argument(f"--{prop.value}", dest="properties", action="append_const", const=prop.value)

    perfect = commands.add_parser(Subcommand.PERFECT_ORDER.value, help="search a perfect atom order")
    perfect.add_argument("source")
    perfect.add_argument("--budget", type=int, default=settings.perfect_order.budget)

    dominance = commands.add_parser(Subcommand.DOMINANCE_MU.value, help="μ(β, λ) in the dominance order")
    dominance.add_argument("beta", help="comma-separated parts")
    dominance.add_argument("lam", metavar="lambda", help="comma-separated parts")
    dominance.add_argument("--verify", action="store_true", default=settings.mobius.verify)

    return parser


def parse_request(argv: Optional[Sequence[str]], settings: CliSettings) -> CommandRequest:
    namespace = vars(build_parser(settings).parse_args(argv))
    if namespace.pop("all", False):
        namespace["properties"] = [p.value for p in CheckProperty]
    namespace = {k: v for k, v in namespace.items() if v is not None}
    try:
        return CommandRequest.model_validate(namespace)
    except PydanticValidationError as e:
        raise UsageError(e.errors()[0]["msg"], details={"argv": list(argv or [])}, cause=e) from e


# =============================================================================
# Sources and atom orders
# =============================================================================


def load_source(source: str) -> Tuple[FiniteLattice, Optional[FamilySpec]]:
    """A family specifier (name:params) or a lattice file"""
    spec = parse_family_spec(source)
    if spec is not None:
        return spec.build(), spec
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"{source!r} is neither a family specifier nor a lattice file", field="source", value=source)
    return load_lattice(path), None


def resolve_order(request: CommandRequest, lattice: FiniteLattice, spec: Optional[FamilySpec]) -> AtomOrder:
    if request.order_file:
        path = Path(request.order_file)
        if not path.is_file():
            raise UsageError(f"atom-order file {path} not found", field="order", value=request.order_file)
        return read_atom_order(path.read_text(encoding="utf-8"), lattice)
    if request.canonical:
        if spec is None:
            raise UsageError("--canonical needs a family specifier", field="source", value=request.source)
        return spec.canonical_order()
    return incomparability_order(lattice)


def resolve_element(lattice: FiniteLattice, text: str) -> int:
    """Element by label, falling back to a decimal index"""
    try:
        return lattice.index_of(text)
    except ValidationError:
        if text.isdigit() and int(text) < lattice.size:
            return int(text)
        raise


def _total(order: AtomOrder) -> AtomOrder:
    return order if order.is_total() else order.linear_extension()


def compute_mobius(
    lattice: FiniteLattice, method: MobiusMethod, order: AtomOrder, validate: bool = True
) -> MobiusVector:
    if method == MobiusMethod.RECURSIVE:
        return mobius_recursive(lattice)
    if method == MobiusMethod.CROSSCUT:
        return mobius_crosscut(lattice, validate)
    if method == MobiusMethod.NBB:
        return mobius_nbb(lattice, order, validate)
    if method == MobiusMethod.CORELESS:
        return mobius_coreless(lattice, selector_from_order(lattice, order), validate)
    return mobius_nbc_generalized(lattice, _total(order), validate)


def _write_table(frame: pd.DataFrame, sink: TextIO) -> None:
    frame.to_csv(sink, sep=FileFormats.FIELD_SEPARATOR, header=False, index=False, lineterminator="\n")


def _labels(lattice: FiniteLattice, elements: Sequence[int]) -> str:
    return " ".join(lattice.label(x) for x in elements) or FileFormats.EMPTY_FIELD


# =============================================================================
# Subcommands
# =============================================================================


def _run_build(request: CommandRequest, sink: TextIO) -> None:
    spec = parse_family_spec(request.source)
    if spec is None:
        raise UsageError(f"build needs a family specifier, got {request.source!r}", field="source", value=request.source)
    lattice = spec.build()
    if request.out:
        save_lattice(lattice, request.out)
        logger.info("lattice_written", family=str(spec), elements=lattice.size, path=request.out)
    else:
        sink.write(write_lattice(lattice))


def _run_mobius(request: CommandRequest, sink: TextIO) -> None:
    lattice, spec = load_source(request.source)
    order = resolve_order(request, lattice, spec)
    vector = compute_mobius(lattice, request.method, order, validate=not request.verify)
    if request.verify:
        verify_against_oracle(lattice, vector)
    _write_table(mobius_table(lattice, vector), sink)


def _run_bases(request: CommandRequest, sink: TextIO) -> None:
    lattice, spec = load_source(request.source)
    order = resolve_order(request, lattice, spec)
    x = resolve_element(lattice, request.element)
    if request.method == MobiusMethod.CROSSCUT:
        found = enumerate_crosscut_terms(lattice, x)
    elif request.method == MobiusMethod.CORELESS:
        found = enumerate_coreless_bases(lattice, selector_from_order(lattice, order), x)
    elif request.method == MobiusMethod.NBC:
        found = enumerate_nbc_bases(lattice, _total(order), x)
    else:
        found = enumerate_nbb_bases(lattice, order, x)
    for base in found:
        fields = [lattice.label(a) for a in base] or [FileFormats.EMPTY_FIELD]
        sink.write(FileFormats.FIELD_SEPARATOR.join(fields) + "\n")


def _parse_chain(lattice: FiniteLattice, text: str) -> MaximalChain:
    try:
        return MaximalChain.validated(lattice, parse_int_list(text, "chain"))
    except ValueError as e:
        raise UsageError(str(e), field="chain", value=text) from e


def _run_charpoly(request: CommandRequest, sink: TextIO) -> None:
    lattice, _ = load_source(request.source)
    if request.chain == "auto":
        witness = is_ll(lattice)
        chain = witness.chain if witness else (find_left_modular_chain(lattice) or MaximalChain(next(lattice.iter_maximal_chains())))
    else:
        chain = _parse_chain(lattice, request.chain)
        witness = ll_witness_for(lattice, chain)

    if witness is not None:
        result = ll_factorization_check(lattice, witness)
        sink.write(result.formatted() + "\n")
        return
    logger.info("charpoly_without_ll_chain", chain=list(chain.elements))
    sink.write(characteristic_polynomial(lattice, chain).format_expanded() + "\n")
    sink.write(EXTENDED_USAGE_NOTE + "\n")


def _check_row(lattice: FiniteLattice, prop: CheckProperty, explicit: bool) -> PropertyReportRow:
    if prop == CheckProperty.RANKED:
        return PropertyReportRow(property=prop, holds=is_ranked(lattice) is not None)
    if prop == CheckProperty.ATOMIC:
        return PropertyReportRow(property=prop, holds=is_atomic(lattice))
    if prop == CheckProperty.SEMIMODULAR:
        return PropertyReportRow(property=prop, holds=is_semimodular(lattice))
    if prop == CheckProperty.GEOMETRIC:
        return PropertyReportRow(property=prop, holds=is_geometric(lattice))
    if prop == CheckProperty.LEFT_MODULAR:
        chain = find_left_modular_chain(lattice)
        witness = _labels(lattice, chain.elements) if chain else FileFormats.EMPTY_FIELD
        return PropertyReportRow(property=prop, holds=chain is not None, witness=witness)
    if prop == CheckProperty.LEVEL:
        chain = find_left_modular_chain(lattice) or MaximalChain(next(lattice.iter_maximal_chains()))
        result = level_condition_holds(lattice, chain)
        if result.holds:
            return PropertyReportRow(property=prop, holds=True, witness=_labels(lattice, chain.elements))
        atom, later = result.witness
        return PropertyReportRow(property=prop, holds=False, witness=_labels(lattice, (atom,) + later))
    if prop == CheckProperty.LL:
        found = is_ll(lattice)
        witness = _labels(lattice, found.chain.elements) if found else FileFormats.EMPTY_FIELD
        return PropertyReportRow(property=prop, holds=found is not None, witness=witness)

    if lattice.size > Capacity.MAX_SUPERSOLVABLE_ELEMENTS and not explicit:
        return PropertyReportRow(property=prop, holds=None)
    for chain in iter_left_modular_chains(lattice):
        if is_supersolvable_with(lattice, chain):
            return PropertyReportRow(property=prop, holds=True, witness=_labels(lattice, chain.elements))
    return PropertyReportRow(property=prop, holds=False)


def _run_check(request: CommandRequest, sink: TextIO, explicit: bool) -> None:
    lattice, _ = load_source(request.source)
    ordered = [p for p in CheckProperty if p in set(request.properties)]
    rows = [_check_row(lattice, prop, explicit).as_fields() for prop in ordered]
    _write_table(pd.DataFrame(rows, columns=["property", "holds", "witness"]), sink)


def _run_perfect_order(request: CommandRequest, sink: TextIO) -> None:
    lattice, _ = load_source(request.source)
    order = search_perfect_order(lattice, request.budget)
    if order is None:
        sink.write(NO_PERFECT_ORDER + "\n")
    elif order.relation_count == 0:
        sink.write("# incomparability order\n")
    else:
        sink.write(write_atom_order(order))


def _run_dominance_mu(request: CommandRequest, sink: TextIO) -> None:
    beta, lam = IntegerPartition.parse(request.beta), IntegerPartition.parse(request.lam)
    value = dominance_mobius(beta, lam)
    if request.verify:
        host = dominance_interval(beta, lam)
        expected = mobius_recursive(host)[host.top]
        if expected != value:
            raise MethodDisagreementError(
                f"closed form gives μ({beta.label()}, {lam.label()}) = {value}, recursion gives {expected}",
                method="dominance",
                element=host.top,
                value=value,
                expected=expected,
            )
    sink.write(f"{value}\n")


# =============================================================================
# Dispatch and exit statuses
# =============================================================================

EXIT_STATUS_BY_CATEGORY = {
    ErrorCategory.VERIFICATION: ExitCodes.VERIFICATION_MISMATCH,
    ErrorCategory.USAGE: ExitCodes.USAGE_ERROR,
}


def failure_detail(error: Exception, context: str) -> ErrorDetail:
    """Diagnostic for a failed command; foreign exceptions arrive wrapped as system errors"""
    return ErrorDetail.model_validate(handle_error(error, context=context, reraise=False)["error"])


def report_failure(error: Exception, context: str) -> int:
    detail = failure_detail(error, context)
    sys.stderr.write(detail.diagnostic("lattice-mobius") + "\n")
    logger.debug("command_failed", context=context, code=detail.code, category=detail.category.value)
    return EXIT_STATUS_BY_CATEGORY.get(detail.category, ExitCodes.DOMAIN_ERROR)


def run(request: CommandRequest, sink: TextIO = sys.stdout, explicit_check: bool = True) -> int:
    """Dispatch one request; returns the exit status"""
    try:
        if request.subcommand == Subcommand.BUILD:
            _run_build(request, sink)
        elif request.subcommand == Subcommand.MOBIUS:
            _run_mobius(request, sink)
        elif request.subcommand == Subcommand.BASES:
            _run_bases(request, sink)
        elif request.subcommand == Subcommand.CHARPOLY:
            _run_charpoly(request, sink)
        elif request.subcommand == Subcommand.CHECK:
            _run_check(request, sink, explicit_check)
        elif request.subcommand == Subcommand.PERFECT_ORDER:
            _run_perfect_order(request, sink)
        else:
            _run_dominance_mu(request, sink)
    except Exception as e:
        return report_failure(e, request.subcommand.value)
    return ExitCodes.SUCCESS


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the lattice-mobius console script"""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        settings = load_settings()
        request = parse_request(argv, settings)
    except BaseLatticeError as e:
        return report_failure(e, "arguments")

    logger.debug("request_parsed", subcommand=request.subcommand.value, source=request.source)
    return run(request, sys.stdout, explicit_check="--all" not in argv)


if __name__ == "__main__":
    sys.exit(main())
