"""Command-line client for the lattice-mobius engines."""

from client.lattice_cli import build_parser, load_settings, main, parse_request, run

__all__ = ["build_parser", "load_settings", "main", "parse_request", "run"]
