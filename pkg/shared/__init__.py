"""
Shared plumbing for the lattice-mobius engine: constants, exceptions,
I/O models and logging utilities.
"""

__version__ = "1.0.0"
__author__ = "lattice-mobius developers"
