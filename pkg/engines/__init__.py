"""
Computation engines for finite lattices: the lattice core, Möbius function
methods, lattice families and structural analysis.
"""

__version__ = "1.0.0"
__author__ = "lattice-mobius developers"
