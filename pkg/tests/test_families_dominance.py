#!/usr/bin/env python3
"""
Tests for the dominance order on integer partitions: joins through
composition reflection, atoms by critical interval and the closed form
for μ(β, λ).
"""

import itertools

import pytest

from engines.families import (
    Composition,
    IntegerPartition,
    composition_join,
    dominance_atom_order,
    dominance_atoms,
    dominance_interval,
    dominance_lattice,
    dominance_mobius,
    partition_reflection,
)
from engines.families.dominance import MOVE, WALL, analyze_dominance_interval, integer_partitions, partition_join
from engines.mobius_engine import enumerate_nbb_bases, mobius_crosscut, mobius_recursive
from shared.exceptions import NotComparableError, NotSameNError, ValidationError


def comparable_pairs(n):
    partitions = integer_partitions(n)
    return [(beta, lam) for beta, lam in itertools.product(partitions, repeat=2) if lam.dominates(beta)]


def assert_closed_form(n):
    for beta, lam in comparable_pairs(n):
        interval = dominance_interval(beta, lam)
        assert dominance_mobius(beta, lam) == mobius_recursive(interval)[interval.top], (beta, lam)


def assert_unique_base(n):
    for beta, lam in comparable_pairs(n):
        analysis = analyze_dominance_interval(beta, lam)
        host = dominance_interval(beta, lam)
        bases = enumerate_nbb_bases(host, dominance_atom_order(beta, lam), host.top)
        if analysis.nbb_base is None:
            assert bases == [], (beta, lam)
        else:
            expected = tuple(sorted(host.index_of(a.partition) for a in analysis.nbb_base))
            assert bases == [expected], (beta, lam)


class TestPartitions:
    def test_parse_and_label(self):
        partition = IntegerPartition.parse("3,1,1,1")
        assert partition.parts == (3, 1, 1, 1)
        assert partition.label() == "(3,1,1,1)"
        assert IntegerPartition.parse("(4,2)") == IntegerPartition((4, 2))

    @pytest.mark.parametrize("parts", [(1, 2), (2, 0)])
    def test_invalid_partitions(self, parts):
        with pytest.raises(ValidationError):
            IntegerPartition(parts)

    def test_unreadable_partition(self):
        with pytest.raises(ValidationError):
            IntegerPartition.parse("3,a")

    def test_dominance(self):
        assert IntegerPartition((4, 2)).dominates(IntegerPartition((3, 1, 1, 1)))
        assert not IntegerPartition((3, 3)).dominates(IntegerPartition((4, 1, 1)))
        assert not IntegerPartition((4, 1, 1)).dominates(IntegerPartition((3, 3)))

    def test_different_n(self):
        with pytest.raises(NotSameNError):
            IntegerPartition((2, 2)).dominates(IntegerPartition((3, 1, 1)))

    @pytest.mark.parametrize("n,count", [(1, 1), (4, 5), (6, 11), (8, 22)])
    def test_partition_counts(self, n, count):
        assert len(integer_partitions(n)) == count
        assert dominance_lattice(n).size == count


class TestJoins:
    def test_reflection(self):
        assert partition_reflection(Composition((1, 3))) == IntegerPartition((2, 2))
        assert partition_reflection(Composition((1, 1, 3))) == IntegerPartition((2, 2, 1))

    def test_composition_join(self):
        joined = composition_join(IntegerPartition((3, 3)), IntegerPartition((4, 1, 1)))
        assert joined == Composition((4, 2))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_join_formula_matches_table(self, n):
        lattice = dominance_lattice(n)
        for i, j in itertools.product(range(lattice.size), repeat=2):
            joined = partition_join(lattice.key(i), lattice.key(j))
            assert lattice.index_of(joined) == lattice.join(i, j)


class TestAtoms:
    def test_all_ones(self):
        (atom,) = dominance_atoms(IntegerPartition((1, 1, 1, 1)))
        assert atom.kind == WALL
        assert (atom.source, atom.target) == (4, 1)
        assert atom.critical_interval == (1, 3)
        assert atom.partition == IntegerPartition((2, 1, 1))
        assert atom.label() == "4->1"

    def test_move_atom(self):
        (atom,) = dominance_atoms(IntegerPartition((3, 1)))
        assert atom.kind == MOVE
        assert atom.partition == IntegerPartition((4,))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_atoms_are_upper_covers(self, n):
        lattice = dominance_lattice(n)
        for x in range(lattice.size):
            found = {a.partition for a in dominance_atoms(lattice.key(x))}
            assert found == {lattice.key(c) for c in lattice.upper_covers(x)}

    def test_atoms_below_lam(self):
        beta, lam = IntegerPartition((2, 2, 1, 1)), IntegerPartition((3, 2, 1))
        chosen = dominance_atoms(beta, lam)
        assert all(lam.dominates(a.partition) for a in chosen)
        with pytest.raises(NotComparableError):
            dominance_atoms(lam, beta)


class TestMobius:
    def test_single_atom_above_the_bottom(self):
        """In P_6, μ is nonzero only at 0̂ and its unique atom"""
        lattice = dominance_lattice(6)
        mu = mobius_crosscut(lattice)
        assert [x for x in range(lattice.size) if mu[x]] == sorted([lattice.bottom, *lattice.atoms])
        assert len(lattice.atoms) == 1

    def test_trivial_interval(self):
        beta = IntegerPartition((2, 1, 1))
        assert dominance_mobius(beta, beta) == 1

    def test_interval_without_full_join(self):
        beta, lam = IntegerPartition((3, 1, 1, 1)), IntegerPartition((4, 2))
        interval = dominance_interval(beta, lam)
        assert dominance_mobius(beta, lam) == mobius_recursive(interval)[interval.top]

    @pytest.mark.parametrize("n", range(1, 7))
    def test_closed_form(self, n):
        assert_closed_form(n)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_unique_base_under_run_order(self, n):
        assert_unique_base(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_closed_form_sweep(n):
    assert_closed_form(n)
    assert_unique_base(n)
