#!/usr/bin/env python3
"""
Tests for set partitions, non-crossing partitions and their signed
type B and D versions.
"""

import itertools

import pytest

from engines.families import (
    SetPartition,
    is_noncrossing_graph,
    nc_atom_order,
    noncrossing_lattice,
    noncrossing_mobius_top,
    noncrossing_tree_of,
    partition_lattice,
    partition_mobius_top,
)
from engines.families.signed import (
    HALF_EDGE,
    NEGATIVE_EDGE,
    POSITIVE_EDGE,
    ncb_atom_order,
    ncb_lattice,
    ncb_mobius_top,
    ncb_nbb_base_count,
    ncbd_atom_order,
    ncbd_lattice,
    ncbd_mobius_top,
    ncd_lattice,
    signed_atom_kind,
)
from engines.lattice_core import is_semimodular
from engines.mobius_engine import enumerate_nbb_bases, is_perfect_order, mobius_nbb, mobius_recursive
from shared.exceptions import CapacityExceededError, ValidationError
from shared.utils import catalan


class TestSetPartition:
    def test_blocks_are_canonical(self):
        partition = SetPartition.from_blocks([[3], [2, 1]])
        assert partition.blocks == ((1, 2), (3,))
        assert partition.label() == "12/3"
        assert partition.nontrivial_blocks() == ((1, 2),)

    def test_refinement(self):
        fine = SetPartition.from_blocks([[1], [2], [3]])
        coarse = SetPartition.from_blocks([[1, 3], [2]])
        assert fine.refines(coarse)
        assert not coarse.refines(fine)

    @pytest.mark.parametrize("blocks", [[[1, 2], []], [[1, 2], [2, 3]]])
    def test_invalid_blocks(self, blocks):
        with pytest.raises(ValidationError):
            SetPartition.from_blocks(blocks)


class TestPartitionLattice:
    @pytest.mark.parametrize("n, bell", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
    def test_sizes_are_bell_numbers(self, n, bell):
        assert partition_lattice(n).size == bell

    @pytest.mark.parametrize("n", range(1, 6))
    def test_top_mobius(self, n):
        lattice = partition_lattice(n)
        assert mobius_recursive(lattice)[lattice.top] == partition_mobius_top(n)

    def test_extremes(self):
        lattice = partition_lattice(3)
        assert lattice.label(lattice.bottom) == "1/2/3"
        assert lattice.label(lattice.top) == "123"
        assert sorted(lattice.label(a) for a in lattice.atoms) == ["1/23", "12/3", "13/2"]

    @pytest.mark.parametrize("n", [0, 9])
    def test_out_of_range(self, n):
        with pytest.raises((ValidationError, CapacityExceededError)):
            partition_lattice(n)


class TestNoncrossingLattice:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_sizes_are_catalan_numbers(self, n):
        assert noncrossing_lattice(n).size == catalan(n)

    def test_join_is_taken_inside_the_family(self):
        """13 ∨ 24 is 1234 because 13/24 crosses"""
        lattice = noncrossing_lattice(4)
        pi, sigma = lattice.index_of("13/2/4"), lattice.index_of("1/24/3")
        assert lattice.join(pi, sigma) == lattice.index_of("1234") == lattice.top

    def test_not_semimodular(self):
        assert not is_semimodular(noncrossing_lattice(4))

    def test_rank_order(self):
        lattice = noncrossing_lattice(4)
        order = nc_atom_order(4, "rank")
        e12, e13, e23, e14 = (lattice.index_of(s) for s in ("12/3/4", "13/2/4", "1/23/4", "14/2/3"))
        assert order.below(e12, e13)
        assert not order.below(e13, e23) and not order.below(e23, e13)
        assert order.below(e23, e14)

    def test_interval_order(self):
        lattice = noncrossing_lattice(4)
        order = nc_atom_order(4, "interval")
        e14, e23, e12, e34 = (lattice.index_of(s) for s in ("14/2/3", "1/23/4", "12/3/4", "1/2/34"))
        assert order.below(e14, e23)
        assert not order.below(e12, e34) and not order.below(e34, e12)

    def test_unknown_variant(self):
        with pytest.raises(ValidationError):
            nc_atom_order(4, "lexicographic")

    def test_bases_of_the_top(self):
        lattice = noncrossing_lattice(4)
        bases = enumerate_nbb_bases(lattice, nc_atom_order(4, "rank"), lattice.top)
        assert len(bases) == 5
        assert all(len(base) == 3 for base in bases)
        assert mobius_nbb(lattice, nc_atom_order(4, "rank"))[lattice.top] == -5

    @pytest.mark.parametrize("n", range(2, 7))
    @pytest.mark.parametrize("variant", ["rank", "interval"])
    def test_orders_are_perfect(self, n, variant):
        lattice = noncrossing_lattice(n)
        order = nc_atom_order(n, variant)
        assert is_perfect_order(lattice, order).perfect
        assert len(enumerate_nbb_bases(lattice, order, lattice.top)) == catalan(n - 1)
        assert mobius_nbb(lattice, order)[lattice.top] == noncrossing_mobius_top(n)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_rank_order_bases_are_noncrossing_trees(self, n):
        """One edge ending at each j = 2..n, no two edges crossing"""
        lattice = noncrossing_lattice(n)
        for base in enumerate_nbb_bases(lattice, nc_atom_order(n, "rank"), lattice.top):
            tree = noncrossing_tree_of(lattice, base)
            assert is_noncrossing_graph(tree)
            assert sorted(j for _, j in tree) == list(range(2, n + 1))

    @pytest.mark.parametrize("n", range(2, 7))
    def test_interval_order_bases_alternate(self, n):
        """Every vertex lies above all of its neighbours or below all of them"""
        lattice = noncrossing_lattice(n)
        for base in enumerate_nbb_bases(lattice, nc_atom_order(n, "interval"), lattice.top):
            tree = noncrossing_tree_of(lattice, base)
            assert is_noncrossing_graph(tree) and len(tree) == n - 1
            for v in range(1, n + 1):
                neighbours = [j if i == v else i for i, j in tree if v in (i, j)]
                assert all(u > v for u in neighbours) or all(u < v for u in neighbours)

    def test_crossing_graph(self):
        assert not is_noncrossing_graph([(1, 3), (2, 4)])
        assert is_noncrossing_graph([(1, 4), (2, 3)])

    def test_intervals_below_factor_over_blocks(self):
        lattice = noncrossing_lattice(5)
        mu = mobius_recursive(lattice)
        for x in range(lattice.size):
            expected = 1
            for block in lattice.key(x).blocks:
                expected *= noncrossing_mobius_top(len(block))
            assert mu[x] == expected


class TestSignedLattices:
    @pytest.mark.parametrize("n", range(1, 4))
    def test_type_b_sizes(self, n):
        """|NCB_n| is the central binomial coefficient"""
        lattice = ncb_lattice(n)
        assert lattice.size == len(list(itertools.combinations(range(2 * n), n)))

    def test_small_values(self):
        ncb, ncd = ncb_lattice(2), ncd_lattice(2)
        assert mobius_recursive(ncb)[ncb.top] == 3
        assert mobius_recursive(ncd)[ncd.top] == 1

    def test_half_edges_follow_s(self):
        ncb, ncd = ncb_lattice(2), ncd_lattice(2)
        ncb_kinds = sorted(signed_atom_kind(ncb, a)[0] for a in ncb.atoms)
        assert ncb_kinds == sorted([HALF_EDGE, HALF_EDGE, NEGATIVE_EDGE, POSITIVE_EDGE])
        assert all(signed_atom_kind(ncd, a)[0] != HALF_EDGE for a in ncd.atoms)

    def test_negative_edge_sits_below_positive_edge(self):
        lattice = ncb_lattice(2)
        order = ncb_atom_order(2)
        kinds = {signed_atom_kind(lattice, a): a for a in lattice.atoms}
        negative, positive = kinds[(NEGATIVE_EDGE, (1, 2))], kinds[(POSITIVE_EDGE, (1, 2))]
        half = kinds[(HALF_EDGE, (1, 1))]
        assert order.below(negative, positive)
        assert order.below(positive, half)
        assert not order.below(half, positive)

    @pytest.mark.parametrize("n", range(1, 4))
    def test_type_b_top(self, n):
        lattice = ncb_lattice(n)
        order = ncb_atom_order(n)
        bases = enumerate_nbb_bases(lattice, order, lattice.top)
        assert len(bases) == ncb_nbb_base_count(n)
        assert mobius_nbb(lattice, order)[lattice.top] == ncb_mobius_top(n) == ncbd_mobius_top(n)
        assert is_perfect_order(lattice, order).perfect

    @pytest.mark.parametrize(
        "n,s", [(n, s) for n in range(2, 4) for size in range(n + 1) for s in itertools.combinations(range(1, n + 1), size)]
    )
    def test_every_s(self, n, s):
        lattice = ncbd_lattice(n, s)
        order = ncbd_atom_order(n, s)
        assert mobius_recursive(lattice)[lattice.top] == ncbd_mobius_top(n, s)
        assert mobius_nbb(lattice, order)[lattice.top] == ncbd_mobius_top(n, s)
        assert all(len(base) == n for base in enumerate_nbb_bases(lattice, order, lattice.top))

    def test_s_outside_range(self):
        with pytest.raises(ValidationError):
            ncbd_lattice(2, [3])

    def test_capacity(self):
        with pytest.raises(CapacityExceededError):
            ncbd_lattice(5)


@pytest.mark.slow
def test_kreweras_sweep_at_seven():
    lattice = noncrossing_lattice(7)
    order = nc_atom_order(7, "rank")
    assert mobius_recursive(lattice)[lattice.top] == mobius_nbb(lattice, order)[lattice.top] == noncrossing_mobius_top(7)
    assert len(enumerate_nbb_bases(lattice, order, lattice.top)) == catalan(6)
