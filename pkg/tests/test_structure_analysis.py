#!/usr/bin/env python3
"""
Tests for left-modular chains, levels, the level condition, LL lattices,
generalized rank, characteristic polynomials and supersolvability.
"""

import itertools

import numpy as np
import pytest

from engines.families import (
    boolean_lattice,
    chain,
    noncrossing_lattice,
    partition_lattice,
    shuffle_ll_chain,
    shuffle_poset,
    tamari_delta_chain,
    tamari_lattice,
)
from engines.lattice_core import is_semimodular
from engines.mobius_engine import atom_subset_tables
from engines.mobius_engine.mobius import nbb_flags
from engines.structure_analysis import (
    IntegerPolynomial,
    MaximalChain,
    characteristic_polynomial,
    find_left_modular_chain,
    generalized_rank,
    induced_atom_order,
    is_left_modular_chain,
    is_left_modular_element,
    left_modular_elements,
    is_ll,
    is_supersolvable_with,
    iter_left_modular_chains,
    level_condition_holds,
    levelcondition_from_circuit_condition,
    levels_from_chain,
    ll_factorization_check,
    ll_witness_for,
    longest_chain_rank_check,
    nbb_level_characterization,
    rank_comparison,
    same_level_join_witness,
    sublattice_generated,
)
from shared.exceptions import (
    CapacityExceededError,
    PreconditionError,
    PreconditionNotVerifiedError,
    ValidationError,
)

# (lattice factory, chain factory) pairs known to be LL
LL_CASES = {
    "shuffle-2-1": (lambda: shuffle_poset(2, 1), lambda: shuffle_ll_chain(2, 1)),
    "shuffle-3-1": (lambda: shuffle_poset(3, 1), lambda: shuffle_ll_chain(3, 1)),
    "tamari-4": (lambda: tamari_lattice(4), lambda: tamari_delta_chain(4)),
    "partition-3": (lambda: partition_lattice(3), lambda: (4, 1, 0)),
    "boolean-3": (lambda: boolean_lattice(3), lambda: (0, 1, 3, 7)),
}


def small_corpus():
    return [
        chain(3),
        boolean_lattice(3),
        partition_lattice(3),
        partition_lattice(4),
        noncrossing_lattice(4),
        shuffle_poset(2, 1),
        tamari_lattice(3),
        tamari_lattice(4),
    ]


class TestMaximalChains:
    def test_validated(self):
        lattice = chain(3)
        assert MaximalChain.validated(lattice, [0, 1, 2, 3]).length == 3
        assert MaximalChain.validated(lattice, [0, 1, 2, 3]).labels(lattice) == ["0", "1", "2", "3"]

    @pytest.mark.parametrize("elements", [[0, 2, 3], [1, 2, 3], [0, 1, 2], []])
    def test_not_maximal(self, elements):
        with pytest.raises(ValidationError):
            MaximalChain.validated(chain(3), elements)


class TestLeftModularity:
    def test_every_element_of_a_distributive_lattice(self):
        lattice = boolean_lattice(3)
        assert all(is_left_modular_element(lattice, x) for x in range(lattice.size))

    def test_pentagon(self):
        """Only the long side of the pentagon is left-modular"""
        lattice = tamari_lattice(3)
        assert not is_left_modular_element(lattice, lattice.index_of("(1,1,3)"))
        assert is_left_modular_element(lattice, lattice.index_of("(1,2,1)"))
        found = find_left_modular_chain(lattice)
        assert found.labels(lattice) == ["(1,1,1)", "(1,2,1)", "(1,2,2)", "(1,2,3)"]
        assert len(list(iter_left_modular_chains(lattice))) == 1

    def test_left_modular_flags_for_the_pentagon(self):
        lattice = tamari_lattice(3)
        flags = left_modular_elements(lattice)
        assert flags.shape == (lattice.size,)
        assert not flags.flags.writeable
        assert [lattice.labels[x] for x in np.flatnonzero(~flags)] == ["(1,1,3)"]

    def test_six_element_lattice(self, six_element_lattice):
        lattice = six_element_lattice
        assert find_left_modular_chain(lattice).elements == (0, 1, 4, 5)
        assert not is_left_modular_element(lattice, lattice.index_of("3"))
        assert is_left_modular_chain(lattice, (0, 2, 4, 5))


class TestLevels:
    def test_shuffle_levels(self):
        lattice = shuffle_poset(2, 1)
        levels = levels_from_chain(lattice, shuffle_ll_chain(2, 1))
        assert levels.sizes == (1, 1, 3)
        assert levels.level_of(lattice.index_of("d")) == 1
        assert levels.level_of(lattice.index_of("e")) == 2
        assert levels.level_of(lattice.index_of("deD")) == 3

    def test_induced_order(self):
        lattice = partition_lattice(3)
        order = induced_atom_order(levels_from_chain(lattice, (4, 1, 0)))
        assert order.below(1, 2) and order.below(1, 3)
        assert not order.below(2, 3)

    def test_level_condition_fails_on_two_two(self):
        lattice = shuffle_poset(2, 2)
        result = level_condition_holds(lattice, shuffle_ll_chain(2, 2))
        assert not result.holds
        atom, selection = result.witness
        assert lattice.le(atom, lattice.join_set(selection))

    def test_level_condition_fails_on_six_element_lattice(self, six_element_lattice):
        result = level_condition_holds(six_element_lattice, (0, 1, 4, 5))
        assert not result.holds
        assert result.witness == (1, (2, 3))

    def test_same_level_join_witness(self):
        lattice = partition_lattice(3)
        assert same_level_join_witness(lattice, (4, 1, 0), 2, 3) == 1
        with pytest.raises(ValidationError):
            same_level_join_witness(lattice, (4, 1, 0), 1, 2)

    @pytest.mark.parametrize("lattice", [boolean_lattice(3), partition_lattice(4), chain(3)])
    def test_semimodular_lattices_satisfy_the_level_condition(self, lattice):
        assert is_semimodular(lattice)
        for elements in lattice.iter_maximal_chains():
            assert level_condition_holds(lattice, elements).holds


class TestLL:
    @pytest.mark.parametrize("m", [2, 3])
    def test_shuffles_are_ll_without_semimodularity(self, m):
        lattice = shuffle_poset(m, 1)
        assert is_ll(lattice) is not None
        assert not is_semimodular(lattice)

    def test_six_element_lattice_is_not_ll(self, six_element_lattice):
        assert is_ll(six_element_lattice) is None

    def test_witness_for_a_chain(self):
        lattice = tamari_lattice(3)
        assert ll_witness_for(lattice, tamari_delta_chain(3)) is not None
        assert ll_witness_for(lattice, (0, 1, 4)) is None

    @pytest.mark.parametrize("case", sorted(LL_CASES))
    def test_nbb_sets_spread_over_levels(self, case):
        lattice_factory, chain_factory = LL_CASES[case]
        assert nbb_level_characterization(lattice_factory(), chain_factory())

    @pytest.mark.parametrize("case", sorted(LL_CASES))
    def test_bases_meet_every_level_below_their_join(self, case):
        """An atom below an NBB set's join shares a level with the set, and |B| = ρ(⋁B)"""
        lattice_factory, chain_factory = LL_CASES[case]
        lattice, elements = lattice_factory(), chain_factory()
        levels = levels_from_chain(lattice, elements)
        rank = generalized_rank(lattice, elements)
        tables = atom_subset_tables(lattice)
        flags = nbb_flags(lattice, induced_atom_order(levels))
        for mask in np.flatnonzero(flags):
            base = tables.atoms_of(int(mask))
            top = int(tables.join_of[mask])
            base_levels = {levels.level_of(b) for b in base}
            assert len(base) == rank[top]
            assert all(levels.level_of(a) in base_levels for a in lattice.atoms_below(top))

    @pytest.mark.parametrize("case", sorted(LL_CASES))
    def test_circuit_condition_implies_level_condition(self, case):
        lattice_factory, chain_factory = LL_CASES[case]
        assert levelcondition_from_circuit_condition(lattice_factory(), chain_factory())


class TestCharacteristicPolynomial:
    def test_generalized_rank_of_a_chain(self):
        assert generalized_rank(chain(3), (0, 1, 2, 3)) == (0, 1, 1, 1)

    @pytest.mark.parametrize("m", range(1, 5))
    def test_shuffles(self, m):
        lattice = shuffle_poset(m, 1)
        witness = ll_witness_for(lattice, shuffle_ll_chain(m, 1))
        result = ll_factorization_check(lattice, witness)
        assert result.equal
        assert result.roots == (1,) * m + (m + 1,)
        assert result.polynomial == IntegerPolynomial.from_roots(result.roots)

    def test_two_one_formatted(self):
        lattice = shuffle_poset(2, 1)
        result = ll_factorization_check(lattice, is_ll(lattice))
        assert result.formatted() == "(t-1)^2*(t-3)"
        assert result.polynomial.format_expanded() == "t^3-5t^2+7t-3"

    @pytest.mark.parametrize("n", range(2, 6))
    def test_tamari(self, n):
        lattice = tamari_lattice(n)
        result = ll_factorization_check(lattice, ll_witness_for(lattice, tamari_delta_chain(n)))
        zeros = (n - 1) * (n - 2) // 2
        assert result.equal
        assert result.roots == (0,) * zeros + (1,) * (n - 1)
        assert is_ll(lattice) is not None

    def test_small_geometric_lattices(self):
        boolean = boolean_lattice(3)
        assert characteristic_polynomial(boolean, (0, 1, 3, 7)) == IntegerPolynomial.from_roots([1, 1, 1])
        partitions = partition_lattice(3)
        result = ll_factorization_check(partitions, ll_witness_for(partitions, (4, 1, 0)))
        assert result.formatted() == "(t-1)*(t-2)"

    def test_extended_polynomial_on_six_element_lattice(self, six_element_lattice):
        polynomial = characteristic_polynomial(six_element_lattice, (0, 1, 4, 5))
        assert polynomial.format_expanded() == "t^3-3t^2+t+1"

    def test_witness_is_required(self):
        lattice = shuffle_poset(2, 1)
        with pytest.raises(PreconditionNotVerifiedError):
            ll_factorization_check(lattice, shuffle_ll_chain(2, 1))
        other = is_ll(shuffle_poset(3, 1))
        with pytest.raises(PreconditionNotVerifiedError):
            ll_factorization_check(lattice, other)


class TestRanks:
    def test_longest_chain_rank_on_six_element_lattice(self, six_element_lattice):
        assert generalized_rank(six_element_lattice, (0, 1, 4, 5)) == (0, 1, 1, 1, 2, 3)
        assert longest_chain_rank_check(six_element_lattice, (0, 1, 4, 5))

    def test_rank_comparison_on_a_chain(self):
        comparison = rank_comparison(chain(3), (0, 1, 2, 3))
        assert [row.element for row in comparison.differences] == [2, 3]
        assert comparison.consistent

    def test_rank_comparison_on_partitions(self):
        comparison = rank_comparison(partition_lattice(3), (4, 1, 0))
        assert comparison.differences == ()
        assert comparison.consistent

    def test_rank_comparison_needs_ranks(self, six_element_lattice):
        with pytest.raises(PreconditionError):
            rank_comparison(six_element_lattice, (0, 1, 4, 5))


class TestSupersolvable:
    def test_sublattice_generated(self, seven_element_lattice):
        assert sublattice_generated(seven_element_lattice, [1, 3]) == frozenset({0, 1, 3, 6})

    def test_partition_lattice(self):
        assert is_supersolvable_with(partition_lattice(3), (4, 1, 0))
        assert is_supersolvable_with(boolean_lattice(3), (0, 1, 3, 7))

    def test_six_element_lattice(self, six_element_lattice):
        assert not is_supersolvable_with(six_element_lattice, (0, 1, 4, 5))

    def test_capacity(self):
        with pytest.raises(CapacityExceededError):
            is_supersolvable_with(noncrossing_lattice(7), (0,))

    def test_supersolvable_chains_are_left_modular(self):
        for lattice in small_corpus():
            for elements in itertools.islice(lattice.iter_maximal_chains(), 20):
                if is_supersolvable_with(lattice, elements):
                    assert is_left_modular_chain(lattice, elements)
