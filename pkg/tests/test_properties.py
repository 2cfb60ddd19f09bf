#!/usr/bin/env python3
"""
Property-based tests over random closure lattices: every Möbius method
agrees with the recursion for every atom order, and NBB families shrink as
the order is refined.
"""

import itertools

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from engines.families import random_closure_lattice
from engines.lattice_core import direct_product
from engines.mobius_engine import (
    AtomOrder,
    condition_Cprime_holds,
    incomparability_order,
    mobius_coreless,
    mobius_crosscut,
    mobius_nbb,
    mobius_nbc_generalized,
    mobius_recursive,
    selector_from_order,
)
from engines.mobius_engine.mobius import nbb_flags

SEEDS = st.integers(min_value=0, max_value=10**6)
PROPERTY_SETTINGS = settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def random_orders(lattice, seed, count=4):
    """Acyclic atom orders, each a random subset of the pairs of a random permutation"""
    rng = np.random.default_rng(seed)
    k = len(lattice.atoms)
    orders = [incomparability_order(lattice)]
    for _ in range(count):
        permutation = rng.permutation(k)
        density = rng.random()
        pairs = [
            (int(permutation[i]), int(permutation[j]))
            for i, j in itertools.combinations(range(k), 2)
            if rng.random() < density
        ]
        orders.append(AtomOrder.from_relations(lattice, pairs))
    orders.append(orders[-1].linear_extension(seed=seed))
    return orders


@PROPERTY_SETTINGS
@given(seed=SEEDS)
def test_every_method_matches_the_recursion(seed):
    lattice = random_closure_lattice(seed, max_elements=30, max_atoms=10)
    expected = mobius_recursive(lattice).values
    assert mobius_crosscut(lattice).values == expected
    for order in random_orders(lattice, seed):
        assert mobius_nbb(lattice, order).values == expected
        assert mobius_coreless(lattice, selector_from_order(lattice, order)).values == expected


@PROPERTY_SETTINGS
@given(seed=SEEDS)
def test_refining_the_order_shrinks_nbb_sets(seed):
    lattice = random_closure_lattice(seed, max_elements=30, max_atoms=10)
    for order in random_orders(lattice, seed):
        refined = order.linear_extension(seed=seed + 1)
        assert refined.extends(order)
        coarse, fine = nbb_flags(lattice, order), nbb_flags(lattice, refined)
        assert not (fine & ~coarse).any()


@PROPERTY_SETTINGS
@given(seed=SEEDS)
def test_generalized_nbc_under_condition_cprime(seed):
    lattice = random_closure_lattice(seed, max_elements=30, max_atoms=10)
    total = random_orders(lattice, seed, count=1)[-1]
    if condition_Cprime_holds(lattice, total):
        assert mobius_nbc_generalized(lattice, total).values == mobius_recursive(lattice).values


@settings(max_examples=50, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(first_seed=SEEDS, second_seed=SEEDS)
def test_mobius_is_multiplicative_on_products(first_seed, second_seed):
    first = random_closure_lattice(first_seed, max_elements=8, max_atoms=4)
    second = random_closure_lattice(second_seed, max_elements=8, max_atoms=4)
    product = direct_product(first, second)
    mu_first, mu_second = mobius_recursive(first), mobius_recursive(second)
    mu_product = mobius_nbb(product, incomparability_order(product))
    for i, j in itertools.product(range(first.size), range(second.size)):
        assert mu_product[i * second.size + j] == mu_first[i] * mu_second[j]
