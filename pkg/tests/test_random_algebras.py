"""Seeded sweeps over arbitrary random algebras.

The fixture algebras are all well-behaved (groups, a semilattice, a
monoid); these sweeps check the same theorems on structureless random
operation tables.
"""

import random

from ualgebra import (
    CarrierMap,
    FiniteAlgebra,
    Partition,
    Signature,
    all_partitions,
    is_congruence_direct,
    is_congruence_via_translations,
    kernel,
    largest_congruence_below,
    least_factorization,
    quotient,
    is_homomorphism,
)
from ualgebra.errors import NotACongruenceError

from _oracles import naive_largest_congruence_below


def random_algebra(rng, size):
    sig = Signature([("f", 2), ("u", 1), ("c", 0)])
    return FiniteAlgebra(
        sig,
        size,
        {
            "f": tuple(rng.randrange(size) for _ in range(size * size)),
            "u": tuple(rng.randrange(size) for _ in range(size)),
            "c": rng.randrange(size),
        },
    )


def test_criterion_equivalence_on_random_algebras():
    rng = random.Random(1618)
    for _ in range(40):
        X = random_algebra(rng, rng.randint(2, 5))
        for part in all_partitions(X.size):
            assert is_congruence_direct(X, part).ok == is_congruence_via_translations(X, part).ok


def test_least_factorization_kernel_on_random_algebras():
    rng = random.Random(2718)
    for _ in range(40):
        X = random_algebra(rng, rng.randint(2, 5))
        target = rng.randint(1, 3)
        f = CarrierMap(X.size, target, tuple(rng.randrange(target) for _ in range(X.size)))
        got = kernel(least_factorization(X, f).g)
        assert got == largest_congruence_below(X, kernel(f))
        assert got == Partition(naive_largest_congruence_below(X, list(kernel(f).block_of)))


def test_quotient_correspondence_on_random_algebras():
    rng = random.Random(3141)
    for _ in range(30):
        X = random_algebra(rng, rng.randint(2, 4))
        for part in all_partitions(X.size):
            expected = is_congruence_direct(X, part).ok
            try:
                Y, qmap = quotient(X, part)
            except NotACongruenceError:
                assert not expected
            else:
                assert expected
                assert is_homomorphism(qmap, X, Y).ok
