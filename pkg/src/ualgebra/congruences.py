"""Congruence machinery: testing, generation, enumeration, and the largest
congruence refining a given partition.

Two congruence tests are provided: the direct definition (componentwise
equivalent argument tuples give equivalent values) and the principal
translation criterion (unary translates of equivalent pairs stay
equivalent).  They agree on every input; the translation route powers the
generation and refinement algorithms.
"""

import itertools
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable

from .check import Check
from .errors import NotACongruenceError, OutOfCarrierError, SizeCapError, SizeMismatchError
from .partitions import Partition, all_partitions, bell_number
from .translations import principal_translations, translation_semigroup

PARTITION_ENUM_CAP = 4140  # Bell(8)


def is_congruence_direct(X, part: Partition) -> Check:
    """Exhaustive check of the defining condition.

    Witness on failure: ``(symbol, xs, ys)`` with xs ~ ys componentwise but
    op(xs) !~ op(ys), least by (xs + ys, symbol declaration order).
    """
    if part.size != X.size:
        raise SizeMismatchError(f"partition size {part.size} != carrier size {X.size}")
    blocks = part.blocks()
    members = [blocks[part.block_of[x]] for x in range(X.size)]
    best = None
    for idx, (name, arity) in enumerate(X.sig):
        if arity == 0:
            continue
        found = None
        for xs in itertools.product(range(X.size), repeat=arity):
            fx = X.apply(name, xs)
            for ys in itertools.product(*(members[x] for x in xs)):
                if not part.same(fx, X.apply(name, ys)):
                    found = (xs + ys, idx, name, xs, ys)
                    break
            if found:
                break
        if found and (best is None or found[:2] < best[:2]):
            best = found
    if best is None:
        return Check(True)
    return Check(False, (best[2], best[3], best[4]))


def is_congruence_via_translations(X, part: Partition) -> Check:
    """Principal-translation criterion; agrees with the direct check.

    Witness on failure: ``(translation, (x, y))`` — the first violating
    principal translation (canonical order) and equivalent pair.
    """
    if part.size != X.size:
        raise SizeMismatchError(f"partition size {part.size} != carrier size {X.size}")
    pairs = [
        (x, y)
        for x in range(X.size)
        for y in range(x + 1, X.size)
        if part.same(x, y)
    ]
    for tr in principal_translations(X):
        for x, y in pairs:
            if not part.same(tr.table[x], tr.table[y]):
                return Check(False, (tr, (x, y)))
    return Check(True)


def congruence_generated(X, pairs: Iterable[tuple[int, int]]) -> Partition:
    """Least congruence containing the given pairs.

    Union-find with path compression; every merge is pushed through each
    principal translation until saturated.
    """
    k = X.size
    parent = list(range(k))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    tables = [t.table for t in principal_translations(X)]
    queue = deque()
    for a, b in pairs:
        if not (0 <= a < k and 0 <= b < k):
            raise OutOfCarrierError(f"pair ({a},{b}) outside carrier of size {k}")
        queue.append((a, b))
    while queue:
        a, b = queue.popleft()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[rb] = ra
        for table in tables:
            queue.append((table[a], table[b]))
    return Partition([find(x) for x in range(k)])


def all_congruences(X, max_partitions: int = PARTITION_ENUM_CAP, workers: int = 1) -> list[Partition]:
    """Every congruence of X, in canonical partition order.

    Filters all partitions of the carrier, so the carrier must be small
    enough that their number stays within ``max_partitions``.
    """
    total = bell_number(X.size)
    if total > max_partitions:
        raise SizeCapError(
            f"carrier of size {X.size} has {total} partitions, cap {max_partitions}"
        )
    parts = all_partitions(X.size)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            flags = list(pool.map(lambda p: bool(is_congruence_direct(X, p)), parts))
        return [p for p, ok in zip(all_partitions(X.size), flags) if ok]
    return [p for p in parts if is_congruence_direct(X, p)]


def largest_congruence_below(X, part: Partition, semigroup_cap: int | None = None) -> Partition:
    """The unique largest congruence refining ``part``.

    Pullback along the translation semigroup: x and y are identified iff
    σ(x) and σ(y) are part-equivalent for every translation σ.
    """
    if part.size != X.size:
        raise SizeMismatchError(f"partition size {part.size} != carrier size {X.size}")
    semigroup = translation_semigroup(X, cap=semigroup_cap)
    block = part.block_of
    return Partition(
        [tuple(block[t.table[x]] for t in semigroup) for x in range(X.size)]
    )


def join_congruences(X, p1: Partition, p2: Partition) -> Partition:
    """Least congruence containing two congruences."""
    for p in (p1, p2):
        verdict = is_congruence_via_translations(X, p)
        if not verdict:
            raise NotACongruenceError(verdict.witness)
    return congruence_generated(X, p1.pairs() + p2.pairs())
