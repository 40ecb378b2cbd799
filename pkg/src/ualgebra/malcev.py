"""Mal'cev operations: detection, enumeration, group-derived tables, and the
clone of ternary term operations.

A ternary operation μ is Mal'cev when μ(y,y,x) = μ(x,y,y) = x for all x, y.
Groups always carry one: μ(x,y,z) = x·y⁻¹·z.  More generally an algebra has
a Mal'cev *term* when the closure of the three ternary projections under
its operations contains a Mal'cev table.
"""

import itertools
from typing import Callable, NamedTuple

from .check import Check
from .errors import ArityMismatchError, NotAGroupError, SizeCapError
from .fixtures import group_axioms
from .algebra import FiniteAlgebra, in_equational_class

CLONE_CAP = 100_000  # ternary functions


def table_is_malcev(table, k: int) -> bool:
    """Check the two defining identities on a flat k^3 table in (x,y,z) order."""
    k2 = k * k
    for x in range(k):
        for y in range(k):
            if table[y * k2 + y * k + x] != x or table[x * k2 + y * k + y] != x:
                return False
    return True


def is_malcev_op(X: FiniteAlgebra, symbol: str) -> Check:
    """Check μ(y,y,x) = x and μ(x,y,y) = x; witness is the least failing (x, y)."""
    arity = X.sig.arity(symbol)
    if arity != 3:
        raise ArityMismatchError(symbol, 3, arity)
    for x in range(X.size):
        for y in range(X.size):
            if X.apply(symbol, (y, y, x)) != x or X.apply(symbol, (x, y, y)) != x:
                return Check(False, (x, y))
    return Check(True)


class MalcevEnumeration(NamedTuple):
    tables: list[tuple[int, ...]]
    complete: bool


def find_malcev_operations(k: int, cap: int | None = None) -> MalcevEnumeration:
    """All ternary tables on {0, ..., k-1} satisfying the Mal'cev identities.

    The identities force the entries at (y,y,x) and (x,y,y); the remaining
    k(k-1)^2 cells are free.  Tables come out in lexicographic order and the
    listing is truncated (flagged incomplete) once ``cap`` tables are out.
    """
    if k < 1:
        raise ValueError("carrier size must be at least 1")
    k2 = k * k
    base: list[int | None] = [None] * (k * k2)
    for x in range(k):
        for y in range(k):
            base[y * k2 + y * k + x] = x
            base[x * k2 + y * k + y] = x
    free = [i for i, v in enumerate(base) if v is None]
    total = k ** len(free)
    limit = total if cap is None else min(total, cap)
    tables: list[tuple[int, ...]] = []
    for values in itertools.islice(itertools.product(range(k), repeat=len(free)), limit):
        table = base[:]
        for i, v in zip(free, values):
            table[i] = v
        tables.append(tuple(table))
    return MalcevEnumeration(tables, len(tables) == total)


def group_malcev(G: FiniteAlgebra) -> tuple[int, ...]:
    """The table (x,y,z) -> m(x, m(i(y), z)) for an algebra satisfying the
    group axioms; always a Mal'cev operation."""
    verdict = in_equational_class(G, group_axioms())
    if not verdict:
        p, q, assignment = verdict.witness
        raise NotAGroupError(f"group axiom fails at {assignment}")
    return tuple(
        G.apply("m", (x, G.apply("m", (G.apply("i", (y,)), z))))
        for x, y, z in itertools.product(range(G.size), repeat=3)
    )


# ---------------------------------------------------------------------------
# clone of ternary term operations


def _clone_closure(
    X: FiniteAlgebra, cap: int, stop: Callable[[bytes], bool] | None = None
) -> tuple[list[bytes], bytes | None]:
    """Close the three projections (and constants) under the operations of X.

    Functions X^3 -> X are flat length-k^3 byte tables.  Breadth-first, so
    output order is deterministic.  If ``stop`` accepts a table, closure
    halts early and that table is returned as the witness.
    """
    k = X.size
    k3 = k**3
    seeds: list[bytes] = []
    seen: set[bytes] = set()
    points = list(itertools.product(range(k), repeat=3))
    for proj in range(3):
        table = bytes(p[proj] for p in points)
        if table not in seen:
            seen.add(table)
            seeds.append(table)
    for name, arity in X.sig:
        if arity == 0:
            table = bytes([X.apply(name, ())]) * k3
            if table not in seen:
                seen.add(table)
                seeds.append(table)
    known = list(seeds)
    for table in known:
        if stop is not None and stop(table):
            return known, table
    flat_ops = [
        (X.table(name), arity) for name, arity in X.sig if arity >= 1
    ]
    start = 0
    while start < len(known):
        end = len(known)
        for op_table, arity in flat_ops:
            for combo in itertools.product(range(end), repeat=arity):
                if max(combo) < start:
                    continue  # all arguments old: already generated
                args = [known[i] for i in combo]
                out = bytearray(k3)
                for pos in range(k3):
                    index = 0
                    for arg in args:
                        index = index * k + arg[pos]
                    out[pos] = op_table[index]
                table = bytes(out)
                if table in seen:
                    continue
                if len(seen) >= cap:
                    raise SizeCapError(f"ternary clone exceeds cap {cap}")
                seen.add(table)
                known.append(table)
                if stop is not None and stop(table):
                    return known, table
        start = end
    return known, None


def clone_ternary_terms(X: FiniteAlgebra, cap: int = CLONE_CAP) -> list[tuple[int, ...]]:
    """All functions X^3 -> X induced by ternary terms, in discovery order."""
    known, _ = _clone_closure(X, cap)
    return [tuple(t) for t in known]


def has_malcev_term(X: FiniteAlgebra, cap: int = CLONE_CAP) -> Check:
    """Whether some ternary term operation of X is Mal'cev.

    Witness on success is the found table; the closure stops as soon as a
    Mal'cev member appears.
    """
    k = X.size
    known, witness = _clone_closure(X, cap, stop=lambda t: table_is_malcev(t, k))
    if witness is None:
        return Check(False)
    return Check(True, tuple(witness))
