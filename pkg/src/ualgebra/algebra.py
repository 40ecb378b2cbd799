"""Finite algebras as dense operation tables, and the maps between them.

Carriers are always {0, ..., k-1}.  A table for an n-ary symbol is stored
flat in row-major (lexicographic argument) order; arity 0 is a single
element.  All values are immutable after construction and all operations
here are pure.
"""

import itertools
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, NamedTuple, Sequence

from .check import Check
from .congruences import is_congruence_via_translations
from .errors import (
    ArityMismatchError,
    NotACongruenceError,
    OutOfCarrierError,
    SignatureMismatchError,
    SizeCapError,
    SizeMismatchError,
    UnknownSymbolError,
)
from .partitions import Partition
from .signature import Signature
from .terms import Term, evaluate, vars_of

CARRIER_CAP = 4096  # guard for product carriers


def _flatten(table: Any, arity: int, size: int, symbol: str):
    """Normalize a nested table (depth = arity) to a flat row-major tuple."""
    if arity == 0:
        if not isinstance(table, int):
            raise ValueError(f"table for constant '{symbol}' must be an integer")
        return table
    if not isinstance(table, (list, tuple)):
        raise ValueError(f"table for '{symbol}' must be a (nested) sequence")
    flat: list[int] = []

    def walk(node, depth):
        if depth == 0:
            if not isinstance(node, int):
                raise ValueError(f"table for '{symbol}' has a non-integer entry: {node!r}")
            flat.append(node)
            return
        if isinstance(node, (list, tuple)):
            if len(node) != size:
                raise ValueError(
                    f"table for '{symbol}' has a row of length {len(node)}, expected {size}"
                )
            for child in node:
                walk(child, depth - 1)
        else:
            raise ValueError(f"table for '{symbol}' is not nested to depth {arity}")

    first = table
    depth_seen = 0
    while isinstance(first, (list, tuple)) and depth_seen < arity:
        first = first[0] if len(first) else None
        depth_seen += 1
    if depth_seen <= 1 and arity >= 1 and all(isinstance(x, int) for x in table):
        # already flat
        if len(table) != size**arity:
            raise ValueError(
                f"flat table for '{symbol}' has {len(table)} entries, expected {size**arity}"
            )
        return tuple(table)
    walk(table, arity)
    if len(flat) != size**arity:
        raise ValueError(
            f"table for '{symbol}' has {len(flat)} entries, expected {size**arity}"
        )
    return tuple(flat)


class FiniteAlgebra:
    """A finite algebra: signature, carrier size, one lookup table per symbol."""

    __slots__ = ("sig", "size", "_tables")

    def __init__(self, sig: Signature, size: int, ops: Mapping[str, Any]):
        if not isinstance(size, int) or size < 1:
            raise ValueError(f"carrier size must be a positive integer, got {size!r}")
        self.sig = sig
        self.size = size
        tables: dict[str, Any] = {}
        for name, arity in sig:
            if name not in ops:
                raise ValueError(f"no table given for symbol '{name}'")
            table = _flatten(ops[name], arity, size, name)
            entries = (table,) if arity == 0 else table
            for entry in entries:
                if not 0 <= entry < size:
                    raise OutOfCarrierError(
                        f"table for '{name}' has entry {entry}, carrier size {size}"
                    )
            tables[name] = table
        extra = set(ops) - set(tables)
        if extra:
            raise UnknownSymbolError(f"tables for symbols not in signature: {sorted(extra)}")
        self._tables = tables

    def apply(self, symbol: str, args: Sequence[int]) -> int:
        arity = self.sig.arity(symbol)
        if len(args) != arity:
            raise ArityMismatchError(symbol, arity, len(args))
        table = self._tables[symbol]
        if arity == 0:
            return table
        index = 0
        for a in args:
            if not 0 <= a < self.size:
                raise OutOfCarrierError(f"argument {a} outside carrier of size {self.size}")
            index = index * self.size + a
        return table[index]

    def table(self, symbol: str):
        """Raw flat table (int for constants)."""
        self.sig.arity(symbol)
        return self._tables[symbol]

    def to_json_dict(self) -> dict:
        ops: dict[str, Any] = {}
        for name, arity in self.sig:
            ops[name] = _nest(self._tables[name], arity, self.size)
        return {
            "signature": [{"symbol": name, "arity": arity} for name, arity in self.sig],
            "size": self.size,
            "ops": ops,
        }

    @classmethod
    def from_json_dict(cls, doc: Mapping[str, Any]) -> "FiniteAlgebra":
        """Parse the algebra JSON document; unknown fields are rejected."""
        if not isinstance(doc, Mapping):
            raise ValueError("algebra document must be a JSON object")
        extra = set(doc) - {"signature", "size", "ops"}
        if extra:
            raise ValueError(f"unknown fields in algebra document: {sorted(extra)}")
        for field in ("signature", "size", "ops"):
            if field not in doc:
                raise ValueError(f"algebra document is missing '{field}'")
        entries = []
        for item in doc["signature"]:
            if not isinstance(item, Mapping) or set(item) != {"symbol", "arity"}:
                raise ValueError(f"bad signature entry: {item!r}")
            entries.append((item["symbol"], item["arity"]))
        return cls(Signature(entries), doc["size"], doc["ops"])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteAlgebra)
            and self.sig == other.sig
            and self.size == other.size
            and self._tables == other._tables
        )

    def __hash__(self) -> int:
        return hash((self.sig, self.size, tuple(sorted(self._tables.items()))))

    def __repr__(self) -> str:
        return f"FiniteAlgebra(size={self.size}, sig={self.sig.format()!r})"


def _nest(table, arity: int, size: int):
    if arity == 0:
        return table
    if arity == 1:
        return list(table)
    step = size ** (arity - 1)
    return [_nest(table[i * step : (i + 1) * step], arity - 1, size) for i in range(size)]


@dataclass(frozen=True)
class CarrierMap:
    """A total map between carriers, as the list of images."""

    source_size: int
    target_size: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.source_size:
            raise SizeMismatchError(
                f"map has {len(self.values)} values, source size {self.source_size}"
            )
        for v in self.values:
            if not 0 <= v < self.target_size:
                raise OutOfCarrierError(f"image {v} outside target of size {self.target_size}")

    def __call__(self, x: int) -> int:
        return self.values[x]

    def then(self, after: "CarrierMap") -> "CarrierMap":
        """Composition ``after ∘ self`` (self applied first)."""
        if after.source_size != self.target_size:
            raise SizeMismatchError("composition sizes do not match")
        return CarrierMap(
            self.source_size, after.target_size, tuple(after.values[v] for v in self.values)
        )

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.target_size

    def is_injective(self) -> bool:
        return len(set(self.values)) == self.source_size

    @classmethod
    def identity(cls, size: int) -> "CarrierMap":
        return cls(size, size, tuple(range(size)))


def kernel(phi: CarrierMap) -> Partition:
    """Fiber partition of a total map, in canonical form."""
    return Partition(phi.values)


# ---------------------------------------------------------------------------
# homomorphisms


def is_homomorphism(phi: CarrierMap, X: FiniteAlgebra, Y: FiniteAlgebra) -> Check:
    """Check the defining equation for every symbol and argument tuple.

    On failure the witness is the violating ``(symbol, args)`` least by
    (argument tuple, symbol declaration order).
    """
    if X.sig != Y.sig:
        raise SignatureMismatchError("algebras have different signatures")
    if phi.source_size != X.size or phi.target_size != Y.size:
        raise SizeMismatchError("map does not fit between the carriers")
    best = None
    for idx, (name, arity) in enumerate(X.sig):
        for args in itertools.product(range(X.size), repeat=arity):
            if phi(X.apply(name, args)) != Y.apply(name, tuple(phi(a) for a in args)):
                if best is None or (args, idx) < best[:2]:
                    best = (args, idx, name)
                break
    if best is None:
        return Check(True)
    return Check(False, (best[2], best[0]))


def holds(X: FiniteAlgebra, p: Term, q: Term) -> Check:
    """Check the identity ``p ≈ q`` over every assignment into ``X``.

    The witness on failure is the lexicographically least violating
    assignment, as a dict ``{variable index: element}``.
    """
    variables = sorted(vars_of(p) | vars_of(q))
    for values in itertools.product(range(X.size), repeat=len(variables)):
        assignment = dict(zip(variables, values))
        if evaluate(p, X, assignment) != evaluate(q, X, assignment):
            return Check(False, assignment)
    return Check(True)


def in_equational_class(X: FiniteAlgebra, identities: Iterable[tuple[Term, Term]]) -> Check:
    """Conjunction of :func:`holds`; witness is (p, q, assignment) for the first failure."""
    for p, q in identities:
        result = holds(X, p, q)
        if not result:
            return Check(False, (p, q, result.witness))
    return Check(True)


# ---------------------------------------------------------------------------
# subalgebras, products, quotients


class Subalgebra(NamedTuple):
    members: tuple[int, ...]  # ascending; new index i corresponds to members[i]
    algebra: "FiniteAlgebra | None"  # None only when the subalgebra is empty


def subalgebra_generated(X: FiniteAlgebra, seed: Iterable[int]) -> Subalgebra:
    """Least subset containing ``seed`` and all constants, closed under every operation.

    The induced algebra is renumbered onto {0, ..., m-1} by ascending member
    order; ``members`` is the renumbering (new index -> original element).
    Empty only when the seed is empty and the signature has no constants.
    """
    current = set()
    for x in seed:
        if not 0 <= x < X.size:
            raise OutOfCarrierError(f"seed element {x} outside carrier of size {X.size}")
        current.add(x)
    for name, arity in X.sig:
        if arity == 0:
            current.add(X.apply(name, ()))
    changed = True
    while changed:
        changed = False
        snapshot = sorted(current)
        for name, arity in X.sig:
            if arity == 0:
                continue
            for args in itertools.product(snapshot, repeat=arity):
                value = X.apply(name, args)
                if value not in current:
                    current.add(value)
                    changed = True
    members = tuple(sorted(current))
    if not members:
        return Subalgebra((), None)
    position = {x: i for i, x in enumerate(members)}
    ops: dict[str, Any] = {}
    m = len(members)
    for name, arity in X.sig:
        if arity == 0:
            ops[name] = position[X.apply(name, ())]
        else:
            ops[name] = tuple(
                position[X.apply(name, tuple(members[i] for i in args))]
                for args in itertools.product(range(m), repeat=arity)
            )
    return Subalgebra(members, FiniteAlgebra(X.sig, m, ops))


def product(
    factors: Sequence[FiniteAlgebra],
    sig: Signature | None = None,
    carrier_cap: int = CARRIER_CAP,
) -> tuple[FiniteAlgebra, list[CarrierMap]]:
    """Componentwise product; carrier is the lexicographic encoding of tuples.

    The first factor is the most significant digit.  Returns the product and
    the projection maps (each a homomorphism).  The empty product is the
    one-element algebra over ``sig`` (all operations return 0).
    """
    if factors:
        sig = factors[0].sig
        for f in factors[1:]:
            if f.sig != sig:
                raise SignatureMismatchError("product factors have different signatures")
    elif sig is None:
        sig = Signature([])
    sizes = [f.size for f in factors]
    total = 1
    for k in sizes:
        total *= k
    if total > carrier_cap:
        raise SizeCapError(f"product carrier {total} exceeds cap {carrier_cap}")

    def decode(index: int) -> tuple[int, ...]:
        out = []
        for k in reversed(sizes):
            out.append(index % k)
            index //= k
        return tuple(reversed(out))

    def encode(tup: Sequence[int]) -> int:
        index = 0
        for k, x in zip(sizes, tup):
            index = index * k + x
        return index

    ops: dict[str, Any] = {}
    for name, arity in sig:
        if arity == 0:
            ops[name] = encode([f.apply(name, ()) for f in factors])
        else:
            table = []
            for args in itertools.product(range(total), repeat=arity):
                decoded = [decode(a) for a in args]
                table.append(
                    encode(
                        [
                            f.apply(name, tuple(d[i] for d in decoded))
                            for i, f in enumerate(factors)
                        ]
                    )
                )
            ops[name] = tuple(table)
    algebra = FiniteAlgebra(sig, total, ops)
    projections = [
        CarrierMap(total, sizes[i], tuple(decode(x)[i] for x in range(total)))
        for i in range(len(factors))
    ]
    return algebra, projections


def quotient(X: FiniteAlgebra, part: Partition) -> tuple[FiniteAlgebra, CarrierMap]:
    """Quotient algebra X/π and the quotient map, for a congruence π.

    Blocks become carrier elements in canonical order.  Raises
    ``NotACongruenceError`` (with a violating translation and pair) otherwise.
    """
    if part.size != X.size:
        raise SizeMismatchError(f"partition size {part.size} != carrier size {X.size}")
    verdict = is_congruence_via_translations(X, part)
    if not verdict:
        raise NotACongruenceError(verdict.witness)
    blocks = part.blocks()
    reps = [block[0] for block in blocks]
    m = len(blocks)
    ops: dict[str, Any] = {}
    for name, arity in X.sig:
        if arity == 0:
            ops[name] = part.block_of[X.apply(name, ())]
        else:
            ops[name] = tuple(
                part.block_of[X.apply(name, tuple(reps[b] for b in args))]
                for args in itertools.product(range(m), repeat=arity)
            )
    qmap = CarrierMap(X.size, m, part.block_of)
    return FiniteAlgebra(X.sig, m, ops), qmap


def diagonal_hom(
    X: FiniteAlgebra,
    targets: Sequence[FiniteAlgebra],
    maps: Sequence[CarrierMap],
    carrier_cap: int = CARRIER_CAP,
) -> tuple[CarrierMap, FiniteAlgebra, bool]:
    """Diagonal ``x -> (φ1(x), ..., φr(x))`` into the product of the targets.

    Every φi must be a homomorphism X -> targets[i].  Returns the diagonal
    map, the product algebra, and whether the diagonal is injective (i.e.
    the family separates points).
    """
    if not maps or len(maps) != len(targets):
        raise ValueError("need one homomorphism per target, at least one")
    for phi, Y in zip(maps, targets):
        if not is_homomorphism(phi, X, Y):
            raise ValueError("diagonal_hom requires homomorphisms")
    prod, _ = product(list(targets), carrier_cap=carrier_cap)
    sizes = [Y.size for Y in targets]

    def encode(tup):
        index = 0
        for k, x in zip(sizes, tup):
            index = index * k + x
        return index

    values = tuple(encode([phi(x) for phi in maps]) for x in range(X.size))
    diag = CarrierMap(X.size, prod.size, values)
    return diag, prod, diag.is_injective()
