"""Terms over a signature: syntax trees, parsing, occurrence counts, evaluation.

Variables are written ``v1, v2, ...`` (indices start at 1).  Term text is
fully parenthesized prefix form, e.g. ``m(v1,i(v2))``; a bare name denotes
an arity-0 symbol.  ``parse_term(format_term(t), sig)`` returns ``t``.
"""

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Union

from .errors import (
    ArityMismatchError,
    OutOfCarrierError,
    ParseError,
    SignatureMismatchError,
    UnboundVariableError,
    UnknownSymbolError,
)
from .signature import Signature

_VAR_RE = re.compile(r"v([1-9][0-9]*)")
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Variable:
    index: int  # positive

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"variable index must be a positive integer, got {self.index!r}")


@dataclass(frozen=True)
class Constant:
    symbol: str


@dataclass(frozen=True)
class Apply:
    symbol: str
    children: tuple["Term", ...]


Term = Union[Variable, Constant, Apply]


class PreservationClass(enum.Enum):
    """Occurrence-count class of an identity, strongest first."""

    LINEAR = "Linear"
    LINEAR_QUADRATIC = "LinearQuadratic"
    UNCLASSIFIED = "Unclassified"


# ---------------------------------------------------------------------------
# parsing / printing


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    length = len(text)
    while pos < length:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in "(),":
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        m = _NAME_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {ch!r}", pos)
        tokens.append(("name", m.group(0), pos))
        pos = m.end()
    return tokens


def parse_term(text: str, sig: Signature) -> Term:
    """Parse fully parenthesized prefix term text over ``sig``."""
    tokens = _tokenize(text)
    term, nxt = _parse_term(tokens, 0, sig)
    if nxt != len(tokens):
        raise ParseError("unexpected trailing input", tokens[nxt][2])
    occurrence_profile(term)  # populate the occurrence cache up front
    return term


def _parse_term(tokens, i, sig):
    if i >= len(tokens):
        raise ParseError("unexpected end of input")
    kind, value, pos = tokens[i]
    if kind != "name":
        raise ParseError(f"expected a term, found {value!r}", pos)
    var = _VAR_RE.fullmatch(value)
    if var is not None:
        return Variable(int(var.group(1))), i + 1
    if i + 1 < len(tokens) and tokens[i + 1][0] == "(":
        children = []
        j = i + 2
        if j < len(tokens) and tokens[j][0] == ")":
            raise ParseError("empty argument list", tokens[j][2])
        while True:
            child, j = _parse_term(tokens, j, sig)
            children.append(child)
            if j >= len(tokens):
                raise ParseError("unterminated argument list")
            kind2, value2, pos2 = tokens[j]
            if kind2 == ",":
                j += 1
                continue
            if kind2 == ")":
                j += 1
                break
            raise ParseError(f"expected ',' or ')', found {value2!r}", pos2)
        if value not in sig:
            raise UnknownSymbolError(f"unknown symbol '{value}'")
        expected = sig.arity(value)
        if expected != len(children):
            raise ArityMismatchError(value, expected, len(children))
        return Apply(value, tuple(children)), j
    # bare name: must be an arity-0 symbol
    if value not in sig:
        raise UnknownSymbolError(f"unknown symbol '{value}'")
    expected = sig.arity(value)
    if expected != 0:
        raise ArityMismatchError(value, expected, 0)
    return Constant(value), i + 1


def format_term(t: Term) -> str:
    """Canonical text: prefix notation, no spaces."""
    if isinstance(t, Variable):
        return f"v{t.index}"
    if isinstance(t, Constant):
        return t.symbol
    return f"{t.symbol}({','.join(format_term(c) for c in t.children)})"


# ---------------------------------------------------------------------------
# variables and occurrence counts


@lru_cache(maxsize=None)
def occurrence_profile(t: Term) -> Mapping[int, int]:
    """Variable index -> number of occurrences in ``t``.  Cached; treat as read-only."""
    if isinstance(t, Variable):
        return {t.index: 1}
    if isinstance(t, Constant):
        return {}
    counts: dict[int, int] = {}
    for child in t.children:
        for v, n in occurrence_profile(child).items():
            counts[v] = counts.get(v, 0) + n
    return counts


def vars_of(t: Term) -> frozenset[int]:
    """The set of variable indices occurring in ``t``."""
    return frozenset(occurrence_profile(t))


def occurrences(t: Term, v: int) -> int:
    """Number of occurrences of variable ``v`` in ``t``."""
    return occurrence_profile(t).get(v, 0)


# ---------------------------------------------------------------------------
# evaluation


def _check_symbols(t: Term, sig: Signature) -> None:
    if isinstance(t, Constant):
        if t.symbol not in sig or sig.arity(t.symbol) != 0:
            raise SignatureMismatchError(f"algebra signature has no constant '{t.symbol}'")
    elif isinstance(t, Apply):
        if t.symbol not in sig or sig.arity(t.symbol) != len(t.children):
            raise SignatureMismatchError(
                f"algebra signature has no {len(t.children)}-ary symbol '{t.symbol}'"
            )
        for child in t.children:
            _check_symbols(child, sig)


def evaluate(t: Term, algebra, assignment: Mapping[int, int]) -> int:
    """Value of ``t`` in ``algebra`` under ``assignment`` (variable index -> element).

    Every variable of ``t`` must be assigned; every symbol of ``t`` must exist
    in the algebra's signature with matching arity.
    """
    _check_symbols(t, algebra.sig)
    return _eval(t, algebra, assignment)


def _eval(t, algebra, assignment):
    if isinstance(t, Variable):
        try:
            value = assignment[t.index]
        except KeyError:
            raise UnboundVariableError(f"no value for variable v{t.index}") from None
        if not 0 <= value < algebra.size:
            raise OutOfCarrierError(f"v{t.index} assigned {value}, carrier size {algebra.size}")
        return value
    if isinstance(t, Constant):
        return algebra.apply(t.symbol, ())
    return algebra.apply(t.symbol, tuple(_eval(c, algebra, assignment) for c in t.children))


# ---------------------------------------------------------------------------
# identity classification


def _linear(p_count: int, q_count: int) -> bool:
    return p_count <= 1 and q_count <= 1


def _linear_quadratic(p_count: int, q_count: int) -> bool:
    return (p_count <= 1 and q_count <= 2) or (p_count <= 2 and q_count <= 1)


def classify_identity(p: Term, q: Term) -> PreservationClass:
    """Classify the identity ``p ≈ q`` by per-variable occurrence bounds.

    ``LINEAR``: every variable occurs at most once in ``p`` and at most once
    in ``q``.  ``LINEAR_QUADRATIC``: for every variable, one side has at most
    one occurrence and the other at most two (and the pair is not linear).
    The strongest applicable class is reported.
    """
    pp = occurrence_profile(p)
    qp = occurrence_profile(q)
    variables = set(pp) | set(qp)
    if all(_linear(pp.get(v, 0), qp.get(v, 0)) for v in variables):
        return PreservationClass.LINEAR
    if all(_linear_quadratic(pp.get(v, 0), qp.get(v, 0)) for v in variables):
        return PreservationClass.LINEAR_QUADRATIC
    return PreservationClass.UNCLASSIFIED
