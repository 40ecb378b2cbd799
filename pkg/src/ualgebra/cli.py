"""Command-line surface.

Algebras are named built-in fixtures (Z2..Z8, V4, SL2, Sinf2..Sinf8) or
paths to algebra JSON files.  Term, map, partition, and seed arguments may
be given inline or as ``@path`` to read from a file.  ``--json`` emits a
versioned machine-readable document (schema 1) whose bytes are stable
across runs and thread counts.

Exit codes: 0 success/PASS, 1 semantic FAIL, 2 usage or parse error,
3 cap exceeded.
"""

import argparse
import json
import sys
from pathlib import Path

from . import fixtures
from .algebra import (
    CarrierMap,
    FiniteAlgebra,
    holds,
    is_homomorphism,
    kernel,
    product,
    quotient,
    subalgebra_generated,
)
from .congruences import PARTITION_ENUM_CAP, all_congruences, congruence_generated
from .errors import NotACongruenceError, SizeCapError, UAlgError
from .factorization import enumerate_factorizations, greatest_factorization, least_factorization, precedes
from .malcev import CLONE_CAP, clone_ternary_terms, find_malcev_operations, group_malcev, has_malcev_term
from .partitions import Partition
from .terms import classify_identity, evaluate, format_term, parse_term
from .translations import SEMIGROUP_HARD_CAP, principal_translations, translation_semigroup

SCHEMA = 1


class Workspace:
    """Resolves algebra names and holds the configured caps."""

    def __init__(self, args):
        self.json = args.json
        self.oracle = args.oracle
        self.threads = args.threads
        self.max_semigroup = args.max_semigroup
        self.max_partitions = args.max_partitions
        self.max_clone = args.max_clone

    def algebra(self, name: str) -> FiniteAlgebra:
        fixture = fixtures.get_fixture(name)
        if fixture is not None:
            return fixture
        path = Path(name)
        if path.is_file():
            return FiniteAlgebra.from_json_dict(json.loads(path.read_text()))
        raise UAlgError(f"unknown algebra '{name}' (not a fixture name or readable file)")


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text().strip()
    return text


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        data = json.loads(_read_arg(text))
    except json.JSONDecodeError as exc:
        raise UAlgError(f"bad {what}: {exc}") from None
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise UAlgError(f"bad {what}: expected a JSON array of integers")
    return data


def _parse_map(text: str, source_size: int) -> CarrierMap:
    values = _parse_int_list(text, "map")
    if len(values) != source_size:
        raise UAlgError(f"map has {len(values)} entries, algebra has {source_size} elements")
    target = max(values) + 1 if values else 1
    return CarrierMap(source_size, target, tuple(values))


def _parse_assignment(text: str) -> dict[int, int]:
    text = _read_arg(text).strip()
    if not text:
        return {}
    out = {}
    for piece in text.split(","):
        piece = piece.strip()
        if "=" not in piece:
            raise UAlgError(f"bad assignment entry {piece!r}, expected 'vN=value'")
        var, value = piece.split("=", 1)
        var = var.strip()
        if not var.startswith("v") or not var[1:].isdigit() or var[1] == "0":
            raise UAlgError(f"bad variable name {var!r} in assignment")
        out[int(var[1:])] = int(value)
    return out


def _assignment_doc(assignment) -> dict | None:
    if assignment is None:
        return None
    return {f"v{v}": assignment[v] for v in sorted(assignment)}


# ---------------------------------------------------------------------------
# commands


def cmd_check_identity(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    X = ws.algebra(args.algebra)
    p = parse_term(_read_arg(args.p), X.sig)
    q = parse_term(_read_arg(args.q), X.sig)
    verdict = holds(X, p, q)
    cls = classify_identity(p, q)
    payload = {
        "algebra": args.algebra,
        "p": format_term(p),
        "q": format_term(q),
        "holds": verdict.ok,
        "counterexample": _assignment_doc(verdict.witness),
        "class": cls.value,
    }
    if verdict.ok:
        human = [f"PASS: {payload['p']} ≈ {payload['q']} holds (class {cls.value})"]
        return 0, payload, human
    where = ", ".join(f"v{v}={x}" for v, x in sorted(verdict.witness.items()))
    human = [f"FAIL: {payload['p']} ≈ {payload['q']} fails at {where} (class {cls.value})"]
    return 1, payload, human


def cmd_variety_check(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    X = ws.algebra(args.algebra)
    results = []
    first_failure = None
    for raw in args.identities:
        raw = _read_arg(raw)
        if "=" not in raw:
            raise UAlgError(f"bad identity {raw!r}, expected 'p=q'")
        p_text, q_text = raw.split("=", 1)
        p = parse_term(p_text, X.sig)
        q = parse_term(q_text, X.sig)
        verdict = holds(X, p, q)
        results.append({"p": format_term(p), "q": format_term(q), "holds": verdict.ok})
        if not verdict.ok and first_failure is None:
            first_failure = {
                "p": format_term(p),
                "q": format_term(q),
                "counterexample": _assignment_doc(verdict.witness),
            }
    payload = {
        "algebra": args.algebra,
        "identities": results,
        "all_hold": first_failure is None,
        "first_failure": first_failure,
    }
    human = [
        f"{'PASS' if r['holds'] else 'FAIL'}: {r['p']} ≈ {r['q']}" for r in results
    ]
    return (0 if first_failure is None else 1), payload, human


def cmd_eval(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    X = ws.algebra(args.algebra)
    term = parse_term(_read_arg(args.term), X.sig)
    assignment = _parse_assignment(args.assignment)
    value = evaluate(term, X, assignment)
    payload = {
        "algebra": args.algebra,
        "term": format_term(term),
        "assignment": _assignment_doc(assignment),
        "value": value,
    }
    return 0, payload, [str(value)]


def cmd_hom_check(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    X = ws.algebra(args.source)
    Y = ws.algebra(args.target)
    phi = CarrierMap(X.size, Y.size, tuple(_parse_int_list(args.map, "map")))
    verdict = is_homomorphism(phi, X, Y)
    counterexample = None
    if not verdict.ok:
        symbol, tup = verdict.witness
        counterexample = {"symbol": symbol, "args": list(tup)}
    payload = {
        "source": args.source,
        "target": args.target,
        "map": list(phi.values),
        "is_homomorphism": verdict.ok,
        "counterexample": counterexample,
    }
    if verdict.ok:
        return 0, payload, ["PASS: map is a homomorphism"]
    return 1, payload, [f"FAIL: not a homomorphism, violation at {counterexample}"]


def cmd_subalgebra(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    X = ws.algebra(args.algebra)
    seed = _parse_int_list(args.seed, "seed")
    members, sub = subalgebra_generated(X, seed)
    payload = {
        "algebra": args.algebra,
        "seed": seed,
        "members": list(members),
        "subalgebra": sub.to_json_dict() if sub is not None else None,
    }
    human = [f"members: {list(members)}", f"size: {len(members)}"]
    return 0, payload, human


def cmd_product(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    factors = [ws.algebra(name) for name in args.algebras]
    prod, projections = product(factors)
    payload = {
        "factors": list(args.algebras),
        "size": prod.size,
        "algebra": prod.to_json_dict(),
        "projections": [list(pr.values) for pr in projections],
    }
    return 0, payload, [f"product size: {prod.size}"]


def cmd_quotient(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    X = ws.algebra(args.algebra)
    part = Partition.parse(_read_arg(args.partition))
    try:
        Y, qmap = quotient(X, part)
    except NotACongruenceError as exc:
        translation, pair = exc.witness
        payload = {
            "algebra": args.algebra,
            "partition": part.format(),
            "is_congruence": False,
            "violation": {
                "translation": translation.format_word(),
                "table": list(translation.table),
                "pair": list(pair),
            },
        }
        human = [
            f"FAIL: not a congruence; translation {translation.format_word()} "
            f"separates pair {pair}"
        ]
        return 1, payload, human
    payload = {
        "algebra": args.algebra,
        "partition": part.format(),
        "is_congruence": True,
        "quotient": Y.to_json_dict(),
        "map": list(qmap.values),
    }
    return 0, payload, [f"quotient size: {Y.size}", f"map: {list(qmap.values)}"]


def cmd_congruences(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    X = ws.algebra(args.algebra)
    congruences = all_congruences(X, max_partitions=ws.max_partitions, workers=ws.threads)
    payload = {
        "algebra": args.algebra,
        "count": len(congruences),
        "congruences": [c.format() for c in congruences],
    }
    return 0, payload, [c.format() for c in congruences] + [f"count: {len(congruences)}"]


def cmd_gen_congruence(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    X = ws.algebra(args.algebra)
    try:
        data = json.loads(_read_arg(args.pairs))
    except json.JSONDecodeError as exc:
        raise UAlgError(f"bad pairs: {exc}") from None
    if not isinstance(data, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p) for p in data
    ):
        raise UAlgError("bad pairs: expected a JSON array of [a, b] pairs")
    result = congruence_generated(X, [tuple(p) for p in data])
    payload = {"algebra": args.algebra, "pairs": data, "congruence": result.format()}
    return 0, payload, [result.format()]


def cmd_translations(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    X = ws.algebra(args.algebra)
    s1 = principal_translations(X)
    semigroup = translation_semigroup(X, cap=ws.max_semigroup)
    members = [{"word": t.format_word(), "table": list(t.table)} for t in semigroup]
    payload = {
        "algebra": args.algebra,
        "s1_size": len(s1),
        "s_size": len(semigroup),
        "members": members,
    }
    human = [f"|S1| = {len(s1)}", f"|S| = {len(semigroup)}"]
    human += [
        f"{m['word']} ⇒ [{','.join(str(v) for v in m['table'])}]" for m in members
    ]
    return 0, payload, human


def cmd_malcev(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    target = args.target
    if target.isdigit():
        k = int(target)
        enumeration = find_malcev_operations(k, cap=ws.max_clone)
        payload = {
            "mode": "enumerate",
            "k": k,
            "count": len(enumeration.tables),
            "complete": enumeration.complete,
            "tables": [list(t) for t in enumeration.tables],
        }
        human = [
            f"{len(enumeration.tables)} Mal'cev operation(s) on a {k}-element carrier"
            + ("" if enumeration.complete else " (incomplete: cap reached)")
        ]
        return (0 if enumeration.complete else 3), payload, human
    X = ws.algebra(target)
    witness = has_malcev_term(X, cap=ws.max_clone)
    try:
        gm = group_malcev(X)
    except UAlgError:  # not a group, or not over the group signature
        gm = None
    payload = {
        "mode": "algebra",
        "algebra": target,
        "has_malcev_term": witness.ok,
        "witness": list(witness.witness) if witness.ok else None,
        "group_malcev": list(gm) if gm is not None else None,
    }
    human = [f"has_malcev_term: {witness.ok}"]
    if gm is not None:
        human.append("group: natural Mal'cev operation computed")
    return (0 if witness.ok else 1), payload, human


def cmd_clone(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    X = ws.algebra(args.algebra)
    clone = clone_ternary_terms(X, cap=ws.max_clone)
    witness = has_malcev_term(X, cap=ws.max_clone)
    payload = {
        "algebra": args.algebra,
        "count": len(clone),
        "has_malcev_term": witness.ok,
        "witness": list(witness.witness) if witness.ok else None,
    }
    human = [f"ternary term operations: {len(clone)}", f"has_malcev_term: {witness.ok}"]
    return 0, payload, human


def cmd_factorize(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    X = ws.algebra(args.algebra)
    f = _parse_map(args.map, X.size)
    least = least_factorization(X, f, semigroup_cap=ws.max_semigroup)
    payload = {
        "algebra": args.algebra,
        "f": list(f.values),
        "kernel": kernel(least.g).format(),
        "y_size": least.Y.size,
        "y": least.Y.to_json_dict(),
        "h": list(least.h.values),
        "oracle": None,
    }
    human = [
        f"kernel: {payload['kernel']}",
        f"|Y| = {least.Y.size}",
        f"h = {list(least.h.values)}",
    ]
    if ws.oracle:
        enumerated = enumerate_factorizations(X, f, max_partitions=ws.max_partitions)
        greatest = greatest_factorization(X, f)
        least_ok = all(precedes(least, F).ok for F in enumerated)
        greatest_ok = all(precedes(F, greatest).ok for F in enumerated)
        payload["oracle"] = {
            "factorization_count": len(enumerated),
            "kernels": [kernel(F.g).format() for F in enumerated],
            "least_precedes_all": least_ok,
            "greatest_dominates_all": greatest_ok,
        }
        human.append(
            f"oracle: {len(enumerated)} factorization(s); least≺all: {least_ok}; "
            f"all≺greatest: {greatest_ok}"
        )
    return 0, payload, human


def cmd_fixtures(ws: Workspace, args) -> tuple[int, dict, list[str]]:
    entries = []
    for name in fixtures.fixture_names():
        X = fixtures.get_fixture(name)
        entries.append({"name": name, "size": X.size, "signature": X.sig.format()})
    payload = {"fixtures": entries}
    human = [f"{e['name']:8s} size {e['size']:2d}  {e['signature']}" for e in entries]
    return 0, payload, human


# ---------------------------------------------------------------------------
# parser / entry point

_COMMANDS = {
    "check-identity": cmd_check_identity,
    "variety-check": cmd_variety_check,
    "eval": cmd_eval,
    "hom-check": cmd_hom_check,
    "subalgebra": cmd_subalgebra,
    "product": cmd_product,
    "quotient": cmd_quotient,
    "congruences": cmd_congruences,
    "gen-congruence": cmd_gen_congruence,
    "translations": cmd_translations,
    "malcev": cmd_malcev,
    "clone": cmd_clone,
    "factorize": cmd_factorize,
    "fixtures": cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    common.add_argument("--oracle", action="store_true", help="run brute-force cross-checks")
    common.add_argument("--threads", type=int, default=1, help="worker threads for parallel paths")
    common.add_argument("--max-semigroup", type=int, default=SEMIGROUP_HARD_CAP)
    common.add_argument("--max-partitions", type=int, default=PARTITION_ENUM_CAP)
    common.add_argument("--max-clone", type=int, default=CLONE_CAP)

    parser = argparse.ArgumentParser(prog="ualg", description="finite universal-algebra workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-identity", parents=[common], help="check p ≈ q on an algebra")
    p.add_argument("algebra")
    p.add_argument("p")
    p.add_argument("q")

    p = sub.add_parser("variety-check", parents=[common], help="check a list of identities 'p=q'")
    p.add_argument("algebra")
    p.add_argument("identities", nargs="+")

    p = sub.add_parser("eval", parents=[common], help="evaluate a term under an assignment")
    p.add_argument("algebra")
    p.add_argument("term")
    p.add_argument("assignment", nargs="?", default="", help="e.g. 'v1=0,v2=3'")

    p = sub.add_parser("hom-check", parents=[common], help="check a map for the homomorphism property")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map", help="JSON array of images")

    p = sub.add_parser("subalgebra", parents=[common], help="subalgebra generated by a seed set")
    p.add_argument("algebra")
    p.add_argument("seed", help="JSON array of elements")

    p = sub.add_parser("product", parents=[common], help="componentwise product")
    p.add_argument("algebras", nargs="+")

    p = sub.add_parser("quotient", parents=[common], help="quotient by a congruence")
    p.add_argument("algebra")
    p.add_argument("partition", help="e.g. '0,2|1,3'")

    p = sub.add_parser("congruences", parents=[common], help="list all congruences")
    p.add_argument("algebra")

    p = sub.add_parser("gen-congruence", parents=[common], help="congruence generated by pairs")
    p.add_argument("algebra")
    p.add_argument("pairs", help="JSON array of [a,b] pairs")

    p = sub.add_parser("translations", parents=[common], help="principal translations and semigroup")
    p.add_argument("algebra")

    p = sub.add_parser("malcev", parents=[common], help="enumerate (size) or detect (algebra)")
    p.add_argument("target", help="carrier size or algebra name")

    p = sub.add_parser("clone", parents=[common], help="ternary term operations")
    p.add_argument("algebra")

    p = sub.add_parser("factorize", parents=[common], help="least factorization of a map")
    p.add_argument("algebra")
    p.add_argument("map", help="JSON array of images")

    sub.add_parser("fixtures", parents=[common], help="list built-in algebras")
    return parser


def _emit(ws: Workspace | None, command: str, code: int, payload: dict, human: list[str]) -> None:
    if ws is not None and ws.json:
        doc = {"schema": SCHEMA, "command": command, "exit_code": code}
        doc.update(payload)
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        for line in human:
            sys.stdout.write(line + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    ws = Workspace(args)
    handler = _COMMANDS[args.command]
    try:
        code, payload, human = handler(ws, args)
    except SizeCapError as exc:
        _emit(ws, args.command, 3, {"error": {"type": "SizeCapExceeded", "message": str(exc)}}, [])
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (UAlgError, ValueError, OSError) as exc:
        _emit(
            ws,
            args.command,
            2,
            {"error": {"type": type(exc).__name__, "message": str(exc)}},
            [],
        )
        sys.stderr.write(f"error: {exc}\n")
        return 2
    _emit(ws, args.command, code, payload, human)
    return code


if __name__ == "__main__":
    sys.exit(main())
