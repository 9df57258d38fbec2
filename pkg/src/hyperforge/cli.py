"""Command-line front end.

Exit codes: 0 everything requested holds, 1 a property fails, 2 bad input,
3 a search cap was hit.  Output is JSON (one object per line for streams);
``--pretty`` indents it.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import axioms, congruence, factory, fuzzy, ideals, morphisms, theorems
from .core import members
from .errors import (DomainError, HyperforgeError, PreconditionError, ResourceError,
                     StructureFormatError)
from .parallel import default_jobs
from .rng import ALGORITHM
from .serialize import dumps, dumps_structure, load_structure, structure_to_dict

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class Output:
    def __init__(self, pretty: bool, stream=None):
        self.pretty = pretty
        self.stream = stream or sys.stdout

    def emit(self, obj) -> None:
        self.stream.write(dumps(obj, self.pretty) + "\n")


def _parse_json_arg(text, what):
    if text.startswith("@"):
        text = Path(text[1:]).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"{what} is not valid JSON: {exc}") from exc


def _relation(S, text):
    labels = _parse_json_arg(text, "--rel")
    if not isinstance(labels, list) or not all(isinstance(c, int) for c in labels):
        raise DomainError("--rel must be a JSON array of class ids")
    rel = congruence.EquivRelation(tuple(labels))
    if rel.k != S.k:
        raise DomainError(f"--rel has {rel.k} entries, structure has {S.k} elements")
    return rel


def _theorem_lines(out, S):
    ok = True
    for result in theorems.verify_theorems(S):
        out.emit(result.to_json())
        ok &= result.holds
    return ok


# -- commands -------------------------------------------------------------------

def cmd_check(args, out):
    S = load_structure(args.file)
    names = args.axioms.split(",") if args.axioms else list(axioms.AXIOM_SUITE)
    unknown = [n for n in names if n not in axioms.AXIOM_SUITE]
    if unknown:
        raise DomainError(f"unknown axioms {unknown}; known: {sorted(axioms.AXIOM_SUITE)}")
    verdicts = axioms.run_suite(S, names, args.all_witnesses)
    if args.strict_idempotent:
        verdicts.append(axioms.check_additively_idempotent(S, strict=True))
    report = {
        "file": str(args.file),
        "k": S.k, "m": S.m, "n": S.n,
        "holds": all(v.holds for v in verdicts),
        "verdicts": [v.to_json() for v in verdicts],
        "hyperadditive_identities": list(members(axioms.find_hyperadditive_identities(S))),
        "multiplicative_identities": list(members(axioms.find_multiplicative_identities(S))),
    }
    try:
        report["zero"] = axioms.find_zero(S)
    except axioms.AmbiguousZeroError as exc:
        report["zero"] = None
        report["zero_note"] = str(exc)
    if args.all_witnesses:
        report["all_witnesses"] = {v.axiom: list(v.all_witnesses) for v in verdicts
                                   if v.all_witnesses}
    out.emit(report)
    return EXIT_OK if report["holds"] else EXIT_FAIL


def cmd_ideals(args, out):
    S = load_structure(args.file)
    for rep in ideals.enumerate_hyperideals(S, args.kind, cap_k=args.cap_k, jobs=args.jobs):
        out.emit(rep.to_json())
    if args.verify_theorems:
        return EXIT_OK if _theorem_lines(out, S) else EXIT_FAIL
    return EXIT_OK


def cmd_congruences(args, out):
    S = load_structure(args.file)
    for rel in congruence.enumerate_congruences(S, cap=args.cap, jobs=args.jobs):
        out.emit({"classes": rel.to_json(),
                  "strongly_regular": congruence.is_strongly_regular(S, rel)})
    if args.verify_theorems:
        return EXIT_OK if _theorem_lines(out, S) else EXIT_FAIL
    return EXIT_OK


def cmd_quotient(args, out):
    S = load_structure(args.file)
    rel = _relation(S, args.rel)
    verdict = congruence.is_congruence(S, rel)
    if not verdict.holds:
        out.emit({"error": "relation is not a congruence", "witness": verdict.witness})
        return EXIT_FAIL
    Q = congruence.quotient(S, rel)
    if args.output:
        Path(args.output).write_text(dumps_structure(Q) + "\n", encoding="utf-8")
    out.emit(structure_to_dict(Q))
    if args.verify_theorems:
        return EXIT_OK if _theorem_lines(out, S) else EXIT_FAIL
    return EXIT_OK


def cmd_natmap(args, out):
    S = load_structure(args.file)
    rel = _relation(S, args.rel)
    if not congruence.is_congruence(S, rel):
        out.emit({"error": "relation is not a congruence"})
        return EXIT_FAIL
    nat = congruence.natural_map(S, rel)
    hom = morphisms.is_homomorphism(nat)
    onto = set(nat.image) == set(range(nat.target.k))
    out.emit({"image": nat.to_json(), "homomorphism": hom, "onto": onto})
    return EXIT_OK if hom and onto else EXIT_FAIL


def cmd_homs(args, out):
    src = load_structure(args.source)
    tgt = load_structure(args.target)
    mode = "iso" if args.iso else "first" if args.first else "all"
    found = morphisms.enumerate_homomorphisms(src, tgt, mode, cap=args.cap)
    for h in found:
        out.emit(h.to_json())
    status = EXIT_OK if found or mode == "all" else EXIT_FAIL
    if args.verify_theorems:
        ok = _theorem_lines(out, src)
        status = status if ok else EXIT_FAIL
    return status


def _fuzzy_subset(args, k):
    mu = fuzzy.FuzzySubset.from_json(_parse_json_arg(args.mu, "--mu"))
    if mu.k != k:
        raise DomainError(f"--mu has {mu.k} grades, structure has {k} elements")
    return mu


def cmd_fuzzy_check(args, out):
    S = load_structure(args.file)
    mu = _fuzzy_subset(args, S.k)
    verdicts = [fuzzy.is_fuzzy_sub_semihyperring(S, mu), fuzzy.is_fuzzy_hyperideal(S, mu),
                fuzzy.is_fuzzy_left_hyperideal(S, mu)]
    level = fuzzy.check_level_theorem(S, mu)
    corollary = fuzzy.threshold_corollary(S, mu, args.upper_bound)
    out.emit({"verdicts": [v.to_json() for v in verdicts],
              "level_theorem": level, "threshold_corollary": corollary})
    status = EXIT_OK if level and corollary else EXIT_FAIL
    if args.verify_theorems and not _theorem_lines(out, S):
        status = EXIT_FAIL
    return status


def cmd_levels(args, out):
    S = load_structure(args.file)
    mu = _fuzzy_subset(args, S.k)
    for t in sorted({Fraction(0), *mu.grades}):
        level = fuzzy.level_subset(mu, t)
        line = {"t": fuzzy.grade_str(t), "subset": list(members(level))}
        if level:
            line["hyperideal"] = ideals.is_hyperideal(S, level)
        out.emit(line)
    return EXIT_OK


def _load_fuzzy(path):
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise StructureFormatError(f"cannot read fuzzy structure {path}: {exc}") from exc
    return fuzzy.FuzzyHyperStructure.from_json(data)


def cmd_fuzzy_homs(args, out):
    src, tgt = _load_fuzzy(args.source), _load_fuzzy(args.target)
    if args.map:
        candidates = [tuple(_parse_json_arg(args.map, "--map"))]
    else:
        if tgt.k ** src.k > args.cap:
            raise ResourceError(f"{tgt.k}^{src.k} candidate maps exceed cap {args.cap}")
        candidates = itertools.product(range(tgt.k), repeat=src.k)
    status = EXIT_OK
    for image in candidates:
        is_fuzzy = fuzzy.is_fuzzy_homomorphism(src, tgt, image)
        if not is_fuzzy and not args.map:
            continue
        line = {"map": list(image), "fuzzy_homomorphism": is_fuzzy}
        if is_fuzzy:
            line["crisp_inclusion_homomorphism"] = fuzzy.check_fuzzy_to_crisp_hom(src, tgt, image)
            line["crisp_homomorphism"] = fuzzy.check_fuzzy_to_crisp_hom(
                src, tgt, image, strict=True)
            if not line["crisp_inclusion_homomorphism"]:
                status = EXIT_FAIL
        else:
            status = EXIT_FAIL
        out.emit(line)
    return status


def cmd_gen(args, out):
    if args.construction == "b":
        S = factory.b_construction(args.k, args.n, modulus_g=not args.saturating)
    elif args.construction == "random":
        S = factory.random_structure(args.seed, args.k, args.m, args.n, args.density)
    else:
        k = args.k
        if args.semiring == "bool":
            add = factory.binary_table(2, lambda x, y: x | y)
            mul = factory.binary_table(2, lambda x, y: x & y)
        else:
            add = factory.binary_table(k, lambda x, y: (x + y) % k)
            mul = factory.binary_table(k, lambda x, y: x * y % k)
        S = factory.semiring_lift(add, mul)
    text = dumps_structure(S, args.pretty)
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
    out.stream.write(text + "\n")
    return EXIT_OK


def cmd_search(args, out):
    flags = args.axioms.split(",")
    models = factory.search_models(args.k, args.m, args.n, flags, cap=args.cap,
                                   canonical=not args.no_canonical)
    for S in models:
        out.emit(structure_to_dict(S))
    return EXIT_OK if models else EXIT_FAIL


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperforge",
        description="Build and verify finite (m,n)-semihyperrings.")
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    parser.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: $HYPERFORGE_JOBS or CPU count)")
    # Accept the global options after the subcommand too.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add("check", help="run the axiom suite")
    p.add_argument("file")
    p.add_argument("--axioms", help=f"comma list from {sorted(axioms.AXIOM_SUITE)}")
    p.add_argument("--all-witnesses", action="store_true")
    p.add_argument("--strict-idempotent", action="store_true",
                   help="also require f(x,...,x) = {x}")
    p.set_defaults(func=cmd_check)

    p = add("ideals", help="enumerate sub-semihyperrings / hyperideals")
    p.add_argument("file")
    p.add_argument("--kind", choices=ideals.KINDS, default="two")
    p.add_argument("--cap-k", type=int, default=24)
    p.add_argument("--verify-theorems", action="store_true")
    p.set_defaults(func=cmd_ideals)

    p = add("congruences", help="enumerate congruences")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=115975, help="maximum partitions swept")
    p.add_argument("--verify-theorems", action="store_true")
    p.set_defaults(func=cmd_congruences)

    p = add("quotient", help="quotient by a congruence")
    p.add_argument("file")
    p.add_argument("--rel", required=True, help="class ids as JSON array, or @file")
    p.add_argument("--output", "-o")
    p.add_argument("--verify-theorems", action="store_true")
    p.set_defaults(func=cmd_quotient)

    p = add("natmap", help="natural map onto a quotient")
    p.add_argument("file")
    p.add_argument("--rel", required=True)
    p.set_defaults(func=cmd_natmap)

    p = add("homs", help="search homomorphisms")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--iso", action="store_true")
    group.add_argument("--first", action="store_true")
    p.add_argument("--cap", type=int, default=10**7)
    p.add_argument("--verify-theorems", action="store_true")
    p.set_defaults(func=cmd_homs)

    p = add("fuzzy-check", help="fuzzy sub-semihyperring / hyperideal checks")
    p.add_argument("file")
    p.add_argument("--mu", required=True, help='grades as JSON array of "p/q", or @file')
    p.add_argument("--upper-bound", choices=("max", "one"), default="max")
    p.add_argument("--verify-theorems", action="store_true")
    p.set_defaults(func=cmd_fuzzy_check)

    p = add("levels", help="level subsets of a fuzzy subset")
    p.add_argument("file")
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_levels)

    p = add("fuzzy-homs", help="fuzzy homomorphisms between graded structures")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--map", help="check one map (JSON array) instead of searching")
    p.add_argument("--cap", type=int, default=10**6)
    p.set_defaults(func=cmd_fuzzy_homs)

    p = add("gen", help=f"generate a structure file (PRNG: {ALGORITHM})")
    p.add_argument("construction", choices=("b", "random", "lift"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", default="1/2")
    p.add_argument("--saturating", action="store_true",
                   help="b: saturating product instead of product mod k")
    p.add_argument("--semiring", choices=("bool", "zk"), default="zk")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen)

    p = add("search", help="finite model search")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--axioms", default="semihyperring",
                   help=f"comma list, '!' negates; known: {', '.join(factory.AXIOM_FLAGS)}")
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument("--no-canonical", action="store_true")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs is None:
        args.jobs = default_jobs()
    out = Output(args.pretty, stdout)
    try:
        return args.func(args, out)
    except ResourceError as exc:
        stderr.write(dumps({"error": "resource", "message": str(exc)}) + "\n")
        return EXIT_CAP
    except StructureFormatError as exc:
        report = {"error": "input", "message": str(exc)}
        if exc.flat_index is not None:
            report["flat_index"] = exc.flat_index
            report["tuple"] = exc.tuple
        stderr.write(dumps(report) + "\n")
        return EXIT_INPUT
    except (DomainError, OSError) as exc:
        stderr.write(dumps({"error": "input", "message": str(exc)}) + "\n")
        return EXIT_INPUT
    except PreconditionError as exc:
        stderr.write(dumps({"error": "precondition", "message": str(exc)}) + "\n")
        return EXIT_FAIL
    except HyperforgeError as exc:
        stderr.write(dumps({"error": "internal", "message": str(exc)}) + "\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
