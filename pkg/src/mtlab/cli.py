"""Command-line front end.

Exit codes: 0 all checks passed, 1 a checked property failed (or an
expected-nonempty search matched nothing), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .algebra import StarConditionError, check_axioms, check_basic_properties
from .classify import classify_ring
from .corpus import build_corpus, default_max_order
from .ideals import enumerate_ideals, to_dot
from .ring import RingError, check_star
from .specs import SpecError, build_algebra, build_ring, parse_algebra_spec, parse_ring_spec
from .verify import (PreconditionError, subdirect_decompose, suite_crt,
                     suite_general_identities, suite_mtl_identities, suite_quotient_lemma)

FILTER_NAMES = ("mtl", "bl", "mv", "godel", "arithmetical", "local", "chain", "star", "unital")


class InputError(Exception):
    pass


def _read_spec(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.lstrip().startswith("{"):
        return arg
    try:
        return Path(arg).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {arg}: {e.strerror}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# -- search filter -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z_]+)|(.))")


def parse_filter(text: str):
    """Compile a filter like ``mtl & !bl`` into a predicate on a Classification.

    Grammar: ``expr := term ('|' term)*``, ``term := factor ('&' factor)*``,
    ``factor := '!' factor | '(' expr ')' | name``.
    """
    tokens = []
    for name, sym in _TOKEN.findall(text):
        if name:
            if name not in FILTER_NAMES:
                raise InputError(f"unknown filter identifier {name!r}")
            tokens.append(("name", name))
        elif sym.strip():
            if sym not in "&|!()":
                raise InputError(f"unexpected character {sym!r} in filter")
            tokens.append(("op", sym))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take(op):
        nonlocal pos
        if peek() == ("op", op):
            pos += 1
            return True
        return False

    def expr():
        terms = [term()]
        while take("|"):
            terms.append(term())
        return lambda c: any(t(c) for t in terms)

    def term():
        factors = [factor()]
        while take("&"):
            factors.append(factor())
        return lambda c: all(f(c) for f in factors)

    def factor():
        nonlocal pos
        if take("!"):
            inner = factor()
            return lambda c: not inner(c)
        if take("("):
            inner = expr()
            if not take(")"):
                raise InputError("missing ')' in filter")
            return inner
        kind, val = peek()
        if kind != "name":
            raise InputError(f"expected identifier in filter, got {val!r}")
        pos += 1
        return lambda c: bool(getattr(c, val))

    if not tokens:
        raise InputError("empty filter")
    pred = expr()
    if pos != len(tokens):
        raise InputError(f"trailing tokens in filter: {tokens[pos:]}")
    return pred


# -- verbs -------------------------------------------------------------------

def cmd_classify(args, out) -> int:
    R = build_ring(parse_ring_spec(_read_spec(args.spec)))
    out.write(_dump(classify_ring(R).as_dict()) + "\n")
    return 0


def cmd_lattice(args, out) -> int:
    R = build_ring(parse_ring_spec(_read_spec(args.spec)))
    L = enumerate_ideals(R)
    if args.dot:
        Path(args.dot).write_text(to_dot(L), encoding="utf-8")
    if args.json:
        out.write(_dump({
            "ring": R.name,
            "ideals": [list(I.members) for I in L],
            "labels": [L.label(k) for k in range(len(L))],
            "covers": [list(e) for e in L.covers],
        }) + "\n")
    elif not args.dot:
        out.write(to_dot(L))
    else:
        out.write(f"{R.name}: {len(L)} ideals, {len(L.covers)} cover edges -> {args.dot}\n")
    return 0


def cmd_invariants(args, out) -> int:
    R = build_ring(parse_ring_spec(_read_spec(args.spec)))
    if not check_star(R):
        raise InputError(f"{R.name} fails x = r*x; the identity suites need it")
    L = enumerate_ideals(R)
    suites = [args.suite] if args.suite else ["general", "quotient", "mtl", "crt"]
    reports, skipped = [], []
    for name in suites:
        try:
            if name == "general":
                reports.append(suite_general_identities(R, L))
            elif name == "quotient":
                reports.append(suite_quotient_lemma(R, L))
            elif name == "mtl":
                reports.append(suite_mtl_identities(R, args.n_max, args.ab_max, L))
            else:
                reports.append(suite_crt(R, L))
        except (PreconditionError, RingError) as e:
            if args.suite:
                raise
            skipped.append({"suite": name, "reason": str(e)})
    doc = {"ring": R.name, "reports": [r.as_dict() for r in reports]}
    if skipped:
        doc["skipped"] = skipped
    out.write(_dump(doc) + "\n")
    return 0 if all(r.passed for r in reports) else 1


def cmd_decompose(args, out) -> int:
    R = build_ring(parse_ring_spec(_read_spec(args.spec)))
    d = subdirect_decompose(R)
    out.write(_dump(d.as_dict()) + "\n")
    return 0 if d.verified else 1


def cmd_algebra(args, out) -> int:
    A = build_algebra(parse_algebra_spec(_read_spec(args.spec)))
    flags = check_axioms(A)
    doc = {"size": A.size, "flags": flags.as_dict()}
    code = 0
    if args.properties:
        if flags.is_res_lattice:
            rep = check_basic_properties(A)
            doc["properties"] = rep.as_dict()
            code = 0 if rep.all_pass else 1
        else:
            doc["properties"] = None
            code = 1
    out.write(_dump(doc) + "\n")
    return code


def cmd_search(args, out) -> int:
    pred = parse_filter(args.filter) if args.filter else (lambda c: True)
    max_order = args.max_order if args.max_order is not None else default_max_order()
    hits = []
    for c in build_corpus(max_order):
        cls = classify_ring(c.ring)
        if pred(cls):
            hits.append({"ring": c.name, "order": c.ring.order, "spec": c.spec.to_json()})
    out.write(_dump(hits) + "\n")
    return 1 if args.expect_nonempty and not hits else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mtlab", description=(
        "Ideal lattices of finite commutative rings as residuated lattices."))
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help, spec=True):
        s = sub.add_parser(name, help=help)
        if spec:
            s.add_argument("spec", help="JSON spec: file path, inline JSON, or '-' for stdin")
        s.add_argument("--json", action="store_true", help="JSON output")
        s.set_defaults(fn=fn)
        return s

    verb("classify", cmd_classify, "classification report for a ring")
    s = verb("lattice", cmd_lattice, "ideal lattice and Hasse diagram")
    s.add_argument("--dot", metavar="OUT", help="write the Graphviz DOT diagram to OUT")
    s = verb("invariants", cmd_invariants, "run identity suites on a ring")
    s.add_argument("--suite", choices=("general", "mtl", "quotient", "crt"))
    s.add_argument("--n-max", type=int, default=3)
    s.add_argument("--ab-max", type=int, default=2)
    verb("decompose", cmd_decompose, "subdirect decomposition of a ring")
    s = verb("algebra", cmd_algebra, "axiom flags for a finite residuated lattice")
    s.add_argument("--properties", action="store_true", help="also check the basic property list")
    s = verb("search", cmd_search, "classify the generated corpus and filter it", spec=False)
    s.add_argument("--max-order", type=int, default=None)
    s.add_argument("--filter", default=None, help="e.g. 'mtl & !bl'")
    s.add_argument("--expect-nonempty", action="store_true")
    return p


def run_command(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return args.fn(args, out)
    except (InputError, SpecError, PreconditionError, StarConditionError,
            RingError, ValueError) as e:
        err.write(f"mtlab: error: {e}\n")
        return 2


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
