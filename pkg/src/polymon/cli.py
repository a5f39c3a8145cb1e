"""Command line front end.  Every command prints one JSON document.

Exit status: 0 on success, 1 when a check finds a counterexample, 2 on a
usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import List, Optional

from . import analysis, extension, green, polycyclic, topology
from .extension import Filter, SNbhd
from .polycyclic import GenString, PElement, reduce
from .words import Word, parse_word_set


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(
    r"""
    (?P<sep>[\s*]+)
  | (?P<group>\((?P<word>(?:p\d+)+)\)\^-1)
  | (?P<inv>P(?P<inv_i>\d+)|p(?P<inv_j>\d+)\^-1)
  | (?P<gen>p(?P<gen_i>\d+))
  | (?P<eps>e(?:\^-1)?)
  | (?P<zero>0)
  | (?P<one>1)
    """,
    re.VERBOSE,
)


def parse(text: str, lam: int = 2) -> GenString:
    """Read a product of generators.

    ``p3`` is a generator, ``P3`` or ``p3^-1`` its inverse, ``(p1p2)^-1`` the
    inverse of a word, ``1``/``e``/``e^-1`` the empty product and ``0`` zero.
    Whitespace and ``*`` separate items; juxtaposition also works.
    """
    tokens = []
    zero = False
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected {text[pos]!r}", pos)
        if m.group("group") is not None:
            idx = [int(d) for d in re.findall(r"p(\d+)", m.group("word"))]
            for i in idx:
                _check_index(i, lam, pos)
            tokens.extend((i, True) for i in reversed(idx))
        elif m.group("inv") is not None:
            i = int(m.group("inv_i") or m.group("inv_j"))
            _check_index(i, lam, pos)
            tokens.append((i, True))
        elif m.group("gen") is not None:
            i = int(m.group("gen_i"))
            _check_index(i, lam, pos)
            tokens.append((i, False))
        elif m.group("zero") is not None:
            zero = True
        pos = m.end()
    return GenString(tokens, lam, zero)


def _check_index(i: int, lam: int, pos: int) -> None:
    if not 1 <= i <= lam:
        raise ParseError(f"generator index {i} outside [1, {lam}]", pos)


def parse_element(text: str, lam: int = 2) -> PElement:
    return reduce(parse(text, lam))


_FILTER = re.compile(r"\s*F\[(?P<a>[^|\]]*)\|(?P<b>[^\]]*)\]\s*")


def parse_s_element(text: str):
    m = _FILTER.fullmatch(text)
    if m:
        try:
            return Filter(Word.parse(m.group("a"), 2), Word.parse(m.group("b"), 2))
        except ValueError as exc:
            raise ParseError(str(exc), 0) from None
    return parse_element(text, 2)


def _filter_pair(text: str) -> Filter:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError("expected two words separated by a comma", 0)
    return Filter(Word.parse(parts[0], 2), Word.parse(parts[1], 2))


# -- commands -----------------------------------------------------------------

def _report(rep: analysis.SuiteReport) -> tuple:
    return rep.to_json(), (0 if rep.passed else 1)


def cmd_nf(args):
    return parse_element(args.expr, args.lam).to_json(), 0


def cmd_mul(args):
    x, y = parse_element(args.x, args.lam), parse_element(args.y, args.lam)
    return polycyclic.multiply(x, y).to_json(), 0


def cmd_inv(args):
    return polycyclic.invert(parse_element(args.expr, args.lam)).to_json(), 0


def cmd_green(args):
    x, y = parse_element(args.x, args.lam), parse_element(args.y, args.lam)
    return {"relation": args.relation, "holds": green.GREEN[args.relation](x, y)}, 0


def cmd_order(args):
    x, y = parse_element(args.x, args.lam), parse_element(args.y, args.lam)
    return {"leq": polycyclic.nat_leq(x, y)}, 0


def _nbhd(args) -> topology.BasicNbhd:
    return topology.BasicNbhd(parse_word_set(args.A, args.lam), args.lam)


def cmd_member(args):
    nb = _nbhd(args)
    x = parse_element(args.expr, args.lam)
    return {"member": topology.u_member(nb, x), **nb.to_json()}, 0


def cmd_witness(args):
    nb = _nbhd(args)
    radius = args.max_len if args.max_len is not None else None
    if args.kind == "mul":
        W = topology.multiplication_witness(nb)
        r = radius if radius is not None else W.default_radius()
        bad = topology.find_product_inclusion_failure(nb, W, r)
    else:
        if args.expr is None:
            raise ParseError("right/left witnesses need an element", 0)
        x = parse_element(args.expr, args.lam)
        if args.kind == "right":
            W = topology.right_translation_witness(x, nb)
            r = radius if radius is not None else W.default_radius()
            bad = topology.find_right_inclusion_failure(x, nb, W, r)
        else:
            W = topology.left_translation_witness(x, nb)
            r = radius if radius is not None else W.default_radius()
            bad = topology.find_left_inclusion_failure(x, nb, W, r)
    out = {"witness": W.to_json()["A"], "max_len": r, "ok": bad is None}
    if bad is not None:
        out["counterexample"] = [e.to_json() for e in bad]
    return out, (0 if bad is None else 1)


def cmd_coarse(args):
    nb = _nbhd(args)
    bad = topology.coarseness_failure(nb, args.max_len)
    out = {"ok": bad is None, "max_len": args.max_len}
    if bad is not None:
        out["counterexample"] = bad.to_json()
    return out, (0 if bad is None else 1)


def cmd_chain(args):
    spec = green.ChainSpec(Word.parse(args.pre, args.lam), Word.parse(args.per, args.lam))
    es = green.chain_prefix(spec, args.n)
    out = {
        "chain": [e.u.to_json() for e in es],
        "omega_chain_prefix": green.is_omega_chain_prefix(es),
    }
    if args.A is not None:
        nb = _nbhd(args)
        hits, misses = topology.chain_intersection_check(nb, spec, args.n)
        out.update(hits=hits, misses=misses, bound=len(nb.A), ok=misses <= len(nb.A))
        return out, (0 if misses <= len(nb.A) else 1)
    return out, 0


def cmd_ext_mul(args):
    x, y = parse_s_element(args.x), parse_s_element(args.y)
    return extension.s_to_json(extension.s_multiply(x, y)), 0


def cmd_ext_member(args):
    nb = SNbhd(_filter_pair(args.center), args.n)
    x = parse_s_element(args.expr)
    return {"member": extension.un_member(nb, x)}, 0


def cmd_iso_check(args):
    from .suites import iso_suite

    return _report(iso_suite(args.max_index))


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("POLYMON_SEED", "0"))


def cmd_check(args):
    from . import suites

    seed = _seed(args)
    rep = suites.run(args.suite, max_len=args.max_len, samples=args.samples, seed=seed, lam=args.lam)
    return _report(rep)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polymon", description=__doc__.splitlines()[0])
    ap.add_argument("--lam", type=int, default=2, help="number of generators (default 2)")
    ap.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="normal form of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("mul", help="product of two elements")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("inv", help="inverse of an element")
    p.add_argument("expr")
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("green", help="test a Green relation")
    p.add_argument("relation", choices=sorted(green.GREEN))
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_green)

    p = sub.add_parser("order", help="natural partial order x <= y")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("member", help="membership in U_A(0)")
    p.add_argument("--A", required=True, help="comma separated words, e.g. p1,p2p1,e")
    p.add_argument("expr")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("witness", help="continuity witness for U_A(0), checked on a ball")
    p.add_argument("kind", choices=["right", "left", "mul"])
    p.add_argument("expr", nargs="?")
    p.add_argument("--A", required=True)
    p.add_argument("--max-len", type=int)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("coarse-check", help="U_A(0) via x x^-1 and x^-1 x")
    p.add_argument("--A", required=True)
    p.add_argument("--max-len", type=int, default=4)
    p.set_defaults(func=cmd_coarse)

    p = sub.add_parser("chain", help="prefix of a maximal chain of idempotents")
    p.add_argument("--pre", default="e")
    p.add_argument("--per", required=True)
    p.add_argument("-n", type=int, default=10)
    p.add_argument("--A")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("ext-mul", help="product in the extension S")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_ext_mul)

    p = sub.add_parser("ext-member", help="membership in U_n(F[a|b])")
    p.add_argument("--center", required=True, help="a,b")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("expr")
    p.set_defaults(func=cmd_ext_member)

    p = sub.add_parser("iso-check", help="filter points vs matrix units")
    p.add_argument("--max-index", type=int, default=20)
    p.set_defaults(func=cmd_iso_check)

    from .suites import SUITES

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-len", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_check)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        out, code = args.func(args)
    except ValueError as exc:
        print(json.dumps({"error": str(exc)}))
        return 2
    print(json.dumps(out, indent=2 if args.pretty else None))
    return code


if __name__ == "__main__":
    sys.exit(main())
