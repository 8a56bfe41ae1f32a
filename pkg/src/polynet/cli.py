"""Command-line interface.

Every command reads its main document from ``--in FILE`` (default stdin) and
writes documents or plain text to stdout. A file argument of the form
``fixture:NAME`` loads a bundled fixture instead.

Exit codes: 0 ok/found, 1 invalid/verified absent, 2 error or budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import fixtures
from .coding import (
    BudgetExceeded,
    check_dpn,
    code_from_representation,
    polymatroid_from_code,
    search_scalar_solution,
    verify_code,
)
from .constructor import construct
from .formats import emit, export_dot, parse
from .matroid import Matroid, check_matroid
from .network import validate
from .polymatroid import DiscretePolymatroid, RankTable, check_rank_axioms
from .representation import Representation, rank_table_from_matrices, search_representation, verify_representation

OK, ABSENT, ERROR = 0, 1, 2


def _read(source: str | None) -> str:
    if source is None or source == "-":
        return sys.stdin.read()
    if source.startswith("fixture:"):
        return fixtures.text(source[len("fixture:"):])
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def _load(source: str | None, expect: str | None = None, **kw) -> Any:
    return parse(_read(source), expect, **kw)


def _table(source: str | None) -> RankTable:
    obj = _load(source)
    if isinstance(obj, Matroid):
        return obj.rank
    if isinstance(obj, Representation):
        return rank_table_from_matrices(obj)
    if not isinstance(obj, RankTable):
        raise ValueError("expected a polymatroid, matroid or representation document")
    return obj


def _vectors(vs) -> None:
    for v in vs:
        print(json.dumps(list(v), separators=(",", ":")))


def _verdict(v) -> int:
    print(v)
    return OK if v else ABSENT


# -- commands ------------------------------------------------------------------

def cmd_axioms(args) -> int:
    obj = _load(args.input)
    if isinstance(obj, Matroid):
        return _verdict(check_matroid(obj))
    return _verdict(check_rank_axioms(obj))


def cmd_members(args) -> int:
    _vectors(DiscretePolymatroid(_table(args.input)).members)
    return OK


def cmd_bases(args) -> int:
    _vectors(DiscretePolymatroid(_table(args.input)).bases)
    return OK


def cmd_sets(args) -> int:
    d = DiscretePolymatroid(_table(args.input))
    if args.which in ("di", "ci") and args.i is None:
        raise ValueError(f"--which {args.which} needs --i")
    if args.which == "excluded":
        _vectors(d.excluded)
    elif args.which == "di":
        _vectors(d.d_i(args.i))
    elif args.which == "ci":
        _vectors(d.c_i(args.i))
    else:
        _vectors(d.r_vectors())
    return OK


def cmd_rep_verify(args) -> int:
    rep = _load(args.input, "representation")
    ok = verify_representation(rep, _table(args.table))
    print("ok" if ok else "mismatch")
    return OK if ok else ABSENT


def cmd_rep_rank_table(args) -> int:
    sys.stdout.write(emit(rank_table_from_matrices(_load(args.input, "representation"))))
    return OK


def cmd_rep_search(args) -> int:
    rep = search_representation(_table(args.input), args.q, args.rows)
    if rep is None:
        print("absent")
        return ABSENT
    sys.stdout.write(emit(rep))
    return OK


def cmd_net_validate(args) -> int:
    return _verdict(validate(_load(args.input, "network", check=False)))


def cmd_construct(args) -> int:
    script = _load(args.script, "script") if args.script else None
    result = construct(DiscretePolymatroid(_table(args.input)), script, args.rounds)
    sys.stdout.write(emit(result.network) + emit(result.mapping) + emit(result.transcript))
    if result.uncovered:
        print(f"uncovered elements: {list(result.uncovered)}", file=sys.stderr)
    return OK


def cmd_code_verify(args) -> int:
    return _verdict(verify_code(_load(args.net, "network"), _load(args.input, "code")))


def cmd_code_from_rep(args) -> int:
    code = code_from_representation(
        _load(args.net, "network"), _load(args.input, "representation"), _load(args.map, "mapping"), args.k
    )
    sys.stdout.write(emit(code))
    return OK


def cmd_poly_from_code(args) -> int:
    table, mapping = polymatroid_from_code(_load(args.net, "network"), _load(args.input, "code"))
    sys.stdout.write(emit(table) + emit(mapping))
    return OK


def cmd_dpn_check(args) -> int:
    return _verdict(check_dpn(_load(args.net, "network"), _table(args.input), _load(args.map, "mapping")))


def cmd_scalar_search(args) -> int:
    try:
        code = search_scalar_solution(_load(args.input, "network"), args.q, args.budget)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return ERROR
    if code is None:
        print("absent")
        return ABSENT
    sys.stdout.write(emit(code))
    return OK


def cmd_dot(args) -> int:
    code = _load(args.code, "code") if args.code else None
    sys.stdout.write(export_dot(_load(args.input, "network"), code))
    return OK


def cmd_fixtures(args) -> int:
    if args.name is None:
        print("\n".join(fixtures.names()))
    else:
        sys.stdout.write(fixtures.text(args.name))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polynet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--in", dest="input", metavar="FILE", help="main input document (default: stdin)")
        p.set_defaults(fn=fn)
        return p

    add("axioms", cmd_axioms, "check polymatroid or matroid axioms")
    add("members", cmd_members, "list all member vectors")
    add("bases", cmd_bases, "list basis vectors")
    p = add("sets", cmd_sets, "excluded vectors, D_i, C_i or R(D)")
    p.add_argument("--which", choices=["excluded", "di", "ci", "r"], required=True)
    p.add_argument("--i", type=int)
    p = add("rep-verify", cmd_rep_verify, "check a representation against a rank table")
    p.add_argument("--table", required=True, metavar="FILE")
    add("rep-rank-table", cmd_rep_rank_table, "rank table of a representation")
    p = add("rep-search", cmd_rep_search, "exhaustive representation search")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    add("net-validate", cmd_net_validate, "check network invariants")
    p = add("construct", cmd_construct, "build a network from a polymatroid")
    p.add_argument("--script", metavar="FILE")
    p.add_argument("--rounds", type=int)
    p = add("code-verify", cmd_code_verify, "check a vector linear code on a network")
    p.add_argument("--net", required=True, metavar="FILE")
    p = add("code-from-rep", cmd_code_from_rep, "code induced by a representation and mapping")
    p.add_argument("--net", required=True, metavar="FILE")
    p.add_argument("--map", required=True, metavar="FILE")
    p.add_argument("--k", type=int)
    p = add("poly-from-code", cmd_poly_from_code, "polymatroid and mapping induced by a code")
    p.add_argument("--net", required=True, metavar="FILE")
    p = add("dpn-check", cmd_dpn_check, "check DN1-DN3 for a network, rank table and mapping")
    p.add_argument("--net", required=True, metavar="FILE")
    p.add_argument("--map", required=True, metavar="FILE")
    p = add("scalar-search", cmd_scalar_search, "exhaustive scalar linear solution search")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--budget", type=int)
    p = add("dot", cmd_dot, "Graphviz DOT export")
    p.add_argument("--code", metavar="FILE")
    p = sub.add_parser("fixtures", help="list or print bundled fixtures")
    p.add_argument("name", nargs="?")
    p.set_defaults(fn=cmd_fixtures)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, KeyError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
