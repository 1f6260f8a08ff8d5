"""Command-line interface.

Exit status: 0 on success, 2 on bad input, 3 when a computation cannot be
completed (irrational centers, insufficient truncation, unsupported covers).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .arith import chain_determinant, hj_expand
from .curveres import ENCODINGS, embedded_resolution, encode
from .errors import ComputationError, InputError, RangeError
from .graph import (
    DualGraph,
    check_balance,
    first_kind_vertices,
    graph_determinant,
    intersection_matrix,
    is_negative_definite,
)
from .hj import CyclicQuotient, MonomialGerm, cyclic_quotient_resolution, figure7_graph, lemma_reduce
from .jung import SurfaceGerm, jung_pipeline
from .poly import parse_poly
from .puiseux import (
    DEFAULT_ORDER,
    CurveGerm,
    delta_invariant,
    genus_of_plane_curve,
    max_order_default,
    puiseux_branches,
)
from .arith import parse_rational


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _emit_graph(graph: DualGraph, fmt: str, extra: Optional[dict] = None, name: str = "G") -> None:
    if fmt == "dot":
        sys.stdout.write(graph.to_dot(name))
    elif extra is None:
        _emit(graph.to_json())
    else:
        _emit({**extra, "graph": graph.to_json()})


def _fraction_pair(text: str):
    parts = text.split("/")
    if len(parts) != 2:
        raise RangeError(f"expected q/k, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise RangeError(f"expected integers in {text!r}") from exc


def _cmd_cf(args) -> None:
    q, k = _fraction_pair(args.fraction)
    chain = hj_expand(q, k)
    _emit({"chain": list(chain), "det": chain_determinant(chain)})


def _cmd_puiseux(args) -> None:
    f = parse_poly(args.poly)
    branches = puiseux_branches(f, args.order)
    _emit({"poly": f.to_text(), "branches": [b.to_json() for b in branches]})


def _cmd_resolve(args) -> None:
    germ = CurveGerm.from_text(args.poly)
    record = embedded_resolution(germ, args.order, args.max_order)
    if args.format == "dot":
        sys.stdout.write(record.graph.to_dot(germ.name))
    elif args.encoding:
        _emit(encode(record, args.encoding))
    else:
        _emit(record.to_json())


def _cmd_delta(args) -> None:
    germ = CurveGerm.from_text(args.poly)
    _emit({"poly": germ.name, "delta": delta_invariant(germ, args.order, args.max_order)})


def _cmd_genus(args) -> None:
    germs = [CurveGerm.from_text(p) for p in args.polys]
    _emit({"degree": args.degree, "genus": genus_of_plane_curve(args.degree, germs)})


def _cmd_hj(args) -> None:
    if args.cyclic:
        n, k = args.cyclic
        c = CyclicQuotient(n, k)
        chain = c.chain()
        _emit_graph(cyclic_quotient_resolution(c), args.format,
                    {"n": n, "k": k, "chain": list(chain), "det": chain_determinant(chain)})
        return
    if len(args.exponents) != 2:
        raise RangeError("hj needs --cyclic n k or two exponents p1/q1 p2/q2")
    g = MonomialGerm(parse_rational(args.exponents[0]), parse_rational(args.exponents[1]))
    red = lemma_reduce(g)
    info = {"d": red.d, "j1": red.j1, "k1": red.k1, "q1p": red.q1p, "k1p": red.k1p,
            "reduced": None if red.reduced is None else [str(red.reduced.e1), str(red.reduced.e2)]}
    _emit_graph(figure7_graph(g), args.format, {"lemma": info})


def _cmd_jung(args) -> None:
    s = SurfaceGerm.from_text(args.n, args.poly)
    result = jung_pipeline(s, args.order, args.max_order)
    graph = result.minimized if args.minimize else result.graph
    _emit_graph(graph, args.format, name=f"z^{s.n} + {s.f.to_text()}")


def _read_graph(path: str) -> DualGraph:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise RangeError(f"cannot read graph from {path!r}: {exc}") from exc
    if isinstance(data, dict) and "vertices" not in data and isinstance(data.get("graph"), dict):
        data = data["graph"]
    try:
        return DualGraph.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise RangeError(f"malformed graph JSON: {exc}") from exc


def _cmd_graph_check(args) -> None:
    g = _read_graph(args.file)
    report = {"vertices": len(g), "edges": sum(g.edges.values()), "arrows": len(g.arrows)}
    complete = all(v.self_int is not None for v in g.vertices.values())
    if complete:
        m = intersection_matrix(g)
        report["negative_definite"] = is_negative_definite(m)
        report["determinant"] = graph_determinant(m)
        # arrows carry multiplicities of the f-divisor, so only f_mult can balance
        if all("f_mult" in v.dec for v in g.vertices.values()):
            report["balance"] = {"f_mult": check_balance(g, "f_mult")}
    else:
        report["missing_self_int"] = [v.id for v in g.vertices.values() if v.self_int is None]
    report["first_kind"] = first_kind_vertices(g)
    report["minimal"] = not report["first_kind"]
    _emit(report)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singres", description="Exact resolution of plane curve and surface singularities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def orders(p):
        p.add_argument("--order", type=int, default=DEFAULT_ORDER,
                       help="initial Puiseux truncation order (default %(default)s)")
        p.add_argument("--max-order", type=int, default=None,
                       help="cap for automatic re-expansion (default $SINGRES_MAX_ORDER or 512)")

    def fmt(p):
        p.add_argument("--format", choices=("json", "dot"), default="json")

    p = sub.add_parser("cf", help="Hirzebruch-Jung continued fraction of q/k")
    p.add_argument("fraction", help="q/k with 1 <= k < q coprime")
    p.set_defaults(func=_cmd_cf)

    p = sub.add_parser("puiseux", help="Newton-Puiseux branches at the origin")
    p.add_argument("poly")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.set_defaults(func=_cmd_puiseux)

    p = sub.add_parser("resolve-curve", help="embedded resolution of a plane curve germ")
    p.add_argument("poly")
    p.add_argument("--encoding", choices=ENCODINGS)
    fmt(p)
    orders(p)
    p.set_defaults(func=_cmd_resolve)

    p = sub.add_parser("delta", help="delta invariant of a plane curve germ")
    p.add_argument("poly")
    orders(p)
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("genus", help="genus of a plane projective curve of degree d")
    p.add_argument("degree", type=int)
    p.add_argument("polys", nargs="*", help="local equations of its singular points")
    p.set_defaults(func=_cmd_genus)

    p = sub.add_parser("hj", help="Hirzebruch-Jung singularities")
    p.add_argument("--cyclic", nargs=2, type=int, metavar=("N", "K"))
    p.add_argument("exponents", nargs="*", help="p1/q1 p2/q2")
    fmt(p)
    p.set_defaults(func=_cmd_hj)

    p = sub.add_parser("jung", help="resolution graph of z^n + f(x, y) = 0")
    p.add_argument("n", type=int)
    p.add_argument("poly")
    p.add_argument("--minimize", action="store_true", help="print the minimal resolution graph")
    fmt(p)
    orders(p)
    p.set_defaults(func=_cmd_jung)

    p = sub.add_parser("graph-check", help="definiteness, determinant, balance, minimality")
    p.add_argument("file", help="graph JSON file, or - for standard input")
    p.set_defaults(func=_cmd_graph_check)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "max_order", None) is None and hasattr(args, "max_order"):
        args.max_order = max_order_default()
    try:
        args.func(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    return 0


def run() -> None:
    sys.exit(main())
