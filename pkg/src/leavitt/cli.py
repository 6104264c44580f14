"""Command line driver.

Exit codes: 0 for a decided result, 1 for usage or input errors, 2 when a
decision is honestly unknown (properness over a cyclic graph and a field
that is proper but not positive definite).
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import AlgebraError, format_element
from .decide import UNKNOWN, full_report
from .fields import FieldError, parse_field_spec
from .graphs import (
    GraphError,
    classify_vertex,
    e_f_graph,
    is_acyclic,
    m_n_graph,
    mu_table,
    sigma,
    sinks,
    standard_graph,
)
from .io import (
    ParseError,
    claim_nonzero,
    claim_product_equals,
    claim_star_fixed,
    claim_star_product_zero,
    format_graph,
    format_matrix_image,
    format_report,
    graph_to_json,
    matrix_image_to_json,
    parse_element,
    parse_graph_any,
    report_to_json,
    verify_claims,
)
from .linalg import ShapeError
from .omega import extnat_to_json
from .semisimple import phi
from .witness import (
    NotStarRegularError,
    improper_element,
    projection_generator,
    regular_witness,
    unit_regular_witness,
)


class _Parser(argparse.ArgumentParser):
    # usage problems are exit code 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", dest="as_json",
                        help="emit structured JSON instead of text")

    parser = _Parser(prog="leavitt",
                     description="exact computation in path algebras with "
                                 "Cuntz-Krieger relations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="structural facts about a graph")
    p.add_argument("graph", help="graph file, or - for stdin")

    p = sub.add_parser("decide", parents=[common],
                       help="regularity, *-regularity, and properness verdicts")
    p.add_argument("graph")
    p.add_argument("--field", required=True, metavar="SPEC",
                   help="Q, Q[i]/id, Q[i]/conj, GF(p), GF(p,2)")

    for name, help_text in (("nf", "normal form of an expression"),
                            ("star", "adjoint of an expression")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("graph")
        p.add_argument("--field", required=True)
        p.add_argument("-e", "--expr", required=True)

    p = sub.add_parser("mul", parents=[common], help="product of two expressions")
    p.add_argument("graph")
    p.add_argument("--field", required=True)
    p.add_argument("-e", "--expr", action="append", required=True,
                   help="give twice, left factor first")

    p = sub.add_parser("phi", parents=[common],
                       help="matrix image over the sinks (acyclic graphs)")
    p.add_argument("graph")
    p.add_argument("--field", required=True)
    p.add_argument("-e", "--expr", required=True)

    p = sub.add_parser("witness", parents=[common],
                       help="constructive certificates")
    p.add_argument("kind", choices=["regular", "projection", "improper", "unit"])
    p.add_argument("graph")
    p.add_argument("--field", required=True)
    p.add_argument("-e", "--expr")

    p = sub.add_parser("construct", parents=[common],
                       help="build standard and derived graphs")
    p.add_argument("kind", choices=["line", "rose", "toeplitz", "mn", "ef"])
    p.add_argument("params", nargs="*",
                   help="line/rose/toeplitz: [n]; mn: GRAPH N; ef: GRAPH EDGE...")

    return parser


def _load_graph(source: str):
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source, "r", encoding="utf-8") as handle:
            text = handle.read()
    return parse_graph_any(text)


def _emit(payload, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _cmd_analyze(args) -> int:
    g = _load_graph(args.graph)
    table = mu_table(g)
    info = {
        "vertices": list(g.vertices),
        "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in g.edges],
        "acyclic": is_acyclic(g),
        "sinks": list(sinks(g)),
        "mu": {v: extnat_to_json(table[v]) for v in g.vertices},
        "sigma": extnat_to_json(sigma(g)),
    }
    lines = [f"vertices: {len(g.vertices)}", f"edges: {len(g.edges)}"]
    for v in g.vertices:
        c = classify_vertex(g, v)
        tags = [t for t, on in (("sink", c.sink), ("source", c.source)) if on]
        tag = " ".join(tags) if tags else "internal"
        lines.append(f"  {v}: {tag}, out-degree {c.out_degree}, mu {extnat_to_json(table[v])}")
    lines.append(f"acyclic: {'true' if info['acyclic'] else 'false'}")
    lines.append(f"sigma: {info['sigma']}")
    _emit(info, args.as_json, "\n".join(lines))
    return 0


def _cmd_decide(args) -> int:
    g = _load_graph(args.graph)
    k = parse_field_spec(args.field)
    report = full_report(g, k)
    _emit(report_to_json(report), args.as_json, format_report(report))
    return 2 if report.proper_algebra == UNKNOWN else 0


def _cmd_expr(args) -> int:
    g = _load_graph(args.graph)
    k = parse_field_spec(args.field)
    if args.command == "mul":
        if len(args.expr) != 2:
            raise ParseError("mul needs exactly two -e expressions")
        x = parse_element(args.expr[0], g, k)
        y = parse_element(args.expr[1], g, k)
        result = x * y
    else:
        x = parse_element(args.expr, g, k)
        result = x.star() if args.command == "star" else x
    _emit({"element": format_element(result)}, args.as_json, format_element(result))
    return 0


def _cmd_phi(args) -> int:
    g = _load_graph(args.graph)
    k = parse_field_spec(args.field)
    x = parse_element(args.expr, g, k)
    image = phi(x)
    _emit(matrix_image_to_json(image), args.as_json, format_matrix_image(image))
    return 0


def _cmd_witness(args) -> int:
    g = _load_graph(args.graph)
    k = parse_field_spec(args.field)
    if args.kind == "improper":
        cert = improper_element(g, k)
        if cert is None:
            _emit({"kind": "improper", "certificate": None, "claims": [],
                   "verified": True}, args.as_json, "none")
            return 0
        claims = [claim_nonzero(cert), claim_star_product_zero(cert)]
        payload = {"kind": "improper", "certificate": format_element(cert),
                   "claims": claims, "verified": verify_claims(g, k, claims)}
        text = (f"{format_element(cert)}\n"
                f"verified: a != 0 and star(a).a = 0")
        if not payload["verified"]:
            raise AssertionError("claim verification failed")
        _emit(payload, args.as_json, text)
        return 0

    if not args.expr:
        raise ParseError(f"witness {args.kind} needs -e EXPR")
    a = parse_element(args.expr, g, k)

    if args.kind == "regular":
        b = regular_witness(g, k, a)
        claims = [claim_product_equals([a, b, a], a)]
        payload = {"kind": "regular", "input": format_element(a),
                   "inverse": format_element(b), "claims": claims,
                   "verified": verify_claims(g, k, claims)}
        text = (f"inverse: {format_element(b)}\n"
                f"verified: a.b.a = a")
    elif args.kind == "projection":
        try:
            cert = projection_generator(g, k, a)
        except NotStarRegularError as exc:
            c = exc.certificate
            claims = [claim_nonzero(c), claim_star_product_zero(c)]
            payload = {"kind": "not_star_regular", "input": format_element(a),
                       "certificate": format_element(c), "claims": claims,
                       "verified": verify_claims(g, k, claims)}
            text = (f"not *-regular; certificate: {format_element(c)}\n"
                    f"verified: c != 0 and star(c).c = 0")
            if not payload["verified"]:
                raise AssertionError("claim verification failed")
            _emit(payload, args.as_json, text)
            return 0
        claims = [claim_star_fixed(cert.p),
                  claim_product_equals([cert.p, cert.p], cert.p),
                  claim_product_equals([cert.p, a], a),
                  claim_product_equals([a, cert.factor], cert.p)]
        payload = {"kind": "projection", "input": format_element(a),
                   "projection": format_element(cert.p),
                   "factor": format_element(cert.factor),
                   "claims": claims, "verified": verify_claims(g, k, claims)}
        text = (f"projection: {format_element(cert.p)}\n"
                f"factor: {format_element(cert.factor)}\n"
                f"verified: p* = p = p.p, p.a = a, a.factor = p")
    else:
        cert = unit_regular_witness(g, k, a)
        claims = [claim_product_equals([cert.u, cert.u_prime], cert.v),
                  claim_product_equals([cert.u_prime, cert.u], cert.v),
                  claim_product_equals([cert.v, a], a),
                  claim_product_equals([a, cert.v], a),
                  claim_product_equals([a, cert.u, a], a)]
        payload = {"kind": "unit", "input": format_element(a),
                   "u": format_element(cert.u),
                   "u_prime": format_element(cert.u_prime),
                   "v": format_element(cert.v),
                   "claims": claims, "verified": verify_claims(g, k, claims)}
        text = (f"u: {format_element(cert.u)}\n"
                f"u_prime: {format_element(cert.u_prime)}\n"
                f"v: {format_element(cert.v)}\n"
                f"verified: u.u' = v = u'.u, v.a = a.v = a, a.u.a = a")
    if not payload["verified"]:
        raise AssertionError("claim verification failed")
    _emit(payload, args.as_json, text)
    return 0


def _cmd_construct(args) -> int:
    kind = args.kind
    params = args.params
    if kind in ("line", "rose", "toeplitz"):
        if len(params) > 1:
            raise ParseError(f"construct {kind} takes at most one size")
        n = int(params[0]) if params else 1
        g = standard_graph(kind, n)
    elif kind == "mn":
        if len(params) != 2:
            raise ParseError("construct mn needs GRAPH N")
        g = m_n_graph(_load_graph(params[0]), int(params[1]))
    else:
        if len(params) < 2:
            raise ParseError("construct ef needs GRAPH EDGE[,EDGE...]")
        base = _load_graph(params[0])
        f_ids = [e for chunk in params[1:] for e in chunk.split(",") if e]
        g = e_f_graph(base, f_ids)
    _emit(graph_to_json(g), args.as_json, format_graph(g).rstrip("\n"))
    return 0


_DISPATCH = {
    "analyze": _cmd_analyze,
    "decide": _cmd_decide,
    "nf": _cmd_expr,
    "mul": _cmd_expr,
    "star": _cmd_expr,
    "phi": _cmd_phi,
    "witness": _cmd_witness,
    "construct": _cmd_construct,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return _DISPATCH[args.command](args)
    except (ParseError, GraphError, FieldError, AlgebraError, ShapeError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
