"""Command-line interface.

Subcommands: ``index``, ``label``, ``verify``, ``qmr``, ``kotzig``,
``oracle``, ``tables``.  All output is machine-readable (JSON with sorted
keys, or CSV for arrays) and deterministic across runs and worker counts.

Exit codes: 0 success; 2 malformed input or domain error; 3 family not
covered by a closed form (rerun with ``--oracle``); 4 no constructive
labeling path; 5 the requested array provably does not exist; 6 an
exhaustive search exceeded its size cap or time budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import families
from .arrays import kotzig_array, qmr
from .bipartite import theta_bipartite
from .errors import (
    BudgetExceededError,
    ConstructionError,
    DomainError,
    GraphSpecError,
    InternalInconsistencyError,
    MagiclabError,
    SizeLimitError,
)
from .graphs import (
    CNode,
    KNode,
    LexNode,
    UNode,
    build_from_ast,
    parse_spec_ast,
)
from .labelings import Labeling, ThetaResult, verify_s_magic
from .oracle import (
    MAX_GENERAL_N,
    MAX_MULTIPARTITE_N,
    oracle_theta_general,
    oracle_theta_multipartite,
)
from .tripartite import label_tripartite, theta_tripartite

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3
EXIT_NO_CONSTRUCTION = 4
EXIT_NOT_EXISTS = 5
EXIT_BUDGET = 6


def _emit(payload) -> None:
    print(json.dumps(_jsonable(payload), sort_keys=True))


def _jsonable(value):
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


class _Unsupported(Exception):
    pass


def _plan(ast):
    """Map a spec AST onto the most specific closed-form module."""
    if isinstance(ast, KNode):
        sizes = tuple(sorted(ast.sizes))
        r = len(sizes)
        if r == 1:
            return ("edgeless", sizes)
        if r == 2 and sizes[0] >= 2:
            return ("bipartite", sizes)
        if r == 3 and sizes[0] >= 2:
            return ("tripartite", sizes)
        if r >= 4 and len(set(sizes)) == 1 and sizes[0] >= 2:
            return ("Kab", (sizes[0], r))
        raise _Unsupported(f"no closed form for parts {sizes}")
    if isinstance(ast, UNode):
        if ast.m == 1:
            return _plan(ast.inner)
        inner = ast.inner
        if isinstance(inner, KNode):
            sizes = tuple(sorted(inner.sizes))
            if len(set(sizes)) == 1 and sizes[0] >= 2 and len(sizes) >= 2:
                return ("mKab", (ast.m, sizes[0], len(sizes)))
        if isinstance(inner, LexNode) and isinstance(inner.inner, CNode) and inner.a >= 2:
            return ("mClex", (ast.m, inner.a, inner.inner.b))
        raise _Unsupported("no closed form for this disjoint union")
    if isinstance(ast, LexNode):
        if ast.a == 1:
            return _plan(ast.inner)
        if isinstance(ast.inner, CNode):
            return ("mClex", (1, ast.a, ast.inner.b))
        base = build_from_ast(ast.inner)
        if not base.is_regular:
            raise _Unsupported("blow-up base graph is not regular")
        return ("lex", (base, ast.a))
    raise _Unsupported("no closed form for this spec")


def _theta_for_plan(plan) -> ThetaResult:
    kind, params = plan
    if kind == "edgeless":
        return ThetaResult(lower=0, upper=0, case_tag="edgeless")
    if kind == "bipartite":
        return theta_bipartite(*params)
    if kind == "tripartite":
        return theta_tripartite(*params)
    if kind == "Kab":
        return families.theta_K_ab(*params)
    if kind == "mKab":
        return families.theta_mK_ab(*params)
    if kind == "mClex":
        return families.theta_mC_lex(*params)
    if kind == "lex":
        return families.theta_lex_regular(*params)
    raise AssertionError(kind)


def _run_oracle(args, ast):
    graph = build_from_ast(ast)
    spec = graph.partite_spec
    if spec is not None and spec.n <= MAX_MULTIPARTITE_N:
        return oracle_theta_multipartite(
            spec, args.max_excess, budget_seconds=args.budget_seconds,
            jobs=args.jobs, seed=args.seed,
        )
    if graph.vertex_count <= MAX_GENERAL_N:
        return oracle_theta_general(
            graph, args.max_excess, budget_seconds=args.budget_seconds,
            jobs=args.jobs, seed=args.seed,
        )
    raise DomainError(
        f"graph too large for the oracle "
        f"(multipartite cap {MAX_MULTIPARTITE_N}, general cap {MAX_GENERAL_N})"
    )


def cmd_index(args) -> int:
    ast = parse_spec_ast(args.spec)
    try:
        result = _theta_for_plan(_plan(ast))
    except _Unsupported as exc:
        if not args.oracle:
            print(f"error: {exc}; rerun with --oracle", file=sys.stderr)
            return EXIT_UNSUPPORTED
        result = _run_oracle(args, ast)
    payload = result.to_payload()
    payload.pop("witness", None)
    _emit(payload)
    return EXIT_OK


def _witness_for_plan(plan, args):
    """(graph, labeling or None, ThetaResult) for the label command."""
    kind, params = plan
    result = _theta_for_plan(plan)
    graph = None
    labeling = None
    if kind == "edgeless":
        n = sum(params)
        labeling = Labeling(tuple(range(1, n + 1)))
        graph = build_from_ast(KNode(params))
    elif kind == "bipartite":
        graph = build_from_ast(KNode(params))
        labeling = result.witness
    elif kind == "tripartite":
        graph = build_from_ast(KNode(params))
        labeling = label_tripartite(*params)
    elif result.theta == 1:
        family_params = dict(zip(_FAMILY_ARGS[kind], params))
        graph, labeling, _ = families.label_family_via_qmr(kind, **family_params)
    elif result.theta == 0 and args.certify:
        graph = _family_graph(kind, params)
        spec = graph.partite_spec
        if spec is not None and spec.n <= MAX_MULTIPARTITE_N:
            oracle_result = oracle_theta_multipartite(
                spec, 0, budget_seconds=args.budget_seconds,
                jobs=args.jobs, seed=args.seed,
            )
        elif graph.vertex_count <= MAX_GENERAL_N:
            oracle_result = oracle_theta_general(
                graph, 0, budget_seconds=args.budget_seconds,
                jobs=args.jobs, seed=args.seed,
            )
        else:
            raise DomainError("instance too large to certify by oracle")
        labeling = oracle_result.witness
    else:
        graph = _family_graph(kind, params)
    return graph, labeling, result


_FAMILY_ARGS = {
    "Kab": ("a", "b"),
    "mKab": ("m", "a", "b"),
    "mClex": ("m", "a", "b"),
    "lex": ("g", "a"),
}


def _family_graph(kind, params):
    from .graphs import (
        PartiteSpec,
        build_complete_multipartite,
        build_cycle,
        disjoint_union,
        lex_blowup,
    )

    if kind == "Kab":
        a, b = params
        return build_complete_multipartite(PartiteSpec((a,) * b))
    if kind == "mKab":
        m, a, b = params
        return disjoint_union(m, build_complete_multipartite(PartiteSpec((a,) * b)))
    if kind == "mClex":
        m, a, b = params
        return disjoint_union(m, lex_blowup(build_cycle(b), a))
    if kind == "lex":
        g, a = params
        return lex_blowup(g, a)
    raise AssertionError(kind)


def cmd_label(args) -> int:
    ast = parse_spec_ast(args.spec)
    if args.verify_only:
        return cmd_verify(args, labeling_path=args.verify_only)
    try:
        plan = _plan(ast)
    except _Unsupported as exc:
        if not args.oracle:
            print(f"error: {exc}; rerun with --oracle", file=sys.stderr)
            return EXIT_UNSUPPORTED
        graph = build_from_ast(ast)
        result = _run_oracle(args, ast)
        labeling = result.witness
        if labeling is None:
            _emit(result.to_payload())
            return EXIT_NO_CONSTRUCTION
        return _print_certified(graph, labeling)
    graph, labeling, result = _witness_for_plan(plan, args)
    if labeling is None:
        payload = result.to_payload()
        payload.pop("witness", None)
        _emit(payload)
        return EXIT_NO_CONSTRUCTION
    return _print_certified(graph, labeling)


def _print_certified(graph, labeling) -> int:
    report = verify_s_magic(graph, labeling)
    if not report.is_magic:
        raise InternalInconsistencyError("labeling failed verification before printing")
    _emit({
        "constant": report.constant,
        "eta": labeling.eta,
        "labels": {str(v): lab for v, lab in enumerate(labeling.labels)},
    })
    return EXIT_OK


def cmd_verify(args, labeling_path=None) -> int:
    path = labeling_path or args.labeling
    graph = build_from_ast(parse_spec_ast(args.spec))
    labeling = Labeling.from_json(Path(path).read_text())
    if labeling.n != graph.vertex_count:
        raise DomainError(
            f"labeling covers {labeling.n} vertices, graph has {graph.vertex_count}"
        )
    report = verify_s_magic(graph, labeling)
    print(report.to_json())
    return EXIT_OK if report.is_magic else 1


def _print_array(arr, fmt) -> int:
    if fmt == "json":
        _emit({
            "d": arr.hole,
            "entries": [list(row) for row in arr.entries],
            "rho": arr.rho,
            "sigma": arr.sigma,
        })
        return EXIT_OK
    if arr.kind == "qmr":
        print(f"# d={arr.hole} rho={arr.rho} sigma={arr.sigma}")
    else:
        print(f"# c={arr.sigma}")
    print(arr.to_csv())
    return EXIT_OK


def cmd_qmr(args) -> int:
    arr = qmr(args.a, args.b)
    if arr is None:
        if args.a == 1:
            reason = "single-row rectangles cannot have constant column sums"
        else:
            reason = "no QMR(a,2) exists when a = 1 (mod 4)"
        print(f"QMR({args.a},{args.b}) does not exist: {reason}", file=sys.stderr)
        return EXIT_NOT_EXISTS
    return _print_array(arr, args.format)


def cmd_kotzig(args) -> int:
    arr = kotzig_array(args.a, args.b)
    if arr is None:
        if args.a == 1:
            reason = "a single row cannot have constant column sums"
        else:
            reason = "an odd number of rows requires an odd number of columns"
        print(f"KA({args.a},{args.b}) does not exist: {reason}", file=sys.stderr)
        return EXIT_NOT_EXISTS
    return _print_array(arr, args.format)


def cmd_oracle(args) -> int:
    ast = parse_spec_ast(args.spec)
    result = _run_oracle(args, ast)
    _emit(result.to_payload())
    return EXIT_OK


def cmd_tables(args) -> int:
    _emit(list(families.DECISION_TABLES))
    return EXIT_OK


def _add_search_flags(parser):
    parser.add_argument("--max-excess", type=int, default=16,
                        help="largest label excess the oracle scans")
    parser.add_argument("--budget-seconds", type=float, default=None,
                        help="search budget (default MAGICLAB_BUDGET_SECONDS or 60)")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallel workers; results are identical for any value")
    parser.add_argument("--seed", type=int, default=0,
                        help="search iteration order; never affects computed values")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magiclab",
        description="Distance magic indices and certified labelings of partite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="compute the distance magic index of a graph spec")
    p.add_argument("spec")
    p.add_argument("--oracle", action="store_true",
                   help="fall back to exhaustive search for uncovered families")
    _add_search_flags(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("label", help="emit a certified S-magic labeling")
    p.add_argument("spec")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--certify", action="store_true",
                   help="use the oracle to witness index-0 family members")
    p.add_argument("--verify-only", metavar="LABELFILE",
                   help="verify a labeling file instead of constructing one")
    _add_search_flags(p)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="verify a labeling file against a graph spec")
    p.add_argument("spec")
    p.add_argument("labeling")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("qmr", help="construct a quasimagic rectangle")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_qmr)

    p = sub.add_parser("kotzig", help="construct a Kotzig array")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_kotzig)

    p = sub.add_parser("oracle", help="exhaustive index search on a small graph")
    p.add_argument("spec")
    _add_search_flags(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("tables", help="print the distance-magicness decision tables")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphSpecError, SizeLimitError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ConstructionError, InternalInconsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except MagiclabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
