"""Command-line interface.

Exit codes::

    0  success
    1  a verification or cross-check failed
    2  bad input (unparsable group, unsupported family, invalid formation)
    3  a work budget was exceeded
"""

import argparse
import json
import os
import sys

from .arith import is_zsigmondy_exception
from .catalog import psl, psp4
from .config import BudgetExceeded, budgets, override
from .formation import (FormationSpec, PrimePartition, in_product_class, n_closure_check,
                        soluble_covering_membership, validate_spec)
from .graph import sylow_graph, to_dot, to_json, to_table
from .groupspec import GroupSpecError, build_group
from .lie import LieTypeSpec, predicted_edges
from .subgroups import is_soluble
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

M23_ENV = "SYLOWGRAPH_INCLUDE_M23"


class InputError(Exception):
    pass


# -- compute --------------------------------------------------------------

def cmd_compute(args, out):
    G = build_group(args.group)
    graph = sylow_graph(G, args.group)
    if args.format == "json":
        out.write(to_json(graph, indent=2) + "\n")
    elif args.format == "dot":
        out.write(to_dot(graph))
    else:
        out.write(to_table(graph) + "\n")
    return EXIT_OK


# -- verify ---------------------------------------------------------------

def cmd_verify(args, out):
    include = args.include_m23 or os.environ.get(M23_ENV, "") not in ("", "0")
    report = run_suites(args.suites or ["all"], include_m23=include, max_degree=args.max_degree)
    out.write((report.to_json() if args.format == "json" else report.to_text()) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


# -- predict --------------------------------------------------------------

_TYPES = ("A", "2A", "D", "2D", "E6", "2E6")


def _lie_spec(args):
    """Map CLI parameters to a LieTypeSpec.

    ``--l`` is the dimension for linear types (``A`` with ``--l 4`` is
    ``L_4(q) = PSL(4, q)``) and the parameter of ``POmega(4l+2, q)`` for
    orthogonal types, i.e. rank ``2l+1``.
    """
    family = args.type
    if args.eps == "-" and family in ("A", "D", "E6"):
        family = "2" + family
    if family in ("E6", "2E6"):
        return LieTypeSpec.from_q(family, 6, args.q)
    if args.l is None:
        raise InputError(f"--l is required for type {args.type}")
    if family in ("A", "2A"):
        return LieTypeSpec.from_q(family, args.l - 1, args.q)
    return LieTypeSpec.from_q(family, 2 * args.l + 1, args.q)


def _constructible(spec):
    """A permutation model of ``spec`` from the catalog, or ``None``."""
    if spec.family == "A" and spec.rank + 1 <= 4:
        try:
            return psl(spec.rank + 1, spec.q)
        except ValueError:
            return None
    if spec.family in ("2A", "2D") and spec.rank == 3 and spec.q == 2:
        # PSU(4, 2) = POmega-(6, 2) = PSp4(3)
        return psp4(3)
    if spec.family == "D" and spec.rank == 3:
        # POmega+(6, q) is PSL(4, q)
        try:
            return psl(4, spec.q)
        except ValueError:
            return None
    return None


def _sigma_info(spec):
    from .lie import sigma_partition_linear, sigma_partition_orthogonal
    if spec.family in ("A", "2A"):
        l = spec.rank + 1
        part = sigma_partition_linear(l, spec.eps, spec.q)
        ks = [j if spec.eps > 0 or j % 2 == 0 else 2 * j for j in range(1, l + 1) if j <= l < 2 * j]
    elif spec.family in ("D", "2D"):
        l = (spec.rank - 1) // 2
        part = sigma_partition_orthogonal(l, spec.eps, spec.q)
        ks = [2 * l + 1 if spec.eps > 0 else 4 * l + 2]
    else:
        return None, []
    notes = [f"no primitive prime for ({spec.q}, {k}): Zsigmondy exception"
             for k in ks if is_zsigmondy_exception(spec.q, k)]
    return part, notes


def _fmt_set(s):
    return "{" + ", ".join(map(str, sorted(s))) + "}"


def cmd_predict(args, out):
    try:
        spec = _lie_spec(args)
        arrows = sorted(predicted_edges(spec))
        part, notes = _sigma_info(spec)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    data = {"group": str(spec), "arrows": [
        {"from": a.source, "to": a.target, "justification": a.justification} for a in arrows]}
    lines = [f"group {spec}"]
    if part is not None:
        lines.append(f"sigma1 = {_fmt_set(part.sigma1)}  sigma2 = {_fmt_set(part.sigma2)}  "
                     f"sigma3 = {_fmt_set(part.sigma3)}")
        data["sigma"] = {k: sorted(getattr(part, k)) for k in ("sigma1", "sigma2", "sigma3")}
    for n in notes:
        lines.append(f"note: {n}")
    data["notes"] = notes
    lines.append("predicted arrows:")
    for a in arrows:
        lines.append(f"  {a.source} -> {a.target}   [{a.justification}]")
    status = EXIT_OK
    if args.cross_check:
        G = _constructible(spec)
        if G is None:
            lines.append("cross-check: no constructible permutation model, skipped")
            data["cross_check"] = None
        else:
            graph = sylow_graph(G, str(spec))
            have = graph.arrow_pairs()
            missing = [(a.source, a.target) for a in arrows if (a.source, a.target) not in have]
            ok = not missing
            lines.append(f"cross-check against computed graph of degree {G.degree}: "
                         + ("all predictions present" if ok else f"MISSING {missing}"))
            data["cross_check"] = {"passed": ok, "missing": missing,
                                   "computed": sorted(have)}
            status = EXIT_OK if ok else EXIT_FAIL
    out.write((json.dumps(data, indent=2) if args.format == "json" else "\n".join(lines)) + "\n")
    return status


# -- formation ------------------------------------------------------------

def _parse_partition(text):
    try:
        return PrimePartition([{int(p) for p in block.split(",") if p.strip()}
                               for block in text.split("|")])
    except ValueError as exc:
        raise InputError(f"bad partition {text!r}: {exc}") from None


def _parse_relation(text):
    rel = {}
    try:
        for item in text.split(";"):
            if not item.strip():
                continue
            p, rhs = item.split(":")
            rel[int(p)] = {int(q) for q in rhs.split(",") if q.strip()}
    except ValueError:
        raise InputError(f"bad relation {text!r}; expected like '2:2,3;3:2,3;5:5'") from None
    return FormationSpec.from_relation(rel)


def cmd_formation(args, out):
    G = build_group(args.group)
    part = None
    if args.partition:
        part = _parse_partition(args.partition)
        spec = FormationSpec.from_partition(part)
    else:
        spec = _parse_relation(args.relation)
    if not validate_spec(spec):
        raise InputError("relation must satisfy p in pi(p) <= pi and q in pi(p) iff p in pi(q)")
    soluble = is_soluble(G)
    lines = [f"group {args.group}, order {G.order}, soluble: {soluble}"]
    status = EXIT_OK
    try:
        product = in_product_class(G, part) if part is not None else None
        covering = soluble_covering_membership(G, spec) if soluble else None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if product is not None:
        lines.append(f"direct product of Hall subgroups over {part}: {product}")
    if covering is not None:
        lines.append(f"member of the covering formation: {covering}")
    if product is not None and covering is not None and product != covering:
        lines.append("MISMATCH between the two membership tests")
        status = EXIT_FAIL
    if part is not None:
        member = lambda H: in_product_class(H, part)
    elif soluble:
        member = lambda H: soluble_covering_membership(H, spec)
    else:
        member = None
    if member is not None:
        rep = n_closure_check(G, member)
        for (p, m), (_, n) in zip(rep.normalizer_members, rep.normalizer_orders):
            lines.append(f"  N_G(G_{p}) of order {n}: {m}")
        lines.append(f"G member iff every Sylow normalizer is: {rep.holds}")
        if not rep.holds:
            status = EXIT_FAIL
    else:
        lines.append("no effective membership test for an insoluble group and a general relation")
    out.write("\n".join(lines) + "\n")
    return status


# -- parser ---------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, help=f"element streaming limit (default {budgets.max_order})")
    common.add_argument("--max-class-size", type=int,
                        help=f"conjugacy orbit limit (default {budgets.max_class_size})")
    common.add_argument("--max-search-nodes", type=int,
                        help=f"backtrack search node limit (default {budgets.max_search_nodes})")
    common.add_argument("--seed", type=int, help=f"random seed (default {budgets.seed})")

    parser = argparse.ArgumentParser(prog="sylowgraph", description="Sylow graphs of finite permutation groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="compute the Sylow graph of a catalog group")
    p.add_argument("group", help="e.g. A8, 'PSL2(27):3', 'S3 x C5'")
    p.add_argument("--format", choices=("json", "dot", "table"), default="table")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suites", nargs="*", choices=sorted(SUITES) + ["all"], metavar="suite",
                   help=f"one or more of {', '.join(SUITES)}, all (default all)")
    p.add_argument("--include-m23", action="store_true",
                   help=f"also check M23 (slow; or set {M23_ENV}=1)")
    p.add_argument("--max-degree", type=int, default=12, help="largest n for S_n and A_n (default 12)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("predict", parents=[common], help="predicted arrows for a group of Lie type")
    p.add_argument("--type", required=True, choices=_TYPES)
    p.add_argument("--l", type=int, help="dimension for A/2A; l of POmega(4l+2, q) for D/2D")
    p.add_argument("--eps", choices=("+", "-"), default="+")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--cross-check", action="store_true",
                   help="compare with the computed graph when a permutation model exists")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("formation", parents=[common], help="membership in a covering formation")
    p.add_argument("group")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--partition", help="prime blocks, e.g. '2,3|5|7'")
    g.add_argument("--relation", help="explicit pi(p) lists, e.g. '2:2,3;3:2,3;5:5'")
    p.set_defaults(func=cmd_formation)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    changes = {k: getattr(args, k) for k in ("max_order", "max_class_size", "max_search_nodes", "seed")
               if getattr(args, k) is not None}
    try:
        with override(**changes):
            return args.func(args, out)
    except (GroupSpecError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
