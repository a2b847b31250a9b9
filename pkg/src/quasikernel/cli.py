"""Command-line front end: generate, solve, verify, reduce, bounds, dot.

Exit codes: 0 success, 1 semantic failure (not a quasi-kernel, no solution
within the requested size, algorithm precondition or cap refusal), 2 input
error (unparsable file or invalid parameters).
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .construct import quasi_kernel_cl
from .digraph import (
    Digraph,
    NotQuasiKernelError,
    PreconditionError,
    QkCertificate,
    SplitDigraph,
    VerificationError,
)
from .exact import (
    CapExceededError,
    fpt_by_clique,
    fpt_by_independent,
    min_quasi_kernel,
)
from .files import (
    CertificateParseError,
    InstanceParseError,
    certificate_document,
    parse_instance,
    serialize_certificate,
    serialize_instance,
    to_dot,
)
from .instances import (
    GenerationError,
    family_labels,
    gen_dn,
    gen_dpn,
    gen_random_complete_split,
    gen_random_split,
    reduce_dds_to_qk,
)
from .split_qk import complete_split_min_qk, one_way_qk, peel_split, two_thirds_qk

EXACT_BOUNDS_LIMIT = 18


def _read_instance(path: str) -> Digraph | SplitDigraph:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _fmt_bound(bound: Fraction | None) -> str:
    return "null" if bound is None else f"{bound.numerator}/{bound.denominator}"


def _print_certificate_report(cert: QkCertificate, minimum: bool) -> None:
    print(f"algorithm: {cert.algorithm}")
    print(f"size: {cert.size}")
    print("set: " + " ".join(str(v) for v in cert.sorted_vertices()))
    print(f"bound: {_fmt_bound(cert.bound)}")
    print(f"minimum: {'true' if minimum else 'false'}")
    print("verified: true")


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        comments: list[str] = []
        if args.family == "dn":
            sd = gen_dn(args.n)
            comments = [f"label {name} {idx}" for idx, name in enumerate(family_labels(args.n))]
        elif args.family == "dpn":
            sd = gen_dpn(args.n)
            comments = [f"label {name} {idx}" for idx, name in enumerate(family_labels(args.n))]
        elif args.family == "random-split":
            sd = gen_random_split(
                args.seed,
                args.nk,
                args.ni,
                p_k_to_i=args.p_ki,
                p_i_to_k=args.p_ik,
                p_digon_k=args.p_digon,
                one_way=args.one_way,
                sink_free=args.sink_free,
            )
        else:
            sd = gen_random_complete_split(
                args.seed, args.nk, args.ni, p_digon=args.p_digon, sink_free=args.sink_free
            )
    except (ValueError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(serialize_instance(sd, comments=comments), args.out)
    return 0


def _auto_algorithm(inst: Digraph | SplitDigraph) -> str:
    if not isinstance(inst, SplitDigraph):
        return "cl"
    flags = inst.classify()
    if flags.complete_split:
        return "complete-split"
    if flags.one_way and flags.sink_free:
        return "one-way"
    if flags.sink_free:
        return "two-thirds"
    return "peel"


def _solve_with(inst: Digraph | SplitDigraph, algo: str, k: int | None) -> tuple[QkCertificate | None, bool]:
    """Run one algorithm; returns (certificate or None, minimality flag)."""
    graph = inst.graph if isinstance(inst, SplitDigraph) else inst
    if algo == "cl":
        return graph.certify(quasi_kernel_cl(graph), "cl"), False
    if not isinstance(inst, SplitDigraph):
        raise PreconditionError(f"algorithm '{algo}' needs a split partition (k line)")
    if algo == "one-way":
        return one_way_qk(inst), False
    if algo == "two-thirds":
        return two_thirds_qk(inst), False
    if algo == "peel":
        return peel_split(inst), False
    if algo == "complete-split":
        return complete_split_min_qk(inst), True
    if algo == "fpt-k":
        if k is None:
            raise PreconditionError("--k is required for fpt algorithms")
        return fpt_by_clique(inst, k), False
    if algo == "fpt-i":
        if k is None:
            raise PreconditionError("--k is required for fpt algorithms")
        return fpt_by_independent(inst, k), False
    if algo == "exact":
        report = min_quasi_kernel(inst, budget=k)
        return report.certificate, report.optimal
    raise PreconditionError(f"unknown algorithm '{algo}'")


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        inst = _read_instance(args.instance)
    except InstanceParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    algo = args.algo
    if algo == "auto":
        algo = _auto_algorithm(inst)
    try:
        cert, minimum = _solve_with(inst, algo, args.k)
    except (PreconditionError, CapExceededError, NotQuasiKernelError, VerificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cert is None:
        print(f"no quasi-kernel of size <= {args.k}")
        return 1
    graph = inst.graph if isinstance(inst, SplitDigraph) else inst
    cert.check(graph)
    _print_certificate_report(cert, minimum)
    if args.out:
        doc = certificate_document(cert, inst)
        Path(args.out).write_text(serialize_certificate(doc), encoding="utf-8")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        inst = _read_instance(args.instance)
    except InstanceParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    literal = args.set.strip()
    try:
        vertices = [int(f) for f in literal.split(",")] if literal else []
    except ValueError:
        print(f"error: set literal must be comma-separated integers: '{args.set}'", file=sys.stderr)
        return 2
    graph = inst.graph if isinstance(inst, SplitDigraph) else inst
    try:
        cert = graph.certify(vertices, "verify")
    except ValueError as exc:
        if isinstance(exc, NotQuasiKernelError):
            print(f"not a quasi-kernel: first offending vertex {exc.vertex}")
            return 1
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = certificate_document(cert, inst)
    _emit(serialize_certificate(doc), args.out)
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    try:
        inst = _read_instance(args.instance)
    except InstanceParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.q < 1:
        print("error: --q must be a positive integer", file=sys.stderr)
        return 2
    graph = inst.graph if isinstance(inst, SplitDigraph) else inst
    art = reduce_dds_to_qk(graph, args.q)
    comments = [f"reduction q={art.q} b={art.b} source_n={art.source_n} source_m={art.source_m}"]
    comments += [f"label {name} {idx}" for idx, name in enumerate(art.names)]
    _emit(serialize_instance(art.host, comments=comments), args.out)
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    try:
        inst = _read_instance(args.instance)
    except InstanceParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    graph = inst.graph if isinstance(inst, SplitDigraph) else inst
    rows: list[tuple[str, QkCertificate]] = []
    rows.append(("cl", graph.certify(quasi_kernel_cl(graph), "cl")))
    if isinstance(inst, SplitDigraph):
        flags = inst.classify()
        if flags.complete_split:
            rows.append(("complete-split", complete_split_min_qk(inst)))
        if flags.one_way and flags.sink_free:
            rows.append(("one-way", one_way_qk(inst)))
        if flags.sink_free:
            rows.append(("two-thirds", two_thirds_qk(inst)))
        else:
            rows.append(("peel", peel_split(inst)))
    if graph.n <= EXACT_BOUNDS_LIMIT:
        report = min_quasi_kernel(inst)
        if report.certificate is not None:
            rows.append(("exact", report.certificate))
    for name, cert in rows:
        cert.check(graph)
        print(f"{name} bound={_fmt_bound(cert.bound)} achieved={cert.size} verified=yes")
    return 0


def cmd_dot(args: argparse.Namespace) -> int:
    try:
        inst = _read_instance(args.instance)
    except InstanceParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(to_dot(inst), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qkdg", description="Small quasi-kernels in (split) digraphs"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance file")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    for fam in ("dn", "dpn"):
        p = gen_sub.add_parser(fam)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--out")
        p.set_defaults(func=cmd_gen)
    p = gen_sub.add_parser("random-split")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--nk", type=int, required=True)
    p.add_argument("--ni", type=int, required=True)
    p.add_argument("--p-ki", dest="p_ki", type=float, default=0.25)
    p.add_argument("--p-ik", dest="p_ik", type=float, default=0.25)
    p.add_argument("--p-digon", dest="p_digon", type=float, default=0.15)
    p.add_argument("--one-way", dest="one_way", action="store_true")
    p.add_argument("--sink-free", dest="sink_free", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    p = gen_sub.add_parser("random-complete-split")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--nk", type=int, required=True)
    p.add_argument("--ni", type=int, required=True)
    p.add_argument("--p-digon", dest="p_digon", type=float, default=0.15)
    p.add_argument("--sink-free", dest="sink_free", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    solve = sub.add_parser("solve", help="run a quasi-kernel algorithm")
    solve.add_argument("instance")
    solve.add_argument(
        "--algo",
        choices=["auto", "cl", "one-way", "two-thirds", "complete-split", "fpt-k", "fpt-i", "exact"],
        default="auto",
    )
    solve.add_argument("--k", type=int, default=None)
    solve.add_argument("--out")
    solve.set_defaults(func=cmd_solve)

    verify = sub.add_parser("verify", help="verify a vertex set against an instance")
    verify.add_argument("instance")
    verify.add_argument("set", help="comma-separated vertex indices, e.g. '0,4'")
    verify.add_argument("--out")
    verify.set_defaults(func=cmd_verify)

    reduce_p = sub.add_parser("reduce", help="emit the dominating-set gadget for an instance")
    reduce_p.add_argument("instance")
    reduce_p.add_argument("--q", type=int, required=True)
    reduce_p.add_argument("--out")
    reduce_p.set_defaults(func=cmd_reduce)

    bounds = sub.add_parser("bounds", help="tabulate applicable bounds vs achieved sizes")
    bounds.add_argument("instance")
    bounds.set_defaults(func=cmd_bounds)

    dot = sub.add_parser("dot", help="export an instance in DOT format")
    dot.add_argument("instance")
    dot.add_argument("--out")
    dot.set_defaults(func=cmd_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InstanceParseError, CertificateParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, VerificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def app() -> None:
    sys.exit(main())


if __name__ == "__main__":
    app()
