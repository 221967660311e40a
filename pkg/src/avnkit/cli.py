"""Command-line front end: ``avnkit <subcommand> ...``.

Exit codes: 0 success, 1 property failure, 2 usage or parse error,
3 size cap exceeded, 4 cross-check mismatch.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import checks
from .graphstate import (
    extract_avn_triple,
    has_avn,
    lc_orbit,
    local_complement,
    parse_graph,
)
from .semantics import empirical_model, fixture, is_strongly_contextual, stabiliser_state, xor_theory_of_model
from .subgroup import SizeCapError, StabiliserGroup, equation_of, is_avn, qubit_labels, xor_theory
from .triples import (
    BRUTE_FORCE_CAP,
    ENUMERATION_CAP,
    certificate_elements,
    count_brute,
    count_formula,
    count_structured,
    enumerate_triples,
)

EXIT_OK, EXIT_PROPERTY, EXIT_USAGE, EXIT_CAP, EXIT_MISMATCH = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _cap(args, default: int) -> int:
    if args.max_qubits is None:
        return default
    print(f"warning: size cap raised from {default} to {args.max_qubits}", file=sys.stderr)
    return args.max_qubits


def cmd_enumerate(args, out) -> int:
    if args.qubits < 3:
        raise UsageError("--qubits must be at least 3")
    cap = _cap(args, ENUMERATION_CAP)
    stream = enumerate_triples(args.qubits, include_phases=args.phases, ordered=args.ordered, cap=cap)
    count = 0
    for t in stream:
        if args.limit is not None and count >= args.limit:
            break
        out.write((t.to_json() if args.format == "records" else t.format()) + "\n")
        count += 1
    out.write(f"count={count}\n")
    return EXIT_OK


def cmd_count(args, out) -> int:
    n = args.qubits
    if n < 3:
        raise UsageError("--qubits must be at least 3")
    formula = count_formula(n)
    if args.mode == "formula":
        out.write(f"count={formula}\n")
        return EXIT_OK
    if args.mode == "brute":
        value = 8 * count_brute(n, cap=_cap(args, BRUTE_FORCE_CAP))
    else:
        value = count_structured(n, include_phases=True)
    out.write(f"count={value}\nformula={formula}\n")
    if value == formula:
        out.write("MATCH\n")
        return EXIT_OK
    out.write("MISMATCH\n")
    return EXIT_MISMATCH


def _certificate_lines(elements, labels) -> list[str]:
    lines = [f"  {str(p):>{elements[0].n + 2}}  {equation_of(p).format(labels)}" for p in elements]
    lines.append("  sum: 0 = 1")
    return lines


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source) as fh:
        return fh.read()


def cmd_graph(args, out) -> int:
    try:
        g = parse_graph(_read(args.source))
    except (ValueError, OSError) as exc:
        raise UsageError(f"cannot read graph: {exc}") from exc
    if args.action == "avn":
        if has_avn(g):
            u = next(v for v in range(g.n) if g.degree(v) >= 2)
            out.write(f"avn: yes (vertex {u} has degree {g.degree(u)})\n")
        else:
            out.write("avn: no\n")
    elif args.action == "triple":
        found = extract_avn_triple(g)
        if found is None:
            out.write("triple: none\n")
            return EXIT_OK
        (u, v, w), t, case = found
        out.write(f"vertices: {u} {v} {w}\ncase: {case}\ntriple: {t.format()}\ncertificate:\n")
        out.write("\n".join(_certificate_lines(certificate_elements(t), qubit_labels(g.n))) + "\n")
    elif args.action == "lc":
        if args.vertex is None:
            raise UsageError("lc needs a vertex")
        try:
            out.write(local_complement(g, args.vertex).format() + "\n")
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif args.action == "orbit":
        orbit = sorted(lc_orbit(g, cap=_cap(args, 8)), key=lambda h: h.edges)
        out.write(f"orbit size: {len(orbit)}\n")
        for h in orbit:
            out.write("edges=" + ",".join(f"{a}-{b}" for a, b in h.edges) + "\n")
    return EXIT_OK


def _group(text: str) -> StabiliserGroup:
    try:
        return StabiliserGroup.parse(text)
    except (ValueError, IndexError) as exc:
        raise UsageError(f"bad generators: {exc}") from exc


def cmd_theory(args, out) -> int:
    s = _group(args.generators)
    if args.show_theory:
        out.write(xor_theory(s).format() + "\n")
    verdict = is_avn(s)
    labels = qubit_labels(s.n)
    if verdict:
        out.write("AvN: yes\ncertificate:\n")
        out.write("\n".join(_certificate_lines(list(verdict.certificate), labels)) + "\n")
    else:
        assign = " ".join(f"{lab}={b}" for lab, b in zip(labels, verdict.assignment))
        out.write(f"AvN: no\nassignment: {assign}\n")
    return EXIT_OK


def cmd_model(args, out) -> int:
    if args.source in ("ghz3", "prbox", "cluster4"):
        model = fixture(args.source)
    else:
        model = empirical_model(stabiliser_state(_group(args.source)))
    out.write(model.format() + "\n")
    if args.theory:
        out.write("theory:\n" + xor_theory_of_model(model).format() + "\n")
    if args.contextual:
        verdict = "yes" if is_strongly_contextual(model) else "no"
        out.write(f"strongly contextual: {verdict}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        fn = checks.SUITES[name]
        kwargs = {"seed": args.seed} if "seed" in fn.__code__.co_varnames else {}
        result = fn(**kwargs)
        out.write(result.line() + "\n")
        failed |= not result.passed
    return EXIT_PROPERTY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="avnkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, qubits=False):
        if qubits:
            p.add_argument("--qubits", type=int, required=True)
        p.add_argument("--max-qubits", type=int, default=None, help="override the size cap")

    p = sub.add_parser("enumerate", help="list AvN triples in canonical order")
    common(p, qubits=True)
    p.add_argument("--phases", action="store_true", help="include all sign choices")
    p.add_argument("--ordered", action="store_true", help="emit all six slot orders")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count AvN triples")
    common(p, qubits=True)
    p.add_argument("--mode", choices=("formula", "brute", "structured"), default="formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("graph", help="graph-state checks")
    common(p)
    p.add_argument("source", help="graph file, or - for stdin")
    p.add_argument("action", choices=("avn", "triple", "lc", "orbit"))
    p.add_argument("vertex", type=int, nargs="?")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("theory", help="decide AvN for a generator list")
    common(p)
    p.add_argument("generators", help='comma-separated words, e.g. "XXX,ZZI,IZZ"')
    p.add_argument("--show-theory", action="store_true")
    p.set_defaults(func=cmd_theory)

    p = sub.add_parser("model", help="exact empirical model table")
    common(p)
    p.add_argument("source", help="ghz3, prbox, cluster4, or a maximal generator list")
    p.add_argument("--theory", action="store_true", help="also print the XOR theory")
    p.add_argument("--contextual", action="store_true", help="also decide strong contextuality")
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("verify", help="run the invariant suites")
    common(p)
    p.add_argument("--suite", choices=("all", *checks.SUITES), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
