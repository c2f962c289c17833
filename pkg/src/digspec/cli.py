"""Command-line front end.

Subcommands compose through .dg/.grp/transformation files or stdin; there
is no session state.  Exit codes: 0 success or PASS, 1 assertion or suite
violation, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from digspec import oracle, perm, reldig, spectrum, sync
from digspec.spectrum import Branch1NotSatisfied, DichotomyViolation


def _use_color() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _status(text: str) -> str:
    if not _use_color():
        return text
    codes = {"PASS": "32", "FAIL": "31", "SKIP": "33"}
    code = codes.get(text)
    return f"\x1b[{code}m{text}\x1b[0m" if code else text


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def report_json(report) -> str:
    """Serialize any report object with a stable field order; absent
    optional fields are omitted and integers stay unquoted."""
    payload = report.to_dict() if hasattr(report, "to_dict") else report
    return json.dumps(payload)


def _print_kv(payload: dict, indent: int = 0) -> None:
    pad = "  " * indent
    for key, value in payload.items():
        if isinstance(value, dict):
            print(f"{pad}{key}:")
            _print_kv(value, indent + 1)
        else:
            print(f"{pad}{key}: {value}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digspec",
        description="neighbourhood-intersection spectra, primitivity, "
        "synchronisation checks, and brute-force verification suites",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named digraph and emit .dg text")
    c.add_argument("name", choices=[
        "delta", "kneser", "clebsch", "hamming-k4", "complete", "diagonal", "full",
    ])
    c.add_argument("params", nargs="*", type=int)
    c.add_argument("--loops", action="store_true")
    c.add_argument("-o", "--output", default=None)

    for name, help_text in (
        ("spectrum", "spectrum report for a digraph"),
        ("classify", "full dichotomy report for a digraph"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("digraph", nargs="?", default="-")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("aut", help="automorphism generators, order, and flags")
    p.add_argument("digraph", nargs="?", default="-")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("design", help="covering-branch design extraction")
    p.add_argument("digraph", nargs="?", default="-")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("feasible", help="feasible (d, n) pairs for a given kappa")
    p.add_argument("kappa", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sync", help="does the group synchronise the map?")
    p.add_argument("group")
    p.add_argument("transformation")
    p.add_argument("--witness", action="store_true")

    p = sub.add_parser("collapse-graph", help="non-collapsible-pair graph")
    p.add_argument("group")
    p.add_argument("transformation")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("check-t44", help="kernel-type (p,2,1,...,1) synchronisation check")
    p.add_argument("group")
    p.add_argument("transformation")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle", help="run a verification suite")
    p.add_argument("suite", choices=["circulant", "small", "kappa4", "property"])
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--n5", action="store_true", help="allow the order-5 exhaustive scan")
    return parser


def _cmd_construct(args) -> int:
    name, params = args.name, args.params
    builders = {
        "delta": (3, lambda: reldig.delta_circulant(*params)),
        "kneser": (2, lambda: reldig.kneser(params[0], params[1], loops=args.loops)),
        "clebsch": (0, lambda: reldig.clebsch(loops=args.loops)),
        "hamming-k4": (0, lambda: reldig.hamming_k4(loops=args.loops)),
        "complete": (1, lambda: reldig.complete(params[0])),
        "diagonal": (1, lambda: reldig.diagonal(params[0])),
        "full": (1, lambda: reldig.full(params[0])),
    }
    arity, build = builders[name]
    if len(params) != arity:
        raise ValueError(f"construct {name} expects {arity} integer parameter(s)")
    _write_text(args.output, reldig.emit_dg(build()))
    return 0


def _cmd_spectrum(args, classify: bool) -> int:
    g = reldig.parse_dg(_read_text(args.digraph))
    report = spectrum.classify_theorem_main(g) if classify else spectrum.spectrum(g)
    if args.json:
        print(report_json(report))
    else:
        _print_kv(report.to_dict())
    return 0


def _cmd_aut(args) -> int:
    from digspec import aut as aut_mod

    g = reldig.parse_dg(_read_text(args.digraph))
    group = aut_mod.automorphism_group(g)
    payload = {
        "n": group.n,
        "order": perm.group_order(group),
        "transitive": perm.is_transitive(group),
        "primitive": perm.is_primitive(group),
        "generators": [list(gen.images) for gen in group.generators],
    }
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"n: {payload['n']}")
        print(f"order: {payload['order']}")
        print(f"transitive: {payload['transitive']}")
        print(f"primitive: {payload['primitive']}")
        print("generators:")
        for gen in group.generators:
            print("  " + " ".join(map(str, gen.images)))
    return 0


def _cmd_design(args) -> int:
    g = reldig.parse_dg(_read_text(args.digraph))
    design = spectrum.design_from_branch1(g)
    if args.json:
        print(report_json(design))
    else:
        _print_kv(design.to_dict())
    return 0


def _cmd_feasible(args) -> int:
    feas = spectrum.feasible_parameters(args.kappa)
    if args.json:
        print(report_json(feas))
        return 0
    print(f"kappa: {feas.kappa}")
    print(f"d values: {[e.d for e in feas.entries]}")
    print(f"pairs: {[(e.d, e.n) for e in feas.entries]}")
    print(f"reduced (2d <= n): {[(e.d, e.n) for e in feas.entries if e.reduced]}")
    print(f"n_max: {feas.n_max}")
    return 0


def _load_pair(args):
    G = perm.parse_grp(_read_text(args.group))
    f = sync.parse_trans(_read_text(args.transformation))
    return G, f


def _cmd_sync(args) -> int:
    G, f = _load_pair(args)
    result = sync.synchronises(G, f)
    print(f"synchronises: {result.synchronises}")
    print(f"reached_images: {result.reached_images}")
    if args.witness and result.witness is not None:
        print("witness: " + " ".join(result.witness))
    return 0


def _cmd_collapse(args) -> int:
    G, f = _load_pair(args)
    graph = sync.non_collapsible_graph(G, f)
    _write_text(args.output, reldig.emit_dg(graph))
    return 0


def _cmd_check_t44(args) -> int:
    G, f = _load_pair(args)
    verdict = sync.check_theorem_4_4(G, f)
    if args.json:
        print(report_json(verdict))
    else:
        print(f"status: {_status(verdict.status)}")
        if verdict.reason:
            print(f"reason: {verdict.reason}")
        if verdict.kernel_type is not None:
            print(f"kernel_type: {list(verdict.kernel_type.parts)}")
    return 1 if verdict.status == "FAIL" else 0


def _cmd_oracle(args) -> int:
    suite, params = args.suite, args.params
    if suite == "circulant":
        if len(params) != 1:
            raise ValueError("oracle circulant expects a prime p")
        report = oracle.circulant_corollary_suite(params[0])
    elif suite == "small":
        if len(params) != 1:
            raise ValueError("oracle small expects an order 2..5")
        report = oracle.exhaustive_small_suite(params[0], allow_n5=args.n5)
    elif suite == "kappa4":
        report = oracle.kappa4_fixture_suite()
    else:
        report = oracle.property_suite()
    print(report_json(report))
    verdict = "PASS" if report.ok else "FAIL"
    print(f"{_status(verdict)} {report.suite}: {len(report.violations)} violation(s)")
    return 0 if report.ok else 1


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "spectrum":
            return _cmd_spectrum(args, classify=False)
        if args.command == "classify":
            return _cmd_spectrum(args, classify=True)
        if args.command == "aut":
            return _cmd_aut(args)
        if args.command == "design":
            return _cmd_design(args)
        if args.command == "feasible":
            return _cmd_feasible(args)
        if args.command == "sync":
            return _cmd_sync(args)
        if args.command == "collapse-graph":
            return _cmd_collapse(args)
        if args.command == "check-t44":
            return _cmd_check_t44(args)
        if args.command == "oracle":
            return _cmd_oracle(args)
    except DichotomyViolation as exc:
        print(f"assertion violation: {exc}", file=sys.stderr)
        return 1
    except Branch1NotSatisfied as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, IndexError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
