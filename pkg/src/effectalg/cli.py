"""Command-line entry point.

Exit codes are a stable contract for scripts: 0 for success or a true
property, 1 for a false property or an infeasible query, 2 for malformed
input.  All output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import census, classify, concrete, core, states, symbolic


def _load_algebra(path: str, close: bool = False) -> core.EffectAlgebra:
    if path.endswith(".ea"):
        table, names = core.load_ea(path)
        return core.validate(table, names)
    if path.endswith(".omp"):
        return concrete.to_algebra(concrete.load_omp(path, close=close))
    raise core.ParseError(f"{path}: expected a .ea or .omp file")


def _fmt_pair(alg: core.EffectAlgebra, pair) -> str:
    a, b = pair
    return f"({alg.label(a)}, {alg.label(b)})"


def _parse_points(text: str) -> list[symbolic.Point]:
    points = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        region, _, idx = tok.rpartition(":")
        if not region:
            raise core.ParseError(f"point {tok!r} must look like REGION:INDEX")
        points.append(symbolic.Point(region, int(idx)))
    return points


def _parse_symbolic_element(alg: symbolic.SymbolicAlgebra, text: str) -> symbolic.SymbolicElement:
    if text == "empty":
        return alg.zero()
    if text == "full":
        return alg.one()
    kind, _, rest = text.partition(":")
    if kind == "chain":
        if not isinstance(alg, symbolic.BalancedAlgebra):
            raise core.ParseError("chain:<n> candidates exist only for 'balanced'")
        return alg.chain_element(int(rest))
    if kind == "points":
        return alg.from_points(_parse_points(rest))
    if kind == "cofinite":
        missing = _parse_points(rest)
        per = {r.name: set() for r in alg.regions}
        for p in missing:
            per[p.region].add(p.index)
        parts = []
        for r in alg.regions:
            if not r.infinite:
                raise core.ParseError("cofinite candidates need infinite regions only")
            parts.append(symbolic.RegionPart(True, frozenset(per[r.name])))
        elem = symbolic.SymbolicElement(tuple(parts))
        if not alg.is_member(elem):
            raise core.ParseError(f"candidate {alg.element_str(elem)} is not a member")
        return elem
    raise core.ParseError(
        f"candidate {text!r} not understood; use empty, full, chain:<n>, "
        "points:R:i,..., or cofinite:R:i,..."
    )


# -- subcommands -----------------------------------------------------------------


def _cmd_validate(args) -> int:
    if args.file.endswith(".ea"):
        table, _ = core.load_ea(args.file)
        violations = core.check_table(table)
        if violations:
            for v in violations:
                print(f"violation: {v}")
            return 2
        print(f"valid effect algebra on {table.n} elements")
        return 0
    system_violations = concrete.check_system(*_load_omp_raw(args.file, args.closure))
    if system_violations:
        for v in system_violations:
            print(f"violation: {v}")
        return 2
    alg = _load_algebra(args.file, close=args.closure)
    print(f"valid set system; algebra has {alg.n} elements")
    return 0


def _load_omp_raw(path: str, close: bool):
    with open(path, "r", encoding="utf-8") as fh:
        m, blocks, _ = concrete.parse_omp(fh.read())
    if close:
        return m, list(concrete.closure(m, blocks).blocks)
    return m, blocks


def _cmd_classify(args) -> int:
    alg = _load_algebra(args.file, close=args.closure)
    report = classify.classify(alg, with_states=args.with_states)
    for line in report.lines():
        print(line)
    return 0


def _cmd_states(args) -> int:
    alg = _load_algebra(args.file, close=args.closure)
    if args.two_valued:
        found = states.two_valued_states(alg)
        print(f"{len(found)} two-valued states")
        for k, s in enumerate(found):
            print(f"state {k}: " + " ".join(str(v) for v in s.values))
        return 0
    pins = [_parse_pin(p) for p in args.pin]
    target = args.minimize if args.minimize is not None else args.maximize
    if target is None:
        s = states.lp_feasible(alg, pins)
        if s is None:
            print("infeasible")
            return 1
        print("feasible: " + " ".join(str(v) for v in s.values))
        return 0
    sense = "min" if args.minimize is not None else "max"
    res = states.lp_extremize(alg, target, sense, pins)
    if res is None:
        print("infeasible")
        return 1
    value, s = res
    print(f"{sense} s({alg.label(target)}) = {value}")
    print("at state: " + " ".join(str(v) for v in s.values))
    return 0


def _parse_pin(text: str) -> tuple[int, Fraction]:
    elem, _, value = text.partition("=")
    if not value:
        raise core.ParseError(f"pin {text!r} must look like <element>=<value>")
    return int(elem), Fraction(value)


def _cmd_check(args) -> int:
    alg = _load_algebra(args.file, close=args.closure)
    loaded: Optional[list[states.State]] = None
    if args.states:
        loaded = [s for _, s in states.load_states(args.states, alg)]

    if args.property == "unital":
        if loaded is not None and not args.full:
            ok, elem = states.unital_set_check(alg, loaded)
        else:
            ok, elem = states.unital_full_check(alg)
        if ok:
            print("unital: true")
            return 0
        print(f"unital: false, no state pins {alg.label(elem)}")
        return 1

    if args.property == "sod":
        if loaded is not None and not args.full:
            ok, pair = states.sod_set_check(alg, loaded)
        else:
            ok, pair = states.sod_full_check(alg)
        if ok:
            print("strongly order determining: true")
            return 0
        print(f"strongly order determining: false at {_fmt_pair(alg, pair)}")
        return 1

    # Jauch-Piron: each given state, or the whole state space
    if loaded is not None and not args.full:
        for k, s in enumerate(loaded):
            ok, pair = states.jp_state_check(alg, s)
            if not ok:
                print(f"jauch-piron: false, state {k} fails at {_fmt_pair(alg, pair)}")
                return 1
        print(f"jauch-piron: true for all {len(loaded)} given states")
        return 0
    ok, failure = states.jp_algebra_check(alg)
    if ok:
        print("jauch-piron: true (every state)")
        return 0
    print(f"jauch-piron: false at {_fmt_pair(alg, failure.pair)}")
    print("witness state: " + " ".join(str(v) for v in failure.state.values))
    return 1


def _cmd_theorems(args) -> int:
    report = census.theorem_harness(args.max_n)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def _cmd_enumerate(args) -> int:
    lines = census.census_lines(args.n)
    if args.census:
        with open(args.census, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
        print(f"{len(lines)} algebras written to {args.census}")
    else:
        for line in lines:
            print(line)
    return 0


def _cmd_witness(args) -> int:
    alg = symbolic.build(args.construction)
    op = args.operation

    if op == "no-maximal":
        candidate = _parse_symbolic_element(alg, args.candidate or "empty")
        try:
            ref = symbolic.no_maximal_refuter(alg, candidate)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        _print_refutation(alg, ref)
        return 0

    if op == "not-sod":
        sample = _parse_points(args.sample) if args.sample else ()
        ref = symbolic.not_sod_witness(alg, sample)
        _print_refutation(alg, ref)
        return 0

    if op == "chain-no-upper-bound":
        candidate = _parse_symbolic_element(alg, args.candidate or "empty")
        try:
            n, ref = symbolic.chain_no_upper_bound_refuter(alg, candidate)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        _print_refutation(alg, ref)
        return 0

    if op == "no-supremum":
        candidate = _parse_symbolic_element(alg, args.candidate or "full")
        system = {"even": lambda i: i % 2 == 0, "odd": lambda i: i % 2 == 1}[args.system]
        try:
            _, ref = symbolic.no_supremum_refuter(
                alg, candidate, system, f"{args.system}-index points"
            )
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        _print_refutation(alg, ref)
        return 0

    if op == "chain-bound":
        indices = [int(t) for t in args.sample.split(",")] if args.sample else (0, 1, 2)
        bound = symbolic.chain_bound(alg, indices)
        print(f"maximum chain cardinality: {bound}")
        return 0

    print(f"error: operation {op!r} not available", file=sys.stderr)
    return 2


def _print_refutation(alg: symbolic.SymbolicAlgebra, ref: symbolic.Refutation) -> None:
    print(f"refutation kind={ref.kind}")
    print(f"claim refuted: {ref.claim}")
    witness = ref.witness
    if isinstance(witness, symbolic.SymbolicElement):
        print(f"witness: {alg.element_str(witness)}")
    elif isinstance(witness, tuple) and all(
        isinstance(w, symbolic.SymbolicElement) for w in witness
    ):
        print("witness: " + ", ".join(alg.element_str(w) for w in witness))
    else:
        print(f"witness: {witness}")
    for c in ref.checks:
        print(f"check: {c}")


def _cmd_export_dot(args) -> int:
    alg = _load_algebra(args.file, close=args.closure)
    text = core.hasse_dot(alg)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {args.output}")
    return 0


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="effectalg",
        description="Workbench for finite and symbolically infinite effect algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a .ea table or .omp set system")
    p.add_argument("file")
    p.add_argument("--closure", action="store_true", help="close .omp blocks first")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("classify", help="structural classification report")
    p.add_argument("file")
    p.add_argument("--closure", action="store_true")
    p.add_argument("--with-states", action="store_true", help="add state-space flags")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("states", help="enumerate two-valued states or query the polytope")
    p.add_argument("file")
    p.add_argument("--closure", action="store_true")
    p.add_argument("--two-valued", action="store_true")
    p.add_argument("--pin", action="append", default=[], metavar="I=V")
    p.add_argument("--minimize", type=int, metavar="J")
    p.add_argument("--maximize", type=int, metavar="J")
    p.set_defaults(func=_cmd_states)

    p = sub.add_parser("check", help="decide unital / sod / jauch-piron")
    p.add_argument("property", choices=["unital", "sod", "jp"])
    p.add_argument("file")
    p.add_argument("--closure", action="store_true")
    p.add_argument("--states", metavar="FILE.st", help="check this state set")
    p.add_argument("--full", action="store_true", help="quantify over all states")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("theorems", help="run the theorem harness over the census")
    p.add_argument("--max-n", type=int, default=5)
    p.set_defaults(func=_cmd_theorems)

    p = sub.add_parser("enumerate", help="all effect algebras of one size, up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--census", metavar="OUT", help="write lines to a file")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("witness", help="constructive refutations on the infinite examples")
    p.add_argument("construction", choices=list(symbolic.CONSTRUCTIONS))
    p.add_argument(
        "operation",
        choices=["no-maximal", "not-sod", "chain-no-upper-bound", "no-supremum", "chain-bound"],
    )
    p.add_argument("--candidate", help="empty | full | chain:<n> | points:R:i,... | cofinite:R:i,...")
    p.add_argument("--sample", help="points (REGION:INDEX,...) or indices, operation dependent")
    p.add_argument("--system", choices=["even", "odd"], default="even")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("export-dot", help="Hasse diagram in DOT syntax")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--closure", action="store_true")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except core.AxiomError as exc:
        for v in exc.violations:
            print(f"violation: {v}", file=sys.stderr)
        return 2
    except (core.ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
