"""Command line: ``hamcond check|ham|enumerate|search|verify-lemmas|sharpness``.

Exit codes: 0 clean, 1 counterexample or violation found, 2 usage or parse error.
Vertices are 0-indexed everywhere.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .graph_core import GraphError, is_valid_cycle
from .patterns import THEOREMS, Pattern, check_hypothesis, enumerate_induced

USAGE_ERROR = 2


def _theorem(text: str) -> str:
    t = text.upper()
    if t not in THEOREMS:
        raise argparse.ArgumentTypeError(f"unknown theorem {text!r}")
    return t


def _n_range(text: str) -> tuple[int, int]:
    """``7`` or ``3-7``."""
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return lo, hi


def _probabilities(text: str) -> tuple[float, ...]:
    try:
        ps = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad probability list {text!r}") from None
    if any(not 0.0 <= p <= 1.0 for p in ps):
        raise argparse.ArgumentTypeError("probabilities must lie in [0, 1]")
    return ps


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hamcond", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate a theorem's hypothesis")
    p.add_argument("file")
    p.add_argument("--theorem", type=_theorem, required=True)

    p = sub.add_parser("ham", help="find a Hamilton cycle")
    p.add_argument("file")
    p.add_argument("--theorem", type=_theorem, choices=("T10", "T11"), required=True)
    p.add_argument("--mode", choices=("proof", "exact"), default="proof")

    p = sub.add_parser("enumerate", help="list induced copies of a pattern")
    p.add_argument("file")
    p.add_argument("--pattern", choices=[x.value for x in Pattern], required=True)

    p = sub.add_parser("search", help="hunt for counterexamples")
    p.add_argument("--n", type=_n_range, required=True, help="N or LO-HI")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--exhaustive", action="store_true", help="every graph (default)")
    src.add_argument("--random", type=int, metavar="COUNT")
    src.add_argument("--file", metavar="PATH", help="graph6 stream")
    p.add_argument("--p", type=_probabilities, default=(0.5,), help="edge probability, or a comma list")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--theorem", type=_theorem, required=True)
    p.add_argument("--labeled", action="store_true", help="evaluate every labelled graph separately")
    p.add_argument("--mode", choices=("proof", "exact"), default="proof")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--table", metavar="PATH", help="write per-n counts as TSV")
    p.add_argument("--plot", metavar="PATH", help="write a per-n bar chart")
    p.add_argument("--timing", action="store_true", help="print wall time")

    p = sub.add_parser("verify-lemmas", help="lemma suites and implication chains")
    p.add_argument("--n", type=_n_range, required=True, help="N or LO-HI")
    p.add_argument("--labeled", action="store_true")
    p.add_argument("--line-graphs", action="store_true",
                   help="add 2-connected o-heavy non-Hamiltonian graphs built from line graphs")

    p = sub.add_parser("sharpness", help="2-connected 1-heavy non-Hamiltonian graphs meeting the pair conditions")
    p.add_argument("--n", type=_n_range, required=True)
    return ap


def _out(lines) -> None:
    for line in lines:
        print(line)


def _cmd_check(args) -> int:
    from .cli_io import read_graphs

    code = 0
    for g in read_graphs(args.file):
        rep = check_hypothesis(g, args.theorem)
        print(f"{args.theorem}: {rep.verdict}")
        if rep.witness is not None:
            print(f"witness: {rep.witness}")
            code = 1
    return code


def _cmd_ham(args) -> int:
    from .cli_io import read_graph
    from .engine import find_hamiltonian

    g = read_graph(args.file)
    mode = "exact" if args.mode == "exact" else "proof_driven"
    cert = find_hamiltonian(g, args.theorem, mode=mode)
    if cert.is_hamiltonian:
        assert is_valid_cycle(g, cert.cycle) and len(cert.cycle) == g.n
        print(" ".join(map(str, cert.cycle.seq)))
        return 0
    if cert.outcome == "hypothesis_violation":
        print(f"{args.theorem}: violated")
        print(f"witness: {cert.report.witness}")
    else:
        print(f"{cert.outcome}")
        _out(f"trace: {t}" for t in cert.trace)
    return 1


def _cmd_enumerate(args) -> int:
    from .cli_io import read_graphs

    for g in read_graphs(args.file):
        _out(str(c) for c in enumerate_induced(g, Pattern(args.pattern)))
    return 0


def _cmd_search(args) -> int:
    from . import harness

    lo, hi = args.n
    mode = "exact" if args.mode == "exact" else "proof_driven"
    lifted = None
    if args.random is not None:
        src = harness.GraphSource.random(hi, args.random, args.p, args.seed, n_min=lo)
        report = harness.search_counterexamples(args.theorem, src, mode, args.jobs)
    elif args.file:
        report = harness.search_counterexamples(args.theorem, harness.GraphSource.file(args.file), mode, args.jobs)
    elif args.labeled or hi > 7:
        src = harness.GraphSource.exhaustive(hi, n_min=lo, reduce=False, allow_large=args.labeled)
        report = harness.search_counterexamples(args.theorem, src, mode, args.jobs)
    else:
        report = harness.SearchReport(args.theorem)
        lifted = [0, 0]
        for n in range(lo, hi + 1):
            res = harness.verify_theorem_exhaustive(args.theorem, n, mode)
            report = report.merge(res.report)
            lifted[0] += res.lifted
            lifted[1] += res.lift_failures
    _out(report.lines(timing=args.timing))
    if lifted is not None:
        print(f"lifted cycles: {lifted[0]}")
        print(f"lift failures: {lifted[1]}")
    if args.table or args.plot:
        from .report import plot_reports, write_table

        if args.table:
            write_table([report], args.table)
        if args.plot:
            plot_reports([report], args.plot)
    return 0 if report.clean and not (lifted and lifted[1]) else 1


def _cmd_verify_lemmas(args) -> int:
    from . import harness

    lo, hi = args.n
    src = harness.GraphSource.exhaustive(hi, n_min=lo, reduce=not args.labeled, allow_large=args.labeled)
    graphs = list(src)
    if args.line_graphs:
        graphs += harness.guarded_lemma_graphs()
    rep = harness.verify_lemmas(graphs)
    _out(rep.lines())
    return 0 if rep.clean else 1


def _cmd_sharpness(args) -> int:
    from . import harness
    from .cli_io import encode_graph6

    lo, hi = args.n
    found = harness.sharpness_candidates(harness.GraphSource.exhaustive(hi, n_min=lo))
    _out(encode_graph6(g) for g in found)
    print(f"candidates: {len(found)}")
    return 0


COMMANDS = {
    "check": _cmd_check,
    "ham": _cmd_ham,
    "enumerate": _cmd_enumerate,
    "search": _cmd_search,
    "verify-lemmas": _cmd_verify_lemmas,
    "sharpness": _cmd_sharpness,
}


def cli_dispatch(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    try:
        return COMMANDS[args.command](args)
    except (GraphError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(cli_dispatch())


if __name__ == "__main__":
    main()
