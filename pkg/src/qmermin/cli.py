"""``qmermin`` command line: grover-scan, qft-scan and hyperdet-scan, each writing CSV."""
from __future__ import annotations

import argparse
import os
import sys

from .errors import NumericalConsistencyError
from .qft import PeriodicSpec, valid_periodic_pairs
from .scans import GROVER_MAX_QUBITS, ScanResult, format_value, grover_scan, hyperdet_scan, qft_scan, write_csv
from .walk import WalkCache

EXIT_USAGE = 2
EXIT_NUMERICAL = 1


class UsageError(Exception):
    pass


def _log(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _emit(result: ScanResult, out: str | None) -> None:
    if out is None:
        write_csv(result, sys.stdout)
        return
    # newline="" keeps "\n" line endings on every platform
    with open(out, "w", newline="", encoding="ascii") as fh:
        write_csv(result, fh)


def _spec(l: int, r: int, n: int) -> PeriodicSpec:
    try:
        return PeriodicSpec(l, r, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cache(args) -> WalkCache | None:
    return WalkCache(args.cache) if args.cache else None


def cmd_grover(args) -> None:
    if not 2 <= args.qubits <= GROVER_MAX_QUBITS:
        raise UsageError(f"--qubits must be in 2..{GROVER_MAX_QUBITS}")
    if not 0 <= args.target < 2**args.qubits:
        raise UsageError(f"--target must be in 0..{2**args.qubits - 1}")
    progress = _log if (args.verbose or args.qubits >= 10) else None
    result = grover_scan(args.qubits, args.target, args.seed, args.restarts, args.jobs, _cache(args), progress)
    _emit(result, args.out)
    _log(f"k_max={result.k_max} peak={format_value(result.peak)}")


def cmd_qft(args) -> None:
    progress = _log if args.verbose else None
    if args.all_periodic:
        if not args.out:
            raise UsageError("--all-periodic needs --out DIR")
        os.makedirs(args.out, exist_ok=True)
        for l, r in valid_periodic_pairs(args.qubits):
            result = qft_scan(l, r, args.qubits, args.seed, args.restarts, args.jobs, _cache(args), progress)
            _emit(result, os.path.join(args.out, f"period_{l}-{r}.csv"))
            _log(f"(l,r)=({l},{r}) k_max={result.k_max} peak={format_value(result.peak)}")
        return
    if args.shift is None or args.period is None:
        raise UsageError("qft-scan needs --shift and --period (or --all-periodic)")
    _spec(args.shift, args.period, args.qubits)
    result = qft_scan(args.shift, args.period, args.qubits, args.seed, args.restarts, args.jobs, _cache(args), progress)
    _emit(result, args.out)
    _log(f"k_max={result.k_max} peak={format_value(result.peak)}")


def cmd_hyperdet(args) -> None:
    if args.shift is None or args.period is None:
        raise UsageError("hyperdet-scan needs --shift and --period")
    _spec(args.shift, args.period, 4)
    result = hyperdet_scan(args.shift, args.period)
    _emit(result, args.out)
    if args.verbose:
        _log(f"max |Delta| = {format_value(max(result.values))}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qmermin", description="Mermin-polynomial scans of Grover and QFT runs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, walk=True):
        p.add_argument("--out", help="output CSV path (default: standard output)")
        p.add_argument("--verbose", action="store_true", help="progress messages on standard error")
        if walk:
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--restarts", type=int, default=5, help="independent walks per optimization")
            p.add_argument("--jobs", type=int, default=1, help="parallel workers")
            p.add_argument("--cache", help="JSON file memoizing finished walks; safe to delete")

    g = sub.add_parser("grover-scan", help="Mermin value along Grover iterations")
    g.add_argument("--qubits", type=int, required=True)
    g.add_argument("--target", type=int, default=0, help="searched basis index")
    common(g)
    g.set_defaults(func=cmd_grover)

    q = sub.add_parser("qft-scan", help="per-step optimized Mermin value along the QFT of a periodic state")
    q.add_argument("--qubits", type=int, default=4)
    q.add_argument("--shift", type=int)
    q.add_argument("--period", type=int)
    q.add_argument("--all-periodic", action="store_true", help="every valid (shift, period); --out is a directory")
    common(q)
    q.set_defaults(func=cmd_qft)

    h = sub.add_parser("hyperdet-scan", help="|Delta_2222| along the 4-qubit QFT of a periodic state")
    h.add_argument("--shift", type=int)
    h.add_argument("--period", type=int)
    common(h, walk=False)
    h.set_defaults(func=cmd_hyperdet)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "restarts", 1) < 1 or getattr(args, "jobs", 1) < 1:
        parser.print_usage(sys.stderr)
        _log("qmermin: error: --restarts and --jobs must be positive")
        return EXIT_USAGE
    try:
        args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        _log(f"qmermin: error: {exc}")
        return EXIT_USAGE
    except NumericalConsistencyError as exc:
        _log(f"qmermin: numerical consistency error: {exc}")
        return EXIT_NUMERICAL
    return 0


if __name__ == "__main__":
    sys.exit(main())
