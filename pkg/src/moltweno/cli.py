"""Command-line entry point: `moltweno run|converge --config <ini>`."""
from __future__ import annotations

import argparse
import os
import sys

from .harness import ConfigError, RunFailure, convergence_study, parse_config, run

THREADS_ENV = "MOLTWENO_THREADS"


def _apply_threads(n) -> None:
    if n is None:
        return
    try:
        import numba

        numba.set_num_threads(max(1, int(n)))
    except (ImportError, ValueError):
        pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moltweno",
        description="Implicit WENO transport benchmarks (advection, rotation, "
                    "Vlasov-Poisson)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("run", "execute one case, write CSV artifacts"),
                            ("converge", "refinement study with observed orders")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, help="INI configuration file")
        p.add_argument("--out", default=None, help="output directory "
                       "(overrides [output] dir)")
        p.add_argument("--threads", type=int, default=None,
                       help=f"worker threads (env {THREADS_ENV} overrides)")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    _apply_threads(os.environ.get(THREADS_ENV, args.threads))
    try:
        config = parse_config(args.config)
        if args.command == "run":
            summary = run(config, out_dir=args.out)
            print(f"wrote {summary['diagnostics']} and {summary['final_state']} "
                  f"({summary['steps']} steps, min over run "
                  f"{summary['min_over_run']:.3e})")
            if "l1_error" in summary:
                print(f"L1 error {summary['l1_error']:.6e}, "
                      f"Linf error {summary['linf_error']:.6e}")
        else:
            convergence_study(config, out_dir=args.out)
    except (ConfigError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RunFailure as exc:
        print(f"run failed: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
