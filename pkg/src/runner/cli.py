"""Command Line Module

Batch front-end for the toolkit. Subcommands:

    density     exact densities per q, written to report.json and summary.csv
    verify      named structural checks per q
    pgl-claims  exhaustive checks bounding maximum intersecting sets of PGL(2,q)
    export      DOT, edge-list and witness files
    table       predicted weak density array next to the computed one

The process exits 0 only when every computed value matches its prediction
and every check passes.
"""

from typing import List, Optional, Sequence
from pathlib import Path
import argparse
import logging
import sys

from src.errors import ConfigError
from src.field import prime_power
from src.runner.claims import cmd_pgl_claims
from src.runner.config import GROUP_CHOICES, LEVEL_CHOICES, RunConfig, build_run_config, create_config
from src.runner.exporter import cmd_export
from src.runner.pipeline import cmd_density
from src.runner.reporting import (
    render_density_table,
    render_verdicts,
    write_report,
    write_summary,
    write_verdicts,
)
from src.runner.verify import cmd_verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def parse_q_range(text: str) -> List[int]:
    """Odd prime powers in the inclusive range LO:HI"""
    try:
        low, high = (int(part) for part in text.split(':'))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected LO:HI, got {text!r}")
    return [q for q in range(max(low, 3), high + 1) if q % 2 == 1 and prime_power(q) is not None]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--q', type=int, nargs='+', default=[], help="Field orders")
    common.add_argument('--q-range', type=parse_q_range, default=[], help="Odd prime powers in LO:HI")
    common.add_argument('--group', choices=GROUP_CHOICES, default=None)
    common.add_argument('--budget', type=int, default=None, help="Node budget per solver task")
    common.add_argument('--workers', type=int, default=None)
    common.add_argument('--deterministic', action='store_true', help="Run single-worker")
    common.add_argument('--out', default=None, help="Output directory")
    common.add_argument('--level', choices=LEVEL_CHOICES, default=None)
    common.add_argument('--no-dot', dest='dot', action='store_false', default=None)
    common.add_argument('--no-edges', dest='edges', action='store_false', default=None)
    common.add_argument('--no-witness', dest='witness', action='store_false', default=None)

    parser = argparse.ArgumentParser(
        prog='density-toolkit',
        description="Intersection densities of PSL(2,q) and PGL(2,q) on the cosets of S3",
    )
    parser.add_argument('--config-path', default=None, help="Configuration directory")
    parser.add_argument('--env', default=None, help="Configuration environment (dev/test/prod)")

    commands = parser.add_subparsers(dest='command', required=True)
    commands.add_parser('density', parents=[common], help="Compute densities and compare with predictions")
    commands.add_parser('verify', parents=[common], help="Run structural checks")
    commands.add_parser('pgl-claims', parents=[common], help="Check the PGL(2,q) clique bounds")
    commands.add_parser('export', parents=[common], help="Write graph and witness files")
    commands.add_parser('table', parents=[common], help="Print predicted and computed density arrays")
    return parser


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    toolkit = create_config(args.config_path, args.env)
    toolkit.configure_logging()
    q_list = list(dict.fromkeys(list(args.q) + list(args.q_range)))
    if not q_list:
        raise ConfigError("No q requested; use --q or --q-range")
    return build_run_config(
        toolkit,
        q_list=q_list,
        group=args.group,
        budget=args.budget,
        workers=args.workers,
        deterministic=args.deterministic or None,
        out=args.out,
        level=args.level,
        dot=args.dot,
        edges=args.edges,
        witness=args.witness,
    )


def run_density(config: RunConfig, show_table: bool) -> int:
    reports = cmd_density(config)
    out = Path(config.out)
    write_report(reports, out)
    write_summary(reports, [g.value for g in config.groups], out)
    if show_table:
        print(render_density_table(reports), end='')
    else:
        for report in reports:
            status = 'ok' if report.ok else (report.error_type or 'MISMATCH')
            densities = ', '.join(f"{name}={entry.rho}" for name, entry in report.groups.items())
            print(f"q={report.q}: {densities} [{status}]")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED


def run_verdicts(verdicts, out: Path, name: str) -> int:
    write_verdicts(verdicts, out, name)
    print(render_verdicts(verdicts), end='')
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = run_config_from_args(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logger.info(f"Running {args.command} for q in {config.q_list} with {config.workers} worker(s)")
    out = Path(config.out)

    if args.command == 'density':
        return run_density(config, show_table=False)
    if args.command == 'table':
        return run_density(config, show_table=True)
    if args.command == 'verify':
        return run_verdicts(cmd_verify(config), out, 'verify.csv')
    if args.command == 'pgl-claims':
        return run_verdicts(cmd_pgl_claims(config), out, 'pgl-claims.csv')

    result = cmd_export(config)
    for q, paths in sorted(result.files.items()):
        print(f"q={q}: {len(paths)} file(s)" + (f" [{result.errors[q]}]" if q in result.errors else ""))
    return EXIT_OK if result.ok else EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
