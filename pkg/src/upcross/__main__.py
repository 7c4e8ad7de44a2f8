import argparse
import logging
import re
import sys
import time

from upcross.config.config import (
    Config,
    ConfigLoader,
    USER_CONFIG_PATH,
    BUNDLED_CONFIG_PATH
)
from upcross.errors import UpcrossError
from upcross.logging.logging_config import BufferedLoggingHandler, setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2

# "-1/2" or "-1,1/4": a rational or a rational pair with a leading minus
NEGATIVE_VALUE = re.compile(r'-\d+(/\d+)?(,-?\d+(/\d+)?)*')


def show_config():
    """Display current configuration and sources"""
    print("upcross Configuration")
    print("=" * 60)
    print()

    print("Config file locations:")
    print(f"  User config:     {USER_CONFIG_PATH}")
    print(f"                   {'[exists]' if USER_CONFIG_PATH.exists() else '[not found]'}")
    print(f"  Bundled default: {BUNDLED_CONFIG_PATH}")
    print()

    print("Current configuration (source in brackets):")
    print()
    sources = Config.get_config_sources()

    configs = [
        ("ORACLE_MAX_GATES", Config.ORACLE_MAX_GATES),
        ("DENSE_SAMPLES_PER_SEGMENT", Config.DENSE_SAMPLES_PER_SEGMENT),
        ("SWEEP_CASES", Config.SWEEP_CASES),
        ("SWEEP_SEED", Config.SWEEP_SEED),
        ("SWEEP_WORKERS", Config.SWEEP_WORKERS),
        ("FIGURE_WIDTH", Config.FIGURE_WIDTH),
        ("FIGURE_HEIGHT", Config.FIGURE_HEIGHT),
    ]

    for key, value in configs:
        source = sources.get(key, 'unknown')
        print(f"  {key:30} = {value}")
        print(f"  {' ' * 30}   [{source}]")
        print()

    print("Priority order: cli_argument > environment > user_config > bundled_default")


def init_config():
    """Initialize user config file"""
    success, message = ConfigLoader.init_user_config()
    print(message)
    if success:
        print()
        print(f"Edit your configuration at: {USER_CONFIG_PATH}")
    return 0 if success else 1


def attach_negative_values(argv):
    """Rewrite "--flag -1,2" as "--flag=-1,2" so argparse does not read the value as an option."""
    merged = []
    for token in argv:
        if (merged and merged[-1].startswith('--') and '=' not in merged[-1]
                and NEGATIVE_VALUE.fullmatch(token)):
            merged[-1] = f'{merged[-1]}={token}'
        else:
            merged.append(token)
    return merged


def build_parser() -> argparse.ArgumentParser:
    from upcross.cli.commands import add_subcommands

    parser = argparse.ArgumentParser(
        prog='upcross',
        description="upcross: exact crossing inequalities for slope-constrained trajectories"
    )
    parser.add_argument(
        '--show-config',
        action='store_true',
        help='Display current configuration and exit'
    )
    parser.add_argument(
        '--init-config',
        action='store_true',
        help='Initialize user config file at ~/.config/upcross/ and exit'
    )
    parser.add_argument(
        '--format',
        choices=['text', 'json'],
        default='text',
        help='Report format (json is canonical and sorted)'
    )
    parser.add_argument(
        '--oracle-max-gates',
        type=int,
        default=None,
        help='Override the gate budget of the enumeration oracle'
    )
    add_subcommands(parser, {
        'cases': Config.SWEEP_CASES,
        'seed': Config.SWEEP_SEED,
        'workers': Config.SWEEP_WORKERS,
    })
    return parser


def main(argv=None):
    from upcross.cli.report import print_report
    from upcross.slalom.verify import InequalityViolation

    argv = attach_negative_values(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)

    # Override config with CLI arguments (before show_config so it's visible)
    if args.oracle_max_gates is not None:
        Config.override('ORACLE_MAX_GATES', args.oracle_max_gates)

    if args.show_config:
        show_config()
        return EXIT_OK

    if args.init_config:
        return init_config()

    if getattr(args, 'handler', None) is None:
        parser.print_help()
        return EXIT_INPUT_ERROR

    log_buffer = BufferedLoggingHandler(maxlen=200) if args.command == 'sweep' else None
    setup_logging(log_buffer=log_buffer)
    if log_buffer is not None:
        # Only failures go into the report, without timestamps
        log_buffer.setLevel(logging.WARNING)
        log_buffer.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    args.argv = argv

    started = time.perf_counter()
    try:
        report = args.handler(args)
    except InequalityViolation as e:
        logger.error(e.message)
        return EXIT_FAILED
    except UpcrossError as e:
        logger.error(e.message)
        print(f"error: {e.message}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    report.timing_ms = (time.perf_counter() - started) * 1000
    if log_buffer is not None:
        report.log = log_buffer.get_messages()
    print_report(report, args.format)
    return EXIT_OK if report.ok else EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
