"""Provide core functionality to the clique_spectra module."""

import logging
import os
import sys

import configargparse

from . import PKG_NAME
from .exceptions import CliqueSpectraConfigException

PKG_LOGGER = logging.getLogger(PKG_NAME)

SUBCOMMANDS = [
    'spectral', 'construct', 'bounds', 'sweep', 'verify', 'turan-count'
]

FAMILIES = [
    'complete', 'empty', 'cycle', 'path', 'turan', 'multipartite',
    'k-join-turan', 'k3-join-empty', 'flower', 'k5-union-empty', 'g0'
]

THEOREMS = ['1.8', '1.7-top', '1.7-explore', '1.3', '1.8-compare', '2.10']

LOG_FORMAT = '%(asctime)s %(name)s %(levelname)s %(message)s'


def get_config(argv=None):
    """Parse arguments from cli, env and config files."""
    argv = sys.argv[1:] if argv is None else argv

    parser = configargparse.ArgumentParser(
        prog=PKG_NAME,
        description=(
            "Compute r-clique spectral radii of graphs and check extremal "
            "results about 2K_r-free graphs"
        ),
    )

    parser.add('--config-file', '-c', is_config_file=True)
    parser.add('subcommand', choices=SUBCOMMANDS)

    # Graph input
    parser.add('--graph6', help="A single graph in graph6 format")
    parser.add(
        '--input', metavar="PATH",
        help="A file of graph6 lines (catalog for sweeps)"
    )
    parser.add(
        '--catalog-dir', env_var='CLIQUE_SPECTRA_CATALOG_DIR', metavar="DIR",
        help="Directory holding graph<n>.g6 catalogs for n > 7"
    )

    # Orders and sizes
    parser.add('--r', type=int, help="Clique order of the forbidden pair")
    parser.add('--k', type=int, help="Clique order of the objective")
    parser.add('--n', type=int, help="Vertex count")
    parser.add('--m', type=int, help="Order of the joined complete graph")
    parser.add('--parts', help="Comma separated part sizes")
    parser.add('--petals', type=int, help="Number of flower petals")

    # Numerics
    parser.add('--tol', type=float, default=1e-10)
    parser.add('--max-iter', type=int, default=200000)
    parser.add('--shift', type=float, default=1.0)
    parser.add('--slack', type=float, default=1e-8)
    parser.add(
        '--method', choices=['iteration', 'closed-form'], default='iteration'
    )

    # Commands
    parser.add('--objective', choices=['mu', 'mu-sum', 'clique-count'])
    parser.add('--theorem', choices=THEOREMS)
    parser.add('--family', choices=FAMILIES)

    # Output
    parser.add('--emit', choices=['text', 'graph6', 'csv', 'json'])
    parser.add('--output', metavar="PATH")
    parser.add('--jobs', type=int, default=os.cpu_count() or 1)
    parser.add('--progress', action='store_true')
    parser.add(
        '--keep-records', action='store_true',
        help="Write every admitted graph to CSV output and disable pruning"
    )
    parser.add(
        '--timing', action='store_true',
        help="Include runtime in JSON summaries (breaks byte-identical reruns)"
    )

    # Debug / Logging
    parser.add('--log-file')
    parser.add(
        '--verbosity', choices=[
            'CRITICAL', 'ERROR', 'WARNING', 'INFO', 'DEBUG'
        ], default='WARNING'
    )

    config = parser.parse_args(argv)

    if config.jobs < 1:
        parser.error("--jobs must be at least 1")

    return config


def require(config, *names):
    """
    Fetch mandatory options from a config namespace.

    Raises
    ------
        CliqueSpectraConfigException: If any of `names` was not provided.
    """
    missing = [
        '--' + name.replace('_', '-') for name in names
        if getattr(config, name, None) is None
    ]
    if missing:
        raise CliqueSpectraConfigException(
            "{} requires {}".format(config.subcommand, ", ".join(missing))
        )
    values = tuple(getattr(config, name) for name in names)
    return values[0] if len(values) == 1 else values


def critical_error_exit(message=None, exc=None, code=2, stream=None):
    """
    Clean up program and exit, displaying and logging a message.

    The message, the exception and its remedy go to the error stream, never
    to the data output.
    """
    stream = stream or sys.stderr
    message = "Failure in %s" % message if message else "Fatal Error"
    PKG_LOGGER.critical(message)
    if exc:
        PKG_LOGGER.critical("{} {}".format(exc.__class__.__name__, exc))

    lines = [message]
    if exc:
        lines.append(str(exc))
        if getattr(exc, 'remedy', None):
            lines.append(str(exc.remedy))
    stream.write("\n".join(lines) + "\n")
    stream.flush()

    sys.exit(code)


def setup_logging(config):
    """
    Configure the logging module.

    Diagnostics go to stderr, and to a file when one is configured.

    Args
    ----
        config (:obj:`configargparse.Namespace`): the config namespace which
            must contain `verbosity` (str) and `log_file` (str or None)
            attributes
    """
    try:
        PKG_LOGGER.setLevel(getattr(logging, config.verbosity))
    except (AttributeError, TypeError) as exc:
        critical_error_exit("invalid log level string: %s" % (
            config.verbosity,
        ), exc)
    formatter = logging.Formatter(LOG_FORMAT)
    for handler in list(PKG_LOGGER.handlers):
        PKG_LOGGER.removeHandler(handler)
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(formatter)
    PKG_LOGGER.addHandler(stream_handler)
    if getattr(config, 'log_file', None):
        file_handler = logging.FileHandler(config.log_file)
        file_handler.setFormatter(formatter)
        PKG_LOGGER.addHandler(file_handler)
    PKG_LOGGER.propagate = False
