"""Provide entrypoint for package."""

import sys

from .cli.app import CliqueSpectraApp
from .core import get_config, setup_logging


def run(argv=None, stream=None, error_stream=None):
    """
    Parse `argv`, run the subcommand and return the exit status.

    Usage errors from the argument parser exit with status 2 and are returned
    rather than raised.
    """
    try:
        config = get_config(argv)

        setup_logging(config)

        # hand over to cli

        app = CliqueSpectraApp(
            config=config, stream=stream, error_stream=error_stream
        )
        return app.run()
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2


def main():
    """Provide a console script entrypoint."""
    sys.exit(run())


if __name__ == '__main__':
    main()
