"""
Provide Command Line Interface for the package.
"""

import io
import sys

import configargparse

from ..core import PKG_LOGGER, critical_error_exit
from ..exceptions import NonConvergenceError, VerificationFailure
from ..util import wrap_cli_error
from .commands import (BoundsCommand, ConstructCommand, SpectralCommand,
                       SweepCommand, TuranCountCommand, VerifyCommand)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3


def exit_code_for(exc):
    """Map a package exception onto the process exit status."""
    if isinstance(exc, VerificationFailure):
        return EXIT_VERIFICATION
    if isinstance(exc, NonConvergenceError):
        return EXIT_NONCONVERGENCE
    return EXIT_USAGE


class CliqueSpectraApp(object):
    """Provide CLI app functionality: one registered command per subcommand."""

    def __init__(self, config=None, stream=None, error_stream=None):
        """
        Initialize CliqueSpectraApp instance.

        Args:
        ----
            config (:obj:`configargparse.Namespace`): parsed options
            stream (file): data output; defaults to `--output` or stdout
            error_stream (file): diagnostics; defaults to stderr
        """
        self.config = config or configargparse.Namespace()
        self.stream = stream
        self.error_stream = error_stream
        # Mapping of subcommands to command instances
        self.commands = {}
        self.command_id = None
        self.add_command('spectral', SpectralCommand)
        self.add_command('construct', ConstructCommand)
        self.add_command('bounds', BoundsCommand)
        self.add_command('sweep', SweepCommand)
        self.add_command('verify', VerifyCommand)
        self.add_command('turan-count', TuranCountCommand)
        subcommand = getattr(self.config, 'subcommand', None)
        if subcommand:
            self.set_command(subcommand)

    @property
    def current_command(self):
        return self.commands[self.command_id]

    def add_command(self, command_id, command_cls, *args, **kwargs):
        """Instantiate a command of the app with a unique `command_id`."""
        assert command_id not in self.commands, "command ID must be unique"
        self.commands[command_id] = command_cls(self, *args, **kwargs)
        return self.commands[command_id]

    def set_command(self, command_id):
        assert command_id in self.commands, "command ID must have been added."
        self.command_id = command_id

    def on_fail(self, attempting, exc):
        critical_error_exit(
            attempting, exc, code=exit_code_for(exc), stream=self.error_stream
        )

    def _execute(self):
        command = self.current_command
        PKG_LOGGER.info("running {}".format(command.command_usage))
        status = wrap_cli_error(
            command.run, self.on_fail, attempting=command.command_title
        )
        return status or EXIT_OK

    def run(self):
        """Run the selected command and return its exit status."""
        output = getattr(self.config, 'output', None)
        if self.stream is None and output:
            with io.open(output, 'w', encoding='ascii', newline='') as stream:
                self.stream = stream
                try:
                    return self._execute()
                finally:
                    self.stream = None
        if self.stream is None:
            self.stream = sys.stdout
        return self._execute()
