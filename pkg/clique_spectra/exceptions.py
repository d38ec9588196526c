"""Provide exceptions to the clique spectra module."""


class CliqueSpectraException(Exception):
    """Superclass exceptions raised within this module."""
    remedy = None


class CliqueSpectraConfigException(CliqueSpectraException):
    """Raised when an invalid config has been provided."""
    remedy = 'Use the `--help` switch to display usage instructions'


class InvalidArgument(CliqueSpectraException, ValueError):
    """Raised when an operation is called outside its parameter range."""


class CapacityError(InvalidArgument):
    """Raised when a graph would exceed the vertex capacity."""
    remedy = 'Graphs are limited to 64 vertices'


class DimensionError(InvalidArgument):
    """Raised when a vector does not match the vertex count."""


class InapplicableError(CliqueSpectraException):
    """Raised when the hypotheses of a formula or criterion are unmet."""


class Graph6ParseError(CliqueSpectraException):
    """Raised when a graph6 line cannot be decoded."""

    def __init__(self, message, offset, line_number=None):
        self.offset = offset
        self.line_number = line_number
        super(Graph6ParseError, self).__init__(message)

    def __reduce__(self):
        return (
            self.__class__, (self.args[0], self.offset, self.line_number)
        )

    def __str__(self):
        location = "byte {}".format(self.offset)
        if self.line_number is not None:
            location = "line {}, {}".format(self.line_number, location)
        return "{} ({})".format(self.args[0], location)


class CatalogError(CliqueSpectraException):
    """Raised when a graph6 catalog cannot be read."""
    remedy = (
        'Supply a catalog with `--input` or set CLIQUE_SPECTRA_CATALOG_DIR'
    )


class NonConvergenceError(CliqueSpectraException):
    """
    Raised when power iteration exhausts its iteration budget or stalls.

    The certified enclosure of the radius at the last iterate is kept in
    `bracket` as `(low, high)`.
    """
    remedy = 'Raise `--max-iter` or loosen `--tol`'

    def __init__(self, message, bracket, iterations, order=None, graph6=None):
        self.bracket = bracket
        self.iterations = iterations
        self.order = order
        self.graph6 = graph6
        super(NonConvergenceError, self).__init__(message)

    def __reduce__(self):
        return (self.__class__, (
            self.args[0], self.bracket, self.iterations, self.order,
            self.graph6
        ))

    def __str__(self):
        details = [self.args[0]]
        if self.order is not None:
            details.append("order {}".format(self.order))
        if self.graph6 is not None:
            details.append("graph {}".format(self.graph6))
        details.append("bracket [{!r}, {!r}] after {} iterations".format(
            self.bracket[0], self.bracket[1], self.iterations
        ))
        return ", ".join(details)


class VerificationFailure(CliqueSpectraException):
    """Raised when an exhaustive check finds a counterexample."""

    def __init__(self, message, counterexample=None):
        self.counterexample = counterexample
        super(VerificationFailure, self).__init__(message)

    def __reduce__(self):
        return (self.__class__, (self.args[0], self.counterexample))
