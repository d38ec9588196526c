"""Utilities for the clique_spectra package."""

from .exceptions import CliqueSpectraException

SIGNIFICANT_DIGITS = 12


def format_number(value):
    """Render a real with 12 significant digits, round-to-nearest."""
    if value is None:
        return ''
    return '{:.{}g}'.format(float(value), SIGNIFICANT_DIGITS)


def popcount(word):
    """Count the set bits of a non-negative int."""
    return bin(word).count('1')


def bits(word):
    """Yield the indices of set bits in increasing order."""
    while word:
        low = word & -word
        yield low.bit_length() - 1
        word ^= low


def wrap_cli_error(injected, on_fail, attempting=None):
    """
    Inject a package action into a try/catch statement, failing gracefully.

    Args
    ----
        injected (:obj:`function`): the function to be injected into the
            statement which takes no arguments
        on_fail (:obj:`function`): the function to call on failure which
            accepts a message and an exception as arguments
        attempting (:obj:`str`): a string what is being attempted
    """
    try:
        return injected()
    except CliqueSpectraException as exc:
        on_fail(attempting, exc)
