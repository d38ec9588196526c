"""
Encode and decode graphs in the graph6 short form.

networkx does the bit packing. This module checks lines before handing them
over so that malformed input is reported with its byte offset and line
number, and so that graphs beyond the 64-vertex capacity are rejected.
"""

import io

import networkx as nx

from . import MAX_VERTICES
from .core import PKG_LOGGER
from .exceptions import CatalogError, Graph6ParseError
from .graphs import from_edges

HEADER = '>>graph6<<'
OFFSET = 63


def graph6_encode(graph):
    """Return the graph6 line (without newline) for `graph`."""
    other = nx.Graph()
    other.add_nodes_from(range(graph.n))
    other.add_edges_from(graph.edges())
    return nx.to_graph6_bytes(other, header=False).decode('ascii').rstrip()


def _ascii(line, line_number):
    if not isinstance(line, bytes):
        return line
    try:
        return line.decode('ascii')
    except UnicodeDecodeError as exc:
        raise Graph6ParseError("non-ascii byte", exc.start, line_number)


def _vertex_count(line, start, fail):
    if start >= len(line):
        fail("missing vertex count", start)
    if line[start] != '~':
        return ord(line[start]) - OFFSET, start + 1
    if start + 1 < len(line) and line[start + 1] == '~':
        fail("vertex counts above 258047 are not supported", start)
    if start + 4 > len(line):
        fail("truncated vertex count", len(line))
    n = 0
    for offset in range(start + 1, start + 4):
        n = n << 6 | (ord(line[offset]) - OFFSET)
    return n, start + 4


def graph6_decode(line, line_number=None):
    """
    Decode one graph6 line.

    A leading `>>graph6<<` header and trailing CR/LF are ignored.

    Raises
    ------
        Graph6ParseError: If a byte is out of range, the payload is truncated
            or too long, padding bits are set, or n exceeds the capacity.
    """
    line = _ascii(line, line_number).rstrip('\r\n')
    start = len(HEADER) if line.startswith(HEADER) else 0

    def fail(message, offset):
        raise Graph6ParseError(message, offset, line_number)

    for offset in range(start, len(line)):
        if not OFFSET <= ord(line[offset]) <= 126:
            fail("invalid graph6 character %r" % line[offset], offset)
    n, body = _vertex_count(line, start, fail)
    if n > MAX_VERTICES:
        fail("%d vertices exceeds the capacity of %d" % (n, MAX_VERTICES),
             start)

    length = n * (n - 1) // 2
    expected = -(-length // 6)
    payload = len(line) - body
    if payload < expected:
        fail("truncated payload: expected %d bytes, got %d"
             % (expected, payload), len(line))
    if payload > expected:
        fail("trailing data after payload", body + expected)
    padding = expected * 6 - length
    if expected and (ord(line[-1]) - OFFSET) & ((1 << padding) - 1):
        fail("padding bits must be zero", len(line) - 1)

    try:
        other = nx.from_graph6_bytes(line[start:].encode('ascii'))
    except (nx.NetworkXError, ValueError) as exc:
        fail(str(exc), start)
    return from_edges(n, other.edges())


def iter_graph6_lines(stream):
    """
    Yield `(line_number, graph)` for each graph in a text or binary stream.

    Blank lines and a bare header line are skipped; line numbers start at 1.
    """
    for line_number, line in enumerate(stream, 1):
        stripped = _ascii(line, line_number).strip()
        if not stripped or stripped == HEADER:
            continue
        yield line_number, graph6_decode(stripped, line_number)


def read_graph6_catalog(path):
    """
    Yield `(line_number, graph)` for each graph in a graph6 file.

    Raises
    ------
        CatalogError: If the file cannot be read.
        Graph6ParseError: If a line is not valid graph6.
    """
    PKG_LOGGER.debug("reading graph6 catalog {}".format(path))
    try:
        with io.open(path, 'rb') as stream:
            for item in iter_graph6_lines(stream):
                yield item
    except (IOError, OSError) as exc:
        raise CatalogError("cannot read catalog %s: %s" % (path, exc))


def read_graph6_lines(path):
    """
    Return `(line_number, text)` pairs of a catalog without decoding them.

    Raises
    ------
        CatalogError: If the file cannot be read.
        Graph6ParseError: If a line holds a non-ascii byte.
    """
    try:
        with io.open(path, 'rb') as stream:
            items = []
            for line_number, line in enumerate(stream, 1):
                stripped = _ascii(line, line_number).strip()
                if stripped.startswith(HEADER):
                    stripped = stripped[len(HEADER):]
                if stripped:
                    items.append((line_number, stripped))
            return items
    except (IOError, OSError) as exc:
        raise CatalogError("cannot read catalog %s: %s" % (path, exc))
