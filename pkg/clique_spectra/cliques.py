"""
Clique enumeration, clique statistics and the clique core.

All routines work on the adjacency words of a `Graph`; candidate sets are
neighbourhood intersections held in a single int.
"""

from dataclasses import dataclass
from functools import cached_property

from .exceptions import InapplicableError, InvalidArgument
from .graphs import Graph
from .util import bits, popcount


@dataclass(frozen=True)
class CliqueSet(object):
    """All r-cliques of a graph on `n` vertices, sorted lexicographically."""

    r: int
    n: int
    cliques: tuple

    def __len__(self):
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    @cached_property
    def masks(self):
        masks = []
        for clique in self.cliques:
            mask = 0
            for v in clique:
                mask |= 1 << v
            masks.append(mask)
        return tuple(masks)

    @cached_property
    def support(self):
        """Vertices lying in at least one clique, sorted."""
        covered = 0
        for mask in self.masks:
            covered |= mask
        return tuple(bits(covered))

    def restrict(self, vertices):
        """Return the sub-collection of cliques inside `vertices`."""
        keep = 0
        for v in vertices:
            keep |= 1 << v
        cliques = tuple(
            clique for clique, mask in zip(self.cliques, self.masks)
            if not mask & ~keep
        )
        return CliqueSet(self.r, self.n, cliques)


@dataclass(frozen=True)
class CliqueDegreeVector(object):
    """Per-vertex r-clique counts d(i)."""

    r: int
    d: tuple

    @property
    def total(self):
        return sum(self.d)


def _check_order(r):
    if r < 2:
        raise InvalidArgument("clique order must be at least 2, got %d" % r)


def _max_candidate_degree(rows, candidates):
    best = 0
    for v in bits(candidates):
        degree = popcount(rows[v] & candidates)
        if degree > best:
            best = degree
    return best


def _extend(rows, clique, candidates, need, found):
    if need == 0:
        found.append(tuple(clique))
        return
    if popcount(candidates) < need:
        return
    # degree bound: a clique inside `candidates` has at most 1 + the largest
    # candidate degree vertices
    if need > 2 and _max_candidate_degree(rows, candidates) + 1 < need:
        return
    while candidates:
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        clique.append(v)
        _extend(rows, clique, candidates & rows[v], need - 1, found)
        clique.pop()
        if popcount(candidates) < need:
            break


def enumerate_cliques(graph, r):
    """
    List every r-clique of `graph` as an increasing tuple.

    Raises
    ------
        InvalidArgument: If r < 2.
    """
    _check_order(r)
    found = []
    _extend(graph.rows, [], graph.vertex_mask, r, found)
    return CliqueSet(r, graph.n, tuple(found))


def _max_clique(rows, candidates, size, best):
    if not candidates:
        return max(size, best)
    if size + popcount(candidates) <= best:
        return best
    if size + _max_candidate_degree(rows, candidates) + 1 <= best:
        return best
    while candidates:
        if size + popcount(candidates) <= best:
            break
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        best = _max_clique(rows, candidates & rows[v], size + 1, best)
    return best


def clique_number(graph):
    """Return the order of a largest clique (0 for the empty vertex set)."""
    return _max_clique(graph.rows, graph.vertex_mask, 0, 0)


def clique_degrees(graph, r, cliques=None):
    """Return d(i), the number of r-cliques through each vertex."""
    _check_order(r)
    cliques = cliques if cliques is not None else enumerate_cliques(graph, r)
    counts = [0] * graph.n
    for clique in cliques:
        for v in clique:
            counts[v] += 1
    return CliqueDegreeVector(r, tuple(counts))


def is_2kr_free(graph, r, cliques=None):
    """Return True iff no two vertex-disjoint r-cliques exist."""
    _check_order(r)
    if graph.n < 2 * r:
        return True
    cliques = cliques if cliques is not None else enumerate_cliques(graph, r)
    masks = cliques.masks
    for index, first in enumerate(masks):
        for second in masks[index + 1:]:
            if not first & second:
                return False
    return True


def _pack(masks, start, used, count, chosen):
    if count == 0:
        return True
    for index in range(start, len(masks)):
        mask = masks[index]
        if mask & used:
            continue
        chosen.append(index)
        if _pack(masks, index + 1, used | mask, count - 1, chosen):
            return True
        chosen.pop()
    return False


def find_disjoint_cliques(graph, r, count, cliques=None):
    """
    Return `count` pairwise vertex-disjoint r-cliques, or None.

    The search is exact backtracking over cliques in lexicographic order.
    """
    _check_order(r)
    if count < 1:
        raise InvalidArgument("count must be at least 1, got %d" % count)
    if graph.n < count * r:
        return None
    cliques = cliques if cliques is not None else enumerate_cliques(graph, r)
    chosen = []
    if not _pack(cliques.masks, 0, 0, count, chosen):
        return None
    return [cliques.cliques[index] for index in chosen]


def clique_core(graph, r, cliques=None):
    """Return the graph keeping exactly the edges that lie in an r-clique."""
    _check_order(r)
    cliques = cliques if cliques is not None else enumerate_cliques(graph, r)
    rows = [0] * graph.n
    for clique, mask in zip(cliques.cliques, cliques.masks):
        for v in clique:
            rows[v] |= mask & ~(1 << v)
    return Graph._from_rows(graph.n, tuple(rows))


def components(graph):
    """Partition the vertices into connected components, ordered by minimum."""
    unseen = graph.vertex_mask
    rows = graph.rows
    parts = []
    while unseen:
        low = unseen & -unseen
        component = low
        frontier = low
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= rows[v]
            frontier = reach & ~component
            component |= frontier
        unseen &= ~component
        parts.append(tuple(bits(component)))
    return parts


def is_r_clique_connected(graph, r, cliques=None):
    """Return True iff the clique core of `graph` is connected."""
    return len(components(clique_core(graph, r, cliques))) <= 1


def shared_vertex_criterion(graph, r, k):
    """
    Test whether every two k-cliques share at least 2k-2r+1 vertices.

    For r <= k <= 2r-2, a graph whose every edge lies in a k-clique and which
    has at least two k-cliques satisfies this exactly when it is
    2K_r-free.

    Raises
    ------
        InapplicableError: If r, k are out of range, some edge lies in no
            k-clique, or fewer than two k-cliques exist.
    """
    _check_order(r)
    if not r <= k <= 2 * r - 2:
        raise InapplicableError(
            "criterion needs r <= k <= 2r-2, got r=%d k=%d" % (r, k)
        )
    cliques = enumerate_cliques(graph, k)
    if len(cliques) < 2:
        raise InapplicableError(
            "criterion needs at least two %d-cliques, found %d"
            % (k, len(cliques))
        )
    if clique_core(graph, k, cliques).rows != graph.rows:
        raise InapplicableError(
            "criterion needs every edge to lie in a %d-clique" % k
        )
    shared = 2 * k - 2 * r + 1
    masks = cliques.masks
    for index, first in enumerate(masks):
        for second in masks[index + 1:]:
            if popcount(first & second) < shared:
                return False
    return True
