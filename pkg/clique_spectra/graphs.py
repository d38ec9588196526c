"""
Graph representation and the constructions used throughout the package.

A `Graph` stores one adjacency word per vertex, so neighbourhood
intersections are single integer operations. Edge masks index the upper
triangle in graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
"""

from . import MAX_VERTICES
from .exceptions import CapacityError, InvalidArgument
from .util import bits, popcount

LABELED_ENUMERATION_LIMIT = 7


def _check_capacity(n):
    if n < 0:
        raise InvalidArgument("vertex count must be non-negative: %d" % n)
    if n > MAX_VERTICES:
        raise CapacityError(
            "%d vertices exceeds the capacity of %d" % (n, MAX_VERTICES)
        )


def edge_pairs(n):
    """List vertex pairs in edge-mask (graph6 column) order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


class Graph(object):
    """
    An undirected simple graph on vertices 0..n-1.

    Instances are immutable; every modifier returns a new graph.
    """

    __slots__ = ('n', 'rows')

    def __init__(self, n, rows=None):
        _check_capacity(n)
        rows = tuple(int(row) for row in rows) if rows is not None \
            else (0,) * n
        if len(rows) != n:
            raise InvalidArgument(
                "expected %d adjacency rows, got %d" % (n, len(rows))
            )
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise InvalidArgument("row %d names a vertex out of range" % i)
            if row >> i & 1:
                raise InvalidArgument("loop at vertex %d" % i)
            for j in bits(row):
                if not rows[j] >> i & 1:
                    raise InvalidArgument(
                        "adjacency is not symmetric at (%d, %d)" % (i, j)
                    )
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def _from_rows(cls, n, rows):
        """Build without validation; `rows` must already be symmetric."""
        graph = cls.__new__(cls)
        object.__setattr__(graph, 'n', n)
        object.__setattr__(graph, 'rows', rows)
        return graph

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edge_mask(cls, n, mask, pairs=None):
        """Build the graph whose edge-mask bit e is set for each edge e."""
        _check_capacity(n)
        pairs = pairs or edge_pairs(n)
        rows = [0] * n
        for index in bits(mask):
            i, j = pairs[index]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls._from_rows(n, tuple(rows))

    @property
    def vertex_mask(self):
        return (1 << self.n) - 1

    @property
    def edge_mask(self):
        mask = 0
        for index, (i, j) in enumerate(edge_pairs(self.n)):
            if self.rows[i] >> j & 1:
                mask |= 1 << index
        return mask

    @property
    def edge_count(self):
        return sum(popcount(row) for row in self.rows) // 2

    def edges(self):
        """List edges (i, j) with i < j in lexicographic order."""
        return [
            (i, j) for i in range(self.n) for j in bits(self.rows[i]) if i < j
        ]

    def has_edge(self, i, j):
        return bool(self.rows[i] >> j & 1)

    def degree(self, v):
        return popcount(self.rows[v])

    def degrees(self):
        return [popcount(row) for row in self.rows]

    def neighbors(self, v):
        return frozenset(bits(self.rows[v]))

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise InvalidArgument(
                "vertex %r out of range for %d vertices" % (v, self.n)
            )

    def with_edge(self, i, j):
        """Return a copy with edge (i, j) added."""
        self._check_vertex(i)
        self._check_vertex(j)
        if i == j:
            raise InvalidArgument("loop at vertex %d" % i)
        rows = list(self.rows)
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        return Graph._from_rows(self.n, tuple(rows))

    def without_edge(self, i, j):
        """Return a copy with edge (i, j) removed."""
        self._check_vertex(i)
        self._check_vertex(j)
        rows = list(self.rows)
        rows[i] &= ~(1 << j)
        rows[j] &= ~(1 << i)
        return Graph._from_rows(self.n, tuple(rows))

    def relabel(self, perm):
        """
        Return the graph with vertex v renamed to perm[v].

        Args
        ----
            perm (:obj:`list` of :obj:`int`): a permutation of range(n)
        """
        if sorted(perm) != list(range(self.n)):
            raise InvalidArgument("not a permutation of %d vertices" % self.n)
        rows = [0] * self.n
        for v in range(self.n):
            word = 0
            for u in bits(self.rows[v]):
                word |= 1 << perm[u]
            rows[perm[v]] = word
        return Graph._from_rows(self.n, tuple(rows))

    def induced(self, vertices):
        """Return the subgraph induced by `vertices`, relabeled in order."""
        vertices = sorted(vertices)
        for v in vertices:
            self._check_vertex(v)
        position = dict((v, index) for index, v in enumerate(vertices))
        keep = 0
        for v in vertices:
            keep |= 1 << v
        rows = []
        for v in vertices:
            word = 0
            for u in bits(self.rows[v] & keep):
                word |= 1 << position[u]
            rows.append(word)
        return Graph._from_rows(len(vertices), tuple(rows))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return "Graph(n={}, edges={})".format(self.n, self.edges())

    def __reduce__(self):
        return (Graph._from_rows, (self.n, self.rows))


class MultipartiteSpec(object):
    """Part sizes of a complete multipartite graph."""

    __slots__ = ('parts',)

    def __init__(self, parts):
        parts = tuple(int(part) for part in parts)
        if not parts:
            raise InvalidArgument("a multipartite spec needs at least one part")
        if min(parts) < 1:
            raise InvalidArgument("part sizes must be positive: %r" % (parts,))
        object.__setattr__(self, 'parts', parts)

    def __setattr__(self, name, value):
        raise AttributeError("MultipartiteSpec is immutable")

    @property
    def n(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        if not isinstance(other, MultipartiteSpec):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "MultipartiteSpec({!r})".format(list(self.parts))


def empty_graph(n):
    """Return nK_1."""
    _check_capacity(n)
    return Graph._from_rows(n, (0,) * n)


def complete_graph(n):
    """Return K_n."""
    _check_capacity(n)
    full = (1 << n) - 1
    return Graph._from_rows(
        n, tuple(full & ~(1 << v) for v in range(n))
    )


def from_edges(n, edges):
    """Build a graph from an iterable of vertex pairs."""
    _check_capacity(n)
    rows = [0] * n
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidArgument("edge (%d, %d) out of range" % (i, j))
        if i == j:
            raise InvalidArgument("loop at vertex %d" % i)
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph._from_rows(n, tuple(rows))


def path_graph(n):
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise InvalidArgument("a cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def join(first, second):
    """Return the disjoint union of both graphs plus every cross edge."""
    n = first.n + second.n
    _check_capacity(n)
    low = first.vertex_mask
    high = second.vertex_mask << first.n
    rows = tuple(
        [row | high for row in first.rows]
        + [(row << first.n) | low for row in second.rows]
    )
    return Graph._from_rows(n, rows)


def disjoint_union(first, second):
    """Return the union of both graphs on disjoint vertex sets."""
    n = first.n + second.n
    _check_capacity(n)
    rows = tuple(
        list(first.rows) + [row << first.n for row in second.rows]
    )
    return Graph._from_rows(n, rows)


def complete_multipartite(spec):
    """Return the complete multipartite graph with `spec.parts` classes."""
    if not isinstance(spec, MultipartiteSpec):
        spec = MultipartiteSpec(spec)
    n = spec.n
    _check_capacity(n)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in spec.parts:
        part = ((1 << size) - 1) << start
        rows.extend([full & ~part] * size)
        start += size
    return Graph._from_rows(n, tuple(rows))


def turan_parts(n, r):
    """
    Part sizes of T_r(n), larger parts first.

    Only non-empty parts are returned, so r > n yields n singleton parts.
    """
    if n < 0:
        raise InvalidArgument("vertex count must be non-negative: %d" % n)
    if r < 0 or (r == 0 and n > 0):
        raise InvalidArgument("a Turan graph on %d vertices needs r >= 1" % n)
    if n == 0:
        return []
    base, extra = divmod(n, r)
    parts = [base + 1] * extra + [base] * (r - extra)
    return [part for part in parts if part]


def turan_graph(n, r):
    """Return T_r(n), the balanced complete r-partite graph."""
    _check_capacity(n)
    parts = turan_parts(n, r)
    if not parts:
        return empty_graph(0)
    return complete_multipartite(MultipartiteSpec(parts))


def km_join_turan(n, m, r):
    """Return K_m joined with T_{r-m}(n-m)."""
    if not 0 <= m <= n:
        raise InvalidArgument("need 0 <= m <= n, got m=%d n=%d" % (m, n))
    if r - m < 1 and n - m > 0:
        raise InvalidArgument("need r > m to place %d vertices" % (n - m))
    return join(complete_graph(m), turan_graph(n - m, r - m))


def k3_join_empty(n):
    """Return K_3 joined with (n-3)K_1."""
    if n < 3:
        raise InvalidArgument("K_3 join (n-3)K_1 needs n >= 3, got %d" % n)
    return join(complete_graph(3), empty_graph(n - 3))


def kn_union_empty(n, size=5):
    """Return K_size together with n-size isolated vertices."""
    if n < size:
        raise InvalidArgument("need n >= %d, got %d" % (size, n))
    return disjoint_union(complete_graph(size), empty_graph(n - size))


def pendant_graph_g0(n=6):
    """Return K_5 plus (n-5) isolated vertices, one of them hung on vertex 0."""
    if n < 6:
        raise InvalidArgument("the pendant graph needs n >= 6, got %d" % n)
    return kn_union_empty(n, 5).with_edge(0, 5)


def flower(r, k, petals):
    """
    Return `petals` k-cliques pairwise meeting in one shared kernel.

    The kernel has 2k-2r+1 vertices (numbered first); each petal adds
    2r-1-k private vertices, and private vertices of different petals are
    non-adjacent.
    """
    if not r <= k <= 2 * r - 2:
        raise InvalidArgument(
            "flower needs r <= k <= 2r-2, got r=%d k=%d" % (r, k)
        )
    if petals < 1:
        raise InvalidArgument("flower needs at least one petal")
    kernel = 2 * k - 2 * r + 1
    petal = 2 * r - 1 - k
    n = kernel + petals * petal
    _check_capacity(n)
    kernel_mask = (1 << kernel) - 1
    rows = [kernel_mask & ~(1 << v) for v in range(kernel)]
    for index in range(petals):
        start = kernel + index * petal
        petal_mask = ((1 << petal) - 1) << start
        for v in range(kernel):
            rows[v] |= petal_mask
        for v in range(start, start + petal):
            rows.append((kernel_mask | petal_mask) & ~(1 << v))
    return Graph._from_rows(n, tuple(rows))


def common_neighborhood(graph, vertices):
    """Return the vertices adjacent to every vertex of `vertices`."""
    common = graph.vertex_mask
    for v in vertices:
        graph._check_vertex(v)
        common &= graph.rows[v]
    return frozenset(bits(common))


def enumerate_labeled_graphs(n):
    """
    Yield every labeled graph on n vertices in increasing edge-mask order.

    Raises
    ------
        CapacityError: If n exceeds the labeled enumeration limit.
    """
    check_enumerable(n)
    pairs = edge_pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph.from_edge_mask(n, mask, pairs)


def check_enumerable(n):
    _check_capacity(n)
    if n > LABELED_ENUMERATION_LIMIT:
        exc = CapacityError(
            "labeled enumeration is limited to n <= %d, got %d"
            % (LABELED_ENUMERATION_LIMIT, n)
        )
        exc.remedy = (
            "Supply a graph6 catalog of graphs on %d vertices with `--input`"
            % n
        )
        raise exc


def labeled_graph_count(n):
    return 1 << (n * (n - 1) // 2)
