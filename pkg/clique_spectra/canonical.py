"""
Canonical graph6 codes for isomorphism deduplication.

The search tree individualizes one vertex of the first non-singleton cell
of an equitable ordered partition and refines again; twin vertices in that
cell lead to isomorphic subtrees, so only one of each twin class is tried.
The code is the lexicographically least graph6 line over all leaves.
"""

from .graph6 import graph6_encode
from .graphs import edge_pairs
from .util import popcount


def _refine(rows, cells):
    """Split cells by neighbour counts into every cell until stable."""
    while True:
        masks = []
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v
            masks.append(mask)
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple(popcount(rows[v] & mask) for mask in masks)
                groups.setdefault(signature, []).append(v)
            for signature in sorted(groups):
                refined.append(groups[signature])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _twin_representatives(rows, cell):
    representatives = []
    for v in cell:
        for u in representatives:
            if rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                break
        else:
            representatives.append(v)
    return representatives


def _leaf_key(rows, order, pairs):
    key = 0
    for i, j in pairs:
        key = key << 1 | (rows[order[i]] >> order[j] & 1)
    return key


def canonical_labeling(graph):
    """
    Return `(key, order)` for the least leaf of the search tree.

    `order[p]` is the original vertex placed at position p.
    """
    n = graph.n
    rows = graph.rows
    pairs = edge_pairs(n)
    if n == 0:
        return 0, []

    by_degree = {}
    for v in range(n):
        by_degree.setdefault(popcount(rows[v]), []).append(v)
    cells = _refine(rows, [by_degree[d] for d in sorted(by_degree)])

    best = [None, None]
    stack = [cells]
    while stack:
        cells = stack.pop()
        target = next(
            (index for index, cell in enumerate(cells) if len(cell) > 1),
            None
        )
        if target is None:
            order = [cell[0] for cell in cells]
            key = _leaf_key(rows, order, pairs)
            if best[0] is None or key < best[0]:
                best = [key, order]
            continue
        cell = cells[target]
        for v in reversed(_twin_representatives(rows, cell)):
            rest = [u for u in cell if u != v]
            branch = cells[:target] + [[v], rest] + cells[target + 1:]
            stack.append(_refine(rows, branch))
    return best[0], best[1]


def canonical_code(graph):
    """Return a graph6 line equal for two graphs iff they are isomorphic."""
    return graph6_encode(canonical_form(graph))


def canonical_form(graph):
    """Return the graph relabeled into its canonical labeling."""
    _, order = canonical_labeling(graph)
    perm = [0] * graph.n
    for position, v in enumerate(order):
        perm[v] = position
    return graph.relabel(perm)

