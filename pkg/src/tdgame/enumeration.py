"""Isomorph-free enumeration of small graphs.

Canonical forms come from a plain individualization/refinement search:
colour refinement to an equitable ordered partition, then branching on the
first smallest non-singleton cell, keeping the lexicographically smallest
adjacency code over all leaves.  Cells made entirely of twins are branched
on a single representative, which is what keeps complete, empty and
complete-multipartite pieces from blowing up to ``n!`` leaves.

Connected graphs on ``n`` vertices are produced by hanging a new vertex off
every connected graph on ``n - 1`` vertices in all nonempty ways (every
connected graph has a non-cut vertex), keeping one representative per
canonical form.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, _bits

__all__ = ["canonical_form", "canonical_graph", "connected_graphs", "connected_graphs_up_to"]

MAX_ENUMERATION_N = 9


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until stable.

    Split order depends only on the counts, so the result is invariant under
    relabelling.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                new_cells.extend(groups[sig] for sig in sorted(groups))
        cells = new_cells
        if not changed:
            return cells


def _all_twins(adj: tuple[int, ...], cell: list[int]) -> bool:
    first = cell[0]
    for v in cell[1:]:
        if adj[first] & ~(1 << v) != adj[v] & ~(1 << first):
            return False
    return True


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    n = len(order)
    code = 0
    for i, v in enumerate(order):
        row = 0
        for u in _bits(adj[v]):
            j = pos[u]
            if j > i:
                row |= 1 << (n - 1 - j)
        code = (code << (n - 1 - i)) | (row & ((1 << (n - 1 - i)) - 1))
    return code


def _search(adj: tuple[int, ...], cells: list[list[int]]) -> tuple[int, list[int]]:
    target = None
    for idx, cell in enumerate(cells):
        if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
            target = idx
    if target is None:
        order = [cell[0] for cell in cells]
        return _code(adj, order), order
    cell = cells[target]
    branches = cell[:1] if _all_twins(adj, cell) else cell
    best: tuple[int, list[int]] | None = None
    for v in branches:
        rest = [u for u in cell if u != v]
        child = cells[:target] + [[v], rest] + cells[target + 1 :]
        result = _search(adj, _refine(adj, child))
        if best is None or result[0] < best[0]:
            best = result
    assert best is not None
    return best


def _canonical(g: Graph) -> tuple[int, list[int]]:
    if g.n == 0:
        return 0, []
    return _search(g.adj, _refine(g.adj, [list(range(g.n))]))


def canonical_form(g: Graph) -> tuple[int, int]:
    """Hashable certificate: equal for two graphs iff they are isomorphic."""
    return g.n, _canonical(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical relabelling of ``g`` (old vertex ``order[i]`` becomes ``i``)."""
    _, order = _canonical(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"exhaustive enumeration is limited to n <= {MAX_ENUMERATION_N}")
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[tuple[int, int], Graph] = {}
    new = n - 1
    for base in _connected(n - 1):
        for subset in range(1, 1 << new):
            adj = list(base.adj) + [subset]
            for u in _bits(subset):
                adj[u] |= 1 << new
            g = Graph(n, tuple(adj))
            cert = canonical_form(g)
            if cert not in seen:
                seen[cert] = canonical_graph(g)
    return tuple(seen[c] for c in sorted(seen))


def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on ``n`` vertices up to isomorphism, in canonical form.

    Results are cached per process; ``n = 8`` takes on the order of a minute
    the first time, ``n = 9`` considerably longer.
    """
    return _connected(n)


def connected_graphs_up_to(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from connected_graphs(n)
