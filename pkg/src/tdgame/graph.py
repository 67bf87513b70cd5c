"""Simple undirected graphs on dense vertex ids ``0..n-1``.

Besides the :class:`Graph` value type this module holds the text formats
and the graph families used as test corpora.  The structural predicates that
gate the 3/4 bound live here too.
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphParseError",
    "MalformedLineError",
    "VertexRangeError",
    "LoopEdgeError",
    "DuplicateEdgeError",
    "EdgeCountError",
    "parse_graph",
    "render_graph",
    "graph_key",
    "generate",
    "parse_family",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "complete_graph",
    "spider_graph",
    "random_graph",
    "random_tree",
    "random_tree_with_attachments",
    "disjoint_union",
    "check_condition_a",
    "check_condition_b",
    "component_profile",
    "ComponentProfile",
    "to_graph6",
    "from_graph6",
    "read_graph_list",
]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the bitmask of neighbours of ``v``; bit ``u`` is set iff
    ``uv`` is an edge.  Bitmasks keep the game engine and the solver cheap,
    :meth:`neighbors` gives the set view.
    """

    n: int
    adj: tuple[int, ...]
    _edges: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency masks, got {len(self.adj)}")
        full = (1 << self.n) - 1
        edges = []
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbour id >= n")
            if mask >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(mask):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric on edge {v}-{u}")
                if v < u:
                    edges.append((v, u))
        object.__setattr__(self, "_edges", tuple(edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if self.degree(v) == 1]

    def supports(self) -> list[int]:
        """Vertices adjacent to at least one leaf."""
        mask = 0
        for leaf in self.leaves():
            mask |= self.adj[leaf]
        return list(_bits(mask))

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def distances_from(self, source: int) -> list[int | None]:
        """Breadth-first distances; ``None`` marks unreachable vertices."""
        dist: list[int | None] = [None] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in _bits(self.adj[v]):
                if dist[u] is None:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v or self.has_edge(u, v):
            raise ValueError(f"cannot add edge {u}-{v}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            ((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


# ---------------------------------------------------------------------------
# Edge-list text format


class GraphParseError(ValueError):
    """Base class for edge-list parse failures; ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class MalformedLineError(GraphParseError):
    pass


class VertexRangeError(GraphParseError):
    pass


class LoopEdgeError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class EdgeCountError(GraphParseError):
    pass


_INT_PAIR = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: a header ``"n m"`` then ``m`` lines ``"u v"``.

    Blank lines and ``#`` comments are skipped; line numbers in errors refer
    to the raw input.
    """
    lines = [
        (i, raw.split("#", 1)[0].strip())
        for i, raw in enumerate(text.splitlines(), start=1)
    ]
    lines = [(i, s) for i, s in lines if s]
    if not lines:
        raise MalformedLineError(1, "missing header line 'n m'")

    lineno, header = lines[0]
    match = _INT_PAIR.match(header)
    if not match:
        raise MalformedLineError(lineno, f"expected header 'n m', got {header!r}")
    n, m = int(match.group(1)), int(match.group(2))
    if n < 0 or m < 0:
        raise MalformedLineError(lineno, "n and m must be nonnegative")

    header_lineno = lineno
    body = lines[1:]
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, line in body:
        match = _INT_PAIR.match(line)
        if not match:
            raise MalformedLineError(lineno, f"expected 'u v', got {line!r}")
        u, v = int(match.group(1)), int(match.group(2))
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexRangeError(lineno, f"vertex {x} out of range 0..{n - 1}")
        if u == v:
            raise LoopEdgeError(lineno, f"loop edge at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(lineno, f"duplicate edge {u}-{v}")
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        where = body[m][0] if len(body) > m else header_lineno
        raise EdgeCountError(where, f"header declares {m} edges, found {len(body)}")
    return Graph.from_edges(n, edges)


def render_graph(g: Graph) -> str:
    """Canonical edge-list text: header then edges sorted lexicographically."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_key(g: Graph) -> str:
    """The edge-list text on one line, records joined by ``;`` (``"3 2;0 1;1 2"``)."""
    return ";".join(render_graph(g).splitlines())


# ---------------------------------------------------------------------------
# Families


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    if k < 1:
        raise ValueError("star needs k >= 1 leaves")
    return Graph.from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def spider_graph(legs: Sequence[int]) -> Graph:
    """Centre 0 with one pendant path per entry of ``legs`` (its length in edges).

    Legs are numbered consecutively outward, so ``spider_graph([2, 2])`` is
    P5 with the centre in the middle.
    """
    if not legs or any(length < 1 for length in legs):
        raise ValueError("spider needs at least one leg, each of length >= 1")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def random_graph(n: int, p: float, seed: int | None = None) -> Graph:
    """Erdős–Rényi G(n, p); the same seed always yields the same graph."""
    if n < 1:
        raise ValueError("random graph needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def random_tree(n: int, seed: int | None = None) -> Graph:
    """Uniform random labelled tree via a Prüfer sequence."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n == 1:
        return Graph(1, (0,))
    if n == 2:
        return path_graph(2)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_tree_with_attachments(n: int, seed: int | None = None, attempts: int = 2000) -> Graph:
    """A random ``n``-vertex tree meeting both the degree-sum and the leaf-distance condition.

    A random core tree gets pendant leaves and pendant ``P2`` arms hung off
    random vertices; supports of degree below 3 then receive extra leaves so
    that adjacent degrees sum to at least 4.  Candidates of the wrong order
    or with two leaves at distance 4 are redrawn.
    """
    if n < 4:
        raise ValueError("no tree on fewer than 4 vertices meets the degree-sum condition")
    rng = random.Random(seed)
    for _ in range(attempts):
        core = rng.randint(2, max(2, n // 2))
        edges = list(random_tree(core, rng.randrange(2**31)).edges)
        size = core
        budget = rng.randint(0, n - core)
        while size - core < budget:
            anchor = rng.randrange(size)
            if rng.random() < 0.5 or size + 2 > n:
                edges.append((anchor, size))
                size += 1
            else:
                edges.extend([(anchor, size), (size, size + 1)])
                size += 2
        g = Graph.from_edges(size, edges)
        for support in g.supports():
            for _ in range(3 - g.degree(support)):
                edges.append((support, size))
                size += 1
        if size != n:
            continue
        g = Graph.from_edges(size, edges)
        if check_condition_a(g) and check_condition_b(g):
            return g
    raise RuntimeError(f"no admissible {n}-vertex tree found in {attempts} attempts")


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


_FAMILIES = {
    "path": path_graph,
    "cycle": cycle_graph,
    "star": star_graph,
    "complete": complete_graph,
}


def generate(family: str, *params, seed: int | None = None) -> Graph:
    """Build a named graph: ``path n``, ``cycle n``, ``star k``, ``complete n``,
    ``spider *legs``, ``random n p [seed]``, ``tree n [seed]``."""
    family = family.lower()
    if family in _FAMILIES:
        if len(params) != 1:
            raise ValueError(f"{family} takes exactly one size parameter")
        return _FAMILIES[family](int(params[0]))
    if family == "spider":
        return spider_graph([int(x) for x in params])
    if family in ("random", "gnp"):
        if len(params) not in (2, 3):
            raise ValueError("random takes n p [seed]")
        if len(params) == 3:
            seed = int(params[2])
        return random_graph(int(params[0]), float(params[1]), seed)
    if family == "tree":
        if len(params) == 2:
            seed = int(params[1])
        return random_tree(int(params[0]), seed)
    raise ValueError(f"unknown graph family {family!r}")


def parse_family(spec: str) -> Graph:
    """Parse a family spec such as ``"path:4"``, ``"spider 2 2"`` or ``"random:12,0.3,7"``."""
    parts = [p for p in re.split(r"[\s:,]+", spec.strip()) if p]
    if not parts:
        raise ValueError("empty family spec")
    return generate(parts[0], *parts[1:])


# ---------------------------------------------------------------------------
# Structural predicates


def check_condition_a(g: Graph) -> bool:
    """True iff every edge ``uv`` has ``d(u) + d(v) >= 4``."""
    deg = g.degrees()
    return all(deg[u] + deg[v] >= 4 for u, v in g.edges)


def check_condition_b(g: Graph) -> bool:
    """True iff no two leaves are at distance exactly 4."""
    leaves = g.leaves()
    leaf_set = set(leaves)
    for leaf in leaves:
        dist = g.distances_from(leaf)
        if any(dist[other] == 4 for other in leaf_set if other != leaf):
            return False
    return True


@dataclass(frozen=True)
class ComponentProfile:
    components: tuple[frozenset[int], ...]
    every_component_at_least_3: bool

    def __len__(self) -> int:
        return len(self.components)


def component_profile(g: Graph) -> ComponentProfile:
    """Connected components, ordered by smallest vertex, plus the order->=3 flag."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(frozenset(_bits(comp)))
    return ComponentProfile(tuple(comps), all(len(c) >= 3 for c in comps))


# ---------------------------------------------------------------------------
# graph6


def to_graph6(g: Graph) -> str:
    """graph6 encoding (no ``>>graph6<<`` header), for ``n <= 62``."""
    if g.n > 62:
        raise ValueError("graph6 writer supports n <= 62 only")
    bits = [g.has_edge(i, j) for j in range(1, g.n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    chars = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        chunk = 0
        for b in bits[i : i + 6]:
            chunk = chunk << 1 | b
        chars.append(chr(63 + chunk))
    return "".join(chars)


def from_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<") :]
    if not text:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in text]
    if any(not 0 <= x < 64 for x in data):
        raise ValueError(f"invalid graph6 character in {line!r}")
    if data[0] == 63:
        raise ValueError("graph6 strings with n > 62 are not supported")
    n = data[0]
    bits = []
    for x in data[1:]:
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise ValueError(f"graph6 string too short for n={n}")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def read_graph_list(text: str) -> list[Graph]:
    """Graphs from a file: graph6 lines, or edge-list documents separated by blank lines."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        return []
    first = lines[0].strip()
    if first.startswith(">>graph6<<") or not first[0].isdigit():
        return [from_graph6(ln) for ln in lines]
    graphs = []
    for block in re.split(r"\n\s*\n", text.strip()):
        if block.strip():
            graphs.append(parse_graph(block))
    return graphs
