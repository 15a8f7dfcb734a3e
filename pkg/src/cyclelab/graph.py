"""Simple undirected graphs on at most 64 vertices, stored as neighbour bitsets.

Vertex sets everywhere in the package are plain ``int`` bitmasks: bit ``i`` set
means vertex ``i`` is a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64
GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Raised for malformed graph6 input; ``offset`` is the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i} has neighbours outside range")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Skips validation; callers guarantee a symmetric loop-free adjacency.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def is_complete(self) -> bool:
        return all(row == self.vertex_mask ^ (1 << i) for i, row in enumerate(self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, graph6={to_graph6(self)!r})" if self.n else "Graph(n=0)"


EMPTY_GRAPH = Graph(0, ())


# graph6 -------------------------------------------------------------------


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + (n >> shift & 0x3F)) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no header, no newline)."""
    if g.n == 0:
        raise ValueError("graph6 encoding requires at least one vertex")
    out = [_encode_size(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line. A leading ``>>graph6<<`` header is skipped."""
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        line = line[base:]
    if not line:
        raise Graph6Error("empty graph6 string", base)
    for k, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the graph6 range", base + k)
    if line[0] != "~":
        n, pos = ord(line[0]) - 63, 1
    else:
        if len(line) < 4:
            raise Graph6Error("truncated long size header", base + len(line))
        if line[1] == "~":
            raise Graph6Error("orders above 64 are not supported", base + 1)
        n = 0
        for ch in line[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
        if n <= 62:
            raise Graph6Error("long size header used for a small order", base + 1)
    if n == 0:
        raise Graph6Error("graph of order 0", base)
    if n > MAX_VERTICES:
        raise Graph6Error(f"order {n} exceeds {MAX_VERTICES}", base + 1)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(line) - pos != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for order {n}, found {len(line) - pos}",
            base + min(len(line), pos + nbytes),
        )
    pad = nbytes * 6 - nbits
    if pad and (ord(line[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + len(line) - 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(line[pos + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield from_graph6(line)


# structure ----------------------------------------------------------------


def component_of(g: Graph, start: int, within: int) -> int:
    """Vertex set of the component containing ``start`` in ``G[within]``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def connected_components(g: Graph, within: int | None = None) -> list[int]:
    """Components as vertex bitsets, ordered by smallest member."""
    left = g.vertex_mask if within is None else within
    comps = []
    while left:
        comp = component_of(g, (left & -left).bit_length() - 1, left)
        comps.append(comp)
        left &= ~comp
    return comps


def is_connected(g: Graph, within: int | None = None) -> bool:
    mask = g.vertex_mask if within is None else within
    if not mask:
        return False
    return component_of(g, (mask & -mask).bit_length() - 1, mask) == mask


def is_independent(g: Graph, vertices: int) -> bool:
    return all(not g.adj[v] & vertices for v in bits(vertices))


def induced_subgraph(g: Graph, keep: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``keep`` relabelled 0..k-1; also returns new->old labels.

    An empty ``keep`` yields the order-0 graph.
    """
    if keep & ~g.vertex_mask:
        raise ValueError("keep contains vertices outside the graph")
    labels = list(bits(keep))
    index = {v: i for i, v in enumerate(labels)}
    adj = []
    for v in labels:
        row = 0
        for u in bits(g.adj[v] & keep):
            row |= 1 << index[u]
        adj.append(row)
    return Graph._trusted(len(labels), tuple(adj)), labels


def relabel(g: Graph, order: list[int]) -> Graph:
    """Graph whose vertex ``i`` is ``order[i]`` of ``g``."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = []
    for v in order:
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph._trusted(g.n, tuple(adj))


# named graphs -------------------------------------------------------------


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def cycle(n: int) -> Graph:
    if not 3 <= n <= MAX_VERTICES:
        raise ValueError("cycle needs 3..64 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _check_order(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides of K_{a,b} need at least one vertex")
    _check_order(a + b)
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(n: int) -> Graph:
    """K_{1,n}: a centre joined to ``n`` leaves."""
    return complete_bipartite(1, n)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def empty(n: int) -> Graph:
    _check_order(n)
    return Graph(n, (0,) * n)


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"order {n} outside 1..{MAX_VERTICES}")


_NAMED = {
    "complete": (complete, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "petersen": (petersen, 0),
    "star": (star, 1),
    "empty": (empty, 1),
}


def named_graph(text: str) -> Graph:
    """Build a graph from ``name`` or ``name,arg[,arg]``, e.g. ``complete_bipartite,3,4``."""
    name, *args = [part.strip() for part in text.split(",")]
    if name not in _NAMED:
        raise ValueError(f"unknown graph name {name!r}; choose from {sorted(_NAMED)}")
    builder, arity = _NAMED[name]
    if len(args) != arity:
        raise ValueError(f"{name} takes {arity} integer argument(s)")
    return builder(*(int(a) for a in args))
