"""Degree, connectivity and independence invariants of a graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Union

from .graph import Graph, bits, popcount


@total_ordering
class _Infinity:
    """Positive infinity for extended naturals; absorbs addition and subtraction of integers."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("inf")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("inf - inf is undefined")
        return self

    def __rsub__(self, other):
        raise ArithmeticError("finite - inf is not an extended natural")

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()
ExtendedNat = Union[int, _Infinity]


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


# connectivity -------------------------------------------------------------


def local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths for nonadjacent s, t.

    Unit-capacity max-flow on the vertex-split digraph: vertex v becomes
    ``2v -> 2v+1`` with capacity 1 (unbounded for s and t).
    """
    if s == t or g.has_edge(s, t):
        raise ValueError("local connectivity needs distinct nonadjacent vertices")
    big = g.n
    cap: dict[int, dict[int, int]] = {}

    def add(u: int, v: int, c: int) -> None:
        cap.setdefault(u, {})[v] = cap.get(u, {}).get(v, 0) + c
        cap.setdefault(v, {}).setdefault(u, 0)

    for v in range(g.n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for u in bits(g.adj[v]):
            add(2 * v + 1, 2 * u, 1)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for v, c in cap[u].items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            return flow
        v = sink
        while v != source:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] += 1
            v = u
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity, with the conventions kappa(K_n) = n - 1 and kappa(K_1) = 0."""
    if g.n <= 1:
        return 0
    if g.is_complete():
        return g.n - 1
    best = min_degree(g)
    # Some vertex among the first best+1 lies outside a minimum cut and
    # precedes every vertex it is separated from.
    for i in range(g.n):
        if i > best:
            break
        non_nbrs = g.vertex_mask & ~g.adj[i] & ~((1 << (i + 1)) - 1)
        for j in bits(non_nbrs):
            best = min(best, local_connectivity(g, i, j))
            if best == 0:
                return 0
    return best


# independence -------------------------------------------------------------


def _clique_cover_bound(g: Graph, cand: int) -> int:
    """Greedy clique cover size of G[cand]; an upper bound on its independence number."""
    cliques = 0
    left = cand
    while left:
        v = (left & -left).bit_length() - 1
        clique_cand = g.adj[v] & left
        left &= ~(1 << v)
        while clique_cand:
            u = (clique_cand & -clique_cand).bit_length() - 1
            left &= ~(1 << u)
            clique_cand &= g.adj[u]
        cliques += 1
    return cliques


def independence_number(g: Graph) -> int:
    """Size of a maximum independent set (branch and bound on bitsets)."""
    best = 0

    def search(cand: int, size: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + _clique_cover_bound(g, cand) <= best:
            return
        pivot, pivot_deg = -1, -1
        for v in bits(cand):
            d = popcount(g.adj[v] & cand)
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        if pivot_deg == 0:
            best = max(best, size + popcount(cand))
            return
        search(cand & ~g.adj[pivot] & ~(1 << pivot), size + 1)
        search(cand & ~(1 << pivot), size)

    search(g.vertex_mask, 0)
    return best


def sigma_table(g: Graph) -> dict[int, int]:
    """Map k -> minimum degree sum over independent k-sets, for 1 <= k <= alpha.

    One pass over independent sets serves every k. Vertices are tried in
    order of increasing degree, and a branch is cut once no size it can still
    reach could improve on the current best.
    """
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (deg[v], v))
    rank = {v: i for i, v in enumerate(order)}
    best: dict[int, int] = {}

    def improvable(size: int, total: int, cand: int) -> bool:
        running = total
        k = size
        for v in order:
            if not cand:
                break
            if cand >> v & 1:
                cand &= ~(1 << v)
                k += 1
                running += deg[v]
                if k not in best or running < best[k]:
                    return True
        return False

    def extend(size: int, total: int, cand: int) -> None:
        while cand:
            if not improvable(size, total, cand):
                return
            v = min(bits(cand), key=rank.__getitem__)
            cand &= ~(1 << v)
            k, s = size + 1, total + deg[v]
            if k not in best or s < best[k]:
                best[k] = s
            extend(k, s, cand & ~g.adj[v])

    extend(0, 0, g.vertex_mask)
    return dict(sorted(best.items()))


def sigma_k(g: Graph, k: int) -> ExtendedNat:
    """Minimum degree sum of k independent vertices, or INFINITY when alpha < k."""
    if k < 1:
        raise ValueError("sigma_k needs k >= 1")
    return sigma_table(g).get(k, INFINITY)


@dataclass(frozen=True)
class InvariantBundle:
    n: int
    min_degree: int
    connectivity: int
    independence_number: int
    sigma: dict[int, int] = field(repr=False)
    degree_sequence: tuple[int, ...]

    def sigma_at(self, k: int) -> ExtendedNat:
        if k < 1:
            raise ValueError("sigma_k needs k >= 1")
        return self.sigma.get(k, INFINITY)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "min_degree": self.min_degree,
            "connectivity": self.connectivity,
            "independence_number": self.independence_number,
            "sigma": {str(k): v for k, v in self.sigma.items()},
            "degree_sequence": list(self.degree_sequence),
        }


def invariant_bundle(g: Graph) -> InvariantBundle:
    sigma = sigma_table(g)
    alpha = independence_number(g)
    if alpha != len(sigma):
        raise AssertionError("independence number disagrees with the sigma table")
    return InvariantBundle(
        n=g.n,
        min_degree=min_degree(g),
        connectivity=vertex_connectivity(g),
        independence_number=alpha,
        sigma=sigma,
        degree_sequence=tuple(sorted(g.degrees(), reverse=True)),
    )
