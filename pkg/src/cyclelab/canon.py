"""Canonical labelling of small graphs by individualisation and refinement.

Good enough for the n <= 10 range the generator targets; there is no
attempt at nauty-level pruning beyond discarding branches already covered by
automorphisms found at earlier leaves.
"""

from __future__ import annotations

from .graph import Graph, bits, popcount, relabel

Partition = list[list[int]]


def refine(g: Graph, cells: Partition) -> Partition:
    """Coarsest equitable refinement, splitting cells in an isomorphism-invariant order."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for w in range(len(cells)):
            if w >= len(cells):
                break
            wmask = 0
            for v in cells[w]:
                wmask |= 1 << v
            out: Partition = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(popcount(g.adj[v] & wmask), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    out.extend(groups[k] for k in sorted(groups))
                    changed = True
            cells = out
    return cells


def _certificate(g: Graph, order: list[int]) -> int:
    # upper-triangle adjacency bits, row-major, under the labelling order
    cert = 0
    for i, v in enumerate(order):
        row = g.adj[v]
        for u in order[i + 1:]:
            cert = cert << 1 | (row >> u & 1)
    return cert


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def canonical_labelling(g: Graph) -> tuple[int, list[int]]:
    """Return (certificate, order) where relabelling by ``order`` gives the canonical graph.

    Two graphs are isomorphic exactly when their certificates (with equal n) match.
    """
    if g.n == 0:
        return 0, []
    best_cert = -1
    best_order: list[int] = []
    automorphisms: list[list[int]] = []

    def search(cells: Partition, prefix: list[int]) -> None:
        nonlocal best_cert, best_order
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(g, order)
            if cert > best_cert:
                best_cert, best_order = cert, order
            elif cert == best_cert:
                # best_order[i] -> order[i] is an automorphism
                perm = [0] * g.n
                for a, b in zip(best_order, order):
                    perm[a] = b
                automorphisms.append(perm)
            return
        tried: list[int] = []
        for v in target:
            if tried:
                uf = _UnionFind(g.n)
                for perm in automorphisms:
                    if all(perm[p] == p for p in prefix):
                        for x in range(g.n):
                            uf.union(x, perm[x])
                root = uf.find(v)
                if any(uf.find(t) == root for t in tried):
                    continue
            tried.append(v)
            idx = cells.index(target)
            rest = [u for u in target if u != v]
            split = cells[:idx] + [[v], rest] + cells[idx + 1:]
            search(refine(g, split), prefix + [v])

    search(refine(g, [list(range(g.n))]), [])
    return best_cert, best_order


def canonical_form(g: Graph) -> Graph:
    _, order = canonical_labelling(g)
    return relabel(g, order)


def certificate(g: Graph) -> tuple[int, int]:
    return g.n, canonical_labelling(g)[0]


def automorphism_count(g: Graph) -> int:
    """|Aut(G)| as a product of orbit sizes along a stabiliser chain.

    Independent of the canonical search: each level asks, for every candidate
    image of the next base vertex, whether one automorphism extending the
    current partial map exists.
    """
    n, adj = g.n, g.adj
    deg = g.degrees()

    def extend(mapping: dict[int, int], used: int) -> bool:
        if len(mapping) == n:
            return True
        v = next(x for x in range(n) if x not in mapping)
        for w in bits(((1 << n) - 1) & ~used):
            if deg[w] != deg[v]:
                continue
            if all((adj[v] >> a & 1) == (adj[w] >> b & 1) for a, b in mapping.items()):
                mapping[v] = w
                if extend(mapping, used | 1 << w):
                    del mapping[v]
                    return True
                del mapping[v]
        return False

    total = 1
    fixed: dict[int, int] = {}
    used = 0
    for v in range(n):
        orbit = 0
        for w in range(n):
            if used >> w & 1 or deg[w] != deg[v]:
                continue
            if not all((adj[v] >> a & 1) == (adj[w] >> b & 1) for a, b in fixed.items()):
                continue
            fixed[v] = w
            if extend(fixed, used | 1 << w):
                orbit += 1
            del fixed[v]
        total *= orbit
        fixed[v] = v
        used |= 1 << v
    return total
