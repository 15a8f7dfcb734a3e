"""Brute-force reference implementations used as independent test oracles.

Nothing here calls into cyclelab beyond reading ``g.n`` and ``g.adj``.
"""

from itertools import combinations, permutations


def edge_set(g):
    return {(i, j) for i in range(g.n) for j in range(i + 1, g.n) if g.adj[i] >> j & 1}


def adjacent(g, u, v):
    return bool(g.adj[u] >> v & 1)


def is_path(g, seq):
    return all(adjacent(g, a, b) for a, b in zip(seq, seq[1:]))


def is_proper_cycle(g, seq):
    return len(seq) >= 3 and is_path(g, seq) and adjacent(g, seq[-1], seq[0])


def longest_path(g, vertices=None):
    """Largest t such that some permutation of a t-subset is a path."""
    vs = list(range(g.n)) if vertices is None else list(vertices)
    for t in range(len(vs), 0, -1):
        for subset in combinations(vs, t):
            if any(is_path(g, p) for p in permutations(subset)):
                return t
    return 0


def circumference(g, vertices=None):
    """Extended circumference by permutation search over subsets."""
    vs = list(range(g.n)) if vertices is None else list(vertices)
    if not vs:
        return 0
    for t in range(len(vs), 2, -1):
        for subset in combinations(vs, t):
            first, rest = subset[0], subset[1:]
            if any(is_proper_cycle(g, (first,) + p) for p in permutations(rest)):
                return t
    if any(adjacent(g, u, v) for u, v in combinations(vs, 2)):
        return 2
    return 1


def cycles_of_length(g, t):
    """All proper cycles of order t as frozensets of undirected edges (deduplicated)."""
    found = set()
    for subset in combinations(range(g.n), t):
        first, rest = subset[0], subset[1:]
        for p in permutations(rest):
            seq = (first,) + p
            if is_proper_cycle(g, seq):
                found.add(frozenset(frozenset((seq[i], seq[(i + 1) % t])) for i in range(t)))
    return found


def is_independent(g, subset):
    return all(not adjacent(g, u, v) for u, v in combinations(subset, 2))


def independence_number(g):
    for k in range(g.n, 0, -1):
        if any(is_independent(g, s) for s in combinations(range(g.n), k)):
            return k
    return 0


def sigma(g, k):
    """Minimum degree sum over independent k-sets, or None if there is none."""
    deg = [bin(r).count("1") for r in g.adj]
    sums = [sum(deg[v] for v in s) for s in combinations(range(g.n), k) if is_independent(g, s)]
    return min(sums) if sums else None


def connected(g, vertices):
    vs = list(vertices)
    if not vs:
        return False
    seen = {vs[0]}
    stack = [vs[0]]
    allowed = set(vs)
    while stack:
        v = stack.pop()
        for u in allowed:
            if u not in seen and adjacent(g, u, v):
                seen.add(u)
                stack.append(u)
    return seen == allowed


def components(g, vertices):
    left = set(vertices)
    out = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in list(left):
                if u not in comp and adjacent(g, u, v):
                    comp.add(u)
                    stack.append(u)
        out.append(comp)
        left -= comp
    return out


def vertex_connectivity(g):
    """Smallest vertex set whose removal disconnects; n-1 for complete graphs."""
    n = g.n
    if n <= 1:
        return 0
    if len(edge_set(g)) == n * (n - 1) // 2:
        return n - 1
    for k in range(0, n - 1):
        for cut in combinations(range(n), k):
            rest = [v for v in range(n) if v not in cut]
            if len(rest) >= 2 and not connected(g, rest):
                return k
    return n - 1


def graph6_encode(g):
    """Straight-from-the-format encoder working on a '0'/'1' string."""
    n = g.n
    assert n <= 62
    bitstring = "".join(
        "1" if adjacent(g, i, j) else "0" for j in range(1, n) for i in range(j)
    )
    while len(bitstring) % 6:
        bitstring += "0"
    chunks = [bitstring[k:k + 6] for k in range(0, len(bitstring), 6)]
    return chr(63 + n) + "".join(chr(63 + int(c, 2)) for c in chunks)


def girth(g):
    for t in range(3, g.n + 1):
        if cycles_of_length(g, t):
            return t
    return None
