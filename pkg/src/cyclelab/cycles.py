"""Exact longest paths and cycles under the extended cycle definition.

A single vertex counts as a cycle of order 1 and an edge as a cycle of order
2, so every nonempty graph has circumference at least 1. Orders up to
``DP_CUTOFF`` use a dynamic program over (vertex subset, endpoint); larger
graphs fall back to depth-first search with reachability pruning.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .graph import Graph, bits, component_of, connected_components, induced_subgraph, popcount
from .invariants import InvariantBundle, invariant_bundle

DP_CUTOFF = 16
DEFAULT_CYCLE_LIMIT = 10**6


class InvalidCycleError(ValueError):
    pass


class EnumerationLimitError(RuntimeError):
    """More longest cycles than the configured cap; results would be incomplete."""


class BudgetExceeded(RuntimeError):
    """The per-graph time budget ran out."""


@dataclass(frozen=True)
class CycleSeq:
    vertices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)


def canonical_cycle(vertices) -> CycleSeq:
    """Smallest rotation/reflection of the vertex sequence."""
    seq = list(vertices)
    if len(seq) <= 2:
        return CycleSeq(tuple(sorted(seq)))
    k = seq.index(min(seq))
    seq = seq[k:] + seq[:k]
    if seq[-1] < seq[1]:
        seq = [seq[0]] + seq[:0:-1]
    return CycleSeq(tuple(seq))


def validate_cycle(g: Graph, cycle: CycleSeq) -> None:
    vs = cycle.vertices
    if not vs:
        raise InvalidCycleError("a cycle has at least one vertex")
    if len(set(vs)) != len(vs):
        raise InvalidCycleError(f"repeated vertex in {vs}")
    if any(not 0 <= v < g.n for v in vs):
        raise InvalidCycleError(f"vertex out of range in {vs}")
    t = len(vs)
    if t == 2 and not g.has_edge(*vs):
        raise InvalidCycleError(f"{vs} is not an edge")
    if t >= 3:
        for i in range(t):
            if not g.has_edge(vs[i], vs[(i + 1) % t]):
                raise InvalidCycleError(f"{vs[i]}-{vs[(i + 1) % t]} is not an edge")


class _Clock:
    __slots__ = ("deadline", "ticks")

    def __init__(self, deadline: float | None):
        self.deadline = deadline
        self.ticks = 0

    def tick(self) -> None:
        if self.deadline is None:
            return
        self.ticks += 1
        if self.ticks & 0x3FF == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("per-graph time budget exhausted")


# longest path -------------------------------------------------------------


def longest_path_order(g: Graph, deadline: float | None = None) -> int:
    """Number of vertices on a longest path; 0 for the empty graph."""
    if g.n == 0:
        return 0
    if g.n <= DP_CUTOFF:
        return _longest_path_dp(g)
    return _longest_path_dfs(g, _Clock(deadline))


def _longest_path_dp(g: Graph) -> int:
    n, adj = g.n, g.adj
    size = 1 << n
    # reach[mask]: endpoints of paths that visit exactly the vertices of mask
    reach = [0] * size
    for v in range(n):
        reach[1 << v] = 1 << v
    best_mask = 0
    for mask in range(1, size):
        ends = reach[mask]
        if not ends:
            continue
        best_mask = mask if popcount(mask) > popcount(best_mask) else best_mask
        for v in bits(ends):
            for w in bits(adj[v] & ~mask):
                reach[mask | 1 << w] |= 1 << w
    return popcount(best_mask)


def _longest_path_dfs(g: Graph, clock: _Clock) -> int:
    best = 1

    def grow(end: int, used: int, length: int) -> None:
        nonlocal best
        clock.tick()
        best = max(best, length)
        if best == g.n:
            return
        free = g.vertex_mask & ~used
        if length + popcount(component_of(g, end, free | 1 << end)) - 1 <= best:
            return
        for w in bits(g.adj[end] & free):
            grow(w, used | 1 << w, length + 1)

    for comp in connected_components(g):
        if popcount(comp) <= best:
            continue
        for v in bits(comp):
            grow(v, 1 << v, 1)
    return best


# circumference ------------------------------------------------------------


def circumference(g: Graph, deadline: float | None = None) -> int:
    """Order of a longest extended cycle: 0 empty, 1 edgeless, 2 forest with edges."""
    if g.n == 0:
        return 0
    if not any(g.adj):
        return 1
    if g.n <= DP_CUTOFF:
        c = _circumference_dp(g)
    else:
        c = _circumference_dfs(g, _Clock(deadline))
    return max(c, 2)


def _circumference_dp(g: Graph) -> int:
    n, adj = g.n, g.adj
    best = 0
    for s in range(n):
        if popcount(adj[s] >> (s + 1)) < 2:
            continue
        # paths starting at s through vertices above s, stored by offset mask
        span = n - s
        reach = {1: 1}
        by_size = [[1]]
        for size in range(1, span):
            layer = []
            for mask in by_size[-1]:
                ends = reach[mask]
                for v in bits(ends):
                    for w in bits((adj[s + v] >> s) & ~mask):
                        nxt = mask | 1 << w
                        if nxt in reach:
                            reach[nxt] |= 1 << w
                        else:
                            reach[nxt] = 1 << w
                            layer.append(nxt)
            if not layer:
                break
            by_size.append(layer)
            if size >= 2 and size + 1 > best:
                home = adj[s] >> s
                if any(reach[m] & home for m in layer):
                    best = size + 1
        if best == n:
            break
    return best


def _circumference_dfs(g: Graph, clock: _Clock) -> int:
    best = 0

    def grow(s: int, end: int, used: int, length: int, allowed: int) -> None:
        nonlocal best
        clock.tick()
        if length >= 3 and g.adj[end] >> s & 1 and length > best:
            best = length
        free = allowed & ~used
        reach = component_of(g, end, free | 1 << end) & ~(1 << end)
        if length + popcount(reach) <= best or not g.adj[s] & (reach | 1 << end):
            return
        for w in bits(g.adj[end] & free):
            grow(s, w, used | 1 << w, length + 1, allowed)

    for s in range(g.n):
        allowed = g.vertex_mask & ~((1 << s) - 1)
        if popcount(component_of(g, s, allowed)) <= best:
            continue
        grow(s, s, 1 << s, 1, allowed)
    return best


# enumeration --------------------------------------------------------------


def enumerate_longest_cycles(
    g: Graph,
    limit: int = DEFAULT_CYCLE_LIMIT,
    deadline: float | None = None,
) -> list[CycleSeq]:
    """Every longest extended cycle once, in canonical form, sorted.

    Raises EnumerationLimitError rather than truncating when more than
    ``limit`` cycles exist.
    """
    c = circumference(g, deadline)
    return cycles_of_order(g, c, limit, deadline)


def cycles_of_order(
    g: Graph,
    c: int,
    limit: int = DEFAULT_CYCLE_LIMIT,
    deadline: float | None = None,
) -> list[CycleSeq]:
    if c <= 0:
        return []
    if c == 1:
        found = [CycleSeq((v,)) for v in range(g.n)]
    elif c == 2:
        found = [CycleSeq(e) for e in g.edges()]
    else:
        found = _cycles_dfs(g, c, limit, _Clock(deadline))
    if len(found) > limit:
        raise EnumerationLimitError(f"more than {limit} cycles of order {c}")
    return sorted(found, key=lambda cyc: cyc.vertices)


def _cycles_dfs(g: Graph, c: int, limit: int, clock: _Clock) -> list[CycleSeq]:
    adj = g.adj
    found: list[CycleSeq] = []
    path: list[int] = []

    def grow(s: int, end: int, used: int, allowed: int) -> None:
        clock.tick()
        length = len(path)
        if length == c:
            if adj[end] >> s & 1 and path[1] < path[-1]:
                found.append(CycleSeq(tuple(path)))
                if len(found) > limit:
                    raise EnumerationLimitError(f"more than {limit} cycles of order {c}")
            return
        free = allowed & ~used
        reach = component_of(g, end, free | 1 << end) & ~(1 << end)
        if length + popcount(reach) < c or not adj[s] & (reach | 1 << end):
            return
        for w in bits(adj[end] & free):
            path.append(w)
            grow(s, w, used | 1 << w, allowed)
            path.pop()

    for s in range(g.n - c + 1):
        allowed = g.vertex_mask & ~((1 << s) - 1)
        if popcount(component_of(g, s, allowed)) < c:
            continue
        path.append(s)
        grow(s, s, 1 << s, allowed)
        path.pop()
    return found


# residuals and classification ---------------------------------------------


@dataclass(frozen=True)
class ResidualProfile:
    """Longest path and longest extended cycle orders of G - C.

    ``largest_component`` is the order of the biggest component of G - C,
    which decides the D_lambda property.
    """

    p_bar: int
    c_bar: int
    largest_component: int

    def is_d(self, lam: int) -> bool:
        return self.largest_component <= lam - 1

    def is_pd(self, lam: int) -> bool:
        return self.p_bar <= lam - 1

    def is_cd(self, lam: int) -> bool:
        return self.c_bar <= lam - 1


def _residual_of_mask(g: Graph, rest: int, deadline: float | None = None) -> ResidualProfile:
    if not rest:
        return ResidualProfile(0, 0, 0)
    sub, _ = induced_subgraph(g, rest)
    largest = max(popcount(comp) for comp in connected_components(sub))
    return ResidualProfile(
        longest_path_order(sub, deadline), circumference(sub, deadline), largest
    )


def residual_profile(g: Graph, cycle: CycleSeq) -> ResidualProfile:
    """Residual orders (p_bar, c_bar) of ``cycle``; (0, 0) when it spans G."""
    validate_cycle(g, cycle)
    return _residual_of_mask(g, g.vertex_mask & ~cycle.mask)


def _check_lambda(lam: int) -> None:
    if lam < 1:
        raise ValueError("lambda must be a positive integer")


def is_D_lambda_cycle(g: Graph, cycle: CycleSeq, lam: int) -> bool:
    _check_lambda(lam)
    return residual_profile(g, cycle).is_d(lam)


def is_PD_lambda_cycle(g: Graph, cycle: CycleSeq, lam: int) -> bool:
    _check_lambda(lam)
    return residual_profile(g, cycle).is_pd(lam)


def is_CD_lambda_cycle(g: Graph, cycle: CycleSeq, lam: int) -> bool:
    _check_lambda(lam)
    return residual_profile(g, cycle).is_cd(lam)


@dataclass(frozen=True)
class CycleAnalysis:
    circumference: int
    longest_cycles: tuple[CycleSeq, ...]
    profiles: tuple[ResidualProfile, ...] = field(repr=False)

    def classification(self, lam: int) -> list[dict[str, bool]]:
        """D/PD/CD flags of every longest cycle for one lambda."""
        _check_lambda(lam)
        return [
            {"D": p.is_d(lam), "PD": p.is_pd(lam), "CD": p.is_cd(lam)} for p in self.profiles
        ]

    def distinct_profiles(self) -> list[tuple[int, int]]:
        return sorted({(p.p_bar, p.c_bar) for p in self.profiles})

    def to_dict(self, max_lambda: int | None = None) -> dict:
        out = {
            "circumference": self.circumference,
            "longest_cycle_count": len(self.longest_cycles),
            "longest_cycles": [
                {
                    "cycle": list(cyc.vertices),
                    "p_bar": p.p_bar,
                    "c_bar": p.c_bar,
                    "largest_component": p.largest_component,
                }
                for cyc, p in zip(self.longest_cycles, self.profiles)
            ],
        }
        if max_lambda:
            out["classification"] = {
                str(lam): {
                    kind: sum(flags[kind] for flags in self.classification(lam))
                    for kind in ("D", "PD", "CD")
                }
                for lam in range(1, max_lambda + 1)
            }
        return out


def analyze_cycles(
    g: Graph,
    limit: int = DEFAULT_CYCLE_LIMIT,
    deadline: float | None = None,
) -> CycleAnalysis:
    cycles = enumerate_longest_cycles(g, limit, deadline)
    cache: dict[int, ResidualProfile] = {}
    profiles = []
    for cyc in cycles:
        rest = g.vertex_mask & ~cyc.mask
        if rest not in cache:
            cache[rest] = _residual_of_mask(g, rest, deadline)
        profiles.append(cache[rest])
    c = cycles[0].order if cycles else 0
    return CycleAnalysis(c, tuple(cycles), tuple(profiles))


def analyze(
    g: Graph,
    limit: int = DEFAULT_CYCLE_LIMIT,
    deadline: float | None = None,
) -> tuple[InvariantBundle, CycleAnalysis]:
    """Invariants plus full longest-cycle analysis of a nonempty graph."""
    if g.n < 1:
        raise ValueError("analyze needs at least one vertex")
    return invariant_bundle(g), analyze_cycles(g, limit, deadline)
