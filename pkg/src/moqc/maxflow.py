"""Maximum flow and the weighted-sum subgraph oracle built on it.

Maximising ``w1*|E(S)| - w2*|S|`` is a maximum-weight closure problem: every
edge is a project worth ``w1`` that requires both of its endpoints, every
vertex a resource costing ``w2``. The LP relaxation of that model is integral,
so one minimum cut solves it exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .exceptions import InvalidInputError
from .graph import Graph, mask_edge_count, to_mask


@dataclass(frozen=True)
class FlowNetwork:
    """Directed network with non-negative integer capacities.

    A capacity of ``None`` marks an infinite arc; it is replaced by a value
    larger than the sum of all finite capacities before solving.
    """

    n_nodes: int
    arcs: Sequence[tuple[int, int, int | None]]
    source: int
    sink: int

    def __post_init__(self):
        if self.source == self.sink:
            raise InvalidInputError("source and sink must differ")
        for node in (self.source, self.sink):
            if not 0 <= node < self.n_nodes:
                raise InvalidInputError("source/sink out of range")
        for u, v, cap in self.arcs:
            if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
                raise InvalidInputError(f"arc ({u}, {v}) out of range")
            if cap is not None and cap < 0:
                raise InvalidInputError("capacities must be non-negative")

    def infinity(self) -> int:
        return sum(c for _, _, c in self.arcs if c is not None) + 1


class _Residual:
    """Arc arrays shared by repeated Dinic runs over different capacity vectors."""

    def __init__(self, n_nodes: int):
        self.n = n_nodes
        self.head: list[list[int]] = [[] for _ in range(n_nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, c: int) -> int:
        a = len(self.to)
        self.head[u].append(a)
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(a + 1)
        self.to.append(u)
        self.cap.append(0)
        return a

    def augment(self, cap: list[int], s: int, t: int) -> int:
        """Push a maximum flow into residual capacities ``cap`` (in place)."""
        head, to, n = self.head, self.to, self.n
        flow = 0
        while True:
            level = [-1] * n
            level[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for a in head[u]:
                    if cap[a] and level[to[a]] < 0:
                        level[to[a]] = level[u] + 1
                        queue.append(to[a])
            if level[t] < 0:
                return flow
            it = [0] * n
            while True:
                path = []
                u = s
                while u != t:
                    arcs = head[u]
                    i = it[u]
                    while i < len(arcs):
                        a = arcs[i]
                        if cap[a] and level[to[a]] == level[u] + 1:
                            break
                        i += 1
                    it[u] = i
                    if i == len(arcs):
                        if u == s:
                            break
                        level[u] = -1
                        u = to[path.pop() ^ 1]
                        continue
                    path.append(arcs[i])
                    u = to[arcs[i]]
                if u != t:
                    break
                push = min(cap[a] for a in path)
                for a in path:
                    cap[a] -= push
                    cap[a ^ 1] += push
                flow += push

    def reachable(self, cap: list[int], s: int) -> list[bool]:
        head, to = self.head, self.to
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in head[u]:
                if cap[a] and not seen[to[a]]:
                    seen[to[a]] = True
                    queue.append(to[a])
        return seen


def max_flow_min_cut(net: FlowNetwork) -> tuple[int, frozenset[int]]:
    """Dinic's algorithm.

    Returns the maximum flow value and the source side of the minimum cut
    that is smallest by inclusion (nodes reachable from the source in the
    final residual network).
    """
    inf = net.infinity()
    res = _Residual(net.n_nodes)
    for u, v, c in net.arcs:
        res.add_arc(u, v, inf if c is None else c)
    cap = res.cap
    flow = res.augment(cap, net.source, net.sink)
    seen = res.reachable(cap, net.source)
    return flow, frozenset(i for i in range(net.n_nodes) if seen[i])


@dataclass(frozen=True)
class WsSolution:
    """Nonempty maximiser of ``w1*|E(S)| - w2*|S|``."""

    S: frozenset
    value: int
    w1: int
    w2: int
    edges: int = field(default=0)

    @property
    def k(self) -> int:
        return len(self.S)


def ws_mos_optimum(G: Graph, w1: int, w2: int) -> WsSolution:
    """Exact maximiser of ``w1*|E(S)| - w2*|S|`` over nonempty vertex sets.

    Among optima the one with fewest vertices is returned, then the
    lexicographically smallest sorted vertex tuple.
    """
    if not (isinstance(w1, int) and isinstance(w2, int)) or w1 <= 0 or w2 <= 0:
        raise InvalidInputError("weights must be positive integers")
    # node 0 = source, 1 = sink, 2..2+m-1 = edges, 2+m.. = vertices
    m, n = G.m, G.n
    base = 2 + m
    inf = w1 * m + w2 * n + 1
    net = _Residual(base + n)
    for idx, (u, v) in enumerate(G.edges):
        net.add_arc(0, 2 + idx, w1)
        net.add_arc(2 + idx, base + u, inf)
        net.add_arc(2 + idx, base + v, inf)
    for v in range(n):
        net.add_arc(base + v, 1, w2)
    # zero-capacity source arcs, raised to infinity to force a vertex in
    force = [net.add_arc(0, base + v, 0) for v in range(n)]

    cap = list(net.cap)
    cut = net.augment(cap, 0, 1)
    seen = net.reachable(cap, 0)
    S = frozenset(v for v in range(n) if seen[base + v])
    if S:
        return WsSolution(S, w1 * m - cut, w1, w2, mask_edge_count(G, to_mask(G, S)))

    # The empty set is optimal with value 0. Force each vertex in turn,
    # warm-starting from the residual network above: forcing v costs exactly
    # the extra flow. Forcing v cannot beat w1*deg(v) - w2, and {0} wins
    # every tie at -w2.
    best_key = (w2, 1, (0,))
    best = (-w2, frozenset([0]))
    degs = G.degrees
    for v in range(n):
        bound = w1 * degs[v] - w2
        if bound < best[0] or bound == -w2:
            continue
        cap_v = list(cap)
        cap_v[force[v]] = inf
        extra = net.augment(cap_v, 0, 1)
        seen = net.reachable(cap_v, 0)
        Sv = frozenset(u for u in range(n) if seen[base + u])
        key = (extra, len(Sv), tuple(sorted(Sv)))
        if key < best_key:
            best_key, best = key, (-extra, Sv)
    value, S = best
    return WsSolution(S, value, w1, w2, mask_edge_count(G, to_mask(G, S)))
