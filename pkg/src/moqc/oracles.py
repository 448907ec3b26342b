"""Exact solvers for the fixed-cardinality and fixed-density subproblems.

``edks`` is a combinatorial branch-and-bound. It maximises
``sum(weight[v] for v in T) + |E(T)|`` over sets ``T`` of a fixed size; with
zero weights this is the maximum edge count at cardinality ``k``, and with
``weight[v] = -deg(v)`` it is the same problem phrased over the ``n - k``
vertices that are left out, which is the smaller search when ``k > n/2``.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exceptions import InvalidInputError, NoFeasibleQuasiCliqueError, TimeLimitExceeded
from .graph import Graph, mask_edge_count, mask_members, to_mask


@dataclass(frozen=True)
class EdksResult:
    S: frozenset
    m_star: int
    nodes: int = 0
    pruned: int = 0

    @property
    def k(self) -> int:
        return len(self.S)


class Deadline:
    """Cooperative wall-clock budget; ``None`` seconds means unlimited."""

    def __init__(self, seconds: float | None = None):
        if seconds is not None and seconds <= 0:
            raise InvalidInputError("time limit must be positive")
        self.seconds = seconds
        self._end = None if seconds is None else time.perf_counter() + seconds

    def expired(self) -> bool:
        return self._end is not None and time.perf_counter() > self._end

    def check(self):
        if self.expired():
            raise TimeLimitExceeded(f"time limit of {self.seconds}s exceeded")


def _greedy_extension(G: Graph, k: int) -> int:
    masks, degs = G.adjacency_masks, G.degrees
    start = max(range(G.n), key=lambda v: (degs[v], -v))
    chosen = 1 << start
    inside = [0] * G.n
    for u in G.neighbors[start]:
        inside[u] += 1
    for _ in range(k - 1):
        best, best_key = -1, None
        for v in range(G.n):
            if chosen >> v & 1:
                continue
            key = (inside[v], degs[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        chosen |= 1 << best
        for u in G.neighbors[best]:
            inside[u] += 1
    return chosen


def _greedy_peel(G: Graph, k: int) -> int:
    deg = list(G.degrees)
    alive = [True] * G.n
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    left = G.n
    while left > k:
        d, v = heapq.heappop(heap)
        if not alive[v] or d != deg[v]:
            continue
        alive[v] = False
        left -= 1
        for u in G.neighbors[v]:
            if alive[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    mask = 0
    for v in range(G.n):
        if alive[v]:
            mask |= 1 << v
    return mask


class _Stats:
    __slots__ = ("nodes", "pruned")

    def __init__(self):
        self.nodes = 0
        self.pruned = 0


def _branch_and_bound(G, size, weight, best_val, best_mask, deadline, stats):
    """Maximise ``sum(weight[T]) + e(T)`` over ``|T| == size``.

    Returns the best ``(value, mask)``; the incumbent is replaced only by a
    strictly better set, so the first optimum found is kept.
    """
    masks = G.adjacency_masks
    stack = [(0, G.full_mask, 0, size)]
    while stack:
        C, P, val, r = stack.pop()
        stats.nodes += 1
        if deadline is not None and not stats.nodes & 1023:
            deadline.check()
        if r == 0:
            if val > best_val:
                best_val, best_mask = val, C
            continue
        members = mask_members(P)
        if len(members) < r:
            stats.pruned += 1
            continue
        gains = []
        scores = []
        pick, pick_key = -1, None
        inner = 0
        for v in members:
            a = masks[v]
            dc = (a & C).bit_count()
            dp = (a & P).bit_count()
            inner += dp
            g = weight[v] + dc
            s = 2 * g + (dp if dp < r - 1 else r - 1)
            gains.append(g)
            scores.append(s)
            key = (s, dp, -v)
            if pick_key is None or key > pick_key:
                pick, pick_key = v, key
        inner //= 2
        if len(members) == r:
            total = val + sum(gains) + inner
            if total > best_val:
                best_val, best_mask = total, C | P
            continue
        scores.sort(reverse=True)
        bound = val + sum(scores[:r]) // 2
        gains.sort(reverse=True)
        top_gain = sum(gains[:r])
        bound = min(bound, val + top_gain + min(r * (r - 1) // 2, inner))
        if bound <= best_val:
            stats.pruned += 1
            continue
        bit = 1 << pick
        g = weight[pick] + (masks[pick] & C).bit_count()
        stack.append((C, P & ~bit, val, r))
        stack.append((C | bit, P & ~bit, val + g, r - 1))
    return best_val, best_mask


def edks(G: Graph, k: int, *, hint=None, deadline: Deadline | None = None) -> EdksResult:
    """Maximum number of edges induced by ``k`` vertices, with a witness.

    ``hint`` is an optional vertex set of size ``k`` used as the starting
    incumbent; it only speeds the search up.
    """
    n = G.n
    if not isinstance(k, int) or not 1 <= k <= n:
        raise InvalidInputError(f"cardinality must be in 1..{n}, got {k!r}")
    if deadline is not None:
        deadline.check()
    if k == 1:
        return EdksResult(frozenset([0]), 0)
    if k == n:
        return EdksResult(frozenset(range(n)), G.m)

    candidates = []
    if hint is not None:
        hmask = to_mask(G, hint)
        if hmask.bit_count() != k:
            raise InvalidInputError("hint must have exactly k vertices")
        candidates.append(hmask)
    candidates.append(_greedy_extension(G, k))
    candidates.append(_greedy_peel(G, k))
    inc_mask, inc_edges = None, -1
    for c in candidates:
        e = mask_edge_count(G, c)
        if e > inc_edges:
            inc_mask, inc_edges = c, e

    # cheap global bound: k vertices hold at most min(deg, k-1) edge ends each
    cap = sorted((min(d, k - 1) for d in G.degrees), reverse=True)
    if inc_edges >= min(k * (k - 1) // 2, G.m, sum(cap[:k]) // 2):
        return EdksResult(frozenset(mask_members(inc_mask)), inc_edges)

    stats = _Stats()
    if k <= n - k:
        weight = [0] * n
        _, mask = _branch_and_bound(G, k, weight, inc_edges, inc_mask, deadline, stats)
    else:
        weight = [-d for d in G.degrees]
        out = G.full_mask & ~inc_mask
        out_val = inc_edges - G.m
        _, out = _branch_and_bound(G, n - k, weight, out_val, out, deadline, stats)
        mask = G.full_mask & ~out
    return EdksResult(frozenset(mask_members(mask)), mask_edge_count(G, mask), stats.nodes, stats.pruned)


def dks_density(G: Graph, k: int, *, solve: Callable | None = None) -> Fraction:
    """Largest density of an induced subgraph on exactly ``k`` vertices."""
    if not isinstance(k, int) or not 2 <= k <= G.n:
        raise InvalidInputError(f"cardinality must be in 2..{G.n}, got {k!r}")
    res = (solve or edks)(G, k)
    return Fraction(2 * res.m_star, k * (k - 1))


def mqc(G: Graph, gamma, *, solve: Callable | None = None) -> int:
    """Largest ``k`` such that some ``k``-vertex subgraph has density ``>= gamma``.

    Binary search over ``k``; valid because the best density at cardinality
    ``k`` never increases with ``k``.
    """
    gamma = Fraction(gamma)
    if not 0 < gamma <= 1:
        raise InvalidInputError("gamma must lie in (0, 1]")
    if G.m == 0:
        raise NoFeasibleQuasiCliqueError("graph has no edges")
    solve = solve or edks

    def feasible(k):
        return 2 * solve(G, k).m_star * gamma.denominator >= gamma.numerator * k * (k - 1)

    lo, hi = 2, G.n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if feasible(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo
