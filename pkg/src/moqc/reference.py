"""Exhaustive ground truth for small graphs.

Everything here enumerates all ``2**n`` vertex subsets with numpy and shares
no search or bounding code with the solvers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exceptions import SizeGuardError
from .graph import Graph

MAX_N = 20
MAX_N_OVERRIDE = 24


@dataclass(frozen=True)
class BruteTable:
    """Per-cardinality optima of a small graph.

    ``max_edges[k]`` is the largest induced edge count over ``k``-vertex
    subsets (index 0 unused), ``witnesses[k]`` the lexicographically smallest
    sorted subset attaining it.
    """

    n: int
    max_edges: tuple
    witnesses: tuple
    omega: int
    mos_nondominated: tuple
    moqc_nondominated: tuple

    @property
    def z_hat(self) -> list[tuple[int, int]]:
        """``(edges, k)`` for ``k`` from the clique number to ``n``."""
        return [(self.max_edges[k], k) for k in range(self.omega, self.n + 1)]


def _guard(G: Graph, allow_large: bool):
    limit = MAX_N_OVERRIDE if allow_large else MAX_N
    if G.n > limit:
        raise SizeGuardError(f"brute force refused for n={G.n} > {limit}")


@lru_cache(maxsize=64)
def _tables(G: Graph):
    n = G.n
    size = 1 << n
    edges = np.zeros(size, dtype=np.int32)
    card = np.zeros(size, dtype=np.int32)
    nbr = np.array(G.adjacency_masks, dtype=np.int64)
    for v in range(n):
        lo, hi = 1 << v, 1 << (v + 1)
        sub = np.arange(lo, dtype=np.int64)
        # adding v to every subset of {0..v-1}
        common = np.bitwise_and(sub, nbr[v])
        gain = np.zeros(lo, dtype=np.int32)
        for u in range(v):
            gain += ((common >> u) & 1).astype(np.int32)
        edges[lo:hi] = edges[:lo] + gain
        card[lo:hi] = card[:lo] + 1
    return edges, card


def _members(mask: int) -> tuple:
    return tuple(v for v in range(mask.bit_length()) if mask >> v & 1)


def brute_frontier(G: Graph, *, allow_large: bool = False) -> BruteTable:
    """Exact per-cardinality maxima and both nondominated sets."""
    _guard(G, allow_large)
    edges, card = _tables(G)
    n = G.n
    max_edges = [0] * (n + 1)
    witnesses = [()] * (n + 1)
    for k in range(1, n + 1):
        idx = np.flatnonzero(card == k)
        best = int(edges[idx].max())
        max_edges[k] = best
        ties = idx[edges[idx] == best]
        witnesses[k] = min(_members(int(t)) for t in ties)
    omega = max(k for k in range(1, n + 1) if 2 * max_edges[k] == k * (k - 1))

    # nondominated points over every subset, not just the per-k maxima
    pts = {(int(e), int(c)) for e, c in zip(edges[1:], card[1:])}
    mos = sorted(p for p in pts
                 if not any(q[0] >= p[0] and q[1] <= p[1] and q != p for q in pts))
    dens = {(Fraction(2 * e, c * (c - 1)), c) for e, c in pts if c >= 2}
    moqc = sorted(((d, c) for d, c in dens
                   if not any(d2 >= d and c2 >= c and (d2, c2) != (d, c) for d2, c2 in dens)),
                  key=lambda p: p[1])
    return BruteTable(n, tuple(max_edges), tuple(witnesses), omega, tuple(mos), tuple(moqc))


def brute_ws(G: Graph, w1: int, w2: int, *, allow_large: bool = False) -> int:
    """Largest ``w1*|E(S)| - w2*|S|`` over nonempty ``S``."""
    _guard(G, allow_large)
    edges, card = _tables(G)
    vals = w1 * edges[1:].astype(np.int64) - w2 * card[1:].astype(np.int64)
    return int(vals.max())


def brute_is_weakly_efficient(G: Graph, point, *, allow_large: bool = False) -> bool:
    """No subset has strictly more edges and strictly fewer vertices than ``point``."""
    _guard(G, allow_large)
    m, k = point
    edges, card = _tables(G)
    return not bool(np.any((edges[1:] > m) & (card[1:] < k)))


def brute_omega(G: Graph, *, allow_large: bool = False) -> int:
    return brute_frontier(G, allow_large=allow_large).omega
