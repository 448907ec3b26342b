"""Simple undirected graphs, file loaders and induced-subgraph primitives.

Vertices are dense 0-based integers. Vertex sets are passed around as any
iterable of ids (``frozenset`` is what the solvers return); internally they
are converted to Python-int bitmasks so that neighbourhood intersections are a
single ``&`` followed by ``int.bit_count``.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Sequence

from .exceptions import (
    GraphParseError,
    InvalidInputError,
    NoCandidateError,
    UndefinedDensityError,
)

FORMATS = ("edge-list", "dimacs", "matrix-market")


class Graph:
    """Immutable simple undirected graph.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (int, int)
        Vertex pairs. Self-loops are dropped and parallel or antiparallel
        pairs are merged, so any edge iterable is accepted.
    labels : sequence, optional
        Original label of every vertex, used only when writing results.
    """

    __slots__ = ("_n", "_edges", "_neighbors", "_masks", "_degrees", "_labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence | None = None):
        n = int(n)
        if n < 1:
            raise InvalidInputError("a graph needs at least one vertex")
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            canon.add((u, v) if u < v else (v, u))
        self._n = n
        self._edges = tuple(sorted(canon))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in self._edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self._neighbors = tuple(tuple(sorted(a)) for a in nbrs)
        masks = []
        for a in self._neighbors:
            bits = 0
            for w in a:
                bits |= 1 << w
            masks.append(bits)
        self._masks = tuple(masks)
        self._degrees = tuple(len(a) for a in self._neighbors)
        if labels is None:
            self._labels = tuple(range(n))
        else:
            if len(labels) != n:
                raise InvalidInputError("labels must have one entry per vertex")
            self._labels = tuple(labels)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Canonical ``(u, v)`` pairs with ``u < v``, sorted."""
        return self._edges

    @property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return self._neighbors

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    @property
    def labels(self) -> tuple:
        return self._labels

    @property
    def max_degree(self) -> int:
        return max(self._degrees)

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def density(self) -> Fraction:
        return density(self, range(self._n))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))


# -- vertex-set helpers -----------------------------------------------------

def to_mask(G: Graph, S: Iterable[int]) -> int:
    """Bitmask of ``S``; raises on ids outside ``0..n-1``."""
    if isinstance(S, int):
        raise InvalidInputError("a vertex set must be an iterable of ids, not an int")
    mask = 0
    for v in S:
        v = int(v)
        if not 0 <= v < G.n:
            raise InvalidInputError(f"vertex {v} out of range for n={G.n}")
        mask |= 1 << v
    return mask


def mask_members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_edge_count(G: Graph, mask: int) -> int:
    masks = G.adjacency_masks
    total = 0
    for v in mask_members(mask):
        total += (masks[v] & mask).bit_count()
    return total // 2


def induced_edge_count(G: Graph, S: Iterable[int]) -> int:
    """Number of edges of ``G`` with both endpoints in ``S``."""
    return mask_edge_count(G, to_mask(G, S))


def density(G: Graph, S: Iterable[int]) -> Fraction:
    """Exact density ``2|E(S)| / (|S|(|S|-1))`` of the subgraph induced by ``S``."""
    mask = to_mask(G, S)
    k = mask.bit_count()
    if k < 2:
        raise UndefinedDensityError("density needs at least two vertices")
    return Fraction(2 * mask_edge_count(G, mask), k * (k - 1))


def is_clique_count(m: int, k: int) -> bool:
    return 2 * m == k * (k - 1)


def min_degree_vertex(G: Graph, S: Iterable[int]) -> int:
    """Vertex of minimum degree inside ``G[S]``.

    Ties go to the vertex whose in-``S`` neighbours have the smallest total
    in-``S`` degree, then to the smallest id.
    """
    mask = to_mask(G, S)
    if not mask:
        raise InvalidInputError("empty vertex set")
    masks = G.adjacency_masks
    members = mask_members(mask)
    deg = {v: (masks[v] & mask).bit_count() for v in members}
    best = None
    for v in members:
        nsum = sum(deg[u] for u in mask_members(masks[v] & mask))
        key = (deg[v], nsum, v)
        if best is None or key < best:
            best = key
    return best[2]


def max_degree_extension_vertex(G: Graph, S: Iterable[int]) -> int:
    """Vertex outside ``S`` with the most neighbours inside ``S``.

    Ties go to the larger degree in ``G``, then to the smallest id.
    """
    mask = to_mask(G, S)
    outside = G.full_mask & ~mask
    if not outside:
        raise NoCandidateError("S already contains every vertex")
    masks, degs = G.adjacency_masks, G.degrees
    best = None
    for v in mask_members(outside):
        key = (-(masks[v] & mask).bit_count(), -degs[v], v)
        if best is None or key < best:
            best = key
    return best[2]


# -- loaders -----------------------------------------------------------------

def _infer_format(path) -> str:
    ext = os.path.splitext(str(path))[1].lower()
    if ext == ".mtx":
        return "matrix-market"
    if ext in (".col", ".clq", ".dimacs"):
        return "dimacs"
    return "edge-list"


def load_graph(path, format: str | None = None) -> Graph:
    """Read a graph file and return it simplified.

    ``format`` is one of ``"edge-list"``, ``"dimacs"`` or ``"matrix-market"``;
    when omitted it is guessed from the file extension. Direction is ignored,
    self-loops are removed and repeated edges merged.
    """
    if format is None:
        format = _infer_format(path)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_graph(text, format)


def parse_graph(text: str, format: str) -> Graph:
    if format == "edge-list":
        return _parse_edge_list(text)
    if format == "dimacs":
        return _parse_dimacs(text)
    if format == "matrix-market":
        return _parse_matrix_market(text)
    raise InvalidInputError(f"unknown graph format {format!r}; expected one of {FORMATS}")


def _parse_int(tok: str, lineno: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise GraphParseError(f"expected an integer, got {tok!r}", lineno) from None
    return value


def _parse_edge_list(text: str) -> Graph:
    ids: dict[int, int] = {}
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        toks = line.split()
        if len(toks) < 2:
            raise GraphParseError("expected two vertex labels", lineno)
        u, v = _parse_int(toks[0], lineno), _parse_int(toks[1], lineno)
        if u < 0 or v < 0:
            raise GraphParseError("vertex labels must be non-negative", lineno)
        for x in (u, v):
            if x not in ids:
                ids[x] = len(ids)
        pairs.append((ids[u], ids[v]))
    if not ids:
        raise InvalidInputError("graph has no vertices")
    return Graph(len(ids), pairs, labels=list(ids))


def _parse_dimacs(text: str) -> Graph:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        toks = line.split()
        if toks[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", lineno)
            if len(toks) < 4:
                raise GraphParseError("problem line must be 'p edge <n> <m>'", lineno)
            n = _parse_int(toks[2], lineno)
            _parse_int(toks[3], lineno)
            if n < 0:
                raise GraphParseError("negative vertex count", lineno)
        elif toks[0] == "e":
            if n is None:
                raise GraphParseError("edge line before the problem line", lineno)
            if len(toks) < 3:
                raise GraphParseError("edge line must be 'e <u> <v>'", lineno)
            u, v = _parse_int(toks[1], lineno), _parse_int(toks[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"vertex out of range 1..{n}", lineno)
            pairs.append((u - 1, v - 1))
        else:
            raise GraphParseError(f"unknown line type {toks[0]!r}", lineno)
    if n is None:
        raise GraphParseError("missing problem line")
    if n == 0:
        raise InvalidInputError("graph has no vertices")
    return Graph(n, pairs, labels=list(range(1, n + 1)))


def _parse_matrix_market(text: str) -> Graph:
    lines = text.splitlines()
    if not lines or not lines[0].lower().startswith("%%matrixmarket"):
        raise GraphParseError("missing %%MatrixMarket header", 1)
    header = lines[0].lower().split()
    if len(header) < 5 or header[1] != "matrix" or header[2] != "coordinate":
        raise GraphParseError("only 'matrix coordinate' files are supported", 1)
    size = None
    nnz = 0
    pairs = []
    for lineno, raw in enumerate(lines[1:], 2):
        line = raw.strip()
        if not line or line[0] == "%":
            continue
        toks = line.split()
        if size is None:
            if len(toks) != 3:
                raise GraphParseError("size line must be '<rows> <cols> <entries>'", lineno)
            rows, cols, nnz = (_parse_int(t, lineno) for t in toks)
            size = max(rows, cols)
            continue
        if len(toks) < 2:
            raise GraphParseError("entry line needs row and column", lineno)
        i, j = _parse_int(toks[0], lineno), _parse_int(toks[1], lineno)
        if not (1 <= i <= size and 1 <= j <= size):
            raise GraphParseError(f"entry out of range 1..{size}", lineno)
        pairs.append((i - 1, j - 1))
    if size is None:
        raise GraphParseError("missing size line")
    if len(pairs) != nnz:
        raise GraphParseError(f"expected {nnz} entries, found {len(pairs)}")
    if size == 0:
        raise InvalidInputError("graph has no vertices")
    return Graph(size, pairs, labels=list(range(1, size + 1)))
