"""scikit-learn style front end."""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from sklearn.base import BaseEstimator

from .exceptions import InvalidInputError
from .graph import Graph
from .pareto import map_mos_to_moqc
from .strategies import STRATEGIES, run_moqc_alg1, run_moqc_alg2, solve_mos


def check_graph(X, *, kind: str = "auto", n_vertices: int | None = None) -> Graph:
    """Coerce ``X`` into a :class:`Graph`.

    Accepted inputs are a ``Graph``, a square adjacency matrix (dense or
    scipy sparse; any nonzero entry is an edge, direction and the diagonal
    are ignored) and an ``(E, 2)`` integer array of edges on vertices
    ``0..n-1``. With ``kind="auto"`` a square array is read as adjacency, so
    pass ``kind="edges"`` for a 2-edge list.
    """
    if kind not in ("auto", "adjacency", "edges"):
        raise InvalidInputError(f"unknown input kind {kind!r}")
    if isinstance(X, Graph):
        return X
    if sp.issparse(X):
        if kind == "edges":
            raise InvalidInputError("sparse input must be an adjacency matrix")
        return _from_adjacency(sp.coo_matrix(X))
    arr = np.asarray(X)
    if arr.ndim != 2:
        raise InvalidInputError(f"expected a 2-D array, got shape {arr.shape}")
    if kind == "auto":
        kind = "adjacency" if arr.shape[0] == arr.shape[1] else "edges"
    if kind == "adjacency":
        if arr.shape[0] != arr.shape[1]:
            raise InvalidInputError(f"adjacency matrix must be square, got {arr.shape}")
        return _from_adjacency(sp.coo_matrix(arr))
    return _from_edges(arr, n_vertices)


def _from_adjacency(A: sp.coo_matrix) -> Graph:
    n = A.shape[0]
    if A.shape[0] != A.shape[1]:
        raise InvalidInputError(f"adjacency matrix must be square, got {A.shape}")
    if n == 0:
        raise InvalidInputError("graph has no vertices")
    keep = A.data != 0
    if np.issubdtype(A.data.dtype, np.floating) and not np.all(np.isfinite(A.data)):
        raise InvalidInputError("adjacency matrix contains non-finite values")
    return Graph(n, zip(A.row[keep].tolist(), A.col[keep].tolist()))


def _from_edges(E: np.ndarray, n_vertices: int | None) -> Graph:
    if E.shape[1] != 2:
        raise InvalidInputError(f"edge array must have shape (E, 2), got {E.shape}")
    if E.size and not np.issubdtype(E.dtype, np.integer):
        if not np.all(np.mod(E, 1) == 0):
            raise InvalidInputError("edge endpoints must be integers")
        E = E.astype(np.int64)
    if E.size and E.min() < 0:
        raise InvalidInputError("edge endpoints must be non-negative")
    n = int(E.max()) + 1 if E.size else 0
    if n_vertices is not None:
        if n_vertices < n:
            raise InvalidInputError(f"edge endpoint {n - 1} exceeds n_vertices={n_vertices}")
        n = n_vertices
    if n == 0:
        raise InvalidInputError("graph has no vertices")
    return Graph(n, map(tuple, E.tolist()))


class QuasiCliqueFrontier(BaseEstimator):
    """Exact nondominated set of (density, size) quasi-cliques of a graph.

    Parameters
    ----------
    strategy : {"baseline", "two-phase", "three-phase", "alg1", "alg2"}
        Frontier strategies compute the per-size edge maxima first and map
        them to quasi-clique points; ``alg1``/``alg2`` search the quasi-clique
        space directly and leave ``frontier_`` as ``None``.
    time_limit : float or None
        Wall-clock budget in seconds.

    Attributes
    ----------
    graph_ : Graph
    frontier_ : LabeledFrontier or None
        One entry per size from the clique number to ``n``.
    moqc_points_ : list of MoqcPoint
        Sorted by increasing size, hence decreasing density.
    moqc_witnesses_ : list of frozenset
    report_ : RunReport
    """

    def __init__(self, strategy: str = "three-phase", time_limit: float | None = None):
        self.strategy = strategy
        self.time_limit = time_limit

    def fit(self, X, y=None):
        if self.strategy not in STRATEGIES:
            raise InvalidInputError(f"strategy must be one of {STRATEGIES}, got {self.strategy!r}")
        if self.time_limit is not None and not self.time_limit > 0:
            raise InvalidInputError("time_limit must be positive")
        G = check_graph(X)
        if self.strategy == "alg1":
            pts, wit, rep = run_moqc_alg1(G, time_limit=self.time_limit)
            frontier = None
        elif self.strategy == "alg2":
            pts, wit, rep = run_moqc_alg2(G, time_limit=self.time_limit)
            frontier = None
        else:
            frontier, rep = solve_mos(G, self.strategy, time_limit=self.time_limit)
            pts, wit = map_mos_to_moqc(frontier, G)
        self.graph_ = G
        self.frontier_ = frontier
        self.moqc_points_ = pts
        self.moqc_witnesses_ = wit
        self.report_ = rep
        return self

    @property
    def mos_points_(self):
        """``(edges, size)`` pairs of the fitted frontier."""
        if self.frontier_ is None:
            raise AttributeError("mos_points_ is only set by the frontier strategies")
        return [tuple(p) for p in self.frontier_.points()]
