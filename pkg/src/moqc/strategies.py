"""End-to-end frontier enumeration strategies.

``baseline``, ``two_phase`` and ``three_phase`` compute, for every
cardinality from the maximum clique size up to ``n``, the largest number of
induced edges together with a witness. ``moqc_alg1`` and ``moqc_alg2`` work
directly in (density, cardinality) space.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import InvalidInputError, InvariantError, NoFeasibleQuasiCliqueError, TimeLimitExceeded
from .graph import Graph, max_degree_extension_vertex, min_degree_vertex
from .maxflow import ws_mos_optimum
from .oracles import Deadline, EdksResult, edks, mqc
from .pareto import (
    CERTIFICATES, DS, EPS, EXACT, MAXD, MIND, PROVENANCES, UNPROVEN,
    Entry, LabeledFrontier, MoqcPoint, SupportedPair, map_mos_to_moqc,
    remove_non_maximum_cliques, weff_certificate,
)

logger = logging.getLogger(__name__)

STRATEGIES = ("baseline", "two-phase", "three-phase", "alg1", "alg2")


@dataclass
class RunReport:
    """Counters behind the per-instance summary tables."""

    strategy: str
    n: int
    m: int
    status: str = "ok"
    provenance_counts: dict = field(default_factory=lambda: dict.fromkeys(PROVENANCES, 0))
    certificate_counts: dict = field(default_factory=lambda: dict.fromkeys(CERTIFICATES, 0))
    unproven: int = 0
    points: int = 0
    final_points: int = 0
    moqc_points: int = 0
    time_total: float = 0.0
    time_eps: float = 0.0
    ws_calls: int = 0
    edks_calls: int = 0
    edks_nodes: int = 0

    @property
    def candidates(self) -> int:
        """Quasi-cliques produced by the local searches, proven or not."""
        return sum(self.certificate_counts.values()) + self.unproven

    def pct(self, provenance: str) -> float:
        return 100.0 * self.provenance_counts[provenance] / self.points if self.points else 0.0

    def pct_certificate(self, cert: str) -> float:
        certified = sum(self.certificate_counts.values())
        return 100.0 * self.certificate_counts[cert] / certified if certified else 0.0

    @property
    def pct_unproven(self) -> float:
        return 100.0 * self.unproven / self.candidates if self.candidates else 0.0

    @property
    def pct_time_eps(self) -> float:
        return 100.0 * self.time_eps / self.time_total if self.time_total > 0 else 0.0

    def row(self, precision: int = 1) -> dict:
        r = lambda x: round(x, precision)  # noqa: E731
        return {
            "strategy": self.strategy, "status": self.status, "n": self.n, "m": self.m,
            "points": self.points,
            "pct_ds": r(self.pct(DS)), "pct_mind": r(self.pct(MIND)),
            "pct_maxd": r(self.pct(MAXD)), "pct_eps": r(self.pct(EPS)),
            "time_s": round(self.time_total, 3), "pct_t_eps": r(self.pct_time_eps),
            "pct_p8": r(self.pct_certificate("P8")), "pct_p9": r(self.pct_certificate("P9")),
            "pct_p10": r(self.pct_certificate("P10")), "pct_p11i": r(self.pct_certificate("P11i")),
            "pct_p11ii": r(self.pct_certificate("P11ii")), "pct_unproven": r(self.pct_unproven),
            "candidates": self.candidates, "unproven": self.unproven,
            "z_hat": self.final_points, "z_g": self.moqc_points,
            "ws_calls": self.ws_calls, "edks_calls": self.edks_calls, "edks_nodes": self.edks_nodes,
        }


class _Run:
    """Shared state of one strategy execution: budget, counters, frontier."""

    def __init__(self, G: Graph, name: str, time_limit: float | None):
        if G.m == 0:
            raise NoFeasibleQuasiCliqueError("graph has no edges")
        self.G = G
        self.deadline = Deadline(time_limit)
        self.report = RunReport(name, G.n, G.m)
        self.frontier = LabeledFrontier()
        self.pairs: list[SupportedPair] = []
        self._cache: dict[int, EdksResult] = {}
        self._t0 = time.perf_counter()

    def edks(self, G, k, hint=None) -> EdksResult:
        if k in self._cache:
            return self._cache[k]
        self.deadline.check()
        t = time.perf_counter()
        try:
            res = edks(G, k, hint=hint, deadline=self.deadline)
        finally:
            self.report.time_eps += time.perf_counter() - t
        self.report.edks_calls += 1
        self.report.edks_nodes += res.nodes
        self._cache[k] = res
        return res

    def ws(self, w1, w2):
        self.deadline.check()
        self.report.ws_calls += 1
        return ws_mos_optimum(self.G, w1, w2)

    def add(self, entry: Entry) -> bool:
        added = self.frontier.add(entry)
        if added:
            self.report.provenance_counts[entry.provenance] += 1
        return added

    def eps_entry(self, k, hint=None) -> Entry:
        res = self.edks(self.G, k, hint)
        return Entry(res.m_star, k, res.S, EPS, EXACT)

    def finish(self, final: LabeledFrontier | None = None, moqc=None):
        rep = self.report
        rep.points = len(self.frontier)
        rep.time_total = time.perf_counter() - self._t0
        if final is not None:
            rep.final_points = len(final)
            rep.moqc_points = len(map_mos_to_moqc(final)[0])
        elif moqc is not None:
            rep.moqc_points = len(moqc)
        return rep

    def timed_out(self, exc: TimeLimitExceeded):
        self.report.status = "timeout"
        self.finish()
        exc.frontier = self.frontier
        exc.report = self.report
        return exc


def _drop_min_degree(G, S):
    return S - {min_degree_vertex(G, S)}


# -- baseline -----------------------------------------------------------------

def baseline(G: Graph, *, time_limit: float | None = None):
    """Cardinality sweep from ``n`` down to the first clique, one e-DKS per step."""
    run = _Run(G, "baseline", time_limit)
    try:
        k, m = G.n, G.m
        cur = Entry(m, k, frozenset(range(G.n)), EPS)
        run.add(cur)
        while 2 * m < k * (k - 1) and k > 1:
            hint = _drop_min_degree(G, cur.witness)
            k -= 1
            cur = run.eps_entry(k, hint)
            m = cur.m
            run.add(cur)
    except TimeLimitExceeded as exc:
        raise run.timed_out(exc)
    final = remove_non_maximum_cliques(run.frontier)
    return final, run.finish(final)


# -- first phase ----------------------------------------------------------------

def _dichotomic(run: _Run):
    G = run.G
    lo = Entry(0, 1, frozenset([0]), DS)
    hi = Entry(G.m, G.n, frozenset(range(G.n)), DS)
    run.add(lo)
    run.add(hi)
    supported = {1: lo, G.n: hi}
    stack = [(lo, hi)]
    while stack:
        r, s = stack.pop()
        pair = SupportedPair(r, s)
        if pair.w2 == 0:
            # no vertex set has more than |E| edges, so s is already on top
            continue
        sol = run.ws(pair.w1, pair.w2)
        if sol.value > pair.level:
            t = Entry(sol.edges, sol.k, sol.S, DS)
            if not r.k < t.k < s.k or t.k in supported:
                raise InvariantError(f"weighted-sum point {t.point} outside ({r.k}, {s.k})")
            supported[t.k] = t
            run.add(t)
            stack.append((t, s))
            stack.append((r, t))
    ordered = [supported[k] for k in sorted(supported)]
    run.pairs = [SupportedPair(a, b) for a, b in zip(ordered, ordered[1:])]
    return ordered


def dichotomic_search(G: Graph, *, time_limit: float | None = None) -> LabeledFrontier:
    """Extreme supported points via recursive weighted-sum bisection."""
    run = _Run(G, "dichotomic", time_limit)
    try:
        _dichotomic(run)
    except TimeLimitExceeded as exc:
        raise run.timed_out(exc)
    return run.frontier


def supported_pairs(F: LabeledFrontier) -> list[SupportedPair]:
    """Adjacent pairs of a frontier returned by :func:`dichotomic_search`."""
    e = F.entries()
    return [SupportedPair(a, b) for a, b in zip(e, e[1:])]


# -- two-phase ---------------------------------------------------------------

def _sweep_down(run: _Run):
    G = run.G
    k = G.n
    while True:
        cur = run.frontier.get(k)
        if cur is None:
            above = run.frontier.get(k + 1)
            hint = _drop_min_degree(G, above.witness) if above is not None else None
            cur = run.eps_entry(k, hint)
            run.add(cur)
        if cur.is_clique:
            return
        k -= 1


def two_phase(G: Graph, *, time_limit: float | None = None):
    """Dichotomic search, then e-DKS for every cardinality still missing."""
    run = _Run(G, "two-phase", time_limit)
    try:
        _dichotomic(run)
        _sweep_down(run)
    except TimeLimitExceeded as exc:
        raise run.timed_out(exc)
    final = remove_non_maximum_cliques(run.frontier)
    return final, run.finish(final)


# -- three-phase ---------------------------------------------------------------

def _record_candidate(run: _Run, cert):
    if cert.kind == UNPROVEN:
        run.report.unproven += 1
    else:
        run.report.certificate_counts[cert.kind] += 1


def _min_d(run: _Run, supported: list[Entry]):
    G = run.G
    sup = supported[::-1]  # decreasing cardinality
    p = len(sup)
    i = 0
    S, m = sup[0].witness, sup[0].m
    parent_ok = True
    done = 2 * m == len(S) * (len(S) - 1)
    while i < p - 1 and not done:
        k = sup[i].k - 1
        while k > sup[i + 1].k and not done:
            v = min_degree_vertex(G, S)
            removed = sum(1 for u in G.neighbors[v] if u in S)
            S, m = S - {v}, m - removed
            cert = weff_certificate(G, m, len(S), "minD", run.pairs,
                                    parent_certified=parent_ok, removed_degree=removed)
            _record_candidate(run, cert)
            parent_ok = cert.kind != UNPROVEN
            if parent_ok:
                run.add(Entry(m, len(S), S, MIND, cert.kind, cert.strong))
            done = 2 * m == len(S) * (len(S) - 1)
            k -= 1
        if not done:
            i += 1
            S, m = sup[i].witness, sup[i].m
            parent_ok = True
            done = i < p - 1 and 2 * m == len(S) * (len(S) - 1)


def min_d(G: Graph, F: LabeledFrontier) -> LabeledFrontier:
    """Local search removing minimum-degree vertices between supported points."""
    run = _Run(G, "minD", None)
    for e in F.entries():
        run.add(e)
    run.pairs = supported_pairs(F)
    _min_d(run, F.entries())
    return run.frontier


def _max_d(run: _Run):
    G = run.G
    F = run.frontier
    cliques = [e.k for e in F.entries() if e.k >= 2 and e.is_clique]
    start = max(cliques) if cliques else 1
    for k in range(start + 1, G.n + 1):
        if k in F:
            continue
        parent = F.get(k - 1)
        v = max_degree_extension_vertex(G, parent.witness)
        added = sum(1 for u in G.neighbors[v] if u in parent.witness)
        S = parent.witness | {v}
        m_new = parent.m + added
        cert = weff_certificate(G, m_new, k, "maxD", run.pairs,
                                parent_certified=True, added_degree=added)
        _record_candidate(run, cert)
        if cert.kind == UNPROVEN:
            run.add(run.eps_entry(k, S))
        else:
            run.add(Entry(m_new, k, frozenset(S), MAXD, cert.kind, cert.strong))


def max_d(G: Graph, F: LabeledFrontier, pairs=None) -> LabeledFrontier:
    """Fill missing cardinalities by max-degree extension, e-DKS as fallback.

    ``pairs`` are the supported pairs used by the line-based certificates;
    by default they are rebuilt from the ``DS`` entries of ``F``.
    """
    run = _Run(G, "maxD", None)
    for e in F.entries():
        run.add(e)
    if pairs is None:
        pairs = supported_pairs(LabeledFrontier(e for e in F.entries() if e.provenance == DS))
    run.pairs = list(pairs)
    _max_d(run)
    return run.frontier


def three_phase(G: Graph, *, time_limit: float | None = None):
    """Dichotomic search, minD local search, then maxD with e-DKS fallback."""
    run = _Run(G, "three-phase", time_limit)
    try:
        supported = _dichotomic(run)
        _min_d(run, supported)
        _max_d(run)
    except TimeLimitExceeded as exc:
        raise run.timed_out(exc)
    final = remove_non_maximum_cliques(run.frontier)
    return final, run.finish(final)


# -- quasi-clique space --------------------------------------------------------

def _density_gap(k: int) -> Fraction:
    # densities at cardinality < k have denominators at most (k-1)(k-2), so
    # any of them above 2m/(k(k-1)) exceeds it by at least this much
    return Fraction(1, k * (k - 1) * (k - 1) * (k - 2))


def _anticipation_gap(gamma: Fraction, k: int) -> Fraction:
    return (gamma * (k * k - k) - 2) / (k * k - 3 * k + 2) - gamma


def _alg1(run: _Run, epsilon: str):
    G = run.G
    solve = run.edks
    gamma, k = G.density(), G.n
    points = [MoqcPoint(gamma, k)]
    witnesses = [frozenset(range(G.n))]
    while gamma < 1 and k >= 3:
        e = _density_gap(k) if epsilon == "gap" else _anticipation_gap(gamma, k)
        k = mqc(G, gamma + e, solve=solve)
        res = solve(G, k)
        gamma = Fraction(2 * res.m_star, k * (k - 1))
        points.append(MoqcPoint(gamma, k))
        witnesses.append(res.S)
    return points[::-1], witnesses[::-1]


def _alg2(run: _Run):
    G = run.G
    gamma, k = G.density(), G.n
    points = [MoqcPoint(gamma, k)]
    witnesses = [frozenset(range(G.n))]
    prev = witnesses[0]
    while gamma < 1:
        k -= 1
        res = run.edks(G, k, _drop_min_degree(G, prev))
        prev = res.S
        g = Fraction(2 * res.m_star, k * (k - 1))
        if g > gamma:
            gamma = g
            points.append(MoqcPoint(gamma, k))
            witnesses.append(res.S)
    return points[::-1], witnesses[::-1]


def run_moqc_alg1(G: Graph, *, epsilon: str = "gap", time_limit: float | None = None):
    """Alternating max-cardinality / max-density method; returns points, witnesses, report.

    ``epsilon="gap"`` steps the density threshold by the smallest possible
    difference between attainable densities, which never skips a point.
    ``epsilon="anticipate"`` uses the one-vertex-one-edge-fewer anticipation step;
    it can overshoot past nondominated points or above density 1.
    """
    if epsilon not in ("gap", "anticipate"):
        raise InvalidInputError("epsilon must be 'gap' or 'anticipate'")
    run = _Run(G, "alg1", time_limit)
    try:
        pts, wit = _alg1(run, epsilon)
    except TimeLimitExceeded as exc:
        raise run.timed_out(exc)
    return pts, wit, run.finish(moqc=pts)


def run_moqc_alg2(G: Graph, *, time_limit: float | None = None):
    """Max-density sweep over decreasing cardinality; returns points, witnesses, report."""
    run = _Run(G, "alg2", time_limit)
    try:
        pts, wit = _alg2(run)
    except TimeLimitExceeded as exc:
        raise run.timed_out(exc)
    return pts, wit, run.finish(moqc=pts)


def moqc_alg1(G: Graph, **kwargs) -> list[MoqcPoint]:
    return run_moqc_alg1(G, **kwargs)[0]


def moqc_alg2(G: Graph, **kwargs) -> list[MoqcPoint]:
    return run_moqc_alg2(G, **kwargs)[0]


def solve_mos(G: Graph, strategy: str = "three-phase", *, time_limit: float | None = None):
    """Dispatch to one of the frontier strategies by name."""
    funcs = {"baseline": baseline, "two-phase": two_phase, "three-phase": three_phase}
    if strategy not in funcs:
        raise InvalidInputError(f"unknown frontier strategy {strategy!r}")
    return funcs[strategy](G, time_limit=time_limit)
