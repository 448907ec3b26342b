"""Points, dominance, labelled frontiers and efficiency certificates.

Subgraph points are stored as ``(edges, vertices)``; more edges and fewer
vertices are better. Quasi-clique points are ``(density, vertices)`` with
both coordinates maximised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .exceptions import InvalidInputError, InvariantError
from .graph import Graph, induced_edge_count, is_clique_count

# provenance tags
DS, MIND, MAXD, EPS = "DS", "minD", "maxD", "EPS"
PROVENANCES = (DS, MIND, MAXD, EPS)

# certificate tags
P8, P9, P10, P11I, P11II = "P8", "P9", "P10", "P11i", "P11ii"
EXACT, UNPROVEN = "EXACT", "UNPROVEN"
CERTIFICATES = (P8, P9, P10, P11I, P11II)


class MosPoint(NamedTuple):
    m: int
    k: int


@dataclass(frozen=True, order=True)
class MoqcPoint:
    density: Fraction
    k: int

    def __post_init__(self):
        if self.k < 2 or not 0 <= self.density <= 1:
            raise InvalidInputError(f"invalid quasi-clique point {self}")


def mos_dominates(a, b, strict: bool = False) -> bool:
    """Whether subgraph point ``a`` dominates ``b``.

    Weak mode: at least as many edges and at most as many vertices, one of
    them strictly. Strict mode: both strictly.
    """
    am, ak = a
    bm, bk = b
    if strict:
        return am > bm and ak < bk
    return am >= bm and ak <= bk and (am > bm or ak < bk)


def moqc_dominates(a: MoqcPoint, b: MoqcPoint) -> bool:
    return a.density >= b.density and a.k >= b.k and (a.density > b.density or a.k > b.k)


@dataclass(frozen=True)
class Entry:
    """One frontier point with its witness and how it was obtained."""

    m: int
    k: int
    witness: frozenset
    provenance: str
    certificate: str = EXACT
    strong: bool = False

    @property
    def point(self) -> MosPoint:
        return MosPoint(self.m, self.k)

    @property
    def is_clique(self) -> bool:
        return is_clique_count(self.m, self.k)

    @property
    def density(self) -> Fraction:
        if self.k < 2:
            raise InvalidInputError("density needs at least two vertices")
        return Fraction(2 * self.m, self.k * (self.k - 1))


class LabeledFrontier:
    """At most one entry per cardinality, iterated by increasing ``k``."""

    def __init__(self, entries: Iterable[Entry] = ()):
        self._by_k = {}
        for e in entries:
            self.add(e)

    def add(self, entry: Entry) -> bool:
        """Insert ``entry``; an existing entry at the same ``k`` is kept."""
        old = self._by_k.get(entry.k)
        if old is not None:
            if old.m != entry.m:
                raise InvariantError(
                    f"two optimal entries disagree at k={entry.k}: {old.m} vs {entry.m}")
            return False
        self._by_k[entry.k] = entry
        return True

    def get(self, k: int) -> Entry | None:
        return self._by_k.get(k)

    def __contains__(self, k) -> bool:
        return k in self._by_k

    def __len__(self):
        return len(self._by_k)

    def __repr__(self):
        return f"LabeledFrontier({[tuple(p) for p in self.points()]})"

    def __iter__(self):
        return iter(self.entries())

    def entries(self) -> list[Entry]:
        return [self._by_k[k] for k in sorted(self._by_k)]

    def points(self) -> list[MosPoint]:
        return [e.point for e in self.entries()]

    def check(self, G: Graph):
        """Raise if any witness does not match its recorded point."""
        for e in self.entries():
            if len(e.witness) != e.k or induced_edge_count(G, e.witness) != e.m:
                raise InvariantError(f"witness mismatch at k={e.k}")


@dataclass(frozen=True)
class SupportedPair:
    """Two adjacent supported points and the weights of the line through them."""

    lower: Entry
    upper: Entry

    @property
    def w1(self) -> int:
        return self.upper.k - self.lower.k

    @property
    def w2(self) -> int:
        return self.upper.m - self.lower.m

    @property
    def level(self) -> int:
        return self.w1 * self.lower.m - self.w2 * self.lower.k

    def score(self, m: int, k: int) -> int:
        return self.w1 * m - self.w2 * k

    def brackets(self, k: int) -> bool:
        return self.lower.k <= k <= self.upper.k


def remove_non_maximum_cliques(F: LabeledFrontier) -> LabeledFrontier:
    """Drop every entry below the largest clique present in ``F``."""
    cliques = [e.k for e in F.entries() if e.is_clique]
    if not cliques:
        raise InvariantError("frontier holds no clique point")
    top = max(cliques)
    out = LabeledFrontier(e for e in F.entries() if e.k >= top)
    n = max(e.k for e in out.entries())
    if len(out) != n - top + 1:
        raise InvariantError(f"frontier does not span {top}..{n} contiguously")
    return out


def map_mos_to_moqc(F: LabeledFrontier, G: Graph | None = None):
    """Map a per-cardinality frontier to the quasi-clique nondominated set.

    Consecutive cardinalities sharing the same density collapse onto the
    largest one. Returns ``(points, witnesses)`` sorted by ``k``.
    """
    entries = F.entries()
    if any(e.k < 2 for e in entries):
        raise InvalidInputError("mapping needs entries with at least two vertices")
    if G is not None:
        F.check(G)
    points: list[MoqcPoint] = []
    witnesses: list[frozenset] = []
    for i, e in enumerate(entries):
        d = e.density
        nxt = entries[i + 1] if i + 1 < len(entries) else None
        if nxt is not None and nxt.density == d:
            continue
        points.append(MoqcPoint(d, e.k))
        witnesses.append(e.witness)
    for a in points:
        for b in points:
            if a is not b and moqc_dominates(a, b):
                raise InvariantError(f"mapped set is not an antichain: {a} dominates {b}")
    return points, witnesses


class Certificate(NamedTuple):
    kind: str
    strong: bool = False


def bracketing_pair(pairs: Iterable[SupportedPair], k: int) -> SupportedPair:
    for p in pairs:
        if p.brackets(k):
            return p
    raise InvariantError(f"no supported pair brackets k={k}")


def weff_certificate(G: Graph, m: int, k: int, mode: str, pairs, *,
                     parent_certified: bool = False,
                     removed_degree: int | None = None,
                     added_degree: int | None = None) -> Certificate:
    """First sufficient condition proving ``(m, k)`` optimal at its cardinality.

    Checked in the order P8 (minD only), P9 (maxD only), P10, P11i, P11ii.
    ``strong`` is set when the supporting line also rules out reaching ``m``
    edges with one vertex fewer.
    """
    if mode not in ("minD", "maxD"):
        raise InvalidInputError(f"unknown mode {mode!r}")
    pair = bracketing_pair(pairs, k)
    level = pair.level
    strong = pair.score(m, k - 1) > level
    if mode == "minD" and parent_certified and removed_degree == 0:
        return Certificate(P8, strong)
    if mode == "maxD" and parent_certified and G.max_degree > 0 and added_degree == G.max_degree:
        return Certificate(P9, strong)
    if is_clique_count(m, k):
        return Certificate(P10, strong)
    score = pair.score(m, k)
    if score > level:
        raise InvariantError(f"({m}, {k}) beats the supporting line of {pair}")
    if score == level:
        return Certificate(P11I, strong)
    if pair.score(m + 1, k) > level:
        return Certificate(P11II, strong)
    return Certificate(UNPROVEN, strong)
