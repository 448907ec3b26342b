import random
from fractions import Fraction

import pytest

from graphs import NAMED, complete, cycle, erdos_renyi, path, random_graph_with_edge, star
from moqc import (
    Graph, InvalidInputError, MoqcPoint, NoFeasibleQuasiCliqueError, TimeLimitExceeded,
    baseline, brute_frontier, dichotomic_search, map_mos_to_moqc, max_d, min_d, moqc_alg1,
    moqc_alg2, run_moqc_alg1, solve_mos, three_phase, two_phase, ws_mos_optimum,
)
from moqc.pareto import CERTIFICATES, DS, EPS, MAXD, MIND, P10, P11I, P11II, UNPROVEN
from moqc.strategies import supported_pairs


def pts(F):
    return [tuple(p) for p in F.points()]


def qc(points):
    return [(p.density, p.k) for p in points]


C4_MOS = [(1, 2), (2, 3), (4, 4)]
C4_QC = [(Fraction(1), 2), (Fraction(2, 3), 4)]


def test_baseline_examples():
    F, rep = baseline(cycle(4))
    assert pts(F) == C4_MOS and rep.edks_calls == 2
    F, rep = baseline(complete(4))
    assert pts(F) == [(6, 4)] and rep.edks_calls == 0
    F, rep = baseline(path(3))
    assert pts(F) == [(1, 2), (2, 3)] and rep.edks_calls == 1


def test_dichotomic_examples():
    assert pts(dichotomic_search(cycle(4))) == [(0, 1), (4, 4)]
    assert pts(dichotomic_search(star(3))) == [(0, 1), (3, 4)]
    F = dichotomic_search(complete(4))
    assert pts(F) == [(0, 1), (6, 4)]
    assert F.get(1).witness == frozenset({0})


def test_dichotomic_finds_interior_point():
    # a K4 plus a long pendant path: the K4 is strictly better on some weighted line
    G = Graph(8, [(i, j) for i in range(4) for j in range(i + 1, 4)] + [(3, 4), (4, 5), (5, 6), (6, 7)])
    F = dichotomic_search(G)
    assert (6, 4) in pts(F)
    assert all(e.provenance == DS for e in F)


def test_two_phase_examples():
    F, rep = two_phase(cycle(4))
    assert pts(F) == C4_MOS
    F, _ = two_phase(star(3))
    assert pts(F) == [(1, 2), (2, 3), (3, 4)]
    F, rep = two_phase(complete(4))
    assert pts(F) == [(6, 4)] and rep.edks_calls == 0


def test_min_d_examples():
    S = dichotomic_search(star(3))
    F = min_d(star(3), S)
    assert F.get(3).certificate == P11I and F.get(3).m == 2
    assert F.get(2).certificate == P10
    K = min_d(complete(4), dichotomic_search(complete(4)))
    assert pts(K) == [(0, 1), (6, 4)]


def test_min_d_c4():
    F = min_d(cycle(4), dichotomic_search(cycle(4)))
    assert F.get(3).m == 2 and F.get(3).provenance == MIND and F.get(3).certificate == P11II
    assert F.get(2).certificate == P10


def test_max_d_fills_gap_with_certificate():
    C4 = cycle(4)
    S = dichotomic_search(C4)
    partial = type(S)([S.get(1), S.get(4)])
    from moqc.pareto import Entry
    partial.add(Entry(1, 2, frozenset({0, 1}), MIND, P10))
    F = max_d(C4, partial, supported_pairs(S))
    assert F.get(3).m == 2 and F.get(3).provenance == MAXD and F.get(3).certificate == P11II


def test_max_d_path_p4():
    G = path(4)
    S = dichotomic_search(G)
    F = max_d(G, min_d(G, S), supported_pairs(S))
    table = brute_frontier(G)
    assert all(e.m == table.max_edges[e.k] for e in F)


def test_three_phase_examples():
    F, rep = three_phase(cycle(4))
    assert pts(F) == C4_MOS
    assert rep.provenance_counts[DS] == 2 and rep.provenance_counts[EPS] == 0
    F, rep = three_phase(complete(4))
    assert pts(F) == [(6, 4)]
    assert rep.provenance_counts[EPS] == 0 and rep.provenance_counts[MAXD] == 0


@pytest.mark.parametrize("name", sorted(NAMED))
def test_strategies_agree_on_named_graphs(name):
    G = NAMED[name]()
    table = brute_frontier(G)
    for strategy in ("baseline", "two-phase", "three-phase"):
        F, rep = solve_mos(G, strategy)
        assert pts(F) == table.z_hat
        assert rep.final_points == len(F)
    want = [(Fraction(d), k) for d, k in table.moqc_nondominated]
    assert qc(moqc_alg1(G)) == want
    assert qc(moqc_alg2(G)) == want


def test_alg_examples():
    assert qc(moqc_alg1(cycle(4))) == C4_QC
    assert qc(moqc_alg1(complete(3))) == [(Fraction(1), 3)]
    assert qc(moqc_alg1(path(3))) == [(Fraction(1), 2), (Fraction(2, 3), 3)]
    assert qc(moqc_alg2(cycle(4))) == C4_QC
    assert qc(moqc_alg2(complete(4))) == [(Fraction(1), 4)]
    assert qc(moqc_alg2(star(3))) == [(Fraction(1), 2), (Fraction(2, 3), 3), (Fraction(1, 2), 4)]


def test_alg1_anticipation_step_on_small_examples():
    assert qc(moqc_alg1(cycle(4), epsilon="anticipate")) == C4_QC
    assert qc(moqc_alg1(path(3), epsilon="anticipate")) == [(Fraction(1), 2), (Fraction(2, 3), 3)]


def test_alg1_anticipation_step_skips_a_point():
    G = Graph(6, [(0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4), (4, 5)])
    want = [(Fraction(1), 4), (Fraction(4, 5), 5), (Fraction(11, 15), 6)]
    assert qc(moqc_alg2(G)) == want
    assert qc(moqc_alg1(G)) == want
    assert qc(moqc_alg1(G, epsilon="anticipate")) == [want[0], want[2]]


def test_alg1_anticipation_step_overshoots_density_one():
    G = Graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5) if (i, j) != (0, 1)])
    assert qc(moqc_alg1(G)) == [(Fraction(1), 4), (Fraction(9, 10), 5)]
    with pytest.raises(InvalidInputError):
        moqc_alg1(G, epsilon="anticipate")


def test_alg1_rejects_unknown_epsilon():
    with pytest.raises(InvalidInputError):
        run_moqc_alg1(cycle(4), epsilon="tiny")


def test_edgeless_graph_infeasible():
    for fn in (baseline, two_phase, three_phase, moqc_alg1, moqc_alg2):
        with pytest.raises(NoFeasibleQuasiCliqueError):
            fn(Graph(4))


def test_unknown_strategy():
    with pytest.raises(InvalidInputError):
        solve_mos(cycle(4), "four-phase")


def test_timeout_keeps_partial_frontier():
    G = erdos_renyi(70, 0.3, 1)
    with pytest.raises(TimeLimitExceeded) as info:
        baseline(G, time_limit=1e-6)
    exc = info.value
    assert exc.report.status == "timeout"
    assert exc.frontier is not None and len(exc.frontier) >= 1


def test_supporting_lines_are_weighted_optima():
    rng = random.Random(4)
    for i in range(40):
        G = random_graph_with_edge(rng.randint(3, 12), rng.choice([0.3, 0.6]), 1200 + i)
        for pair in supported_pairs(dichotomic_search(G)):
            if pair.w2:
                assert ws_mos_optimum(G, pair.w1, pair.w2).value == pair.level


def test_dichotomic_call_bound():
    rng = random.Random(6)
    for i in range(40):
        G = random_graph_with_edge(rng.randint(3, 14), rng.choice([0.2, 0.5, 0.8]), 1500 + i)
        F, rep = two_phase(G)
        found = len(dichotomic_search(G))
        assert rep.ws_calls <= 2 * found - 1


def test_report_identities_two_phase():
    for i in range(10):
        G = random_graph_with_edge(10, 0.4, 1700 + i)
        _, rep = two_phase(G)
        assert abs(rep.pct(DS) + rep.pct(EPS) - 100) < 1e-9
