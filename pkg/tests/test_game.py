import random

import pytest

from locgame import (
    BudgetExceededError,
    Digraph,
    GameTranscript,
    INF,
    LocalizationSolver,
    ProbeError,
    all_pairs_distances,
    blowup,
    cops_win,
    localization_number_exact,
    metric_dimension_exact,
    optimal_robber,
    partition_by_probe,
    play,
    robber_step,
    rotation_tournament,
    transitive_tournament,
    tripartite_cycle,
)
from locgame.verify import random_dag

from conftest import random_oriented_digraph


def cycle3():
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


class TestPartition:
    def test_cycle_fully_split(self):
        dm = all_pairs_distances(cycle3())
        parts = partition_by_probe(dm, {0, 1, 2}, (0,))
        assert [(vec, sorted(cls)) for vec, cls in parts] == [
            ((0,), [0]), ((1,), [1]), ((2,), [2]),
        ]

    def test_transitive_t3_merges(self):
        dm = all_pairs_distances(transitive_tournament(3))
        parts = partition_by_probe(dm, {1, 2}, (0,))
        assert parts == [((1,), frozenset({1, 2}))]

    def test_classes_partition_candidates(self, rng):
        g = rotation_tournament(2)
        dm = all_pairs_distances(g)
        parts = partition_by_probe(dm, range(5), (0, 4))
        union = frozenset().union(*(cls for _, cls in parts))
        assert union == frozenset(range(5))
        assert sum(len(cls) for _, cls in parts) == 5

    def test_duplicate_probe_rejected(self):
        dm = all_pairs_distances(cycle3())
        with pytest.raises(ProbeError, match="two cops"):
            partition_by_probe(dm, {0, 1}, (1, 1))


class TestRobberStep:
    def test_sink_stays(self):
        g = transitive_tournament(3)
        assert robber_step(g, {2}) == frozenset({2})

    def test_cycle_spreads(self):
        assert robber_step(cycle3(), {0}) == frozenset({0, 1})

    def test_tripartite_part_moves_forward(self):
        g = tripartite_cycle(2)
        assert robber_step(g, {0, 1}) == frozenset({0, 1, 2, 3})


class TestCopsWin:
    def test_cycle_one_cop(self):
        assert cops_win(cycle3(), 1)

    def test_t5_needs_two(self):
        g = rotation_tournament(2)
        assert not cops_win(g, 1)
        assert cops_win(g, 2)

    def test_acyclic_one_cop(self, rng):
        for _ in range(10):
            g = random_dag(rng, rng.randint(1, 6), 0.5)
            assert cops_win(g, 1)

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            cops_win(cycle3(), 0)
        with pytest.raises(ValueError):
            cops_win(cycle3(), 4)

    def test_budget_guard_vertices(self):
        big = transitive_tournament(25)
        with pytest.raises(BudgetExceededError, match="vertices"):
            cops_win(big, 1)

    def test_budget_guard_probe_count(self):
        # C(24, 12) is about 2.7 million probe sets
        big = transitive_tournament(24)
        with pytest.raises(BudgetExceededError, match="probe sets"):
            LocalizationSolver(big, 12)

    def test_monotone_in_k(self, rng):
        for _ in range(15):
            g = random_oriented_digraph(rng, rng.randint(2, 6), 0.5)
            wins = [cops_win(g, k) for k in range(1, g.n + 1)]
            assert wins == sorted(wins)  # False... then True

    def test_anti_monotone_in_candidates(self, rng):
        # a winning set stays winning for every nonempty subset
        g = rotation_tournament(2)
        solver = LocalizationSolver(g, 2)
        assert solver.cops_win()
        full = frozenset(range(5))
        for size in (1, 2, 3, 4):
            for _ in range(5):
                sub = frozenset(rng.sample(sorted(full), size))
                assert solver.wins(sub)


def oracle_cops_win(g, k):
    """Independent game oracle: value iteration over the whole powerset,
    no reachability analysis, no win propagation."""
    from itertools import combinations

    n = g.n
    dm = all_pairs_distances(g)
    closed = [{v, *g.out_neighbors(v)} for v in range(n)]

    def step(c):
        out = set()
        for v in c:
            out |= closed[v]
        return frozenset(out)

    def classes(s, p):
        cells = {}
        for x in s:
            cells.setdefault(tuple(dm.dist[u][x] for u in p), set()).add(x)
        return list(cells.values())

    probes = list(combinations(range(n), k))
    states = [
        frozenset(c)
        for size in range(1, n + 1)
        for c in combinations(range(n), size)
    ]
    win = set()
    changed = True
    while changed:
        changed = False
        for s in states:
            if s in win:
                continue
            for p in probes:
                if all(len(c) == 1 or step(c) in win for c in classes(s, p)):
                    win.add(s)
                    changed = True
                    break
    return frozenset(range(n)) in win


class TestSolverOracle:
    def test_agrees_with_powerset_value_iteration(self):
        rng = random.Random(4242)
        for _ in range(60):
            n = rng.randint(1, 5)
            g = random_oriented_digraph(rng, n, rng.uniform(0.1, 0.9))
            for k in range(1, n + 1):
                assert cops_win(g, k) == oracle_cops_win(g, k)

    def test_lazy_queries_match_cold_solves(self):
        rng = random.Random(999)
        for _ in range(60):
            n = rng.randint(2, 7)
            g = random_oriented_digraph(rng, n, rng.uniform(0.2, 0.9))
            k = rng.randint(1, min(3, n))
            cold = LocalizationSolver(g, k).cops_win()
            warm = LocalizationSolver(g, k)
            for _ in range(4):
                warm.wins(frozenset(rng.sample(range(n), rng.randint(1, n))))
            assert warm.cops_win() == cold


class TestLocalizationNumber:
    def test_known_small_values(self):
        assert localization_number_exact(cycle3()) == 1
        assert localization_number_exact(tripartite_cycle(2)) == 2
        assert localization_number_exact(rotation_tournament(2)) == 2

    def test_blowup(self):
        assert localization_number_exact(blowup(rotation_tournament(1), 3)) == 3

    def test_closed_forms_at_more_points(self):
        # circulant: floor(m/2)+1 at m=4; blow-up: (k-1)*j+1 at (1,4), (2,3);
        # layered instance: component value + 1 at (m, delta) = (1, 1)
        from locgame import sc_tight

        assert localization_number_exact(rotation_tournament(4)) == 3
        assert localization_number_exact(blowup(rotation_tournament(1), 4)) == 4
        assert localization_number_exact(blowup(rotation_tournament(2), 3)) == 5
        assert localization_number_exact(sc_tight(1, 1)) == 2

    def test_k_max_exceeded(self):
        assert localization_number_exact(tripartite_cycle(2), k_max=1) is None

    def test_sandwich_with_metric_dimension(self, rng):
        for _ in range(25):
            g = random_oriented_digraph(rng, rng.randint(1, 6), rng.uniform(0.2, 0.8))
            zeta = localization_number_exact(g)
            beta, _ = metric_dimension_exact(g)
            assert 1 <= zeta <= beta


class TestWidthBounds:
    def test_zeta_within_path_width_bound(self):
        from locgame import PathDecomposition, validate_path_decomposition

        cases = [
            (transitive_tournament(4), PathDecomposition([{i} for i in range(4)])),
            (cycle3(), PathDecomposition([{0, 1}, {0, 2}])),
            (Digraph(3, [(0, 1), (1, 2)]), PathDecomposition([{0, 1}, {1, 2}])),
        ]
        for g, pd in cases:
            result = validate_path_decomposition(g, pd)
            assert result.valid
            assert localization_number_exact(g) <= result.width + 1

    def test_zeta_within_dag_width_bound(self):
        from locgame import DagDecomposition, validate_dag_decomposition
        from locgame import sc_tight

        cases = [
            (transitive_tournament(5), DagDecomposition(
                transitive_tournament(5), [{v} for v in range(5)])),
            (cycle3(), DagDecomposition(Digraph(1, []), [{0, 1, 2}])),
            (sc_tight(1, 1), DagDecomposition(
                Digraph(2, [(0, 1)]), [{0, 1, 2}, {3, 4, 5}])),
        ]
        for g, dd in cases:
            result = validate_dag_decomposition(g, dd)
            assert result.valid
            assert localization_number_exact(g) <= result.width


class TestPlayEngine:
    def test_optimal_robber_concedes_only_when_resolved(self):
        g = cycle3()
        robber = optimal_robber(g, 1)
        vec, cls = robber.choose(frozenset(range(3)), (0,))
        assert len(cls) == 1  # every class is a singleton here

    def test_evasion_on_t5_single_cop(self):
        g = rotation_tournament(2)

        class FixedProbe:
            cops = 1

            def next(self, transcript):
                return (len(transcript.rounds) % 5,)

        transcript = play(g, FixedProbe(), optimal_robber(g, 1), max_rounds=25)
        assert not transcript.outcome.captured
        assert transcript.outcome.rounds == 25

    def test_budget_enforced(self):
        g = cycle3()

        class Greedy:
            cops = 1

            def next(self, transcript):
                return (0, 1)

        with pytest.raises(ProbeError, match="budget"):
            play(g, Greedy(), optimal_robber(g, 1), max_rounds=5)

    def test_transcript_round_trip(self):
        g = transitive_tournament(4)

        class Sweep:
            cops = 1

            def next(self, transcript):
                return (len(transcript.rounds),)

        transcript = play(g, Sweep(), optimal_robber(g, 1), max_rounds=10)
        assert transcript.outcome.captured
        text = transcript.to_json_lines()
        again = GameTranscript.from_json_lines(text)
        assert again.rounds == transcript.rounds
        assert again.outcome == transcript.outcome

    def test_transcript_classes_are_partition_blocks(self):
        g = rotation_tournament(3)

        class Pair:
            cops = 2

            def next(self, transcript):
                k = len(transcript.rounds)
                return (k % 7, (k + 3) % 7)

        transcript = play(g, Pair(), optimal_robber(g, 2), max_rounds=10)
        dm = all_pairs_distances(g)
        candidates = frozenset(range(7))
        for r in transcript.rounds:
            parts = dict(partition_by_probe(dm, candidates, r.probe))
            assert parts[r.vector] == r.chosen_class
            if len(r.chosen_class) > 1:
                assert r.stepped == robber_step(g, r.chosen_class)
            candidates = r.stepped

    def test_infinite_distances_serialize_as_null(self):
        g = Digraph(4, [(0, 1), (2, 3)])

        class Probe0:
            cops = 1

            def next(self, transcript):
                return (0,)

        transcript = play(g, Probe0(), optimal_robber(g, 1), max_rounds=1)
        text = transcript.to_json_lines()
        assert "null" in text.splitlines()[0]
        again = GameTranscript.from_json_lines(text)
        assert again.rounds[0].vector == transcript.rounds[0].vector
        assert INF in again.rounds[0].vector
