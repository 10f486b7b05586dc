"""Invariant computations, checked against independent brute-force oracles."""

from __future__ import annotations

import random

import pytest

from konigtype.graphs import BudgetExceeded, Graph, component_count
from konigtype.invariants import (
    CSV_COLUMNS,
    brute_force_linear_forest,
    compute_report,
    cut_sets,
    ideal_height,
    is_koenig_type,
    is_unmixed,
    max_linear_forest,
    path_cover_number,
    scattering_number,
    unrestricted_scattering_number,
)

from conftest import complete, cycle, net, path, random_graph, star


# ---------------------------------------------------------------------------
# Independent oracles (deliberately naive)
# ---------------------------------------------------------------------------

def oracle_sc_star(g: Graph) -> int:
    """max of c(S) - |S| over every subset, no C(G) restriction."""
    best = None
    for mask in range(1 << g.n):
        s = {v + 1 for v in range(g.n) if mask >> v & 1}
        value = component_count(g, s) - len(s)
        if best is None or value > best:
            best = value
    return best


def oracle_path_cover(g: Graph) -> int:
    """Smallest k admitting a cover by k vertex-disjoint paths, found by
    depth-first search over partial path systems."""
    n = g.n

    def covers(paths: list[list[int]], k: int) -> bool:
        used = {v for p in paths for v in p}
        if len(used) == n:
            return True
        tail = paths[-1][-1] if paths else None
        if tail is not None:
            for u in g.neighbors(tail):
                if u not in used:
                    paths[-1].append(u)
                    if covers(paths, k):
                        return True
                    paths[-1].pop()
        if len(paths) < k:
            for start in g.vertices:
                if start in used:
                    continue
                paths.append([start])
                if covers(paths, k):
                    return True
                paths.pop()
        return False

    for k in range(1, n + 1):
        if covers([], k):
            return k
    raise AssertionError("unreachable: n singleton paths always cover")


def assert_valid_cover(g: Graph, cover, size: int):
    seen = []
    for p in cover:
        for u, v in zip(p, p[1:]):
            assert g.has_edge(u, v)
        seen.extend(p)
    assert sorted(seen) == list(g.vertices)
    assert len(cover) == size


# ---------------------------------------------------------------------------
# Cut sets
# ---------------------------------------------------------------------------

class TestCutSets:
    def test_p4(self):
        fam = cut_sets(path(4))
        assert list(fam) == [((), 1), ((2,), 2), ((3,), 2)]

    def test_complete(self):
        for n in range(1, 6):
            fam = cut_sets(complete(n))
            assert fam.sets == ((),)

    def test_claw(self):
        fam = cut_sets(star(3))
        assert list(fam) == [((), 1), ((1,), 3)]

    def test_net(self):
        fam = cut_sets(net())
        assert fam.sets == (
            (), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3),
        )

    def test_membership_condition_holds(self, connected_n_le_7):
        for g in connected_n_le_7[:300]:
            for s, cm in cut_sets(g):
                assert component_count(g, s) == cm
                for v in s:
                    rest = set(s) - {v}
                    assert component_count(g, rest) < cm

    def test_k0_rejected(self):
        with pytest.raises(ValueError):
            cut_sets(Graph.from_edges(0, []))


# ---------------------------------------------------------------------------
# Scattering numbers
# ---------------------------------------------------------------------------

class TestScattering:
    def test_complete_graphs(self):
        for n in range(1, 6):
            assert scattering_number(complete(n)) == -n

    def test_claw(self):
        assert scattering_number(star(3)) == 2

    def test_p4(self):
        assert scattering_number(path(4)) == 1

    def test_sc_star_cycles(self):
        for m in range(3, 9):
            value, witness = unrestricted_scattering_number(cycle(m))
            assert value == 1
            assert component_count(cycle(m), witness) - len(witness) == 1

    def test_sc_star_claw(self):
        assert unrestricted_scattering_number(star(3)) == (2, (1,))

    def test_sc_star_net(self):
        value, _ = unrestricted_scattering_number(net())
        assert value == 1

    def test_sc_star_is_max_of_one_and_sc(self, all_n_le_7):
        for g in all_n_le_7[:400]:
            value, witness = unrestricted_scattering_number(g)
            assert value == max(1, scattering_number(g))
            assert component_count(g, witness) - len(witness) == value

    def test_restriction_to_cut_sets_is_sound(self, all_n_le_7):
        rng = random.Random(7)
        for g in rng.sample(all_n_le_7, 150):
            value, _ = unrestricted_scattering_number(g)
            assert value == oracle_sc_star(g)


# ---------------------------------------------------------------------------
# Path cover and linear forests
# ---------------------------------------------------------------------------

class TestPathCover:
    def test_traceable_graphs(self):
        for m in range(2, 8):
            for g in (path(m), cycle(max(m, 3)), complete(m)):
                pi, cover = path_cover_number(g)
                assert pi == 1
                assert_valid_cover(g, cover, 1)

    def test_stars(self):
        assert path_cover_number(star(3))[0] == 2
        assert path_cover_number(star(4))[0] == 3

    def test_net(self):
        pi, cover = path_cover_number(net())
        assert pi == 2
        assert_valid_cover(net(), cover, 2)

    def test_single_vertex(self):
        assert path_cover_number(Graph.from_edges(1, []))[0] == 1
        assert max_linear_forest(Graph.from_edges(1, [])) == 0

    def test_against_oracle(self, all_n_le_7):
        rng = random.Random(11)
        for g in rng.sample([g for g in all_n_le_7 if g.n <= 6], 120):
            pi, cover = path_cover_number(g)
            assert pi == oracle_path_cover(g)
            assert_valid_cover(g, cover, pi)

    def test_additive_over_components(self):
        rng = random.Random(13)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 9), 0.25)
            from konigtype.graphs import component_masks, mask_to_vertices, delete_vertices

            total = 0
            full = (1 << g.n) - 1
            for comp in component_masks(g):
                keep = set(mask_to_vertices(full & ~comp))
                h, _ = delete_vertices(g, keep)
                total += path_cover_number(h)[0]
            assert total == path_cover_number(g)[0]

    def test_budget_guard(self):
        with pytest.raises(BudgetExceeded):
            path_cover_number(complete(10), budget=100)


class TestLinearForest:
    def test_examples(self):
        assert brute_force_linear_forest(path(4)) == 3
        assert brute_force_linear_forest(cycle(5)) == 4
        assert brute_force_linear_forest(net()) == 4

    def test_matches_n_minus_pi(self, all_n_le_7):
        rng = random.Random(17)
        for g in rng.sample(all_n_le_7, 250):
            assert brute_force_linear_forest(g) == g.n - path_cover_number(g)[0]
            assert max_linear_forest(g) == g.n - path_cover_number(g)[0]

    def test_edge_budget_guard(self):
        with pytest.raises(BudgetExceeded):
            brute_force_linear_forest(complete(9), max_edges=20)


# ---------------------------------------------------------------------------
# Ideal-theoretic numbers
# ---------------------------------------------------------------------------

class TestIdealNumbers:
    def test_height_examples(self):
        assert ideal_height(path(4)) == 3
        assert ideal_height(star(3)) == 2
        for n in range(2, 7):
            assert ideal_height(complete(n)) == n - 1

    def test_height_requires_two_vertices(self):
        with pytest.raises(ValueError):
            ideal_height(Graph.from_edges(1, []))

    def test_unmixed_examples(self):
        assert is_unmixed(path(4)) is True
        assert is_unmixed(star(3)) is False
        assert is_unmixed(cycle(5)) is False
        assert is_unmixed(net()) is True

    def test_unmixed_requires_two_vertices(self):
        with pytest.raises(ValueError):
            is_unmixed(Graph.from_edges(1, []))


class TestKoenigType:
    def test_trees_are_koenig(self, trees_n_le_9):
        for g in trees_n_le_9:
            if g.n >= 2:
                flag, _ = is_koenig_type(g)
                assert flag

    def test_net_is_not(self):
        flag, report = is_koenig_type(net())
        assert not flag
        assert (report.path_cover, report.unrestricted_scattering) == (2, 1)

    def test_c5_is(self):
        flag, report = is_koenig_type(cycle(5))
        assert flag
        assert report.path_cover == report.unrestricted_scattering == 1

    def test_requires_two_vertices(self):
        with pytest.raises(ValueError):
            is_koenig_type(Graph.from_edges(1, []))

    def test_inequality_and_equality_criterion(self, all_n_le_7):
        for g in all_n_le_7:
            if g.n > 6:
                continue
            report = compute_report(g)
            assert report.unrestricted_scattering <= report.path_cover
            assert report.koenig_type == (
                report.unrestricted_scattering == report.path_cover
            )


class TestReportSerialisation:
    def test_csv_row_matches_columns(self):
        row = compute_report(net()).to_csv_row()
        assert len(row) == len(CSV_COLUMNS)
        assert row[:6] == ["6", "6", "2", "1", "1", "4"]
        assert row[8] == "false"   # koenig
        assert row[9] == "true"    # unmixed

    def test_json_keys(self):
        d = compute_report(path(4)).to_json_dict()
        for key in ("n", "edges", "pi", "sc", "sc_star", "lf", "height",
                    "dim", "koenig", "unmixed", "witness_set", "witness_cover"):
            assert key in d
        assert d["height"] == 3 and d["dim"] == 5

    def test_small_graph_has_no_ideal_numbers(self):
        d = compute_report(Graph.from_edges(1, [])).to_json_dict()
        assert d["height"] is None and d["dim"] is None and d["unmixed"] is None
