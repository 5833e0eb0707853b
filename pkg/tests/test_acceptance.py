"""Acceptance criteria, one test per criterion.

The conftest hook prints one PASS/FAIL line per criterion at the end of
the run.  Each test also prints what it measured, visible with ``-s``.
"""
import itertools
import math
import statistics
import time

import pytest

from eqcolor.check import check_coloring
from eqcolor.errors import StepCapExceeded
from eqcolor.forest import forest_equitable_color, forest_feasible
from eqcolor.generators import (Lcg64, complete, complete_bipartite, degenerate_example,
                                disjoint_union, gk_example, random_forest,
                                random_graph_bounded_degree, random_tree, star, star_gadget)
from eqcolor.graph import Graph, ListAssignment, degree_stats
from eqcolor.hs import equitable_color_hs, hs_run
from eqcolor.ore import equitable_color_ore
from eqcolor.oracle import (decide_choosable, decide_equitable, m0_exhaustive, m0_formula,
                            star_greedy_list_color)

pytestmark = pytest.mark.slow


def _tree_feasible(t, k):
    if k >= 3:
        return forest_feasible(t, k)[0]
    return decide_equitable(t, k).yes


def test_c01_hs_sweep_on_six_vertices():
    pairs = list(itertools.combinations(range(6), 2))
    start = time.perf_counter()
    runs = failures = 0
    for mask in range(1 << 15):
        g = Graph(6, [p for i, p in enumerate(pairs) if mask >> i & 1])
        for k in range(g.max_degree + 1, 8):
            f, _ = equitable_color_hs(g, k)
            runs += 1
            if not check_coloring(g, f, "equitable", k).ok:
                failures += 1
    elapsed = time.perf_counter() - start
    print(f"hs sweep: {runs} runs, {failures} failures, {elapsed:.1f}s")
    assert failures == 0 and elapsed < 60


def test_c02_shift_budget():
    worst_run, worst_fix = 0.0, 0
    for i in range(200):
        n = (30, 60, 120)[i % 3]
        delta = (4, 8)[(i // 3) % 2]
        k = delta + 1
        g = random_graph_bounded_degree(n, delta, i)
        f, log, gp, _ = hs_run(g, k, debug=True)
        assert check_coloring(g, f.restricted(n), "equitable", k).ok
        assert log.shift_count <= 2 * k * gp.n
        assert all(c <= 2 * k - 1 for c in log.fix_counts)
        worst_run = max(worst_run, log.shift_count / (2 * k * gp.n))
        worst_fix = max([worst_fix] + log.fix_counts)
    print(f"shift budget: max run ratio {worst_run:.3f}, max per rebalance {worst_fix}")


def _median_time(n, reps=3):
    g = random_graph_bounded_degree(n, 10, 1)
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        f, _ = equitable_color_hs(g, 11)
        times.append(time.perf_counter() - t0)
    assert check_coloring(g, f, "equitable", 11).ok
    return statistics.median(times)


def test_c03_quadratic_scaling():
    t = {n: _median_time(n) for n in (500, 1000, 2000)}
    r1, r2 = t[1000] / t[500], t[2000] / t[1000]
    t3000 = _median_time(3000, reps=1)
    print(f"scaling: t={t}, ratios {r1:.2f} {r2:.2f}, n=3000 {t3000:.2f}s")
    assert 3.0 <= r1 <= 5.5 and 3.0 <= r2 <= 5.5
    assert t3000 < 10


def test_c04_ore_solver():
    f = equitable_color_ore(star(4), 3)
    assert sorted(f.sizes()) == [1, 2, 2] and check_coloring(star(4), f, "equitable").ok
    for i in range(200):
        k = 3 + i % 5
        n = max(k + 1, 12 + (i * 7) % 49)
        g = star_gadget(n, k, i)
        delta, theta, _ = degree_stats(g)
        assert theta < 2 * k and delta >= k and g.n <= 60
        try:
            f = equitable_color_ore(g, k, debug=True)
        except StepCapExceeded:
            pytest.fail(f"step cap hit on star_gadget({n}, {k}, {i})")
        assert check_coloring(g, f, "equitable", k).ok


def test_c05_forest_theorem():
    for i in range(500):
        n = 3 + i % 10
        g = random_forest(n, i) if i % 2 else random_tree(n, i)
        for k in range(3, n + 1):
            ok, _ = forest_feasible(g, k)
            assert ok == decide_equitable(g, k).yes, (i, k)
    for i in range(300):
        n = 10 + i % 31
        g = random_forest(n, i) if i % 2 else random_tree(n, i)
        for k in range(3, n + 1):
            if forest_feasible(g, k)[0]:
                assert check_coloring(g, forest_equitable_color(g, k, debug=True), "equitable", k).ok


def test_c06_tree_bounds():
    meyer_bad, bg_bad = [], []
    for i in range(1000):
        n = 2 + i % 39
        t = random_tree(n, i)
        delta = t.max_degree
        for k in range(1 + delta // 2, n + 1):
            if not _tree_feasible(t, k):
                meyer_bad.append((n, i, delta, k))
                break
        if n >= 3 * delta - 8 and n >= 3 and not forest_feasible(t, 3)[0]:
            bg_bad.append((n, i, delta))
    print(f"tree bounds: {len(meyer_bad)} counterexamples to k >= 1 + floor(delta/2), "
          f"first {meyer_bad[:5]}; {len(bg_bad)} to the n >= 3*delta - 8 rule")
    assert not bg_bad
    assert not meyer_bad


def test_c07_extremal_formula():
    start = time.perf_counter()
    for n in range(2, 7):
        for k in range(2, n + 1):
            value, _ = m0_exhaustive(n, k)
            assert value == m0_formula(n, k), (n, k)
    elapsed = time.perf_counter() - start
    print(f"m0: all pairs agree in {elapsed:.1f}s")
    assert elapsed < 300


@pytest.mark.parametrize("name, g, k, expected", [
    ("K33", complete_bipartite(3, 3), 3, "no"),
    ("K55", complete_bipartite(5, 5), 5, "no"),
    ("K33+K3", disjoint_union(complete_bipartite(3, 3), complete(3)), 3, "no"),
    ("K16", star(6), 3, "no"),
    ("K33+K33", disjoint_union(complete_bipartite(3, 3), complete_bipartite(3, 3)), 3, "yes"),
    ("K55 k4", complete_bipartite(5, 5), 4, "yes"),
])
def test_c08_fixtures(name, g, k, expected):
    assert decide_equitable(g, k).status == expected


def test_c09_choosability_separations():
    rng = Lcg64(2024)
    for _ in range(1000):
        L = ListAssignment([set(rng.shuffle(list(range(9)))[:3]) for _ in range(7)], 3)
        f = star_greedy_list_color(6, L)
        assert check_coloring(star(6), f, "equitable_list", lists=L).ok
    d = decide_choosable(disjoint_union(star(2), star(2)), 2, "proportional")
    assert d.no and d.lists is not None
    print(f"proportional witness: {d.lists}")
    for k in (3, 4, 5):
        forced, cap = 2 * k**3 - 4 * k**2 + 2, math.ceil(gk_example(k).n / k)
        print(f"G_{k}: {forced} > {cap}")
        assert forced > cap


def test_c10_degenerate_lower_bound():
    for d, delta in ((2, 5), (2, 7), (3, 9)):
        g = degenerate_example(d, delta)
        need = math.ceil((delta + d + 1) / 2)
        for k in range(1, need):
            assert decide_equitable(g, k).no, (d, delta, k)
        assert decide_equitable(g, need).yes
