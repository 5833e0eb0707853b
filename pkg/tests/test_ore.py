from fractions import Fraction

import pytest

from eqcolor.check import check_coloring
from eqcolor.errors import ContractError, PreconditionError, StepCapExceeded
from eqcolor.generators import complete, cycle, random_graph_bounded_degree, star, star_gadget
from eqcolor.graph import degree_stats
from eqcolor.hs import rebalance_state
from eqcolor.ore import equitable_color_ore, mu_weight, ore_run, ore_state, removal_order, swap_wy

from fixtures import case2_instance
from oracles import equitable_colorable


def test_star_beyond_max_degree():
    g = star(4)
    assert degree_stats(g)[:2] == (4, 5)
    f = equitable_color_ore(g, 3, debug=True)
    assert sorted(f.sizes()) == [1, 2, 2] and check_coloring(g, f, "equitable").ok
    assert equitable_colorable(g, 3)


def test_cycle():
    f = equitable_color_ore(cycle(5), 3)
    assert sorted(f.sizes()) == [1, 2, 2]


@pytest.mark.parametrize("seed", range(8))
def test_max_degree_graphs_also_work(seed):
    g = random_graph_bounded_degree(40, 4, seed)
    assert check_coloring(g, equitable_color_ore(g, 5, debug=True), "equitable").ok


@pytest.mark.parametrize("seed", range(30))
def test_star_gadgets(seed):
    k = 3 + seed % 4
    g = star_gadget(15 + 2 * seed, k, seed)
    f = equitable_color_ore(g, k, debug=True)
    assert check_coloring(g, f, "equitable", k).ok


def test_precondition():
    with pytest.raises(PreconditionError):
        equitable_color_ore(star(6), 3)
    with pytest.raises(PreconditionError):
        equitable_color_ore(complete(4), 0)


def test_step_cap():
    g = star_gadget(40, 4, 1)
    with pytest.raises(StepCapExceeded):
        ore_run(g, 4, step_cap=1)


def test_removal_order_takes_min_degree():
    g = random_graph_bounded_degree(30, 5, 2)
    nb = [set(a) for a in g.adj]
    seen_edges = 0
    for v, ns in removal_order(g):
        live = [len(x) for x in nb if x]
        assert set(ns) == nb[v] and len(ns) == min(live)
        for u in ns:
            nb[u].discard(v)
        seen_edges += len(ns)
        nb[v] = set()
    assert seen_edges == g.m


def test_ore_state_of_fixture():
    g, f = case2_instance()
    s = ore_state(g, f)
    assert s.Adp == [3, 4, 5] and s.adp == 3 and s.b == 2 and s.m == 8
    for c in s.B:
        for y in f.classes[c]:
            expected = 2 if y < 22 else 3
            assert s.solo_star[y] == expected
            toA = sum(1 for x in g.adj[y] if f.color_of[x] in s.A)
            assert toA >= s.a + s.adp - s.solo_star[y]


def test_mu_weights_of_fixture():
    g, f = case2_instance()
    s = ore_state(g, f)
    mus = {y: mu_weight(s, y) for c in s.B for y in f.classes[c]}
    assert all(mus[y] == Fraction(14, 5) for y in range(7, 22))
    assert mus[22] == mus[23] == 3
    # every A'' vertex has a B neighbor, so the weights add up to a'' * m * b
    assert sum(mus.values()) == s.adp * s.m * s.b == 48
    assert min(mus.values()) < s.adp


def test_mu_weight_matches_its_definition():
    g, f = case2_instance()
    s = ore_state(g, f)
    nonroot = sorted(f.classes[3])[-1]
    assert not any(f.color_of[x] in s.Adp for x in g.adj[nonroot])
    assert mu_weight(s, nonroot) == 0
    for y in range(g.n):
        terms = [Fraction(s.b, sum(1 for u in g.adj[x] if f.color_of[u] in s.B))
                 for x in g.adj[y] if f.color_of[x] in s.Adp]
        assert mu_weight(s, y) == sum(terms, Fraction(0))


@pytest.mark.parametrize("pair", [0, 1, 2, 17, 35])
def test_swap_on_fixture(pair):
    g, f = case2_instance()
    s = ore_state(g, f)
    w, y = s.solo[pair]
    f2 = swap_wy(s, w, y, debug=True)
    assert check_coloring(g, f2, "nearly_equitable").ok
    assert f2.color_of[y] == f.color_of[w]
    after = rebalance_state(g, f2)
    assert set(s.A) <= set(after.A)


def test_swap_contract_errors():
    g, f = case2_instance()
    s = ore_state(g, f)
    w, y = s.solo[0]
    with pytest.raises(ContractError):
        swap_wy(s, w, 0)
    with pytest.raises(ContractError):
        swap_wy(s, 0, 7)
    easy_g = cycle(6)
    from eqcolor.graph import Coloring
    easy = ore_state(easy_g, Coloring([0, 1, 0, 1, 2, 1], 3))
    with pytest.raises(ContractError):
        swap_wy(easy, 0, 1)
