"""Named instance families.

Random families draw from :class:`Lcg64`, a 64-bit linear congruential
stream, so that a seed pins the graph bit-exactly on every platform:

    state <- state * 6364136223846793005 + 1442695040888963407  (mod 2**64)
    u32   =  state >> 32                  (after advancing)
    below(n) = (u32 * n) >> 32

The initial state is the seed itself reduced mod 2**64.
"""
from __future__ import annotations

import heapq
from typing import Callable, Sequence

from .errors import ParameterError
from .graph import Graph, ListAssignment

MASK64 = (1 << 64) - 1


class Lcg64:
    MULT = 6364136223846793005
    INC = 1442695040888963407

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u32(self) -> int:
        self.state = (self.state * self.MULT + self.INC) & MASK64
        return self.state >> 32

    def below(self, n: int) -> int:
        if n <= 0:
            raise ParameterError(f"below() needs a positive bound, got {n}")
        return (self.next_u32() * n) >> 32

    def shuffle(self, items: list) -> list:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


def complete(n: int) -> Graph:
    _need(n >= 0, "complete(n) needs n >= 0")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 0 and b >= 0, "complete_bipartite(a, b) needs a, b >= 0")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star(t: int) -> Graph:
    """``K_{1,t}`` with center 0."""
    _need(t >= 0, "star(t) needs t >= 0")
    return complete_bipartite(1, t)


def path(n: int) -> Graph:
    _need(n >= 0, "path(n) needs n >= 0")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle(n) needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def edgeless(n: int) -> Graph:
    return Graph(n)


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform labeled tree decoded from an LCG-drawn Pruefer sequence."""
    _need(n >= 1, "random_tree(n) needs n >= 1")
    if n <= 2:
        return path(n)
    rng = Lcg64(seed)
    code = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def random_forest(n: int, seed: int = 0) -> Graph:
    """A random tree with each edge dropped with a per-forest probability in {0, 1/4, 1/2, 3/4}."""
    tree = random_tree(n, seed)
    rng = Lcg64(seed ^ 0x9E3779B97F4A7C15)
    drop = rng.below(4)
    return Graph(n, [e for e in tree.edges() if rng.below(4) >= drop])


def random_graph_bounded_degree(n: int, max_deg: int, seed: int = 0) -> Graph:
    """Random graph with maximum degree at most ``max_deg``.

    Draws up to ``20 * n * max_deg`` vertex pairs and keeps a pair when it
    is new and both endpoints still have spare degree, stopping once
    ``n * max_deg // 2`` edges exist.
    """
    _need(n >= 0 and max_deg >= 0, "random_graph_bounded_degree needs n, max_deg >= 0")
    rng = Lcg64(seed)
    bits = [0] * n
    deg = [0] * n
    target = n * max_deg // 2
    m = 0
    for _ in range(20 * n * max_deg):
        if m >= target or n < 2:
            break
        u, v = rng.below(n), rng.below(n)
        if u == v or bits[u] >> v & 1 or deg[u] >= max_deg or deg[v] >= max_deg:
            continue
        bits[u] |= 1 << v
        bits[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
        m += 1
    return Graph.from_bits(bits)


def star_gadget(n: int, k: int, seed: int = 0) -> Graph:
    """Graph with maximum Ore-degree below ``2k`` but maximum degree at least ``k``.

    One or two star centers of degree in ``[k, 2k-2]`` are attached to
    private leaves; the remaining vertices carry a random graph of
    maximum degree ``k-1``, and random extra edges are added wherever the
    Ore-degree bound survives.
    """
    _need(k >= 2, "star_gadget needs k >= 2")
    _need(n >= k + 1, "star_gadget(n, k) needs n >= k + 1")
    rng = Lcg64(seed)
    bits = [0] * n
    deg = [0] * n

    def add(u: int, v: int) -> None:
        bits[u] |= 1 << v
        bits[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1

    nxt = 0
    centers = 2 if n >= 4 * k and rng.below(2) else 1
    for _ in range(centers):
        t = k + rng.below(k - 1)
        t = min(t, n - nxt - 1)
        if t < k:
            break
        c = nxt
        for leaf in range(nxt + 1, nxt + 1 + t):
            add(c, leaf)
        nxt += t + 1
    rest = n - nxt
    if rest >= 2:
        sub = random_graph_bounded_degree(rest, k - 1, rng.next_u32())
        for u, v in sub.edges():
            add(nxt + u, nxt + v)

    def ore_ok(u: int, v: int) -> bool:
        du, dv = deg[u] + 1, deg[v] + 1
        if du + dv >= 2 * k:
            return False
        x = bits[u]
        while x:
            low = x & -x
            if deg[low.bit_length() - 1] + du >= 2 * k:
                return False
            x ^= low
        x = bits[v]
        while x:
            low = x & -x
            if deg[low.bit_length() - 1] + dv >= 2 * k:
                return False
            x ^= low
        return True

    for _ in range(2 * n):
        u, v = rng.below(n), rng.below(n)
        if u != v and not bits[u] >> v & 1 and ore_ok(u, v):
            add(u, v)
    return Graph.from_bits(bits)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for g in graphs:
        edges += [(u + off, v + off) for u, v in g.edges()]
        off += g.n
    return Graph(off, edges)


def degenerate_example(d: int, max_deg: int) -> Graph:
    """``K_d`` joined to ``max_deg - d + 1`` independent vertices."""
    _need(1 <= d <= max_deg, "degenerate_example(d, D) needs 1 <= d <= D")
    n = max_deg + 1
    edges = [(u, v) for u in range(d) for v in range(u + 1, n)]
    return Graph(n, edges)


def gk_parts(k: int) -> dict[str, list[list[int]]]:
    """Vertex blocks of ``gk_example(k)``: ``V[i]`` (size k-1) then ``U[i]`` (size k^3-2k^2+1), i = 0..k."""
    _need(k >= 3, "gk_example(k) needs k >= 3")
    vs, us = k - 1, k**3 - 2 * k**2 + 1
    V = [list(range(i * vs, (i + 1) * vs)) for i in range(k + 1)]
    base = (k + 1) * vs
    U = [list(range(base + i * us, base + (i + 1) * us)) for i in range(k + 1)]
    return {"V": V, "U": U}


def gk_example(k: int) -> Graph:
    """V_0 is a clique joined to every V_i and U_0; each V_i (i >= 1) is joined to U_i."""
    parts = gk_parts(k)
    V, U = parts["V"], parts["U"]
    edges = []
    v0 = V[0]
    for i, a in enumerate(v0):
        edges += [(a, b) for b in v0[i + 1:]]
    for i in range(1, k + 1):
        edges += [(a, b) for a in v0 for b in V[i]]
    for i in range(k + 1):
        edges += [(a, b) for a in V[i] for b in U[i]]
    return Graph((k + 1) * (k - 1 + k**3 - 2 * k**2 + 1), edges)


def gk_lists(k: int) -> ListAssignment:
    """The k-list assignment on ``gk_example(k)`` that admits no equitable L-coloring.

    Colors are 1..2k-1: V_0 and U_0 get {1..k}; the j-th vertex of V_i
    gets ({1..k} - i) + (k + j); U_i (i >= 1) gets {k+1..2k-1} + i.
    """
    parts = gk_parts(k)
    V, U = parts["V"], parts["U"]
    n = (k + 1) * (len(V[0]) + len(U[0]))
    base = set(range(1, k + 1))
    extra = set(range(k + 1, 2 * k))
    lists: list = [None] * n
    for v in V[0] + U[0]:
        lists[v] = base
    for i in range(1, k + 1):
        for j, v in enumerate(V[i], start=1):
            lists[v] = (base - {i}) | {k + j}
        for v in U[i]:
            lists[v] = extra | {i}
    return ListAssignment(lists, k)


def kn_minus_clique(n: int, k: int) -> Graph:
    """``K_n`` minus the edges of a ``K_{2(n-k)-1}`` on vertices ``0..2(n-k)-2``."""
    s = 2 * (n - k) - 1
    _need(k >= 1 and 1 <= s <= n, "kn_minus_clique(n, k) needs k < n <= 2k + 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if not (v < s)])


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


_FAMILIES: dict[str, tuple[Callable[..., Graph], int, bool]] = {
    # name: (builder, number of integer params, takes seed)
    "complete": (complete, 1, False),
    "complete_bipartite": (complete_bipartite, 2, False),
    "star": (star, 1, False),
    "path": (path, 1, False),
    "cycle": (cycle, 1, False),
    "edgeless": (edgeless, 1, False),
    "random_tree": (random_tree, 1, True),
    "random_forest": (random_forest, 1, True),
    "random_graph_bounded_degree": (random_graph_bounded_degree, 2, True),
    "star_gadget": (star_gadget, 2, True),
    "degenerate_example": (degenerate_example, 2, False),
    "gk_example": (gk_example, 1, False),
    "kn_minus_clique": (kn_minus_clique, 2, False),
}
ALIASES = {"gk": "gk_example", "kbip": "complete_bipartite", "bipartite": "complete_bipartite",
           "tree": "random_tree", "forest": "random_forest", "bounded": "random_graph_bounded_degree"}
FAMILIES = tuple(_FAMILIES) + ("disjoint_union",)


def generate(family: str, params: Sequence[int] = (), seed: int | None = None,
             graphs: Sequence[Graph] = ()) -> Graph:
    """Build the named family.  ``disjoint_union`` takes its parts from ``graphs``."""
    name = ALIASES.get(family, family)
    if name == "disjoint_union":
        if params:
            raise ParameterError("disjoint_union takes graphs, not integer params")
        return disjoint_union(*graphs)
    if name not in _FAMILIES:
        raise ParameterError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    builder, arity, seeded = _FAMILIES[name]
    if len(params) != arity:
        raise ParameterError(f"{name} takes {arity} integer parameter(s), got {len(params)}")
    if seeded:
        return builder(*params, seed=0 if seed is None else seed)
    return builder(*params)
