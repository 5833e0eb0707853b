"""Equitable colorings of forests with at least three colors.

A forest on ``n`` vertices has an equitable ``k``-coloring (``k >= 3``)
exactly when every vertex lies in an independent set of size ``n // k``.
``forest_equitable_color`` builds the coloring from a bipartition,
producing class sizes ``s_i = (n + i - 1) // k`` for ``i = 1..k``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError, InternalInvariantError, OutOfScopeError, PreconditionError
from .graph import Coloring, Graph


@dataclass
class ForestBipartition:
    A: list[int]
    B: list[int]

    @property
    def a(self) -> int:
        return len(self.A)

    @property
    def b(self) -> int:
        return len(self.B)


def size_profile(n: int, k: int) -> list[int]:
    return [(n + i - 1) // k for i in range(1, k + 1)]


def _rooted(g: Graph, root: int, seen: list[bool]) -> tuple[list[int], list[int]]:
    """BFS order and parent array entries of the component of ``root``."""
    order, parent = [root], {root: -1}
    seen[root] = True
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for u in g.adj[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                order.append(u)
    return order, parent


def _require_forest(g: Graph) -> None:
    if not g.is_forest():
        raise PreconditionError("graph has a cycle")


def alpha_v_all(g: Graph) -> list[int]:
    """For each vertex, the largest independent set containing it."""
    _require_forest(g)
    n = g.n
    inn, out = [0] * n, [0] * n
    up_in, up_out = [0] * n, [0] * n
    local = [0] * n
    comp_of = [0] * n
    comp_mis = []
    seen = [False] * n
    for r in range(n):
        if seen[r]:
            continue
        order, parent = _rooted(g, r, seen)
        for v in reversed(order):
            kids = [u for u in g.adj[v] if u != parent[v]]
            inn[v] = 1 + sum(out[c] for c in kids)
            out[v] = sum(max(inn[c], out[c]) for c in kids)
        for p in order:
            kids = [u for u in g.adj[p] if u != parent[p]]
            s_out = sum(out[c] for c in kids)
            s_best = sum(max(inn[c], out[c]) for c in kids)
            has_up = parent[p] >= 0
            for c in kids:
                up_in[c] = 1 + s_out - out[c] + (up_out[p] if has_up else 0)
                up_out[c] = s_best - max(inn[c], out[c]) + (max(up_in[p], up_out[p]) if has_up else 0)
        for v in order:
            local[v] = inn[v] + (up_out[v] if parent[v] >= 0 else 0)
            comp_of[v] = len(comp_mis)
        comp_mis.append(max(inn[r], out[r]))
    total = sum(comp_mis)
    return [local[v] + total - comp_mis[comp_of[v]] for v in range(n)]


def max_independent_set_with(g: Graph, v: int) -> set[int]:
    """A maximum independent set of the forest ``g`` that contains ``v``."""
    _require_forest(g)
    n = g.n
    seen = [False] * n
    chosen: set[int] = set()
    roots = [v] + [r for r in range(n) if r != v]
    for r in roots:
        if seen[r]:
            continue
        order, parent = _rooted(g, r, seen)
        inn, out = {}, {}
        for x in reversed(order):
            kids = [u for u in g.adj[x] if u != parent[x]]
            inn[x] = 1 + sum(out[c] for c in kids)
            out[x] = sum(max(inn[c], out[c]) for c in kids)
        take = {r: r == v or inn[r] >= out[r]}
        for x in order:
            if take[x]:
                chosen.add(x)
            for c in g.adj[x]:
                if c != parent[x]:
                    take[c] = False if take[x] else inn[c] >= out[c]
    return chosen


def forest_feasible(g: Graph, k: int) -> tuple[bool, int | None]:
    """``(True, None)`` if ``g`` is equitably ``k``-colorable, else ``(False, v)``."""
    if k < 3:
        raise OutOfScopeError(f"the forest criterion needs k >= 3, got {k}")
    alpha = alpha_v_all(g)
    need = g.n // k
    for v, a in enumerate(alpha):
        if a < need:
            return False, v
    return True, None


def bipartition(g: Graph) -> ForestBipartition:
    n = g.n
    side = [-1] * n
    for r in range(n):
        if side[r] >= 0:
            continue
        side[r] = 0
        stack = [r]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
    A = [v for v in range(n) if side[v] == 0]
    B = [v for v in range(n) if side[v] == 1]
    if len(A) < len(B):
        A, B = B, A
    isolated = [v for v in A if not g.adj[v]]
    while len(A) >= len(B) + 2 and isolated:
        v = isolated.pop()
        A.remove(v)
        B.append(v)
    return ForestBipartition(sorted(A), sorted(B))


def _chunks(vertices: list[int], sizes: list[int]) -> list[list[int]]:
    out, i = [], 0
    for s in sizes:
        out.append(vertices[i:i + s])
        i += s
    return out


def forest_equitable_color(g: Graph, k: int, debug: bool = False) -> Coloring:
    """Equitable ``k``-coloring of a feasible forest; class ``i`` has size ``s_{i+1}``."""
    ok, bad = forest_feasible(g, k)
    if not ok:
        raise ContractError(f"vertex {bad} lies in no independent set of size {g.n // k}")
    n = g.n
    s = size_profile(n, k)
    part = bipartition(g)
    A, B = part.A, part.B
    b = len(B)
    prefix, j = 0, 0
    while prefix < b:
        prefix += s[j]
        j += 1
    if prefix == b:
        classes = _chunks(B, s[:j]) + _chunks(A, s[j:])
    elif j > 1:
        classes = _case_split(g, A, B, s, j)
    else:
        classes = _case_two_sets(g, A, B, s, debug)
    color = [-1] * n
    for c, members in enumerate(classes):
        for v in members:
            color[v] = c
    f = Coloring(color, k)
    if debug:
        for u, v in g.edges():
            if color[u] == color[v]:
                raise InternalInvariantError("forest construction produced a clash", {"edge": (u, v)})
    return f


def _case_split(g: Graph, A, B, s, j) -> list[list[int]]:
    # B overflows the first j-1 classes by ``need``; its lowest-degree part shares class j with A
    need = len(B) - sum(s[:j - 1])
    S = sorted(B, key=lambda v: (g.degree(v), v))[:need]
    banned = set()
    for v in S:
        banned.update(g.adj[v])
    pool = [v for v in A if v not in banned]
    if len(S) + len(pool) < s[j - 1]:
        raise InternalInvariantError("low-degree extension too small", {"S": S, "pool": len(pool)})
    S2 = S + pool[:s[j - 1] - need]
    inS, inS2 = set(S), set(S2)
    rest_B = [v for v in B if v not in inS]
    rest_A = [v for v in A if v not in inS2]
    return _chunks(rest_B, s[:j - 1]) + [S2] + _chunks(rest_A, s[j:])


def _check_independent(g: Graph, vertices, label: str, debug: bool) -> None:
    if debug and not g.is_independent(vertices):
        raise InternalInvariantError(f"{label} is not independent", {"set": sorted(vertices)})


def _case_two_sets(g: Graph, A, B, s, debug) -> list[list[int]]:
    s1, sk = s[0], s[-1]
    Aset = set(A)
    L = {v for v in A if g.degree(v) == 1}

    def nbhd(vs):
        out = set()
        for v in vs:
            out.update(g.adj[v])
        return out

    def good(Q):
        return len(Q) + len(L - nbhd(Q)) >= sk

    Q: set[int] = set()
    changed = True
    while changed:
        changed = False
        for v in B:
            if v not in Q and good(Q | {v}):
                Q.add(v)
                changed = True
    Bset = set(B)
    if Q == Bset:
        I1, I2 = None, Q | (L - nbhd(Q))
    else:
        v = min(Bset - Q)
        cand = (nbhd(Q) & L) | (Bset - Q)
        if len(cand) >= s1:
            I1, I2 = cand, Q | (L - nbhd(Q))
        else:
            I1, I2 = _leaf_exchange(g, v, Bset, L, s1, debug)
    if I1 is not None:
        _check_independent(g, I1, "first set", debug)
    _check_independent(g, I2, "second set", debug)
    I2 = _trim(I2, sk, Aset)
    if I1 is None:
        I1 = set(sorted(Aset - I2)[:s1])
    I1 = _trim(I1, s1, Aset)
    if len(I1) != s1 or len(I2) != sk or I1 & I2 or not Bset <= I1 | I2:
        raise InternalInvariantError("two-set construction failed",
                                     {"I1": sorted(I1), "I2": sorted(I2), "s1": s1, "sk": sk})
    rest = sorted(Aset - I1 - I2)
    return [sorted(I1)] + _chunks(rest, s[1:-1]) + [sorted(I2)]


def _trim(I: set[int], size: int, Aset: set[int]) -> set[int]:
    """Drop the highest-index A vertices until ``I`` has ``size`` elements."""
    extra = len(I) - size
    if extra <= 0:
        return set(I)
    drop = sorted((v for v in I if v in Aset), reverse=True)[:extra]
    if len(drop) < extra:
        raise InternalInvariantError("cannot trim without touching B", {"set": sorted(I), "size": size})
    return set(I) - set(drop)


def _leaf_exchange(g: Graph, v: int, Bset: set[int], L: set[int], s1: int, debug: bool):
    R = max_independent_set_with(g, v)
    extra = len(R) - s1
    if extra < 0:
        raise InternalInvariantError("independent set through v too small", {"v": v, "size": len(R)})
    drop = sorted(R & Bset - {v}, reverse=True)[:extra]
    R -= set(drop)
    extra -= len(drop)
    if extra:
        R -= set(sorted(R - Bset, reverse=True)[:extra])
    while True:
        others = sorted(R & Bset - {v})
        if not others:
            break
        blocked = set()
        for x in R:
            blocked.update(g.adj[x])
        free = sorted(x for x in L - R if x not in blocked)
        if not free:
            break
        before = len(R & Bset)
        R = (R - {others[0]}) | {free[0]}
        if debug and not len(R & Bset) < before:
            raise InternalInvariantError("leaf exchange did not shrink R on the B side", {"R": sorted(R)})
    _check_independent(g, R, "exchange set", debug)
    if R & Bset == {v}:
        I2 = (Bset - {v}) | (set(g.adj[v]) & L)
    else:
        I2 = (Bset | L) - R
    return R, I2


__all__ = ["ForestBipartition", "alpha_v_all", "bipartition", "forest_equitable_color",
           "forest_feasible", "max_independent_set_with", "size_profile"]
