"""Exact deciders used as ground truth.

All deciders share one backtracking core: pick the uncolored vertex with
the fewest admissible colors, try its colors in increasing order, and
forward-check that every other uncolored vertex keeps a color and that
every color can still reach its lower bound.  A :class:`SearchBudget`
turns an overlong search into an ``unknown`` outcome; a ``no`` is only
ever reported after the whole space was covered.
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field

from .check import ceil_div, mod_star
from .errors import InternalInvariantError, ParameterError, PreconditionError
from .graph import Coloring, Graph, ListAssignment

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass
class SearchBudget:
    node_limit: int | None = None
    time_limit: float | None = None


@dataclass
class Decision:
    status: str
    coloring: Coloring | None = None
    lists: ListAssignment | None = None
    nodes: int = 0
    detail: dict = field(default_factory=dict)

    @property
    def yes(self) -> bool:
        return self.status == YES

    @property
    def no(self) -> bool:
        return self.status == NO

    @property
    def unknown(self) -> bool:
        return self.status == UNKNOWN


class _OutOfBudget(Exception):
    pass


def degeneracy_order(g: Graph) -> list[int]:
    """Vertices in reverse smallest-last removal order (densest core first)."""
    deg = [len(a) for a in g.adj]
    alive = set(range(g.n))
    removed = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        alive.remove(v)
        removed.append(v)
        for u in g.adj[v]:
            if u in alive:
                deg[u] -= 1
    return removed[::-1]


class _Search:
    """Backtracking over color indices ``0..P-1``.

    ``dom[v]`` is a bitmask of allowed colors, ``lo``/``hi`` bound every
    class size, and at most ``full_limit`` classes may reach size ``cap``.
    With ``symmetric`` set, unused colors are interchangeable and only the
    lowest unused one is ever opened.
    """

    def __init__(self, g: Graph, P: int, dom, lo, hi, *, cap=None, full_limit=None,
                 symmetric=False, budget: SearchBudget | None = None, reverse=False):
        self.g, self.P = g, P
        self.dom = list(dom)
        self.lo, self.hi = list(lo), list(hi)
        self.cap, self.full_limit = cap, full_limit
        self.symmetric = symmetric
        budget = budget or SearchBudget()
        self.node_limit = budget.node_limit
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
        order = degeneracy_order(g)
        if reverse:
            order.reverse()
        self.pos = [0] * g.n
        for i, v in enumerate(order):
            self.pos[v] = i
        self.nodes = 0

    def run(self) -> tuple[str, list[int] | None]:
        n, P = self.g.n, self.P
        if sum(self.lo) > n or sum(self.hi) < n:
            return NO, None
        self.color = [-1] * n
        self.size = [0] * P
        self.nbmask = [0] * n
        self.nfull = 0
        self.opened = 0
        self._saved = []
        try:
            ok = self._rec(n)
        except _OutOfBudget:
            return UNKNOWN, None
        return (YES, list(self.color)) if ok else (NO, None)

    def _blocked(self) -> int:
        mask = 0
        size, hi = self.size, self.hi
        for c in range(self.P):
            if size[c] >= hi[c]:
                mask |= 1 << c
        if self.full_limit is not None and self.nfull >= self.full_limit:
            for c in range(self.P):
                if size[c] == self.cap - 1:
                    mask |= 1 << c
        return mask

    def _avail(self, v: int, blocked: int) -> int:
        m = self.dom[v] & ~self.nbmask[v] & ~blocked
        if self.symmetric:
            unopened = ((1 << self.P) - 1) & ~self.opened
            m &= self.opened | (unopened & -unopened)
        return m

    def _rec(self, remaining: int) -> bool:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _OutOfBudget
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget
        if remaining == 0:
            return all(s >= l for s, l in zip(self.size, self.lo))
        blocked = self._blocked()
        color, pos = self.color, self.pos
        best, best_key, best_avail = -1, None, 0
        reach = 0
        counts = [0] * self.P
        for v in range(self.g.n):
            if color[v] >= 0:
                continue
            av = self._avail(v, blocked)
            if not av:
                return False
            reach |= av
            c = av.bit_count()
            key = (c, pos[v])
            if best_key is None or key < best_key:
                best, best_key, best_avail = v, key, av
            x = self.dom[v] & ~self.nbmask[v] & ~blocked
            while x:
                low = x & -x
                counts[low.bit_length() - 1] += 1
                x ^= low
        deficit = 0
        for c in range(self.P):
            short = self.lo[c] - self.size[c]
            if short > 0:
                if counts[c] < short:
                    return False
                deficit += short
        if deficit > remaining:
            return False
        v = best
        av = best_avail
        adj = self.g.adj[v]
        while av:
            low = av & -av
            av ^= low
            c = low.bit_length() - 1
            self._assign(v, c, adj)
            if self._rec(remaining - 1):
                return True
            self._unassign(v, c, adj)
        return False

    def _assign(self, v, c, adj):
        self.color[v] = c
        self.size[c] += 1
        if self.cap is not None and self.size[c] == self.cap:
            self.nfull += 1
        self._saved.append(self.opened)
        self.opened |= 1 << c
        bit = 1 << c
        saved_nb = []
        for u in adj:
            saved_nb.append(self.nbmask[u])
            self.nbmask[u] |= bit
        self._saved.append(saved_nb)

    def _unassign(self, v, c, adj):
        saved_nb = self._saved.pop()
        for u, old in zip(adj, saved_nb):
            self.nbmask[u] = old
        self.opened = self._saved.pop()
        if self.cap is not None and self.size[c] == self.cap:
            self.nfull -= 1
        self.size[c] -= 1
        self.color[v] = -1


def decide_equitable(g: Graph, k: int, budget: SearchBudget | None = None,
                     reverse: bool = False) -> Decision:
    """Exact test for an equitable ``k``-coloring of ``g``."""
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    n = g.n
    lo, hi = n // k, ceil_div(n, k)
    r = n % k
    s = _Search(g, k, [(1 << k) - 1] * n, [lo] * k, [hi] * k,
                cap=hi if r else None, full_limit=r if r else None,
                symmetric=True, budget=budget, reverse=reverse)
    status, color = s.run()
    f = Coloring(color, k) if color is not None else None
    return Decision(status, coloring=f, nodes=s.nodes)


LIST_DECISION_MODES = ("equitable", "se", "proportional")


def decide_list(g: Graph, L: ListAssignment, mode: str = "equitable",
                budget: SearchBudget | None = None, reverse: bool = False) -> Decision:
    """Exact test for an L-coloring obeying the size rule of ``mode``.

    ``equitable``: every color used at most ``ceil(n/k)`` times.
    ``se``: additionally at most ``n mod* k`` colors used exactly that often.
    ``proportional``: color ``c`` used ``floor(eta/k)`` or ``ceil(eta/k)`` times.
    """
    if mode not in LIST_DECISION_MODES:
        raise ParameterError(f"unknown mode {mode!r}; expected one of {LIST_DECISION_MODES}")
    if L.n != g.n:
        raise PreconditionError(f"list assignment has {L.n} vertices, graph has {g.n}")
    n, k = g.n, L.k
    palette = L.palette()
    index = {c: i for i, c in enumerate(palette)}
    P = len(palette)
    dom = [sum(1 << index[c] for c in L.lists[v]) for v in range(n)]
    cap = ceil_div(n, k) if k else 0
    cap_kw = {}
    if mode == "proportional":
        lo = [L.eta[c] // k for c in palette]
        hi = [ceil_div(L.eta[c], k) for c in palette]
    else:
        lo, hi = [0] * P, [cap] * P
        if mode == "se":
            cap_kw = {"cap": cap, "full_limit": mod_star(n, k)}
    s = _Search(g, P, dom, lo, hi, budget=budget, reverse=reverse, **cap_kw)
    status, color = s.run()
    f = None
    if color is not None:
        ids = [palette[c] for c in color]
        f = Coloring(ids, max(ids, default=-1) + 1)
    return Decision(status, coloring=f, nodes=s.nodes)


def canonical_list_assignments(n: int, k: int):
    """Every k-list assignment on ``n`` vertices up to renaming of colors.

    Vertex by vertex, a list is a set of already used colors plus the next
    few fresh colors in order.  Lists that reuse more colors come first.
    """
    def rec(v: int, used: int, acc: list):
        if v == n:
            yield list(acc)
            return
        for fresh in range(0, k + 1):
            old = k - fresh
            if old > used:
                continue
            new = tuple(range(used, used + fresh))
            for keep in itertools.combinations(range(used), old):
                acc.append(frozenset(keep + new))
                yield from rec(v + 1, used + fresh, acc)
                acc.pop()

    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    yield from rec(0, 0, [])


def decide_choosable(g: Graph, k: int, mode: str = "equitable",
                     budget: SearchBudget | None = None) -> Decision:
    """Is ``g`` L-colorable under ``mode`` for every k-list assignment ``L``?

    ``no`` carries a violating assignment in ``lists``.
    """
    budget = budget or SearchBudget()
    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    nodes = 0
    unknown = False
    checked = 0
    for lists in canonical_list_assignments(g.n, k):
        left = None if deadline is None else max(0.0, deadline - time.monotonic())
        if left == 0.0:
            return Decision(UNKNOWN, nodes=nodes, detail={"checked": checked})
        sub = None if budget.node_limit is None else budget.node_limit - nodes
        if sub is not None and sub <= 0:
            return Decision(UNKNOWN, nodes=nodes, detail={"checked": checked})
        L = ListAssignment(lists, k)
        d = decide_list(g, L, mode, SearchBudget(sub, left))
        nodes += d.nodes
        checked += 1
        if d.no:
            return Decision(NO, lists=L, nodes=nodes, detail={"checked": checked})
        if d.unknown:
            unknown = True
    return Decision(UNKNOWN if unknown else YES, nodes=nodes, detail={"checked": checked})


def star_greedy_list_color(t: int, L: ListAssignment) -> Coloring:
    """Equitable L-coloring of the star ``K_{1,t}`` (center 0) by greedy choice.

    Color the center first, then each leaf with its least used admissible
    color; no color exceeds ``ceil((t+1)/k)`` uses.
    """
    k = L.k
    if k < 3:
        raise PreconditionError(f"list size must be at least 3, got {k}")
    if L.n != t + 1:
        raise PreconditionError(f"lists cover {L.n} vertices, the star has {t + 1}")
    cap = ceil_div(t + 1, k)
    used: dict[int, int] = {}
    center = min(L.lists[0])
    color = [center]
    used[center] = 1
    for v in range(1, t + 1):
        options = [c for c in sorted(L.lists[v]) if c != center and used.get(c, 0) < cap]
        if not options:
            raise InternalInvariantError("greedy star coloring got stuck", {"leaf": v, "used": used})
        c = min(options, key=lambda x: (used.get(x, 0), x))
        used[c] = used.get(c, 0) + 1
        color.append(c)
    return Coloring(color, max(color) + 1)


def m0_formula(n: int, k: int) -> float:
    """Fewest edges of an ``n``-vertex graph with no equitable ``k``-coloring.

    Infinite when ``n <= k``: distinct colors for all vertices always work.
    """
    if k < 2:
        raise ParameterError(f"k must be at least 2, got {k}")
    if n < 0:
        raise ParameterError(f"n must be non-negative, got {n}")
    if n <= k:
        return math.inf
    clique = math.comb(k + 1, 2)
    if n <= 2 * k:
        small = min(clique, math.comb(n, 2) - math.comb(2 * (n - k) - 1, 2))
        if n == 2 * k:
            assert small == min(clique, n - n // k + 1), (n, k)
        return small
    return min(clique, n - n // k + 1)


def m0_exhaustive(n: int, k: int, budget: SearchBudget | None = None) -> tuple[float, Graph | None]:
    """Minimum edge count of a labeled ``n``-vertex graph with no equitable k-coloring.

    Returns ``(inf, None)`` when every graph has one, and ``(-1, None)`` if the
    budget ran out before the answer was certain.
    """
    if n > 7:
        raise PreconditionError(f"exhaustive search is limited to n <= 7, got {n}")
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    budget = budget or SearchBudget()
    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for m in range(len(pairs) + 1):
        for chosen in itertools.combinations(pairs, m):
            if deadline is not None and time.monotonic() > deadline:
                return -1, None
            g = Graph(n, chosen)
            d = decide_equitable(g, k, SearchBudget(budget.node_limit, None))
            if d.unknown:
                return -1, None
            if d.no:
                return m, g
    return math.inf, None


__all__ = [
    "Decision", "NO", "SearchBudget", "UNKNOWN", "YES", "canonical_list_assignments",
    "decide_choosable", "decide_equitable", "decide_list", "degeneracy_order", "m0_exhaustive",
    "m0_formula", "star_greedy_list_color",
]
