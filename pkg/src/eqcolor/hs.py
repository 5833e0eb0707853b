"""Equitable k-coloring of graphs with maximum degree below k.

The solver inserts the edge sets of the vertices one at a time.  Whenever
the freshly inserted vertex clashes with its class it is moved to a class
free of its neighbors, which leaves one class one short and another one
over.  ``fix_nearly_equitable`` then repairs the coloring with at most
``2k - 1`` shifts, so a full run makes at most ``2kn`` shifts on the padded
graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ._engine import Engine, bits, nearly_equitable_ends
from .errors import ContractError, InternalInvariantError, PreconditionError
from .graph import Coloring, Graph


@dataclass
class ShiftLog:
    """Ordered shifts ``(vertex, from, to)``.

    A color of ``-1`` stands for "temporarily uncolored"; that happens only
    when a solo root has to step aside so that its leaf can take its place.
    ``shift_count`` counts moves into a real color.  ``fix_counts`` holds
    the shifts spent by each rebalancing call and ``cases`` tallies which
    repair case fired.
    """

    entries: list[tuple[int, int, int]] = field(default_factory=list)
    fix_counts: list[int] = field(default_factory=list)
    cases: dict[str, int] = field(default_factory=dict)

    @property
    def shift_count(self) -> int:
        return sum(1 for _, _, to in self.entries if to >= 0)

    def __len__(self) -> int:
        return self.shift_count

    def replay(self, start: Sequence[int]) -> list[int]:
        color = list(start)
        for v, frm, to in self.entries:
            if color[v] != frm:
                raise ValueError(f"log entry {(v, frm, to)} does not match current color {color[v]}")
            color[v] = to
        return color

    def to_text(self) -> str:
        return "".join(f"{v + 1} {frm} {to}\n" for v, frm, to in self.entries)


@dataclass
class ColorDigraph:
    """Arcs ``s -> t`` between colors with one witness each (lowest index)."""

    k: int
    arc: list[list[bool]]
    witness: dict[tuple[int, int], int]

    def arcs(self) -> list[tuple[int, int]]:
        return sorted(self.witness)


@dataclass
class RebalanceState:
    f: Coloring
    H: ColorDigraph
    small: int
    large: int
    A: list[int]
    B: list[int]
    Aprime: list[int]
    Bprime: list[int]
    solo: list[tuple[int, int]]
    m: int

    @property
    def a(self) -> int:
        return len(self.A)

    @property
    def b(self) -> int:
        return len(self.B)

    @property
    def a_prime(self) -> int:
        return len(self.Aprime)

    @property
    def b_prime(self) -> int:
        return len(self.Bprime)


def pad_to_multiple(g: Graph, k: int) -> tuple[Graph, list[int]]:
    """Append a clique ``K_p`` so that the order becomes a multiple of ``k``."""
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    p = -g.n % k
    if p == 0:
        return g, []
    new = list(range(g.n, g.n + p))
    edges = g.edges() + [(u, v) for i, u in enumerate(new) for v in new[i + 1:]]
    return Graph(g.n + p, edges), new


def build_color_digraph(g: Graph, f: Coloring) -> ColorDigraph:
    k = f.k
    eng = Engine(k, g.adj_bits, f.color_of)
    arc = [[False] * k for _ in range(k)]
    witness = {}
    for s in range(k):
        for t in range(k):
            if s != t:
                w = eng.witness(s, t)
                if w >= 0:
                    arc[s][t] = True
                    witness[(s, t)] = w
    return ColorDigraph(k, arc, witness)


def _ends(f: Coloring) -> tuple[int, int]:
    ends = nearly_equitable_ends(f.sizes())
    if ends is None:
        raise ContractError(f"coloring with class sizes {f.sizes()} is not nearly equitable")
    return ends


def _require_proper(g: Graph, f: Coloring) -> None:
    for u, v in g.edges():
        if f.color_of[u] == f.color_of[v]:
            raise ContractError(f"edge ({u}, {v}) is monochromatic")


def rebalance_state(g: Graph, f: Coloring) -> RebalanceState:
    """The color split and solo edges of a nearly equitable coloring."""
    if f.n != g.n:
        raise ContractError(f"coloring has {f.n} vertices, graph has {g.n}")
    _require_proper(g, f)
    small, large = _ends(f)
    eng = Engine(f.k, g.adj_bits, f.color_of)
    info = eng.analyze(list(range(f.k)), small, large)
    return RebalanceState(
        f=f.copy(), H=build_color_digraph(g, f), small=small, large=large,
        A=info["A"], B=info["B"], Aprime=info["Ap"], Bprime=info["Bp"],
        solo=info["solo"], m=g.n // f.k,
    )


def _log_from(eng: Engine) -> ShiftLog:
    return ShiftLog(list(eng.entries), list(eng.fix_counts), dict(eng.cases))


def fix_nearly_equitable(g: Graph, f: Coloring, debug: bool = False) -> tuple[Coloring, ShiftLog]:
    """Repair a nearly equitable coloring using at most ``2k - 1`` shifts.

    Requires ``d(x) < k`` for every vertex in a terminal class or on the B
    side; ``Delta(G) < k`` is enough.
    """
    state = rebalance_state(g, f)
    k = f.k
    if state.large not in state.A:
        for c in state.Aprime + state.B:
            for v in f.classes[c]:
                if g.degree(v) >= k:
                    raise ContractError(f"vertex {v} has degree {g.degree(v)} >= k={k}")
    eng = Engine(k, g.adj_bits, f.color_of, debug=debug)
    used = eng.hs_fix(list(range(k)), state.small, state.large)
    eng.fix_counts.append(used)
    if debug and used > 2 * k - 1:
        raise InternalInvariantError(f"{used} shifts exceed 2k-1={2 * k - 1}")
    return Coloring(eng.color, k), _log_from(eng)


def hs_run(g: Graph, k: int, debug: bool = False,
           order: Sequence[int] | None = None) -> tuple[Coloring, ShiftLog, Graph, list[int]]:
    """Full run on the padded graph.  Returns the padded coloring, the log,
    the padded graph and the initial coloring the log replays from."""
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    if g.max_degree >= k:
        raise PreconditionError(f"maximum degree {g.max_degree} is not below k={k}")
    gp, pad = pad_to_multiple(g, k)
    n = gp.n
    start = [v % k for v in range(n)]
    eng = Engine(k, gp.adj_bits, start, start_empty=True, debug=debug)
    seq = list(range(g.n)) if order is None else list(order)
    if sorted(seq) != list(range(g.n)):
        raise PreconditionError("order must be a permutation of the vertices")
    cls, nb, color = eng.cls, eng.nb, eng.color
    for v in seq + pad:
        eng.insert_edges(v)
        if not nb[v] & cls[color[v]]:
            continue
        eng.rebuild()
        old = color[v]
        target = next(c for c in range(k) if not nb[v] & cls[c])
        before = eng.shifts
        eng.move(v, target)
        eng.hs_fix(list(range(k)), old, target)
        eng.fix_counts.append(eng.shifts - before - 1)
    if debug and eng.shifts > 2 * k * n:
        raise InternalInvariantError(f"{eng.shifts} shifts exceed 2kn={2 * k * n}")
    return Coloring(eng.color, k), _log_from(eng), gp, start


def equitable_color_hs(g: Graph, k: int, debug: bool = False,
                       order: Sequence[int] | None = None) -> tuple[Coloring, ShiftLog]:
    """Equitable ``k``-coloring of ``g`` when ``Delta(g) < k``.

    The log refers to the padded graph; vertices ``>= g.n`` are padding.
    """
    f, log, _, _ = hs_run(g, k, debug, order)
    return f.restricted(g.n), log


__all__ = [
    "ColorDigraph", "RebalanceState", "ShiftLog", "bits", "build_color_digraph",
    "equitable_color_hs", "fix_nearly_equitable", "hs_run", "pad_to_multiple", "rebalance_state",
]
