"""Equitable k-coloring of graphs whose maximum Ore-degree is below 2k.

Correct but exponential in the worst case: every swap may trigger a full
recursive rebalance of the B side.  A shift cap turns runaway instances
into :class:`StepCapExceeded` instead of a hang.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._engine import Engine, bits
from .errors import ContractError, PreconditionError
from .graph import Coloring, Graph, degree_stats
from .hs import RebalanceState, ShiftLog, _log_from, pad_to_multiple, rebalance_state

DEFAULT_STEP_CAP = 10**7


@dataclass
class OreState(RebalanceState):
    g: Graph = None
    Adp: list[int] = None
    solo_star: dict[int, int] = None

    @property
    def adp(self) -> int:
        return len(self.Adp)

    def class_mask(self, colors) -> int:
        acc = 0
        for c in colors:
            for v in self.f.classes[c]:
                acc |= 1 << v
        return acc


def ore_state(g: Graph, f: Coloring) -> OreState:
    base = rebalance_state(g, f)
    eng = Engine(f.k, g.adj_bits, f.color_of)
    act = list(range(f.k))
    A_order = eng.reach_to(base.small, act)
    Adp = eng.a_double_prime(A_order, base.Aprime, base.small) if base.large not in base.A else []
    Adp_set = set(Adp)
    star = {z: 0 for c in base.B for z in f.classes[c]}
    for w, z in base.solo:
        if f.color_of[w] in Adp_set:
            star[z] += 1
    fields = {name: getattr(base, name) for name in RebalanceState.__dataclass_fields__}
    return OreState(**fields, g=g, Adp=Adp, solo_star=star)


def mu_weight(state: OreState, y: int) -> Fraction:
    """Sum of ``b / ||x, B||`` over the neighbors ``x`` of ``y`` in A'' classes."""
    Bmask = state.class_mask(state.B)
    Adp_mask = state.class_mask(state.Adp)
    nb = state.g.adj_bits
    return sum((Fraction(state.b, (nb[x] & Bmask).bit_count()) for x in bits(nb[y] & Adp_mask)),
               Fraction(0))


def _cases_fail(eng: Engine, state: OreState) -> bool:
    if state.large in state.A:
        return False
    return eng.find_case1(state.A, state.Aprime, state.B) is None


def swap_wy(state: OreState, w: int, y: int, debug: bool = False,
            step_cap: int | None = DEFAULT_STEP_CAP) -> Coloring:
    """Perform the wy-swap on a state where Cases 0 and 1 fail."""
    f, g = state.f, state.g
    if not g.has_edge(w, y):
        raise ContractError(f"{w}{y} is not an edge")
    if (w, y) not in set(state.solo):
        raise ContractError(f"{w}{y} is not a solo edge")
    if f.color_of[w] not in state.Adp:
        raise ContractError(f"color of {w} is not in A''")
    eng = Engine(f.k, g.adj_bits, f.color_of, debug=debug, step_cap=step_cap)
    if not _cases_fail(eng, state):
        raise ContractError("Case 0 or Case 1 applies; no swap needed")
    eng.swap(w, y, state.A, state.B, state.large)
    return Coloring(eng.color, f.k)


def removal_order(g: Graph) -> list[tuple[int, list[int]]]:
    """Strip a minimum-degree non-isolated vertex until no edge is left.

    Returns ``(v, neighbors at removal)`` in removal order; ties go to the
    lowest index.
    """
    nb = list(g.adj_bits)
    deg = [b.bit_count() for b in nb]
    out = []
    live = {v for v in range(g.n) if deg[v]}
    while live:
        v = min(live, key=lambda u: (deg[u], u))
        ns = list(bits(nb[v]))
        out.append((v, ns))
        for u in ns:
            nb[u] &= ~(1 << v)
            deg[u] -= 1
            if not deg[u]:
                live.discard(u)
        nb[v] = 0
        deg[v] = 0
        live.discard(v)
    return out


def ore_run(g: Graph, k: int, step_cap: int | None = DEFAULT_STEP_CAP,
            debug: bool = False) -> tuple[Coloring, ShiftLog]:
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    theta = degree_stats(g)[1]
    if theta >= 2 * k:
        raise PreconditionError(f"maximum Ore-degree {theta} is not below 2k={2 * k}")
    gp, _pad = pad_to_multiple(g, k)
    n = gp.n
    eng = Engine(k, gp.adj_bits, [v % k for v in range(n)], start_empty=True,
                 debug=debug, step_cap=step_cap)
    nb, cls, color = eng.nb, eng.cls, eng.color
    for v, ns in reversed(removal_order(gp)):
        for u in ns:
            nb[v] |= 1 << u
            nb[u] |= 1 << v
        if not nb[v] & cls[color[v]]:
            continue
        eng.rebuild()
        old = color[v]
        target = next((c for c in range(k) if not nb[v] & cls[c]), None)
        if target is None:
            raise eng.invariant(f"vertex {v} of degree {len(ns)} meets every class")
        before = eng.shifts
        eng.move(v, target)
        eng.ore_fix(list(range(k)), old, target)
        eng.fix_counts.append(eng.shifts - before - 1)
    return Coloring(eng.color, k).restricted(g.n), _log_from(eng)


def equitable_color_ore(g: Graph, k: int, step_cap: int | None = DEFAULT_STEP_CAP,
                        debug: bool = False) -> Coloring:
    """Equitable ``k``-coloring of ``g`` when its maximum Ore-degree is below ``2k``."""
    return ore_run(g, k, step_cap, debug)[0]


__all__ = ["DEFAULT_STEP_CAP", "OreState", "equitable_color_ore", "mu_weight", "ore_run",
           "ore_state", "removal_order", "swap_wy"]
