"""Validators for every coloring notion used by the solvers and oracles."""
from __future__ import annotations

from collections import Counter

from .errors import StructureError
from .graph import Coloring, Graph, ListAssignment, Verdict

MODES = ("proper", "equitable", "nearly_equitable", "equitable_list", "se_list", "proportional")
LIST_MODES = ("equitable_list", "se_list", "proportional")


def mod_star(n: int, k: int) -> int:
    """The unique ``m`` in ``1..k`` with ``n - m`` divisible by ``k``."""
    r = n % k
    return r if r else k


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def check_coloring(
    g: Graph,
    f: Coloring,
    mode: str = "proper",
    k: int | None = None,
    lists: ListAssignment | None = None,
) -> Verdict:
    """Validate ``f`` on ``g`` under ``mode``.

    Plain modes count ``k`` classes (``k`` defaults to ``f.k``; a color
    index ``>= k`` is a :class:`StructureError`).  List modes take the list
    size from ``lists.k`` and treat ``f``'s colors as palette ids.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if f.n != g.n:
        raise StructureError(f"coloring has {f.n} vertices, graph has {g.n}")
    n = g.n
    violations: list[tuple[str, tuple]] = []
    for u, v in g.edges():
        if f.color_of[u] == f.color_of[v]:
            violations.append(("monochromatic_edge", (u, v)))

    if mode in LIST_MODES:
        if lists is None:
            raise StructureError(f"mode {mode!r} needs a list assignment")
        if lists.n != n:
            raise StructureError(f"list assignment has {lists.n} vertices, graph has {n}")
        if k is not None and k != lists.k:
            raise StructureError(f"k={k} disagrees with list size {lists.k}")
        k = lists.k
        for v, c in enumerate(f.color_of):
            if c not in lists.lists[v]:
                violations.append(("color_not_in_list", (v, c)))
        used = Counter(f.color_of)
        if mode == "proportional":
            for c in sorted(set(lists.eta) | set(used)):
                eta = lists.eta.get(c, 0)
                lo, hi = eta // k, ceil_div(eta, k)
                if not lo <= used.get(c, 0) <= hi:
                    violations.append(("color_usage", (c, used.get(c, 0), lo, hi)))
        else:
            cap = ceil_div(n, k)
            for c in sorted(used):
                if used[c] > cap:
                    violations.append(("class_too_large", (c, used[c], cap)))
            if mode == "se_list":
                full = sorted(c for c in used if used[c] == cap)
                limit = mod_star(n, k) if k else 0
                if len(full) > limit:
                    violations.append(("too_many_full_classes", (tuple(full), limit)))
        return Verdict(not violations, violations)

    if k is None:
        k = f.k
    if k < 1:
        raise StructureError(f"k must be positive, got {k}")
    for v, c in enumerate(f.color_of):
        if c >= k:
            raise StructureError(f"vertex {v} has color {c} >= k={k}")
    if mode == "proper":
        return Verdict(not violations, violations)
    sizes = [0] * k
    for c in f.color_of:
        sizes[c] += 1
    if mode == "equitable":
        lo, hi = n // k, ceil_div(n, k)
        for c, s in enumerate(sizes):
            if not lo <= s <= hi:
                violations.append(("class_size", (c, s, lo, hi)))
    else:
        if n % k:
            violations.append(("not_divisible", (n, k)))
        else:
            m = n // k
            profile = Counter(sizes)
            if k == 1 or profile.get(m - 1, 0) != 1 or profile.get(m + 1, 0) != 1 or profile.get(m, 0) != k - 2:
                violations.append(("size_profile", tuple(sizes)))
    return Verdict(not violations, violations)


def is_equitable(g: Graph, f: Coloring, k: int | None = None) -> bool:
    return check_coloring(g, f, "equitable", k).ok
