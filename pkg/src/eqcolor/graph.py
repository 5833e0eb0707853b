"""Graph, coloring and list-assignment data model plus file formats.

Vertices are the dense integers ``0..n-1``.  Every file format that is
read or written by the package is 1-based on disk for vertices; colors
are written as given (0-based color indices).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ParseError, StructureError


class Graph:
    """Immutable simple undirected graph.

    ``adj[v]`` is the sorted tuple of neighbors of ``v`` and ``adj_bits[v]``
    the same neighborhood as an integer bit-row (bit ``u`` set iff ``uv``
    is an edge).
    """

    __slots__ = ("n", "adj", "adj_bits", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise StructureError(f"vertex count must be non-negative, got {n}")
        bits = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise StructureError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise StructureError(f"loop at vertex {u}")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.n = n
        self.adj_bits = tuple(bits)
        self.adj = tuple(tuple(_bit_indices(b)) for b in bits)
        self._m = sum(len(a) for a in self.adj) // 2

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "Graph":
        """Build from symmetric neighbor bit-rows (not re-validated beyond symmetry)."""
        g = cls.__new__(cls)
        g.n = len(bits)
        g.adj_bits = tuple(bits)
        g.adj = tuple(tuple(_bit_indices(b)) for b in bits)
        g._m = sum(len(a) for a in g.adj) // 2
        return g

    @property
    def m(self) -> int:
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_bits[u] >> v & 1)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices``; returns it with the old labels in new order."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u in old for v in self.adj[u] if u < v and v in index]
        return Graph(len(old), edges), old

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = 0
        vs = list(vertices)
        for v in vs:
            mask |= 1 << v
        return all(not (self.adj_bits[v] & mask) for v in vs)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [], deque([s])
            while queue:
                v = queue.popleft()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        queue.append(u)
            out.append(sorted(comp))
        return out

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj_bits == other.adj_bits

    def __hash__(self) -> int:
        return hash((self.n, self.adj_bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bit_indices(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def degree_stats(g: Graph) -> tuple[int, int, int]:
    """Return ``(max degree, maximum Ore-degree, min degree)``.

    The Ore-degree of an edge ``xy`` is ``d(x) + d(y)``; it is 0 for an
    edgeless graph.
    """
    if g.n == 0:
        return 0, 0, 0
    deg = [len(a) for a in g.adj]
    ore = max((deg[u] + deg[v] for u, v in g.edges()), default=0)
    return max(deg), ore, min(deg)


def ore_degree(g: Graph) -> int:
    return degree_stats(g)[1]


@dataclass
class Coloring:
    """Vertex -> color map with maintained classes.

    ``k`` is the number of colors; classes may be empty.  ``color_of[v]``
    is in ``range(k)``.
    """

    color_of: list[int]
    k: int
    classes: list[set[int]] = field(init=False, repr=False)

    def __post_init__(self):
        self.color_of = list(self.color_of)
        self.classes = [set() for _ in range(self.k)]
        for v, c in enumerate(self.color_of):
            if not 0 <= c < self.k:
                raise StructureError(f"vertex {v} has color {c}, outside range(0, {self.k})")
            self.classes[c].add(v)

    @classmethod
    def from_classes(cls, classes: Sequence[Iterable[int]], n: int | None = None) -> "Coloring":
        groups = [sorted(c) for c in classes]
        if n is None:
            n = sum(len(c) for c in groups)
        color_of = [-1] * n
        for c, members in enumerate(groups):
            for v in members:
                if color_of[v] != -1:
                    raise StructureError(f"vertex {v} appears in two classes")
                color_of[v] = c
        if -1 in color_of:
            raise StructureError(f"vertex {color_of.index(-1)} is uncolored")
        return cls(color_of, len(groups))

    @property
    def n(self) -> int:
        return len(self.color_of)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def move(self, v: int, c: int) -> None:
        self.classes[self.color_of[v]].discard(v)
        self.classes[c].add(v)
        self.color_of[v] = c

    def copy(self) -> "Coloring":
        return Coloring(self.color_of, self.k)

    def restricted(self, n: int) -> "Coloring":
        """The coloring of the first ``n`` vertices (drops padding vertices)."""
        return Coloring(self.color_of[:n], self.k)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Coloring) and self.k == other.k and self.color_of == other.color_of


class ListAssignment:
    """A ``k``-list assignment: vertex -> frozenset of non-negative color ids."""

    __slots__ = ("k", "lists", "eta")

    def __init__(self, lists: Sequence[Iterable[int]], k: int | None = None):
        fl = [frozenset(x) for x in lists]
        if k is None:
            k = len(fl[0]) if fl else 0
        for v, lst in enumerate(fl):
            if len(lst) != k:
                raise StructureError(f"list of vertex {v} has {len(lst)} colors, expected {k}")
            if any(c < 0 for c in lst):
                raise StructureError(f"negative color id in list of vertex {v}")
        self.k = k
        self.lists = tuple(fl)
        eta: dict[int, int] = {}
        for lst in fl:
            for c in lst:
                eta[c] = eta.get(c, 0) + 1
        self.eta = eta

    @classmethod
    def constant(cls, n: int, k: int) -> "ListAssignment":
        return cls([range(k)] * n, k)

    @property
    def n(self) -> int:
        return len(self.lists)

    def palette(self) -> list[int]:
        return sorted(self.eta)

    def palette_size(self) -> int:
        return max(self.eta, default=-1) + 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ListAssignment) and self.k == other.k and self.lists == other.lists

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, sorted(lst))) + "}" for lst in self.lists)
        return f"ListAssignment(k={self.k}, [{body}])"


@dataclass
class Verdict:
    ok: bool
    violations: list[tuple[str, tuple]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


# --- DIMACS .col ---------------------------------------------------------


def graph_from_dimacs(text: bytes | str) -> Graph:
    """Parse a DIMACS ``.col`` graph (1-based vertices, duplicates removed)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("second 'p' line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                n, _m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if n < 0 or _m < 0:
                raise ParseError(f"malformed header {line!r}", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before 'p' line", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex index out of range 1..{n} in {line!r}", lineno)
            if u == v:
                raise ParseError(f"loop edge at vertex {u}", lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge n m' header")
    return Graph(n, sorted(edges))


def graph_to_dimacs(g: Graph) -> bytes:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return ("\n".join(lines) + "\n").encode()


# --- coloring / list files ------------------------------------------------


def coloring_to_text(f: Coloring) -> str:
    return "".join(f"{v + 1} {c}\n" for v, c in enumerate(f.color_of))


def coloring_from_text(text: str, n: int, k: int | None = None) -> Coloring:
    """Parse ``v c`` lines (1-based vertex, 0-based color).  ``k`` defaults to max color + 1."""
    color = [-1] * n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'v c', got {line!r}", lineno)
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected integers in {line!r}", lineno) from None
        if not 1 <= v <= n:
            raise ParseError(f"vertex {v} out of range 1..{n}", lineno)
        if c < 0:
            raise ParseError(f"negative color {c}", lineno)
        if color[v - 1] != -1:
            raise ParseError(f"vertex {v} colored twice", lineno)
        color[v - 1] = c
    if -1 in color:
        raise ParseError(f"vertex {color.index(-1) + 1} has no color")
    if k is None:
        k = max(color, default=-1) + 1
    return Coloring(color, k)


def lists_to_text(lists: ListAssignment) -> str:
    return "".join(
        f"{v + 1}: {' '.join(map(str, sorted(lst)))}\n" for v, lst in enumerate(lists.lists)
    )


def lists_from_text(text: str, n: int) -> ListAssignment:
    rows: list[list[int] | None] = [None] * n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'v: c1 ... ck', got {line!r}", lineno)
        try:
            v = int(head)
            colors = [int(t) for t in tail.split()]
        except ValueError:
            raise ParseError(f"expected integers in {line!r}", lineno) from None
        if not 1 <= v <= n:
            raise ParseError(f"vertex {v} out of range 1..{n}", lineno)
        if len(set(colors)) != len(colors):
            raise ParseError(f"repeated color in list of vertex {v}", lineno)
        rows[v - 1] = colors
    if None in rows:
        raise ParseError(f"vertex {rows.index(None) + 1} has no list")
    try:
        return ListAssignment(rows)
    except StructureError as exc:
        raise ParseError(str(exc)) from None
