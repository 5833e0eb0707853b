"""Shift engine shared by the maximum-degree and Ore-degree solvers.

The engine keeps one global coloring of a (padded) vertex set and works on
subsets of colors, so a recursive call on the "B side" is just a call with
fewer active colors; no induced subgraph is ever materialised.

Per color ``c`` it stores the class as a bitmask ``cls[c]``, its member set
``mem[c]`` and ``N[c]``, the union of the neighborhoods of the class.  Then
``cls[s] & ~N[t]`` is exactly the set of witnesses of the arc ``s -> t`` of
the auxiliary color digraph.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .errors import InternalInvariantError, StepCapExceeded

UNCOLORED = -1


def bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def lowbit(x: int) -> int:
    return (x & -x).bit_length() - 1


class Engine:
    def __init__(self, k: int, adj_bits, color, *, start_empty: bool = False,
                 debug: bool = False, step_cap: int | None = None):
        self.k = k
        self.n = len(adj_bits)
        self.full = list(adj_bits)
        self.nb = [0] * self.n if start_empty else list(adj_bits)
        self.color = list(color)
        self.cls = [0] * k
        self.mem: list[set[int]] = [set() for _ in range(k)]
        for v, c in enumerate(self.color):
            self.cls[c] |= 1 << v
            self.mem[c].add(v)
        self.N = [0] * k
        self.debug = debug
        self.step_cap = step_cap
        self.entries: list[tuple[int, int, int]] = []
        self.shifts = 0
        self.fix_counts: list[int] = []
        self.cases: Counter = Counter()
        self.rebuild()

    # ---- bookkeeping -------------------------------------------------

    def rebuild(self) -> None:
        """Recompute every class neighborhood from scratch."""
        N = [0] * self.k
        nb, color = self.nb, self.color
        for v in range(self.n):
            c = color[v]
            if c >= 0:
                N[c] |= nb[v]
        self.N = N

    def _refresh(self, c: int) -> None:
        acc = 0
        nb = self.nb
        for u in self.mem[c]:
            acc |= nb[u]
        self.N[c] = acc

    def insert_edges(self, v: int) -> None:
        """Add every edge of the full graph at ``v`` to the current graph."""
        row = self.full[v]
        self.nb[v] = row
        bit = 1 << v
        nb = self.nb
        for u in bits(row):
            nb[u] |= bit

    def _check_free(self, w: int, to: int) -> None:
        if self.nb[w] & self.cls[to]:
            raise self.invariant(f"moving {w} into class {to} breaks properness")
        if self.debug and any(self.nb[w] >> u & 1 for u in self.mem[to]):
            raise self.invariant(f"arc re-check failed for {w} -> {to}")

    def _tick(self) -> None:
        self.shifts += 1
        if self.step_cap is not None and self.shifts > self.step_cap:
            raise StepCapExceeded(f"more than {self.step_cap} shifts")

    def move(self, w: int, to: int) -> None:
        frm = self.color[w]
        self._check_free(w, to)
        bit = 1 << w
        self.cls[frm] ^= bit
        self.mem[frm].discard(w)
        self.cls[to] |= bit
        self.mem[to].add(w)
        self.color[w] = to
        self._refresh(frm)
        self.N[to] |= self.nb[w]
        self.entries.append((w, frm, to))
        self._tick()

    def uncolor(self, w: int) -> None:
        frm = self.color[w]
        self.cls[frm] ^= 1 << w
        self.mem[frm].discard(w)
        self.color[w] = UNCOLORED
        self._refresh(frm)
        self.entries.append((w, frm, UNCOLORED))

    def place(self, w: int, to: int) -> None:
        self._check_free(w, to)
        self.cls[to] |= 1 << w
        self.mem[to].add(w)
        self.color[w] = to
        self.N[to] |= self.nb[w]
        self.entries.append((w, UNCOLORED, to))
        self._tick()

    def invariant(self, message: str, **extra) -> InternalInvariantError:
        state = {
            "sizes": [len(s) for s in self.mem],
            "color": list(self.color),
            "shifts": self.shifts,
        }
        state.update(extra)
        return InternalInvariantError(message, state)

    # ---- the color digraph ------------------------------------------

    def witness(self, s: int, t: int) -> int:
        x = self.cls[s] & ~self.N[t]
        return lowbit(x) if x else -1

    def reach_to(self, target: int, act) -> list[int]:
        """Colors of ``act`` reaching ``target``, in discovery order (target first)."""
        cls, N = self.cls, self.N
        seen = {target}
        order = [target]
        i = 0
        while i < len(order):
            nt = ~N[order[i]]
            i += 1
            for s in act:
                if s not in seen and cls[s] & nt:
                    seen.add(s)
                    order.append(s)
        return order

    def reach_from(self, src: int, act) -> list[int]:
        cls, N = self.cls, self.N
        seen = {src}
        order = [src]
        i = 0
        while i < len(order):
            row = cls[order[i]]
            i += 1
            for t in act:
                if t not in seen and row & ~N[t]:
                    seen.add(t)
                    order.append(t)
        return order

    def path(self, src: int, dst: int, allowed) -> list[int] | None:
        """Shortest ``src -> dst`` color path inside ``allowed`` (BFS, low index first)."""
        if src == dst:
            return [src]
        allowed = sorted(allowed)
        cls, N = self.cls, self.N
        parent = {src: src}
        queue = [src]
        i = 0
        while i < len(queue):
            s = queue[i]
            i += 1
            row = cls[s]
            for t in allowed:
                if t not in parent and row & ~N[t]:
                    parent[t] = s
                    if t == dst:
                        out = [t]
                        while out[-1] != src:
                            out.append(parent[out[-1]])
                        return out[::-1]
                    queue.append(t)
        return None

    def path_witnesses(self, p: list[int]) -> list[int]:
        return [self.witness(p[i], p[i + 1]) for i in range(len(p) - 1)]

    def shift_along(self, p: list[int], wits: list[int] | None = None) -> None:
        """Shift along a color path; witnesses are fixed before the first move."""
        if wits is None:
            wits = self.path_witnesses(p)
        for i, w in enumerate(wits):
            if w < 0 or self.color[w] != p[i]:
                raise self.invariant("stale witness on shift path", path=p, witnesses=wits)
            self.move(w, p[i + 1])

    def terminal(self, A: list[int], a0: int) -> list[int]:
        if len(A) == 1:
            return [a0]
        out = []
        for al in A:
            if al == a0:
                continue
            rest = sorted(c for c in A if c != al)
            if len(self.reach_to(a0, rest)) == len(rest):
                out.append(al)
        return sorted(out)

    def mask(self, colors) -> int:
        acc = 0
        for c in colors:
            acc |= self.cls[c]
        return acc

    def solo_leaves(self, w: int, side_mask: int) -> list[int]:
        cw = self.cls[self.color[w]]
        bit = 1 << w
        nb = self.nb
        return [z for z in bits(nb[w] & side_mask) if nb[z] & cw == bit]

    # ---- cases shared by both solvers -------------------------------

    def find_case1(self, A, Ap, B):
        """A solo root that witnesses an arc into another A color."""
        Bmask = self.mask(B)
        cls, nb = self.cls, self.nb
        for om in Ap:
            others = [c for c in A if c != om]
            if not others:
                continue
            others.sort()
            for w in sorted(self.mem[om]):
                targets = [al for al in others if not nb[w] & cls[al]]
                if not targets:
                    continue
                leaves = self.solo_leaves(w, Bmask)
                if leaves:
                    return w, om, targets[0], leaves[0]
        return None

    def do_case1(self, hit, A, a0) -> int:
        w, om, al, y = hit
        p = self.path(al, a0, [c for c in A if c != om])
        if p is None:
            raise self.invariant("terminal color has no avoiding path", root=w, omega=om, alpha=al)
        wits = self.path_witnesses(p)
        yc = self.color[y]
        self.move(w, al)
        self.shift_along(p, wits)
        self.move(y, om)
        return yc

    def analyze(self, act, a0, b0) -> dict:
        """Derived sets of the rebalancing state on the active colors."""
        A = self.reach_to(a0, act)
        Aset = set(A)
        B = [c for c in act if c not in Aset]
        out = {"A_order": A, "A": sorted(A), "B": B}
        if b0 in Aset:
            out.update(Ap=[], Bp=[], solo=[])
            return out
        Ap = self.terminal(A, a0)
        Bp = sorted(self.reach_from(b0, act))
        Bmask = self.mask(B)
        solo = []
        for om in Ap:
            for w in sorted(self.mem[om]):
                solo += [(w, z) for z in self.solo_leaves(w, Bmask)]
        out.update(Ap=Ap, Bp=Bp, solo=solo)
        return out

    # ---- maximum-degree rebalancing ----------------------------------

    def hs_fix(self, act, a0, b0) -> int:
        """Turn the nearly equitable coloring on ``act`` into an equitable one."""
        start = self.shifts
        top_k = len(act)
        act = sorted(act)
        while True:
            A = self.reach_to(a0, act)
            Aset = set(A)
            if b0 in Aset:
                self.cases["case0"] += 1
                self.shift_along(self.path(b0, a0, A))
                break
            B = [c for c in act if c not in Aset]
            Ap = self.terminal(A, a0)
            hit = self.find_case1(A, Ap, B)
            if hit is not None:
                self.cases["case1"] += 1
                yc = self.do_case1(hit, A, a0)
                if yc == b0:
                    break
                act, a0 = B, yc
                continue
            if self.debug:
                self._check_solo_bound(A, Ap, B)
            hit = self._find_case2(A, Ap, b0, act)
            if hit is None:
                raise self.invariant("no case applies", active=act, small=a0, large=b0, A=A, Ap=Ap)
            self.cases["case2"] += 1
            act, a0, b0 = self._do_case2(hit, A, B, a0, b0)
        used = self.shifts - start
        if self.debug and used > 2 * top_k - 1:
            raise self.invariant(f"rebalance used {used} > {2 * top_k - 1} shifts")
        return used

    def _check_solo_bound(self, A, Ap, B) -> None:
        # ||z, A|| >= a + a' - s_z >= a for every B-side vertex z
        a, ap = len(A), len(Ap)
        Amask, Bmask = self.mask(A), self.mask(B)
        roots = Counter(z for om in Ap for w in self.mem[om] for z in self.solo_leaves(w, Bmask))
        for z in bits(Bmask):
            toA = (self.nb[z] & Amask).bit_count()
            if toA < a + ap - roots[z] or a + ap - roots[z] < a:
                raise self.invariant("solo counting bound fails", vertex=z, toA=toA, s=roots[z])

    def _find_case2(self, A, Ap, b0, act):
        Bp = self.reach_from(b0, act)
        Bpmask = self.mask(Bp)
        nb = self.nb
        for al in Ap:
            for w in sorted(self.mem[al]):
                leaves = self.solo_leaves(w, Bpmask)
                for i, y in enumerate(leaves):
                    for z in leaves[i + 1:]:
                        if not nb[y] >> z & 1:
                            return w, al, y, z
        return None

    def _do_case2(self, hit, A, B, a0, b0):
        w, al, y, _z = hit
        P = self.path(b0, self.color[y], B)
        Q = self.path(al, a0, A)
        if P is None or Q is None:
            raise self.invariant("missing shift path in case 2", root=w, leaf=y)
        pw, qw = self.path_witnesses(P), self.path_witnesses(Q)
        if qw and qw[0] == w:
            raise self.invariant("solo root witnesses an arc inside A", root=w)
        self.shift_along(P, pw)
        self.shift_along(Q, qw)
        yc = self.color[y]
        keep = ~(1 << y)
        free = [bt for bt in B if not self.nb[w] & self.cls[bt] & keep]
        if not free:
            raise self.invariant("solo root has no free B class", root=w, leaf=y)
        other = [bt for bt in free if bt != yc]
        if other:
            bt = other[0]
            self.move(w, bt)
            self.move(y, al)
        else:
            bt = yc
            self.uncolor(w)
            self.move(y, al)
            self.place(w, bt)
        return sorted(B + [al]), al, bt

    # ---- Ore-degree rebalancing -------------------------------------

    def sub_fix(self, act, a0, b0) -> None:
        """Rebalance a sub-coloring with the cheaper solver whenever it applies."""
        V = self.mask(act)
        nb = self.nb
        top = max(((nb[v] & V).bit_count() for v in bits(V)), default=0)
        if top < len(act):
            self.hs_fix(act, a0, b0)
        else:
            self.ore_fix(act, a0, b0)

    def a_double_prime(self, A_order, Ap, a0) -> list[int]:
        Apset = set(Ap)
        nonterminal = [c for c in A_order if c not in Apset]
        if not nonterminal:
            return list(Ap)
        al_l = nonterminal[-1]
        if al_l == a0:
            return sorted(c for c in A_order if c != a0)
        rest = sorted(c for c in A_order if c != al_l)
        reach = set(self.reach_to(a0, rest))
        return sorted(c for c in rest if c not in reach)

    def mu(self, y: int, Adp_mask: int, Bmask: int, b: int) -> Fraction:
        nb = self.nb
        total = Fraction(0)
        for x in bits(nb[y] & Adp_mask):
            total += Fraction(b, (nb[x] & Bmask).bit_count())
        return total

    def ore_fix(self, act, a0, b0) -> None:
        act = sorted(act)
        last = None
        while True:
            A_order = self.reach_to(a0, act)
            Aset = set(A_order)
            A = sorted(A_order)
            if b0 in Aset:
                self.cases["case0"] += 1
                self.shift_along(self.path(b0, a0, A))
                return
            B = [c for c in act if c not in Aset]
            Ap = self.terminal(A, a0)
            hit = self.find_case1(A, Ap, B)
            if hit is not None:
                self.cases["case1"] += 1
                yc = self.do_case1(hit, A, a0)
                if yc != b0:
                    self.sub_fix(B, yc, b0)
                return
            Bmask = self.mask(B)
            pair = self._find_solo_pair(Ap, Bmask)
            if pair is not None:
                self.cases["case2"] += 1
                b0 = self.swap(pair[0], pair[1], A, B, b0)
                last = None
                continue
            Adp = self.a_double_prime(A_order, Ap, a0)
            if not Adp:
                raise self.invariant("empty A'' with cases 0-2 failing", A=A, Ap=Ap)
            w, y = self._mu_choice(Adp, Bmask, len(B))
            if self.debug:
                last = self._check_progress(last, A, Adp, B, Bmask)
            self.cases["swap"] += 1
            b0 = self.swap(w, y, A, B, b0)

    def _find_solo_pair(self, Ap, Bmask):
        nb = self.nb
        for al in Ap:
            for w in sorted(self.mem[al]):
                leaves = self.solo_leaves(w, Bmask)
                for i, y in enumerate(leaves):
                    for z in leaves[i + 1:]:
                        if not nb[y] >> z & 1:
                            return w, y
        return None

    def _mu_choice(self, Adp, Bmask, b):
        Adp_mask = self.mask(Adp)
        best, best_y = None, -1
        for y in bits(Bmask):
            m = self.mu(y, Adp_mask, Bmask, b)
            if best is None or m < best:
                best, best_y = m, y
        if best is None or best >= len(Adp):
            raise self.invariant("no vertex of small weight", A2=Adp, weight=best)
        y = best_y
        nb = self.nb
        roots = [x for x in bits(nb[y] & Adp_mask) if nb[y] & self.cls[self.color[x]] == 1 << x]
        if not roots:
            raise self.invariant("light vertex has no solo root in A''", vertex=y)
        w = max(roots, key=lambda x: ((nb[x] & Bmask).bit_count(), -x))
        return w, y

    def _check_progress(self, last, A, Adp, B, Bmask):
        Adp_mask = self.mask(Adp)
        nb = self.nb
        ab = sum((nb[x] & Bmask).bit_count() for x in bits(Adp_mask))
        bb = sum((nb[z] & Bmask).bit_count() for z in bits(Bmask)) // 2
        cur = (len(A), len(Adp), len(B), ab, bb)
        if last is not None and last[0] == cur[0]:
            if last[1] > last[2] and not ab < last[3]:
                raise self.invariant("||A'',B|| did not decrease", before=last, after=cur)
            if last[1] <= last[2] and not bb > last[4]:
                raise self.invariant("||B|| did not increase", before=last, after=cur)
        return cur

    def swap(self, w: int, y: int, A, B, b0) -> int:
        """The wy-swap.  Returns the new large color."""
        al = self.color[w]
        yc = self.color[y]
        self.uncolor(w)
        self.move(y, al)
        if yc != b0:
            self.sub_fix(B, yc, b0)
        nb, cls = self.nb, self.cls
        for bt in B:
            if not nb[w] & cls[bt]:
                self.place(w, bt)
                return bt
        for bt in B:
            hit = nb[w] & cls[bt]
            if hit & (hit - 1):
                continue
            z = lowbit(hit)
            for g in sorted(B + [al]):
                if g != bt and not nb[z] & cls[g]:
                    self.move(z, g)
                    self.place(w, bt)
                    return g
        raise self.invariant("swap cannot re-seat the root", root=w, leaf=y)


def nearly_equitable_ends(sizes: list[int]) -> tuple[int, int] | None:
    """(small, large) colors if ``sizes`` is a nearly equitable profile."""
    k = len(sizes)
    total = sum(sizes)
    if k < 2 or total % k:
        return None
    m = total // k
    small = [c for c, s in enumerate(sizes) if s == m - 1]
    large = [c for c, s in enumerate(sizes) if s == m + 1]
    rest = [c for c, s in enumerate(sizes) if s == m]
    if len(small) == 1 and len(large) == 1 and len(rest) == k - 2:
        return small[0], large[0]
    return None
