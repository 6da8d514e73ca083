"""Finite posets, stored as their Hasse diagram.

The input is the cover relation (x covered-by y edges); the full order is the
reflexive-transitive closure, computed once and cached as per-element bitmasks.
Inputs that are not exactly a Hasse diagram (cycles, or covers already implied
by other covers) are rejected rather than repaired, so files stay canonical.
"""
from __future__ import annotations

from .errors import CyclicCovers, InvalidStructure, RedundantCover


class Poset:
    def __init__(self, elements, covers):
        elems = tuple(sorted(elements))
        if len(set(elems)) != len(elems):
            raise InvalidStructure("duplicate poset elements")
        for e in elems:
            if not e or any(ch.isspace() for ch in e):
                raise InvalidStructure(f"bad element id {e!r}")
        idx = {e: i for i, e in enumerate(elems)}
        seen = set()
        for x, y in covers:
            if x not in idx or y not in idx:
                raise InvalidStructure(f"cover ({x},{y}) uses unknown element")
            if x == y:
                raise InvalidStructure(f"self-cover ({x},{x})")
            if (x, y) in seen:
                raise InvalidStructure(f"duplicate cover ({x},{y})")
            seen.add((x, y))
        self.elements = elems
        self.covers = tuple(sorted(seen))
        self._idx = idx
        self._up = self._closure()
        self._dn = [0] * len(elems)
        for i in range(len(elems)):
            m = self._up[i]
            while m:
                j = (m & -m).bit_length() - 1
                self._dn[j] |= 1 << i
                m &= m - 1
        self._reject_redundant()

    def _closure(self):
        n = len(self.elements)
        succ = [[] for _ in range(n)]
        indeg = [0] * n
        for x, y in self.covers:
            succ[self._idx[x]].append(self._idx[y])
            indeg[self._idx[y]] += 1
        # Kahn's algorithm; leftovers mean a cycle.
        order, queue = [], [i for i in range(n) if indeg[i] == 0]
        while queue:
            i = queue.pop()
            order.append(i)
            for j in succ[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        if len(order) != n:
            raise CyclicCovers("cover relation contains a cycle")
        up = [0] * n
        for i in reversed(order):
            m = 1 << i
            for j in succ[i]:
                m |= up[j]
            up[i] = m
        return up

    def _reject_redundant(self):
        for x, y in self.covers:
            i, j = self._idx[x], self._idx[y]
            between = self._up[i] & self._dn[j] & ~(1 << i) & ~(1 << j)
            if between:
                z = self.elements[(between & -between).bit_length() - 1]
                raise RedundantCover(
                    f"cover ({x},{y}) is implied via {z}; input must be the "
                    "Hasse diagram")

    @classmethod
    def from_order(cls, elements, le_pairs):
        """Build from any set of (x,y) meaning x <= y; covers are derived."""
        elems = sorted(set(elements))
        rel = {(x, y) for x, y in le_pairs if x != y}
        changed = True
        while changed:  # transitive closure of the given relation
            changed = False
            for x, y in list(rel):
                for y2, z in list(rel):
                    if y2 == y and (x, z) not in rel and x != z:
                        rel.add((x, z))
                        changed = True
        for x, y in rel:
            if (y, x) in rel:
                raise CyclicCovers(f"{x} and {y} are mutually below each other")
        covers = [(x, y) for x, y in rel
                  if not any((x, z) in rel and (z, y) in rel for z in elems)]
        return cls(elems, covers)

    # -- order queries ------------------------------------------------------

    def index(self, e):
        try:
            return self._idx[e]
        except KeyError:
            raise InvalidStructure(f"unknown poset element {e!r}") from None

    def leq(self, x, y):
        return bool(self._up[self.index(x)] >> self.index(y) & 1)

    def lt(self, x, y):
        return x != y and self.leq(x, y)

    def comparable(self, x, y):
        return self.leq(x, y) or self.leq(y, x)

    def _members(self, mask):
        out = []
        while mask:
            out.append(self.elements[(mask & -mask).bit_length() - 1])
            mask &= mask - 1
        return tuple(out)

    def up_set(self, a):
        return self._members(self._up[self.index(a)])

    def down_set(self, a):
        return self._members(self._dn[self.index(a)])

    def closed_interval(self, u, v):
        return self._members(self._up[self.index(u)] & self._dn[self.index(v)])

    def open_interval(self, u, v):
        m = self._up[self.index(u)] & self._dn[self.index(v)]
        m &= ~(1 << self.index(u)) & ~(1 << self.index(v))
        return self._members(m)

    def minimal_elements(self):
        cov_tgt = {y for _, y in self.covers}
        return tuple(e for e in self.elements if e not in cov_tgt)

    def maximal_elements(self):
        cov_src = {x for x, _ in self.covers}
        return tuple(e for e in self.elements if e not in cov_src)

    def least_element(self):
        full = (1 << len(self.elements)) - 1
        for i, e in enumerate(self.elements):
            if self._up[i] == full:
                return e
        return None

    def upper_covers(self, x):
        return tuple(y for a, y in self.covers if a == x)

    def sort_by_order(self, xs):
        """Sort a chain (pairwise comparable set) into ascending order."""
        return tuple(sorted(xs, key=lambda e: len(self.down_set(e))))

    def linear_extension(self):
        """Kahn's topological sort, lexicographic smallest-first tie-break."""
        import heapq
        indeg = {e: 0 for e in self.elements}
        for _, y in self.covers:
            indeg[y] += 1
        heap = [e for e in self.elements if indeg[e] == 0]
        heapq.heapify(heap)
        out = []
        while heap:
            e = heapq.heappop(heap)
            out.append(e)
            for y in self.upper_covers(e):
                indeg[y] -= 1
                if indeg[y] == 0:
                    heapq.heappush(heap, y)
        return tuple(out)

    def maximal_chains(self):
        """All maximal chains of P, each ascending, in sorted order."""
        chains = []
        ups = {e: sorted(self.upper_covers(e)) for e in self.elements}

        def walk(chain):
            e = chain[-1]
            if not ups[e]:
                chains.append(tuple(chain))
                return
            for y in ups[e]:
                walk(chain + [y])

        for e in sorted(self.minimal_elements()):
            walk([e])
        return tuple(sorted(chains))

    def maximal_chains_in(self, u, v):
        """Maximal chains of the closed interval [u,v], ascending."""
        inside = set(self.closed_interval(u, v))
        chains = []

        def walk(chain):
            e = chain[-1]
            if e == v:
                chains.append(tuple(chain))
                return
            nxt = sorted(y for y in self.upper_covers(e) if y in inside)
            for y in nxt:
                walk(chain + [y])

        if u in inside:
            walk([u])
        return tuple(sorted(chains))

    def meet_within(self, y1, y2, lo=None):
        """Greatest common lower bound of y1,y2 inside up_set(lo), if any."""
        cand = self._dn[self.index(y1)] & self._dn[self.index(y2)]
        if lo is not None:
            cand &= self._up[self.index(lo)]
        m = cand
        while m:
            i = (m & -m).bit_length() - 1
            if cand & ~self._dn[i] == 0:
                return self.elements[i]
            m &= m - 1
        return None

    def join_within(self, y1, y2, hi=None):
        """Least common upper bound of y1,y2 inside down_set(hi), if any."""
        cand = self._up[self.index(y1)] & self._up[self.index(y2)]
        if hi is not None:
            cand &= self._dn[self.index(hi)]
        m = cand
        while m:
            i = (m & -m).bit_length() - 1
            if cand & ~self._up[i] == 0:
                return self.elements[i]
            m &= m - 1
        return None

    def __eq__(self, other):
        return (isinstance(other, Poset) and self.elements == other.elements
                and self.covers == other.covers)

    def __hash__(self):
        return hash((self.elements, self.covers))

    def __repr__(self):
        return f"Poset({len(self.elements)} elements, {len(self.covers)} covers)"
