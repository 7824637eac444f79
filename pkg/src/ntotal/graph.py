"""The n-total graph of a finite ring and the graph invariants used on it.

Vertices are kept in enumeration (code) order and adjacency is a list of
Python ints, one bit row per vertex: bit j of ``rows[i]`` is set iff
vertices i and j are adjacent.  Breadth-first searches run on whole
frontier masks, which keeps all-sources searches cheap for dense graphs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Union

import numpy as np

from .ideals import zero_divisor_profile
from .rings import DEFAULT_VERTEX_CAP, CardinalityCap, Element, Ring

INF = math.inf


class GraphError(ValueError):
    pass


class VertexNotInGraph(GraphError):
    pass


class NotAComponent(GraphError):
    pass


class Selector(str, enum.Enum):
    ALL = "all"
    REG = "reg"
    ZD = "zd"


# ---------------------------------------------------------------------------
# Component classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Complete:
    k: int

    @property
    def label(self) -> str:
        return f"K{self.k}"

    @property
    def vertex_count(self) -> int:
        return self.k


@dataclass(frozen=True, order=True)
class CompleteBipartite:
    a: int
    b: int

    def __post_init__(self):
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def label(self) -> str:
        return f"K{self.a},{self.b}"

    @property
    def vertex_count(self) -> int:
        return self.a + self.b


@dataclass(frozen=True, order=True)
class Other:
    vertices: int
    edges: int

    @property
    def label(self) -> str:
        return f"G(v={self.vertices},e={self.edges})"

    @property
    def vertex_count(self) -> int:
        return self.vertices


ComponentClass = Union[Complete, CompleteBipartite, Other]
SINGLETON = Complete(1)


def complete_bipartite(a: int, b: int) -> ComponentClass:
    """K_{a,b}, with K_{1,1} reported as K_2."""
    if a == 1 and b == 1:
        return Complete(2)
    return CompleteBipartite(a, b)


def _sort_key(c: ComponentClass):
    kind = {Complete: 0, CompleteBipartite: 1, Other: 2}[type(c)]
    return (kind, *(getattr(c, f) for f in c.__dataclass_fields__))


@dataclass(frozen=True)
class Signature:
    """Multiset of component classes, stored sorted."""

    classes: tuple[ComponentClass, ...]

    @classmethod
    def of(cls, classes: Iterable[ComponentClass]) -> "Signature":
        normal = [complete_bipartite(c.a, c.b) if isinstance(c, CompleteBipartite) else c
                  for c in classes]
        return cls(tuple(sorted(normal, key=_sort_key)))

    @property
    def vertex_count(self) -> int:
        return sum(c.vertex_count for c in self.classes)

    def labels(self) -> list[str]:
        return [c.label for c in self.classes]

    def __len__(self):
        return len(self.classes)

    def __str__(self):
        return " + ".join(self.labels()) if self.classes else "(empty)"


# ---------------------------------------------------------------------------
# Bit helpers
# ---------------------------------------------------------------------------


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# ---------------------------------------------------------------------------
# The graph
# ---------------------------------------------------------------------------


class NTotalGraph:
    """n-T restricted to a vertex selection; immutable after construction."""

    def __init__(self, ring: Ring, n: int, selector: Selector, codes: np.ndarray,
                 rows: list[int]):
        self.ring = ring
        self.n = n
        self.selector = Selector(selector)
        self.codes = codes
        self.rows = rows
        self.vertices = [Element(ring, int(c)) for c in codes]
        self._position = {int(c): i for i, c in enumerate(codes)}
        self._full = (1 << len(rows)) - 1

    def __repr__(self):
        return f"NTotalGraph({self.name}, |V|={self.order}, |E|={self.edge_count})"

    @property
    def name(self) -> str:
        inner = {Selector.ALL: str(self.ring), Selector.REG: f"Reg({self.ring})",
                 Selector.ZD: f"Z({self.ring})"}[self.selector]
        return f"{self.n}-T({inner})"

    @property
    def order(self) -> int:
        return len(self.rows)

    def position(self, v) -> int:
        code = v.code if isinstance(v, Element) else self.ring.encode(v)
        if isinstance(v, Element) and v.ring != self.ring:
            raise VertexNotInGraph(f"{v!r} is not an element of {self.ring}")
        try:
            return self._position[code]
        except KeyError:
            raise VertexNotInGraph(f"{v} is not a vertex of {self.name}") from None

    def adjacent(self, u, v) -> bool:
        return bool(self.rows[self.position(u)] >> self.position(v) & 1)

    def neighbors(self, v) -> list[Element]:
        return [self.vertices[j] for j in _bits(self.rows[self.position(v)])]

    @cached_property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[Element, Element]]:
        """Edges as (u, v) with u before v, in lexicographic order."""
        out = []
        for i, row in enumerate(self.rows):
            for j in _bits(row >> (i + 1)):
                out.append((self.vertices[i], self.vertices[i + 1 + j]))
        return out

    def edge_labels(self) -> list[tuple[str, str]]:
        return [(str(u), str(v)) for u, v in self.edges()]

    def adjacency_matrix(self) -> np.ndarray:
        n = self.order
        out = np.zeros((n, n), dtype=bool)
        for i, row in enumerate(self.rows):
            out[i, list(_bits(row))] = True
        return out

    # -- traversal --------------------------------------------------------
    def _expand(self, frontier: int) -> int:
        rows = self.rows
        out = 0
        for i in _bits(frontier):
            out |= rows[i]
        return out

    def _levels(self, src: int, stop: int = -1) -> list[int]:
        """BFS layers from position ``src``; stops early once ``stop`` is reached."""
        levels = [1 << src]
        seen = 1 << src
        while True:
            if stop >= 0 and seen >> stop & 1:
                return levels
            nxt = self._expand(levels[-1]) & ~seen
            if not nxt:
                return levels
            seen |= nxt
            levels.append(nxt)

    @cached_property
    def _component_masks(self) -> list[int]:
        remaining = self._full
        comps = []
        while remaining:
            start = _lowest(remaining)
            comp = frontier = 1 << start
            while frontier:
                frontier = self._expand(frontier) & ~comp
                comp |= frontier
            comps.append(comp)
            remaining &= ~comp
        return comps

    def components(self) -> list[list[Element]]:
        """Connected components, each sorted, ordered by least vertex."""
        return [[self.vertices[i] for i in _bits(m)] for m in self._component_masks]

    @property
    def component_count(self) -> int:
        return len(self._component_masks)

    def is_connected(self) -> bool:
        return self.component_count <= 1

    def is_totally_disconnected(self) -> bool:
        return self.edge_count == 0

    def distance(self, u, v) -> Union[int, float]:
        """Shortest-path length, 0 for u = v and ``math.inf`` if unreachable."""
        i, j = self.position(u), self.position(v)
        levels = self._levels(i, stop=j)
        if levels and any(m >> j & 1 for m in levels):
            return len(levels) - 1
        return INF

    def eccentricity(self, v) -> Union[int, float]:
        i = self.position(v)
        if not self.is_connected():
            return INF
        return len(self._levels(i)) - 1

    @cached_property
    def diameter(self) -> Union[int, float]:
        """Largest distance over vertex pairs; ``math.inf`` when disconnected."""
        if self.order <= 1:
            return 0
        if not self.is_connected():
            return INF
        # Twins (equal open or closed neighbourhoods) share an eccentricity.
        open_seen, closed_seen = set(), set()
        best = 0
        for i, row in enumerate(self.rows):
            closed = row | (1 << i)
            twin = row in open_seen or closed in closed_seen
            open_seen.add(row)
            closed_seen.add(closed)
            if not twin:
                best = max(best, len(self._levels(i)) - 1)
        return best

    @cached_property
    def girth(self) -> Union[int, float]:
        """Length of a shortest cycle, ``math.inf`` for forests."""
        rows, best = self.rows, INF
        for s in range(self.order):
            if best == 3:
                break
            if not rows[s]:
                continue
            parent = {s: -1}
            visited = 1 << s
            prev, level, depth = 0, 1 << s, 0
            while level and 2 * depth < best:
                nxt = 0
                for u in _bits(level):
                    nb = rows[u]
                    p = parent[u]
                    back = nb & visited & ~((1 << p) if p >= 0 else 0)
                    if back:
                        if back & prev:
                            best = min(best, 2 * depth)
                        elif back & level:
                            best = min(best, 2 * depth + 1)
                        elif back & nxt:
                            best = min(best, 2 * depth + 2)
                    new = nb & ~visited
                    for w in _bits(new):
                        parent[w] = u
                    visited |= new
                    nxt |= new
                prev, level, depth = level, nxt, depth + 1
        return best

    # -- classification --------------------------------------------------
    def _classify_mask(self, mask: int) -> ComponentClass:
        members = list(_bits(mask))
        k = len(members)
        edges = sum((self.rows[i] & mask).bit_count() for i in members) // 2
        if edges == k * (k - 1) // 2:
            return Complete(k)
        color = {members[0]: 0}
        side = [1 << members[0], 0]
        frontier = [members[0]]
        while frontier:
            nxt = []
            for u in frontier:
                for w in _bits(self.rows[u] & mask):
                    if w not in color:
                        color[w] = 1 - color[u]
                        side[color[w]] |= 1 << w
                        nxt.append(w)
                    elif color[w] == color[u]:
                        return Other(k, edges)
            frontier = nxt
        a, b = side[0].bit_count(), side[1].bit_count()
        if edges == a * b:
            return complete_bipartite(a, b)
        return Other(k, edges)

    def classify_component(self, block: Iterable) -> ComponentClass:
        mask = 0
        for v in block:
            mask |= 1 << self.position(v)
        if mask not in self._component_masks:
            raise NotAComponent(f"block is not a component of {self.name}")
        return self._classify_mask(mask)

    @cached_property
    def signature(self) -> Signature:
        return Signature.of(self._classify_mask(m) for m in self._component_masks)


def select_codes(ring: Ring, selector: Selector) -> np.ndarray:
    selector = Selector(selector)
    codes = ring.all_codes()
    if selector is Selector.ALL:
        return codes
    zd = zero_divisor_profile(ring).zd_mask
    return codes[zd] if selector is Selector.ZD else codes[~zd]


def build_graph(ring: Ring, n: int, selector: Selector = Selector.ALL,
                cap: int = DEFAULT_VERTEX_CAP) -> NTotalGraph:
    """Build n-T on the selected vertices: u ~ v iff u^n + v^n is a zero-divisor."""
    if n < 1:
        raise ValueError("n must be >= 1")
    codes = select_codes(ring, selector)
    size = len(codes)
    if size > cap:
        raise CardinalityCap(f"{size} vertices exceeds cap {cap}")
    if size == 0:
        raise GraphError("empty vertex set")
    zd = zero_divisor_profile(ring).zd_mask
    powers = ring.pow_codes(codes, n)
    rows: list[int] = []
    step = max(1, (1 << 22) // size)
    for start in range(0, size, step):
        stop = min(size, start + step)
        block = zd[ring.add_codes(powers[start:stop, None], powers[None, :])]
        block[np.arange(stop - start), np.arange(start, stop)] = False
        packed = np.packbits(block, axis=1, bitorder="little")
        rows.extend(int.from_bytes(r.tobytes(), "little") for r in packed)
    return NTotalGraph(ring, n, Selector(selector), codes, rows)
