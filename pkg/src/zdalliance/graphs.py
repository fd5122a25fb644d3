"""Zero-divisor graphs over finite commutative rings.

The graph of a ring has the nonzero zero-divisors as vertices, with x and y
adjacent exactly when xy = 0.  Vertices are ordered by ascending ring
element id, and vertex sets are plain Python ints used as bitsets over the
vertex indices, which keeps the alliance predicates to a handful of integer
operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .rings import CapacityError, FiniteRing, zero_divisors

MAX_VERTICES = 4096


class NoGraphError(ValueError):
    """The ring has no nonzero zero-divisors (it is a field)."""


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ZdGraph:
    """Simple graph on bitset vertex sets, built by :func:`build_graph`."""

    __slots__ = ("ring_label", "vertex_count", "element_ids", "labels",
                 "adj", "closed", "degree", "max_degree", "min_degree",
                 "full_mask", "_index_of")

    def __init__(self, ring_label: str, element_ids: tuple[int, ...],
                 labels: tuple[str, ...], adj: tuple[int, ...]):
        n = len(element_ids)
        self.ring_label = ring_label
        self.vertex_count = n
        self.element_ids = element_ids
        self.labels = labels
        self.adj = adj
        self.closed = tuple(a | (1 << i) for i, a in enumerate(adj))
        self.degree = tuple(a.bit_count() for a in adj)
        self.max_degree = max(self.degree)
        self.min_degree = min(self.degree)
        self.full_mask = (1 << n) - 1
        self._index_of = {e: i for i, e in enumerate(element_ids)}

    # -- vertex set plumbing ------------------------------------------------

    def mask_of(self, vertices: Iterable[int]) -> int:
        m = 0
        for v in vertices:
            if not 0 <= v < self.vertex_count:
                raise ValueError(f"vertex index {v} out of range")
            m |= 1 << v
        return m

    def mask_of_elements(self, element_ids: Iterable[int]) -> int:
        m = 0
        for e in element_ids:
            try:
                m |= 1 << self._index_of[e]
            except KeyError:
                raise ValueError(f"ring element {e} is not a vertex") from None
        return m

    def vertices_of(self, mask: int) -> tuple[int, ...]:
        return tuple(bits(mask))

    def elements_of(self, mask: int) -> tuple[int, ...]:
        return tuple(self.element_ids[v] for v in bits(mask))

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[v] for v in bits(mask))

    # -- neighborhoods ------------------------------------------------------

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> int:
        return self.closed[v]

    def open_neighborhood(self, mask: int) -> int:
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def closed_neighborhood(self, mask: int) -> int:
        return self.open_neighborhood(mask) | mask

    def deg_within(self, mask: int, v: int) -> int:
        """Neighbors of v inside the set; deg_within(S,x) + deg_within(~S,x)
        partitions degree(x) for any S."""
        return (self.adj[v] & mask).bit_count()

    # -- alliance predicates --------------------------------------------------

    def is_dominating(self, mask: int) -> bool:
        if mask == 0:
            return False
        return self.closed_neighborhood(mask) == self.full_mask

    def is_defensive_alliance(self, mask: int, k: int) -> bool:
        """Every member has at least k more neighbors inside than outside.

        k may be any integer; values outside [-max_degree, max_degree] are
        answered literally.
        """
        if mask == 0:
            raise ValueError("a defensive alliance must be nonempty")
        for v in bits(mask):
            if 2 * (self.adj[v] & mask).bit_count() < self.degree[v] + k:
                return False
        return True

    def is_global_defensive_alliance(self, mask: int, k: int) -> bool:
        return self.is_dominating(mask) and self.is_defensive_alliance(mask, k)

    # -- exports --------------------------------------------------------------

    def to_dot(self) -> str:
        lines = [f'graph "{self.ring_label}" {{']
        for i, label in enumerate(self.labels):
            lines.append(f'  n{i + 1} [label="{label}"];')
        for i in range(self.vertex_count):
            rest = self.adj[i] >> (i + 1)
            for j in bits(rest):
                lines.append(f"  n{i + 1} -- n{i + 2 + j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dimacs(self) -> str:
        edges = []
        for i in range(self.vertex_count):
            rest = self.adj[i] >> (i + 1)
            for j in bits(rest):
                edges.append((i + 1, i + 2 + j))
        lines = [f"c {self.ring_label}",
                 f"p edge {self.vertex_count} {len(edges)}"]
        lines.extend(f"e {a} {b}" for a, b in edges)
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        edges = sum(self.degree) // 2
        return (f"ZdGraph({self.ring_label!r}, vertices={self.vertex_count}, "
                f"edges={edges})")


def build_graph(ring: FiniteRing) -> ZdGraph:
    """Zero-divisor graph of the ring; raises NoGraphError for fields."""
    verts = sorted(zero_divisors(ring) - {0})
    n = len(verts)
    if n == 0:
        raise NoGraphError(f"{ring.label} is a field: no nonzero zero-divisors")
    if n > MAX_VERTICES:
        raise CapacityError(f"graph on {n} vertices exceeds the cap {MAX_VERTICES}")
    mul = ring.mul
    adj = [0] * n
    for i in range(n):
        ei = verts[i]
        for j in range(i + 1, n):
            if mul(ei, verts[j]) == 0:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    labels = tuple(ring.element_label(e) for e in verts)
    return ZdGraph(ring.label, tuple(verts), labels, tuple(adj))
