"""Immutable simple graphs on vertex set {1..n}, with a graph6 codec.

Vertices are 1-indexed in every public API. Internally adjacency is kept
as one bitmask per vertex (bit k = vertex k+1), which keeps the
exponential subset algorithms in the other modules cheap.

Two separate size regimes apply: the graph6 codec handles n <= 62
(single-byte header), while the exact invariant algorithms built on top
of this module are exponential and practical only up to n of roughly 20.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

GRAPH6_MAX_ORDER = 62


class Graph6Error(ValueError):
    """Malformed graph6 input. ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class BudgetExceeded(RuntimeError):
    """An exact search exceeded its configured state-space budget."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n.

    ``adj[k]`` is the neighbour bitmask of vertex k+1. Instances are
    immutable and safe to share between worker processes.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("graph order must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for k, mask in enumerate(self.adj):
            if mask & (1 << k):
                raise ValueError(f"self-loop at vertex {k + 1}")
            if mask & ~full:
                raise ValueError(f"neighbour out of range at vertex {k + 1}")
            for j in _bits(mask):
                if not self.adj[j] & (1 << k):
                    raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in _bits(self.adj[u]):
                if v > u:
                    out.append((u + 1, v + 1))
        return out

    @property
    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u - 1] & (1 << (v - 1)))

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return [u + 1 for u in _bits(self.adj[v - 1])]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return bin(self.adj[v - 1]).count("1")

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} not in 1..{self.n}")

    def _check_subset(self, s: Iterable[int]) -> int:
        """Validate s ⊆ V and return it as a bitmask."""
        mask = 0
        for v in s:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} of subset not in 1..{self.n}")
            mask |= 1 << (v - 1)
        return mask


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_vertices(mask: int) -> tuple[int, ...]:
    """Bitmask to sorted 1-indexed vertex tuple."""
    return tuple(b + 1 for b in _bits(mask))


def vertices_to_mask(vs: Iterable[int]) -> int:
    mask = 0
    for v in vs:
        mask |= 1 << (v - 1)
    return mask


# ---------------------------------------------------------------------------
# graph6 codec (single-byte header regime, n <= 62)
# ---------------------------------------------------------------------------

def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (no ">>graph6<<" header, no sparse6)."""
    s = line.rstrip("\r\n")
    if s.startswith(">>graph6<<"):
        raise Graph6Error("optional '>>graph6<<' header is not supported", 0)
    if s.startswith(":"):
        raise Graph6Error("sparse6 input is not supported", 0)
    if not s:
        raise Graph6Error("empty line", 0)
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", off)
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("multi-byte order header (n > 62) is not supported", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 != nbytes:
        raise Graph6Error(
            f"body length {len(s) - 1} does not match order {n} "
            f"(expected {nbytes} bytes)",
            min(len(s), 1 + nbytes),
        )
    adj = [0] * n
    # Upper-triangle bits in column order: x(1,2), x(1,3), x(2,3), x(1,4), ...
    k = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for off in range(1, len(s)):
        word = ord(s[off]) - 63
        for b in range(5, -1, -1):
            bit = (word >> b) & 1
            if k < nbits:
                if bit:
                    i, j = pairs[k]
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                k += 1
            elif bit:
                raise Graph6Error("trailing padding bits are not zero", off)
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string; inverse of :func:`parse_graph6`."""
    if g.n > GRAPH6_MAX_ORDER:
        raise ValueError(f"order {g.n} above graph6 single-byte limit {GRAPH6_MAX_ORDER}")
    out = [chr(63 + g.n)]
    word = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            word = (word << 1) | ((g.adj[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + word))
                word = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (word << (6 - nbits))))
    return "".join(out)


# ---------------------------------------------------------------------------
# Structural queries
# ---------------------------------------------------------------------------

def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V(g) minus s, relabelled to 1..(n-|s|).

    Returns the compact graph and a map from new labels to original ones.
    """
    smask = g._check_subset(s)
    keep = [v for v in range(g.n) if not smask & (1 << v)]
    new_of_old = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        m = 0
        for u in _bits(g.adj[v] & ~smask):
            m |= 1 << new_of_old[u]
        adj.append(m)
    label_map = {i + 1: v + 1 for i, v in enumerate(keep)}
    return Graph(len(keep), tuple(adj)), label_map


def component_masks(g: Graph, smask: int = 0) -> list[int]:
    """Connected components of g minus the masked vertices, as bitmasks."""
    remaining = ((1 << g.n) - 1) & ~smask
    comps = []
    adj = g.adj
    while remaining:
        comp = remaining & -remaining
        while True:
            grow = comp
            for v in _bits(comp):
                grow |= adj[v]
            grow &= remaining
            if grow == comp:
                break
            comp = grow
        comps.append(comp)
        remaining &= ~comp
    return comps


def component_count(g: Graph, s: Iterable[int]) -> int:
    """c_G(S): number of connected components of g minus s."""
    return len(component_masks(g, g._check_subset(s)))


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components of g as sorted 1-indexed vertex tuples."""
    return [mask_to_vertices(m) for m in component_masks(g)]


def is_connected(g: Graph) -> bool:
    """True iff g has exactly one connected component (so K_0 is not)."""
    return len(component_masks(g)) == 1


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    """N[v] = {v} together with the neighbours of v."""
    g._check_vertex(v)
    return frozenset([v, *g.neighbors(v)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph(g.n, adj)
