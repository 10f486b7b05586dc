"""Recognition of AT-free and weakly closed (cocomparability) graphs.

An asteroidal triple is three pairwise non-adjacent vertices such that
each pair is joined by a path avoiding the closed neighbourhood of the
third. A graph is weakly closed when some labelling makes every edge
{i,k} with i < j < k covered by {i,j} or {j,k}; by Matsuda's theorem
this is the same as the complement having a transitive orientation.

The ordering search and the orientation oracle are exponential and meant
for small graphs; both take a node budget.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graphs import (
    BudgetExceeded,
    Graph,
    _bits,
    complement,
    component_masks,
)

DEFAULT_ORDERING_BUDGET = 2_000_000
DEFAULT_ORIENTATION_BUDGET = 2_000_000


@dataclass(frozen=True)
class AsteroidalTriple:
    """Triple of pairwise non-adjacent vertices with certificate paths.

    ``paths[w]`` connects the two triple vertices other than w and avoids
    the closed neighbourhood of w.
    """

    vertices: tuple[int, int, int]
    paths: dict[int, tuple[int, ...]]

    def verify(self, g: Graph) -> bool:
        a, b, c = self.vertices
        for u, v in ((a, b), (a, c), (b, c)):
            if g.has_edge(u, v):
                return False
        for w in self.vertices:
            ends = tuple(v for v in self.vertices if v != w)
            path = self.paths[w]
            if {path[0], path[-1]} != set(ends):
                return False
            forbidden = {w, *g.neighbors(w)}
            if forbidden & set(path):
                return False
            if len(set(path)) != len(path):
                return False
            for x, y in zip(path, path[1:]):
                if not g.has_edge(x, y):
                    return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "paths": {str(w): list(p) for w, p in self.paths.items()},
        }


def find_asteroidal_triple(g: Graph) -> Optional[AsteroidalTriple]:
    """Lexicographically smallest asteroidal triple of g, or None.

    For each vertex w, the components of g minus N[w] are precomputed;
    {a,b,c} is asteroidal iff for each excluded vertex the other two
    share a component.
    """
    n = g.n
    if n < 3:
        return None
    # comp_id[w][v]: component of v in g - N[w], or -1 if v in N[w]
    comp_id = []
    for w in range(n):
        nbh = g.adj[w] | (1 << w)
        ids = [-1] * n
        for idx, comp in enumerate(component_masks(g, nbh)):
            for v in _bits(comp):
                ids[v] = idx
        comp_id.append(ids)
    for a in range(n):
        for b in range(a + 1, n):
            if g.adj[a] & (1 << b):
                continue
            for c in range(b + 1, n):
                if (g.adj[a] | g.adj[b]) & (1 << c):
                    continue
                if (
                    comp_id[c][a] == comp_id[c][b] != -1
                    and comp_id[b][a] == comp_id[b][c] != -1
                    and comp_id[a][b] == comp_id[a][c] != -1
                ):
                    triple = (a + 1, b + 1, c + 1)
                    paths = {
                        w: _avoiding_path(g, *(v for v in triple if v != w), w)
                        for w in triple
                    }
                    return AsteroidalTriple(triple, paths)
    return None


def _avoiding_path(g: Graph, src: int, dst: int, avoid: int) -> tuple[int, ...]:
    """Shortest src-dst path in g avoiding N[avoid], by BFS."""
    forbidden = g.adj[avoid - 1] | (1 << (avoid - 1))
    prev = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            path = []
            cur: Optional[int] = v
            while cur is not None:
                path.append(cur)
                cur = prev[cur]
            return tuple(reversed(path))
        for u in _bits(g.adj[v - 1] & ~forbidden):
            if u + 1 not in prev:
                prev[u + 1] = v
                queue.append(u + 1)
    raise AssertionError(f"no {src}-{dst} path avoiding N[{avoid}]")


def is_at_free(g: Graph) -> bool:
    return find_asteroidal_triple(g) is None


@dataclass(frozen=True)
class WeaklyClosedOrdering:
    """A vertex labelling witnessing weak closure (position p holds
    ``ordering[p-1]``)."""

    ordering: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        o = self.ordering
        if sorted(o) != list(g.vertices):
            return False
        n = len(o)
        for i in range(n):
            for k in range(i + 2, n):
                if not g.has_edge(o[i], o[k]):
                    continue
                # every vertex between must be covered by one side
                if not all(
                    g.has_edge(o[i], o[j]) or g.has_edge(o[j], o[k])
                    for j in range(i + 1, k)
                ):
                    return False
        return True


def find_weakly_closed_ordering(
    g: Graph, budget: int = DEFAULT_ORDERING_BUDGET
) -> Optional[WeaklyClosedOrdering]:
    """Backtracking search for a weakly closed labelling.

    Grows the ordering left to right; appending v is pruned as soon as
    some earlier edge {o[i], v} is uncovered by the vertices between.
    Candidates are tried in label order, so the returned ordering is the
    lexicographically smallest valid one.
    """
    n = g.n
    if n <= 2:
        return WeaklyClosedOrdering(tuple(g.vertices))
    order: list[int] = []
    nodes = 0

    def feasible(v: int) -> bool:
        k = len(order)
        for i in range(k - 1):
            if not g.has_edge(order[i], v):
                continue
            if not all(
                g.has_edge(order[i], order[j]) or g.has_edge(order[j], v)
                for j in range(i + 1, k)
            ):
                return False
        return True

    def extend() -> bool:
        nonlocal nodes
        if len(order) == n:
            return True
        for v in g.vertices:
            if v in order:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(
                    f"ordering search exceeded {budget} nodes on n = {n}"
                )
            if feasible(v):
                order.append(v)
                if extend():
                    return True
                order.pop()
        return False

    if extend():
        return WeaklyClosedOrdering(tuple(order))
    return None


def is_cocomparability_oracle(
    g: Graph, budget: int = DEFAULT_ORIENTATION_BUDGET
) -> bool:
    """Test-only oracle: does the complement of g admit a transitive
    orientation? Exhaustive orientation search with forcing propagation."""
    h = complement(g)
    edges = h.edges
    if not edges:
        return True
    # orientation: dict (u,v) sorted pair -> head vertex; absent = unoriented
    orient: dict[tuple[int, int], int] = {}
    out = {v: set() for v in h.vertices}  # chosen u -> w arcs
    nodes = 0

    def key(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u < v else (v, u)

    def set_arc(u: int, v: int, undo: list) -> bool:
        """Orient u -> v and propagate transitivity; False on conflict."""
        queue = [(u, v)]
        while queue:
            a, b = queue.pop()
            k = key(a, b)
            cur = orient.get(k)
            if cur == b:
                continue
            if cur is not None:
                return False
            orient[k] = b
            out[a].add(b)
            undo.append((k, a, b))
            # a -> b, b -> c forces a -> c; x -> a forces x -> b
            for c in list(out[b]):
                if c == a or not h.has_edge(a, c):
                    return False
                queue.append((a, c))
            for x in h.vertices:
                if a in out[x] and x != b:
                    if not h.has_edge(x, b):
                        return False
                    queue.append((x, b))
        return True

    def rollback(undo: list) -> None:
        for k, a, b in undo:
            del orient[k]
            out[a].discard(b)

    def solve() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(
                f"orientation search exceeded {budget} nodes on n = {g.n}"
            )
        free = next((e for e in edges if key(*e) not in orient), None)
        if free is None:
            return True
        u, v = free
        for a, b in ((u, v), (v, u)):
            undo: list = []
            if set_arc(a, b, undo) and solve():
                return True
            rollback(undo)
        return False

    return solve()
