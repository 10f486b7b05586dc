"""Exact graph invariants behind the König-type classification.

Everything here is computed exactly, mostly by exponential enumeration
over vertex subsets or by subset dynamic programming; budgets guard the
blow-up. The central predicate is ``is_koenig_type``: the binomial edge
ideal of G is of König type exactly when the path covering number equals
the unrestricted scattering number.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .graphs import (
    BudgetExceeded,
    Graph,
    _bits,
    component_masks,
    mask_to_vertices,
)

# 2^n component-count tables beyond this order are not worth waiting for.
MAX_SUBSET_ENUM_ORDER = 24

# Cap on 2^k * k DP states for one connected component (k ~ 20).
DEFAULT_PATH_COVER_BUDGET = 1 << 25

# Cap on edge count for the exhaustive linear-forest search.
MAX_LINEAR_FOREST_EDGES = 26

CSV_COLUMNS = (
    "n", "edges", "pi", "sc", "sc_star", "lf", "height", "dim",
    "koenig", "unmixed", "at_free", "weakly_closed",
)


def _component_count_table(g: Graph) -> list[int]:
    """c_G(S) for every subset bitmask S, indexed by mask."""
    if g.n > MAX_SUBSET_ENUM_ORDER:
        raise BudgetExceeded(
            f"subset enumeration over 2^{g.n} masks exceeds the order cap "
            f"{MAX_SUBSET_ENUM_ORDER}"
        )
    return [len(component_masks(g, mask)) for mask in range(1 << g.n)]


@dataclass(frozen=True)
class CutSetFamily:
    """The family C(G): subsets whose every vertex reconnects components
    of G minus S when added back, plus the empty set. Ordered by
    ascending size, then lexicographically."""

    sets: tuple[tuple[int, ...], ...]
    component_counts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(zip(self.sets, self.component_counts))


def cut_sets(g: Graph, _table: Optional[list[int]] = None) -> CutSetFamily:
    """Enumerate C(G) with each member's component count c_G(S)."""
    if g.n < 1:
        raise ValueError("cut_sets requires at least one vertex")
    c = _table if _table is not None else _component_count_table(g)
    members = [(0, c[0])]
    for mask in range(1, 1 << g.n):
        cm = c[mask]
        if all(c[mask & ~(1 << v)] < cm for v in _bits(mask)):
            members.append((mask, cm))
    members.sort(key=lambda mc: (bin(mc[0]).count("1"), mask_to_vertices(mc[0])))
    return CutSetFamily(
        tuple(mask_to_vertices(m) for m, _ in members),
        tuple(cm for _, cm in members),
    )


def scattering_number(g: Graph) -> int:
    """max of c_G(S) - |S| over all S with c_G(S) != 1."""
    if g.n < 1:
        raise ValueError("scattering number requires at least one vertex")
    table = _component_count_table(g)
    best = None
    for mask, cm in enumerate(table):
        if cm == 1:
            continue
        value = cm - bin(mask).count("1")
        if best is None or value > best:
            best = value
    assert best is not None  # S = V always qualifies (c = 0)
    return best


def unrestricted_scattering_number(
    g: Graph, _table: Optional[list[int]] = None
) -> tuple[int, tuple[int, ...]]:
    """max of c_G(S) - |S| over S in C(G), with a witness set attaining it.

    Equals max(1, scattering_number); restricting to C(G) is sound because
    any maximiser must reconnect components when a vertex is added back.
    Ties go to the first member in C(G) order (smallest set, then lex).
    """
    family = cut_sets(g, _table)
    best = None
    witness: tuple[int, ...] = ()
    for s, cm in family:
        value = cm - len(s)
        if best is None or value > best:
            best, witness = value, s
    assert best is not None and best >= 1
    return best, witness


# ---------------------------------------------------------------------------
# Path covering number (subset DP per connected component)
# ---------------------------------------------------------------------------

def path_cover_number(
    g: Graph, budget: int = DEFAULT_PATH_COVER_BUDGET
) -> tuple[int, list[list[int]]]:
    """Minimum number of vertex-disjoint paths covering V(G), with one
    optimal cover as witness.

    Solved independently per connected component (the value is additive)
    by DP over (covered subset, endpoint of the open path) states. A
    component of size k needs 2^k * k states; components above ``budget``
    raise BudgetExceeded.
    """
    if g.n < 1:
        raise ValueError("path cover requires at least one vertex")
    total = 0
    cover: list[list[int]] = []
    for comp in component_masks(g):
        pi, paths = _component_path_cover(g, comp, budget)
        total += pi
        cover.extend(paths)
    return total, cover


def _component_path_cover(
    g: Graph, comp_mask: int, budget: int
) -> tuple[int, list[list[int]]]:
    verts = [b for b in _bits(comp_mask)]  # ascending, 0-indexed
    k = len(verts)
    if (1 << k) * k > budget:
        raise BudgetExceeded(
            f"component of size {k} needs {(1 << k) * k} DP states "
            f"(budget {budget})"
        )
    index = {v: i for i, v in enumerate(verts)}
    nbr = [
        [index[u] for u in _bits(g.adj[v] & comp_mask)]
        for v in verts
    ]
    size = 1 << k
    INF = k + 1
    dp = [[INF] * k for _ in range(size)]
    for i in range(k):
        dp[1 << i][i] = 1
    for mask in range(size):
        row = dp[mask]
        for v in range(k):
            cur = row[v]
            if cur >= INF:
                continue
            # extend the open path along an edge
            for u in nbr[v]:
                bit = 1 << u
                if not mask & bit and dp[mask | bit][u] > cur:
                    dp[mask | bit][u] = cur
            # close it and start a new path elsewhere
            nxt = cur + 1
            rest = (size - 1) & ~mask
            for u in _bits(rest):
                if dp[mask | (1 << u)][u] > nxt:
                    dp[mask | (1 << u)][u] = nxt
    full = size - 1
    pi = min(dp[full])
    paths = _reconstruct_cover(dp, nbr, verts, k, pi)
    return pi, paths


def _reconstruct_cover(dp, nbr, verts, k, pi) -> list[list[int]]:
    """Walk the DP backwards; ties broken by smallest vertex label."""
    full = (1 << k) - 1
    end = min(v for v in range(k) if dp[full][v] == pi)
    mask, v, value = full, end, pi
    paths: list[list[int]] = []
    current = [verts[v] + 1]
    while True:
        prev_mask = mask & ~(1 << v)
        if prev_mask == 0:
            paths.append(list(reversed(current)))
            break
        step = None
        for u in sorted(nbr[v]):
            if prev_mask & (1 << u) and dp[prev_mask][u] == value:
                step = ("extend", u)
                break
        if step is None:
            for u in sorted(_bits(prev_mask)):
                if dp[prev_mask][u] == value - 1:
                    step = ("new", u)
                    break
        assert step is not None
        kind, u = step
        if kind == "extend":
            current.append(verts[u] + 1)
        else:
            paths.append(list(reversed(current)))
            current = [verts[u] + 1]
            value -= 1
        mask, v = prev_mask, u
    paths.sort(key=lambda p: p[0])
    return paths


def max_linear_forest(g: Graph, budget: int = DEFAULT_PATH_COVER_BUDGET) -> int:
    """Edge count of a maximum linear forest in g: n - pi(G)."""
    pi, _ = path_cover_number(g, budget)
    return g.n - pi


def brute_force_linear_forest(
    g: Graph, max_edges: int = MAX_LINEAR_FOREST_EDGES
) -> int:
    """Independent oracle: max |F| over acyclic edge subsets with maximum
    degree 2, by branch-and-bound over the edge list. Test use only."""
    edges = g.edges
    m = len(edges)
    if m > max_edges:
        raise BudgetExceeded(f"{m} edges above exhaustive-search cap {max_edges}")
    ub = g.n - len(component_masks(g))
    deg = [0] * (g.n + 1)
    parent = list(range(g.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    best = 0

    def search(i: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if best == ub or i == m or count + (m - i) <= best:
            return
        u, v = edges[i]
        if deg[u] < 2 and deg[v] < 2:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                deg[u] += 1
                deg[v] += 1
                search(i + 1, count + 1)
                deg[u] -= 1
                deg[v] -= 1
                parent[ru] = ru
        search(i + 1, count)

    search(0, 0)
    return best


# ---------------------------------------------------------------------------
# Ideal-theoretic numbers
# ---------------------------------------------------------------------------

def ideal_height(g: Graph, _table: Optional[list[int]] = None) -> int:
    """Height (= grade) of the binomial edge ideal of g: n - sc*(G).

    Cross-checked on every call against the minimum of |S| + n - c(S)
    over C(G); the two must agree.
    """
    if g.n < 2:
        raise ValueError("ideal height requires at least two vertices")
    table = _table if _table is not None else _component_count_table(g)
    sc_star, _ = unrestricted_scattering_number(g, table)
    via_sc = g.n - sc_star
    via_primes = min(len(s) + g.n - cm for s, cm in cut_sets(g, table))
    if via_sc != via_primes:
        raise AssertionError(
            f"height mismatch: n - sc* = {via_sc}, min over C(G) = {via_primes}"
        )
    return via_sc


def is_unmixed(g: Graph, _table: Optional[list[int]] = None) -> bool:
    """True iff |S| + n - c_G(S) is constant over C(G)."""
    if g.n < 2:
        raise ValueError("unmixedness requires at least two vertices")
    heights = {len(s) + g.n - cm for s, cm in cut_sets(g, _table)}
    return len(heights) == 1


# ---------------------------------------------------------------------------
# Reports and the König-type predicate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    """All invariants of one graph, plus optional recognition verdicts.

    ``ideal_height``/``quotient_dim``/``unmixed`` are None for n < 2
    (the ideal lives in a ring that assumes n >= 2). ``weakly_closed``
    is tri-state: "yes", "no" or "budget-exceeded".
    """

    n: int
    edge_count: int
    path_cover: int
    scattering: int
    unrestricted_scattering: int
    linear_forest_edges: int
    ideal_height: Optional[int]
    quotient_dim: Optional[int]
    koenig_type: bool
    unmixed: Optional[bool]
    witness_set: tuple[int, ...]
    witness_cover: tuple[tuple[int, ...], ...]
    at_free: Optional[bool] = None
    weakly_closed: Optional[str] = None
    at_certificate: Optional[dict] = None
    wc_ordering: Optional[tuple[int, ...]] = None

    def to_json_dict(self) -> dict:
        d = {
            "n": self.n,
            "edges": self.edge_count,
            "pi": self.path_cover,
            "sc": self.scattering,
            "sc_star": self.unrestricted_scattering,
            "lf": self.linear_forest_edges,
            "height": self.ideal_height,
            "dim": self.quotient_dim,
            "koenig": self.koenig_type,
            "unmixed": self.unmixed,
            "at_free": self.at_free,
            "weakly_closed": self.weakly_closed,
            "witness_set": list(self.witness_set),
            "witness_cover": [list(p) for p in self.witness_cover],
        }
        if self.at_certificate is not None:
            d["at_certificate"] = self.at_certificate
        if self.wc_ordering is not None:
            d["wc_ordering"] = list(self.wc_ordering)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=False)

    def to_csv_row(self) -> list[str]:
        def cell(x) -> str:
            if x is None:
                return ""
            if isinstance(x, bool):
                return "true" if x else "false"
            return str(x)

        d = self.to_json_dict()
        return [cell(d[col]) for col in CSV_COLUMNS]


def compute_report(
    g: Graph, budget: int = DEFAULT_PATH_COVER_BUDGET
) -> InvariantReport:
    """Compute the full invariant report for any graph with n >= 1."""
    if g.n < 1:
        raise ValueError("reports require at least one vertex")
    table = _component_count_table(g)
    sc = scattering_number(g)
    sc_star, witness_set = unrestricted_scattering_number(g, table)
    pi, cover = path_cover_number(g, budget)
    if sc_star > pi:
        raise AssertionError(
            f"invariant violation: sc* = {sc_star} > pi = {pi}; aborting"
        )
    height = dim = None
    unmixed = None
    if g.n >= 2:
        height = ideal_height(g, table)
        dim = 2 * g.n - height
        unmixed = is_unmixed(g, table)
    return InvariantReport(
        n=g.n,
        edge_count=g.edge_count,
        path_cover=pi,
        scattering=sc,
        unrestricted_scattering=sc_star,
        linear_forest_edges=g.n - pi,
        ideal_height=height,
        quotient_dim=dim,
        koenig_type=pi == sc_star,
        unmixed=unmixed,
        witness_set=witness_set,
        witness_cover=tuple(tuple(p) for p in cover),
    )


def is_koenig_type(g: Graph) -> tuple[bool, InvariantReport]:
    """Decide whether the binomial edge ideal of g is of König type."""
    if g.n < 2:
        raise ValueError("König-type classification requires at least two vertices")
    report = compute_report(g)
    return report.koenig_type, report
