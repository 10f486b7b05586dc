#!/usr/bin/env python3
"""Generate the bundled graph6 corpora of all connected graphs up to
isomorphism for n = 1..9.

Method: vertex-extension with canonical-form deduplication. Every graph
on n vertices arises from a graph on n-1 vertices by adding one vertex
with some neighbour set, so extending every (n-1)-class by every subset
and keeping one representative per canonical certificate enumerates all
isomorphism classes. The per-level class counts are asserted against the
known sequences (OEIS A000088 / A001349), which is the correctness check
for the canonical-labelling code.

Canonical certificates use colour refinement with individualization:
branch on one representative per twin class of the first non-singleton
cell and take the minimum adjacency bitstring over all discrete leaves.

Writes data/connected_n{N}.g6 (gzipped for N >= 8). Runtime is a few
minutes; this is a one-time developer tool, not part of the package.

Usage: python3 tools/generate_corpus.py [--max-n 9] [--out-dir data]
"""

from __future__ import annotations

import argparse
import gzip
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from konigtype.graphs import Graph, emit_graph6  # noqa: E402

ALL_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}


def bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def refine(n, adj, colors):
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in bits(adj[v]))))
            for v in range(n)
        ]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(set(new)) == len(set(colors)) and new == colors:
            return new
        if len(set(new)) == len(set(colors)):
            # stable partition (colours renamed only)
            return new
        colors = new


def cert_from_discrete(n, adj, colors):
    perm = sorted(range(n), key=lambda v: colors[v])
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    out = 0
    for j in range(1, n):
        vj = perm[j]
        for i in range(j):
            out = (out << 1) | ((adj[perm[i]] >> vj) & 1)
    return out


def canonical_cert(n, adj):
    def rec(colors):
        colors = refine(n, adj, colors)
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            return cert_from_discrete(n, adj, colors)
        # twin vertices (same neighbourhood outside the pair) are swapped
        # by an automorphism, so branch on one per twin class only
        def twins(u, v):
            mask = ~((1 << u) | (1 << v))
            return (adj[u] & mask) == (adj[v] & mask)

        reps = []
        for v in target:
            if not any(twins(v, r) for r in reps):
                reps.append(v)
        best = None
        for v in reps:
            branched = [c * 2 for c in colors]
            branched[v] -= 1
            value = rec(branched)
            if best is None or value < best:
                best = value
        return best

    if n <= 1:
        return 0
    return rec([0] * n)


def graph_from_cert(n, cert):
    adj = [0] * n
    nbits = n * (n - 1) // 2
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (cert >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return tuple(adj)


def is_connected_mask(n, adj):
    if n == 0:
        return False
    full = (1 << n) - 1
    comp = 1
    while True:
        grow = comp
        for v in bits(comp):
            grow |= adj[v]
        grow &= full
        if grow == comp:
            break
        comp = grow
    return comp == full


def generate_level(n, prev):
    """All graphs on n vertices up to isomorphism, from those on n-1."""
    seen = set()
    out = []
    for adj in prev:
        base = list(adj) + [0]
        for subset in range(1 << (n - 1)):
            cand = list(base)
            cand[n - 1] = subset
            for u in bits(subset):
                cand[u] |= 1 << (n - 1)
            c = canonical_cert(n, cand)
            if c not in seen:
                seen.add(c)
                out.append(tuple(cand))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--out-dir", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    args = ap.parse_args()
    os.makedirs(args.out_dir, exist_ok=True)

    level = [(0,) * 1]  # the single graph on one vertex
    write_level(1, level, args.out_dir)
    for n in range(2, args.max_n + 1):
        t0 = time.time()
        level = generate_level(n, level)
        assert len(level) == ALL_GRAPH_COUNTS[n], (
            f"n={n}: found {len(level)} classes, expected {ALL_GRAPH_COUNTS[n]}"
        )
        write_level(n, level, args.out_dir)
        print(f"n={n}: {len(level)} graphs ({time.time() - t0:.1f}s)", flush=True)


def write_level(n, level, out_dir):
    lines = []
    for adj in level:
        if is_connected_mask(n, adj):
            lines.append(emit_graph6(Graph(n, adj)))
    assert len(lines) == CONNECTED_COUNTS[n], (
        f"n={n}: {len(lines)} connected, expected {CONNECTED_COUNTS[n]}"
    )
    lines.sort(key=lambda s: (len(s), s))
    text = "\n".join(lines) + "\n"
    if n >= 8:
        path = os.path.join(out_dir, f"connected_n{n}.g6.gz")
        with open(path, "wb") as raw:
            with gzip.GzipFile(fileobj=raw, mode="wb", mtime=0) as fh:
                fh.write(text.encode("ascii"))
    else:
        path = os.path.join(out_dir, f"connected_n{n}.g6")
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()
