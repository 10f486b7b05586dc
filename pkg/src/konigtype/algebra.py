"""Combinatorial presentation of the binomial edge ideal and its minimal
primes, plus Macaulay2 script emission for external cross-checking.

No polynomial arithmetic happens here: generators and primes are stored
as index data only, and the emitted scripts delegate the actual algebra
(codimension, unmixedness, number of minimal primes) to Macaulay2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import Graph, component_masks, emit_graph6, mask_to_vertices, vertices_to_mask
from .invariants import cut_sets, ideal_height, is_unmixed


@dataclass(frozen=True, order=True)
class BinomialGenerator:
    """The generator x_i y_j - x_j y_i attached to edge {i, j}, i < j."""

    i: int
    j: int

    def __post_init__(self):
        if not self.i < self.j:
            raise ValueError("generator indices must satisfy i < j")

    def as_macaulay2(self) -> str:
        return f"x_{self.i}*y_{self.j}-x_{self.j}*y_{self.i}"


@dataclass(frozen=True)
class MinimalPrime:
    """One minimal prime of the binomial edge ideal: the cut set S, the
    vertex sets of the components of G minus S, and its height
    |S| + n - c(S)."""

    cut_set: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    height: int

    def to_json_dict(self) -> dict:
        return {
            "cut_set": list(self.cut_set),
            "components": [list(c) for c in self.components],
            "height": self.height,
        }


def binomial_generators(g: Graph) -> list[BinomialGenerator]:
    """One generator per edge, normalised i < j, in lexicographic order."""
    if g.n < 2:
        raise ValueError("binomial edge ideal requires at least two vertices")
    return sorted(BinomialGenerator(u, v) for u, v in g.edges)


def minimal_primes(g: Graph) -> list[MinimalPrime]:
    """All minimal primes, one per member of C(G), sorted by
    (height, |S|, S)."""
    if g.n < 2:
        raise ValueError("minimal primes require at least two vertices")
    primes = []
    for s, cm in cut_sets(g):
        smask = vertices_to_mask(s)
        comps = tuple(
            mask_to_vertices(m) for m in component_masks(g, smask)
        )
        primes.append(
            MinimalPrime(s, comps, len(s) + g.n - cm)
        )
    primes.sort(key=lambda p: (p.height, len(p.cut_set), p.cut_set))
    return primes


def minimal_primes_json(g: Graph) -> str:
    return json.dumps([p.to_json_dict() for p in minimal_primes(g)], indent=2)


def emit_algebra_script(g: Graph) -> str:
    """Macaulay2 script asserting codimension, unmixedness and the number
    of minimal primes computed combinatorially for g. Deterministic text,
    suitable as a diff-stable fixture."""
    if g.n < 2:
        raise ValueError("algebra script requires at least two vertices")
    n = g.n
    gens = binomial_generators(g)
    primes = minimal_primes(g)
    height = ideal_height(g)
    unmixed = is_unmixed(g)
    gen_text = ", ".join(b.as_macaulay2() for b in gens) if gens else "0_R"
    lines = [
        f"-- binomial edge ideal checks for graph6 {emit_graph6(g)!r}",
        f"n = {n};",
        f"R = QQ[x_1..x_{n}, y_1..y_{n}];",
        f"J = ideal({gen_text});",
        f"assert(codim J == {height});",
        "mp = minimalPrimes J;",
        f"assert(#mp == {len(primes)});",
        "heights = sort unique apply(mp, codim);",
        f"assert(heights == {{{', '.join(str(h) for h in sorted({p.height for p in primes}))}}});",
        f"assert({'#heights == 1' if unmixed else '#heights > 1'});",
        'print "ok";',
    ]
    return "\n".join(lines) + "\n"


def script_filename(g: Graph) -> str:
    """Filesystem-safe script name derived from the graph6 string."""
    g6 = emit_graph6(g)
    safe = "".join(c if c.isalnum() else f"_{ord(c):02x}" for c in g6)
    return f"{safe}.m2"
